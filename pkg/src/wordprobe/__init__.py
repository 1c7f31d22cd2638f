"""Construct, index and check prefixes of the words x, y, z and t."""

__version__ = "0.1.0"
