class WordprobeError(Exception):
    pass


class AlphabetError(WordprobeError, ValueError):
    """A letter falls outside the alphabet an operation accepts."""


class ParameterError(WordprobeError, ValueError):
    pass


class ResourceError(WordprobeError):
    """A requested word would exceed the configured length cap."""

    def __init__(self, length: int, cap: int):
        super().__init__(f"requested length {length} exceeds cap {cap}")
        self.length = length
        self.cap = cap


class StructuralError(WordprobeError):
    pass


class UnknownClaimError(WordprobeError, KeyError):
    def __str__(self):
        return f"unknown claim id {self.args[0]!r}"
