"""Finite words over small alphabets, and the operators acting on them.

Letters are integer codes ``0..3`` stored one per byte; the textual form
uses the ASCII digits ``'0'..'3'``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AlphabetError

_TO_TEXT = bytes.maketrans(b"\x00\x01\x02\x03", b"0123")
_FROM_TEXT = bytes.maketrans(b"0123", b"\x00\x01\x02\x03")
_SWAP01 = bytes.maketrans(b"\x00\x01", b"\x01\x00")

# morphisms are applied this many source letters at a time
MORPHISM_CHUNK = 1 << 16


class Word:
    """An immutable finite word; letters are held as a ``bytes`` of codes."""

    __slots__ = ("_codes", "_alphabet_size")

    def __init__(self, codes: bytes | bytearray | Iterable[int] = b"", alphabet_size: int = 4):
        if alphabet_size not in (2, 4):
            raise AlphabetError(f"alphabet size must be 2 or 4, got {alphabet_size}")
        codes = bytes(codes)
        if codes and max(codes) >= alphabet_size:
            bad = next(c for c in codes if c >= alphabet_size)
            raise AlphabetError(f"letter {bad} outside alphabet of size {alphabet_size}")
        self._codes = codes
        self._alphabet_size = alphabet_size

    @classmethod
    def _trusted(cls, codes: bytes, alphabet_size: int) -> Word:
        # skips validation; callers guarantee the codes are in range
        w = cls.__new__(cls)
        w._codes = codes
        w._alphabet_size = alphabet_size
        return w

    @classmethod
    def parse(cls, text: str, alphabet_size: int | None = None) -> Word:
        """Read a word from ASCII digits; the alphabet defaults to the smallest fitting one."""
        text = text.strip()
        raw = text.encode("ascii", errors="replace")
        if raw.translate(None, b"0123"):
            raise AlphabetError(f"not a word over 0..3: {text[:40]!r}")
        codes = raw.translate(_FROM_TEXT)
        if alphabet_size is None:
            alphabet_size = 4 if codes and max(codes) > 1 else 2
        return cls(codes, alphabet_size)

    @property
    def codes(self) -> bytes:
        return self._codes

    @property
    def alphabet_size(self) -> int:
        return self._alphabet_size

    def __len__(self) -> int:
        return len(self._codes)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(self._codes[item], self._alphabet_size)
        return self._codes[item]

    def __iter__(self):
        return iter(self._codes)

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        size = max(self._alphabet_size, other._alphabet_size)
        return Word._trusted(self._codes + other._codes, size)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self._codes == other._codes
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._codes)

    def __lt__(self, other: Word) -> bool:
        return self._codes < other._codes

    def __str__(self) -> str:
        return self._codes.translate(_TO_TEXT).decode("ascii")

    def __repr__(self) -> str:
        text = str(self)
        if len(text) > 40:
            text = text[:37] + "..."
        return f"Word({text!r}, alphabet_size={self._alphabet_size})"

    def startswith(self, prefix: Word) -> bool:
        return self._codes.startswith(prefix._codes)

    def find(self, sub: Word) -> int:
        return self._codes.find(sub._codes)

    def with_alphabet(self, alphabet_size: int) -> Word:
        return Word(self._codes, alphabet_size)


def word(text: str, alphabet_size: int | None = None) -> Word:
    return Word.parse(text, alphabet_size)


class Transform(enum.Enum):
    REVERSE = "reverse"
    REVERSE_COMPLEMENT = "reverse_complement"

    def __call__(self, w: Word) -> Word:
        if self is Transform.REVERSE:
            return reverse(w)
        return reverse_complement(w)


def reverse(w: Word) -> Word:
    return Word._trusted(w.codes[::-1], w.alphabet_size)


def reverse_complement(w: Word) -> Word:
    """The hat operator: reverse, then swap 0 and 1. Binary words only."""
    if w.alphabet_size != 2:
        raise AlphabetError("complement is only defined on binary words")
    return Word._trusted(w.codes[::-1].translate(_SWAP01), 2)


def is_palindrome(w: Word) -> bool:
    return w.codes == w.codes[::-1]


@dataclass(frozen=True)
class Morphism:
    """A nonerasing letter-to-word substitution."""

    name: str
    images: tuple[Word, ...]
    source_alphabet_size: int
    target_alphabet_size: int

    def __post_init__(self):
        if len(self.images) != self.source_alphabet_size:
            raise AlphabetError(
                f"morphism {self.name} needs {self.source_alphabet_size} images, got {len(self.images)}"
            )
        for a, img in enumerate(self.images):
            if len(img) == 0:
                raise AlphabetError(f"morphism {self.name} erases letter {a}")
            if img.codes and max(img.codes) >= self.target_alphabet_size:
                raise AlphabetError(f"image of {a} under {self.name} leaves the target alphabet")

    @classmethod
    def from_table(cls, name: str, table: Mapping[int, str], target_alphabet_size: int) -> Morphism:
        images = tuple(Word.parse(table[a], target_alphabet_size) for a in sorted(table))
        return cls(name, images, len(images), target_alphabet_size)

    @property
    def min_image_length(self) -> int:
        return min(len(img) for img in self.images)

    def __call__(self, w: Word) -> Word:
        return apply_morphism(self, w)


def apply_morphism(m: Morphism, w: Word) -> Word:
    codes = w.codes
    if codes and max(codes) >= m.source_alphabet_size:
        raise AlphabetError(f"word has letters outside the source alphabet of {m.name}")
    images = [img.codes for img in m.images]
    out = bytearray()
    for start in range(0, len(codes), MORPHISM_CHUNK):
        out += b"".join([images[c] for c in codes[start : start + MORPHISM_CHUNK]])
    return Word._trusted(bytes(out), m.target_alphabet_size)


H = Morphism.from_table("h", {0: "101", 1: "1001", 2: "10001", 3: "100001"}, 2)
G = Morphism.from_table("g", {0: "0", 1: "1", 2: "0", 3: "1"}, 2)
F = Morphism.from_table("f", {0: "01", 1: "10"}, 2)
