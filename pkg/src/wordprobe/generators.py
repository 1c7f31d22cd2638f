"""Generations and limit prefixes of the recursively defined words x, z, t and
their morphic images.

Every family follows ``w_{n+1} = w_n . s . T(w_n)`` for a seed ``w_0``, a
separator ``s`` and a transform ``T`` (reversal, or reverse-complement).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError, ResourceError
from .words import F, G, H, Morphism, Transform, Word, word

DEFAULT_MAX_LENGTH = 1 << 26
MAX_LENGTH_ENV = "WORDPROBE_MAX_LENGTH"


def get_max_length(override: int | None = None) -> int:
    """Length cap: explicit override, then the environment, then the default."""
    if override is not None:
        return override
    env = os.environ.get(MAX_LENGTH_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"{MAX_LENGTH_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_LENGTH


def _check_cap(length: int, max_length: int | None) -> None:
    cap = get_max_length(max_length)
    if length > cap:
        raise ResourceError(length, cap)


@dataclass(frozen=True)
class RecursiveFamily:
    name: str
    seed: Word
    separator: Word
    transform: Transform
    alphabet_size: int

    def generation_length(self, n: int) -> int:
        return (1 << n) * (len(self.seed) + len(self.separator)) - len(self.separator)

    def step(self, w: Word) -> Word:
        return w + self.separator + self.transform(w)


@dataclass(frozen=True)
class MorphicWord:
    name: str
    base: RecursiveFamily
    morphism: Morphism

    def __post_init__(self):
        if self.morphism.source_alphabet_size != self.base.alphabet_size:
            raise ParameterError(
                f"morphism {self.morphism.name} does not act on the alphabet of {self.base.name}"
            )


X = RecursiveFamily("x", word("01", 4), word("23", 4), Transform.REVERSE, 4)
Z = RecursiveFamily("z", word("01", 2), word("01", 2), Transform.REVERSE, 2)
T = RecursiveFamily("t", word("0", 2), word("0", 2), Transform.REVERSE_COMPLEMENT, 2)

Y = MorphicWord("y", X, H)
GX = MorphicWord("gx", X, G)
FT = MorphicWord("ft", T, F)

FAMILIES = {"x": X, "z": Z, "t": T}
MORPHIC = {"y": Y, "gx": GX, "ft": FT}


def build_generation(family: RecursiveFamily, n: int, max_length: int | None = None) -> Word:
    if n < 0:
        raise ParameterError(f"generation index must be >= 0, got {n}")
    _check_cap(family.generation_length(n), max_length)
    w = family.seed
    for _ in range(n):
        w = family.step(w)
    return w


def prefix_of_limit(family: RecursiveFamily, length: int, max_length: int | None = None) -> Word:
    """First ``length`` letters of the limit word, by iterated doubling."""
    if length < 0:
        raise ParameterError(f"prefix length must be >= 0, got {length}")
    _check_cap(length, max_length)
    return _prefix(family, length)


@lru_cache(maxsize=16)
def _prefix(family: RecursiveFamily, length: int) -> Word:
    if length == 0:
        return Word(b"", family.alphabet_size)
    if len(family.seed) + len(family.separator) == 0:
        raise ParameterError(f"family {family.name} does not grow")
    w = family.seed.with_alphabet(family.alphabet_size)
    while len(w) < length:
        if len(w) + len(family.separator) >= length:
            # no need to materialize the transformed half
            w = w + family.separator
        else:
            w = family.step(w)
    return w[:length]


def prefix_of_morphic(mw: MorphicWord, length: int, max_length: int | None = None) -> Word:
    if length < 0:
        raise ParameterError(f"prefix length must be >= 0, got {length}")
    _check_cap(length, max_length)
    return _morphic_prefix(mw, length)


@lru_cache(maxsize=16)
def _morphic_prefix(mw: MorphicWord, length: int) -> Word:
    need = -(-length // mw.morphism.min_image_length)
    base = _prefix(mw.base, need)
    return mw.morphism(base)[:length]


def prefix(name: str, length: int, max_length: int | None = None) -> Word:
    """Prefix of any registered word by selector (``x z t y gx ft``)."""
    if name in FAMILIES:
        return prefix_of_limit(FAMILIES[name], length, max_length)
    if name in MORPHIC:
        return prefix_of_morphic(MORPHIC[name], length, max_length)
    raise ParameterError(f"unknown word {name!r}; choose from {sorted(FAMILIES) + sorted(MORPHIC)}")
