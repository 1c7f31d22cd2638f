"""Finite-prefix measurements of factor sets, reversal closure, recurrence and
the structural properties of the generated words.

Factors of length ``m`` are packed two bits per letter: one ``uint64`` for
``m <= 32`` and a pair of them up to ``m = 64``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, StructuralError
from .generators import RecursiveFamily, build_generation
from .index import build_pal_tree
from .words import Transform, Word, reverse

MAX_FACTOR_LENGTH = 64
_PACK = 32


@dataclass(frozen=True)
class Check:
    """Outcome of a yes/no property scan; ``witness`` set when it fails."""

    ok: bool
    witness: Word | None = None
    index: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FactorSet:
    m: int
    factors: frozenset
    source_prefix_length: int

    def __len__(self) -> int:
        return len(self.factors)

    def __contains__(self, w: Word) -> bool:
        return w in self.factors

    def sorted(self) -> list[Word]:
        return sorted(self.factors, key=lambda w: w.codes)

    def digest(self) -> str:
        """Order-independent fingerprint of the set, for stabilization certificates."""
        h = hashlib.sha256()
        for w in self.sorted():
            h.update(w.codes)
            h.update(b"\xff")
        return h.hexdigest()[:16]


@dataclass(frozen=True)
class RecurrenceRow:
    m: int
    factor_count: int
    max_gap: int
    window_bound: int | None
    singletons: int
    confirm_factor_count: int
    confirm_max_gap: int
    stable: bool


@dataclass(frozen=True)
class RecurrenceProfile:
    source_prefix_length: int
    confirm_prefix_length: int
    rows: list[RecurrenceRow] = field(default_factory=list)

    @property
    def all_stable(self) -> bool:
        return all(r.stable for r in self.rows)

    @property
    def all_finite(self) -> bool:
        return all(r.window_bound is not None for r in self.rows)


@dataclass(frozen=True)
class Decomposition:
    family: str
    base_generation: int
    target_generation: int
    separators: list[Word]
    valid: bool
    first_bad_block: int | None = None


def _check_m(w: Word, m: int) -> None:
    if not 1 <= m <= MAX_FACTOR_LENGTH:
        raise ParameterError(f"factor length must be in 1..{MAX_FACTOR_LENGTH}, got {m}")
    if m > len(w):
        raise ParameterError(f"factor length {m} exceeds word length {len(w)}")


def _letters(w: Word) -> np.ndarray:
    return np.frombuffer(w.codes, dtype=np.uint8)


def _pack(a: np.ndarray, start: int, m: int, count: int) -> np.ndarray:
    codes = np.zeros(count, dtype=np.uint64)
    for k in range(m):
        codes <<= np.uint64(2)
        codes |= a[start + k : start + k + count]
    return codes


def window_keys(w: Word, m: int) -> np.ndarray:
    """Packed key of every length-``m`` window, in position order.

    Returns shape ``(n-m+1,)`` for ``m <= 32`` and ``(n-m+1, 2)`` beyond.
    """
    _check_m(w, m)
    a = _letters(w)
    count = len(a) - m + 1
    if m <= _PACK:
        return _pack(a, 0, m, count)
    hi = _pack(a, 0, _PACK, count)
    lo = _pack(a, _PACK, m - _PACK, count)
    return np.stack([hi, lo], axis=1)


def _key_ids(keys: np.ndarray) -> np.ndarray:
    # a 1-D sortable key per window
    if keys.ndim == 1:
        return keys
    _, inverse = np.unique(keys, axis=0, return_inverse=True)
    return inverse.reshape(-1)


def _unpack(key: int, m: int, alphabet_size: int) -> Word:
    letters = bytearray(m)
    for k in range(m - 1, -1, -1):
        letters[k] = key & 3
        key >>= 2
    return Word._trusted(bytes(letters), alphabet_size)


def _unique_ints(w: Word, m: int) -> set[int]:
    keys = window_keys(w, m)
    if keys.ndim == 1:
        return set(np.unique(keys).tolist())
    rows = np.unique(keys, axis=0)
    shift = 2 * (m - _PACK)
    return {(int(hi) << shift) | int(lo) for hi, lo in rows}


def factor_set(w: Word, m: int) -> FactorSet:
    words = frozenset(_unpack(k, m, w.alphabet_size) for k in _unique_ints(w, m))
    return FactorSet(m, words, len(w))


def reversal_closure_check(w: Word, m: int) -> Check:
    """Is Fac_m(w) closed under reversal? The witness is the smallest factor
    whose reversal is missing."""
    forward = _unique_ints(w, m)
    backward = _unique_ints(reverse(w), m)
    if forward == backward:
        return Check(True)
    # u in Fac(w) with reverse(u) absent  <=>  u not in Fac(reverse(w))
    missing = sorted(forward - backward)
    witness = _unpack(missing[0], m, w.alphabet_size)
    return Check(False, witness, w.find(witness), f"{len(missing)} factors lack their reversal")


def closure_step_check(family: RecursiveFamily, n: int) -> bool:
    """Does reverse(w_n) occur in w_{n+1}? Then every reversed factor of w_n does."""
    if family.transform is not Transform.REVERSE:
        raise ParameterError(f"family {family.name} is not built with reversal")
    wn = build_generation(family, n)
    return family.step(wn).find(reverse(wn)) >= 0


def _gap_stats(w: Word, m: int) -> tuple[int, int, int]:
    ids = _key_ids(window_keys(w, m))
    order = np.argsort(ids, kind="stable")
    ranked = ids[order]
    same = ranked[1:] == ranked[:-1]
    gaps = np.diff(order)[same]
    max_gap = int(gaps.max()) if gaps.size else 0
    starts = np.flatnonzero(np.concatenate(([True], ~same)))
    sizes = np.diff(np.append(starts, ranked.size))
    return int(starts.size), max_gap, int((sizes == 1).sum())


def recurrence_profile(w: Word, max_m: int, confirm_prefix: int) -> RecurrenceProfile:
    """Largest return gap per factor length, on ``w`` and on a shorter prefix.

    Only gaps between consecutive occurrence starts count; the stretch after
    the last occurrence is ignored. ``window_bound`` is ``max_gap + m``, or
    None when some factor occurs only once (no gap evidence).
    """
    if not 1 <= max_m <= MAX_FACTOR_LENGTH:
        raise ParameterError(f"max_m must be in 1..{MAX_FACTOR_LENGTH}, got {max_m}")
    if not max_m <= confirm_prefix < len(w):
        raise ParameterError(
            f"confirm prefix must satisfy max_m <= confirm < {len(w)}, got {confirm_prefix}"
        )
    short = w[:confirm_prefix]
    rows = []
    for m in range(1, max_m + 1):
        count, gap, singles = _gap_stats(w, m)
        c_count, c_gap, _ = _gap_stats(short, m)
        bound = gap + m if singles == 0 else None
        rows.append(
            RecurrenceRow(m, count, gap, bound, singles, c_count, c_gap, (count, gap) == (c_count, c_gap))
        )
    return RecurrenceProfile(len(w), confirm_prefix, rows)


_LOW_PAIRS = np.array([4 * 0 + 1, 4 * 1 + 0])
_HIGH_PAIRS = np.array([4 * 2 + 3, 4 * 3 + 2])


def block_form_check(w: Word) -> Check:
    """Is w a prefix of a word in ((01+10)(23+32))^omega? Index is the letter
    position of the first bad 2-block."""
    a = _letters(w)
    a = a[: len(a) // 2 * 2].astype(np.int16)
    pairs = 4 * a[0::2] + a[1::2]
    expected_low = (np.arange(pairs.size) % 2) == 0
    ok = np.where(expected_low, np.isin(pairs, _LOW_PAIRS), np.isin(pairs, _HIGH_PAIRS))
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        return Check(True)
    k = int(bad[0])
    return Check(False, w[2 * k : 2 * k + 2], 2 * k)


def forbidden_factor_check(w: Word) -> Check:
    """True iff no factor ``aa`` and no factor ``aba`` occurs."""
    a = _letters(w)
    squares = np.flatnonzero(a[1:] == a[:-1]) if a.size >= 2 else np.empty(0, dtype=np.intp)
    spikes = np.flatnonzero(a[2:] == a[:-2]) if a.size >= 3 else np.empty(0, dtype=np.intp)
    first_sq = int(squares[0]) if squares.size else None
    first_sp = int(spikes[0]) if spikes.size else None
    if first_sq is None and first_sp is None:
        return Check(True)
    if first_sp is None or (first_sq is not None and first_sq <= first_sp):
        return Check(False, w[first_sq : first_sq + 2], first_sq, "aa")
    return Check(False, w[first_sp : first_sp + 3], first_sp, "aba")


def decompose_generation(family: RecursiveFamily, p: int, n: int) -> Decomposition:
    """Split w_{p+n} into 2^n alternating copies of w_p and T(w_p) joined by
    separators, and check each separator is s or T(s)."""
    if n < 1 or p < 0:
        raise ParameterError(f"need p >= 0 and n >= 1, got p={p}, n={n}")
    base = build_generation(family, p)
    target = build_generation(family, p + n)
    flipped = family.transform(base)
    size, sep = len(base), len(family.separator)
    blocks = 1 << n
    if len(target) != blocks * size + (blocks - 1) * sep:
        raise StructuralError(
            f"|w_{p + n}| = {len(target)} is not {blocks} blocks of {size} with separators of {sep}"
        )
    allowed = {family.separator, family.transform(family.separator)}
    separators = []
    bad_block = None
    stride = size + sep
    for i in range(blocks):
        start = i * stride
        block = target[start : start + size]
        if bad_block is None and block != (base if i % 2 == 0 else flipped):
            bad_block = i
        if i < blocks - 1:
            separators.append(target[start + size : start + stride])
    valid = bad_block is None and all(s in allowed for s in separators)
    return Decomposition(family.name, p, p + n, separators, valid, bad_block)


def palindrome_absence_check(w: Word, lengths) -> Check:
    hits = build_pal_tree(w).with_lengths(lengths)
    if not hits:
        return Check(True)
    return Check(False, hits[0], w.find(hits[0]), f"{len(hits)} palindromes of the excluded lengths")
