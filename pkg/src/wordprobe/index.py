"""Suffix automaton and palindromic tree over a fixed word.

Both are built once (online, linear time) and then only queried.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .words import Word


class SuffixAutomaton:
    """Minimal automaton accepting exactly the factors of its source word."""

    def __init__(self, source: Word, length, link, trans):
        self.source = source
        self.length = length
        self.link = link
        self.trans = trans

    @property
    def source_length(self) -> int:
        return len(self.source)

    @property
    def state_count(self) -> int:
        return len(self.length)

    def contains(self, w: Word) -> bool:
        trans = self.trans
        state = 0
        for c in w.codes:
            if c > 3:
                return False
            state = trans[state, c]
            if state < 0:
                return False
        return True

    def count_distinct_factors(self) -> int:
        if self.state_count <= 1:
            return 0
        length = self.length.astype(np.int64)
        return int((length[1:] - length[self.link[1:]]).sum())

    def factors_of_length(self, m: int) -> set[Word]:
        """All factors of length ``m``, by depth-limited walk (small inputs only)."""
        out = set()
        size = self.source.alphabet_size
        stack = [(0, b"")]
        while stack:
            state, path = stack.pop()
            if len(path) == m:
                out.add(Word._trusted(path, size))
                continue
            for c in range(4):
                nxt = self.trans[state, c]
                if nxt >= 0:
                    stack.append((int(nxt), path + bytes((c,))))
        return out


class PalTree:
    """Eertree: one node per distinct nonempty palindromic factor, plus two roots."""

    def __init__(self, source: Word, length, link, trans, end):
        self.source = source
        self.length = length
        self.link = link
        self.trans = trans
        self.end = end

    @property
    def source_length(self) -> int:
        return len(self.source)

    @property
    def node_count(self) -> int:
        return len(self.length)

    def __len__(self) -> int:
        return self.node_count - 2

    def node_word(self, v: int) -> Word:
        stop = int(self.end[v])
        return self.source[stop - int(self.length[v]) : stop]

    def palindromic_factors(self) -> list[Word]:
        words = [self.node_word(v) for v in range(2, self.node_count)]
        words.sort(key=lambda w: (len(w), w.codes))
        return words

    def max_palindrome_length(self) -> int:
        if self.node_count <= 2:
            return 0
        return int(self.length[2:].max())

    def with_lengths(self, lengths) -> list[Word]:
        wanted = set(lengths)
        return [w for w in self.palindromic_factors() if len(w) in wanted]


def build_suffix_automaton(w: Word) -> SuffixAutomaton:
    return SuffixAutomaton(w, *kernels.sa_build(w.codes))


def build_pal_tree(w: Word) -> PalTree:
    return PalTree(w, *kernels.eertree_build(w.codes))


def contains(sa: SuffixAutomaton, w: Word) -> bool:
    return sa.contains(w)


def count_distinct_factors(sa: SuffixAutomaton) -> int:
    return sa.count_distinct_factors()


def palindromic_factors(pt: PalTree) -> list[Word]:
    return pt.palindromic_factors()


def max_palindrome_length(pt: PalTree) -> int:
    return pt.max_palindrome_length()
