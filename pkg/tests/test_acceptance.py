"""Exit criteria. Each test records one PASS/FAIL line, printed at the end of
the session by the hook in conftest.py."""

import random
import time
from contextlib import contextmanager
from pathlib import Path

import oracles
from wordprobe.analysis import (
    block_form_check,
    decompose_generation,
    factor_set,
    forbidden_factor_check,
    palindrome_absence_check,
    recurrence_profile,
    reversal_closure_check,
)
from wordprobe.claims import run_claim
from wordprobe.generators import T, X, Y, Z, build_generation, prefix, prefix_of_morphic
from wordprobe.index import build_pal_tree, build_suffix_automaton
from wordprobe.words import Word, reverse, word

N = 1 << 20
HALF = 1 << 19
ACCEPTANCE_LINES = []


@contextmanager
def criterion(number, title, limit_s):
    start = time.perf_counter()
    outcome = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        note = f"{elapsed:.2f}s (limit {limit_s}s)"
        assert elapsed < limit_s, f"took {elapsed:.2f}s, limit {limit_s}s"
        outcome = "PASS"
    except AssertionError as exc:
        note = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        raise
    finally:
        ACCEPTANCE_LINES.append(f"[{outcome}] criterion {number:>2}: {title} -- {note}")


def test_01_fixture_exactness():
    with criterion(1, "printed x_1..x_3, z_1..z_3 and the 39-letter prefix of y", 1):
        printed = {
            (X, 1): "012310",
            (X, 2): "01231023013210",
            (X, 3): "012310230132102301231032013210",
            (Z, 1): "010110",
            (Z, 2): "01011001011010",
            (Z, 3): "010110010110100101011010011010",
        }
        for (family, n), text in printed.items():
            assert str(build_generation(family, n)) == text
        assert str(prefix_of_morphic(Y, 39)) == "101100110001100001100110110001100001101"


def test_02_pal_x():
    with criterion(2, "Pal(x) over 2^20 letters is exactly {0,1,2,3}", 5):
        pals = build_pal_tree(prefix("x", N)).palindromic_factors()
        assert [str(p) for p in pals] == ["0", "1", "2", "3"]


def test_03_pal_z():
    with criterion(3, "Pal(z): no length 13/14 over 2^20, max <= 12, base cases exact", 5):
        tree = build_pal_tree(prefix("z", N))
        assert not tree.with_lengths({13, 14})
        assert tree.max_palindrome_length() <= 12
        z2 = build_generation(Z, 2)
        assert palindrome_absence_check(build_generation(Z, 3), {13, 14}).ok
        assert palindrome_absence_check(reverse(z2) + word("01", 2) + z2, {13, 14}).ok


def test_04_pal_y_stabilizes():
    with criterion(4, "Pal(y) identical at 2^19 and 2^20, equal to the frozen fixture", 10):
        y = prefix("y", N)
        long_pals = build_pal_tree(y).palindromic_factors()
        short_pals = build_pal_tree(y[:HALF]).palindromic_factors()
        assert long_pals == short_pals
        frozen = (Path(__file__).parent / "fixtures" / "pal_y.txt").read_text().split()
        assert [str(p) for p in long_pals] == frozen


def test_05_morphic_identities():
    with criterion(5, "g(x) = z and h(x) = y on 2^20 letters; f(t) matches exactly one of y, z", 5):
        assert prefix("gx", N) == prefix("z", N)
        h = {"0": "101", "1": "1001", "2": "10001", "3": "100001"}
        x_text = str(prefix("x", N // 3 + 1))
        assert str(prefix("y", N)) == oracles.substitute(h, x_text)[:N]
        c12 = run_claim("C12")
        assert c12.status == "pass"
        cands = c12.details["candidates"]
        full = [k for k, v in cands.items() if v["full_match"]]
        assert len(full) == 1
        other = "y" if full == ["z"] else "z"
        assert cands[other]["first_mismatch"] == 0


def test_06_paperfolding_asymmetry():
    with criterion(6, "01000 in Fac(t), 00010 not, Fac_5(t) stable from t_12 to t_20", 5):
        sa = build_suffix_automaton(prefix("t", N))
        has_01000 = sa.contains(word("01000", 2))
        has_00010 = sa.contains(word("00010", 2))
        stable = factor_set(build_generation(T, 12), 5).factors == factor_set(build_generation(T, 20), 5).factors
        assert stable, "Fac_5(t) differs between generations 12 and 20"
        assert has_01000 and not has_00010, (
            f"01000 factor: {has_01000}, 00010 factor: {has_00010} (printed orientation does not hold)"
        )


def test_07_structure():
    with criterion(7, "block form and no aa/aba on 2^20 letters of x; decompositions p<=3, n<=8", 5):
        x = prefix("x", N)
        assert block_form_check(x).ok
        assert forbidden_factor_check(x).ok
        for p in range(4):
            for n in range(1, 9):
                d = decompose_generation(X, p, n)
                assert d.valid
                assert {str(s) for s in d.separators} <= {"23", "32"}


def test_08_recurrence_evidence():
    with criterion(8, "recurrence profiles of x, y, z stable at 2^19 vs 2^20, finite R(m), m <= 20", 30):
        for name in ("x", "y", "z"):
            profile = recurrence_profile(prefix(name, N), 20, HALF)
            assert profile.all_stable, name
            assert profile.all_finite, name
            assert len(profile.rows) == 20


def test_09_oracle_equivalence():
    with criterion(9, "eertree and suffix automaton match brute force on 1000 random words", 30):
        rng = random.Random(2024)
        for i in range(1000):
            size = 2 if i % 2 else 4
            text = "".join(str(rng.randrange(size)) for _ in range(rng.randint(0, 300)))
            w = Word.parse(text, size)
            assert [str(p) for p in build_pal_tree(w).palindromic_factors()] == oracles.palindromes(text)
            sa = build_suffix_automaton(w)
            assert sa.count_distinct_factors() == len(oracles.factors(text))
            probe = "".join(str(rng.randrange(size)) for _ in range(rng.randint(1, 6)))
            assert sa.contains(Word.parse(probe, size)) == (probe in text)


def test_10_closure():
    with criterion(10, "Fac_m closed for x, y, z at m <= 20; t fails at m = 5 with witness 01000", 10):
        for name in ("x", "y", "z"):
            w = prefix(name, N)
            for m in range(1, 21):
                assert factor_set(w, m).factors == factor_set(w[:HALF], m).factors, (name, m)
                assert reversal_closure_check(w, m).ok, (name, m)
        t_check = reversal_closure_check(prefix("t", N), 5)
        assert not t_check.ok
        assert str(t_check.witness) == "01000", f"witness is {t_check.witness}; 01000 is not a factor of t"
