import pytest

import oracles
from wordprobe.errors import ParameterError, ResourceError
from wordprobe.generators import (
    FT,
    GX,
    MORPHIC,
    T,
    X,
    Y,
    Z,
    RecursiveFamily,
    build_generation,
    prefix,
    prefix_of_limit,
    prefix_of_morphic,
)
from wordprobe.words import Transform, word

PRINTED = {
    (X, 1): "012310",
    (X, 2): "01231023013210",
    (X, 3): "012310230132102301231032013210",
    (Z, 1): "010110",
    (Z, 2): "01011001011010",
    (Z, 3): "010110010110100101011010011010",
}


@pytest.mark.parametrize("key", PRINTED, ids=[f"{f.name}{n}" for f, n in PRINTED])
def test_printed_generations(key):
    family, n = key
    assert str(build_generation(family, n)) == PRINTED[key]


def test_t_generation_matches_closed_form():
    assert str(build_generation(T, 2)) == "0010011"
    assert str(build_generation(T, 10)) == oracles.paperfolding(2**11 - 1)


def test_prefix_of_limit_examples():
    assert str(prefix_of_limit(X, 6)) == "012310"
    for family in (X, Z, T):
        assert len(prefix_of_limit(family, 0)) == 0
    assert str(prefix_of_limit(T, 7)) == "0010011"
    assert str(prefix_of_limit(T, 5000)) == oracles.paperfolding(5000)


def test_prefix_of_morphic_examples():
    assert str(prefix_of_morphic(Y, 39)) == "101100110001100001100110110001100001101"
    assert str(prefix_of_morphic(GX, 14)) == "01011001011010"
    assert str(prefix_of_morphic(FT, 14)) == "01011001011010"


@pytest.mark.parametrize("family", [X, Z, T], ids=lambda f: f.name)
def test_length_law_and_prefix_chain(family):
    prev = None
    for n in range(0, 21):
        w = build_generation(family, n)
        if family is T:
            assert len(w) == 2 ** (n + 1) - 1
        else:
            assert len(w) == 2 ** (n + 2) - 2
        if prev is not None:
            assert w.startswith(prev) and len(w) > len(prev)
            assert w == prev + family.separator + family.transform(prev)
        prev = w


@pytest.mark.parametrize("family", [X, Z, T], ids=lambda f: f.name)
def test_prefix_of_limit_agrees_with_generations(family):
    for n in range(0, 12):
        wn = build_generation(family, n)
        for length in (len(wn) - 1, len(wn), len(wn) + 3, 3000):
            p = prefix_of_limit(family, max(length, 0))
            k = min(len(p), len(wn))
            assert p[:k] == wn[:k]


def test_prefixes_are_nested():
    long = prefix("x", 10_000)
    for n in (0, 1, 17, 4096, 9999):
        assert long.startswith(prefix("x", n))


def test_morphic_consistency_gx_is_z():
    for n in (1, 100, 4097, 1 << 16):
        assert prefix_of_morphic(GX, n) == prefix_of_limit(Z, n)


def test_morphic_prefix_matches_oracle():
    h = {"0": "101", "1": "1001", "2": "10001", "3": "100001"}
    expected = oracles.substitute(h, oracles.x_gen(10))[:5000]
    assert str(prefix("y", 5000)) == expected


def test_fabricated_family():
    fam = RecursiveFamily("tiny", word("01", 2), word("", 2), Transform.REVERSE, 2)
    assert str(build_generation(fam, 1)) == "0110"
    assert str(prefix_of_limit(fam, 10)) == oracles.recursive("01", "", oracles.rev, 3)[:10]


def test_cap_is_enforced():
    with pytest.raises(ResourceError) as info:
        build_generation(X, 30)
    assert info.value.length == 2**32 - 2
    with pytest.raises(ResourceError):
        prefix_of_limit(X, 100, max_length=99)
    with pytest.raises(ResourceError):
        prefix_of_morphic(Y, 1 << 27)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("WORDPROBE_MAX_LENGTH", "50")
    with pytest.raises(ResourceError):
        prefix_of_limit(Z, 51)
    assert len(prefix_of_limit(Z, 51, max_length=51)) == 51


def test_bad_parameters():
    with pytest.raises(ParameterError):
        build_generation(X, -1)
    with pytest.raises(ParameterError):
        prefix_of_limit(X, -1)
    with pytest.raises(ParameterError):
        prefix("q", 3)
    assert set(MORPHIC) == {"y", "gx", "ft"}
