import random

import pytest

from wordprobe import kernels


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    mod = kernels.BACKENDS[request.param]
    monkeypatch.setattr(kernels, "sa_build", mod.sa_build)
    monkeypatch.setattr(kernels, "eertree_build", mod.eertree_build)
    return request.param


def random_words(count, max_len, seed=0):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        size = 2 if i % 2 == 0 else 4
        length = rng.randint(0, max_len)
        # small alphabets in practice repeat a lot; bias some words to few letters
        letters = size if rng.random() < 0.7 else max(1, size - 1)
        out.append(("".join(str(rng.randrange(letters)) for _ in range(length)), size))
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
