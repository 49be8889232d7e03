import numpy as np
import pytest
from fractions import Fraction

from clifford_bargmann.clifford import Multivector


def blade_word_product(a, b):
    """Oracle: multiply generator words by bubble sort, e_j e_j = -1."""
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                del word[i : i + 2]
                sign = -sign
                changed = True
                continue
            i += 1
    return sign, tuple(word)


def random_exact(m, rng, lo=-5, hi=5):
    vals = [Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, 4))) for _ in range(1 << m)]
    return Multivector(m, np.array(vals, dtype=object))


def random_float(m, rng, cplx=False):
    v = rng.standard_normal(1 << m)
    if cplx:
        v = v + 1j * rng.standard_normal(1 << m)
    return Multivector(m, v)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
