import random
from fractions import Fraction

import pytest

from wittkit.rings import QQ, ZZ, ModRing, PolyRing


@pytest.fixture
def rng():
    return random.Random(177)


def random_element(ring, rng, size=9):
    """A random element of amplitude `size` for any supported ring kind."""
    if ring is ZZ:
        return rng.randint(-size, size)
    if ring is QQ:
        return Fraction(rng.randint(-size, size), rng.randint(1, 4))
    if isinstance(ring, ModRing):
        return rng.randrange(ring.modulus)
    if isinstance(ring, PolyRing):
        out = ring.zero
        for _ in range(rng.randint(0, 3)):
            exps = tuple(rng.randint(0, 2) for _ in range(ring.nvars))
            out = ring.add(out, ring.monomial(exps, rng.randint(-size, size)))
        return out
    raise AssertionError(f"no generator for {ring}")


def random_series_coeffs(ring, rng, trunc, size=9):
    return [random_element(ring, rng, size) for _ in range(trunc)]
