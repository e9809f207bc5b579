import random
from itertools import combinations

import pytest

from wittkit.errors import BudgetExceeded, NotSymmetric, TooFewVariables
from wittkit.rings import ZZ, PolyRing
from wittkit.series import UnitSeries
from wittkit.symfn import (
    SymFunc,
    lambda_universal,
    power_sum,
    reduce_to_basis,
    x_ring,
)


def test_expand_examples():
    ring = x_ring(2)
    x1, x2 = ring.gens()
    assert SymFunc.basis(1).expand(2) == ring.neg(ring.add(x1, x2))
    assert SymFunc.basis(2).expand(2) == ring.mul(x1, x2)
    # H_1^2 with three variables is (x1 + x2 + x3)^2
    ring3 = x_ring(3)
    e1 = ring3.zero
    for g in ring3.gens():
        e1 = ring3.add(e1, g)
    sq = SymFunc({(2,): 1})
    assert sq.expand(3) == ring3.mul(e1, e1)


def test_expand_too_few_variables():
    with pytest.raises(TooFewVariables):
        SymFunc.basis(3).expand(2)


def test_reduce_examples():
    ring = x_ring(2)
    x1, x2 = ring.gens()
    assert reduce_to_basis(ring.add(x1, x2), 2) == SymFunc({(1,): -1})
    # sum of squares over three variables: Newton gives H1^2 - 2 H2
    ring3 = x_ring(3)
    p = ring3.zero
    for g in ring3.gens():
        p = ring3.add(p, ring3.mul(g, g))
    assert reduce_to_basis(p, 3) == SymFunc({(2,): 1, (0, 1): -2})
    assert reduce_to_basis(ring.one, 2) == SymFunc.constant(1)


def test_reduce_rejects_asymmetric():
    ring = x_ring(2)
    x1, _ = ring.gens()
    with pytest.raises(NotSymmetric):
        reduce_to_basis(x1, 2)


def test_reduce_expand_round_trip():
    rng = random.Random(4)
    for _ in range(30):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            exps = tuple(rng.randint(0, 2) for _ in range(3))
            terms[exps] = rng.randint(-5, 5)
        sf = SymFunc(terms)
        if sf.degree == 0 or sf.degree > 8:
            continue
        assert reduce_to_basis(sf.expand(sf.degree), sf.degree) == sf


def test_power_sums():
    assert power_sum(1) == SymFunc({(1,): -1})
    assert power_sum(2) == SymFunc({(2,): 1, (0, 1): -2})
    assert power_sum(3) == SymFunc({(3,): -1, (1, 1): 3, (0, 0, 1): -3})


def test_power_sum_expansion_oracle():
    # expand(power_sum(k), M) must literally be sum x_i^k
    for k in (1, 2, 3, 4):
        for nvars in (k, k + 1):
            ring = x_ring(nvars)
            direct = ring.zero
            for g in ring.gens():
                direct = ring.add(direct, ring.pow(g, k))
            assert power_sum(k).expand(nvars) == direct


def test_universal_ghost_is_power_sum():
    # ghost entry k of the generic series is the k-th power sum
    ring = PolyRing(tuple(f"H{i}" for i in range(1, 5)))
    series = UnitSeries(ring, 4, ring.gens())
    for k, gh in enumerate(series.ghost().entries, start=1):
        assert SymFunc(gh) == power_sum(k)


def _lambda_direct(n, trunc):
    """Oracle: expand prod over n-subsets of (1 - x_I t) with n*trunc
    variables, reduce each coefficient to the basis."""
    nvars = n * trunc
    ring = x_ring(nvars)
    gens = ring.gens()
    coeffs = [ring.zero] * trunc
    coeffs.insert(0, ring.one)
    for subset in combinations(range(nvars), n):
        root = ring.one
        for i in subset:
            root = ring.mul(root, gens[i])
        # multiply the running series by (1 - root t)
        for k in range(trunc, 0, -1):
            coeffs[k] = ring.add(coeffs[k], ring.neg(ring.mul(root, coeffs[k - 1])))
    return [reduce_to_basis(c, nvars) for c in coeffs[1:]]


@pytest.mark.parametrize("n,trunc", [(1, 4), (2, 2), (2, 3), (3, 2)])
def test_lambda_universal_matches_direct_expansion(n, trunc):
    assert list(lambda_universal(n, trunc)) == _lambda_direct(n, trunc)


def test_lambda_universal_degree_one():
    assert list(lambda_universal(1, 5)) == [SymFunc.basis(k) for k in range(1, 6)]


def test_lambda_universal_t1_coefficient():
    # the t^1 coefficient of the second exterior power is minus H2
    assert lambda_universal(2, 3)[0] == SymFunc({(0, 1): -1})


def test_lambda_universal_rank_two_specialization():
    rng = random.Random(5)
    for _ in range(20):
        a, b = rng.randint(-6, 6), rng.randint(-6, 6)
        values = [-(a + b), a * b, 0, 0]
        out = [sf.evaluate(ZZ, values) for sf in lambda_universal(2, 4)]
        assert out == [-a * b, 0, 0, 0]


def test_lambda_universal_rank_one_specialization():
    rng = random.Random(6)
    for _ in range(20):
        a = rng.randint(-6, 6)
        values = [-a, 0, 0]
        out = [sf.evaluate(ZZ, values) for sf in lambda_universal(2, 3)]
        assert out == [0, 0, 0]


def test_lambda_budget():
    with pytest.raises(BudgetExceeded):
        lambda_universal(5, 5, budget=20)


def test_lambda_cache_single_construction():
    import threading

    from wittkit import symfn

    symfn._lambda_cache.pop((2, 4), None)
    results = []

    def reader():
        results.append(lambda_universal(2, 4))

    threads = [threading.Thread(target=reader) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r is results[0] for r in results)


def test_symfunc_algebra():
    h1, h2 = SymFunc.basis(1), SymFunc.basis(2)
    assert (h1 + h1) == SymFunc({(1,): 2})
    assert (h1 * h2).degree == 3
    assert (h1 - h1) == SymFunc.constant(0)
    assert h1 * SymFunc.constant(0) == SymFunc.constant(0)
