"""Symmetric-function engine.

The basis symbol ``H_k`` is the degree-k coefficient of the generic unit
series ``U = prod (1 - x_i t) = 1 + H_1 t + H_2 t^2 + ...`` over infinitely
many variables, so ``H_k = (-1)^k e_k`` with ``e_k`` the subset-sum
elementary symmetric function.  Keeping the series coefficient (rather than
``e_k`` itself) as the basis symbol keeps all ghost and Witt plumbing free
of signs; the subset-sum function is ``(-1)^k H_k``.

Symmetric functions of bounded degree are faithfully represented by
polynomials in enough variables (at least as many as the degree), which is
how :func:`expand` and :func:`reduce_to_basis` convert back and forth.

:func:`lambda_universal` produces the coefficients of the exterior power
``lambda_n(U) = prod_{i_1<...<i_n} (1 - x_{i_1}...x_{i_n} t)`` in the H
basis.  Rather than expanding that product over n-subsets directly (which
explodes combinatorially), it is computed through ghost components:
``gh_m(lambda_n(U))`` is the n-th subset-sum function of the m-th powers
``x_i^m``, i.e. ``(-1)^n`` times the t^n coefficient of ``F_m(U)``, and
F_m(U) is available from the ghost recursion over the polynomial ring.
The ghost vector is then solved back to coefficients; every division is
exact because lambda_n(U) has integer coefficients in the H basis.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .errors import (
    BudgetExceeded,
    InternalIntegrality,
    NonIntegral,
    NotSymmetric,
    TooFewVariables,
)
from .rings import PolyRing
from .series import GhostVector, UnitSeries

DEFAULT_LAMBDA_BUDGET = 40


def _trim(exps: tuple[int, ...]) -> tuple[int, ...]:
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


class SymFunc:
    """An integer polynomial in the basis symbols H_1, H_2, ...

    ``terms`` maps exponent tuples (slot i holds the exponent of H_{i+1},
    trailing zeros stripped) to nonzero integer coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {_trim(e): c for e, c in terms.items() if c}

    @classmethod
    def basis(cls, k: int, coeff: int = 1) -> "SymFunc":
        """The single symbol H_k."""
        e = [0] * k
        e[k - 1] = 1
        return cls({tuple(e): coeff})

    @classmethod
    def constant(cls, c: int) -> "SymFunc":
        return cls({(): c} if c else {})

    @property
    def degree(self) -> int:
        """Weighted degree: H_i counts with degree i."""
        if not self.terms:
            return 0
        return max(sum((i + 1) * k for i, k in enumerate(e)) for e in self.terms)

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SymFunc(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                n = max(len(e1), len(e2))
                e = tuple(
                    (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0)
                    for i in range(n)
                )
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SymFunc(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(
            self.terms,
            key=lambda e: (sum((i + 1) * k for i, k in enumerate(e)), e),
            reverse=True,
        ):
            c = self.terms[e]
            sym = "*".join(
                f"H{i + 1}^{k}" if k > 1 else f"H{i + 1}"
                for i, k in enumerate(e)
                if k
            )
            if not sym:
                parts.append(str(c))
            elif c == 1:
                parts.append(sym)
            elif c == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{c}*{sym}")
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out

    # -- conversion to honest polynomials -------------------------------------

    def expand(self, nvars: int) -> dict:
        """The symmetric polynomial in x_1..x_nvars this function represents.

        Faithful only when ``nvars`` is at least the weighted degree, hence
        the precondition.
        """
        if nvars < self.degree:
            raise TooFewVariables(
                f"degree {self.degree} needs at least that many variables, got {nvars}"
            )
        ring = x_ring(nvars)
        elem = _elementary_polys(nvars)
        acc = ring.zero
        power_cache: dict = {}
        for e, c in self.terms.items():
            term = ring.of_int(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                # H_{i+1} = (-1)^(i+1) e_{i+1}
                key = (i + 1, k)
                if key not in power_cache:
                    power_cache[key] = ring.pow(elem[i + 1], k)
                term = ring.mul(term, power_cache[key])
                if (i + 1) * k % 2:
                    term = ring.neg(term)
            acc = ring.add(acc, term)
        return acc

    def evaluate(self, ring, values: list):
        """Value in ``ring`` under H_i -> values[i-1] (0 past the end)."""
        acc = ring.zero
        powers: dict = {}
        for e, c in self.terms.items():
            if any(
                k and (i >= len(values) or ring.is_zero(values[i]))
                for i, k in enumerate(e)
            ):
                continue
            term = ring.of_int(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                key = (i, k)
                if key not in powers:
                    powers[key] = ring.pow(values[i], k)
                term = ring.mul(term, powers[key])
            acc = ring.add(acc, term)
        return acc


@lru_cache(maxsize=None)
def x_ring(nvars: int) -> PolyRing:
    return PolyRing(tuple(f"x{i + 1}" for i in range(nvars)))


@lru_cache(maxsize=None)
def _elementary_polys(nvars: int) -> tuple:
    """e_0..e_nvars over x_1..x_nvars, via the product prod (1 + x_j s)."""
    ring = x_ring(nvars)
    coeffs = [ring.one] + [ring.zero] * nvars
    for j, x in enumerate(ring.gens(), start=1):
        for k in range(min(j, nvars), 0, -1):
            coeffs[k] = ring.add(coeffs[k], ring.mul(x, coeffs[k - 1]))
    return tuple(coeffs)


def generic_series(trunc: int) -> UnitSeries:
    """1 + H_1 t + ... + H_trunc t^trunc over Z[H_1..H_trunc]."""
    ring = PolyRing(tuple(f"H{i + 1}" for i in range(trunc)))
    return UnitSeries(ring, trunc, ring.gens())


def _poly_to_symfunc(ring: PolyRing, p: dict) -> SymFunc:
    return SymFunc({e: c for e, c in p.items()})


def reduce_to_basis(p: dict, nvars: int) -> SymFunc:
    """Write a symmetric polynomial in x_1..x_nvars in the H basis.

    Classical elimination: the graded-lex leading monomial of a symmetric
    polynomial has non-increasing exponents c_1 >= c_2 >= ..., and the
    elementary product matching it is subtracted off until nothing is left.
    """
    ring = x_ring(nvars)
    # symmetry check: invariance under all adjacent transpositions
    for i in range(nvars - 1):
        swapped = {}
        for e, c in p.items():
            f = list(e)
            f[i], f[i + 1] = f[i + 1], f[i]
            swapped[tuple(f)] = c
        if swapped != p:
            raise NotSymmetric(f"not invariant under swapping x{i + 1}, x{i + 2}")
    elem = _elementary_polys(nvars)
    out: dict = {}
    work = dict(p)
    while work:
        c_exp, coeff = ring.leading_term(work)
        degree = sum(c_exp)
        # basis exponents: H_i appears with multiplicity c_i - c_{i+1}
        h_exps = tuple(
            c_exp[i] - (c_exp[i + 1] if i + 1 < nvars else 0)
            for i in range(nvars)
        )
        if any(d < 0 for d in h_exps):
            raise NotSymmetric("leading exponents are not non-increasing")
        # prod e_i^{d_i} has leading coefficient +1 on x^c; cancel it from
        # work, and record (-1)^degree * coeff on the H monomial since
        # expand(prod H_i^{d_i}) = (-1)^degree * prod e_i^{d_i}.
        sign = -1 if degree % 2 else 1
        sub = ring.one
        for i, d in enumerate(h_exps):
            if d:
                sub = ring.mul(sub, ring.pow(elem[i + 1], d))
        work = ring.add(work, ring.mul_int(sub, -coeff))
        key = _trim(h_exps)
        out[key] = out.get(key, 0) + sign * coeff
    return SymFunc(out)


@lru_cache(maxsize=None)
def power_sum(k: int) -> SymFunc:
    """The basis expression of sum_i x_i^k.

    The ghost recursion applied to the generic series is exactly Newton's
    identity, so its k-th entry is the answer.
    """
    if k < 1:
        raise ValueError("power sums are indexed from 1")
    s = generic_series(k)
    gh = s.ghost().entries[k - 1]
    return _poly_to_symfunc(s.ring, gh)


_lambda_cache: dict = {}
_lambda_lock = threading.Lock()


def lambda_universal(
    n: int, trunc: int, budget: int = DEFAULT_LAMBDA_BUDGET
) -> tuple[SymFunc, ...]:
    """Coefficients of t^1..t^trunc of the exterior power lambda_n(U).

    Universal in n*trunc variables; guarded by ``budget`` since the work
    grows quickly with n*trunc.  Results are cached (single construction,
    concurrent readers).
    """
    if n < 1:
        raise ValueError("lambda index must be >= 1")
    if n * trunc > budget:
        raise BudgetExceeded(
            f"lambda_{n} at truncation {trunc} needs {n * trunc} > budget {budget}"
        )
    key = (n, trunc)
    cached = _lambda_cache.get(key)
    if cached is not None:
        return cached
    with _lambda_lock:
        cached = _lambda_cache.get(key)
        if cached is not None:
            return cached
        result = _lambda_universal_compute(n, trunc)
        _lambda_cache[key] = result
        return result


def _lambda_universal_compute(n: int, trunc: int) -> tuple[SymFunc, ...]:
    depth = n * trunc
    s = generic_series(depth)
    ring = s.ring
    gh = s.ghost().entries  # gh_1..gh_depth of the generic series
    # ghost components of lambda_n(U): gh_m = (-1)^n [t^n] F_m(U), and
    # F_m(U) is recovered from the subsampled ghost vector (gh_{km})_k.
    lam_ghost = []
    for m in range(1, trunc + 1):
        sub = GhostVector(ring, [gh[k * m - 1] for k in range(1, n + 1)])
        try:
            fm = sub.to_series()
        except NonIntegral as exc:  # pragma: no cover - theory guarantees exactness
            raise InternalIntegrality(str(exc)) from exc
        coeff = fm.coeffs[n - 1]
        lam_ghost.append(coeff if n % 2 == 0 else ring.neg(coeff))
    try:
        lam = GhostVector(ring, lam_ghost).to_series()
    except NonIntegral as exc:  # pragma: no cover
        raise InternalIntegrality(str(exc)) from exc
    return tuple(_poly_to_symfunc(ring, c) for c in lam.coeffs)
