"""The big Witt ring at a fixed truncation.

A Witt vector is represented by its unit series.  Witt addition is series
multiplication; Witt multiplication is the unique operation making the
ghost map a ring homomorphism, natural in the coefficient ring.  The Witt
zero is the series 1 and the Witt one is 1 - t (ghost components all 1).

Three multiplication engines are provided and cross-checked:

* ``mul_ghost`` -- solve the ghost recursion for the product directly.
  Over a torsion-free ring every division is exact because the product
  exists; over Z/m the computation is lifted to integer representatives
  and reduced, which agrees by naturality of the product under the
  reduction map Z -> Z/m.  This is the default engine.
* ``mul_universal`` -- specialize the cached universal product polynomials
  over Z[alpha, beta] (the reference engine; works verbatim over any ring).
* ``mul_orbit`` -- decompose both factors into orbit coordinates and use
  the closed pairwise rule
  ``(1 - a t^m) * (1 - b t^n) = (1 - a^(n/d) b^(m/d) t^(mn/d))^d``
  with d = gcd(m, n), extended biadditively.

Frobenius needs ghost data of length n*N, which a truncated vector does
not determine; following the truncation convention used throughout, the
stored polynomial is taken as the canonical representative, the operator
is applied at truncation n*N and the result re-truncated.
"""

from __future__ import annotations

import threading
from math import gcd

from .errors import InternalIntegrality, NoLambdaStructure, NonIntegral
from .rings import CoefficientRing, ModRing, PolyRing, ZZ
from .series import GhostVector, UnitSeries, binomial_power
from .symfn import DEFAULT_LAMBDA_BUDGET, lambda_universal, power_sum


class WittVector:
    """An element of W(R) truncated at N, carried by its unit series."""

    __slots__ = ("series",)

    def __init__(self, series: UnitSeries):
        self.series = series

    @classmethod
    def from_coeffs(cls, ring, trunc, coeffs) -> "WittVector":
        return cls(UnitSeries(ring, trunc, coeffs))

    @classmethod
    def zero(cls, ring, trunc) -> "WittVector":
        return cls(UnitSeries.one(ring, trunc))

    @classmethod
    def one(cls, ring, trunc) -> "WittVector":
        return cls(UnitSeries.one_minus_t(ring, trunc))

    @property
    def ring(self) -> CoefficientRing:
        return self.series.ring

    @property
    def trunc(self) -> int:
        return self.series.trunc

    def __eq__(self, other):
        return isinstance(other, WittVector) and self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def __repr__(self):
        return f"W[{self.series!r}]"

    def ghost(self) -> GhostVector:
        return self.series.ghost()

    def lift(self, trunc: int) -> "WittVector":
        """Canonical polynomial representative at a larger truncation.

        Compositions of operators are exact only when intermediate results
        are carried at sufficient truncation; lift before composing, cut
        after (e.g. F_m(F_n(u)) at N needs the inner value at m*N).
        """
        return WittVector(self.series.lift(trunc))

    def cut(self, trunc: int) -> "WittVector":
        return WittVector(self.series.cut(trunc))

    # -- additive structure (series multiplication) ----------------------------

    def __add__(self, other: "WittVector") -> "WittVector":
        return WittVector(self.series * other.series)

    def __neg__(self) -> "WittVector":
        return WittVector(self.series.inv())

    def __sub__(self, other: "WittVector") -> "WittVector":
        return self + (-other)

    def scale(self, n: int) -> "WittVector":
        """n-fold Witt addition: the n-th power of the series."""
        return WittVector(self.series.pow(n))

    # -- multiplicative structure ------------------------------------------------

    def __mul__(self, other: "WittVector") -> "WittVector":
        return mul_ghost(self, other)

    def frobenius(self, n: int) -> "WittVector":
        return frobenius(n, self)

    def verschiebung(self, n: int) -> "WittVector":
        return verschiebung(n, self)

    def lambda_op(self, n: int, budget: int = DEFAULT_LAMBDA_BUDGET) -> "WittVector":
        return lambda_op(n, self, budget)


# -- multiplication engines ------------------------------------------------------


def _mul_ghost_torsion_free(u: UnitSeries, v: UnitSeries) -> UnitSeries:
    try:
        return (u.ghost() * v.ghost()).to_series()
    except NonIntegral as exc:  # pragma: no cover - exact by functoriality
        raise InternalIntegrality(str(exc)) from exc


def _lift_mod(series: UnitSeries) -> UnitSeries:
    return UnitSeries(ZZ, series.trunc, series.coeffs)


def _reduce_mod(ring: ModRing, series: UnitSeries) -> UnitSeries:
    return UnitSeries(ring, series.trunc, [c % ring.modulus for c in series.coeffs])


def mul_ghost(u: WittVector, v: WittVector) -> WittVector:
    """Default product: ghost recursion, lifted through Z for modular rings."""
    u.series._check_compatible(v.series)
    r = u.ring
    if r.torsion_free:
        return WittVector(_mul_ghost_torsion_free(u.series, v.series))
    if isinstance(r, ModRing):
        prod = _mul_ghost_torsion_free(_lift_mod(u.series), _lift_mod(v.series))
        return WittVector(_reduce_mod(r, prod))
    return mul_orbit(u, v)


def mul_orbit(u: WittVector, v: WittVector) -> WittVector:
    """Product via orbit coordinates and the pairwise closed rule."""
    u.series._check_compatible(v.series)
    r = u.ring
    n = u.trunc
    bu = u.series.orbit_coords().entries
    bv = v.series.orbit_coords().entries
    acc = UnitSeries.one(r, n)
    for i in range(1, n + 1):
        a = bu[i - 1]
        if r.is_zero(a):
            continue
        for j in range(1, n + 1):
            b = bv[j - 1]
            if r.is_zero(b):
                continue
            d = gcd(i, j)
            order = i * j // d
            if order > n:
                continue
            c = r.mul(r.pow(a, j // d), r.pow(b, i // d))
            for _ in range(d):
                acc = acc.mul_one_minus(c, order)
    return WittVector(acc)


class UniversalProductTable:
    """Integer polynomials giving each coefficient of the generic product.

    Coefficient k of the Witt product of ``1 + sum alpha_i t^i`` and
    ``1 + sum beta_i t^i`` is a polynomial in alpha_1..k, beta_1..k over the
    integers, obtained by solving the ghost recursion over that polynomial
    ring; by construction every division is exact (checked, since a failure
    would mean a corrupted engine, not bad input).

    ``entries`` stores each polynomial in a compiled form
    ``(coefficient, ((variable index, exponent), ...))`` with variable
    indices 0..N-1 for alpha and N..2N-1 for beta, for fast specialization.
    """

    def __init__(self, trunc: int):
        self.trunc = trunc
        names = tuple(f"a{i + 1}" for i in range(trunc)) + tuple(
            f"b{i + 1}" for i in range(trunc)
        )
        ring = PolyRing(names)
        gens = ring.gens()
        p = UnitSeries(ring, trunc, gens[:trunc])
        q = UnitSeries(ring, trunc, gens[trunc:])
        try:
            prod = (p.ghost() * q.ghost()).to_series()
        except NonIntegral as exc:  # pragma: no cover
            raise InternalIntegrality(str(exc)) from exc
        self.entries = tuple(
            tuple(
                (c, tuple((i, e) for i, e in enumerate(exps) if e))
                for exps, c in poly.items()
            )
            for poly in prod.coeffs
        )
        self._self_check()

    def _self_check(self) -> None:
        # specializing at a fixed integer pair must agree with the ghost
        # definition of the product
        n = self.trunc
        u = WittVector.from_coeffs(ZZ, n, [(-1) ** k * (k + 1) for k in range(n)])
        v = WittVector.from_coeffs(ZZ, n, [2 - k for k in range(n)])
        specialized = self.specialize(u.series, v.series)
        expected = (u.series.ghost() * v.series.ghost()).to_series()
        if specialized != expected:
            raise InternalIntegrality("universal product table self-check failed")

    def specialize(self, p: UnitSeries, q: UnitSeries) -> UnitSeries:
        r = p.ring
        values = list(p.coeffs) + list(q.coeffs)
        n = self.trunc
        powers: dict = {}
        out = []
        for poly in self.entries:
            acc = r.zero
            for c, monom in poly:
                term = r.of_int(c)
                for i, e in monom:
                    key = (i, e)
                    pw = powers.get(key)
                    if pw is None:
                        pw = r.pow(values[i], e)
                        powers[key] = pw
                    term = r.mul(term, pw)
                acc = r.add(acc, term)
            out.append(acc)
        return UnitSeries(r, n, out)


_table_cache: dict[int, UniversalProductTable] = {}
_table_lock = threading.Lock()


def product_table(trunc: int) -> UniversalProductTable:
    """The cached table for a truncation; built at most once, read freely."""
    table = _table_cache.get(trunc)
    if table is not None:
        return table
    with _table_lock:
        table = _table_cache.get(trunc)
        if table is None:
            table = UniversalProductTable(trunc)
            _table_cache[trunc] = table
        return table


def mul_universal(u: WittVector, v: WittVector) -> WittVector:
    """Product via the universal polynomial table."""
    u.series._check_compatible(v.series)
    return WittVector(product_table(u.trunc).specialize(u.series, v.series))


# -- Frobenius and Verschiebung ----------------------------------------------------


def frobenius(n: int, u: WittVector, out_trunc: int | None = None) -> WittVector:
    """F_n, characterized by gh_k(F_n u) = gh_(kn)(u).

    Computed on the canonical polynomial representative: its ghost vector
    is taken out to n * out_trunc, subsampled, and solved back.  Over Z/m
    the computation is lifted through Z (F_n commutes with coefficient
    reduction).

    ``out_trunc`` defaults to the input truncation; compositions of
    operators are exact when each step requests the truncation the next
    step needs (an operator at index n reads n times as many ghost
    entries as it produces).
    """
    if n < 1:
        raise ValueError("Frobenius index must be >= 1")
    out = u.trunc if out_trunc is None else out_trunc
    if n == 1:
        return u.cut(out) if out <= u.trunc else u.lift(out)
    r = u.ring
    if r.torsion_free:
        return WittVector(_frobenius_ghost(u.series, n, out))
    if isinstance(r, ModRing):
        lifted = _frobenius_ghost(_lift_mod(u.series), n, out)
        return WittVector(_reduce_mod(r, lifted))
    return frobenius_orbit(n, u, out)


def _frobenius_ghost(series: UnitSeries, n: int, out: int) -> UnitSeries:
    depth = max(series.trunc, n * out)
    gh = series.lift(depth).ghost().entries
    sub = GhostVector(series.ring, [gh[k * n - 1] for k in range(1, out + 1)])
    try:
        return sub.to_series()
    except NonIntegral as exc:  # pragma: no cover - exact by naturality
        raise InternalIntegrality(str(exc)) from exc


def frobenius_orbit(n: int, u: WittVector, out_trunc: int | None = None) -> WittVector:
    """F_n via orbit coordinates of the canonical representative:
    F_n(1 - b t^i) = (1 - b^(n/d) t^(i/d))^d with d = gcd(n, i)."""
    if n < 1:
        raise ValueError("Frobenius index must be >= 1")
    out = u.trunc if out_trunc is None else out_trunc
    if n == 1:
        return u.cut(out) if out <= u.trunc else u.lift(out)
    r = u.ring
    depth = max(u.trunc, n * out)
    coords = u.series.lift(depth).orbit_coords().entries
    acc = UnitSeries.one(r, out)
    for i in range(1, depth + 1):
        b = coords[i - 1]
        if r.is_zero(b):
            continue
        d = gcd(n, i)
        if i // d > out:
            continue
        c = r.pow(b, n // d)
        for _ in range(d):
            acc = acc.mul_one_minus(c, i // d)
    return WittVector(acc)


def verschiebung(n: int, u: WittVector) -> WittVector:
    """V_n: on series, p(t) -> p(t^n)."""
    if n < 1:
        raise ValueError("Verschiebung index must be >= 1")
    if n == 1:
        return u
    return WittVector(u.series.substitute_power(n))


# -- lambda operations and Adams operations ------------------------------------------


def lambda_op(
    n: int, u: WittVector, budget: int = DEFAULT_LAMBDA_BUDGET
) -> WittVector:
    """Exterior power lambda_n, by specializing the universal expansion at
    the coefficients of the canonical representative."""
    if n < 1:
        raise ValueError("lambda index must be >= 1")
    if n == 1:
        return u
    r = u.ring
    polys = lambda_universal(n, u.trunc, budget)
    values = list(u.series.coeffs)
    return WittVector(
        UnitSeries(r, u.trunc, [sf.evaluate(r, values) for sf in polys])
    )


def adams_via_lambda(
    k: int, u: WittVector, budget: int = DEFAULT_LAMBDA_BUDGET
) -> WittVector:
    """Adams operation on W(R): the Newton polynomial s_k evaluated, with
    Witt ring arithmetic, at the coefficients of the lambda-structure
    series of u.

    The structure series is the product of (1 - y_i T) over the formal
    Witt summands y_i = 1 - x_i t of u, so its T^i coefficient is
    lambda_i(u) Witt-negated i times, i.e. (-1)^i lambda_i(u).  Agrees
    with frobenius(k, u); kept as an independent route for checks.
    """
    lam = []
    for i in range(1, k + 1):
        li = lambda_op(i, u, budget)
        lam.append(-li if i % 2 else li)
    terms = power_sum(k).terms
    acc = WittVector.zero(u.ring, u.trunc)
    for exps, c in terms.items():
        term = WittVector.one(u.ring, u.trunc)
        for i, e in enumerate(exps):
            for _ in range(e):
                term = term * lam[i]
        term = term.scale(abs(c))
        acc = acc + (-term if c < 0 else term)
    return acc


class BinomialLambdaStructure:
    """The lambda-structure on a binomial ring: lambda(a) = (1 - t)^a.

    All of its Adams operations are the identity; for prime p this gives
    the congruence a^p = a mod p.
    """

    def __init__(self, ring: CoefficientRing):
        if not ring.binomial:
            raise NoLambdaStructure(f"{ring} is not a binomial ring")
        self.ring = ring

    def map(self, a, trunc: int) -> UnitSeries:
        return binomial_power(self.ring, trunc, 1, a)


def adams(k: int, a, structure: BinomialLambdaStructure):
    """Adams operation psi_k(a) = gh_k(lambda(a)) for a ring element."""
    if k < 1:
        raise ValueError("Adams index must be >= 1")
    return structure.map(a, k).ghost().entries[k - 1]
