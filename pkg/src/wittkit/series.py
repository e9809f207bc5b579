"""Truncated power series with constant term 1 and their coordinate systems.

A :class:`UnitSeries` stores the class of ``1 + a_1 t + ... + a_N t^N``
modulo ``t^(N+1)``.  Three coordinate systems are interconvertible:

* coefficients ``a_1..a_N``,
* ghost components ``gh_k``, the coefficients of ``-t d/dt log(p)``,
* orbit coordinates ``b_i`` with ``p = prod (1 - b_i t^i)``.

Over binomial rings (integers, rationals) there is a fourth: exponents
``b_i`` with ``p = prod (1 - t^i)^(b_i)``.

All conversions are exact; going from ghost components back to coefficients
requires dividing by k at step k and raises :class:`NonIntegral` when the
ghost vector has no preimage in the ring.
"""

from __future__ import annotations

from .errors import NotBinomialRing, TruncationMismatch
from .rings import CoefficientRing


class UnitSeries:
    """A power series with constant term 1, truncated after degree ``trunc``.

    Immutable; ``coeffs`` holds the coefficients of t^1 .. t^N.  Results of
    every operation are classes modulo t^(N+1).
    """

    __slots__ = ("ring", "trunc", "coeffs")

    def __init__(self, ring: CoefficientRing, trunc: int, coeffs):
        if trunc < 1:
            raise ValueError("truncation order must be >= 1")
        coeffs = tuple(coeffs)
        if len(coeffs) != trunc:
            raise ValueError(f"expected {trunc} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.trunc = trunc
        self.coeffs = coeffs

    @classmethod
    def one(cls, ring: CoefficientRing, trunc: int) -> "UnitSeries":
        return cls(ring, trunc, (ring.zero,) * trunc)

    @classmethod
    def one_minus_t(cls, ring: CoefficientRing, trunc: int) -> "UnitSeries":
        coeffs = [ring.zero] * trunc
        coeffs[0] = ring.neg(ring.one)
        return cls(ring, trunc, coeffs)

    def coeff(self, k: int):
        """Coefficient of t^k, with coeff(0) = 1."""
        if k == 0:
            return self.ring.one
        return self.coeffs[k - 1]

    def _check_compatible(self, other: "UnitSeries") -> None:
        self.ring.check_same(other.ring)
        if self.trunc != other.trunc:
            raise TruncationMismatch(
                f"truncation {self.trunc} vs {other.trunc}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, UnitSeries)
            and self.ring == other.ring
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.trunc, self.coeffs))

    def __repr__(self):
        r = self.ring
        parts = ["1"]
        for k, c in enumerate(self.coeffs, start=1):
            if r.is_zero(c):
                continue
            parts.append(f"({r.format_element(c)})t^{k}")
        return " + ".join(parts) + f" + O(t^{self.trunc + 1})"

    # -- ring of truncated series -------------------------------------------

    def __mul__(self, other: "UnitSeries") -> "UnitSeries":
        self._check_compatible(other)
        r = self.ring
        n = self.trunc
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(1, n + 1):
            acc = r.add(a[k - 1], b[k - 1])
            for i in range(1, k):
                acc = r.add(acc, r.mul(a[i - 1], b[k - i - 1]))
            out.append(acc)
        return UnitSeries(r, n, out)

    def inv(self) -> "UnitSeries":
        """Multiplicative inverse; exists for every unit series."""
        r = self.ring
        n = self.trunc
        a = self.coeffs
        out: list = []
        for k in range(1, n + 1):
            acc = a[k - 1]
            for i in range(1, k):
                acc = r.add(acc, r.mul(a[i - 1], out[k - i - 1]))
            out.append(r.neg(acc))
        return UnitSeries(r, n, out)

    def pow(self, e: int) -> "UnitSeries":
        """Integer power; negative exponents go through the inverse."""
        base = self if e >= 0 else self.inv()
        e = abs(e)
        acc = UnitSeries.one(self.ring, self.trunc)
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def mul_one_minus(self, b, i: int) -> "UnitSeries":
        """Multiply by (1 - b t^i).  O(N^2/i), used by the orbit engine."""
        r = self.ring
        n = self.trunc
        out = list(self.coeffs)
        for k in range(n, i - 1, -1):
            out[k - 1] = r.sub(out[k - 1], r.mul(b, self.coeff(k - i)))
        return UnitSeries(r, n, out)

    def div_one_minus(self, b, i: int) -> "UnitSeries":
        """Multiply by (1 - b t^i)^(-1) via new_k = cur_k + b * new_(k-i)."""
        r = self.ring
        n = self.trunc
        out = list(self.coeffs)
        for k in range(i, n + 1):
            prev = r.one if k == i else out[k - i - 1]
            out[k - 1] = r.add(out[k - 1], r.mul(b, prev))
        return UnitSeries(r, n, out)

    # -- truncation management ------------------------------------------------

    def lift(self, trunc: int) -> "UnitSeries":
        """The canonical polynomial representative, viewed at a larger
        truncation (missing coefficients are zero)."""
        if trunc < self.trunc:
            raise ValueError("lift cannot lower the truncation")
        pad = (self.ring.zero,) * (trunc - self.trunc)
        return UnitSeries(self.ring, trunc, self.coeffs + pad)

    def cut(self, trunc: int) -> "UnitSeries":
        if trunc > self.trunc:
            raise ValueError("cut cannot raise the truncation")
        return UnitSeries(self.ring, trunc, self.coeffs[:trunc])

    def substitute_power(self, n: int) -> "UnitSeries":
        """p(t) -> p(t^n) at the same truncation."""
        if n < 1:
            raise ValueError("substitution exponent must be >= 1")
        r = self.ring
        out = [r.zero] * self.trunc
        for k in range(1, self.trunc // n + 1):
            out[k * n - 1] = self.coeffs[k - 1]
        return UnitSeries(r, self.trunc, out)

    # -- ghost components ------------------------------------------------------

    def ghost(self) -> "GhostVector":
        """Ghost components gh_k, defined by the recursion
        k*a_k + sum_{i<k} gh_i a_{k-i} + gh_k = 0.

        Needs only ring addition and multiplication, so it exists over
        every coefficient ring.
        """
        r = self.ring
        a = self.coeffs
        gh: list = []
        for k in range(1, self.trunc + 1):
            acc = r.mul(r.of_int(k), a[k - 1])
            for i in range(1, k):
                acc = r.add(acc, r.mul(gh[i - 1], a[k - i - 1]))
            gh.append(r.neg(acc))
        return GhostVector(r, gh)

    # -- orbit (product) coordinates -------------------------------------------

    def orbit_coords(self) -> "OrbitCoords":
        """The unique b_i with p = prod_{i<=N} (1 - b_i t^i) mod t^(N+1).

        Extraction: b_i is minus the current coefficient of t^i; divide the
        running series by (1 - b_i t^i) and continue.
        """
        r = self.ring
        cur = self
        out = []
        for i in range(1, self.trunc + 1):
            b = r.neg(cur.coeffs[i - 1])
            out.append(b)
            if not r.is_zero(b):
                cur = cur.div_one_minus(b, i)
        return OrbitCoords(r, out)

    # -- binomial coordinates ----------------------------------------------------

    def binomial_coords(self) -> tuple:
        """Exponents b_i with p = prod (1 - t^i)^(b_i); binomial rings only."""
        r = self.ring
        if not r.binomial:
            raise NotBinomialRing(f"{r} has no binomial coefficients")
        cur = self
        out = []
        for i in range(1, self.trunc + 1):
            b = r.neg(cur.coeffs[i - 1])
            out.append(b)
            if not r.is_zero(b):
                cur = cur * binomial_power(r, cur.trunc, i, r.neg(b))
        return tuple(out)


class GhostVector:
    """A length-N vector of ring elements; the target of the ghost map."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: CoefficientRing, entries):
        self.ring = ring
        self.entries = tuple(entries)

    @property
    def trunc(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, GhostVector)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        inner = ", ".join(self.ring.format_element(e) for e in self.entries)
        return f"ghost({inner})"

    def _check_compatible(self, other: "GhostVector") -> None:
        self.ring.check_same(other.ring)
        if len(self.entries) != len(other.entries):
            raise TruncationMismatch("ghost vectors of different lengths")

    def __add__(self, other: "GhostVector") -> "GhostVector":
        self._check_compatible(other)
        r = self.ring
        return GhostVector(
            r, [r.add(x, y) for x, y in zip(self.entries, other.entries)]
        )

    def __mul__(self, other: "GhostVector") -> "GhostVector":
        self._check_compatible(other)
        r = self.ring
        return GhostVector(
            r, [r.mul(x, y) for x, y in zip(self.entries, other.entries)]
        )

    def to_series(self) -> UnitSeries:
        """Solve the ghost recursion for the coefficients.

        Step k divides by k; raises :class:`NonIntegral` when the vector is
        not in the image of the ghost map (e.g. (1, 0, 0, ...) over the
        integers).  The preimage is unique over torsion-free rings.
        """
        r = self.ring
        gh = self.entries
        a: list = []
        for k in range(1, len(gh) + 1):
            acc = gh[k - 1]
            for i in range(1, k):
                acc = r.add(acc, r.mul(gh[i - 1], a[k - i - 1]))
            a.append(r.exact_div_int(r.neg(acc), k))
        return UnitSeries(r, len(gh), a)


class OrbitCoords:
    """Coordinates b_1..b_N meaning prod (1 - b_i t^i), truncated at t^N."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: CoefficientRing, entries):
        self.ring = ring
        self.entries = tuple(entries)

    @property
    def trunc(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, OrbitCoords)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __repr__(self):
        inner = ", ".join(self.ring.format_element(e) for e in self.entries)
        return f"orbit({inner})"

    def to_series(self) -> UnitSeries:
        r = self.ring
        cur = UnitSeries.one(r, len(self.entries))
        for i, b in enumerate(self.entries, start=1):
            if not r.is_zero(b):
                cur = cur.mul_one_minus(b, i)
        return cur


def binomial_power(ring: CoefficientRing, trunc: int, i: int, a) -> UnitSeries:
    """(1 - t^i)^a for a ring element exponent a, truncated.

    Defined over binomial rings: the coefficient of t^(i*k) is
    (-1)^k * binom(a, k).
    """
    if not ring.binomial:
        raise NotBinomialRing(f"{ring} has no binomial coefficients")
    if i < 1:
        raise ValueError("the exponent of t must be >= 1")
    out = [ring.zero] * trunc
    coeff = ring.one
    for k in range(1, trunc // i + 1):
        # binom(a, k) built incrementally: multiply by (a-k+1), divide by k
        coeff = ring.exact_div_int(
            ring.mul(coeff, ring.sub(a, ring.of_int(k - 1))), k
        )
        term = coeff if k % 2 == 0 else ring.neg(coeff)
        out[i * k - 1] = term
    return UnitSeries(ring, trunc, out)


def from_binomial_coords(ring: CoefficientRing, trunc: int, bs) -> UnitSeries:
    """prod (1 - t^i)^(b_i), the inverse of binomial_coords."""
    cur = UnitSeries.one(ring, trunc)
    for i, b in enumerate(bs, start=1):
        if not ring.is_zero(b):
            cur = cur * binomial_power(ring, trunc, i, b)
    return cur
