"""Endomorphisms of free modules and their characteristic data.

The reversed characteristic polynomial ``det(1 - t f)`` has constant term 1
and determines the endomorphism class; its ghost components are the trace
sequence ``tr(f^k)``.  Direct sum multiplies characteristic polynomials
(Witt addition) and tensor product multiplies trace sequences pointwise
(Witt multiplication), which is the bridge between linear algebra and the
Witt ring.

Characteristic polynomials are computed division-free (Berkowitz), so
everything works verbatim over Z/m where Newton-style trace inversion does
not.
"""

from __future__ import annotations

from .rings import CoefficientRing
from .series import UnitSeries


class UnitPoly:
    """A polynomial with constant term 1, stored exactly (no truncation).

    ``coeffs`` holds the coefficients of t^1..t^deg with trailing zeros
    trimmed; the zero-degree polynomial 1 has empty coeffs.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoefficientRing, coeffs):
        coeffs = list(coeffs)
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, ring: CoefficientRing) -> "UnitPoly":
        return cls(ring, ())

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def coeff(self, k: int):
        if k == 0:
            return self.ring.one
        if k <= len(self.coeffs):
            return self.coeffs[k - 1]
        return self.ring.zero

    def __mul__(self, other: "UnitPoly") -> "UnitPoly":
        self.ring.check_same(other.ring)
        r = self.ring
        n = len(self.coeffs) + len(other.coeffs)
        out = [r.zero] * n
        for k in range(1, n + 1):
            acc = r.zero
            for i in range(0, k + 1):
                acc = r.add(acc, r.mul(self.coeff(i), other.coeff(k - i)))
            out[k - 1] = acc
        return UnitPoly(r, out)

    def __eq__(self, other):
        return (
            isinstance(other, UnitPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        r = self.ring
        parts = ["1"] + [
            f"({r.format_element(c)})t^{k}"
            for k, c in enumerate(self.coeffs, start=1)
            if not r.is_zero(c)
        ]
        return " + ".join(parts)

    def substitute_power(self, n: int) -> "UnitPoly":
        """p(t) -> p(t^n), exact."""
        r = self.ring
        out = [r.zero] * (len(self.coeffs) * n)
        for k, c in enumerate(self.coeffs, start=1):
            out[k * n - 1] = c
        return UnitPoly(r, out)

    def truncate(self, trunc: int) -> UnitSeries:
        return UnitSeries(
            self.ring, trunc, [self.coeff(k) for k in range(1, trunc + 1)]
        )


class EndoObject:
    """A square matrix over a coefficient ring; dimension 0 is allowed and
    plays the role of the zero object."""

    __slots__ = ("ring", "dim", "rows")

    def __init__(self, ring: CoefficientRing, rows):
        rows = tuple(tuple(row) for row in rows)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix must be square")
        self.ring = ring
        self.dim = len(rows)
        self.rows = rows

    @classmethod
    def identity(cls, ring: CoefficientRing, dim: int) -> "EndoObject":
        return cls(
            ring,
            [
                [ring.one if i == j else ring.zero for j in range(dim)]
                for i in range(dim)
            ],
        )

    def __eq__(self, other):
        return (
            isinstance(other, EndoObject)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"EndoObject({self.ring}, dim={self.dim})"

    def matmul(self, other: "EndoObject") -> "EndoObject":
        self.ring.check_same(other.ring)
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        r = self.ring
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = r.zero
                for k in range(n):
                    acc = r.add(acc, r.mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            rows.append(row)
        return EndoObject(r, rows)

    def trace(self):
        r = self.ring
        acc = r.zero
        for i in range(self.dim):
            acc = r.add(acc, self.rows[i][i])
        return acc


def char_poly_rev(f: EndoObject) -> UnitPoly:
    """det(1 - t f), division-free.

    Berkowitz recursion: for M = [[a, R], [C, M']], the coefficient vector
    of det(s - M) is the Toeplitz product T * charpoly(M') where the first
    column of T is (1, -a, -R C, -R M' C, -R M'^2 C, ...).  The reversed
    polynomial is then read off by reversing the coefficients.
    """
    r = f.ring
    q = _berkowitz(f.ring, f.rows)  # coeffs of s^d .. s^0, leading 1
    return UnitPoly(r, q[1:])


def _berkowitz(r: CoefficientRing, rows) -> list:
    m = len(rows)
    if m == 0:
        return [r.one]
    a = rows[0][0]
    row_r = rows[0][1:]
    col_c = [row[0] for row in rows[1:]]
    sub = [row[1:] for row in rows[1:]]
    p_sub = _berkowitz(r, sub)  # length m
    # first column of the Toeplitz matrix
    t = [r.one, r.neg(a)]
    w = col_c
    for _ in range(m - 1):
        acc = r.zero
        for x, y in zip(row_r, w):
            acc = r.add(acc, r.mul(x, y))
        t.append(r.neg(acc))
        # w <- sub @ w
        w = [
            _dot(r, sub_row, w)
            for sub_row in sub
        ]
    out = []
    for k in range(m + 1):
        acc = r.zero
        for i in range(max(0, k - m + 1), min(k, m) + 1):
            if k - i < m:
                acc = r.add(acc, r.mul(t[i], p_sub[k - i]))
        out.append(acc)
    return out


def _dot(r: CoefficientRing, xs, ys):
    acc = r.zero
    for x, y in zip(xs, ys):
        acc = r.add(acc, r.mul(x, y))
    return acc


def trace_seq(f: EndoObject, trunc: int) -> "GhostVector":
    """The ghost vector (tr f, tr f^2, ..., tr f^trunc)."""
    from .series import GhostVector

    power = f
    entries = []
    for _ in range(trunc):
        entries.append(power.trace())
        power = power.matmul(f)
    return GhostVector(f.ring, entries)


def direct_sum(f: EndoObject, g: EndoObject) -> EndoObject:
    f.ring.check_same(g.ring)
    r = f.ring
    n, m = f.dim, g.dim
    rows = []
    for i in range(n):
        rows.append(list(f.rows[i]) + [r.zero] * m)
    for i in range(m):
        rows.append([r.zero] * n + list(g.rows[i]))
    return EndoObject(r, rows)


def tensor_product(f: EndoObject, g: EndoObject) -> EndoObject:
    """Kronecker product; indices are row-major, block (i, j) of the result
    holds f[i][j] * g."""
    f.ring.check_same(g.ring)
    r = f.ring
    n, m = f.dim, g.dim
    rows = []
    for i in range(n):
        for k in range(m):
            row = []
            for j in range(n):
                for l in range(m):
                    row.append(r.mul(f.rows[i][j], g.rows[k][l]))
            rows.append(row)
    return EndoObject(r, rows)


def endo_frobenius(n: int, f: EndoObject) -> EndoObject:
    """f -> f^n."""
    if n < 1:
        raise ValueError("Frobenius index must be >= 1")
    out = f
    for _ in range(n - 1):
        out = out.matmul(f)
    return out


def endo_verschiebung(n: int, f: EndoObject) -> EndoObject:
    """The nd x nd block matrix with identity blocks on the subdiagonal and
    f in the top-right corner; its characteristic polynomial is
    char_poly_rev(f) evaluated at t^n."""
    if n < 1:
        raise ValueError("Verschiebung index must be >= 1")
    r = f.ring
    d = f.dim
    size = n * d
    rows = [[r.zero] * size for _ in range(size)]
    for bi in range(1, n):
        for i in range(d):
            rows[bi * d + i][(bi - 1) * d + i] = r.one
    for i in range(d):
        for j in range(d):
            rows[i][(n - 1) * d + j] = f.rows[i][j]
    return EndoObject(r, rows)


def companion(ring: CoefficientRing, coeffs) -> EndoObject:
    """The k x k matrix whose reversed characteristic polynomial is
    1 + a_1 t + ... + a_k t^k.

    Ones on the subdiagonal; the last column holds -a_k, ..., -a_1 from
    top to bottom (this placement of the signs is what makes the identity
    above hold on the nose).
    """
    coeffs = list(coeffs)
    k = len(coeffs)
    rows = [[ring.zero] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = ring.one
    for i in range(k):
        rows[i][k - 1] = ring.neg(coeffs[k - 1 - i])
    return EndoObject(ring, rows)


class RationalClass:
    """A difference of endomorphism classes, as a ratio of unit polynomials.

    Equality is cross-multiplication equality of polynomials; no gcd
    reduction is attempted since gcds need not exist over a general
    commutative ring.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UnitPoly, den: UnitPoly):
        num.ring.check_same(den.ring)
        self.num = num
        self.den = den

    @property
    def ring(self) -> CoefficientRing:
        return self.num.ring

    def __eq__(self, other):
        if not isinstance(other, RationalClass):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"

    def __add__(self, other: "RationalClass") -> "RationalClass":
        return RationalClass(self.num * other.num, self.den * other.den)

    def __neg__(self) -> "RationalClass":
        return RationalClass(self.den, self.num)

    def __sub__(self, other: "RationalClass") -> "RationalClass":
        return self + (-other)

    def __mul__(self, other: "RationalClass") -> "RationalClass":
        """Multiplication by inclusion-exclusion on companion realizations:
        (n1/d1)(n2/d2) has numerator char(C(n1) (x) C(n2) (+) C(d1) (x) C(d2))
        and denominator char(C(n1) (x) C(d2) (+) C(d1) (x) C(n2))."""
        r = self.ring
        r.check_same(other.ring)

        def comp(p: UnitPoly) -> EndoObject:
            return companion(r, p.coeffs)

        n1, d1 = comp(self.num), comp(self.den)
        n2, d2 = comp(other.num), comp(other.den)
        num = char_poly_rev(tensor_product(n1, n2)) * char_poly_rev(
            tensor_product(d1, d2)
        )
        den = char_poly_rev(tensor_product(n1, d2)) * char_poly_rev(
            tensor_product(d1, n2)
        )
        return RationalClass(num, den)


def class_of(f: EndoObject) -> RationalClass:
    return RationalClass(char_poly_rev(f), UnitPoly.one(f.ring))
