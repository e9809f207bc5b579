"""Coefficient rings.

Elements are plain Python values -- ``int`` for the integers, ``Fraction``
for the rationals, residues in ``[0, m)`` for a modular ring, and sparse
``{exponent-tuple: int}`` dicts for integer multivariate polynomials.  All
arithmetic goes through the owning ring object, so series, matrix and Witt
code is written once and runs over every ring.

Every value kept in a ring is canonical: fractions are reduced with positive
denominator, residues are reduced, polynomial dicts store no zero
coefficients.  Equality of elements is therefore plain ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NonIntegral, RingMismatch, UnassignedVariable


class CoefficientRing:
    """Base class; subclasses fix the element representation.

    Capability flags:
      * ``torsion_free`` -- multiplication by a nonzero integer is injective
      * ``binomial``     -- binomial coefficients of arbitrary elements exist
      * ``characteristic`` -- 0 except for modular rings
    """

    kind: str
    torsion_free: bool
    binomial: bool
    characteristic: int

    # subclasses define: zero, one, of_int, add, neg, mul, exact_div_int,
    # format_element, parse_element

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def pow(self, x, e: int):
        if e < 0:
            raise ValueError("negative exponent in a ring power")
        acc = self.one
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def check_same(self, other: "CoefficientRing") -> None:
        if self != other:
            raise RingMismatch(f"ring mismatch: {self} vs {other}")

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.kind,)

    def __repr__(self):
        return self.kind


class IntRing(CoefficientRing):
    """The integers, arbitrary precision."""

    kind = "int"
    torsion_free = True
    binomial = True
    characteristic = 0
    zero = 0
    one = 1

    def of_int(self, k: int) -> int:
        return k

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def exact_div_int(self, x: int, k: int) -> int:
        q, r = divmod(x, k)
        if r:
            raise NonIntegral(f"{x} is not divisible by {k} in the integers")
        return q

    def format_element(self, x) -> str:
        return str(x)

    def parse_element(self, s: str) -> int:
        return int(s)


class RatRing(CoefficientRing):
    """The rationals; elements are reduced ``Fraction`` values."""

    kind = "rat"
    torsion_free = True
    binomial = True
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, k: int) -> Fraction:
        return Fraction(k)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def exact_div_int(self, x: Fraction, k: int) -> Fraction:
        return x / k

    def format_element(self, x: Fraction) -> str:
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def parse_element(self, s: str) -> Fraction:
        return Fraction(s)


class ModRing(CoefficientRing):
    """Integers modulo ``m``; composite moduli are allowed."""

    kind = "mod"
    torsion_free = False
    binomial = False

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError("modulus must be a positive integer")
        self.modulus = modulus
        self.characteristic = modulus
        self.zero = 0
        self.one = 1 % modulus

    def _key(self):
        return (self.kind, self.modulus)

    def of_int(self, k: int) -> int:
        return k % self.modulus

    def add(self, x, y):
        return (x + y) % self.modulus

    def neg(self, x):
        return (-x) % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def exact_div_int(self, x: int, k: int) -> int:
        # Solve k*q = x mod m.  Solvable iff gcd(k, m) divides x; the
        # canonical solution is the smallest nonnegative one.
        m = self.modulus
        g = gcd(k % m, m)  # gcd(0, m) = m, so k = 0 mod m is covered too
        if x % g:
            raise NonIntegral(f"{x} is not divisible by {k} mod {m}")
        mg = m // g
        if mg == 1:
            return 0
        return (x // g) * pow((k % m) // g, -1, mg) % mg

    def format_element(self, x) -> str:
        return str(x)

    def parse_element(self, s: str) -> int:
        return int(s) % self.modulus

    def __repr__(self):
        return f"mod({self.modulus})"


class PolyRing(CoefficientRing):
    """Sparse multivariate polynomials over the integers.

    Elements are dicts mapping exponent tuples (one slot per variable) to
    nonzero integer coefficients.  Monomials are ordered graded-lexicographically
    where orderings matter (leading terms, printing).
    """

    kind = "multipoly"
    torsion_free = True
    binomial = False
    characteristic = 0

    def __init__(self, variables: tuple[str, ...]):
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.zero = {}
        self.one = {(0,) * self.nvars: 1}

    def _key(self):
        return (self.kind, self.variables)

    def of_int(self, k: int) -> dict:
        if k == 0:
            return {}
        return {(0,) * self.nvars: k}

    def gens(self) -> list[dict]:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append({tuple(e): 1})
        return out

    def monomial(self, exps: tuple[int, ...], coeff: int = 1) -> dict:
        if coeff == 0:
            return {}
        return {tuple(exps): coeff}

    def add(self, x: dict, y: dict) -> dict:
        if not y:
            return x
        if not x:
            return y
        out = dict(x)
        for e, c in y.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    def neg(self, x: dict) -> dict:
        return {e: -c for e, c in x.items()}

    def mul(self, x: dict, y: dict) -> dict:
        if not x or not y:
            return {}
        if len(y) < len(x):
            x, y = y, x
        out: dict = {}
        for e1, c1 in x.items():
            for e2, c2 in y.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return out

    def mul_int(self, x: dict, k: int) -> dict:
        if k == 0:
            return {}
        return {e: c * k for e, c in x.items()}

    def exact_div_int(self, x: dict, k: int) -> dict:
        out = {}
        for e, c in x.items():
            q, r = divmod(c, k)
            if r:
                raise NonIntegral(f"coefficient {c} is not divisible by {k}")
            out[e] = q
        return out

    def total_degree(self, x: dict) -> int:
        if not x:
            return 0
        return max(sum(e) for e in x)

    def leading_term(self, x: dict) -> tuple[tuple[int, ...], int]:
        """Graded-lex largest monomial and its coefficient."""
        e = max(x, key=lambda e: (sum(e), e))
        return e, x[e]

    def specialize(self, p: dict, assignment: dict, target: CoefficientRing):
        """Image of ``p`` under the ring map sending each variable to its
        assigned value in ``target``.  Every variable that actually occurs
        must be assigned."""
        values = []
        for i, name in enumerate(self.variables):
            if name in assignment:
                values.append(assignment[name])
            else:
                if any(e[i] for e in p):
                    raise UnassignedVariable(f"no value for variable {name}")
                values.append(None)
        acc = target.zero
        for e, c in p.items():
            term = target.of_int(c)
            for i, exp in enumerate(e):
                if exp:
                    term = target.mul(term, target.pow(values[i], exp))
            acc = target.add(acc, term)
        return acc

    def format_element(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for e in sorted(x, key=lambda e: (sum(e), e), reverse=True):
            c = x[e]
            vars_part = "*".join(
                f"{self.variables[i]}^{k}" if k > 1 else self.variables[i]
                for i, k in enumerate(e)
                if k
            )
            if not vars_part:
                parts.append(str(c))
            elif c == 1:
                parts.append(vars_part)
            elif c == -1:
                parts.append(f"-{vars_part}")
            else:
                parts.append(f"{c}*{vars_part}")
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out

    def parse_element(self, s: str):
        raise NotImplementedError("polynomial parsing is not supported")

    def __repr__(self):
        return f"Z[{','.join(self.variables)}]"


ZZ = IntRing()
QQ = RatRing()


def ring_binomial(ring: CoefficientRing, a, k: int):
    """Binomial coefficient a*(a-1)*...*(a-k+1)/k! as a ring element.

    Exact over any binomial ring; the division by i at step i never leaves
    the ring because each partial product is itself a binomial coefficient.
    """
    acc = ring.one
    for i in range(1, k + 1):
        acc = ring.mul(acc, ring.sub(a, ring.of_int(i - 1)))
        acc = ring.exact_div_int(acc, i)
    return acc
