"""The Burnside ring of the infinite cyclic group C.

A virtual finite C-set is a finite formal sum of orbits C/nC with integer
multiplicities.  The fixed-point counts under the subgroups kC are ring
homomorphisms to Z and play the role of ghost components; the assignment
``nC -> 1 - t^n`` embeds the whole ring into the Witt ring of the integers.

Every closed formula here (product, Frobenius, Verschiebung, fixed points)
is certified against :class:`ConcreteCyclicSet`, a brute-force simulation
on actual points: an orbit of size m is Z/m with the generator acting as
+1.

>>> x = VirtualCyclicSet({2: 1})
>>> burnside_mul(x, x)
VirtualCyclicSet({2: 2})
>>> fixed_points(VirtualCyclicSet({3: 1}), 6)
3
"""

from __future__ import annotations

from math import gcd

from .errors import NonIntegral, SizeBound
from .rings import ZZ
from .series import UnitSeries
from .witt import WittVector

CONCRETE_SIZE_BOUND = 10_000


class VirtualCyclicSet:
    """Finitely supported orbit multiplicities n -> m_n (may be negative)."""

    __slots__ = ("orbits",)

    def __init__(self, orbits: dict):
        clean = {}
        for n, m in orbits.items():
            if n < 1:
                raise ValueError("orbit index must be a positive integer")
            if m:
                clean[int(n)] = int(m)
        self.orbits = clean

    @classmethod
    def empty(cls) -> "VirtualCyclicSet":
        return cls({})

    @classmethod
    def orbit(cls, n: int, mult: int = 1) -> "VirtualCyclicSet":
        return cls({n: mult})

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self.orbits.values())

    def __eq__(self, other):
        return isinstance(other, VirtualCyclicSet) and self.orbits == other.orbits

    def __hash__(self):
        return hash(frozenset(self.orbits.items()))

    def __repr__(self):
        inner = dict(sorted(self.orbits.items()))
        return f"VirtualCyclicSet({inner})"

    def __add__(self, other: "VirtualCyclicSet") -> "VirtualCyclicSet":
        out = dict(self.orbits)
        for n, m in other.orbits.items():
            out[n] = out.get(n, 0) + m
        return VirtualCyclicSet(out)

    def __neg__(self) -> "VirtualCyclicSet":
        return VirtualCyclicSet({n: -m for n, m in self.orbits.items()})

    def __sub__(self, other: "VirtualCyclicSet") -> "VirtualCyclicSet":
        return self + (-other)


def fixed_points(x: VirtualCyclicSet, k: int) -> int:
    """Number of kC-fixed points: a point of C/dC is fixed iff d | k,
    so the count is sum_{d | k} d * m_d."""
    if k < 1:
        raise ValueError("fixed-point index must be >= 1")
    return sum(d * m for d, m in x.orbits.items() if k % d == 0)


def fixed_point_vector(x: VirtualCyclicSet, trunc: int) -> tuple[int, ...]:
    return tuple(fixed_points(x, k) for k in range(1, trunc + 1))


def multiplicities_from_fixed_points(counts) -> VirtualCyclicSet:
    """Recover multiplicities from a fixed-point vector by Mobius inversion:
    m_n = (1/n) sum_{d | n} mu(n/d) g_d.

    Raises :class:`NonIntegral` when the vector is not the fixed-point
    vector of any virtual C-set truncated at this length.
    """
    counts = list(counts)
    out = {}
    for n in range(1, len(counts) + 1):
        total = sum(_mobius(n // d) * counts[d - 1] for d in _divisors(n))
        m, r = divmod(total, n)
        if r:
            raise NonIntegral(
                f"fixed-point vector has no integral multiplicity at n={n}"
            )
        if m:
            out[n] = m
    return VirtualCyclicSet(out)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def burnside_mul(x: VirtualCyclicSet, y: VirtualCyclicSet) -> VirtualCyclicSet:
    """Cartesian product, extended bilinearly over
    C/mC x C/nC = gcd(m, n) copies of C/lcm(m, n)."""
    out: dict = {}
    for m, mm in x.orbits.items():
        for n, mn in y.orbits.items():
            g = gcd(m, n)
            key = m * n // g
            out[key] = out.get(key, 0) + g * mm * mn
    return VirtualCyclicSet(out)


def burnside_frobenius(n: int, x: VirtualCyclicSet) -> VirtualCyclicSet:
    """Restriction along nC -> C: F_n(C/mC) = gcd(n,m) copies of
    C/(m/gcd(n,m))C."""
    if n < 1:
        raise ValueError("Frobenius index must be >= 1")
    out: dict = {}
    for m, mult in x.orbits.items():
        g = gcd(n, m)
        key = m // g
        out[key] = out.get(key, 0) + g * mult
    return VirtualCyclicSet(out)


def burnside_verschiebung(n: int, x: VirtualCyclicSet) -> VirtualCyclicSet:
    """Induction along nC -> C: V_n(C/mC) = C/(nm)C."""
    if n < 1:
        raise ValueError("Verschiebung index must be >= 1")
    out: dict = {}
    for m, mult in x.orbits.items():
        out[n * m] = out.get(n * m, 0) + mult
    return VirtualCyclicSet(out)


def embed_to_witt(x: VirtualCyclicSet, trunc: int) -> WittVector:
    """The ring injection into W(Z): C/nC -> 1 - t^n, negative
    multiplicities via the series inverse.  Ghost components of the image
    are the fixed-point counts."""
    acc = UnitSeries.one(ZZ, trunc)
    for n, m in sorted(x.orbits.items()):
        if n <= trunc:
            factor = UnitSeries.one(ZZ, trunc).mul_one_minus(1, n)
        else:
            factor = UnitSeries.one(ZZ, trunc)
        acc = acc * factor.pow(m)
    return WittVector(acc)


class ConcreteCyclicSet:
    """A finite C-set on actual points: the disjoint union of Z/m's with the
    generator acting as +1.  Brute-force oracle for the closed formulas.

    ``points`` are pairs (orbit id, residue); ``step`` maps each point to
    its image under the generator.
    """

    __slots__ = ("sizes", "points", "step")

    def __init__(self, sizes):
        sizes = list(sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("orbit sizes must be positive")
        if sum(sizes) > CONCRETE_SIZE_BOUND:
            raise SizeBound(f"simulation limited to {CONCRETE_SIZE_BOUND} points")
        self.sizes = sizes
        points = []
        step = {}
        for oid, s in enumerate(sizes):
            for r in range(s):
                points.append((oid, r))
                step[(oid, r)] = (oid, (r + 1) % s)
        self.points = points
        self.step = step

    @classmethod
    def from_action(cls, points, step) -> "ConcreteCyclicSet":
        """Rebuild from an arbitrary point set with a bijective action by
        decomposing into cycles."""
        seen = set()
        sizes = []
        for p in points:
            if p in seen:
                continue
            size = 0
            q = p
            while q not in seen:
                seen.add(q)
                size += 1
                q = step[q]
            sizes.append(size)
        return cls(sorted(sizes))

    def orbit_decompose(self) -> VirtualCyclicSet:
        out: dict = {}
        for s in self.sizes:
            out[s] = out.get(s, 0) + 1
        return VirtualCyclicSet(out)

    def fixed_points(self, k: int) -> int:
        """Count points fixed by the k-th power of the generator."""
        count = 0
        for p in self.points:
            q = p
            for _ in range(k):
                q = self.step[q]
            if q == p:
                count += 1
        return count

    def product(self, other: "ConcreteCyclicSet") -> "ConcreteCyclicSet":
        """Cartesian product with the diagonal action."""
        points = [(p, q) for p in self.points for q in other.points]
        step = {
            (p, q): (self.step[p], other.step[q]) for p in self.points for q in other.points
        }
        return ConcreteCyclicSet.from_action(points, step)

    def restrict(self, n: int) -> "ConcreteCyclicSet":
        """Same points, generator acting as the n-th power (restriction to
        nC read back along C = nC)."""
        step = {}
        for p in self.points:
            q = p
            for _ in range(n):
                q = self.step[q]
            step[p] = q
        return ConcreteCyclicSet.from_action(self.points, step)

    def induce(self, n: int) -> "ConcreteCyclicSet":
        """Induction along nC -> C: points {0..n-1} x X, shifting the first
        slot and stepping into X on wraparound."""
        points = [(i, p) for i in range(n) for p in self.points]
        step = {}
        for i in range(n):
            for p in self.points:
                if i + 1 < n:
                    step[(i, p)] = (i + 1, p)
                else:
                    step[(i, p)] = (0, self.step[p])
        return ConcreteCyclicSet.from_action(points, step)


def realize(x: VirtualCyclicSet) -> ConcreteCyclicSet:
    """Concrete model of an effective virtual set."""
    if not x.is_effective():
        raise ValueError("only effective sets have a concrete realization")
    sizes = []
    for n, m in sorted(x.orbits.items()):
        sizes.extend([n] * m)
    return ConcreteCyclicSet(sizes)
