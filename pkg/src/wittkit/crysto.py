"""Crystallographic-group toolkit.

A crystallographic group of rank n is encoded by explicit data: a finite
holonomy group F (multiplication table), an integral representation of F on
the lattice Z^n (the conjugation action), and a normalized 2-cocycle c with
values in the lattice.  Elements are pairs (a, f) with the multiplication

    (a, f) (b, g) = (a + f.b + c(f, g), fg).

An optional affine realization attaches a rational translation part v_f to
each holonomy element, making (a, f) act on Q^n by x -> f.x + a + v_f;
the data is consistent exactly when the coboundary of v equals c.

Cohomology of F with lattice coefficients is computed from normalized
cochains of the bar resolution and Smith normal forms of the coboundary
matrices.  The solver for s-expansive endomorphisms and their equivariant
affine maps sits on top of that machinery.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    DerivationNotFactoring,
    InvalidInputError,
    InvalidSubgroup,
    NoIntegralSolution,
    PreconditionViolated,
    PrimeNotFound,
    UnsupportedDegree,
)
from . import intlinalg


class FiniteGroupTable:
    """A finite group by its multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.
    Identity, inverses and full associativity are checked on construction.
    """

    __slots__ = ("order", "table", "identity", "inverse")

    def __init__(self, table):
        table = tuple(tuple(row) for row in table)
        q = len(table)
        for row in table:
            if len(row) != q or any(not 0 <= x < q for x in row):
                raise InvalidInputError("multiplication table is not square over range(order)")
        identity = None
        for e in range(q):
            if all(table[e][g] == g and table[g][e] == g for g in range(q)):
                identity = e
                break
        if identity is None:
            raise InvalidInputError("no identity element in the table")
        inverse = [None] * q
        for g in range(q):
            for h in range(q):
                if table[g][h] == identity and table[h][g] == identity:
                    inverse[g] = h
                    break
            if inverse[g] is None:
                raise InvalidInputError(f"element {g} has no inverse")
        for a in range(q):
            for b in range(q):
                ab = table[a][b]
                for c in range(q):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise InvalidInputError("table is not associative")
        self.order = q
        self.table = table
        self.identity = identity
        self.inverse = tuple(inverse)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroupTable":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def klein_four(cls) -> "FiniteGroupTable":
        # indices: 0 = e, 1 = a, 2 = b, 3 = ab
        return cls([[i ^ j for j in range(4)] for i in range(4)])


def _mat_vec_int(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


class IntegralRepresentation:
    """A homomorphism from a finite group into GL_n(Z), given per element."""

    __slots__ = ("group", "rank", "matrices")

    def __init__(self, group: FiniteGroupTable, rank: int, matrices):
        mats = {}
        for g in range(group.order):
            if g not in matrices:
                raise InvalidInputError(f"representation missing element {g}")
            m = tuple(tuple(int(x) for x in row) for row in matrices[g])
            if len(m) != rank or any(len(row) != rank for row in m):
                raise InvalidInputError("representation matrix has wrong shape")
            mats[g] = m
        ident = tuple(
            tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
        )
        if mats[group.identity] != ident:
            raise InvalidInputError("identity must act as the identity matrix")
        for g in range(group.order):
            if intlinalg.abs_det([list(r) for r in mats[g]]) != 1:
                raise InvalidInputError(f"matrix of element {g} is not in GL_n(Z)")
            for h in range(group.order):
                prod = tuple(
                    tuple(
                        sum(mats[g][i][k] * mats[h][k][j] for k in range(rank))
                        for j in range(rank)
                    )
                    for i in range(rank)
                )
                if prod != mats[group.mul(g, h)]:
                    raise InvalidInputError("representation is not multiplicative")
        self.group = group
        self.rank = rank
        self.matrices = mats

    def act(self, g: int, v) -> tuple[int, ...]:
        return _mat_vec_int(self.matrices[g], v)

    def act_frac(self, g: int, v) -> tuple[Fraction, ...]:
        return tuple(
            sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0))
            for row in self.matrices[g]
        )


class TwoCocycle:
    """A normalized lattice-valued 2-cocycle on the holonomy group."""

    __slots__ = ("group", "rank", "values")

    def __init__(self, group: FiniteGroupTable, rep: IntegralRepresentation, values):
        rank = rep.rank
        zero = (0,) * rank
        vals = {}
        for f in range(group.order):
            for g in range(group.order):
                v = tuple(int(x) for x in values.get((f, g), zero))
                if len(v) != rank:
                    raise InvalidInputError("cocycle value has wrong length")
                vals[(f, g)] = v
        e = group.identity
        for f in range(group.order):
            if vals[(e, f)] != zero or vals[(f, e)] != zero:
                raise InvalidInputError("cocycle is not normalized")
        for f in range(group.order):
            for g in range(group.order):
                for h in range(group.order):
                    lhs = _vec_add(vals[(f, g)], vals[(group.mul(f, g), h)])
                    rhs = _vec_add(rep.act(f, vals[(g, h)]), vals[(f, group.mul(g, h))])
                    if lhs != rhs:
                        raise InvalidInputError("cocycle identity fails")
        self.group = group
        self.rank = rank
        self.values = vals

    def __call__(self, f: int, g: int) -> tuple[int, ...]:
        return self.values[(f, g)]


def _vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vec_scale(k, x):
    return tuple(k * a for a in x)


class CrystallographicGroup:
    """Extension data (F, rho, c) with elements (a, f), a in Z^n, f in F."""

    __slots__ = ("group", "rep", "cocycle", "translations")

    def __init__(
        self,
        group: FiniteGroupTable,
        rep: IntegralRepresentation,
        cocycle: TwoCocycle,
        translations=None,
    ):
        if rep.group is not group or cocycle.group is not group:
            raise InvalidInputError("group table mismatch between components")
        self.group = group
        self.rep = rep
        self.cocycle = cocycle
        if translations is not None:
            trans = {}
            for f in range(group.order):
                if f not in translations:
                    raise InvalidInputError(f"translation part missing element {f}")
                v = tuple(Fraction(x) for x in translations[f])
                if len(v) != rep.rank:
                    raise InvalidInputError("translation part has wrong length")
                trans[f] = v
            zero = (Fraction(0),) * rep.rank
            if trans[group.identity] != zero:
                raise InvalidInputError("identity translation part must vanish")
            # consistency: the cocycle is the coboundary of the translation
            # parts, i.e. c(f, g) = v_f + f.v_g - v_fg over Q
            for f in range(group.order):
                for g in range(group.order):
                    lhs = tuple(
                        trans[f][i]
                        + rep.act_frac(f, trans[g])[i]
                        - trans[group.mul(f, g)][i]
                        for i in range(rep.rank)
                    )
                    if lhs != tuple(Fraction(x) for x in cocycle(f, g)):
                        raise InvalidInputError(
                            "translation parts do not realize the cocycle"
                        )
            self.translations = trans
        else:
            self.translations = None

    @property
    def rank(self) -> int:
        return self.rep.rank

    @property
    def holonomy_order(self) -> int:
        return self.group.order

    def identity_element(self):
        return ((0,) * self.rank, self.group.identity)

    def mul(self, x, y):
        a, f = x
        b, g = y
        return (
            _vec_add(_vec_add(a, self.rep.act(f, b)), self.cocycle(f, g)),
            self.group.mul(f, g),
        )

    def affine_action(self, x, point):
        """Action of the element (a, f) on a rational point; requires the
        affine realization."""
        if self.translations is None:
            raise InvalidInputError("group carries no affine realization")
        a, f = x
        moved = self.rep.act_frac(f, point)
        return tuple(
            moved[i] + Fraction(a[i]) + self.translations[f][i]
            for i in range(self.rank)
        )


# -- bar resolution -------------------------------------------------------------


class BarComplex:
    """Normalized bar cochains of a finite group with lattice coefficients,
    plus the chain-level resolution and its contraction for verification.

    Degree-k cochains are maps from k-tuples of non-identity elements to
    Z^n (a normalized cochain vanishes whenever an argument is the
    identity); the flat index of (tuple, coordinate) is tuple_index * n +
    coordinate.
    """

    def __init__(self, group: FiniteGroupTable, rep: IntegralRepresentation):
        self.group = group
        self.rep = rep
        self.rank = rep.rank
        q = group.order
        self._nonid = [g for g in range(q) if g != group.identity]

    def tuples(self, degree: int) -> list[tuple[int, ...]]:
        out = [()]
        for _ in range(degree):
            out = [t + (g,) for t in out for g in self._nonid]
        return out

    def cochain_dim(self, degree: int) -> int:
        return len(self._nonid) ** degree * self.rank

    def coboundary_matrix(self, degree: int) -> list[list[int]]:
        """Matrix of delta^degree: C^degree -> C^(degree+1)."""
        n = self.rank
        src_tuples = self.tuples(degree)
        src_index = {t: i for i, t in enumerate(src_tuples)}
        dst_tuples = self.tuples(degree + 1)
        rows = [[0] * (len(src_tuples) * n) for _ in range(len(dst_tuples) * n)]
        e = self.group.identity

        def add_term(row_base, t, sign, action_g=None):
            # contribution of +-phi(t), with an optional left action
            if any(g == e for g in t):
                return
            col_base = src_index[t] * n
            if action_g is None:
                for i in range(n):
                    rows[row_base + i][col_base + i] += sign
            else:
                m = self.rep.matrices[action_g]
                for i in range(n):
                    for j in range(n):
                        if m[i][j]:
                            rows[row_base + i][col_base + j] += sign * m[i][j]

        for di, dt in enumerate(dst_tuples):
            row_base = di * n
            add_term(row_base, dt[1:], 1, action_g=dt[0])
            sign = -1
            for i in range(degree):
                merged = dt[:i] + (self.group.mul(dt[i], dt[i + 1]),) + dt[i + 2 :]
                add_term(row_base, merged, sign)
                sign = -sign
            add_term(row_base, dt[:-1], sign)
        return rows

    def cochain_to_vector(self, degree: int, values: dict) -> list[int]:
        """Flatten a map tuple -> lattice vector; identity tuples must be 0."""
        n = self.rank
        out = [0] * self.cochain_dim(degree)
        index = {t: i for i, t in enumerate(self.tuples(degree))}
        for t, v in values.items():
            t = tuple(t)
            if any(g == self.group.identity for g in t):
                if any(v):
                    raise InvalidInputError("normalized cochain must vanish on identity tuples")
                continue
            base = index[t] * n
            for i in range(n):
                out[base + i] = int(v[i])
        return out

    def vector_to_cochain(self, degree: int, vec) -> dict:
        n = self.rank
        out = {}
        for i, t in enumerate(self.tuples(degree)):
            v = tuple(vec[i * n : (i + 1) * n])
            if any(v):
                out[t] = v
        return out

    # -- chain level (full bar resolution), for verification ---------------------

    def chain_dim(self, degree: int) -> int:
        return self.group.order ** (degree + 1)

    def chain_tuples(self, degree: int) -> list[tuple[int, ...]]:
        q = self.group.order
        out = [()]
        for _ in range(degree + 1):
            out = [t + (g,) for t in out for g in range(q)]
        return out

    def chain_boundary_matrix(self, degree: int) -> list[list[int]]:
        """Boundary F_degree -> F_(degree-1), alternating face sum."""
        src = self.chain_tuples(degree)
        dst_index = {t: i for i, t in enumerate(self.chain_tuples(degree - 1))}
        rows = [[0] * len(src) for _ in dst_index]
        for ci, t in enumerate(src):
            sign = 1
            for i in range(degree + 1):
                face = t[:i] + t[i + 1 :]
                rows[dst_index[face]][ci] += sign
                sign = -sign
        return rows

    def contraction_matrix(self, degree: int) -> list[list[int]]:
        """h: F_degree -> F_(degree+1), prepending the identity."""
        src = self.chain_tuples(degree)
        dst_index = {t: i for i, t in enumerate(self.chain_tuples(degree + 1))}
        rows = [[0] * len(src) for _ in dst_index]
        for ci, t in enumerate(src):
            rows[dst_index[(self.group.identity,) + t]][ci] = 1
        return rows

    def augmentation_matrix(self) -> list[list[int]]:
        return [[1] * self.group.order]

    # -- cohomology ------------------------------------------------------------

    def cohomology(self, degree: int) -> "CohomologyGroup":
        if degree not in (1, 2):
            raise UnsupportedDegree("cohomology is computed in degrees 1 and 2 only")
        return CohomologyGroup(self, degree)


class CohomologyGroup:
    """H^k of a bar complex: invariant factors plus a coboundary solver."""

    def __init__(self, complex_: BarComplex, degree: int):
        self.complex = complex_
        self.degree = degree
        self._delta_out = complex_.coboundary_matrix(degree)
        # C^0 is the lattice itself (the empty-tuple cochains), so degree 1
        # needs no special case: delta^0(a)(g) = g.a - a
        self._delta_in = complex_.coboundary_matrix(degree - 1)
        kernel = intlinalg.kernel_basis(self._delta_out)
        self._kernel = kernel
        if kernel:
            kernel_cols = [
                [k[i] for k in kernel] for i in range(len(kernel[0]))
            ]
        else:
            kernel_cols = []
        # express each coboundary generator in kernel coordinates
        image_in_kernel = []
        in_cols = len(self._delta_in[0]) if self._delta_in else 0
        for j in range(in_cols):
            col = [row[j] for row in self._delta_in]
            if not any(col):
                continue
            coords = intlinalg.solve(kernel_cols, col) if kernel_cols else None
            if coords is None:
                raise InvalidInputError("coboundary outside the cocycle lattice")
            image_in_kernel.append(coords)
        self.invariant_factors = tuple(
            intlinalg.invariant_factor_cokernel(image_in_kernel, len(kernel))
        )

    def is_cocycle(self, vec) -> bool:
        return not any(intlinalg.mat_vec(self._delta_out, list(vec)))

    def coboundary_preimage(self, vec):
        """A cochain y with delta(y) = vec, or None when the class is
        nonzero."""
        return intlinalg.solve(self._delta_in, list(vec))


# -- s-expansive endomorphisms ----------------------------------------------------


class ExpansiveMap:
    """phi(a, f) = (s a + b(f), f): multiplication by s on the lattice, the
    identity on the holonomy group."""

    __slots__ = ("crystal", "s", "shift")

    def __init__(self, crystal: CrystallographicGroup, s: int, shift: dict):
        self.crystal = crystal
        self.s = s
        self.shift = shift

    def __call__(self, element):
        a, f = element
        return (
            _vec_add(_vec_scale(self.s, a), self.shift[f]),
            f,
        )


def solve_expansive(crystal: CrystallographicGroup, s: int) -> ExpansiveMap:
    """Find an s-expansive endomorphism, solving delta^1(b) = (s-1) c.

    Requires s = 1 mod |F| (which makes the class (s-1)[c] vanish since
    H^2 is |F|-torsion, so the system is integrally solvable).  The
    returned map is re-verified to be a homomorphism on all holonomy pairs
    with small lattice parts.
    """
    q = crystal.holonomy_order
    if s % q != 1 % q:
        raise PreconditionViolated(f"s = {s} is not 1 mod |F| = {q}")
    complex_ = BarComplex(crystal.group, crystal.rep)
    rhs_values = {}
    e = crystal.group.identity
    for f in range(q):
        for g in range(q):
            if f == e or g == e:
                continue
            rhs_values[(f, g)] = _vec_scale(s - 1, crystal.cocycle(f, g))
    rhs = complex_.cochain_to_vector(2, rhs_values)
    delta1 = complex_.coboundary_matrix(1)
    sol = intlinalg.solve(delta1, rhs)
    if sol is None:
        raise NoIntegralSolution(
            "(s-1) times the cocycle is not a coboundary; the group data is invalid"
        )
    shift = {e: (0,) * crystal.rank}
    cochain = complex_.vector_to_cochain(1, sol)
    for f in range(q):
        if f != e:
            shift[f] = cochain.get((f,), (0,) * crystal.rank)
    phi = ExpansiveMap(crystal, s, shift)
    _verify_expansive(crystal, phi)
    return phi


def _verify_expansive(crystal: CrystallographicGroup, phi: ExpansiveMap) -> None:
    n = crystal.rank
    e = crystal.group.identity
    # identity on F and s* on the lattice
    for f in range(crystal.holonomy_order):
        assert phi(((0,) * n, f))[1] == f
    basis = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    for v in basis:
        image = phi((v, e))
        assert image == (_vec_scale(phi.s, v), e)
    # homomorphism on holonomy pairs with lattice parts in {-1, 0, 1}^n
    lattice_parts = [(0,) * n]
    if n:
        lattice_parts = []
        def rec(prefix):
            if len(prefix) == n:
                lattice_parts.append(tuple(prefix))
                return
            for c in (-1, 0, 1):
                rec(prefix + [c])
        rec([])
    for f in range(crystal.holonomy_order):
        for g in range(crystal.holonomy_order):
            for a in lattice_parts:
                for b in lattice_parts:
                    x, y = (a, f), (b, g)
                    if phi(crystal.mul(x, y)) != crystal.mul(phi(x), phi(y)):
                        raise NoIntegralSolution(
                            "solver produced a non-homomorphism; group data is inconsistent"
                        )


def solve_equivariant_translation(
    crystal: CrystallographicGroup, phi: ExpansiveMap
) -> tuple[Fraction, ...]:
    """The translation u making x -> s x + u equivariant for phi.

    The defect d(g) = v_phi(g) - s v_g kills the lattice and factors
    through the holonomy group; averaging it over F produces u with
    d(f) = u - f.u.  u is unique only up to F-invariant vectors; the
    average is returned.
    """
    if crystal.translations is None:
        raise InvalidInputError("group carries no affine realization")
    s = phi.s
    q = crystal.holonomy_order
    n = crystal.rank
    d = {}
    for f in range(q):
        d[f] = tuple(
            Fraction(phi.shift[f][i]) + (1 - s) * crystal.translations[f][i]
            for i in range(n)
        )
    # the derivation law d(fg) = d(f) + f.d(g) must hold; a failure means
    # the defect does not factor through F
    for f in range(q):
        for g in range(q):
            fg = crystal.group.mul(f, g)
            expect = tuple(
                d[f][i] + crystal.rep.act_frac(f, d[g])[i] for i in range(n)
            )
            if d[fg] != expect:
                raise DerivationNotFactoring(
                    "defect is not a derivation on the holonomy group"
                )
    total = [Fraction(0)] * n
    for f in range(q):
        for i in range(n):
            total[i] += d[f][i]
    return tuple(t / q for t in total)


def verify_equivariance(
    crystal: CrystallographicGroup,
    phi: ExpansiveMap,
    u: tuple,
    grid: list | None = None,
) -> bool:
    """Exact check of f(g.x) = phi(g).f(x) for f(x) = s x + u, over every
    holonomy element, every lattice basis vector, and a rational grid."""
    s = phi.s
    n = crystal.rank

    def affine(x):
        return tuple(s * x[i] + u[i] for i in range(n))

    if grid is None:
        grid = []
        steps = [Fraction(i, 3) for i in range(-2, 3)]
        def rec(prefix):
            if len(prefix) == n:
                grid.append(tuple(prefix))
                return
            for c in steps:
                rec(prefix + [c])
        rec([])
    generators = [((0,) * n, f) for f in range(crystal.holonomy_order)]
    basis = [
        (tuple(1 if i == j else 0 for i in range(n)), crystal.group.identity)
        for j in range(n)
    ]
    for g in generators + basis:
        for x in grid:
            lhs = affine(crystal.affine_action(g, x))
            rhs = crystal.affine_action(phi(g), affine(x))
            if lhs != rhs:
                return False
    return True


# -- contracting lattice maps and admissible primes ---------------------------------


def lattice_contract(p: int, generator: tuple[int, int]) -> tuple[int, int]:
    """A nonzero pair (S, T) with |S|, |T| <= sqrt(p) whose kernel mod p is
    the cyclic subgroup generated by ``generator``; the euclidean norm is
    then at most sqrt(2p), the Lipschitz constant of the induced linear map.

    If the subgroup is a coordinate axis, the projection onto the other
    factor does the job.  Otherwise normalize the generator to (1, k) and
    pigeonhole the values s + t k mod p over the box 0 <= s, t <= isqrt(p):
    the box has more than p points, so two collide.  Ties: take the
    lexicographically first pair involved in any collision and its earliest
    partner, and orient the difference so its first nonzero entry is
    positive.
    """
    if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
        raise InvalidInputError(f"{p} is not prime")
    x, y = generator[0] % p, generator[1] % p
    if x == 0 and y == 0:
        raise InvalidSubgroup("generator is zero mod p")
    if x == 0:
        return (1, 0)
    if y == 0:
        return (0, 1)
    k = y * pow(x, -1, p) % p
    bound = isqrt(p)
    buckets: dict[int, list[tuple[int, int]]] = {}
    for s in range(bound + 1):
        for t in range(bound + 1):
            buckets.setdefault((s + t * k) % p, []).append((s, t))
    first = None
    for pairs in buckets.values():
        if len(pairs) >= 2 and (first is None or pairs[0] < first[0]):
            first = (pairs[0], pairs[1])
    assert first is not None  # pigeonhole: (isqrt(p)+1)^2 > p
    (s1, t1), (s2, t2) = first
    big_s, big_t = s2 - s1, t2 - t1
    if big_s < 0 or (big_s == 0 and big_t < 0):
        big_s, big_t = -big_s, -big_t
    return (big_s, big_t)


def admissible_prime(order: int, bound: int) -> int:
    """The smallest prime p <= bound with gcd(p, l) = 1, gcd(p - 1, l) = 1
    and p = 3 mod 4, where l is the odd part of ``order``."""
    if order < 1:
        raise InvalidInputError("group order must be positive")
    if bound < 3:
        raise PrimeNotFound("bound must allow at least the prime 3")
    l = order
    while l % 2 == 0:
        l //= 2
    for p in range(3, bound + 1):
        if p % 4 != 3:
            continue
        if any(p % d == 0 for d in range(2, isqrt(p) + 1)):
            continue
        if gcd(p, l) != 1 or gcd(p - 1, l) != 1:
            continue
        return p
    raise PrimeNotFound(f"no admissible prime up to {bound}")


def fixed_sublattice(rep: IntegralRepresentation) -> list[tuple[int, ...]]:
    """Basis of the sublattice of vectors fixed by the whole group: the
    integer kernel of the stacked matrices rho(f) - 1."""
    n = rep.rank
    stacked = []
    for g in range(rep.group.order):
        m = rep.matrices[g]
        for i in range(n):
            stacked.append([m[i][j] - (1 if i == j else 0) for j in range(n)])
    if not stacked:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return [tuple(v) for v in intlinalg.kernel_basis(stacked)]


# -- worked group constructions -------------------------------------------------------


def split_group(rep: IntegralRepresentation) -> CrystallographicGroup:
    """The semidirect product: zero cocycle, zero translation parts."""
    group = rep.group
    cocycle = TwoCocycle(group, rep, {})
    translations = {
        f: (Fraction(0),) * rep.rank for f in range(group.order)
    }
    return CrystallographicGroup(group, rep, cocycle, translations)


def dihedral_plane_group() -> CrystallographicGroup:
    """Z^2 semidirect Z/2 with the holonomy acting by -1."""
    table = FiniteGroupTable.cyclic(2)
    rep = IntegralRepresentation(
        table, 2, {0: [[1, 0], [0, 1]], 1: [[-1, 0], [0, -1]]}
    )
    return split_group(rep)


def pgg_group() -> CrystallographicGroup:
    """The non-split plane group generated by two perpendicular glide
    reflections; holonomy Z/2 x Z/2, lattice spanned by the squares of the
    glides.

    In lattice coordinates the glides act by diag(-1, 1) and diag(1, -1)
    with translation parts (0, 1/2) and (1/2, 0).
    """
    table = FiniteGroupTable.klein_four()
    e, a, b, ab = 0, 1, 2, 3
    rep = IntegralRepresentation(
        table,
        2,
        {
            e: [[1, 0], [0, 1]],
            a: [[-1, 0], [0, 1]],
            b: [[1, 0], [0, -1]],
            ab: [[-1, 0], [0, -1]],
        },
    )
    cocycle_values = {
        (a, a): (0, 1),
        (b, b): (1, 0),
        (b, a): (1, -1),
        (a, ab): (0, 1),
        (ab, a): (-1, 0),
        (b, ab): (0, -1),
        (ab, b): (-1, 0),
    }
    cocycle = TwoCocycle(table, rep, cocycle_values)
    translations = {
        e: (Fraction(0), Fraction(0)),
        a: (Fraction(0), Fraction(1, 2)),
        b: (Fraction(1, 2), Fraction(0)),
        ab: (Fraction(-1, 2), Fraction(1, 2)),
    }
    return CrystallographicGroup(table, rep, cocycle, translations)
