"""wittkit: exact arithmetic in truncated big Witt rings, endomorphism
classes, the Burnside ring of the infinite cyclic group, and a
crystallographic toolkit.

Everything is computed over explicit coefficient rings (integers,
rationals, Z/m, integer polynomials) with arbitrary precision, and every
nontrivial operation is verifiable against ghost-coordinate or brute-force
oracles.
"""

from .burnside import (
    ConcreteCyclicSet,
    VirtualCyclicSet,
    burnside_frobenius,
    burnside_mul,
    burnside_verschiebung,
    embed_to_witt,
    fixed_point_vector,
    fixed_points,
    multiplicities_from_fixed_points,
)
from .crysto import (
    BarComplex,
    CrystallographicGroup,
    FiniteGroupTable,
    IntegralRepresentation,
    TwoCocycle,
    admissible_prime,
    dihedral_plane_group,
    fixed_sublattice,
    lattice_contract,
    pgg_group,
    solve_equivariant_translation,
    solve_expansive,
)
from .endo import (
    EndoObject,
    RationalClass,
    UnitPoly,
    char_poly_rev,
    class_of,
    companion,
    direct_sum,
    endo_frobenius,
    endo_verschiebung,
    tensor_product,
    trace_seq,
)
from .errors import WittkitError
from .rings import QQ, ZZ, CoefficientRing, ModRing, PolyRing
from .series import (
    GhostVector,
    OrbitCoords,
    UnitSeries,
    binomial_power,
    from_binomial_coords,
)
from .symfn import SymFunc, lambda_universal, power_sum, reduce_to_basis
from .witt import (
    WittVector,
    adams,
    adams_via_lambda,
    BinomialLambdaStructure,
    frobenius,
    frobenius_orbit,
    lambda_op,
    mul_ghost,
    mul_orbit,
    mul_universal,
    product_table,
    verschiebung,
)

__version__ = "0.1.0"
