"""Pure request -> response handlers.

Each handler takes a validated request model and returns a response model;
the FastAPI routes and the CLI both dispatch through these, so the two
front ends cannot drift apart.  Domain errors propagate to the caller,
which maps them to HTTP statuses or exit codes.
"""

from __future__ import annotations

from .. import jsonio
from ..errors import InvalidInputError
from ..burnside import (
    burnside_frobenius,
    burnside_mul,
    burnside_verschiebung,
    embed_to_witt,
    fixed_point_vector,
    multiplicities_from_fixed_points,
)
from ..crysto import (
    admissible_prime,
    fixed_sublattice,
    lattice_contract,
    solve_equivariant_translation,
    solve_expansive,
)
from ..endo import char_poly_rev, companion, tensor_product, trace_seq
from ..rings import ZZ
from ..series import GhostVector, UnitSeries
from ..symfn import DEFAULT_LAMBDA_BUDGET
from ..witt import WittVector, frobenius, lambda_op, verschiebung
from . import schemas


def _series_in(s: schemas.SeriesSchema) -> UnitSeries:
    return jsonio.series_from_json(s.model_dump(exclude_none=True))


def _series_out(series: UnitSeries) -> schemas.SeriesSchema:
    return schemas.SeriesSchema(**jsonio.series_to_json(series))


def _ghost_out(ghost: GhostVector) -> schemas.GhostSchema:
    return schemas.GhostSchema(**jsonio.ghost_to_json(ghost))


def _matrix_in(m: schemas.MatrixSchema):
    return jsonio.matrix_from_json(m.model_dump(exclude_none=True))


def _vset_in(x: schemas.VirtualSetSchema):
    return jsonio.virtual_set_from_json(x.model_dump())


def _vset_out(x) -> schemas.VirtualSetSchema:
    return schemas.VirtualSetSchema(**jsonio.virtual_set_to_json(x))


def _group_in(g: schemas.GroupSchema):
    return jsonio.group_from_json(g.model_dump(exclude_none=True))


# -- witt ---------------------------------------------------------------------


def witt_add(req: schemas.SeriesPairRequest) -> schemas.SeriesSchema:
    return _series_out(_series_in(req.a) * _series_in(req.b))


def witt_neg(req: schemas.SeriesRequest) -> schemas.SeriesSchema:
    return _series_out(_series_in(req.a).inv())


def witt_mul(req: schemas.SeriesPairRequest) -> schemas.SeriesSchema:
    prod = WittVector(_series_in(req.a)) * WittVector(_series_in(req.b))
    return _series_out(prod.series)


def witt_ghost(req: schemas.SeriesRequest) -> schemas.GhostSchema:
    return _ghost_out(_series_in(req.a).ghost())


def witt_unghost(req: schemas.GhostRequest) -> schemas.SeriesSchema:
    ghost = jsonio.ghost_from_json(req.g.model_dump(exclude_none=True))
    return _series_out(ghost.to_series())


def witt_orbit(req: schemas.SeriesRequest) -> schemas.OrbitSchema:
    coords = _series_in(req.a).orbit_coords()
    return schemas.OrbitSchema(**jsonio.orbit_to_json(coords))


def witt_unorbit(req: schemas.OrbitRequest) -> schemas.SeriesSchema:
    coords = jsonio.orbit_from_json(req.c.model_dump(exclude_none=True))
    return _series_out(coords.to_series())


def witt_binom(req: schemas.SeriesRequest) -> schemas.BinomSchema:
    series = _series_in(req.a)
    coords = series.binomial_coords()
    return schemas.BinomSchema(
        **jsonio.binom_to_json(series.ring, series.trunc, coords)
    )


def witt_frobenius(req: schemas.IndexedSeriesRequest) -> schemas.SeriesSchema:
    return _series_out(frobenius(req.n, WittVector(_series_in(req.a))).series)


def witt_verschiebung(req: schemas.IndexedSeriesRequest) -> schemas.SeriesSchema:
    return _series_out(verschiebung(req.n, WittVector(_series_in(req.a))).series)


def witt_lambda(req: schemas.LambdaRequest) -> schemas.SeriesSchema:
    budget = req.budget if req.budget is not None else DEFAULT_LAMBDA_BUDGET
    return _series_out(lambda_op(req.n, WittVector(_series_in(req.a)), budget).series)


# -- endo ---------------------------------------------------------------------


def endo_charpoly(req: schemas.MatrixRequest) -> schemas.SeriesSchema:
    f = _matrix_in(req.m)
    poly = char_poly_rev(f)
    trunc = max(f.dim, 1)
    return _series_out(poly.truncate(trunc))


def endo_traces(req: schemas.TracesRequest) -> schemas.GhostSchema:
    if req.trunc < 1:
        raise InvalidInputError("trunc must be >= 1")
    return _ghost_out(trace_seq(_matrix_in(req.m), req.trunc))


def endo_tensor(req: schemas.MatrixPairRequest) -> schemas.MatrixSchema:
    out = tensor_product(_matrix_in(req.a), _matrix_in(req.b))
    return schemas.MatrixSchema(**jsonio.matrix_to_json(out))


def endo_companion(req: schemas.CompanionRequest) -> schemas.MatrixSchema:
    ring = jsonio.ring_from_json(req.ring.model_dump(exclude_none=True))
    coeffs = [jsonio._element_from_str(ring, c) for c in req.coeffs]
    return schemas.MatrixSchema(**jsonio.matrix_to_json(companion(ring, coeffs)))


# -- burnside -------------------------------------------------------------------


def burnside_ghost(req: schemas.VirtualSetTruncRequest) -> schemas.GhostSchema:
    if req.trunc < 1:
        raise InvalidInputError("trunc must be >= 1")
    counts = fixed_point_vector(_vset_in(req.x), req.trunc)
    return _ghost_out(GhostVector(ZZ, counts))


def burnside_mul_handler(req: schemas.VirtualSetPairRequest) -> schemas.VirtualSetSchema:
    return _vset_out(burnside_mul(_vset_in(req.x), _vset_in(req.y)))


def burnside_frobenius_handler(
    req: schemas.VirtualSetIndexedRequest,
) -> schemas.VirtualSetSchema:
    return _vset_out(burnside_frobenius(req.n, _vset_in(req.x)))


def burnside_verschiebung_handler(
    req: schemas.VirtualSetIndexedRequest,
) -> schemas.VirtualSetSchema:
    return _vset_out(burnside_verschiebung(req.n, _vset_in(req.x)))


def burnside_embed(req: schemas.VirtualSetTruncRequest) -> schemas.SeriesSchema:
    if req.trunc < 1:
        raise InvalidInputError("trunc must be >= 1")
    return _series_out(embed_to_witt(_vset_in(req.x), req.trunc).series)


def burnside_invert(req: schemas.BurnsideInvertRequest) -> schemas.VirtualSetSchema:
    ghost = jsonio.ghost_from_json(req.g.model_dump(exclude_none=True))
    if ghost.ring != ZZ:
        raise InvalidInputError("fixed-point vectors live over the integers")
    return _vset_out(multiplicities_from_fixed_points(ghost.entries))


# -- crysto ---------------------------------------------------------------------


def crysto_lattice(req: schemas.LatticeRequest) -> schemas.LatticeResponse:
    s, t = lattice_contract(req.p, (req.gx, req.gy))
    return schemas.LatticeResponse(S=s, T=t)


def crysto_expansive(req: schemas.ExpansiveRequest) -> schemas.ExpansiveResponse:
    crystal = _group_in(req.group)
    phi = solve_expansive(crystal, req.s)
    out_u = None
    if crystal.translations is not None:
        u = solve_equivariant_translation(crystal, phi)
        out_u = [
            str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
            for x in u
        ]
    return schemas.ExpansiveResponse(
        s=req.s,
        shift={str(f): list(v) for f, v in sorted(phi.shift.items())},
        u=out_u,
    )


def crysto_cohomology(req: schemas.CohomologyRequest) -> schemas.CohomologyResponse:
    crystal = _group_in(req.group)
    from ..crysto import BarComplex

    complex_ = BarComplex(crystal.group, crystal.rep)
    h = complex_.cohomology(req.degree)
    return schemas.CohomologyResponse(invariant_factors=list(h.invariant_factors))


def crysto_prime(req: schemas.PrimeRequest) -> schemas.PrimeResponse:
    return schemas.PrimeResponse(p=admissible_prime(req.order, req.bound))


def crysto_fixed(req: schemas.FixedRequest) -> schemas.FixedResponse:
    crystal = _group_in(req.group)
    return schemas.FixedResponse(
        basis=[list(v) for v in fixed_sublattice(crystal.rep)]
    )


# path -> (request model, handler); single source of truth for both fronts
ENDPOINTS = {
    "/witt/add": (schemas.SeriesPairRequest, witt_add),
    "/witt/neg": (schemas.SeriesRequest, witt_neg),
    "/witt/mul": (schemas.SeriesPairRequest, witt_mul),
    "/witt/ghost": (schemas.SeriesRequest, witt_ghost),
    "/witt/unghost": (schemas.GhostRequest, witt_unghost),
    "/witt/orbit": (schemas.SeriesRequest, witt_orbit),
    "/witt/unorbit": (schemas.OrbitRequest, witt_unorbit),
    "/witt/binom": (schemas.SeriesRequest, witt_binom),
    "/witt/frobenius": (schemas.IndexedSeriesRequest, witt_frobenius),
    "/witt/verschiebung": (schemas.IndexedSeriesRequest, witt_verschiebung),
    "/witt/lambda": (schemas.LambdaRequest, witt_lambda),
    "/endo/charpoly": (schemas.MatrixRequest, endo_charpoly),
    "/endo/traces": (schemas.TracesRequest, endo_traces),
    "/endo/tensor": (schemas.MatrixPairRequest, endo_tensor),
    "/endo/companion": (schemas.CompanionRequest, endo_companion),
    "/burnside/ghost": (schemas.VirtualSetTruncRequest, burnside_ghost),
    "/burnside/mul": (schemas.VirtualSetPairRequest, burnside_mul_handler),
    "/burnside/frobenius": (schemas.VirtualSetIndexedRequest, burnside_frobenius_handler),
    "/burnside/verschiebung": (schemas.VirtualSetIndexedRequest, burnside_verschiebung_handler),
    "/burnside/embed": (schemas.VirtualSetTruncRequest, burnside_embed),
    "/burnside/invert": (schemas.BurnsideInvertRequest, burnside_invert),
    "/crysto/lattice": (schemas.LatticeRequest, crysto_lattice),
    "/crysto/expansive": (schemas.ExpansiveRequest, crysto_expansive),
    "/crysto/cohomology": (schemas.CohomologyRequest, crysto_cohomology),
    "/crysto/prime": (schemas.PrimeRequest, crysto_prime),
    "/crysto/fixed": (schemas.FixedRequest, crysto_fixed),
}
