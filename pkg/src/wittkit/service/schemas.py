"""Request/response models.

These mirror the JSON wire formats one to one, so a document accepted by
the CLI is accepted by the service and vice versa.  All numeric payloads
are decimal strings (fractions as "p/q"); truncations, dimensions and
indices are plain integers.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RingSchema(StrictModel):
    kind: Literal["int", "rat", "mod"]
    modulus: Optional[str] = None


class SeriesSchema(StrictModel):
    ring: RingSchema
    trunc: int
    coeffs: list[str]


class GhostSchema(StrictModel):
    ring: RingSchema
    trunc: int
    ghost: list[str]


class OrbitSchema(StrictModel):
    ring: RingSchema
    trunc: int
    orbit: list[str]


class BinomSchema(StrictModel):
    ring: RingSchema
    trunc: int
    binom: list[str]


class MatrixSchema(StrictModel):
    ring: RingSchema
    dim: int
    rows: list[list[str]]


class VirtualSetSchema(StrictModel):
    orbits: dict[str, int]


class GroupSchema(StrictModel):
    order: int
    table: list[list[int]]
    rank: int
    rep: dict[str, list[list[int]]]
    cocycle: dict[str, list[int]] = {}
    translations: Optional[dict[str, list[str]]] = None


# -- witt requests ---------------------------------------------------------------


class SeriesRequest(StrictModel):
    a: SeriesSchema


class SeriesPairRequest(StrictModel):
    a: SeriesSchema
    b: SeriesSchema


class IndexedSeriesRequest(StrictModel):
    n: int
    a: SeriesSchema


class LambdaRequest(StrictModel):
    n: int
    a: SeriesSchema
    budget: Optional[int] = None


class GhostRequest(StrictModel):
    g: GhostSchema


class OrbitRequest(StrictModel):
    c: OrbitSchema


# -- endo requests ---------------------------------------------------------------


class MatrixRequest(StrictModel):
    m: MatrixSchema


class MatrixPairRequest(StrictModel):
    a: MatrixSchema
    b: MatrixSchema


class TracesRequest(StrictModel):
    m: MatrixSchema
    trunc: int


class CompanionRequest(StrictModel):
    ring: RingSchema
    coeffs: list[str]


# -- burnside requests -------------------------------------------------------------


class VirtualSetRequest(StrictModel):
    x: VirtualSetSchema


class VirtualSetPairRequest(StrictModel):
    x: VirtualSetSchema
    y: VirtualSetSchema


class VirtualSetIndexedRequest(StrictModel):
    n: int
    x: VirtualSetSchema


class VirtualSetTruncRequest(StrictModel):
    trunc: int
    x: VirtualSetSchema


class BurnsideInvertRequest(StrictModel):
    g: GhostSchema


# -- crysto requests ---------------------------------------------------------------


class LatticeRequest(StrictModel):
    p: int
    gx: int
    gy: int


class LatticeResponse(StrictModel):
    S: int
    T: int


class ExpansiveRequest(StrictModel):
    group: GroupSchema
    s: int


class ExpansiveResponse(StrictModel):
    s: int
    shift: dict[str, list[int]]
    u: Optional[list[str]] = None


class CohomologyRequest(StrictModel):
    group: GroupSchema
    degree: int


class CohomologyResponse(StrictModel):
    invariant_factors: list[int]


class PrimeRequest(StrictModel):
    order: int
    bound: int


class PrimeResponse(StrictModel):
    p: int


class FixedRequest(StrictModel):
    group: GroupSchema


class FixedResponse(StrictModel):
    basis: list[list[int]]
