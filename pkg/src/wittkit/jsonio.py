"""Canonical JSON encoding of every wire type.

Numbers travel as decimal strings (fractions as "p/q") so arbitrary
precision survives any JSON parser.  Serialization is deterministic:
sorted keys, compact separators, one trailing newline; re-serializing a
canonical document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .burnside import VirtualCyclicSet
from .crysto import (
    CrystallographicGroup,
    FiniteGroupTable,
    IntegralRepresentation,
    TwoCocycle,
)
from .endo import EndoObject
from .errors import InvalidInputError
from .rings import QQ, ZZ, CoefficientRing, ModRing
from .series import GhostVector, OrbitCoords, UnitSeries


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def ring_to_json(ring: CoefficientRing) -> dict:
    if ring == ZZ:
        return {"kind": "int"}
    if ring == QQ:
        return {"kind": "rat"}
    if isinstance(ring, ModRing):
        return {"kind": "mod", "modulus": str(ring.modulus)}
    raise InvalidInputError(f"ring {ring} has no JSON form")


def ring_from_json(data: dict) -> CoefficientRing:
    kind = data.get("kind")
    if kind == "int":
        return ZZ
    if kind == "rat":
        return QQ
    if kind == "mod":
        try:
            modulus = int(data["modulus"])
        except (KeyError, ValueError) as exc:
            raise InvalidInputError("modular ring needs a decimal modulus") from exc
        if modulus < 1:
            raise InvalidInputError("modulus must be positive")
        return ModRing(modulus)
    raise InvalidInputError(f"unknown ring kind {kind!r}")


def _element_from_str(ring: CoefficientRing, s: str):
    try:
        return ring.parse_element(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad element {s!r} for ring {ring}") from exc


def series_to_json(series: UnitSeries) -> dict:
    r = series.ring
    return {
        "ring": ring_to_json(r),
        "trunc": series.trunc,
        "coeffs": [r.format_element(c) for c in series.coeffs],
    }


def series_from_json(data: dict) -> UnitSeries:
    ring = ring_from_json(data.get("ring", {}))
    trunc = data.get("trunc")
    coeffs = data.get("coeffs")
    if not isinstance(trunc, int) or not isinstance(coeffs, list):
        raise InvalidInputError("series needs integer trunc and a coeffs list")
    if len(coeffs) != trunc:
        raise InvalidInputError(f"expected {trunc} coefficients, got {len(coeffs)}")
    return UnitSeries(ring, trunc, [_element_from_str(ring, c) for c in coeffs])


def ghost_to_json(ghost: GhostVector) -> dict:
    r = ghost.ring
    return {
        "ring": ring_to_json(r),
        "trunc": len(ghost.entries),
        "ghost": [r.format_element(c) for c in ghost.entries],
    }


def ghost_from_json(data: dict) -> GhostVector:
    ring = ring_from_json(data.get("ring", {}))
    entries = data.get("ghost")
    if not isinstance(entries, list):
        raise InvalidInputError("ghost vector needs a ghost list")
    trunc = data.get("trunc", len(entries))
    if trunc != len(entries):
        raise InvalidInputError("trunc disagrees with the ghost list length")
    return GhostVector(ring, [_element_from_str(ring, c) for c in entries])


def orbit_to_json(coords: OrbitCoords) -> dict:
    r = coords.ring
    return {
        "ring": ring_to_json(r),
        "trunc": len(coords.entries),
        "orbit": [r.format_element(c) for c in coords.entries],
    }


def orbit_from_json(data: dict) -> OrbitCoords:
    ring = ring_from_json(data.get("ring", {}))
    entries = data.get("orbit")
    if not isinstance(entries, list):
        raise InvalidInputError("orbit coordinates need an orbit list")
    return OrbitCoords(ring, [_element_from_str(ring, c) for c in entries])


def binom_to_json(ring: CoefficientRing, trunc: int, coords) -> dict:
    return {
        "ring": ring_to_json(ring),
        "trunc": trunc,
        "binom": [ring.format_element(c) for c in coords],
    }


def binom_from_json(data: dict) -> tuple[CoefficientRing, int, list]:
    ring = ring_from_json(data.get("ring", {}))
    entries = data.get("binom")
    if not isinstance(entries, list):
        raise InvalidInputError("binomial coordinates need a binom list")
    trunc = data.get("trunc", len(entries))
    return ring, trunc, [_element_from_str(ring, c) for c in entries]


def matrix_to_json(f: EndoObject) -> dict:
    r = f.ring
    return {
        "ring": ring_to_json(r),
        "dim": f.dim,
        "rows": [[r.format_element(x) for x in row] for row in f.rows],
    }


def matrix_from_json(data: dict) -> EndoObject:
    ring = ring_from_json(data.get("ring", {}))
    dim = data.get("dim")
    rows = data.get("rows")
    if not isinstance(dim, int) or not isinstance(rows, list) or len(rows) != dim:
        raise InvalidInputError("matrix needs dim and a dim x dim rows list")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != dim:
            raise InvalidInputError("matrix rows must all have length dim")
        parsed.append([_element_from_str(ring, x) for x in row])
    return EndoObject(ring, parsed)


def virtual_set_to_json(x: VirtualCyclicSet) -> dict:
    return {"orbits": {str(n): m for n, m in sorted(x.orbits.items())}}


def virtual_set_from_json(data: dict) -> VirtualCyclicSet:
    orbits = data.get("orbits")
    if not isinstance(orbits, dict):
        raise InvalidInputError("virtual set needs an orbits object")
    out = {}
    for key, mult in orbits.items():
        try:
            n = int(key)
            m = int(mult)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError("orbit indices and multiplicities must be integers") from exc
        if n < 1:
            raise InvalidInputError("orbit index must be positive")
        out[n] = out.get(n, 0) + m
    return VirtualCyclicSet(out)


def group_from_json(data: dict) -> CrystallographicGroup:
    """Decode {"order", "table", "rank", "rep", "cocycle", "translations"}.

    Representation keys are element indices as decimal strings; cocycle keys
    are "f,g" pairs.  Missing cocycle entries are zero; translations are
    optional.
    """
    try:
        order = int(data["order"])
        table = data["table"]
        rank = int(data["rank"])
        rep_data = data["rep"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError("group file needs order, table, rank, rep") from exc
    group = FiniteGroupTable(table)
    if group.order != order:
        raise InvalidInputError("stated order disagrees with the table")
    matrices = {}
    for key, mat in rep_data.items():
        matrices[int(key)] = mat
    rep = IntegralRepresentation(group, rank, matrices)
    cocycle_values = {}
    for key, vec in data.get("cocycle", {}).items():
        try:
            f_str, g_str = key.split(",")
            pair = (int(f_str), int(g_str))
        except ValueError as exc:
            raise InvalidInputError(f"bad cocycle key {key!r}") from exc
        cocycle_values[pair] = tuple(int(x) for x in vec)
    cocycle = TwoCocycle(group, rep, cocycle_values)
    translations = None
    if "translations" in data and data["translations"] is not None:
        translations = {}
        for key, vec in data["translations"].items():
            translations[int(key)] = tuple(Fraction(x) for x in vec)
    return CrystallographicGroup(group, rep, cocycle, translations)


def group_to_json(crystal: CrystallographicGroup) -> dict:
    out = {
        "order": crystal.group.order,
        "table": [list(row) for row in crystal.group.table],
        "rank": crystal.rank,
        "rep": {
            str(g): [list(row) for row in crystal.rep.matrices[g]]
            for g in range(crystal.group.order)
        },
        "cocycle": {
            f"{f},{g}": list(v)
            for (f, g), v in sorted(crystal.cocycle.values.items())
            if any(v)
        },
    }
    if crystal.translations is not None:
        out["translations"] = {
            str(g): [
                str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
                for x in crystal.translations[g]
            ]
            for g in range(crystal.group.order)
        }
    return out
