"""The JSON document format for spherical data, colored cones, and
spherical systems.

One versioned schema covers both homogeneous spherical data and spherical
systems (a system is stored in the basis given by its own spherical roots).
All vectors are integer arrays; simple roots are addressed as
"component.position" strings.  The format is lossless: parse(emit(d)) == d.

Schema (JSON object):

    {
      "schema": "sphersmooth-datum-v1",
      "root_system": {"components": [["A", 3], ["C", 2]], "torus_rank": 1},
      "m_basis":  [{"fw": [...], "torus": [...]}, ...],
      "sigma":    [{"coeffs": [...], "m_coords": [...]}, ...],
      "s_p":      ["0.2", ...],
      "d_a":      [{"label": "D1", "rho": [...]}, ...],
      "colored_cone": {"valuation_generators": [[...], ...],
                        "f": ["D1", ...]},          # optional
      "marked":   [0, 2]                             # optional
    }
"""

from __future__ import annotations

import json
from typing import Any

from .datum import (
    ColoredCone,
    HomogeneousSphericalDatum,
    SphericalRoot,
    SphericalSystem,
)
from .rootsystems import RootSystem, Weight, parse_root_id

SCHEMA = "sphersmooth-datum-v1"


class DocumentError(ValueError):
    """A parse or shape error with the JSON path where it happened."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise DocumentError(path, message)


def _int_list(value: Any, path: str) -> tuple[int, ...]:
    _expect(isinstance(value, (list, tuple)), path, "expected an array of integers")
    out = []
    for i, x in enumerate(value):
        _expect(isinstance(x, int) and not isinstance(x, bool), f"{path}[{i}]", "expected an integer")
        out.append(x)
    return tuple(out)


def parse_document(obj: Any):
    """Parse a document into (datum, cone_or_None, marked_or_None)."""
    _expect(isinstance(obj, dict), "$", "expected a JSON object")
    _expect(obj.get("schema") == SCHEMA, "$.schema", f"expected {SCHEMA!r}")

    rs = obj.get("root_system")
    _expect(isinstance(rs, dict), "$.root_system", "expected an object")
    comps = rs.get("components")
    _expect(isinstance(comps, list), "$.root_system.components", "expected an array")
    parsed = []
    for i, comp in enumerate(comps):
        path = f"$.root_system.components[{i}]"
        _expect(
            isinstance(comp, (list, tuple)) and len(comp) == 2 and isinstance(comp[0], str),
            path,
            'expected ["letter", rank]',
        )
        _expect(isinstance(comp[1], int), f"{path}[1]", "expected an integer rank")
        parsed.append((comp[0], comp[1]))
    torus = rs.get("torus_rank", 0)
    _expect(isinstance(torus, int) and torus >= 0, "$.root_system.torus_rank", "expected a non-negative integer")
    try:
        system = RootSystem(tuple(parsed), torus)
    except ValueError as exc:
        raise DocumentError("$.root_system", str(exc))

    basis = []
    raw_basis = obj.get("m_basis", [])
    _expect(isinstance(raw_basis, list), "$.m_basis", "expected an array")
    for i, entry in enumerate(raw_basis):
        path = f"$.m_basis[{i}]"
        _expect(isinstance(entry, dict), path, "expected an object")
        fw = _int_list(entry.get("fw", []), f"{path}.fw")
        tor = _int_list(entry.get("torus", []), f"{path}.torus")
        _expect(len(fw) == system.rank, f"{path}.fw", f"expected length {system.rank}")
        _expect(len(tor) == system.torus_rank, f"{path}.torus", f"expected length {system.torus_rank}")
        basis.append(Weight(fw, tor))

    sigma = []
    raw_sigma = obj.get("sigma", [])
    _expect(isinstance(raw_sigma, list), "$.sigma", "expected an array")
    for i, entry in enumerate(raw_sigma):
        path = f"$.sigma[{i}]"
        _expect(isinstance(entry, dict), path, "expected an object")
        coeffs = _int_list(entry.get("coeffs", []), f"{path}.coeffs")
        mc = _int_list(entry.get("m_coords", []), f"{path}.m_coords")
        _expect(len(coeffs) == system.rank, f"{path}.coeffs", f"expected length {system.rank}")
        _expect(len(mc) == len(basis), f"{path}.m_coords", f"expected length {len(basis)}")
        sigma.append(SphericalRoot(coeffs, mc))

    sp = []
    raw_sp = obj.get("s_p", [])
    _expect(isinstance(raw_sp, list), "$.s_p", "expected an array")
    for i, s in enumerate(raw_sp):
        path = f"$.s_p[{i}]"
        _expect(isinstance(s, str), path, "expected a 'component.position' string")
        try:
            rid = parse_root_id(s)
            system.flat_index(rid)
        except ValueError as exc:
            raise DocumentError(path, str(exc))
        sp.append(rid)

    da = []
    raw_da = obj.get("d_a", [])
    _expect(isinstance(raw_da, list), "$.d_a", "expected an array")
    for i, entry in enumerate(raw_da):
        path = f"$.d_a[{i}]"
        _expect(isinstance(entry, dict), path, "expected an object")
        label = entry.get("label")
        _expect(isinstance(label, str) and label, f"{path}.label", "expected a nonempty string")
        rho = _int_list(entry.get("rho", []), f"{path}.rho")
        _expect(len(rho) == len(basis), f"{path}.rho", f"expected length {len(basis)}")
        da.append((label, rho))

    datum = HomogeneousSphericalDatum(system, tuple(basis), tuple(sigma), frozenset(sp), tuple(da))

    cone = None
    if "colored_cone" in obj and obj["colored_cone"] is not None:
        raw = obj["colored_cone"]
        _expect(isinstance(raw, dict), "$.colored_cone", "expected an object")
        gens = []
        raw_gens = raw.get("valuation_generators", [])
        _expect(isinstance(raw_gens, list), "$.colored_cone.valuation_generators", "expected an array")
        for i, g in enumerate(raw_gens):
            v = _int_list(g, f"$.colored_cone.valuation_generators[{i}]")
            _expect(
                len(v) == len(basis),
                f"$.colored_cone.valuation_generators[{i}]",
                f"expected length {len(basis)}",
            )
            gens.append(v)
        raw_f = raw.get("f", [])
        _expect(isinstance(raw_f, list), "$.colored_cone.f", "expected an array of labels")
        for i, lab in enumerate(raw_f):
            _expect(isinstance(lab, str), f"$.colored_cone.f[{i}]", "expected a string")
        cone = ColoredCone(tuple(gens), frozenset(raw_f))

    marked = None
    if "marked" in obj and obj["marked"] is not None:
        marked = frozenset(_int_list(obj["marked"], "$.marked"))
        for i in sorted(marked):
            _expect(0 <= i < len(sigma), "$.marked", f"root index {i} out of range")

    return datum, cone, marked


def emit_document(
    d: HomogeneousSphericalDatum,
    cone: ColoredCone | None = None,
    marked=None,
) -> dict:
    obj = {
        "schema": SCHEMA,
        "root_system": {
            "components": [[l, r] for l, r in d.root_system.components],
            "torus_rank": d.root_system.torus_rank,
        },
        "m_basis": [
            {"fw": list(chi.fw_coords), "torus": list(chi.torus_coords)} for chi in d.m_basis
        ],
        "sigma": [
            {"coeffs": list(g.coeffs), "m_coords": list(g.m_coords)} for g in d.sigma
        ],
        "s_p": [str(a) for a in sorted(d.s_p)],
        "d_a": [{"label": lab, "rho": list(rho)} for lab, rho in d.d_a],
    }
    if cone is not None:
        obj["colored_cone"] = {
            "valuation_generators": [list(g) for g in cone.valuation_generators],
            "f": sorted(cone.f_labels),
        }
    if marked is not None:
        obj["marked"] = sorted(marked)
    return obj


def emit_system(s: SphericalSystem, marked=None) -> dict:
    return emit_document(s.to_datum(), marked=marked)


def system_from_document(obj: Any) -> tuple[SphericalSystem, frozenset | None]:
    """Read a document as a spherical system: the stored basis must be the
    roots themselves (M = span of sigma)."""
    datum, _, marked = parse_document(obj)
    n = len(datum.sigma)
    for i, g in enumerate(datum.sigma):
        _expect(
            g.m_coords == tuple(1 if j == i else 0 for j in range(n)),
            f"$.sigma[{i}].m_coords",
            "a spherical system must be written in the basis of its own roots",
        )
    s = SphericalSystem(
        datum.root_system,
        tuple(g.coeffs for g in datum.sigma),
        datum.s_p,
        datum.d_a,
    )
    return s, marked


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON: {exc}")
