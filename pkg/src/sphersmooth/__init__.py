"""Exact combinatorial smoothness checking for simple spherical varieties.

A simple spherical variety is encoded by a homogeneous spherical datum (the
lattice, spherical roots, parabolic set, and type-a colors of its open
orbit) together with a colored cone.  This package decides local
factoriality and smoothness by exact integer linear algebra, matching
localized data against the catalog of multiplicity-free-space spherical
systems.
"""

from .catalog import (
    ENTRIES,
    ENTRY_COUNT,
    MatchResult,
    embedding_cone,
    instantiate,
    match_component,
    module_datum,
    systems_isomorphic,
)
from .datum import (
    Color,
    ColoredCone,
    HomogeneousSphericalDatum,
    SphericalRoot,
    SphericalSystem,
    decompose,
    full_colors,
    localize,
    product_system,
    s_f,
    spherical_closure,
    spherical_closure_result,
    validate_colored_cone,
    validate_datum,
    valuation_halfspaces,
)
from .diagrams import render_diagram
from .documents import emit_document, emit_system, parse_document
from .rootsystems import (
    RootSystem,
    SimpleRootId,
    Weight,
    admissible_spherical_root,
    cartan_matrix,
    coroot_pairing,
    diagram_automorphisms,
    root_as_weight,
    sub_root_system,
)
from .smoothness import (
    SmoothnessReport,
    ValidationError,
    check_condition1,
    check_factorial,
    is_smooth,
)

__version__ = "0.1.0"
