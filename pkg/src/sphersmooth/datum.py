"""Homogeneous spherical data, colors, colored cones, and the structural
transforms the smoothness criterion needs: full-color reconstruction,
localization, spherical closure, and decomposition into indecomposable
components.

A datum is the combinatorial quadruple (M, Sigma, S^p, D^a) over a root
system: a basis of the weight lattice M, the spherical roots (stored both
as simple-root coefficients and in M-coordinates), the parabolic set S^p,
and the type-a colors with their functionals on M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .lattice import (
    IntVector,
    RationalCone,
    cone_contains,
    cones_meet_interior,
    dot,
    gcd_list,
    matrix,
    smith_normal_form,
    solve_lp,
    vector,
)
from .rootsystems import (
    RootSystem,
    SimpleRootId,
    Weight,
    coroot_pairing,
    coroot_pairing_root,
    root_as_weight,
    spherical_root_shapes,
    sub_root_system,
    support,
)


class SphericalRoot(NamedTuple):
    coeffs: IntVector  # over the simple roots, concatenated per component
    m_coords: IntVector  # over the m_basis


@dataclass(frozen=True)
class HomogeneousSphericalDatum:
    root_system: RootSystem
    m_basis: tuple[Weight, ...]
    sigma: tuple[SphericalRoot, ...]
    s_p: frozenset[SimpleRootId]
    d_a: tuple[tuple[str, IntVector], ...]  # (label, rho in N-coordinates)

    @property
    def m_rank(self) -> int:
        return len(self.m_basis)

    def simple_sigma(self) -> dict[SimpleRootId, int]:
        """Spherical roots that are simple roots: root id -> index in sigma."""
        out = {}
        roots = self.root_system.simple_roots()
        for i, g in enumerate(self.sigma):
            supp = [j for j, c in enumerate(g.coeffs) if c]
            if len(supp) == 1 and g.coeffs[supp[0]] == 1:
                out[roots[supp[0]]] = i
        return out

    def doubled_simple_sigma(self) -> dict[SimpleRootId, int]:
        """Roots of the form 2*alpha: root id -> index in sigma."""
        out = {}
        roots = self.root_system.simple_roots()
        for i, g in enumerate(self.sigma):
            supp = [j for j, c in enumerate(g.coeffs) if c]
            if len(supp) == 1 and g.coeffs[supp[0]] == 2:
                out[roots[supp[0]]] = i
        return out

    def coroot_on_m(self, a: SimpleRootId) -> IntVector:
        """The functional <a-coroot, .> restricted to M, in the dual basis."""
        return tuple(coroot_pairing(self.root_system, a, chi) for chi in self.m_basis)

    def pair_rho_root(self, rho: IntVector, i: int) -> int:
        return dot(rho, self.sigma[i].m_coords)


class Finding(NamedTuple):
    code: str
    message: str


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)

    def add(self, code: str, message: str):
        self.findings.append(Finding(code, message))

    @property
    def ok(self) -> bool:
        return not self.findings

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(f"[{f.code}] {f.message}" for f in self.findings)


def validate_datum(d: HomogeneousSphericalDatum) -> ValidationReport:
    """Check the computable axioms of a homogeneous spherical datum."""
    rep = ValidationReport()
    r = d.root_system
    roots = r.simple_roots()
    rank = r.rank

    for chi in d.m_basis:
        if len(chi.fw_coords) != rank or len(chi.torus_coords) != r.torus_rank:
            rep.add("basis-shape", f"basis weight {chi} does not match {r}")
            return rep
    labels = [lab for lab, _ in d.d_a]
    if len(set(labels)) != len(labels):
        rep.add("label-duplicate", "duplicate color labels in D^a")
    for lab, rho in d.d_a:
        if len(rho) != d.m_rank:
            rep.add("rho-shape", f"rho({lab}) has wrong length")
            return rep
    for g in d.sigma:
        if len(g.coeffs) != rank or len(g.m_coords) != d.m_rank:
            rep.add("sigma-shape", f"spherical root {g} has wrong shape")
            return rep
    for a in d.s_p:
        try:
            r.flat_index(a)
        except ValueError:
            rep.add("sp-unknown", f"S^p entry {a} is not a simple root of {r}")
            return rep

    # each root's M-coordinates must reproduce its weight
    for i, g in enumerate(d.sigma):
        w = root_as_weight(r, g.coeffs)
        acc = None
        for c, chi in zip(g.m_coords, d.m_basis):
            acc = chi.scaled(c) if acc is None else acc + chi.scaled(c)
        if acc is None:
            acc = Weight((0,) * rank, (0,) * r.torus_rank)
        if acc != w:
            rep.add(
                "sigma-integrality",
                f"spherical root #{i} {g.coeffs}: M-coordinates do not reproduce its weight",
            )

    # linear independence and primitivity
    if d.sigma:
        mat = matrix([g.m_coords for g in d.sigma])
        diag = smith_normal_form(mat).diag
        if sum(1 for x in diag if x != 0) < len(d.sigma):
            rep.add("sigma-dependent", "spherical roots are linearly dependent in M")
        for i, g in enumerate(d.sigma):
            if gcd_list(g.m_coords) != 1:
                rep.add("sigma-primitive", f"spherical root #{i} {g.coeffs} is not primitive in M")

    # S^p pairs to zero with every basis weight
    for a in sorted(d.s_p):
        bad = [j for j, chi in enumerate(d.m_basis) if coroot_pairing(r, a, chi) != 0]
        if bad:
            rep.add("sp-pairing", f"{a} in S^p pairs nonzero with basis weight #{bad[0]}")

    simple = d.simple_sigma()
    # every d_a color pairs 1 with some simple spherical root
    pairs: dict[SimpleRootId, list[str]] = {a: [] for a in simple}
    for lab, rho in d.d_a:
        claimed = [a for a, i in simple.items() if d.pair_rho_root(rho, i) == 1]
        if not claimed:
            rep.add("da-unclaimed", f"type-a color {lab} pairs 1 with no simple spherical root")
        for a in claimed:
            pairs[a].append(lab)

    # each simple spherical root has exactly two colors, summing to the coroot
    rho_of = dict(d.d_a)
    for a, i in sorted(simple.items()):
        labs = pairs.get(a, [])
        if len(labs) != 2:
            rep.add(
                "da-pair-count",
                f"simple spherical root {a} has {len(labs)} type-a colors pairing 1 (need 2)",
            )
            continue
        total = tuple(x + y for x, y in zip(rho_of[labs[0]], rho_of[labs[1]]))
        if total != d.coroot_on_m(a):
            rep.add(
                "da-sum-rule",
                f"colors {labs[0]}, {labs[1]} of {a} do not sum to the coroot on M",
            )

    # type-a pairing bound: <rho(D), gamma> <= 1, equality only on the own pair
    for lab, rho in d.d_a:
        for i, g in enumerate(d.sigma):
            v = d.pair_rho_root(rho, i)
            if v > 1:
                rep.add("da-bound", f"<rho({lab}), sigma#{i}> = {v} > 1")
            elif v == 1:
                a = next((b for b, j in simple.items() if j == i), None)
                if a is None:
                    rep.add("da-bound", f"<rho({lab}), sigma#{i}> = 1 but root #{i} is not simple")

    # 2a integrality: half the coroot must be integral on M
    for a, i in sorted(d.doubled_simple_sigma().items()):
        if any(x % 2 for x in d.coroot_on_m(a)):
            rep.add("2a-integrality", f"2*{a} in Sigma but half its coroot is not integral on M")

    # shape admissibility with the S^p pattern of each root
    for i, g in enumerate(d.sigma):
        shapes = spherical_root_shapes(r, g.coeffs)
        if not shapes:
            rep.add("sigma-shape-reject", f"spherical root #{i} {g.coeffs} matches no admissible shape")
            continue
        supp = set(support(r, g.coeffs))
        inter = frozenset(d.s_p & supp)
        if not any(s.sp_required <= inter <= s.sp_allowed for s in shapes):
            rep.add(
                "sigma-sp-compat",
                f"spherical root #{i} {g.coeffs}: S^p within its support is {sorted(inter)}, "
                f"compatible with none of its shape readings",
            )

    # identified type-b colors need equal functionals
    simple_set = set(simple)
    for g in d.sigma:
        supp = support(r, g.coeffs)
        if len(supp) == 2 and all(g.coeffs[r.flat_index(v)] == 1 for v in supp):
            a, b = supp
            if a in simple_set or b in simple_set:
                continue
            if coroot_pairing_root(r, a, b) == 0 and d.coroot_on_m(a) != d.coroot_on_m(b):
                rep.add(
                    "b-identification",
                    f"pair root {a}+{b}: the identified type-b color has inconsistent functionals",
                )
    return rep


# ---------------------------------------------------------------------------
# Colors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Color:
    label: str
    kind: str  # "a", "2a" or "b"
    rho: IntVector
    sigma_set: frozenset[SimpleRootId]


def full_colors(d: HomogeneousSphericalDatum) -> tuple[Color, ...]:
    """Reconstruct the full color set from the datum.

    Type-a colors are the stored D^a elements; a root with 2*alpha in Sigma
    carries one color with half the coroot; every other moved root carries
    rho = coroot restricted to M, where two such colors coincide exactly
    when the two roots are orthogonal and their sum is a spherical root.
    """
    r = d.root_system
    simple = d.simple_sigma()
    doubled = d.doubled_simple_sigma()
    moved = [a for a in r.simple_roots() if a not in d.s_p]

    # Lenient reconstruction: count mismatches are validation findings, not
    # hard errors here, so diagnostics can still run on perturbed input.
    a_colors: dict[str, set[SimpleRootId]] = {lab: set() for lab, _ in d.d_a}
    rho_of = dict(d.d_a)
    b_roots = []
    for a in moved:
        if a in simple:
            claimed = [lab for lab, rho in d.d_a if d.pair_rho_root(rho, simple[a]) == 1]
            for lab in claimed:
                a_colors[lab].add(a)
        elif a in doubled:
            pass
        else:
            b_roots.append(a)

    colors = [Color(lab, "a", rho_of[lab], frozenset(a_colors[lab])) for lab, _ in d.d_a]

    for a in sorted(doubled):
        cor = d.coroot_on_m(a)
        if any(x % 2 for x in cor):
            raise ValueError(f"half coroot of {a} is not integral on M")
        colors.append(Color(f"2a({a})", "2a", tuple(x // 2 for x in cor), frozenset({a})))

    # union-find over the identification rule for type-b colors
    pair_sums = set()
    for g in d.sigma:
        supp = support(r, g.coeffs)
        if len(supp) == 2:
            a, b = supp
            if (
                g.coeffs[r.flat_index(a)] == 1
                and g.coeffs[r.flat_index(b)] == 1
                and coroot_pairing_root(r, a, b) == 0
            ):
                pair_sums.add(frozenset((a, b)))
    parent = {a: a for a in b_roots}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for pair in pair_sums:
        a, b = sorted(pair)
        if a in parent and b in parent:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    classes: dict[SimpleRootId, list[SimpleRootId]] = {}
    for a in b_roots:
        classes.setdefault(find(a), []).append(a)
    for rep_root in sorted(classes):
        members = sorted(classes[rep_root])
        rhos = {d.coroot_on_m(a) for a in members}
        if len(rhos) != 1:
            raise ValueError(
                f"identified type-b colors {members} have different functionals on M"
            )
        colors.append(Color(f"b({rep_root})", "b", rhos.pop(), frozenset(members)))
    return tuple(colors)


def colors_moved_by(colors: Iterable[Color], a: SimpleRootId) -> list[Color]:
    return [c for c in colors if a in c.sigma_set]


# ---------------------------------------------------------------------------
# Colored cones.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColoredCone:
    valuation_generators: tuple[IntVector, ...]
    f_labels: frozenset[str]


def valuation_halfspaces(d: HomogeneousSphericalDatum) -> tuple[IntVector, ...]:
    """The valuation cone is cut out by <., gamma> <= 0 over these vectors."""
    return tuple(g.m_coords for g in d.sigma)


def cone_generators(d: HomogeneousSphericalDatum, c: ColoredCone):
    """All generators of the cone: rho(F) plus the valuation generators."""
    colors = {col.label: col for col in full_colors(d)}
    missing = sorted(set(c.f_labels) - set(colors))
    if missing:
        raise ValueError(f"unknown color labels in F: {missing}")
    rhos = [colors[lab].rho for lab in sorted(c.f_labels)]
    return tuple(vector(v) for v in c.valuation_generators) + tuple(rhos)


def validate_colored_cone(
    d: HomogeneousSphericalDatum, c: ColoredCone
) -> ValidationReport:
    rep = ValidationReport()
    try:
        gens = cone_generators(d, c)
    except ValueError as exc:
        rep.add("cone-labels", str(exc))
        return rep
    halfspaces = valuation_halfspaces(d)
    for g in c.valuation_generators:
        if len(g) != d.m_rank:
            rep.add("cone-shape", f"generator {g} has wrong length")
            return rep
        bad = [h for h in halfspaces if dot(g, h) > 0]
        if bad:
            rep.add(
                "cone-valuation",
                f"generator {g} is outside the valuation cone (violates <., {bad[0]}> <= 0)",
            )
    the_cone = RationalCone(matrix(gens), d.m_rank)
    if not cones_meet_interior(the_cone, halfspaces):
        rep.add("cone-interior", "the relative interior of C misses the valuation cone")
    # strict convexity: no nontrivial non-negative combination of nonzero
    # generators vanishes
    nz = [g for g in gens if any(x != 0 for x in g)]
    if nz:
        k = len(nz)
        a_eq = [[g[j] for g in nz] for j in range(d.m_rank)]
        b_eq = [0] * d.m_rank
        a_ub = [[1 if i == t else 0 for i in range(k)] for t in range(k)]
        b_ub = [1] * k
        status, val = solve_lp([1] * k, a_ub, b_ub, a_eq, b_eq)
        if status == "optimal" and val > 0:
            rep.add("cone-strict", "C contains a line (not strictly convex)")
    colors = {col.label: col for col in full_colors(d)}
    for lab in sorted(c.f_labels):
        if all(x == 0 for x in colors[lab].rho):
            rep.add("cone-zero-color", f"rho({lab}) = 0 lies in F")
    return rep


# ---------------------------------------------------------------------------
# S_F and localization.
# ---------------------------------------------------------------------------


def s_f(d: HomogeneousSphericalDatum, f_labels: Iterable[str]) -> frozenset[SimpleRootId]:
    """{alpha : D(alpha) included in F} = S minus the union of sigma-sets of
    colors outside F."""
    f_labels = set(f_labels)
    colors = full_colors(d)
    unknown = f_labels - {c.label for c in colors}
    if unknown:
        raise ValueError(f"unknown color labels: {sorted(unknown)}")
    out = set(d.root_system.simple_roots())
    for c in colors:
        if c.label not in f_labels:
            out -= c.sigma_set
    return frozenset(out)


def localize(d: HomogeneousSphericalDatum, s_star: Iterable[SimpleRootId]):
    """Localization at a subset of simple roots.

    Keeps M; keeps the spherical roots supported inside s_star (re-indexed to
    the sub-root-system), intersects S^p, and keeps the type-a colors whose
    moving set meets s_star.  Returns (datum, relabeling).
    """
    s_star = set(s_star)
    r = d.root_system
    sub, relabel = sub_root_system(r, s_star)
    new_sigma = []
    for g in d.sigma:
        supp = support(r, g.coeffs)
        if all(v in s_star for v in supp):
            coeffs = [0] * sub.rank
            for v in supp:
                coeffs[sub.flat_index(relabel[v])] = g.coeffs[r.flat_index(v)]
            new_sigma.append(SphericalRoot(tuple(coeffs), g.m_coords))
    new_sp = frozenset(relabel[a] for a in d.s_p & s_star)
    simple = d.simple_sigma()
    new_da = []
    for lab, rho in d.d_a:
        moving = {a for a, i in simple.items() if d.pair_rho_root(rho, i) == 1}
        if moving & s_star:
            new_da.append((lab, rho))
    # basis weights restricted to the sub-root-system coordinates
    new_basis = []
    for chi in d.m_basis:
        fw = [0] * sub.rank
        for old, new in relabel.items():
            fw[sub.flat_index(new)] = chi.fw_coords[r.flat_index(old)]
        new_basis.append(Weight(tuple(fw), chi.torus_coords))
    out = HomogeneousSphericalDatum(
        sub, tuple(new_basis), tuple(new_sigma), new_sp, tuple(new_da)
    )
    return out, relabel


# ---------------------------------------------------------------------------
# Spherical systems, closure, decomposition.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SphericalSystem:
    """Spherically closed datum with M = span_Z Sigma.

    Colors of D^a are stored by their pairing vectors against sigma."""

    root_system: RootSystem
    sigma: tuple[IntVector, ...]
    s_p: frozenset[SimpleRootId]
    d_a: tuple[tuple[str, IntVector], ...]

    def to_datum(self) -> HomogeneousSphericalDatum:
        r = self.root_system
        basis = tuple(root_as_weight(r, g) for g in self.sigma)
        n = len(self.sigma)
        sigma = tuple(
            SphericalRoot(g, tuple(1 if j == i else 0 for j in range(n)))
            for i, g in enumerate(self.sigma)
        )
        return HomogeneousSphericalDatum(r, basis, sigma, self.s_p, self.d_a)


def validate_system(s: SphericalSystem) -> ValidationReport:
    return validate_datum(s.to_datum())


class ClosureResult(NamedTuple):
    system: SphericalSystem
    m_coords: tuple[IntVector, ...]  # closure roots in the original M
    doubled: frozenset[int]  # indices of roots replaced by their doubles


def _closure_candidate_ok(d: HomogeneousSphericalDatum, idx: int) -> bool:
    """Whether doubling root idx keeps the quadruple a spherical system."""
    r = d.root_system
    g = d.sigma[idx]
    shapes = spherical_root_shapes(r, g.coeffs)
    if not any(s.doubled is not None for s in shapes):
        return False
    sigma = [list(x.coeffs) for x in d.sigma]
    sigma[idx] = [2 * c for c in sigma[idx]]
    da = []
    for lab, rho in d.d_a:
        pairings = [d.pair_rho_root(rho, i) * (2 if i == idx else 1) for i in range(len(d.sigma))]
        da.append((lab, tuple(pairings)))
    candidate = SphericalSystem(
        r, tuple(tuple(x) for x in sigma), d.s_p, tuple(da)
    )
    return validate_system(candidate).ok


def spherical_closure_result(d: HomogeneousSphericalDatum) -> ClosureResult:
    """Replace each spherical root independently by its double when the
    doubled quadruple is still a homogeneous spherical datum."""
    doubled = frozenset(
        i for i in range(len(d.sigma)) if _closure_candidate_ok(d, i)
    )
    sigma = tuple(
        tuple((2 if i in doubled else 1) * c for c in g.coeffs)
        for i, g in enumerate(d.sigma)
    )
    m_coords = tuple(
        tuple((2 if i in doubled else 1) * c for c in g.m_coords)
        for i, g in enumerate(d.sigma)
    )
    da = []
    for lab, rho in d.d_a:
        da.append((lab, tuple(dot(rho, mc) for mc in m_coords)))
    system = SphericalSystem(d.root_system, sigma, d.s_p, tuple(da))
    return ClosureResult(system, m_coords, doubled)


def spherical_closure(d: HomogeneousSphericalDatum) -> SphericalSystem:
    return spherical_closure_result(d).system


class SystemComponent(NamedTuple):
    system: SphericalSystem
    root_indices: tuple[int, ...]  # indices into the parent system's sigma
    vertex_map: dict  # parent SimpleRootId -> component SimpleRootId


def decompose(s: SphericalSystem) -> tuple[SystemComponent, ...]:
    """Finest product decomposition: connected components of the linkage
    graph on Dynkin components (root supports, color slots, and nonzero
    color pairings may not cross parts)."""
    r = s.root_system
    ncomp = len(r.components)
    if ncomp == 0:
        return ()
    parent = list(range(ncomp))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    roots = r.simple_roots()

    def comps_of_root(g):
        return {roots[j].component for j, c in enumerate(g) if c}

    for g in s.sigma:
        cs = sorted(comps_of_root(g))
        for other in cs[1:]:
            union(cs[0], other)
    datum = s.to_datum()
    simple = datum.simple_sigma()
    for lab, pair in s.d_a:
        slots = {a.component for a, i in simple.items() if pair[i] == 1}
        hit = set(slots)
        for i, v in enumerate(pair):
            if v != 0:
                hit |= comps_of_root(s.sigma[i])
        hit = sorted(hit)
        for other in hit[1:]:
            union(hit[0], other)

    groups: dict[int, list[int]] = {}
    for ci in range(ncomp):
        groups.setdefault(find(ci), []).append(ci)

    out = []
    for key in sorted(groups):
        part = groups[key]
        verts = [a for a in roots if a.component in part]
        sub, relabel = sub_root_system(r, verts)
        sub = RootSystem(sub.components, 0)
        root_idx = [i for i, g in enumerate(s.sigma) if comps_of_root(g) <= set(part)]
        sigma = []
        for i in root_idx:
            coeffs = [0] * sub.rank
            for j, c in enumerate(s.sigma[i]):
                if c:
                    coeffs[sub.flat_index(relabel[roots[j]])] = c
            sigma.append(tuple(coeffs))
        sp = frozenset(relabel[a] for a in s.s_p if a.component in part)
        da = []
        for lab, pair in s.d_a:
            slots = {a for a, i in simple.items() if pair[i] == 1}
            if any(a.component in part for a in slots):
                da.append((lab, tuple(pair[i] for i in root_idx)))
        out.append(
            SystemComponent(
                SphericalSystem(sub, tuple(sigma), sp, tuple(da)),
                tuple(root_idx),
                {a: relabel[a] for a in verts},
            )
        )
    return tuple(out)


def product_system(parts: Iterable[SphericalSystem]) -> SphericalSystem:
    """Product of spherical systems: disjoint union with zero cross-pairings."""
    parts = list(parts)
    sigma = []
    sp = set()
    da = []
    total_roots = sum(len(p.sigma) for p in parts)
    all_comps = []
    for p in parts:
        all_comps.extend(p.root_system.components)
    big = RootSystem(tuple(all_comps), 0)
    comp_off = 0
    root_off = 0
    rank_off = 0
    for p in parts:
        prank = p.root_system.rank
        for g in p.sigma:
            sigma.append((0,) * rank_off + tuple(g) + (0,) * (big.rank - rank_off - prank))
        for a in p.s_p:
            sp.add(SimpleRootId(a.component + comp_off, a.position))
        for lab, pair in p.d_a:
            full = [0] * total_roots
            for i, v in enumerate(pair):
                full[root_off + i] = v
            da.append((f"{lab}#{comp_off}", tuple(full)))
        comp_off += len(p.root_system.components)
        root_off += len(p.sigma)
        rank_off += prank
    return SphericalSystem(big, tuple(sigma), frozenset(sp), tuple(da))
