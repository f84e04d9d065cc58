"""The smoothness decision procedure for a simple spherical embedding given
by a homogeneous spherical datum and a colored cone.

Three conditions are checked and reported independently:

  1. local factoriality: the cone is spanned by part of a Z-basis of N
     containing the (pairwise distinct) color functionals of F;
  2. every indecomposable component of the spherical closure of the
     localization at S_F that contains a color appears in the catalog;
  3. the marked spherical roots pair -1 with pairwise distinct colorless
     extremal rays and 0 with the rest, and unmarked roots pair 0 with all
     colorless rays.

Condition 3 is evaluated existentially over the matching isomorphisms: a
component can match its catalog family in several ways, and the marked
roots are determined only up to that choice.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .catalog import MatchResult, match_component
from .datum import (
    ColoredCone,
    HomogeneousSphericalDatum,
    SystemComponent,
    cone_generators,
    decompose,
    full_colors,
    localize,
    s_f,
    spherical_closure_result,
    validate_colored_cone,
    validate_datum,
)
from .lattice import (
    IntVector,
    RationalCone,
    cone_dim,
    dot,
    extremal_rays,
    is_part_of_basis,
    matrix,
    primitive_generator,
)


class ValidationError(ValueError):
    """Raised when an operation is asked to run on invalid input."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class ConditionReport(NamedTuple):
    passed: bool
    details: tuple[str, ...] = ()
    vacuous: bool = False


class ComponentOutcome(NamedTuple):
    summary: str
    colored: bool
    match: MatchResult | None


class Cond2Artifacts(NamedTuple):
    localized: HomogeneousSphericalDatum
    closure_m_coords: tuple[IntVector, ...]
    parts: tuple[SystemComponent, ...]
    outcomes: tuple[ComponentOutcome, ...]


class Assignment(NamedTuple):
    root_index: int  # index into the closure roots of the localization
    u: IntVector


class SmoothnessReport(NamedTuple):
    verdict: bool
    cond1: ConditionReport
    cond2: ConditionReport
    cond3: ConditionReport
    components: tuple[ComponentOutcome, ...]
    s_f_used: tuple[str, ...]
    u_set: tuple[IntVector, ...]
    assignment: tuple[Assignment, ...] | None

    def as_dict(self):
        return {
            "smooth": self.verdict,
            "condition1": {"passed": self.cond1.passed, "details": list(self.cond1.details)},
            "condition2": {
                "passed": self.cond2.passed,
                "vacuous": self.cond2.vacuous,
                "details": list(self.cond2.details),
                "components": [
                    {
                        "summary": c.summary,
                        "colored": c.colored,
                        "matched_entry": c.match.entry_id if c.match else None,
                        "parameters": list(c.match.params) if c.match else None,
                        "ambiguous_marking": c.match.ambiguous if c.match else False,
                    }
                    for c in self.components
                ],
            },
            "condition3": {
                "passed": self.cond3.passed,
                "vacuous": self.cond3.vacuous,
                "details": list(self.cond3.details),
                "colorless_rays": [list(u) for u in self.u_set],
                "assignment": [
                    {"root": a.root_index, "ray": list(a.u)} for a in self.assignment
                ]
                if self.assignment is not None
                else None,
            },
            "s_f": sorted(self.s_f_used),
        }


class FactorialityReport(NamedTuple):
    passed: bool
    details: tuple[str, ...] = ()


def check_condition1(d: HomogeneousSphericalDatum, c: ColoredCone) -> FactorialityReport:
    """Local factoriality: C spanned by part of a Z-basis containing an
    injective rho(F)."""
    details = []
    gens = cone_generators(d, c)
    the_cone = RationalCone(matrix(gens), d.m_rank)
    rays = extremal_rays(the_cone)
    dim = cone_dim(the_cone)
    if len(rays) != dim:
        details.append(f"cone is not simplicial: {len(rays)} rays span dimension {dim}")
    elif rays and not is_part_of_basis(rays, d.m_rank):
        from .lattice import elementary_divisors

        divs = elementary_divisors(matrix(rays))
        bad = next(x for x in divs if x != 1)
        details.append(f"ray lattice is not part of a Z-basis: elementary divisor {bad}")
    colors = {col.label: col for col in full_colors(d)}
    seen = {}
    for lab in sorted(c.f_labels):
        rho = colors[lab].rho
        if rho in seen:
            details.append(f"rho is not injective on F: {seen[rho]} and {lab} share {rho}")
        seen[rho] = lab
        if all(x == 0 for x in rho):
            details.append(f"rho({lab}) = 0 lies in F")
            continue
        if primitive_generator(rho) != rho:
            details.append(f"rho({lab}) = {rho} is not primitive")
        elif rho not in rays:
            details.append(f"rho({lab}) = {rho} does not generate an extremal ray of C")
    return FactorialityReport(not details, tuple(details))


def _component_summary(part: SystemComponent) -> str:
    s = part.system
    return f"{s.root_system} with {len(s.sigma)} spherical roots and {len(s.d_a)} type-a colors"


def check_condition2(d: HomogeneousSphericalDatum, c: ColoredCone):
    """Localize at S_F, take the spherical closure, decompose, and match
    every component that contains a color against the catalog."""
    sf = s_f(d, c.f_labels)
    loc, _ = localize(d, sf)
    closure = spherical_closure_result(loc)
    parts = decompose(closure.system)
    outcomes = []
    details = []
    for part in parts:
        moved = set(part.system.root_system.simple_roots()) - part.system.s_p
        colored = bool(moved)
        match = None
        if colored:
            match = match_component(part.system)
            if match is None:
                details.append(f"unmatched component: {_component_summary(part)}")
        outcomes.append(ComponentOutcome(_component_summary(part), colored, match))
    vacuous = not any(o.colored for o in outcomes)
    report = ConditionReport(not details, tuple(details), vacuous)
    return report, Cond2Artifacts(loc, closure.m_coords, parts, tuple(outcomes))


def colorless_rays(d: HomogeneousSphericalDatum, c: ColoredCone, localized) -> tuple[IntVector, ...]:
    """Primitive generators of the extremal rays of C not spanned by a color
    functional of the localized datum (colors of every type count)."""
    gens = cone_generators(d, c)
    rays = extremal_rays(RationalCone(matrix(gens), d.m_rank))
    rhos = set()
    for col in full_colors(localized):
        if any(x != 0 for x in col.rho):
            rhos.add(primitive_generator(col.rho))
    return tuple(u for u in rays if u not in rhos)


def check_condition3(
    d: HomogeneousSphericalDatum, c: ColoredCone, art: Cond2Artifacts
):
    """Marked roots must pair -1 with pairwise distinct colorless rays and 0
    elsewhere; unmarked roots must pair 0 with every colorless ray.

    Existential over the marked-set alternatives surfaced by the matcher."""
    u_set = colorless_rays(d, c, art.localized)
    nroots = len(art.closure_m_coords)

    # Each colored component contributes a list of alternative marked sets
    # (in closure-root indices).  Components without a match contribute no
    # marked roots; condition 2 already failed for them.
    alternative_lists = []
    for part, outcome in zip(art.parts, art.outcomes):
        if outcome.match is None:
            continue
        alts = []
        for pb in outcome.match.alternatives:
            alts.append(frozenset(part.root_indices[i] for i in pb))
        alternative_lists.append(alts)

    # Nothing to check when the localization's closure has no roots at all.
    vacuous = nroots == 0

    def try_marked(marked: frozenset[int]):
        problems = []
        assignment = []
        used = set()
        for i in range(nroots):
            mc = art.closure_m_coords[i]
            hits = [u for u in u_set if dot(u, mc) != 0]
            if i in marked:
                if len(hits) != 1:
                    problems.append(
                        f"marked root #{i} pairs nonzero with {len(hits)} colorless rays (need exactly 1)"
                    )
                    continue
                u = hits[0]
                if dot(u, mc) != -1:
                    problems.append(
                        f"marked root #{i} pairs {dot(u, mc)} with {u} (need -1)"
                    )
                    continue
                if u in used:
                    problems.append(f"ray {u} is assigned to two marked roots")
                    continue
                used.add(u)
                assignment.append(Assignment(i, u))
            else:
                if hits:
                    problems.append(
                        f"unmarked root #{i} pairs {dot(hits[0], mc)} with colorless ray {hits[0]}"
                    )
        return problems, tuple(assignment)

    best_problems = None
    for combo in itertools.product(*alternative_lists) if alternative_lists else [()]:
        marked = frozenset().union(*combo) if combo else frozenset()
        problems, assignment = try_marked(marked)
        if not problems:
            return ConditionReport(True, (), vacuous), u_set, assignment
        if best_problems is None or len(problems) < len(best_problems):
            best_problems = problems
    return (
        ConditionReport(False, tuple(best_problems or ()), vacuous),
        u_set,
        None,
    )


def is_smooth(
    d: HomogeneousSphericalDatum, c: ColoredCone, validate: bool = True
) -> SmoothnessReport:
    """Run all three conditions; the verdict is their conjunction.

    Conditions are evaluated independently so a failing report still carries
    full diagnostics.  With validate=True (the default) invalid input aborts
    with a ValidationError instead of a verdict."""
    if validate:
        rep = validate_datum(d)
        if not rep.ok:
            raise ValidationError(rep)
        rep = validate_colored_cone(d, c)
        if not rep.ok:
            raise ValidationError(rep)

    try:
        c1 = check_condition1(d, c)
        cond1 = ConditionReport(c1.passed, c1.details)
    except Exception as exc:
        cond1 = ConditionReport(False, (f"condition 1 could not be evaluated: {exc}",))
    try:
        sf = s_f(d, c.f_labels)
        cond2, art = check_condition2(d, c)
    except Exception as exc:
        cond2 = ConditionReport(False, (f"condition 2 could not be evaluated: {exc}",))
        art = None
        sf = frozenset()
    if art is not None:
        try:
            cond3, u_set, assignment = check_condition3(d, c, art)
        except Exception as exc:
            cond3 = ConditionReport(False, (f"condition 3 could not be evaluated: {exc}",))
            u_set, assignment = (), None
    else:
        cond3 = ConditionReport(False, ("condition 3 skipped: condition 2 aborted",))
        u_set, assignment = (), None

    verdict = cond1.passed and cond2.passed and cond3.passed
    return SmoothnessReport(
        verdict,
        cond1,
        cond2,
        cond3,
        art.outcomes if art is not None else (),
        tuple(str(a) for a in sorted(sf)),
        u_set,
        assignment,
    )


def check_factorial(d: HomogeneousSphericalDatum, c: ColoredCone, validate: bool = True):
    if validate:
        rep = validate_datum(d)
        if not rep.ok:
            raise ValidationError(rep)
        rep = validate_colored_cone(d, c)
        if not rep.ok:
            raise ValidationError(rep)
    return check_condition1(d, c)
