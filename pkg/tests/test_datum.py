import pytest

from sphersmooth.datum import (
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
    validate_system,
    valuation_halfspaces,
)
from sphersmooth.rootsystems import (
    RootSystem,
    SimpleRootId,
    Weight,
    root_as_weight,
)

A = SimpleRootId


def system(components, sigma, s_p=(), d_a=()):
    r = RootSystem(tuple(components))
    return SphericalSystem(r, tuple(tuple(g) for g in sigma), frozenset(s_p), tuple(d_a))


def test_worked_datum_validates(worked_datum):
    rep = validate_datum(worked_datum)
    assert rep.ok, str(rep)


def test_worked_full_colors(worked_datum):
    cols = {c.label: c for c in full_colors(worked_datum)}
    assert set(cols) == {"D1", "D2", "D3", "D4", "D5"}
    assert all(c.kind == "a" for c in cols.values())
    assert cols["D1"].sigma_set == {A(0, 1), A(1, 1)}
    assert cols["D2"].sigma_set == {A(0, 2), A(1, 2)}
    assert cols["D3"].sigma_set == {A(0, 2)}
    assert cols["D4"].sigma_set == {A(0, 3), A(1, 1)}
    assert cols["D5"].sigma_set == {A(0, 1), A(0, 3), A(1, 2)}
    # printed pairing values
    assert worked_datum.pair_rho_root(cols["D1"].rho, 0) == 1
    assert worked_datum.pair_rho_root(cols["D1"].rho, 2) == -1
    # arrows of the diagram: <rho(D2), gamma_1> = <rho(D2), gamma_3> = -1
    assert worked_datum.pair_rho_root(cols["D2"].rho, 0) == -1
    assert worked_datum.pair_rho_root(cols["D2"].rho, 2) == -1
    assert worked_datum.pair_rho_root(cols["D1"].rho, 4) == -1


def test_sum_rule_over_pairs(worked_datum):
    cols = full_colors(worked_datum)
    simple = worked_datum.simple_sigma()
    for a, i in simple.items():
        movers = [c for c in cols if a in c.sigma_set]
        assert len(movers) == 2
        assert sum(worked_datum.pair_rho_root(c.rho, i) for c in movers) == 2


def test_horospherical_full_colors():
    # SL_n picture: Sigma empty, S^p = S minus alpha_1, a single type-b color
    r = RootSystem((("A", 2),), torus_rank=1)
    d = HomogeneousSphericalDatum(
        r,
        (Weight((1, 0), (1,)),),
        (),
        frozenset({A(0, 2)}),
        (),
    )
    assert validate_datum(d).ok
    cols = full_colors(d)
    assert len(cols) == 1
    assert cols[0].kind == "b"
    assert cols[0].rho == (1,)
    assert cols[0].sigma_set == {A(0, 1)}


def test_2a_color():
    # Sigma = {2 alpha_1} in A1 with M = Z * 2alpha_1
    r = RootSystem((("A", 1),))
    d = HomogeneousSphericalDatum(
        r,
        (root_as_weight(r, (2,)),),
        (SphericalRoot((2,), (1,)),),
        frozenset(),
        (),
    )
    assert validate_datum(d).ok
    cols = full_colors(d)
    assert len(cols) == 1
    assert cols[0].kind == "2a"
    assert cols[0].rho == (2,)  # half of <alpha-coroot, 2 alpha> = 4


def test_identified_b_colors():
    # group-like A1 x A1 with the pair root alpha + alpha'
    r = RootSystem((("A", 1), ("A", 1)), torus_rank=1)
    chi = Weight((1, 1), (1,))
    inv = Weight((0, 0), (2,))
    gamma = SphericalRoot((1, 1), (2, -1))
    d = HomogeneousSphericalDatum(r, (chi, inv), (gamma,), frozenset(), ())
    assert validate_datum(d).ok, str(validate_datum(d))
    cols = full_colors(d)
    assert len(cols) == 1
    assert cols[0].kind == "b"
    assert cols[0].sigma_set == {A(0, 1), A(1, 1)}
    assert cols[0].rho == (1, 0)


def test_valuation_halfspaces(worked_datum):
    hs = valuation_halfspaces(worked_datum)
    assert hs[0] == (1, -1, 0, -1, 1, 0)
    assert hs[2][-1] == -1
    empty = HomogeneousSphericalDatum(
        RootSystem((("A", 1),), torus_rank=0), (root_as_weight(RootSystem((("A", 1),)), (1,)),), (), frozenset(), ()
    )
    assert valuation_halfspaces(empty) == ()


def test_validate_colored_cone(worked_datum, worked_cone):
    rep = validate_colored_cone(worked_datum, worked_cone)
    assert rep.ok, str(rep)
    # colors only, with no valuation point in the interior, is invalid
    bad = ColoredCone((), frozenset({"D1"}))
    rep = validate_colored_cone(worked_datum, bad)
    assert any(f.code == "cone-interior" for f in rep.findings)
    # a non-valuation generator is flagged
    bad = ColoredCone(((1, 0, 0, 0, 0, 0),), frozenset())
    rep = validate_colored_cone(worked_datum, bad)
    assert any(f.code == "cone-valuation" for f in rep.findings)
    # lines are rejected
    bad = ColoredCone(((0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, -1)), frozenset())
    rep = validate_colored_cone(worked_datum, bad)
    assert any(f.code == "cone-strict" for f in rep.findings)
    with pytest.raises(Exception):
        s_f(worked_datum, {"nope"})


def test_s_f(worked_datum):
    all_labels = {"D1", "D2", "D3", "D4", "D5"}
    assert s_f(worked_datum, all_labels) == set(worked_datum.root_system.simple_roots())
    assert s_f(worked_datum, set()) == worked_datum.s_p == frozenset()
    dropped = s_f(worked_datum, all_labels - {"D5"})
    assert dropped == {A(0, 2), A(1, 1)}


def test_localize(worked_datum):
    r = worked_datum.root_system
    loc, relabel = localize(worked_datum, r.simple_roots())
    assert loc.root_system.components == r.components
    assert [g.coeffs for g in loc.sigma] == [g.coeffs for g in worked_datum.sigma]

    loc, _ = localize(worked_datum, [])
    assert loc.sigma == () and loc.s_p == frozenset() and loc.d_a == ()

    keep = [A(0, 1), A(0, 2), A(1, 1), A(1, 2)]
    loc, relabel = localize(worked_datum, keep)
    assert loc.root_system.components == (("A", 2), ("C", 2))
    assert len(loc.sigma) == 4  # gamma_3 = alpha_3 is dropped
    kept_m = [g.m_coords for g in loc.sigma]
    assert (-1, -1, 0, 1, 1, -1) not in kept_m
    assert len(loc.d_a) == 5
    assert validate_datum(loc).ok, str(validate_datum(loc))


def test_localize_composition(worked_datum):
    s1 = [A(0, 1), A(0, 2), A(1, 1), A(1, 2)]
    s2 = [A(0, 1), A(1, 1), A(1, 2)]
    loc1, rel1 = localize(worked_datum, s1)
    loc12, _ = localize(loc1, [rel1[a] for a in s2 if a in rel1])
    loc2, _ = localize(worked_datum, sorted(set(s1) & set(s2)))
    assert loc12.root_system.components == loc2.root_system.components
    assert sorted(g.m_coords for g in loc12.sigma) == sorted(g.m_coords for g in loc2.sigma)
    assert {lab for lab, _ in loc12.d_a} == {lab for lab, _ in loc2.d_a}


def test_closure_doubles_b_chain():
    s = system([("B", 3)], [(1, 1, 1)], s_p=[A(0, 2), A(0, 3)])
    assert validate_system(s).ok, str(validate_system(s))
    res = spherical_closure_result(s.to_datum())
    assert res.doubled == {0}
    assert res.system.sigma == ((2, 2, 2),)
    assert res.m_coords == ((2,),)


def test_closure_leaves_a_chain():
    s = system([("A", 3)], [(1, 1, 1)], s_p=[A(0, 2)])
    res = spherical_closure_result(s.to_datum())
    assert res.doubled == frozenset()
    assert res.system.sigma == ((1, 1, 1),)


def test_closure_keeps_paired_simple_root():
    s = system(
        [("A", 1)],
        [(1,)],
        d_a=[("Dp", (1,)), ("Dm", (1,))],
    )
    assert validate_system(s).ok
    res = spherical_closure_result(s.to_datum())
    assert res.doubled == frozenset()
    assert spherical_closure(s.to_datum()) == s


def test_closure_doubles_g2_short():
    s = system([("G", 2)], [(2, 1)], s_p=[A(0, 2)])
    assert validate_system(s).ok, str(validate_system(s))
    res = spherical_closure_result(s.to_datum())
    assert res.doubled == {0}
    assert res.system.sigma == ((4, 2),)


def test_closure_idempotent(worked_datum):
    res = spherical_closure_result(worked_datum)
    assert res.doubled == frozenset()
    again = spherical_closure_result(res.system.to_datum())
    assert again.system == res.system


def test_decompose_product():
    one = system([("A", 1)], [(1,)], d_a=[("Dp", (1,)), ("Dm", (1,))])
    prod = product_system([one, one])
    parts = decompose(prod)
    assert len(parts) == 2
    for part in parts:
        assert part.system.sigma == ((1,),)
        assert len(part.system.d_a) == 2


def test_decompose_worked_closure(worked_datum):
    closure = spherical_closure(worked_datum)
    parts = decompose(closure)
    assert len(parts) == 1
    assert parts[0].system.root_system.components == (("A", 3), ("C", 2))


def test_decompose_isolated_sp_component():
    r = RootSystem((("A", 1), ("A", 2)))
    s = SphericalSystem(
        r,
        ((1, 0, 0),),
        frozenset({A(1, 1), A(1, 2)}),
        (("Dp", (1,)), ("Dm", (1,))),
    )
    parts = decompose(s)
    assert len(parts) == 2
    assert parts[1].system.sigma == ()
    assert parts[1].system.s_p == {A(0, 1), A(0, 2)}


def test_decompose_roundtrip(worked_datum):
    closure = spherical_closure(worked_datum)
    parts = decompose(closure)
    prod = product_system([p.system for p in parts])
    assert prod.root_system.components == closure.root_system.components
    assert sorted(prod.sigma) == sorted(closure.sigma)


def test_validation_findings_name_the_problem():
    r = RootSystem((("A", 1),))
    # a type-a color claimed by no simple spherical root
    d = HomogeneousSphericalDatum(
        r,
        (root_as_weight(r, (1,)),),
        (SphericalRoot((1,), (1,)),),
        frozenset(),
        (("Dp", (1,)), ("Dm", (1,)), ("Dx", (0,))),
    )
    rep = validate_datum(d)
    assert any(f.code == "da-unclaimed" for f in rep.findings)

    # half coroot not integral: 2*alpha in Sigma but M = Z*alpha
    d = HomogeneousSphericalDatum(
        r,
        (root_as_weight(r, (1,)),),
        (SphericalRoot((2,), (2,)),),
        frozenset(),
        (),
    )
    rep = validate_datum(d)
    assert any(f.code == "sigma-primitive" for f in rep.findings)

    # wrong S^p: pairs nonzero with a basis weight
    d = HomogeneousSphericalDatum(
        r,
        (root_as_weight(r, (1,)),),
        (),
        frozenset({SimpleRootId(0, 1)}),
        (),
    )
    rep = validate_datum(d)
    assert any(f.code == "sp-pairing" for f in rep.findings)
