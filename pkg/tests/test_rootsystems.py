import random

import pytest

from sphersmooth.rootsystems import (
    DiagramAutomorphism,
    RootSystem,
    SimpleRootId,
    Weight,
    admissible_spherical_root,
    cartan_matrix,
    coroot_pairing,
    coroot_pairing_coeffs,
    diagram_automorphisms,
    root_as_weight,
    spherical_root_shapes,
    sub_root_system,
)

A = SimpleRootId


def test_cartan_examples():
    assert cartan_matrix(RootSystem((("A", 2),))) == ((2, -1), (-1, 2))
    assert cartan_matrix(RootSystem((("A", 1), ("A", 1)))) == ((2, 0), (0, 2))
    # Row i holds the fw-coordinates of root i; for C2 the long root is
    # alpha_2 = -2w1 + 2w2.
    assert cartan_matrix(RootSystem((("C", 2),))) == ((2, -1), (-2, 2))
    assert cartan_matrix(RootSystem((("B", 2),))) == ((2, -2), (-1, 2))
    assert cartan_matrix(RootSystem((("G", 2),))) == ((2, -1), (-3, 2))


def test_normalizations():
    assert RootSystem((("B", 1),)).components == (("A", 1),)
    assert RootSystem((("D", 3),)).components == (("A", 3),)
    assert RootSystem((("D", 2),)).components == (("A", 1), ("A", 1))
    with pytest.raises(ValueError):
        RootSystem((("E", 5),))


def test_coroot_pairing():
    r = RootSystem((("A", 3),), torus_rank=1)
    w1 = Weight((1, 0, 0), (0,))
    assert coroot_pairing(r, A(0, 1), w1) == 1
    eps = Weight((0, 0, 0), (1,))
    assert coroot_pairing(r, A(0, 1), eps) == 0
    # chi_5 = w1 + w3 + w2' + 4eps in A3 x C2 x torus pairs to 0 with alpha_2
    rr = RootSystem((("A", 3), ("C", 2)), torus_rank=1)
    chi5 = Weight((1, 0, 1, 0, 1), (4,))
    assert coroot_pairing(rr, A(0, 2), chi5) == 0


def test_root_as_weight_worked_example():
    r = RootSystem((("A", 3), ("C", 2)), torus_rank=1)
    assert root_as_weight(r, (1, 0, 0, 0, 0)).fw_coords == (2, -1, 0, 0, 0)
    assert root_as_weight(r, (0, 1, 0, 0, 0)).fw_coords == (-1, 2, -1, 0, 0)
    assert root_as_weight(r, (0, 0, 0, 0, 1)).fw_coords == (0, 0, 0, -2, 2)
    assert root_as_weight(r, (0, 0, 0, 1, 0)).fw_coords == (0, 0, 0, 2, -1)


def test_root_as_weight_linearity_and_crosscheck():
    rng = random.Random(5)
    r = RootSystem((("B", 3), ("G", 2)), torus_rank=2)
    n = r.rank
    for _ in range(40):
        u = tuple(rng.randint(0, 3) for _ in range(n))
        v = tuple(rng.randint(0, 3) for _ in range(n))
        s = tuple(a + b for a, b in zip(u, v))
        assert root_as_weight(r, s) == root_as_weight(r, u) + root_as_weight(r, v)
        for a in r.simple_roots():
            assert coroot_pairing(r, a, root_as_weight(r, v)) == coroot_pairing_coeffs(r, a, v)


def test_admissible_shapes():
    a3 = RootSystem((("A", 3),))
    tags = {s.tag for s in admissible_spherical_root(a3, (1, 1, 1))}
    assert tags == {"a_chain"}
    b2 = RootSystem((("B", 2),))
    assert {s.tag for s in admissible_spherical_root(b2, (2, 2))} == {"2b_chain"}
    a2 = RootSystem((("A", 2),))
    with pytest.raises(ValueError):
        admissible_spherical_root(a2, (1, 3))
    assert {s.tag for s in admissible_spherical_root(a2, (1, 0))} == {"alpha"}
    assert {s.tag for s in admissible_spherical_root(a2, (2, 0))} == {"2alpha"}
    assert {s.tag for s in admissible_spherical_root(a3, (1, 0, 1))} == {"alpha_pair"}
    assert {s.tag for s in admissible_spherical_root(a3, (1, 2, 1))} == {"d3"}
    b3 = RootSystem((("B", 3),))
    assert {s.tag for s in admissible_spherical_root(b3, (1, 2, 3))} == {"b3_spin"}
    assert {s.tag for s in admissible_spherical_root(b3, (1, 1, 1))} == {"b_chain"}
    c3 = RootSystem((("C", 3),))
    assert {s.tag for s in admissible_spherical_root(c3, (1, 2, 1))} == {"c_chain"}
    d4 = RootSystem((("D", 4),))
    assert {s.tag for s in admissible_spherical_root(d4, (2, 2, 1, 1))} == {"d_chain"}
    d5 = RootSystem((("D", 5),))
    assert {s.tag for s in admissible_spherical_root(d5, (2, 2, 2, 1, 1))} == {"d_chain"}
    f4 = RootSystem((("F", 4),))
    assert {s.tag for s in admissible_spherical_root(f4, (1, 2, 3, 2))} == {"f4"}
    g2 = RootSystem((("G", 2),))
    assert {s.tag for s in admissible_spherical_root(g2, (1, 1))} == {"g2_sum"}
    assert {s.tag for s in admissible_spherical_root(g2, (2, 1))} == {"g2_short"}
    assert {s.tag for s in admissible_spherical_root(g2, (4, 2))} == {"g2_double"}
    # rank-2 double-edge vectors admit both the B and the C reading
    tags = {s.tag for s in admissible_spherical_root(b2, (1, 1))}
    assert tags == {"b_chain", "c_chain"}


def test_e6_d5_shape():
    e6 = RootSystem((("E", 6),))
    shapes = spherical_root_shapes(e6, (2, 1, 2, 2, 1, 0))
    assert [s.tag for s in shapes] == ["d_chain"]
    req = shapes[0].sp_required
    assert req == frozenset({A(0, 2), A(0, 3), A(0, 4), A(0, 5)})
    shapes = spherical_root_shapes(e6, (0, 1, 1, 2, 2, 2))
    assert [s.tag for s in shapes] == ["d_chain"]


def test_sub_root_system():
    b3 = RootSystem((("B", 3),), torus_rank=1)
    sub, relabel = sub_root_system(b3, [A(0, 1), A(0, 2)])
    assert sub.components == (("A", 2),)
    assert sub.torus_rank == 1
    assert relabel[A(0, 1)] == A(0, 1) and relabel[A(0, 2)] == A(0, 2)

    r = RootSystem((("A", 3), ("C", 2)), torus_rank=1)
    sub, relabel = sub_root_system(r, [A(0, 1), A(0, 2), A(1, 1)])
    assert sub.components == (("A", 2), ("A", 1))
    assert relabel[A(1, 1)] == A(1, 1)

    sub, relabel = sub_root_system(r, [])
    assert sub.components == ()
    assert sub.torus_rank == 1

    sub, relabel = sub_root_system(r, list(r.simple_roots()))
    assert sub.components == r.components
    assert all(relabel[a] == a for a in r.simple_roots())

    # dropping the long end of C3 leaves an A2 of short roots
    c3 = RootSystem((("C", 3),))
    sub, _ = sub_root_system(c3, [A(0, 1), A(0, 2)])
    assert sub.components == (("A", 2),)
    # keeping the double edge of C3 gives C2
    sub, relabel = sub_root_system(c3, [A(0, 2), A(0, 3)])
    assert sub.components == (("C", 2),)
    assert relabel[A(0, 2)] == A(0, 1)
    # B4 minus the short end is A3; keeping the tail gives B2
    b4 = RootSystem((("B", 4),))
    sub, _ = sub_root_system(b4, [A(0, 3), A(0, 4)])
    assert sub.components in ((("B", 2),), (("C", 2),))
    assert sub.components == (("B", 2),)

    # E6 minus alpha_6 is D5 with the branch as a fork arm
    e6 = RootSystem((("E", 6),))
    sub, relabel = sub_root_system(e6, [A(0, i) for i in (1, 2, 3, 4, 5)])
    assert sub.components == (("D", 5),)
    # E6 minus alpha_2 is A5
    sub, _ = sub_root_system(e6, [A(0, i) for i in (1, 3, 4, 5, 6)])
    assert sub.components == (("A", 5),)
    # full E6 classifies back to E6
    sub, relabel = sub_root_system(e6, list(e6.simple_roots()))
    assert sub.components == (("E", 6),)

    # D5 fork arm plus center
    d5 = RootSystem((("D", 5),))
    sub, _ = sub_root_system(d5, [A(0, 3), A(0, 4), A(0, 5)])
    assert sub.components == (("A", 3),)


def test_diagram_automorphisms():
    assert len(diagram_automorphisms(RootSystem((("A", 2),)))) == 2
    assert len(diagram_automorphisms(RootSystem((("D", 4),)))) == 6
    assert len(diagram_automorphisms(RootSystem((("A", 1), ("A", 1))))) == 2
    assert len(diagram_automorphisms(RootSystem((("E", 6),)))) == 2
    assert len(diagram_automorphisms(RootSystem((("G", 2),)))) == 1
    assert len(diagram_automorphisms(RootSystem((("A", 2), ("A", 2))))) == 8
    assert len(diagram_automorphisms(RootSystem((("D", 5),)))) == 2
    assert len(diagram_automorphisms(RootSystem((("B", 3),)))) == 1


def test_automorphism_preserves_cartan():
    r = RootSystem((("A", 2), ("A", 2)))
    for auto in diagram_automorphisms(r):
        assert isinstance(auto, DiagramAutomorphism)  # post_init asserted already
    with pytest.raises(ValueError):
        DiagramAutomorphism(
            RootSystem((("C", 2),)),
            ((A(0, 1), A(0, 2)), (A(0, 2), A(0, 1))),
        )


def test_all_shape_families_up_to_rank_6():
    cases = []
    for n in range(2, 7):
        cases.append((RootSystem((("A", n - 1),)), (1,) * (n - 1), "a_chain" if n > 2 else "alpha"))
    for n in range(2, 7):
        cases.append((RootSystem((("B", n),)), (1,) * n, "b_chain"))
        cases.append((RootSystem((("B", n),)), (2,) * n, "2b_chain"))
        cases.append((RootSystem((("C", n),)), (1,) + (2,) * (n - 2) + (1,), "c_chain"))
    for n in range(4, 7):
        cases.append((RootSystem((("D", n),)), (2,) * (n - 2) + (1, 1), "d_chain"))
    cases.append((RootSystem((("A", 3),)), (1, 2, 1), "d3"))
    cases.append((RootSystem((("B", 3),)), (1, 2, 3), "b3_spin"))
    cases.append((RootSystem((("F", 4),)), (1, 2, 3, 2), "f4"))
    cases.append((RootSystem((("G", 2),)), (1, 1), "g2_sum"))
    cases.append((RootSystem((("G", 2),)), (2, 1), "g2_short"))
    cases.append((RootSystem((("G", 2),)), (4, 2), "g2_double"))
    cases.append((RootSystem((("A", 1),)), (2,), "2alpha"))
    cases.append((RootSystem((("A", 1), ("A", 1))), (1, 1), "alpha_pair"))
    for r, coeffs, tag in cases:
        tags = {s.tag for s in admissible_spherical_root(r, coeffs)}
        assert tag in tags, (r, coeffs, tags)
