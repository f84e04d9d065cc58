from sphersmooth.catalog import ENTRIES, instantiate
from sphersmooth.datum import SphericalSystem
from sphersmooth.diagrams import diagram_data, render_diagram, render_svg, render_text
from sphersmooth.rootsystems import SimpleRootId
from tests.svg_decode import decode_svg

A = SimpleRootId


def expected_incidence(system: SphericalSystem, marked):
    """The decoding target computed straight from the system."""
    data = diagram_data(system, marked)
    r = system.root_system
    roots = r.simple_roots()
    sigma = set()
    for g in system.sigma:
        sigma.add(tuple(g))
    slot_classes = {}
    for a, side, lab in data.slots:
        slot_classes.setdefault(lab, set()).add((a, side))
    partition = frozenset(frozenset(v) for v in slot_classes.values())
    arrows = frozenset((a, direction) for a, direction, _ in data.arrows)
    marks = frozenset(tuple(system.sigma[i]) for i, _ in data.marks)
    return {
        "sigma": frozenset(sigma),
        "s_p": frozenset(system.s_p),
        "slot_partition": partition,
        "arrows": arrows,
        "marks": marks,
    }


def test_entry21_rendering():
    inst = instantiate(21)
    svg = render_svg(inst.system, inst.marked)
    assert svg.count('class="slot') == 2
    assert 'class="mark"' in svg
    text = render_text(inst.system, inst.marked)
    assert "@" in text and "A1" in text


def test_entry3_doubled_decoration():
    inst = instantiate(3, (2,))
    svg = render_svg(inst.system, inst.marked)
    assert svg.count('class="around2"') == 0  # doubled chain is a lane, not 2alpha
    assert 'class="lane"' in svg and 'class="coeff"' in svg
    inst5 = instantiate(5, (2,))
    svg5 = render_svg(inst5.system, inst5.marked)
    assert svg5.count('class="around2"') == 2  # the 2alpha double circle


def test_entry1_single_circle():
    inst = instantiate(1, (3,))
    svg = render_svg(inst.system, inst.marked)
    assert svg.count('class="around"') == 1
    assert 'class="slot' not in svg


def test_render_deterministic():
    inst = instantiate(13)
    one = render_svg(inst.system, inst.marked)
    two = render_svg(inst.system, inst.marked)
    assert one == two
    assert render_text(inst.system, inst.marked) == render_text(inst.system, inst.marked)


def test_render_dispatch():
    inst = instantiate(18)
    assert render_diagram(inst.system, "svg", inst.marked).startswith("<svg")
    assert "G2" in render_diagram(inst.system, "text", inst.marked)
    import pytest

    with pytest.raises(Exception):
        render_diagram(inst.system, "png", inst.marked)


def test_svg_roundtrip_all_entries():
    for eid in sorted(ENTRIES):
        params = ENTRIES[eid].smallest[0]
        inst = instantiate(eid, params)
        svg = render_svg(inst.system, inst.marked)
        decoded = decode_svg(svg, inst.system.root_system)
        target = expected_incidence(inst.system, inst.marked)
        for key in ("sigma", "s_p", "slot_partition", "arrows", "marks"):
            assert decoded[key] == target[key], f"entry {eid}{params}: {key}"
