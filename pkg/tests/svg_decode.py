"""Test-only decoder: read a rendered Luna-diagram SVG back into the
combinatorial data it encodes (spherical roots, S^p, color-slot partition,
arrows, marks), using only element kinds, classes, and geometry."""

import xml.etree.ElementTree as ET

from sphersmooth.diagrams import UNIT, Y0, _lane_y

SVG = "{http://www.w3.org/2000/svg}"


def _floats(pair):
    x, y = pair.split(",")
    return float(x), float(y)


def decode_svg(svg_text: str, root_system):
    tree = ET.fromstring(svg_text)
    circles = [el for el in tree.iter(f"{SVG}circle")]
    lines = [el for el in tree.iter(f"{SVG}line")]
    polylines = [el for el in tree.iter(f"{SVG}polyline")]
    texts = [el for el in tree.iter(f"{SVG}text")]

    def cls(el):
        return el.get("class", "")

    vertex_x = sorted(float(el.get("cx")) for el in circles if cls(el) == "vertex")
    roots = root_system.simple_roots()
    assert len(vertex_x) == len(roots)
    by_x = {x: roots[i] for i, x in enumerate(vertex_x)}

    def vert(x):
        return by_x[min(by_x, key=lambda v: abs(v - x))]

    def unit_vec(a, c=1):
        out = [0] * root_system.rank
        out[root_system.flat_index(a)] = c
        return tuple(out)

    sigma = set()
    circled = set()
    slots = set()
    for el in circles:
        c = cls(el)
        x, y = float(el.get("cx")), float(el.get("cy"))
        if c == "around":
            circled.add(vert(x))
        elif c == "around2":
            circled.add(vert(x))
            sigma.add(unit_vec(vert(x), 2))
        elif c.startswith("slot"):
            side = "up" if y < Y0 else "down"
            slots.add((vert(x), side))
            circled.add(vert(x))
            sigma.add(unit_vec(vert(x)))

    coeff_at = {}
    for el in texts:
        if cls(el) == "coeff":
            x, y = float(el.get("x")) - 4, float(el.get("y")) + 7
            coeff_at[(x, y)] = int(el.text)

    lane_roots = {}
    for el in polylines:
        if cls(el) != "lane":
            continue
        pts = [_floats(p) for p in el.get("points").split()]
        y = pts[0][1]
        vec = [0] * root_system.rank
        for x, _ in pts:
            a = vert(x)
            vec[root_system.flat_index(a)] = coeff_at.get((x, y), 1)
        sigma.add(tuple(vec))
        lane_roots[y] = tuple(vec)

    s_p = frozenset(a for a in roots if a not in circled)

    # the slot partition: joins glue slots, everything else is a singleton
    parent = {s: s for s in slots}

    def find(s):
        while parent[s] != s:
            s = parent[s]
        return s

    for el in polylines:
        if cls(el) != "join":
            continue
        pts = [_floats(p) for p in el.get("points").split()]
        ss = []
        for x, y in pts:
            side = "up" if y < Y0 else "down"
            ss.append((vert(x), side))
        for other in ss[1:]:
            ra, rb = find(ss[0]), find(other)
            if ra != rb:
                parent[rb] = ra
    classes = {}
    for s in slots:
        classes.setdefault(find(s), set()).add(s)
    partition = frozenset(frozenset(v) for v in classes.values())

    arrows = set()
    for el in lines:
        if cls(el) == "arrow":
            x1, x2 = float(el.get("x1")), float(el.get("x2"))
            direction = 1 if x2 > x1 else -1
            arrows.add((vert(x1 - direction * 12), direction))

    marks = set()
    for el in texts:
        if cls(el) != "mark":
            continue
        x, y = float(el.get("x")) + 16, float(el.get("y"))
        hit = None
        for lane_y, vec in lane_roots.items():
            if abs(y - (lane_y + 14)) < 1:
                hit = vec
        if hit is None:
            a = vert(x)
            hit = unit_vec(a) if unit_vec(a) in sigma else unit_vec(a, 2)
        marks.add(hit)

    return {
        "sigma": frozenset(sigma),
        "s_p": s_p,
        "slot_partition": partition,
        "arrows": frozenset(arrows),
        "marks": frozenset(marks),
    }
