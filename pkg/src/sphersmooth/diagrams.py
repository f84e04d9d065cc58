"""Luna-diagram rendering for spherical systems.

The drawing follows the classical reading rules, normalized for this
package: the Dynkin diagram is drawn with its multiple edges pointing at
short roots; a spherical root that is a simple root puts a circle slot
above and below its vertex (the two type-a colors, the lexicographically
first label on top); every other spherical root is drawn as a lane under
the diagram through its support, with coefficients other than 1 printed;
moved vertices with no other circle get a plain circle around them; lines
join the slots of one color; an arrow leaves a top slot toward a
non-orthogonal root its color pairs -1 with; marked roots carry a gamma
label.  SVG output is deterministic byte for byte.
"""

from __future__ import annotations

from typing import NamedTuple

from .datum import SphericalSystem
from .rootsystems import (
    RootSystem,
    SimpleRootId,
    coroot_pairing_coeffs,
    coroot_pairing_root,
)

UNIT = 60
MARGIN = 40
Y0 = 150


class DiagramError(ValueError):
    pass


class Layout(NamedTuple):
    xs: dict  # SimpleRootId -> x coordinate
    width: int


def _layout(r: RootSystem) -> Layout:
    xs = {}
    x = MARGIN
    for ci, (_, rank) in enumerate(r.components):
        for pos in range(1, rank + 1):
            xs[SimpleRootId(ci, pos)] = x
            x += UNIT
        x += UNIT // 2
    return Layout(xs, x + MARGIN - UNIT // 2)


class DiagramData(NamedTuple):
    """Everything the drawing needs, independent of the output format."""

    layout: Layout
    edges: tuple  # (a, b, multiplicity, short_end or None)
    slots: tuple  # (root id, "up"/"down", color label)
    around: tuple  # root ids with a plain circle
    around2: tuple  # root ids with the doubled-root circle
    lanes: tuple  # (root index, support ids, coeffs dict, lane offset)
    joins: tuple  # (label, tuple of slot positions (root id, side))
    arrows: tuple  # (root id, direction, target root index)
    marks: tuple  # (root index, anchor id)


def diagram_data(s: SphericalSystem, marked=frozenset()) -> DiagramData:
    r = s.root_system
    layout = _layout(r)
    roots = r.simple_roots()

    edges = []
    for i, a in enumerate(roots):
        for b in roots[i + 1 :]:
            p, q = coroot_pairing_root(r, a, b), coroot_pairing_root(r, b, a)
            if p == 0:
                continue
            mult = max(-p, -q)
            short = None
            if p != q:
                short = a if p < q else b
            edges.append((a, b, mult, short))

    simple_idx = {}
    doubled_idx = {}
    wide = []
    for i, g in enumerate(s.sigma):
        supp = [roots[j] for j, c in enumerate(g) if c]
        if len(supp) == 1 and g[r.flat_index(supp[0])] == 1:
            simple_idx[supp[0]] = i
        elif len(supp) == 1 and g[r.flat_index(supp[0])] == 2:
            doubled_idx[supp[0]] = i
        else:
            wide.append(i)

    # type-a colors: for each simple spherical root pick the two colors
    # pairing 1; the lexicographically first label sits on top
    slot_of: dict[tuple, tuple] = {}
    color_slots: dict[str, list] = {}
    for a, i in sorted(simple_idx.items()):
        movers = sorted(lab for lab, pair in s.d_a if pair[i] == 1)
        if len(movers) != 2:
            raise DiagramError(f"simple spherical root {a} has {len(movers)} type-a colors")
        for side, lab in zip(("up", "down"), movers):
            slot_of[(a, side)] = lab
            color_slots.setdefault(lab, []).append((a, side))
    slots = tuple((a, side, lab) for (a, side), lab in sorted(slot_of.items()))

    moved = [a for a in roots if a not in s.s_p]
    supported_simple = set(simple_idx) | set(doubled_idx)
    around = tuple(a for a in moved if a not in supported_simple)
    around2 = tuple(sorted(doubled_idx))

    lanes = []
    for k, i in enumerate(wide):
        g = s.sigma[i]
        supp = [roots[j] for j, c in enumerate(g) if c]
        coeffs = {a: g[r.flat_index(a)] for a in supp}
        lanes.append((i, tuple(supp), coeffs, k))

    joins = tuple(
        (lab, tuple(sorted(poss, key=lambda p: (layout.xs[p[0]], p[1]))))
        for lab, poss in sorted(color_slots.items())
        if len(poss) > 1
    )

    arrows = []
    pair_of = dict(s.d_a)
    for a, i in sorted(simple_idx.items()):
        lab = slot_of[(a, "up")]
        pair = pair_of[lab]
        for t, g in enumerate(s.sigma):
            if t == i or pair[t] != -1:
                continue
            if coroot_pairing_coeffs(r, a, g) == 0:
                continue  # arrows only point at non-orthogonal roots
            supp = [roots[j] for j, c in enumerate(g) if c and roots[j] != a]
            if not supp:
                continue
            ax = layout.xs[a]
            target = min(supp, key=lambda v: (abs(layout.xs[v] - ax), layout.xs[v]))
            direction = 1 if layout.xs[target] >= ax else -1
            arrows.append((a, direction, t))

    marks = []
    for i in sorted(marked):
        g = s.sigma[i]
        anchor = next(roots[j] for j, c in enumerate(g) if c)
        marks.append((i, anchor))

    return DiagramData(
        layout,
        tuple(edges),
        slots,
        around,
        around2,
        tuple(lanes),
        joins,
        tuple(arrows),
        tuple(marks),
    )


def _lane_y(offset: int) -> int:
    return Y0 + 70 + 16 * offset


def render_svg(s: SphericalSystem, marked=frozenset()) -> str:
    d = diagram_data(s, marked)
    xs = d.layout.xs
    height = Y0 + 90 + 16 * max((ln[3] for ln in d.lanes), default=0) + 40
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{d.layout.width}" '
        f'height="{height}" viewBox="0 0 {d.layout.width} {height}">',
        '<style>line,polyline,circle{stroke:#000;fill:none}circle.vertex{fill:#000}'
        "text{font:12px sans-serif;fill:#000}</style>",
    ]
    for a, b, mult, short in d.edges:
        x1, x2 = xs[a], xs[b]
        for k in range(mult):
            dy = (k - (mult - 1) / 2) * 5
            out.append(
                f'<line class="edge" x1="{x1}" y1="{Y0 + dy:g}" x2="{x2}" y2="{Y0 + dy:g}"/>'
            )
        if short is not None:
            sx = xs[short]
            mid = (x1 + x2) / 2
            step = 8 if sx > mid else -8
            out.append(
                f'<polyline class="edgehead" points="{mid - step:g},{Y0 - 6} '
                f'{mid + step:g},{Y0} {mid - step:g},{Y0 + 6}"/>'
            )
    for a in sorted(xs):
        out.append(f'<circle class="vertex" cx="{xs[a]}" cy="{Y0}" r="4"/>')
    for a in d.around:
        out.append(f'<circle class="around" cx="{xs[a]}" cy="{Y0}" r="12"/>')
    for a in d.around2:
        out.append(f'<circle class="around2" cx="{xs[a]}" cy="{Y0}" r="12"/>')
        out.append(f'<circle class="around2" cx="{xs[a]}" cy="{Y0}" r="17"/>')
    for a, side, lab in d.slots:
        y = Y0 - 40 if side == "up" else Y0 + 40
        out.append(f'<circle class="slot {side}" cx="{xs[a]}" cy="{y}" r="8"/>')
    for lab, poss in d.joins:
        pts = " ".join(
            f"{xs[a]},{(Y0 - 48 if side == 'up' else Y0 + 48)}" for a, side in poss
        )
        out.append(f'<polyline class="join" points="{pts}"/>')
    for a, direction, t in d.arrows:
        x = xs[a] + direction * 12
        x2 = xs[a] + direction * 30
        y = Y0 - 40
        out.append(f'<line class="arrow" x1="{x}" y1="{y}" x2="{x2}" y2="{y}"/>')
        out.append(
            f'<polyline class="arrowhead" points="{x2 - direction * 6:g},{y - 4} '
            f'{x2:g},{y} {x2 - direction * 6:g},{y + 4}"/>'
        )
    for i, supp, coeffs, off in d.lanes:
        y = _lane_y(off)
        pts = " ".join(f"{xs[a]},{y}" for a in sorted(supp, key=lambda v: xs[v]))
        out.append(f'<polyline class="lane" points="{pts}"/>')
        for a in sorted(supp, key=lambda v: xs[v]):
            out.append(f'<line class="lanetick" x1="{xs[a]}" y1="{y - 5}" x2="{xs[a]}" y2="{y + 5}"/>')
            if coeffs[a] != 1:
                out.append(
                    f'<text class="coeff" x="{xs[a] + 4}" y="{y - 7}">{coeffs[a]}</text>'
                )
    lane_of = {i: off for i, _, _, off in d.lanes}
    for i, anchor in d.marks:
        if i in lane_of:
            y = _lane_y(lane_of[i]) + 14
        else:
            y = Y0 + 62
        out.append(f'<text class="mark" x="{xs[anchor] - 16}" y="{y}">&#947;</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_text(s: SphericalSystem, marked=frozenset()) -> str:
    d = diagram_data(s, marked)
    r = s.root_system
    roots = r.simple_roots()
    col = {a: 4 * i + 1 for i, a in enumerate(sorted(d.layout.xs, key=lambda v: d.layout.xs[v]))}
    width = 4 * len(roots) + 2

    def row():
        return [" "] * (width + 8)

    up, mid, down = row(), row(), row()
    for a in roots:
        mid[col[a]] = "o"
    for a, b, mult, short in d.edges:
        c1, c2 = sorted((col[a], col[b]))
        ch = "-" if mult == 1 else ("=" if mult == 2 else "#")
        for c in range(c1 + 1, c2):
            mid[c] = ch
        if short is not None:
            mid[(c1 + c2) // 2] = ">" if col[short] == c2 else "<"
    for a in d.around:
        mid[col[a] - 1], mid[col[a] + 1] = "(", ")"
    for a in d.around2:
        mid[col[a] - 1], mid[col[a] + 1] = "{", "}"
    for a, side, lab in d.slots:
        (up if side == "up" else down)[col[a]] = "@"
    lines = ["".join(up).rstrip(), "".join(mid).rstrip(), "".join(down).rstrip()]
    for i, supp, coeffs, _ in d.lanes:
        lane = row()
        cs = sorted(col[a] for a in supp)
        for c in range(cs[0], cs[-1] + 1):
            lane[c] = "_"
        for a in supp:
            lane[col[a]] = str(coeffs[a]) if coeffs[a] != 1 else "*"
        tag = " <g" + str(i) + (" marked>" if any(m[0] == i for m in d.marks) else ">")
        lines.append("".join(lane).rstrip() + tag)
    legend = []
    for lab, poss in d.joins:
        legend.append(f"join {lab}: " + " ".join(f"{a}{'+' if s_ == 'up' else '-'}" for a, s_ in poss))
    for a, direction, t in d.arrows:
        legend.append(f"arrow {a}+ {'->' if direction > 0 else '<-'} g{t}")
    for i, anchor in d.marks:
        if i not in {ln[0] for ln in d.lanes}:
            legend.append(f"mark g{i} at {anchor}")
    header = str(r)
    return "\n".join([header] + lines + legend) + "\n"


def render_diagram(s: SphericalSystem, fmt: str = "text", marked=frozenset()) -> str:
    if fmt == "svg":
        return render_svg(s, marked)
    if fmt == "text":
        return render_text(s, marked)
    raise DiagramError(f"unknown diagram format {fmt!r}")
