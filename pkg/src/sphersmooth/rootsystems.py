"""Root-system combinatorics: Cartan data, coroot pairings, sub-diagrams,
admissible spherical-root shapes, and Dynkin-diagram automorphisms.

Conventions are Bourbaki throughout: components are numbered in the order
given, vertices within a component use Bourbaki positions starting at 1.
For B_n the last simple root is short, for C_n it is long, for D_n the two
fork arms are the last two vertices, E_n has the branch vertex alpha_2
attached to alpha_4, in F_4 the first two roots are long, in G_2 the first
root is short.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .lattice import IntMatrix, IntVector, matrix

VALID_LETTERS = "ABCDEFG"


class SimpleRootId(NamedTuple):
    component: int
    position: int  # 1-based Bourbaki position

    def __str__(self):
        return f"{self.component}.{self.position}"


def parse_root_id(s: str) -> SimpleRootId:
    comp, _, pos = s.partition(".")
    return SimpleRootId(int(comp), int(pos))


def _normalize_components(components):
    out = []
    for letter, rank in components:
        letter = letter.upper()
        rank = int(rank)
        if letter not in VALID_LETTERS or rank < 1:
            raise ValueError(f"bad component {letter}{rank}")
        if letter in "BC" and rank == 1:
            letter = "A"
        if letter == "D":
            if rank == 1:
                letter = "A"
            elif rank == 2:
                out.append(("A", 1))
                letter, rank = "A", 1
            elif rank == 3:
                letter, rank = "A", 3
        if letter == "E" and rank not in (6, 7, 8):
            raise ValueError("E rank must be 6, 7 or 8")
        if letter == "F" and rank != 4:
            raise ValueError("F rank must be 4")
        if letter == "G" and rank != 2:
            raise ValueError("G rank must be 2")
        out.append((letter, rank))
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    components: tuple[tuple[str, int], ...]
    torus_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", _normalize_components(self.components))
        if self.torus_rank < 0:
            raise ValueError("torus rank must be non-negative")

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def simple_roots(self) -> tuple[SimpleRootId, ...]:
        return tuple(
            SimpleRootId(ci, p)
            for ci, (_, r) in enumerate(self.components)
            for p in range(1, r + 1)
        )

    def flat_index(self, a: SimpleRootId) -> int:
        off = 0
        for ci, (_, r) in enumerate(self.components):
            if ci == a.component:
                if not 1 <= a.position <= r:
                    raise ValueError(f"no simple root {a} in {self}")
                return off + a.position - 1
            off += r
        raise ValueError(f"no component {a.component} in {self}")

    def __str__(self):
        parts = [f"{l}{r}" for l, r in self.components] or ["(empty)"]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "x".join(parts)


def _component_pairing(letter: str, rank: int, i: int, j: int) -> int:
    """<alpha_i-coroot, alpha_j> inside one component, positions 1-based."""
    if i == j:
        return 2
    lo, hi = min(i, j), max(i, j)
    adjacent = hi - lo == 1

    if letter == "A":
        return -1 if adjacent else 0
    if letter == "B":
        # alpha_rank is short; <alpha_n-coroot, alpha_{n-1}> = -2
        if adjacent and hi < rank:
            return -1
        if adjacent:  # pair (rank-1, rank)
            return -2 if i == rank else -1
        return 0
    if letter == "C":
        # alpha_rank is long; <alpha_{n-1}-coroot, alpha_n> = -2
        if adjacent and hi < rank:
            return -1
        if adjacent:
            return -2 if j == rank else -1
        return 0
    if letter == "D":
        # chain 1..rank-2, arms rank-1 and rank attached to rank-2
        def linked(u, v):
            u, v = min(u, v), max(u, v)
            if v <= rank - 2 and v - u == 1:
                return True
            if v in (rank - 1, rank) and u == rank - 2:
                return True
            if u == rank - 1 and v == rank:
                return False
            return False

        return -1 if linked(i, j) else 0
    if letter == "E":
        # chain 1-3-4-5-6(-7-8), branch 2 attached to 4
        chain = [1, 3, 4, 5, 6, 7, 8][:rank - 1]
        edges = {frozenset(e) for e in zip(chain, chain[1:])}
        edges.add(frozenset((2, 4)))
        return -1 if frozenset((i, j)) in edges else 0
    if letter == "F":
        # 1-2=>3-4 with alpha_1, alpha_2 long
        if adjacent:
            if {i, j} == {2, 3}:
                return -1 if i == 2 else -2
            return -1
        return 0
    if letter == "G":
        # alpha_1 short: <alpha_1-coroot, alpha_2> = -3
        return -3 if (i, j) == (1, 2) else -1
    raise AssertionError(letter)


def coroot_pairing_root(r: RootSystem, a: SimpleRootId, b: SimpleRootId) -> int:
    """<a-coroot, b> for two simple roots."""
    if a.component != b.component:
        return 0
    letter, rank = r.components[a.component]
    return _component_pairing(letter, rank, a.position, b.position)


def cartan_matrix(r: RootSystem) -> IntMatrix:
    """Row i holds the fundamental-weight coordinates of simple root i,
    i.e. entry (i, j) is <alpha_j-coroot, alpha_i>."""
    roots = r.simple_roots()
    return matrix(
        [[coroot_pairing_root(r, b, a) for b in roots] for a in roots]
    )


@dataclass(frozen=True)
class Weight:
    """Integer weight in fundamental-weight plus torus-character coordinates."""

    fw_coords: IntVector
    torus_coords: IntVector = ()

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.fw_coords, other.fw_coords)),
            tuple(a + b for a, b in zip(self.torus_coords, other.torus_coords)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a - b for a, b in zip(self.fw_coords, other.fw_coords)),
            tuple(a - b for a, b in zip(self.torus_coords, other.torus_coords)),
        )

    def scaled(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.fw_coords), tuple(c * a for a in self.torus_coords))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.fw_coords) and all(x == 0 for x in self.torus_coords)


def zero_weight(r: RootSystem) -> Weight:
    return Weight((0,) * r.rank, (0,) * r.torus_rank)


def coroot_pairing(r: RootSystem, a: SimpleRootId, w: Weight) -> int:
    """<a-coroot, w>: the fundamental-weight coordinate dual to a."""
    if len(w.fw_coords) != r.rank:
        raise ValueError("weight length does not match root system rank")
    return w.fw_coords[r.flat_index(a)]


def root_as_weight(r: RootSystem, coeffs: Iterable[int]) -> Weight:
    """The weight of an N-linear combination of simple roots."""
    coeffs = tuple(coeffs)
    roots = r.simple_roots()
    if len(coeffs) != len(roots):
        raise ValueError("coefficient vector length does not match rank")
    fw = [0] * r.rank
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        for i, a in enumerate(roots):
            fw[i] += c * coroot_pairing_root(r, a, roots[j])
    return Weight(tuple(fw), (0,) * r.torus_rank)


def coroot_pairing_coeffs(r: RootSystem, a: SimpleRootId, coeffs: Iterable[int]) -> int:
    """<a-coroot, sum coeff_j alpha_j> computed directly from the Cartan data."""
    roots = r.simple_roots()
    return sum(c * coroot_pairing_root(r, a, roots[j]) for j, c in enumerate(coeffs) if c)


def support(r: RootSystem, coeffs: Iterable[int]) -> tuple[SimpleRootId, ...]:
    roots = r.simple_roots()
    return tuple(roots[j] for j, c in enumerate(coeffs) if c)


# ---------------------------------------------------------------------------
# Shape classification of spherical roots.
# ---------------------------------------------------------------------------


class RootShape(NamedTuple):
    """One admissible reading of a coefficient vector as a spherical root.

    sp_required / sp_allowed describe which support vertices must / may lie
    in S^p for a datum containing the root to be valid."""

    tag: str
    sp_required: frozenset[SimpleRootId]
    sp_allowed: frozenset[SimpleRootId]
    doubled: "tuple | None" = None  # coefficient vector of 2*root when that is again a shape


def _edge_kind(r, a, b):
    """(multiplicity, short_end) for the edge between adjacent simple roots."""
    p = coroot_pairing_root(r, a, b)
    q = coroot_pairing_root(r, b, a)
    if p == 0:
        return (0, None)
    mult = max(-p, -q)
    short = a if p < q else (b if q < p else None)
    return (mult, short)


def _chain_order(r, verts):
    """Order the vertices of a path sub-diagram from one end; None if not a path."""
    if len(verts) == 1:
        return list(verts)
    adj = {v: [] for v in verts}
    for a, b in itertools.combinations(verts, 2):
        if coroot_pairing_root(r, a, b) != 0:
            adj[a].append(b)
            adj[b].append(a)
    ends = sorted(v for v in verts if len(adj[v]) == 1)
    if len(ends) != 2 or any(len(adj[v]) > 2 for v in verts):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(verts):
        nxt = [w for w in adj[order[-1]] if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def spherical_root_shapes(r: RootSystem, coeffs: Iterable[int]) -> list[RootShape]:
    """All Table-style shape readings of the coefficient vector (empty: rejected)."""
    coeffs = tuple(coeffs)
    if any(c < 0 for c in coeffs):
        return []
    roots = r.simple_roots()
    supp = [(roots[j], c) for j, c in enumerate(coeffs) if c]
    if not supp:
        return []
    verts = [v for v, _ in supp]
    cmap = dict(supp)
    shapes: list[RootShape] = []

    def fs(*vs):
        return frozenset(vs)

    if len(verts) == 1:
        v = verts[0]
        if cmap[v] == 1:
            shapes.append(RootShape("alpha", fs(), fs(), None))
        elif cmap[v] == 2:
            shapes.append(RootShape("2alpha", fs(), fs()))
        return shapes

    if len(verts) == 2 and coroot_pairing_root(r, *verts) == 0:
        if all(cmap[v] == 1 for v in verts):
            shapes.append(RootShape("alpha_pair", fs(), fs()))
        return shapes

    # Connected multi-vertex support from here on.
    comp_of = {v: v.component for v in verts}
    if len(set(comp_of.values())) > 1:
        return []

    # D-type support: exactly one degree-3 vertex, three plain arms.
    adj = {v: [w for w in verts if w != v and coroot_pairing_root(r, v, w) != 0] for v in verts}
    deg3 = [v for v in verts if len(adj[v]) == 3]
    if len(deg3) == 1 and all(len(adj[v]) <= 3 for v in verts):
        if all(_edge_kind(r, a, b)[0] <= 1 for a in verts for b in adj[a]):
            center = deg3[0]
            arms = []
            for start in adj[center]:
                arm = [start]
                prev = center
                while True:
                    nxt = [w for w in adj[arm[-1]] if w != prev]
                    if not nxt:
                        break
                    prev = arm[-1]
                    arm.append(nxt[0])
                arms.append(arm)
            # D-chain pattern (2,...,2,1,1): the two coefficient-1 vertices
            # are single-vertex arms, everything else carries 2.
            ones = [a for a in arms if len(a) == 1 and cmap[a[0]] == 1]
            rest = [a for a in arms if a not in ones]
            if (
                len(arms) == 3
                and len(ones) == 2
                and len(rest) == 1
                and cmap[center] == 2
                and all(cmap[v] == 2 for v in rest[0])
            ):
                # the far end of the doubled arm is the moved vertex
                req = fs(*(rest[0][:-1] + [center, ones[0][0], ones[1][0]]))
                shapes.append(RootShape("d_chain", req, req))
        return shapes

    order = _chain_order(r, verts)
    if order is None:
        return shapes
    cvec = [cmap[v] for v in order]
    edges = [_edge_kind(r, a, b) for a, b in zip(order, order[1:])]
    mults = [m for m, _ in edges]

    for ordv, cv, edg in ((order, cvec, edges), (list(reversed(order)), list(reversed(cvec)), [_edge_kind(r, a, b) for a, b in zip(list(reversed(order)), list(reversed(order))[1:])])):
        n = len(ordv)
        ms = [m for m, _ in edg]
        shorts = [s for _, s in edg]
        if all(m == 1 for m in ms):
            if all(c == 1 for c in cv):
                req = fs(*ordv[1:-1])
                shapes.append(RootShape("a_chain", req, req))
            if n == 3 and cv == [1, 2, 1]:
                req = fs(ordv[0], ordv[2])
                shapes.append(RootShape("d3", req, req))
        elif all(m == 1 for m in ms[:-1]) and ms[-1] in (2, 3) and n >= 2:
            last_short = shorts[-1] == ordv[-1]
            if ms[-1] == 2 and last_short:
                if all(c == 1 for c in cv):
                    req = fs(*ordv[1:-1])
                    dbl = tuple(2 * c for c in coeffs)
                    shapes.append(RootShape("b_chain", req, req | fs(ordv[-1]), dbl))
                if all(c == 2 for c in cv):
                    req = fs(*ordv[1:])
                    shapes.append(RootShape("2b_chain", req, req))
                if n == 3 and cv == [1, 2, 3]:
                    req = fs(*ordv[:2])
                    shapes.append(RootShape("b3_spin", req, req))
            if ms[-1] == 2 and not last_short:
                if cv == [1] * n and n == 2 or (n >= 3 and cv == [1] + [2] * (n - 2) + [1]):
                    req = fs(*ordv[2:])
                    shapes.append(RootShape("c_chain", req, req))
            if ms[-1] == 3 and n == 2:
                gshort = shorts[-1]
                glong = ordv[0] if gshort == ordv[1] else ordv[1]
                cs, cl = cmap[gshort], cmap[glong]
                if (cs, cl) == (1, 1):
                    shapes.append(RootShape("g2_sum", fs(), fs()))
                elif (cs, cl) == (2, 1):
                    dbl = tuple(2 * c for c in coeffs)
                    shapes.append(RootShape("g2_short", fs(glong), fs(glong), dbl))
                elif (cs, cl) == (4, 2):
                    shapes.append(RootShape("g2_double", fs(glong), fs(glong)))
        elif len(ms) == 3 and ms == [1, 2, 1] and n == 4:
            if shorts[1] == ordv[2] and cv == [1, 2, 3, 2]:
                req = fs(*ordv[:3])
                shapes.append(RootShape("f4", req, req))

    # Deduplicate identical readings produced by the two orientations.
    seen = []
    for s in shapes:
        if s not in seen:
            seen.append(s)
    return seen


def admissible_spherical_root(r: RootSystem, coeffs: Iterable[int]):
    """Classify a coefficient vector as a spherical-root shape.

    Returns the list of admissible readings; raises ValueError with the
    failing constraints when the vector matches no shape."""
    coeffs = tuple(coeffs)
    shapes = spherical_root_shapes(r, coeffs)
    if not shapes:
        raise ValueError(
            f"coefficient vector {coeffs} matches no admissible spherical-root shape on {r}"
        )
    return shapes


# ---------------------------------------------------------------------------
# Sub-root systems.
# ---------------------------------------------------------------------------


def _classify_connected(r: RootSystem, verts: list[SimpleRootId]):
    """Classify the sub-diagram on verts; returns (letter, rank, bourbaki order)."""
    n = len(verts)
    if n == 1:
        return ("A", 1, list(verts))
    adj = {v: [w for w in verts if w != v and coroot_pairing_root(r, v, w) != 0] for v in verts}
    deg3 = sorted(v for v in verts if len(adj[v]) == 3)
    edge_kinds = {}
    for v in verts:
        for w in adj[v]:
            edge_kinds[frozenset((v, w))] = _edge_kind(r, v, w)
    multi = [e for e, (m, _) in edge_kinds.items() if m > 1]

    if deg3:
        center = deg3[0]
        arms = []
        for start in sorted(adj[center]):
            arm = [start]
            prev = center
            while True:
                nxt = [w for w in adj[arm[-1]] if w != prev]
                if not nxt:
                    break
                prev = arm[-1]
                arm.append(nxt[0])
            arms.append(arm)
        arms.sort(key=lambda a: (len(a), a[0]))
        lx, ly, lz = sorted(len(a) for a in arms)
        if (lx, ly) == (1, 1):
            # D_{lz+3}: long arm reversed, then center, then the two short arms
            long_arm = max(arms, key=len) if lz > 1 else arms[2]
            shorts = sorted(a[0] for a in arms if a is not long_arm)
            order = list(reversed(long_arm)) + [center] + shorts
            letter, rank = "D", n
            if n == 4:
                order = [min(a[0] for a in arms), center] + sorted(
                    a[0] for a in arms if a[0] != min(b[0] for b in arms)
                )
            return (letter, rank, order)
        if (lx, ly, lz) in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            # E_n in Bourbaki order: the branch vertex is alpha_2, attached to
            # alpha_4; the chain runs from the length-2 arm through the center.
            branch = next(a for a in arms if len(a) == 1)
            rest = sorted((a for a in arms if a is not branch), key=len)
            short_chain, long_chain = rest[0], rest[1]
            if len(short_chain) != 2:
                raise ValueError("sub-diagram is not a root-system diagram")
            chain = list(reversed(short_chain)) + [center] + long_chain
            labels = [1, 3, 4, 5, 6, 7, 8][: len(chain)]
            order_map = {lab: v for lab, v in zip(labels, chain)}
            order_map[2] = branch[0]
            order = [order_map[k] for k in range(1, n + 1)]
            return ("E", n, order)
        raise ValueError("sub-diagram is not a root-system diagram")

    order = _chain_order(r, verts)
    if order is None:
        raise ValueError("sub-diagram is not a root-system diagram")
    if not multi:
        if order[0] > order[-1]:
            order = list(reversed(order))
        return ("A", n, order)
    if len(multi) > 1:
        raise ValueError("sub-diagram has several multiple edges")
    m, short = edge_kinds[multi[0]]
    if m == 3:
        # G2: short root first
        other = next(v for v in order if v != short)
        return ("G", 2, [short, other])
    idx = next(i for i, (a, b) in enumerate(zip(order, order[1:])) if frozenset((a, b)) == multi[0])
    left, right = order[: idx + 1], order[idx + 1 :]
    if short == order[idx + 1]:
        long_side, short_side = left, right
    else:
        long_side, short_side = [x for x in reversed(right)], [x for x in reversed(left)]
    if n == 2:
        # Both B2 and C2 present a single double edge; keep the ambient
        # orientation so restricting to a full component is the identity.
        a, b = sorted(multi[0])
        if short == a:
            return ("C", 2, [a, b])
        return ("B", 2, [a, b])
    if len(short_side) == 1:
        return ("B", n, long_side + short_side)
    if len(long_side) == 1:
        return ("C", n, list(reversed(short_side)) + long_side)
    if len(long_side) == 2 and len(short_side) == 2:
        return ("F", 4, long_side + short_side)
    raise ValueError("sub-diagram is not a root-system diagram")


def sub_root_system(r: RootSystem, subset: Iterable[SimpleRootId]):
    """Root system spanned by a subset of simple roots.

    Returns (system, relabeling) where relabeling maps each old root id in
    the subset to its id in the new system.  The torus rank is preserved.
    """
    subset = sorted(set(subset))
    for a in subset:
        r.flat_index(a)  # validates
    remaining = set(subset)
    comps = []
    while remaining:
        seed = min(remaining)
        block = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for w in list(remaining):
                if w not in block and coroot_pairing_root(r, v, w) != 0:
                    block.add(w)
                    frontier.append(w)
        remaining -= block
        comps.append(_classify_connected(r, sorted(block)))
    comps.sort(key=lambda c: min(c[2]))
    relabel = {}
    for ci, (_, _, order) in enumerate(comps):
        for pos, old in enumerate(order, start=1):
            relabel[old] = SimpleRootId(ci, pos)
    sub = RootSystem(tuple((l, k) for l, k, _ in comps), r.torus_rank)
    # Component normalization (e.g. D3 -> A3) must not break the relabeling.
    assert sub.rank == len(subset)
    return sub, relabel


# ---------------------------------------------------------------------------
# Diagram automorphisms.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A Cartan-matrix-preserving permutation of the simple roots."""

    system: RootSystem
    mapping: tuple[tuple[SimpleRootId, SimpleRootId], ...]

    def __post_init__(self):
        m = dict(self.mapping)
        for a in self.system.simple_roots():
            for b in self.system.simple_roots():
                if coroot_pairing_root(self.system, m[a], m[b]) != coroot_pairing_root(
                    self.system, a, b
                ):
                    raise ValueError("mapping does not preserve the Cartan matrix")

    def apply(self, a: SimpleRootId) -> SimpleRootId:
        return dict(self.mapping)[a]

    def as_dict(self):
        return dict(self.mapping)

    def apply_coeffs(self, r: RootSystem, coeffs):
        out = [0] * len(coeffs)
        roots = r.simple_roots()
        m = dict(self.mapping)
        for j, c in enumerate(coeffs):
            if c:
                out[r.flat_index(m[roots[j]])] = c
        return tuple(out)


def _component_symmetries(letter: str, rank: int):
    """Per-component vertex permutations (lists of pos->pos dicts)."""
    ident = {p: p for p in range(1, rank + 1)}
    syms = [ident]
    if letter == "A" and rank >= 2:
        syms.append({p: rank + 1 - p for p in range(1, rank + 1)})
    elif letter == "D" and rank == 4:
        # S3 on the arm vertices 1, 3, 4
        syms = []
        for perm in itertools.permutations((1, 3, 4)):
            m = {2: 2}
            for src, dst in zip((1, 3, 4), perm):
                m[src] = dst
            syms.append(m)
    elif letter == "D" and rank >= 5:
        m = dict(ident)
        m[rank - 1], m[rank] = rank, rank - 1
        syms.append(m)
    elif letter == "E" and rank == 6:
        syms.append({1: 6, 3: 5, 4: 4, 2: 2, 5: 3, 6: 1})
    return syms


def diagram_automorphisms(r: RootSystem) -> tuple[DiagramAutomorphism, ...]:
    """The full automorphism group of the Dynkin diagram (torus untouched)."""
    ncomp = len(r.components)
    groups = {}
    for ci, comp in enumerate(r.components):
        groups.setdefault(comp, []).append(ci)
    comp_perms = [{}]
    for comp, idxs in sorted(groups.items()):
        new_perms = []
        for perm in itertools.permutations(idxs):
            for base in comp_perms:
                p = dict(base)
                for src, dst in zip(idxs, perm):
                    p[src] = dst
                new_perms.append(p)
        comp_perms = new_perms
    autos = []
    for cperm in comp_perms:
        sym_choices = [_component_symmetries(*r.components[ci]) for ci in range(ncomp)]
        for combo in itertools.product(*sym_choices):
            mapping = []
            for ci in range(ncomp):
                for pos in range(1, r.components[ci][1] + 1):
                    mapping.append(
                        (SimpleRootId(ci, pos), SimpleRootId(cperm[ci], combo[ci][pos]))
                    )
            autos.append(DiagramAutomorphism(r, tuple(sorted(mapping))))
    uniq = []
    for a in autos:
        if a not in uniq:
            uniq.append(a)
    return tuple(uniq)
