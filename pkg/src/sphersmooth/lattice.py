"""Exact integer/rational linear algebra and polyhedral cone primitives.

All arithmetic is done with Python's arbitrary-precision integers and
`fractions.Fraction`; nothing here touches floating point.  Vectors are
plain tuples of ints, matrices are tuples of row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


def vector(coords: Iterable[int]) -> IntVector:
    return tuple(int(c) for c in coords)


def matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows must have equal length")
    return out


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch in matrix product")
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols))
        for i in range(len(a))
    )


def mat_vec(a: IntMatrix, v: Sequence[int]) -> IntVector:
    if a and len(a[0]) != len(v):
        raise ValueError("dimension mismatch in matrix-vector product")
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def transpose(a: IntMatrix) -> IntMatrix:
    if not a:
        return ()
    return tuple(tuple(row[j] for row in a) for j in range(len(a[0])))


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dimension mismatch in pairing")
    return sum(x * y for x, y in zip(u, v))


def det(a: IntMatrix) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def gcd_list(xs: Iterable[int]) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


@dataclass(frozen=True)
class SmithDecomposition:
    """left @ A @ right is the diagonal matrix with the stored diagonal.

    left and right are unimodular; diagonal entries are non-negative and
    each divides the next (trailing zeros allowed).
    """

    left: IntMatrix
    diag: tuple[int, ...]
    right: IntMatrix


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form of a rectangular integer matrix.

    Total on rectangular matrices; the empty matrix is rejected because
    there is no ambient dimension to preserve.
    """
    a = matrix(a)
    if not a or not a[0]:
        raise ValueError("smith_normal_form needs a nonempty rectangular matrix")
    m, n = len(a), len(a[0])
    d = [list(r) for r in a]
    left = [list(r) for r in identity(m)]
    right = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        for k in range(n):
            d[dst][k] += c * d[src][k]
        for k in range(m):
            left[dst][k] += c * left[src][k]

    def add_col(src, dst, c):
        for row in d:
            row[dst] += c * row[src]
        for row in right:
            row[dst] += c * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        left[i] = [-x for x in left[i]]

    t = 0
    while t < min(m, n):
        # Locate a pivot of minimal absolute value in the trailing block.
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # Clear row and column t; restart whenever a remainder shrinks the pivot.
        while True:
            for i in range(t + 1, m):
                if d[i][t] % d[t][t] != 0:
                    add_row(t, i, -(d[i][t] // d[t][t]))
                    swap_rows(t, i)
                    break
            else:
                for i in range(t + 1, m):
                    if d[i][t] != 0:
                        add_row(t, i, -(d[i][t] // d[t][t]))
                for j in range(t + 1, n):
                    if d[t][j] % d[t][t] != 0:
                        add_col(t, j, -(d[t][j] // d[t][t]))
                        swap_cols(t, j)
                        break
                else:
                    for j in range(t + 1, n):
                        if d[t][j] != 0:
                            add_col(t, j, -(d[t][j] // d[t][t]))
                    # Row and column are clear; force divisibility of the rest.
                    bad = None
                    for i in range(t + 1, m):
                        for j in range(t + 1, n):
                            if d[i][j] % d[t][t] != 0:
                                bad = i
                                break
                        if bad is not None:
                            break
                    if bad is None:
                        break
                    add_row(bad, t, 1)
        if d[t][t] < 0:
            negate_row(t)
        t += 1

    diag = tuple(d[i][i] for i in range(min(m, n)))
    return SmithDecomposition(matrix(left), diag, matrix(right))


def elementary_divisors(a: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(a).diag


def is_part_of_basis(vs: Sequence[Sequence[int]], ambient_rank: int) -> bool:
    """True iff vs is independent and extends to a Z-basis of Z**ambient_rank.

    Equivalent to all elementary divisors of the stacked matrix being 1.
    The empty family is part of any basis.
    """
    vs = [vector(v) for v in vs]
    for v in vs:
        if len(v) != ambient_rank:
            raise ValueError("vector length does not match ambient rank")
    if not vs:
        return True
    if len(vs) > ambient_rank:
        return False
    diag = elementary_divisors(matrix(vs))
    return all(x == 1 for x in diag)


def primitive_generator(v: Sequence[int]) -> IntVector:
    """v divided by the gcd of its coordinates; direction is preserved."""
    v = vector(v)
    g = gcd_list(v)
    if g == 0:
        raise ValueError("the zero vector generates no ray")
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class RationalCone:
    """Convex cone spanned by integer generators (not required primitive)."""

    generators: IntMatrix
    ambient_rank: int

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.ambient_rank:
                raise ValueError("generator length does not match ambient rank")


def cone(generators: Iterable[Iterable[int]], ambient_rank: int) -> RationalCone:
    return RationalCone(matrix(generators), ambient_rank)


# ---------------------------------------------------------------------------
# Exact linear programming (two-phase simplex over Fraction, Bland's rule).
# Problem form: maximize c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0.
# ---------------------------------------------------------------------------


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col] != 0:
            f = tab[r][col]
            tab[r] = [a - f * b for a, b in zip(tab[r], tab[row])]
    basis[row] = col


def _run_simplex(tab, basis, ncols):
    """Bland-rule simplex on a tableau whose last row is the objective
    (stored negated) and last column the RHS.  Returns "optimal" or
    "unbounded"."""
    while True:
        obj = tab[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best = None
        for r in range(len(tab) - 1):
            if tab[r][col] > 0:
                ratio = tab[r][-1] / tab[r][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], col)


def solve_lp(objective, a_ub, b_ub, a_eq, b_eq):
    """Exact LP.  Returns (status, value) with status one of "optimal",
    "unbounded", "infeasible"; value is a Fraction when optimal."""
    nvar = len(objective)
    rows = []
    rhs = []
    for coeffs, b in zip(a_ub, b_ub):
        rows.append([Fraction(x) for x in coeffs] + [Fraction(0)] * len(a_ub))
        rows[-1][nvar + len(rows) - 1] = Fraction(1)
        rhs.append(Fraction(b))
    nslack = len(a_ub)
    for coeffs, b in zip(a_eq, b_eq):
        rows.append([Fraction(x) for x in coeffs] + [Fraction(0)] * nslack)
        rhs.append(Fraction(b))
    total = nvar + nslack
    for r, b in zip(rows, rhs):
        if b < 0:
            for k in range(total):
                r[k] = -r[k]
        # rhs sign fixed below when building the tableau
    rhs = [abs(b) for b in rhs]

    # Phase 1: artificial variables for every row.
    nart = len(rows)
    tab = []
    basis = []
    for i, (r, b) in enumerate(zip(rows, rhs)):
        art = [Fraction(0)] * nart
        art[i] = Fraction(1)
        tab.append(r + art + [b])
        basis.append(total + i)
    # Objective: minimize the sum of artificials, i.e. maximize its negation,
    # priced out against the artificial basis.
    obj = [Fraction(0)] * (total + nart + 1)
    for i in range(len(tab)):
        for j in range(total + nart + 1):
            obj[j] -= tab[i][j]
    for i in range(len(tab)):
        obj[total + i] = Fraction(0)
    tab.append(obj)
    _run_simplex(tab, basis, total + nart)
    if -tab[-1][-1] != 0:
        return "infeasible", None
    # Drive leftover artificials out of the basis where possible.
    for r in range(len(basis)):
        if basis[r] >= total:
            col = next((j for j in range(total) if tab[r][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
    keep = [r for r in range(len(basis)) if basis[r] < total]
    tab = [[tab[r][j] for j in range(total)] + [tab[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]

    # Phase 2.
    obj = [Fraction(-c) for c in objective] + [Fraction(0)] * (nslack + 1)
    tab.append(obj)
    for r in range(len(basis)):
        col = basis[r]
        if tab[-1][col] != 0:
            f = tab[-1][col]
            tab[-1] = [a - f * b for a, b in zip(tab[-1], tab[r])]
    status = _run_simplex(tab, basis, total)
    if status == "unbounded":
        return "unbounded", None
    return "optimal", tab[-1][-1]


def cone_contains(c: RationalCone, v: Sequence, strict: bool = False) -> bool:
    """Exact membership of v in c (strict: in the relative interior)."""
    if len(v) != c.ambient_rank:
        raise ValueError("vector length does not match the cone's ambient rank")
    gens = c.generators
    if not gens:
        return all(x == 0 for x in v)
    k = len(gens)
    if not strict:
        # feasibility of sum(lam_i g_i) = v, lam >= 0
        a_eq = [[gens[i][j] for i in range(k)] for j in range(c.ambient_rank)]
        b_eq = list(v)
        status, _ = solve_lp([0] * k, [], [], a_eq, b_eq)
        return status != "infeasible"
    # relative interior: sum(lam_i g_i) = v with lam_i >= s, maximize s
    a_eq = [[gens[i][j] for i in range(k)] + [0] for j in range(c.ambient_rank)]
    b_eq = list(v)
    a_ub = [[(-1 if i == t else 0) for i in range(k)] + [1] for t in range(k)]
    b_ub = [0] * k
    status, val = solve_lp([0] * k + [1], a_ub, b_ub, a_eq, b_eq)
    if status == "infeasible":
        return False
    return status == "unbounded" or val > 0


def cones_meet_interior(c: RationalCone, halfspaces: Sequence[Sequence[int]]) -> bool:
    """True iff some point of relint(c) satisfies <point, h> <= 0 for all h."""
    for h in halfspaces:
        if len(h) != c.ambient_rank:
            raise ValueError("halfspace normal length does not match ambient rank")
    gens = c.generators
    if not gens:
        return True  # relint of the zero cone is {0}
    k = len(gens)
    a_ub = [[(-1 if i == t else 0) for i in range(k)] + [1] for t in range(k)]
    b_ub = [0] * k
    for h in halfspaces:
        a_ub.append([dot(g, h) for g in gens] + [0])
        b_ub.append(0)
    status, val = solve_lp([0] * k + [1], a_ub, b_ub, [], [])
    if status == "infeasible":
        return False
    return status == "unbounded" or val > 0


def extremal_rays(c: RationalCone) -> tuple[IntVector, ...]:
    """Primitive generators of the extremal rays, sorted lexicographically.

    A generator is extremal iff it does not lie in the cone spanned by the
    other generators; duplicates up to positive scaling are removed first.
    """
    prims = []
    for g in c.generators:
        if any(x != 0 for x in g):
            p = primitive_generator(g)
            if p not in prims:
                prims.append(p)
    rays = []
    for i, p in enumerate(prims):
        others = [q for j, q in enumerate(prims) if j != i]
        if not cone_contains(RationalCone(matrix(others), c.ambient_rank), p):
            rays.append(p)
    return tuple(sorted(rays))


def cone_dim(c: RationalCone) -> int:
    """Dimension of the linear span of the cone."""
    gens = [g for g in c.generators if any(x != 0 for x in g)]
    if not gens:
        return 0
    return sum(1 for x in elementary_divisors(matrix(gens)) if x != 0)


def solve_rational(a: IntMatrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """Solve A x = b exactly, where A has full column rank.

    Returns the unique rational solution, or None when the system is
    inconsistent.  Raises if the columns are dependent (no unique answer).
    """
    m = len(a)
    n = len(a[0]) if a else 0
    rows = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    r = 0
    pivots = []
    for col in range(n):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][col] for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    if len(pivots) < n:
        raise ValueError("columns are linearly dependent; no unique solution")
    for i in range(r, m):
        if rows[i][-1] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return tuple(sol)
