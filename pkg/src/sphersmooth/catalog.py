"""The catalog of spherical systems of indecomposable multiplicity-free
spaces, with marked spherical roots, plus the isomorphism matcher.

Each entry stores the weight-monoid data of the underlying module: the
acting group's root system (one torus factor per irreducible summand), the
basic weights, and the spherical roots of the open orbit as simple-root
coefficients.  Everything else is computed:

  * M-coordinates of the roots by exact linear solve against the basis,
  * S^p as the simple roots pairing to zero with every basic weight,
  * the type-a colors as the non-invariant basis divisors pairing 1 with a
    simple spherical root (their functionals are dual basis vectors),
  * the entry's spherical system as the spherical closure of that datum,
  * marked roots as the closure roots pairing -1 with the valuation of an
    invariant divisor, i.e. with a -1 coefficient on a purely-torus basis
    weight.

Entry data was transcribed from the published family list: the per-entry
comment names the diagram features (which vertices carry type-a circle
pairs, chain/doubled decorations, color-sharing lines, arrows, and the
invariant-divisor marks) that pin the combinatorics down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from .datum import (
    ColoredCone,
    HomogeneousSphericalDatum,
    SphericalRoot,
    SphericalSystem,
    decompose,
    full_colors,
    spherical_closure_result,
    validate_datum,
)
from .lattice import matrix, solve_rational
from .rootsystems import (
    RootSystem,
    SimpleRootId,
    Weight,
    coroot_pairing,
    diagram_automorphisms,
    root_as_weight,
)


class ModuleData(NamedTuple):
    """Weight-monoid presentation of a multiplicity-free module."""

    root_system: RootSystem
    basis: tuple[Weight, ...]
    sigma_coeffs: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CatalogEntry:
    id: int
    description: str
    param_names: tuple[str, ...]
    domain: Callable[[tuple[int, ...]], bool]
    domain_text: str
    smallest: tuple[tuple[int, ...], ...]
    build: Callable[[tuple[int, ...]], ModuleData]

    def rank_of(self, params: tuple[int, ...]) -> int:
        return self.build(params).root_system.rank


def _wb(rank: int, torus: int):
    """Weight builder for a fixed shape: w({flat: coeff}, (eps...))."""

    def w(fw: dict[int, int], eps: tuple[int, ...]) -> Weight:
        v = [0] * rank
        for k, c in fw.items():
            v[k] = c
        return Weight(tuple(v), tuple(eps))

    return w


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def _chain(n: int, lo: int, hi: int, coeff=1) -> tuple[int, ...]:
    return tuple(coeff if lo <= j <= hi else 0 for j in range(n))


# ---------------------------------------------------------------------------
# Entry builders.  Offsets: fw coordinates are concatenated per component.
# ---------------------------------------------------------------------------


def _e01(params):  # SL(n) on C^n: one circled end vertex, no roots
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=1)
    w = _wb(r.rank, 1)
    return ModuleData(r, (w({0: 1}, (1,)),), ())


def _e02(params):  # Sp(2n) on C^(2n): circled first vertex of the C-chain
    (n,) = params
    r = RootSystem((("C", n),), torus_rank=1)
    w = _wb(r.rank, 1)
    return ModuleData(r, (w({0: 1}, (1,)),), ())


def _e03(params):  # Spin(2n+1) on C^(2n+1): doubled B-chain root, marked
    (n,) = params
    r = RootSystem((("B", n),), torus_rank=1)
    w = _wb(r.rank, 1)
    return ModuleData(r, (w({0: 1}, (1,)), w({}, (2,))), (_chain(n, 0, n - 1, 2),))


def _e04(params):  # Spin(2n) on C^(2n): D-chain root, marked
    (n,) = params
    if n == 3:
        # D3 presented as A3: the vector representation is the middle
        # fundamental weight; the root is the (1,2,1) pattern.
        r = RootSystem((("A", 3),), torus_rank=1)
        w = _wb(3, 1)
        return ModuleData(r, (w({1: 1}, (1,)), w({}, (2,))), ((1, 2, 1),))
    r = RootSystem((("D", n),), torus_rank=1)
    w = _wb(r.rank, 1)
    root = tuple([2] * (n - 2) + [1, 1])
    return ModuleData(r, (w({0: 1}, (1,)), w({}, (2,))), (root,))


def _e05(params):  # SL(n) on Sym^2 C^n: every vertex doubled, last marked
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=1)
    w = _wb(r.rank, 1)
    basis = [w({i: 2}, (i + 1,)) for i in range(n - 1)] + [w({}, (n,))]
    sigma = tuple(tuple(2 if j == i else 0 for j in range(n - 1)) for i in range(n - 1))
    return ModuleData(r, tuple(basis), sigma)


def _e06(params):  # SL(n) on Wedge^2 C^n, n odd: (1,2,1) roots, open end circled
    (n,) = params
    m = (n - 1) // 2
    r = RootSystem((("A", n - 1),), torus_rank=1)
    w = _wb(r.rank, 1)
    basis = [w({2 * i - 1: 1}, (i,)) for i in range(1, m + 1)]
    sigma = []
    for i in range(1, m):
        v = [0] * (n - 1)
        v[2 * i - 2], v[2 * i - 1], v[2 * i] = 1, 2, 1
        sigma.append(tuple(v))
    return ModuleData(r, tuple(basis), tuple(sigma))


def _e07(params):  # SL(n) on Wedge^2 C^n, n even: last (1,2,1) root marked
    (n,) = params
    m = n // 2
    r = RootSystem((("A", n - 1),), torus_rank=1)
    w = _wb(r.rank, 1)
    basis = [w({2 * i - 1: 1}, (i,)) for i in range(1, m)] + [w({}, (m,))]
    sigma = []
    for i in range(1, m):
        v = [0] * (n - 1)
        v[2 * i - 2], v[2 * i - 1], v[2 * i] = 1, 2, 1
        sigma.append(tuple(v))
    return ModuleData(r, tuple(basis), tuple(sigma))


def _e08(params):  # SL(n) x SL(n) on C^n (x) C^n: ladder of joined circles
    (n,) = params
    r = RootSystem((("A", n - 1), ("A", n - 1)), torus_rank=1)
    w = _wb(r.rank, 1)
    off = n - 1
    basis = [w({i: 1, off + i: 1}, (i + 1,)) for i in range(n - 1)] + [w({}, (n,))]
    sigma = []
    for i in range(n - 1):
        v = [0] * r.rank
        v[i] = v[off + i] = 1
        sigma.append(tuple(v))
    return ModuleData(r, tuple(basis), tuple(sigma))


def _e09(params):  # SL(n) x SL(n') on C^n (x) C^n', n < n'
    n, np_ = params
    r = RootSystem((("A", n - 1), ("A", np_ - 1)), torus_rank=1)
    w = _wb(r.rank, 1)
    off = n - 1
    basis = []
    for i in range(1, n):
        basis.append(w({i - 1: 1, off + i - 1: 1}, (i,)))
    basis.append(w({off + n - 1: 1}, (n,)))  # the n-minor uses only the big side
    sigma = []
    for i in range(n - 1):
        v = [0] * r.rank
        v[i] = v[off + i] = 1
        sigma.append(tuple(v))
    return ModuleData(r, tuple(basis), tuple(sigma))


def _e10(params):  # SL(2) x Sp(2n') on C^2 (x) C^(2n')
    (np_,) = params
    r = RootSystem((("A", 1), ("C", np_)), torus_rank=1)
    w = _wb(r.rank, 1)
    basis = (w({0: 1, 1: 1}, (1,)), w({2: 1}, (2,)), w({}, (2,)))
    pair = tuple([1, 1] + [0] * (np_ - 1))
    cchain = (0,) + _chain(np_, 0, np_ - 1)
    if np_ >= 3:
        cchain = (0, 1) + tuple(2 for _ in range(np_ - 2)) + (1,)
    return ModuleData(r, basis, (pair, cchain))


def _e11(params):  # SL(3) x Sp(4) on C^3 (x) C^4: all four vertices type a
    r = RootSystem((("A", 2), ("C", 2)), torus_rank=1)
    w = _wb(r.rank, 1)
    basis = (
        w({0: 1, 2: 1}, (1,)),
        w({1: 1, 3: 1}, (2,)),
        w({1: 1}, (2,)),
        w({2: 1}, (3,)),
        w({0: 1, 3: 1}, (4,)),
    )
    sigma = tuple(_unit(4, i) for i in range(4))
    return ModuleData(r, basis, sigma)


def _e12(params):  # SL(3) x Sp(2n'), n' >= 3: adds the C-chain from the 2nd vertex
    (np_,) = params
    r = RootSystem((("A", 2), ("C", np_)), torus_rank=1)
    w = _wb(r.rank, 1)
    basis = (
        w({0: 1, 2: 1}, (1,)),
        w({1: 1, 3: 1}, (2,)),
        w({1: 1}, (2,)),
        w({2: 1}, (3,)),
        w({4: 1}, (3,)),
        w({0: 1, 3: 1}, (4,)),
    )
    sigma = [_unit(r.rank, i) for i in range(4)]
    # C-chain root starting at the second symplectic vertex
    cc = [0, 0] + [0, 1] + [2] * (np_ - 3) + [1]
    sigma.append(tuple(cc))
    return ModuleData(r, basis, tuple(sigma))


def _sp4_sln_basis(n: int):
    """Basic weights of SL(n) x Sp(4) on C^n (x) C^4 for n >= 4."""
    r = RootSystem((("A", n - 1), ("C", 2)), torus_rank=1)
    w = _wb(r.rank, 1)
    off = n - 1
    basis = [
        w({0: 1, off: 1}, (1,)),
        w({1: 1, off + 1: 1}, (2,)),
        w({1: 1}, (2,)),
        w({2: 1, off: 1}, (3,)),
        w({0: 1, 2: 1, off + 1: 1}, (4,)),
    ]
    if n == 4:
        basis.append(w({}, (4,)))  # omega_4 = 0: the invariant
    else:
        basis.append(w({3: 1}, (4,)))
    return r, tuple(basis)


def _e13(params):  # SL(4) x Sp(4) on C^4 (x) C^4: the fully worked family
    r, basis = _sp4_sln_basis(4)
    sigma = tuple(_unit(5, i) for i in range(5))
    return ModuleData(r, basis, sigma)


def _e14(params):  # SL(n) x Sp(4), n >= 5
    (n,) = params
    r, basis = _sp4_sln_basis(n)
    off = n - 1
    sigma = [
        _unit(r.rank, 0),
        _unit(r.rank, 1),
        _unit(r.rank, 2),
        _unit(r.rank, off),
        _unit(r.rank, off + 1),
    ]
    return ModuleData(r, basis, tuple(sigma))


def _e15(params):  # Spin(7) on the 8-dimensional spin representation
    r = RootSystem((("B", 3),), torus_rank=1)
    w = _wb(3, 1)
    return ModuleData(r, (w({2: 1}, (1,)), w({}, (2,))), ((1, 2, 3),))


def _e16(params):  # Spin(9) on the 16-dimensional spin representation
    r = RootSystem((("B", 4),), torus_rank=1)
    w = _wb(4, 1)
    basis = (w({3: 1}, (1,)), w({0: 1}, (2,)), w({}, (2,)))
    return ModuleData(r, basis, ((1, 1, 1, 1), (0, 1, 2, 3)))


def _e17(params):  # Spin(10) on a half-spin representation: horospherical
    r = RootSystem((("D", 5),), torus_rank=1)
    w = _wb(5, 1)
    return ModuleData(r, (w({4: 1}, (1,)), w({0: 1}, (2,))), ())


def _e18(params):  # G2 on C^7
    r = RootSystem((("G", 2),), torus_rank=1)
    w = _wb(2, 1)
    return ModuleData(r, (w({0: 1}, (1,)), w({}, (2,))), ((4, 2),))


def _e19(params):  # E6 on C^27: two D5-shaped roots, the determinant marks one
    r = RootSystem((("E", 6),), torus_rank=1)
    w = _wb(6, 1)
    basis = (w({5: 1}, (1,)), w({0: 1}, (2,)), w({}, (3,)))
    return ModuleData(r, basis, ((2, 1, 2, 2, 1, 0), (0, 1, 1, 2, 2, 2)))


def _e20(params):  # Spin(8) on the two half-spin representations
    r = RootSystem((("D", 4),), torus_rank=2)
    w = _wb(4, 2)
    basis = (
        w({2: 1}, (1, 0)),
        w({3: 1}, (0, 1)),
        w({0: 1}, (1, 1)),
        w({}, (2, 0)),
        w({}, (0, 2)),
    )
    sigma = ((1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1))
    return ModuleData(r, basis, sigma)


def _e21(params):  # SL(2) on C^2 + C^2: one type-a vertex, marked
    r = RootSystem((("A", 1),), torus_rank=2)
    w = _wb(1, 2)
    basis = (w({0: 1}, (1, 0)), w({0: 1}, (0, 1)), w({}, (1, 1)))
    return ModuleData(r, basis, ((1,),))


def _e22(params):  # SL(n) on C^n + C^n, n >= 3
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=2)
    w = _wb(r.rank, 2)
    basis = (w({0: 1}, (1, 0)), w({0: 1}, (0, 1)), w({1: 1}, (1, 1)))
    return ModuleData(r, basis, (_unit(n - 1, 0),))


def _e23(params):  # SL(n) on C^n + its dual: full chain root, marked
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=2)
    w = _wb(r.rank, 2)
    basis = (w({0: 1}, (1, 0)), w({n - 2: 1}, (0, 1)), w({}, (1, 1)))
    return ModuleData(r, basis, (_chain(n - 1, 0, n - 2),))


def _e24(params):  # SL(n) on C^n + Wedge^2 C^n: overlapping pair roots
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=2)
    w = _wb(r.rank, 2)
    basis = []
    for j in range(1, n):
        eps = (1 if j % 2 == 1 else 0, j // 2)
        basis.append(w({j - 1: 1}, eps))
    if n % 2 == 0:
        basis.append(w({}, (0, n // 2)))
    else:
        basis.append(w({}, (1, (n - 1) // 2)))
    sigma = tuple(_chain(n - 1, j, j + 1) for j in range(n - 2))
    return ModuleData(r, tuple(basis), sigma)


def _e25(params):  # SL(n) on (C^n)* + Wedge^2 C^n, n even
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=2)
    w = _wb(r.rank, 2)
    basis = [w({0: 1}, (1, 0))]
    for k in range(1, n // 2):
        basis.append(w({n - 2 * k - 1: 1}, (0, k)))
    basis.append(w({}, (0, n // 2)))
    for k in range(1, n // 2):
        basis.append(w({n - 2 * k: 1}, (1, k)))
    sigma = tuple(_chain(n - 1, j, j + 1) for j in range(n - 2))
    return ModuleData(r, tuple(basis), sigma)


def _e26(params):  # SL(n) on (C^n)* + Wedge^2 C^n, n odd
    (n,) = params
    r = RootSystem((("A", n - 1),), torus_rank=2)
    w = _wb(r.rank, 2)
    basis = [w({0: 1}, (1, 0))]
    for k in range(1, (n + 1) // 2):
        basis.append(w({n - 2 * k - 1: 1}, (0, k)))
    for k in range(1, (n + 1) // 2):
        basis.append(w({n - 2 * k: 1}, (1, k)))
    sigma = [_unit(n - 1, 0)]
    sigma += [_chain(n - 1, j, j + 1) for j in range(1, n - 2)]
    return ModuleData(r, tuple(basis), tuple(sigma))


def _tensor_plus_vector_basis(n, np_):
    """(C^n tensor C^n') + C^n': minors of the matrix and of the matrix
    augmented by the extra vector.

    Diagram: two chains of type-a circle pairs in a staircase (the shared
    colors are the plain and the augmented minors), arrows along both rows;
    the second chain runs one vertex longer than the first, any leftover
    tail of the long side carries one plain circle and then sits in S^p."""
    r = RootSystem((("A", n - 1), ("A", np_ - 1)), torus_rank=2)
    w = _wb(r.rank, 2)
    off = n - 1

    def om(i):  # fw index of omega_i on the small side, None if zero
        return i - 1 if 1 <= i <= n - 1 else None

    def omp(i):
        return off + i - 1 if 1 <= i <= np_ - 1 else None

    basis = []
    for i in range(1, min(n, np_) + 1):
        fw = {}
        if om(i) is not None:
            fw[om(i)] = 1
        if omp(i) is not None:
            fw[omp(i)] = fw.get(omp(i), 0) + 1
        basis.append(w(fw, (i, 0)))
    kmax = min(n + 1, np_)
    for k in range(1, kmax + 1):
        fw = {}
        if om(k - 1) is not None:
            fw[om(k - 1)] = 1
        if omp(k) is not None:
            fw[omp(k)] = fw.get(omp(k), 0) + 1
        basis.append(w(fw, (k - 1, 1)))
    return r, tuple(basis)


def _tensor_plus_vector_sigma(n, np_):
    r = RootSystem((("A", n - 1), ("A", np_ - 1)), torus_rank=2)
    off = n - 1
    sigma = [_unit(r.rank, i) for i in range(min(n, np_) - 1)]
    nprimes = min(n, np_ - 1)
    sigma += [_unit(r.rank, off + k) for k in range(nprimes)]
    return tuple(sigma)


def _e27(params):  # (C^n x C^n') + C^n', n < n' - 1
    n, np_ = params
    r, basis = _tensor_plus_vector_basis(n, np_)
    return ModuleData(r, basis, _tensor_plus_vector_sigma(n, np_))


def _e28(params):  # same, n = n' - 1: the augmented determinant marks the tail
    n, np_ = params
    r, basis = _tensor_plus_vector_basis(n, np_)
    return ModuleData(r, basis, _tensor_plus_vector_sigma(n, np_))


def _e29(params):  # same, n = n': the plain determinant marks the small side
    n, np_ = params
    r, basis = _tensor_plus_vector_basis(n, np_)
    return ModuleData(r, basis, _tensor_plus_vector_sigma(n, np_))


def _e30(params):  # same, n > n'
    n, np_ = params
    r, basis = _tensor_plus_vector_basis(n, np_)
    return ModuleData(r, basis, _tensor_plus_vector_sigma(n, np_))


def _tensor_plus_covector_basis(n, np_):
    """(C^n tensor C^n') + (C^n')*: minors and covector contractions.

    Mirror image of the vector family (arrows reversed): the covector
    contracts minors down instead of augmenting them, so the second chain
    runs one vertex short and its tail carries a full chain root (long
    tail), a single extra circle pair (tail of one vertex), or nothing."""
    r = RootSystem((("A", n - 1), ("A", np_ - 1)), torus_rank=2)
    w = _wb(r.rank, 2)
    off = n - 1

    def om(i):
        return i - 1 if 1 <= i <= n - 1 else None

    def omp(i):
        return off + i - 1 if 1 <= i <= np_ - 1 else None

    basis = []
    for i in range(1, min(n, np_) + 1):
        fw = {}
        if om(i) is not None:
            fw[om(i)] = 1
        if omp(i) is not None:
            fw[omp(i)] = fw.get(omp(i), 0) + 1
        basis.append(w(fw, (i, 0)))
    fw0 = {}
    if omp(np_ - 1) is not None:
        fw0[omp(np_ - 1)] = 1
    basis.append(w(fw0, (0, 1)))
    if n < np_:
        kmax = n
    elif n == np_:
        kmax = n - 1
    else:
        kmax = np_ - 1
    for k in range(1, kmax + 1):
        fw = {}
        if om(k) is not None:
            fw[om(k)] = 1
        if omp(k - 1) is not None:
            fw[omp(k - 1)] = fw.get(omp(k - 1), 0) + 1
        basis.append(w(fw, (k, 1)))
    return r, tuple(basis)


def _e31(params):  # (C^n x C^n') + (C^n')*, n < n' - 1: tail carries a chain root
    n, np_ = params
    r, basis = _tensor_plus_covector_basis(n, np_)
    off = n - 1
    sigma = [_unit(r.rank, i) for i in range(n - 1)]
    sigma += [_unit(r.rank, off + k) for k in range(n - 1)]
    sigma.append(tuple(
        1 if off + n - 1 <= j <= off + np_ - 2 else 0 for j in range(r.rank)
    ))
    return ModuleData(r, basis, tuple(sigma))


def _e32(params):  # same, n = n' - 1: the tail chain degenerates to one vertex
    n, np_ = params
    r, basis = _tensor_plus_covector_basis(n, np_)
    off = n - 1
    sigma = [_unit(r.rank, i) for i in range(n - 1)]
    sigma += [_unit(r.rank, off + k) for k in range(n - 1)]
    sigma.append(_unit(r.rank, off + np_ - 2))
    return ModuleData(r, basis, tuple(sigma))


def _e33(params):  # same, n = n'
    n, np_ = params
    r, basis = _tensor_plus_covector_basis(n, np_)
    off = n - 1
    sigma = [_unit(r.rank, i) for i in range(n - 1)]
    sigma += [_unit(r.rank, off + k) for k in range(n - 1)]
    return ModuleData(r, basis, tuple(sigma))


def _e34(params):  # same, n > n'
    n, np_ = params
    r, basis = _tensor_plus_covector_basis(n, np_)
    off = n - 1
    sigma = [_unit(r.rank, i) for i in range(np_ - 1)]
    sigma += [_unit(r.rank, off + k) for k in range(np_ - 1)]
    return ModuleData(r, basis, tuple(sigma))


def _e35(params):  # SL2 x SL2 x SL2 on (C^2 x C^2) + (C^2 x C^2): two marks
    r = RootSystem((("A", 1), ("A", 1), ("A", 1)), torus_rank=2)
    w = _wb(3, 2)
    basis = (
        w({0: 1, 1: 1}, (1, 0)),
        w({1: 1, 2: 1}, (0, 1)),
        w({0: 1, 2: 1}, (1, 1)),
        w({}, (2, 0)),
        w({}, (0, 2)),
    )
    return ModuleData(r, basis, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def _e36(params):  # SL(n) x SL2 x SL2, n >= 3: one mark at the far end
    (n,) = params
    r = RootSystem((("A", n - 1), ("A", 1), ("A", 1)), torus_rank=2)
    w = _wb(r.rank, 2)
    off = n - 1
    basis = (
        w({0: 1, off: 1}, (1, 0)),
        w({1: 1}, (2, 0)),
        w({off: 1, off + 1: 1}, (0, 1)),
        w({0: 1, off + 1: 1}, (1, 1)),
        w({}, (0, 2)),
    )
    sigma = (_unit(r.rank, 0), _unit(r.rank, off), _unit(r.rank, off + 1))
    return ModuleData(r, basis, sigma)


def _e37(params):  # SL(n) x SL2 x SL(n''), n >= n'' >= 3: no invariants
    n, nn = params
    r = RootSystem((("A", n - 1), ("A", 1), ("A", nn - 1)), torus_rank=2)
    w = _wb(r.rank, 2)
    off = n - 1
    basis = (
        w({0: 1, off: 1}, (1, 0)),
        w({1: 1}, (2, 0)),
        w({off: 1, off + 1: 1}, (0, 1)),
        w({off + 2: 1}, (0, 2)),
        w({0: 1, off + 1: 1}, (1, 1)),
    )
    sigma = (_unit(r.rank, 0), _unit(r.rank, off), _unit(r.rank, off + 1))
    return ModuleData(r, basis, sigma)


def _e38(params):  # Sp(2n) on C^(2n) + C^(2n): C-chain marked
    (n,) = params
    r = RootSystem((("C", n),), torus_rank=2)
    w = _wb(n, 2)
    basis = (
        w({0: 1}, (1, 0)),
        w({0: 1}, (0, 1)),
        w({1: 1}, (1, 1)),
        w({}, (1, 1)),
    )
    cchain = _chain(n, 0, n - 1) if n == 2 else (1,) + tuple(2 for _ in range(n - 2)) + (1,)
    return ModuleData(r, basis, (_unit(n, 0), cchain))


def _sp_chain_basis(n, tail):
    """Sp(2n) x SL2 (+ tail) common front: matrix of two C^(2n) columns."""
    r_comps = [("C", n), ("A", 1)] + tail
    r = RootSystem(tuple(r_comps), torus_rank=2)
    w = _wb(r.rank, 2)
    return r, w


def _e39(params):  # Sp(2n) x SL2 on (C^(2n) x C^2) + C^2
    (n,) = params
    r, w = _sp_chain_basis(n, [])
    basis = (
        w({0: 1, n: 1}, (1, 0)),
        w({1: 1}, (2, 0)),
        w({}, (2, 0)),
        w({n: 1}, (0, 1)),
        w({0: 1}, (1, 1)),
    )
    cchain = (_chain(n, 0, n - 1) if n == 2 else (1,) + tuple(2 for _ in range(n - 2)) + (1,)) + (0,)
    sigma = (_unit(r.rank, 0), cchain, _unit(r.rank, n))
    return ModuleData(r, basis, sigma)


def _e40(params):  # Sp(2n) x SL2 x SL2: both invariants mark
    (n,) = params
    r, w = _sp_chain_basis(n, [("A", 1)])
    basis = (
        w({0: 1, n: 1}, (1, 0)),
        w({1: 1}, (2, 0)),
        w({}, (2, 0)),
        w({n: 1, n + 1: 1}, (0, 1)),
        w({0: 1, n + 1: 1}, (1, 1)),
        w({}, (0, 2)),
    )
    cchain = (_chain(n, 0, n - 1) if n == 2 else (1,) + tuple(2 for _ in range(n - 2)) + (1,)) + (0, 0)
    sigma = (_unit(r.rank, 0), cchain, _unit(r.rank, n), _unit(r.rank, n + 1))
    return ModuleData(r, basis, sigma)


def _e41(params):  # Sp(2n) x SL2 x SL(n''), n'' >= 3
    n, nn = params
    r, w = _sp_chain_basis(n, [("A", nn - 1)])
    basis = (
        w({0: 1, n: 1}, (1, 0)),
        w({1: 1}, (2, 0)),
        w({}, (2, 0)),
        w({n: 1, n + 1: 1}, (0, 1)),
        w({n + 2: 1}, (0, 2)),
        w({0: 1, n + 1: 1}, (1, 1)),
    )
    cchain = (_chain(n, 0, n - 1) if n == 2 else (1,) + tuple(2 for _ in range(n - 2)) + (1,)) + (0,) * nn
    cchain = cchain[: r.rank]
    sigma = (_unit(r.rank, 0), cchain, _unit(r.rank, n), _unit(r.rank, n + 1))
    return ModuleData(r, basis, sigma)


def _e42(params):  # Sp(2n) x SL2 x Sp(2n''): both C-chains marked
    n, nn = params
    r, w = _sp_chain_basis(n, [("C", nn)])
    basis = (
        w({0: 1, n: 1}, (1, 0)),
        w({1: 1}, (2, 0)),
        w({}, (2, 0)),
        w({n: 1, n + 1: 1}, (0, 1)),
        w({n + 2: 1}, (0, 2)),
        w({}, (0, 2)),
        w({0: 1, n + 1: 1}, (1, 1)),
    )
    def cvec(rank_c):
        return _chain(rank_c, 0, rank_c - 1) if rank_c == 2 else (1,) + tuple(2 for _ in range(rank_c - 2)) + (1,)
    left = cvec(n) + (0,) * (1 + nn)
    right = (0,) * (n + 1) + cvec(nn)
    sigma = (_unit(r.rank, 0), left, _unit(r.rank, n), _unit(r.rank, n + 1), right)
    return ModuleData(r, basis, sigma)


def _d(pred, text):
    return pred, text


_RAW = [
    (1, "SL(n) x GL(1) on C^n", ("n",), lambda p: p[0] >= 2, "n >= 2",
     ((2,), (3,), (4,)), _e01),
    (2, "Sp(2n) x GL(1) on C^(2n)", ("n",), lambda p: p[0] >= 2, "n >= 2",
     ((2,), (3,), (4,)), _e02),
    (3, "Spin(2n+1) x GL(1) on C^(2n+1)", ("n",), lambda p: p[0] >= 2, "n >= 2",
     ((2,), (3,), (4,)), _e03),
    (4, "Spin(2n) x GL(1) on C^(2n)", ("n",), lambda p: p[0] >= 3, "n >= 3",
     ((3,), (4,), (5,)), _e04),
    (5, "SL(n) x GL(1) on Sym^2 C^n", ("n",), lambda p: p[0] >= 2, "n >= 2",
     ((2,), (3,), (4,)), _e05),
    (6, "SL(n) x GL(1) on Wedge^2 C^n, n odd", ("n",),
     lambda p: p[0] >= 5 and p[0] % 2 == 1, "n >= 5 odd", ((5,), (7,), (9,)), _e06),
    (7, "SL(n) x GL(1) on Wedge^2 C^n, n even", ("n",),
     lambda p: p[0] >= 6 and p[0] % 2 == 0, "n >= 6 even", ((6,), (8,), (10,)), _e07),
    (8, "SL(n) x SL(n) x GL(1) on C^n (x) C^n", ("n",), lambda p: p[0] >= 2, "n >= 2",
     ((2,), (3,), (4,)), _e08),
    (9, "SL(n) x SL(n') x GL(1) on C^n (x) C^n', n < n'", ("n", "n'"),
     lambda p: 2 <= p[0] < p[1], "n' > n >= 2", ((2, 3), (2, 4), (3, 4)), _e09),
    (10, "SL(2) x Sp(2n') x GL(1) on C^2 (x) C^(2n')", ("n'",),
     lambda p: p[0] >= 2, "n' >= 2", ((2,), (3,), (4,)), _e10),
    (11, "SL(3) x Sp(4) x GL(1) on C^3 (x) C^4", (), lambda p: True, "-", ((),), _e11),
    (12, "SL(3) x Sp(2n') x GL(1) on C^3 (x) C^(2n'), n' >= 3", ("n'",),
     lambda p: p[0] >= 3, "n' >= 3", ((3,), (4,), (5,)), _e12),
    (13, "SL(4) x Sp(4) x GL(1) on C^4 (x) C^4", (), lambda p: True, "-", ((),), _e13),
    (14, "SL(n) x Sp(4) x GL(1) on C^n (x) C^4, n >= 5", ("n",),
     lambda p: p[0] >= 5, "n >= 5", ((5,), (6,), (7,)), _e14),
    (15, "Spin(7) x GL(1) on C^8", (), lambda p: True, "-", ((),), _e15),
    (16, "Spin(9) x GL(1) on C^16", (), lambda p: True, "-", ((),), _e16),
    (17, "Spin(10) x GL(1) on C^16", (), lambda p: True, "-", ((),), _e17),
    (18, "G2 x GL(1) on C^7", (), lambda p: True, "-", ((),), _e18),
    (19, "E6 x GL(1) on C^27", (), lambda p: True, "-", ((),), _e19),
    (20, "Spin(8) x GL(1)^2 on C^8 + C^8", (), lambda p: True, "-", ((),), _e20),
    (21, "SL(2) x GL(1)^2 on C^2 + C^2", (), lambda p: True, "-", ((),), _e21),
    (22, "SL(n) x GL(1)^2 on C^n + C^n, n >= 3", ("n",), lambda p: p[0] >= 3,
     "n >= 3", ((3,), (4,), (5,)), _e22),
    (23, "SL(n) x GL(1)^2 on C^n + (C^n)*", ("n",), lambda p: p[0] >= 3,
     "n >= 3", ((3,), (4,), (5,)), _e23),
    (24, "SL(n) x GL(1)^2 on C^n + Wedge^2 C^n", ("n",), lambda p: p[0] >= 4,
     "n >= 4", ((4,), (5,), (6,)), _e24),
    (25, "SL(n) x GL(1)^2 on (C^n)* + Wedge^2 C^n, n even", ("n",),
     lambda p: p[0] >= 4 and p[0] % 2 == 0, "n >= 4 even", ((4,), (6,), (8,)), _e25),
    (26, "SL(n) x GL(1)^2 on (C^n)* + Wedge^2 C^n, n odd", ("n",),
     lambda p: p[0] >= 5 and p[0] % 2 == 1, "n >= 5 odd", ((5,), (7,), (9,)), _e26),
    (27, "(C^n x C^n') + C^n', n < n' - 1", ("n", "n'"),
     lambda p: 2 <= p[0] and p[0] < p[1] - 1, "2 <= n < n' - 1",
     ((2, 4), (2, 5), (3, 5)), _e27),
    (28, "(C^n x C^n') + C^n', n = n' - 1", ("n", "n'"),
     lambda p: p[0] >= 2 and p[1] == p[0] + 1, "2 <= n = n' - 1",
     ((2, 3), (3, 4), (4, 5)), _e28),
    (29, "(C^n x C^n') + C^n', n = n'", ("n", "n'"),
     lambda p: p[0] >= 2 and p[0] == p[1], "2 <= n = n'",
     ((2, 2), (3, 3), (4, 4)), _e29),
    (30, "(C^n x C^n') + C^n', n > n'", ("n", "n'"),
     lambda p: p[0] > p[1] >= 2, "n > n' >= 2", ((3, 2), (4, 2), (4, 3)), _e30),
    (31, "(C^n x C^n') + (C^n')*, n < n' - 1", ("n", "n'"),
     lambda p: 2 <= p[0] and p[0] < p[1] - 1, "2 <= n < n' - 1",
     ((2, 4), (2, 5), (3, 5)), _e31),
    (32, "(C^n x C^n') + (C^n')*, n = n' - 1", ("n", "n'"),
     lambda p: p[0] >= 2 and p[1] == p[0] + 1, "2 <= n = n' - 1",
     ((2, 3), (3, 4), (4, 5)), _e32),
    (33, "(C^n x C^n') + (C^n')*, n = n'", ("n", "n'"),
     lambda p: p[0] >= 2 and p[0] == p[1], "2 <= n = n'",
     ((2, 2), (3, 3), (4, 4)), _e33),
    (34, "(C^n x C^n') + (C^n')*, n > n'", ("n", "n'"),
     lambda p: p[0] > p[1] >= 2, "n > n' >= 2", ((3, 2), (4, 2), (4, 3)), _e34),
    (35, "SL2 x SL2 x SL2 on (C^2 x C^2) + (C^2 x C^2)", (), lambda p: True, "-",
     ((),), _e35),
    (36, "SL(n) x SL2 x SL2 on (C^n x C^2) + (C^2 x C^2), n >= 3", ("n",),
     lambda p: p[0] >= 3, "n >= 3", ((3,), (4,), (5,)), _e36),
    (37, "SL(n) x SL2 x SL(n'') on (C^n x C^2) + (C^2 x C^n''), n >= n'' >= 3",
     ("n", "n''"), lambda p: p[0] >= p[1] >= 3, "n >= n'' >= 3",
     ((3, 3), (4, 3), (4, 4)), _e37),
    (38, "Sp(2n) x GL(1)^2 on C^(2n) + C^(2n)", ("n",), lambda p: p[0] >= 2,
     "n >= 2", ((2,), (3,), (4,)), _e38),
    (39, "Sp(2n) x SL2 on (C^(2n) x C^2) + C^2", ("n",), lambda p: p[0] >= 2,
     "n >= 2", ((2,), (3,), (4,)), _e39),
    (40, "Sp(2n) x SL2 x SL2 on (C^(2n) x C^2) + (C^2 x C^2)", ("n",),
     lambda p: p[0] >= 2, "n >= 2", ((2,), (3,), (4,)), _e40),
    (41, "Sp(2n) x SL2 x SL(n'') on (C^(2n) x C^2) + (C^2 x C^n''), n'' >= 3",
     ("n", "n''"), lambda p: p[0] >= 2 and p[1] >= 3, "n >= 2, n'' >= 3",
     ((2, 3), (2, 4), (3, 3)), _e41),
    (42, "Sp(2n) x SL2 x Sp(2n'') on (C^(2n) x C^2) + (C^2 x C^(2n''))",
     ("n", "n''"), lambda p: p[0] >= 2 and p[1] >= 2, "n, n'' >= 2",
     ((2, 2), (2, 3), (3, 2)), _e42),
]

ENTRIES: dict[int, CatalogEntry] = {
    eid: CatalogEntry(eid, desc, names, dom, dtext, small, build)
    for eid, desc, names, dom, dtext, small, build in _RAW
}

ENTRY_COUNT = len(ENTRIES)

def is_known_coincidence(a: tuple[int, tuple], b: tuple[int, tuple]) -> bool:
    """Family coincidences: distinct modules with isomorphic spherical
    systems.  Dualizing one summand is absorbed by a diagram symmetry when
    the other summand is self-dual-like, and the two-tailed symplectic
    family is symmetric in its parameters."""
    if a == b:
        return False
    ids = frozenset({a[0], b[0]})
    if ids == frozenset({24, 25}) and a[1] == b[1]:
        return True  # vector vs covector summand beside Wedge^2, n even
    if ids == frozenset({29, 33}) and a[1] == b[1]:
        return True  # square matrix; transposing swaps the two families
    if ids == frozenset({30, 34}) and a[1] == b[1] and a[1][1] == 2:
        return True  # C^2 is self-dual
    if ids == frozenset({42}) and a[1] == tuple(reversed(b[1])):
        return True  # symmetric chain read backwards
    return False


@lru_cache(maxsize=None)
def module_datum(eid: int, params: tuple[int, ...] = ()) -> HomogeneousSphericalDatum:
    """The homogeneous spherical datum of the module's open orbit."""
    entry = ENTRIES[eid]
    if not entry.domain(params):
        raise ValueError(
            f"parameters {params} outside the domain ({entry.domain_text}) of entry {eid}"
        )
    md = entry.build(params)
    r = md.root_system
    cols = [list(chi.fw_coords) + list(chi.torus_coords) for chi in md.basis]
    a = matrix([[cols[j][i] for j in range(len(cols))] for i in range(r.rank + r.torus_rank)])
    sigma = []
    for coeffs in md.sigma_coeffs:
        wgt = root_as_weight(r, coeffs)
        target = list(wgt.fw_coords) + list(wgt.torus_coords)
        sol = solve_rational(a, target)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError(
                f"entry {eid}{params}: root {coeffs} is not integral on the basic weights"
            )
        sigma.append(SphericalRoot(tuple(coeffs), tuple(int(x) for x in sol)))
    s_p = frozenset(
        a_
        for a_ in r.simple_roots()
        if all(coroot_pairing(r, a_, chi) == 0 for chi in md.basis)
    )
    simple_idx = {}
    roots = r.simple_roots()
    for i, g in enumerate(sigma):
        supp = [j for j, c in enumerate(g.coeffs) if c]
        if len(supp) == 1 and g.coeffs[supp[0]] == 1:
            simple_idx[roots[supp[0]]] = i
    d_a = []
    for j, chi in enumerate(md.basis):
        if all(x == 0 for x in chi.fw_coords):
            continue  # invariant divisor, not a color
        rho = _unit(len(md.basis), j)
        if any(sigma[i].m_coords[j] == 1 for i in simple_idx.values()):
            d_a.append((f"D{j + 1}", rho))
    return HomogeneousSphericalDatum(r, md.basis, tuple(sigma), s_p, tuple(d_a))


def invariant_indices(d: HomogeneousSphericalDatum) -> tuple[int, ...]:
    """Basis positions of purely-torus weights: the invariant divisors."""
    return tuple(
        j for j, chi in enumerate(d.m_basis) if all(x == 0 for x in chi.fw_coords)
    )


class Instantiation(NamedTuple):
    system: SphericalSystem
    marked: frozenset[int]


@lru_cache(maxsize=None)
def instantiate(eid: int, params: tuple[int, ...] = ()) -> Instantiation:
    """The catalog entry: the spherical closure of the module's datum and
    its marked spherical roots."""
    d = module_datum(eid, params)
    rep = validate_datum(d)
    if not rep.ok:
        raise ValueError(f"entry {eid}{params} datum invalid:\n{rep}")
    closure = spherical_closure_result(d)
    inv = invariant_indices(d)
    marked = frozenset(
        i
        for i, mc in enumerate(closure.m_coords)
        if any(mc[j] == -1 for j in inv)
    )
    return Instantiation(closure.system, marked)


def embedding_cone(d: HomogeneousSphericalDatum) -> ColoredCone:
    """The colored cone of the module itself: the dual-basis cone with all
    colors, the invariant-divisor directions entering as valuation rays."""
    gens = tuple(_unit(d.m_rank, j) for j in invariant_indices(d))
    labels = frozenset(c.label for c in full_colors(d))
    return ColoredCone(gens, labels)


# ---------------------------------------------------------------------------
# Isomorphism of spherical systems and catalog matching.
# ---------------------------------------------------------------------------


class SystemIsomorphism(NamedTuple):
    vertex_map: dict  # SimpleRootId of s1 -> SimpleRootId of s2
    root_map: tuple[int, ...]  # index into s1.sigma -> index into s2.sigma


def _comp_key(comp):
    # B2 and C2 are the same diagram with the two vertices swapped
    return ("BC", 2) if comp in (("B", 2), ("C", 2)) else comp


def _component_frames(s1: RootSystem, s2: RootSystem):
    """All rank-preserving vertex bijections s1 -> s2 built from a component
    matching composed with a diagram symmetry of s2."""
    import itertools

    if sorted(map(_comp_key, s1.components)) != sorted(map(_comp_key, s2.components)):
        return
    groups: dict[tuple[str, int], list[int]] = {}
    for ci, comp in enumerate(s2.components):
        groups.setdefault(_comp_key(comp), []).append(ci)
    slots: list[list[int]] = []
    for ci, comp in enumerate(s1.components):
        slots.append(groups[_comp_key(comp)])
    for target in itertools.product(*slots):
        if len(set(target)) != len(target):
            continue
        base = {}
        for ci, tci in enumerate(target):
            letter = s1.components[ci][0]
            tletter = s2.components[tci][0]
            for pos in range(1, s1.components[ci][1] + 1):
                tpos = pos
                if letter != tletter:  # B2 <-> C2: long root stays long
                    tpos = 3 - pos
                base[SimpleRootId(ci, pos)] = SimpleRootId(tci, tpos)
        for auto in diagram_automorphisms(s2):
            am = auto.as_dict()
            yield {a: am[b] for a, b in base.items()}


def systems_isomorphic(s1: SphericalSystem, s2: SphericalSystem):
    """First isomorphism in a deterministic order, or None."""
    for iso in iter_isomorphisms(s1, s2):
        return iso
    return None


def iter_isomorphisms(s1: SphericalSystem, s2: SphericalSystem):
    r1, r2 = s1.root_system, s2.root_system
    if len(s1.sigma) != len(s2.sigma) or len(s1.d_a) != len(s2.d_a):
        return
    sig2 = {g: i for i, g in enumerate(s2.sigma)}
    for vm in _component_frames(r1, r2):
        mapped = []
        ok = True
        for g in s1.sigma:
            out = [0] * r2.rank
            for j, c in enumerate(g):
                if c:
                    out[r2.flat_index(vm[r1.simple_roots()[j]])] = c
            t = tuple(out)
            if t not in sig2:
                ok = False
                break
            mapped.append(sig2[t])
        if not ok or len(set(mapped)) != len(mapped):
            continue
        if frozenset(vm[a] for a in s1.s_p) != s2.s_p:
            continue
        pv1 = sorted(tuple(pair[i] for i in range(len(s1.sigma))) for _, pair in s1.d_a)
        inv = {m: i for i, m in enumerate(mapped)}
        pv2 = sorted(
            tuple(pair[mapped[i]] for i in range(len(s1.sigma))) for _, pair in s2.d_a
        )
        if pv1 != pv2:
            continue
        yield SystemIsomorphism(dict(vm), tuple(mapped))


class MatchResult(NamedTuple):
    entry_id: int
    params: tuple[int, ...]
    isomorphism: SystemIsomorphism
    marked_pullback: frozenset[int]  # indices into the component's sigma
    alternatives: tuple[frozenset[int], ...]  # all distinct pullbacks over matches

    @property
    def ambiguous(self) -> bool:
        return len(self.alternatives) > 1


def _param_candidates(entry: CatalogEntry, rank: int):
    if not entry.param_names:
        yield ()
        return
    bound = rank + 2
    if len(entry.param_names) == 1:
        for n in range(2, bound + 1):
            yield (n,)
    else:
        for n in range(2, bound + 1):
            for m in range(2, bound + 1):
                yield (n, m)


def candidate_instantiations(rank: int):
    """Every catalog instantiation whose root system has the given rank."""
    for eid in sorted(ENTRIES):
        entry = ENTRIES[eid]
        for params in _param_candidates(entry, rank):
            if not entry.domain(params):
                continue
            try:
                if entry.rank_of(params) != rank:
                    continue
            except Exception:
                continue
            yield eid, params


def all_matches(c: SphericalSystem):
    """Every (entry, params, isomorphism, pullback) matching the component."""
    rank = c.root_system.rank
    out = []
    for eid, params in candidate_instantiations(rank):
        inst = instantiate(eid, params)
        for iso in iter_isomorphisms(c, inst.system):
            pullback = frozenset(
                i for i in range(len(c.sigma)) if iso.root_map[i] in inst.marked
            )
            out.append((eid, params, iso, pullback))
    return out


def match_component(c: SphericalSystem) -> MatchResult | None:
    """Match an indecomposable component against the catalog.

    Returns the first match in a deterministic order.  All distinct marked
    pullbacks over every matching isomorphism are reported; an ambiguous
    marking is surfaced in the result rather than silently chosen.
    """
    if len(decompose(c)) > 1:
        raise ValueError("match_component expects an indecomposable system")
    matches = all_matches(c)
    if not matches:
        return None
    eid, params, iso, pullback = matches[0]
    alternatives = []
    for _, _, _, pb in matches:
        if pb not in alternatives:
            alternatives.append(pb)
    return MatchResult(eid, params, iso, pullback, tuple(alternatives))


def catalog_listing():
    return [
        {
            "id": e.id,
            "description": e.description,
            "parameters": list(e.param_names),
            "domain": e.domain_text,
        }
        for e in (ENTRIES[k] for k in sorted(ENTRIES))
    ]
