"""Shared fixtures: the fully worked 4x4 tensor datum (SL4 x Sp4 x C* acting
on C^4 (x) C^4) with the published basis weights and root expansions frozen
as golden values."""

import pytest

from sphersmooth.datum import (
    ColoredCone,
    HomogeneousSphericalDatum,
    SphericalRoot,
)
from sphersmooth.rootsystems import RootSystem, SimpleRootId, Weight

A = SimpleRootId

# chi_1 .. chi_6 over (A3 fw | C2 fw | torus)
WORKED_BASIS = (
    ((1, 0, 0, 1, 0), (1,)),
    ((0, 1, 0, 0, 1), (2,)),
    ((0, 1, 0, 0, 0), (2,)),
    ((0, 0, 1, 1, 0), (3,)),
    ((1, 0, 1, 0, 1), (4,)),
    ((0, 0, 0, 0, 0), (4,)),
)

# gamma_1 .. gamma_5 as (simple-root coefficients | chi-coordinates)
WORKED_SIGMA = (
    ((1, 0, 0, 0, 0), (1, -1, 0, -1, 1, 0)),
    ((0, 1, 0, 0, 0), (0, 1, 1, 0, -1, 0)),
    ((0, 0, 1, 0, 0), (-1, -1, 0, 1, 1, -1)),
    ((0, 0, 0, 1, 0), (1, 0, 0, 1, -1, 0)),
    ((0, 0, 0, 0, 1), (-1, 1, -1, -1, 1, 0)),
)


def make_worked_datum() -> HomogeneousSphericalDatum:
    r = RootSystem((("A", 3), ("C", 2)), torus_rank=1)
    basis = tuple(Weight(fw, t) for fw, t in WORKED_BASIS)
    sigma = tuple(SphericalRoot(c, m) for c, m in WORKED_SIGMA)
    d_a = tuple(
        (f"D{i}", tuple(1 if j == i - 1 else 0 for j in range(6))) for i in range(1, 6)
    )
    return HomogeneousSphericalDatum(r, basis, sigma, frozenset(), d_a)


def make_worked_cone() -> ColoredCone:
    gens = tuple(tuple(1 if j == i else 0 for j in range(6)) for i in range(5, 6))
    return ColoredCone(gens, frozenset({"D1", "D2", "D3", "D4", "D5"}))


@pytest.fixture
def worked_datum():
    return make_worked_datum()


@pytest.fixture
def worked_cone():
    return make_worked_cone()
