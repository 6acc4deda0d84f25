import random

import pytest

from qpolar import (
    IntegersMod,
    LocalizedIntegers,
    PrimeField,
    ShapedMatrix,
)


@pytest.fixture(scope="session")
def f2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def f3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def z4():
    return IntegersMod(2, 2)


@pytest.fixture(scope="session")
def z8():
    return IntegersMod(2, 3)


@pytest.fixture(scope="session")
def zloc2():
    return LocalizedIntegers(2)


def random_matrix(rng: random.Random, ring, shape) -> ShapedMatrix:
    """Uniform random matrix of the given shape over a finite ring."""
    pool = list(ring.elements())
    rows = [[ring.zero] * shape.n for _ in range(shape.n)]
    for i, j in shape.positions:
        rows[i][j] = pool[rng.randrange(len(pool))]
    return ShapedMatrix.from_rows(ring, shape, rows)
