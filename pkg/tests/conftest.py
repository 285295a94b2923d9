import itertools
import os

import pytest

from prepoisson.algebra import example_three_dim, example_two_dim
from prepoisson.quadratic import SkewForm

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


@pytest.fixture
def ae():
    return example_two_dim()


@pytest.fixture
def ae1():
    return example_three_dim()


@pytest.fixture
def ae_form():
    return SkewForm([[0, 1], [-1, 0]])


def grids(n, coeffs=(-1, 0, 1)):
    """All n x n grids with entries from coeffs, row-major enumeration."""
    for vals in itertools.product(coeffs, repeat=n * n):
        yield [list(vals[i * n:(i + 1) * n]) for i in range(n)]


def data_path(name):
    return os.path.join(DATA_DIR, name)


def golden_path(name):
    return os.path.join(GOLDEN_DIR, name)
