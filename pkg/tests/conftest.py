import random

import pytest

from delsarte.checks import random_exponent_data
from delsarte.lattice import ExponentData, build_structure

EXAMPLE1 = ExponentData(2, [(3, 3), (3, -1)], (2, 1), "example-1")
EXAMPLE2 = ExponentData(3, [(2, 1, 1), (1, 2, 1), (1, 1, 2)], (1, 1, 1), "example-2")
QUADRATIC = ExponentData(1, [(2,)], (1,), "quadratic")


@pytest.fixture(scope="session")
def ex1():
    return build_structure(EXAMPLE1)


@pytest.fixture(scope="session")
def ex2():
    return build_structure(EXAMPLE2)


@pytest.fixture(scope="session")
def quad():
    return build_structure(QUADRATIC)


def random_structures(count, seed=0, n_max=3, gamma_max=60, need_gcd=True):
    rng = random.Random(seed)
    return [build_structure(random_exponent_data(rng, n_max, gamma_max, need_gcd=need_gcd)) for _ in range(count)]


@pytest.fixture(scope="session")
def small_cases():
    """A modest batch of random valid inputs for the per-module property tests."""
    return random_structures(40, seed=7, gamma_max=30)
