import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def golden_pair():
    from outerlab.lab.catalog import axis_pair

    return axis_pair("golden", 8)


@pytest.fixture(scope="session")
def golden_line(golden_pair):
    from outerlab.minima import line_of_minima, make_grid

    mu, nu = golden_pair
    return line_of_minima(mu, nu, Fraction(1, 20), make_grid(-4, 4, Fraction(1, 2)))


@pytest.fixture
def rng():
    return random.Random(12345)
