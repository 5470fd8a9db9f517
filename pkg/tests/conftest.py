import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vroots.poly import Poly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def monic_polys(min_degree=1, max_degree=5, bound=6):
    """Monic polynomials with small integer lower coefficients."""
    return st.integers(min_degree, max_degree).flatmap(
        lambda d: st.lists(st.integers(-bound, bound), min_size=d, max_size=d).map(lambda c: Poly(c + [1]))
    )


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def distinct_rationals(min_size=1, max_size=6):
    return st.lists(rationals, min_size=min_size, max_size=max_size, unique=True)


def random_rational(rng: random.Random, bound=10, max_den=8) -> Fraction:
    return Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))


@pytest.fixture
def rng():
    return random.Random(20240611)


# filled by test_acceptance.report, one line per criterion
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
