import sys

import pytest
from hypothesis import settings

from kmhecke import bl_algebra, bundled_datum, hecke_w

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = ("finite_a1", "affine_a1", "hyperbolic_2_3")


@pytest.fixture(scope="session", params=DATA)
def datum(request):
    return bundled_datum(request.param)


@pytest.fixture(scope="session")
def finite():
    return bundled_datum("finite_a1")


@pytest.fixture(scope="session")
def affine():
    return bundled_datum("affine_a1")


@pytest.fixture(scope="session")
def hyperbolic():
    return bundled_datum("hyperbolic_2_3")


@pytest.fixture(scope="session")
def affine_third():
    return bundled_datum("affine_a1_third")


@pytest.fixture(scope="session")
def affine_alg(affine):
    return bl_algebra(affine)


@pytest.fixture(scope="session")
def finite_alg(finite):
    return bl_algebra(finite)


@pytest.fixture(scope="session")
def affine_H(affine):
    return hecke_w(affine)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
