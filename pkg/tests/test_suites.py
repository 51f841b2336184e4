import pytest

from kmhecke.rootdata import bundled_datum
from kmhecke.suites import SUITES, SuiteConfig, run_suite


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(L=0)
    with pytest.raises(ValueError):
        SuiteConfig(depth=-1)


def test_unknown_suite(finite):
    with pytest.raises(KeyError):
        run_suite("nope", finite, SuiteConfig())


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_finite_a1(finite, name):
    rep = run_suite(name, finite, SuiteConfig(count=10))
    assert rep["suite"] == name and rep["datum"] == "finite_a1"
    assert rep["statements"]
    s = rep["summary"]
    assert s["checks"] == len(rep["checks"]) > 0
    assert s["failed"] == 0, [c for c in rep["checks"] if c["status"] == "fail"][:3]


def test_unchecked_triples_reported_as_failures(affine):
    rep = run_suite("bl-assoc", affine, SuiteConfig(count=2, extra={"budget": 1}))
    assert rep["summary"]["failed"] == 2
    assert all("unchecked" in c["witness"] for c in rep["checks"])
