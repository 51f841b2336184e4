"""
Acceptance criteria 1 to 12. Each test records one PASS/FAIL line; the lines
are printed in the terminal summary, or directly when run as a script:

    python3 tests/test_acceptance.py [k ...]
"""

from __future__ import annotations

import sys
import time

import pytest

from kmhecke.completed import verify_central_window
from kmhecke.rootdata import bundled_datum
from kmhecke.suites import SuiteConfig, hecke_length_check, round_trip_checks, run_suite

DATA = ("finite_a1", "affine_a1", "hyperbolic_2_3")
ASSOC_BUDGET = 2_000_000  # monomials per intermediate product
RESULTS: dict[int, str] = {}


def _summary(checks: list[dict]) -> tuple[bool, str]:
    failed = [c for c in checks if c["status"] == "fail"]
    text = f"{len(checks) - len(failed)}/{len(checks)} checks"
    if failed:
        text += f"; first failure: {failed[0]['lemma']} {failed[0]['instance']}"
    return not failed, text


def _suite(name: str, datum: str, **cfg) -> list[dict]:
    return run_suite(name, bundled_datum(datum), SuiteConfig(**cfg))["checks"]


def _per_datum(fn) -> tuple[bool, str]:
    ok, parts = True, []
    for name in DATA:
        good, text = _summary(fn(name))
        ok = ok and good
        parts.append(f"{name} {text}")
    return ok, " | ".join(parts)


def criterion_1():
    return _per_datum(lambda d: _suite("bl-assoc", d, count=200, maxlen=4,
                                       extra={"budget": ASSOC_BUDGET}))


def criterion_2():
    return _summary(_suite("structure-constants", "affine_a1"))


def criterion_3():
    return _per_datum(lambda d: round_trip_checks(bundled_datum(d), 100, 0))


def criterion_4():
    return _summary(_suite("supports", "affine_a1", maxlen=5))


def criterion_5():
    # taken literally: the sum must equal q^l(w) T_w^-1 itself
    checks = _suite("inverse-degrees", "affine_a1", maxlen=6)
    return _summary([c for c in checks if not c["lemma"].startswith("length of")])


def criterion_6():
    return _summary([hecke_length_check(bundled_datum("affine_a1"), k) for k in range(1, 7)])


def criterion_7():
    return _per_datum(lambda d: _suite("anti-involution", d, count=100))


def criterion_8():
    rep = verify_central_window(bundled_datum("affine_a1"), (0, 0, 1), L=8, samples=20, depth=3)
    return _summary(rep["checks"])


def criterion_9():
    return _per_datum(lambda d: _suite("waf-examples", d))


def criterion_10():
    return _summary(_suite("right-failure", "affine_a1", maxlen=5))


def criterion_11():
    return _summary(_suite("convolution", "affine_a1", count=50))


def criterion_12():
    return _summary(_suite("finiteness-stabilization", "affine_a1"))


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 13)}


def evaluate(k: int) -> bool:
    start = time.time()
    ok, detail = CRITERIA[k]()
    RESULTS[k] = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'} ({time.time() - start:.0f}s) {detail}"
    return ok


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    assert evaluate(k), RESULTS[k]


if __name__ == "__main__":
    chosen = [int(a) for a in sys.argv[1:]] or sorted(CRITERIA)
    for k in chosen:
        evaluate(k)
        print(RESULTS[k], flush=True)
