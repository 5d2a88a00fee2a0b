"""Tests for check record storage and seeded sampling"""

import pytest

from krw.checks import check_primality
from krw.models import CheckRecord, CheckStatus, ReplayConfig
from krw.poly import T, X, Y, Z
from krw.report_store import CheckStore
from krw.sampling import MAX_Y_DEGREE, PRODUCT_MAX_TERMS, PRODUCT_MAX_Y_DEGREE, ElementSampler, check_rng


@pytest.fixture
def store():
    return CheckStore()


def _record(name, status, **kwargs):
    return CheckRecord(name=name, status=status, **kwargs)


def test_records_sorted_and_counted(store):
    """Test records come back in name order with per-status counts"""
    store.add(_record("R2.b", CheckStatus.PASS, details="ok"))
    store.extend([_record("R2.a", CheckStatus.FAIL, details="bad", witness="x")])
    store.skip(["R3.c"], "skipped")
    assert [r.name for r in store.get_records()] == ["R2.a", "R2.b", "R3.c"]
    summary = store.get_summary()
    assert (summary.passed, summary.fail, summary.skipped) == (1, 1, 1)
    assert summary.model_dump(by_alias=True) == {"pass": 1, "fail": 1, "skipped": 1}


def test_duplicate_name_rejected(store):
    """Test a second record under the same name is rejected"""
    store.add(_record("R2.a", CheckStatus.PASS))
    with pytest.raises(ValueError):
        store.add(_record("R2.a", CheckStatus.FAIL))


def test_build_report(store):
    """Test a report with a failing record is not ok"""
    store.add(_record("R1.x", CheckStatus.FAIL))
    report = store.build_report({"rng_seed": 1})
    assert not report.ok
    assert report.checks[0].status == CheckStatus.FAIL


def test_check_streams_are_independent():
    """Test each check name seeds its own reproducible stream"""
    def draws(name):
        rng = check_rng(42, name)
        return [rng.random() for _ in range(3)]

    assert draws("R7.a") != draws("R7.b")
    assert draws("R7.a") == draws("R7.a")


def test_sampler_bounds(ring_c0):
    """Test sampled polynomials respect degree and coefficient bounds"""
    sampler = ElementSampler(ring_c0, check_rng(1, "bounds"), max_degree=3, coefficient_bound=2)
    for _ in range(30):
        p = sampler.polynomial()
        assert p
        assert p.degree(Y) <= MAX_Y_DEGREE
        assert p.degree(X) <= 3
        assert all(abs(c) <= 2 * sampler.max_terms for c in p.terms.values())
        assert not sampler.element((X,)).is_zero
        assert sampler.zt_polynomial().uses_only((Z, T))


def test_product_sampler_limits(ring_c0):
    """Test the y-degree and term limits of a product-factor sampler"""
    sampler = ElementSampler(ring_c0, check_rng(3, "products"), max_degree=4, coefficient_bound=5,
                             max_terms=PRODUCT_MAX_TERMS, max_y_degree=PRODUCT_MAX_Y_DEGREE)
    for _ in range(50):
        p = sampler.polynomial()
        assert p.degree(Y) <= PRODUCT_MAX_Y_DEGREE
        assert len(p) <= PRODUCT_MAX_TERMS


def test_context_sampler_forwards_limits():
    """Test the replay context passes sampler limits through"""
    _, ctx = check_primality(ReplayConfig(eta_generic_degree=1, max_sample_degree=3, rng_seed=4))
    sampler = ctx.sampler("R7.filtration.multiplicative", max_terms=2, max_y_degree=1)
    assert (sampler.max_terms, sampler.max_y_degree, sampler.max_degree) == (2, 1, 3)
    assert all(sampler.polynomial().degree(Y) <= 1 for _ in range(30))
    assert ctx.sampler("R7.filtration.subadditive").max_y_degree == MAX_Y_DEGREE
