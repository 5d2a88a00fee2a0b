"""Tests for the linear-algebra decomposition oracle"""

import random

import pytest

from krw.errors import VerificationFailedError
from krw.oracle import oracle_decompose
from krw.parser import parse_polynomial as P
from krw.poly import Polynomial
from krw.quotient import QuotientElement, qr_decompose_trick
from krw.sampling import ElementSampler


def test_zero_element(ring_c0):
    """Test the oracle on zero"""
    dec = oracle_decompose(ring_c0.zero())
    assert dec.epsilon == 0
    assert dec.h.is_zero
    assert dec.pairs == ()


def test_simple_element(ring_c0):
    """Test the oracle on a small element"""
    dec = oracle_decompose(ring_c0.element(P("x*y")))
    assert dec.epsilon == 1
    assert dec.pairs == ((Polynomial.constant(1), Polynomial.zero()),)


def test_matches_canonical_split(ring_c0):
    """Test the oracle agrees with the canonical split"""
    for text in ("x^3*y^2 + t", "z*y^3 + x*y - 1/2", "x^5 + z^2*t", "c0*x*y^2 + 3*c0^2*t*y"):
        p = ring_c0.element(P(text))
        assert oracle_decompose(p) == qr_decompose_trick(p), text


def test_random_generic_elements(generic_ring):
    """Test the oracle on random generic-eta elements"""
    sampler = ElementSampler(generic_ring, random.Random(11), max_degree=4, coefficient_bound=5)
    for _ in range(20):
        p = sampler.element()
        assert oracle_decompose(p) == qr_decompose_trick(p)


def test_raw_representative_is_inconsistent(ring_c0):
    """x^2*y is outside the basis span, so the system has no solution"""
    with pytest.raises(VerificationFailedError) as exc:
        oracle_decompose(QuotientElement(P("x^2*y"), ring_c0))
    assert "inconsistent" in exc.value.message
