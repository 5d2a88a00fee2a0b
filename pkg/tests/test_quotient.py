"""Tests for quotient rings B/(x^2*y + g), normal forms and the decomposition"""

import pytest

from krw.errors import ConfigInvalidError, ContainsYError, NotPrimeError, RingMismatchError
from krw.parser import parse_polynomial as P
from krw.poly import GENERATORS, Polynomial, X, Y, params
from krw.quotient import (
    EtaMode,
    QuotientElement,
    Subring,
    constant_term_ring,
    eta_from_coefficients,
    eta_ring,
    generic_eta,
    qr_decompose_trick,
    qr_equal,
    qr_new,
    qr_normal_form,
    qr_subring_member,
    translate,
)


def test_qr_new_modes():
    """Test ring construction in each eta mode"""
    assert qr_new(P("z^2 + t^3 + c0")).mode == EtaMode.GENERIC
    assert qr_new(P("z^2 + t^3 + x")).mode == EtaMode.CONCRETE


def test_qr_new_rejects_y():
    """Test a relation tail mentioning y is rejected"""
    with pytest.raises(ContainsYError):
        qr_new(P("y + z"))


def test_qr_new_rejects_non_prime_relation():
    """x | g makes x^2*y + g reducible, and the witness shows the factor"""
    with pytest.raises(NotPrimeError) as exc:
        qr_new(P("x*z"))
    assert exc.value.witness == "x*(x*y + z)"
    assert exc.value.relation == "x^2*y + x*z"
    assert exc.value.exit_code == 1


def test_relation_display(ring_c0):
    """Test how a ring and its relation print"""
    assert str(ring_c0.relation) == "x^2*y + z^2 + t^3 + c0"
    assert ring_c0.parameters() == params(1)


def test_normal_form_of_relation_monomial(ring_c0):
    """Test x^2*y rewrites to -g"""
    assert str(qr_normal_form(P("x^2*y"), ring_c0)) == "-z^2 - t^3 - c0"
    assert qr_normal_form(ring_c0.relation, ring_c0).is_zero


def test_normal_form_higher_powers(ring_c0):
    """Test normal forms of higher powers of x and y"""
    nf = qr_normal_form(P("x^4*y^2"), ring_c0)
    assert nf.rep == P("(z^2 + t^3 + c0)^2")
    nf = qr_normal_form(P("x^5*y^2 + x*y"), ring_c0)
    assert nf.rep == P("x*(z^2 + t^3 + c0)^2 + x*y")


def test_canonical_elements_unchanged(ring_c0):
    """Test canonical polynomials are their own normal form"""
    for text in ("x*y", "x*y^5 + z", "x^7 + t", "y^3"):
        assert qr_normal_form(P(text), ring_c0).rep == P(text)


def test_normal_form_is_sound(generic_ring):
    """p - nf(p) is a multiple of the relation"""
    p = P("x^5*y^3 - 2*x^3*y*z + x^2*y^2 + c1*t")
    nf = generic_ring.element(p)
    assert (p - nf.rep).exact_divide(generic_ring.relation) is not None


def test_element_arithmetic(kr_ring):
    """Test arithmetic on quotient elements"""
    x, y = kr_ring.gen(X), kr_ring.gen(Y)
    prod = x * x * y
    assert prod.rep == P("-z^2 - t^3 - x")
    assert (prod + 1).rep == P("1 - z^2 - t^3 - x")
    assert (x ** 2 * y - prod).is_zero


def test_qr_equal(ring_c0):
    """Test equality modulo the relation"""
    a = ring_c0.element(P("x^2*y"))
    b = ring_c0.element(P("-z^2 - t^3 - c0"))
    assert qr_equal(a, b)
    assert not qr_equal(a, ring_c0.zero())


def test_ring_mismatch(ring_c0, kr_ring):
    """Test mixing rings raises a mismatch error"""
    with pytest.raises(RingMismatchError):
        qr_equal(ring_c0.one(), kr_ring.one())


def test_decompose_simple(ring_c0):
    """Test decomposing a small element"""
    dec = qr_decompose_trick(ring_c0.element(P("x*y")))
    assert dec.epsilon == 1
    assert dec.h == Polynomial.zero()
    assert dec.pairs == ((Polynomial.constant(1), Polynomial.zero()),)


def test_decompose_after_reduction(ring_c0):
    """Test decomposing an element that needs reduction first"""
    dec = qr_decompose_trick(ring_c0.element(P("x^3*y^2 + t")))
    assert dec.epsilon == 1
    assert dec.h == P("t")
    u, v = dec.pairs[0]
    assert u == P("-z^2 - t^3 - c0")
    assert v == Polynomial.zero()


def test_decompose_y_free(ring_c0):
    """Test a y-free element has no pairs"""
    dec = qr_decompose_trick(ring_c0.element(P("x^4 + z")))
    assert dec.epsilon == 0
    assert dec.pairs == ()
    assert dec.h == P("x^4 + z")


def test_decompose_gap_in_y_degrees(ring_c0):
    """Missing y-degrees get zero pairs"""
    dec = qr_decompose_trick(ring_c0.element(P("z*y^3 + x*y")))
    assert dec.epsilon == 3
    assert dec.pairs[1] == (Polynomial.zero(), Polynomial.zero())
    assert dec.pairs[2] == (Polynomial.zero(), P("z"))


def test_decompose_recomposes(generic_ring):
    """Test the decomposition recomposes to the element"""
    p = generic_ring.element(P("x^3*y^4 - 5*x*y^2*z + 7*y*t^2 + c2*x^5"))
    assert qr_equal(qr_decompose_trick(p).recompose(generic_ring), p)


def test_decompose_rejects_raw_representative(ring_c0):
    """Test decomposing a non-canonical representative fails"""
    with pytest.raises(ValueError):
        qr_decompose_trick(QuotientElement(P("x^2*y"), ring_c0))


def test_subring_membership(ring_c0):
    """Test membership in the k-subrings"""
    assert qr_subring_member(ring_c0.element(P("x^3 + c0")), Subring.K_X)
    assert qr_subring_member(ring_c0.element(P("c0^2 - 1")), Subring.K)
    assert qr_subring_member(ring_c0.element(P("x*t")), Subring.K_XT)
    assert not qr_subring_member(ring_c0.element(P("x*t")), Subring.K_XZ)
    assert qr_subring_member(ring_c0.element(P("z^2 + t")), Subring.K_ZT)
    assert not qr_subring_member(ring_c0.element(P("x*y")), Subring.K_XZT)
    # x^2*y reduces into k[x, z, t]
    assert qr_subring_member(ring_c0.element(P("x^2*y")), Subring.K_XZT)
    assert not qr_subring_member(ring_c0.element(P("x^2*y")), Subring.K_ZT)


def test_membership_treats_any_parameter_as_constant(ring_c0):
    """Test parameters the ring does not mention still count as constants"""
    assert ring_c0.parameters() == params(1)
    assert qr_subring_member(ring_c0.element(P("c5*x")), Subring.K_X)
    assert qr_subring_member(ring_c0.element(P("c5 - c99^2")), Subring.K)
    assert qr_subring_member(ring_c0.element(P("c7*x^2*y")), Subring.K_XZT)
    assert not qr_subring_member(ring_c0.element(P("c5*x*y")), Subring.K_XZT)


def test_ring_symbols(generic_ring, ring_c0):
    """Test the symbols a ring element may mention"""
    assert generic_ring.symbols() == GENERATORS + params(4)
    assert ring_c0.symbols() == GENERATORS + params(1)
    assert eta_ring(P("x")).symbols() == GENERATORS


@pytest.mark.parametrize("degree", [-1, 100, 150])
def test_generic_eta_degree_out_of_range(degree):
    """Test generic eta rejects degrees outside 0..99"""
    with pytest.raises(ConfigInvalidError) as exc:
        generic_eta(degree)
    assert exc.value.exit_code == 2


def test_eta_constructors():
    """Test the eta constructors"""
    assert generic_eta(2) == P("c0 + c1*x + c2*x^2")
    assert eta_from_coefficients([1, 0, 3]) == P("1 + 3*x^2")
    assert translate(P("c0 + c1*x"), 5) == P("5 + c1*x")


def test_constant_term_ring():
    """Test the constant-term ring of eta"""
    ring = constant_term_ring(generic_eta(3))
    assert ring.relation == P("x^2*y + z^2 + t^3 + c0")
    assert ring.label == "S_c"
    assert eta_ring(P("x")).relation == P("x^2*y + z^2 + t^3 + x")
