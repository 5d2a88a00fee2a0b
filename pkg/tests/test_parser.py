"""Tests for the expression parser"""

from fractions import Fraction

import pytest

from krw.errors import ExpressionSyntaxError, UnknownIdentifierError
from krw.parser import parse_polynomial as P
from krw.parser import resolve_symbol
from krw.poly import GENERATORS, Polynomial, Symbol, U, V, X, Z


def test_relation_parses():
    """Test the relation polynomial parses"""
    p = P("x^2*y + z^2 + t^3 + c0")
    assert len(p) == 4
    assert str(p) == "x^2*y + z^2 + t^3 + c0"


def test_generators_are_case_insensitive():
    """Test x, y, z and t parse in either case"""
    assert P("X*Y + Z^2 + T") == P("x*y + z^2 + t")


def test_u_and_v_are_case_sensitive():
    """Test U and V only parse in upper case"""
    assert resolve_symbol("U") == U
    assert resolve_symbol("V") == V
    assert resolve_symbol("u") is None
    with pytest.raises(UnknownIdentifierError):
        P("u + x")


def test_parameter_names():
    """Test c_i parameter names and their bounds"""
    assert resolve_symbol("c0") == Symbol.param(0)
    assert resolve_symbol("c99") == Symbol.param(99)
    assert resolve_symbol("c01") is None
    assert resolve_symbol("c100") is None


def test_unknown_identifier_suggests_closest_name():
    """Test an unknown name gets the closest suggestion"""
    with pytest.raises(UnknownIdentifierError) as exc:
        P("zz + 1")
    assert exc.value.name == "zz"
    assert exc.value.suggestion == "z"
    assert "did you mean 'z'" in exc.value.message
    assert exc.value.exit_code == 2


def test_allowed_symbols_restrict_input():
    """Test parsing restricted to a symbol set"""
    assert P("x*z", allowed=(X, Z)) == P("z*x")
    with pytest.raises(UnknownIdentifierError):
        P("y", allowed=GENERATORS[:1])


def test_rational_literal():
    """Test rational literals parse exactly"""
    p = P("1/2*x - 3/4")
    assert p.terms[(1,)] == Fraction(1, 2)
    assert p.terms[()] == Fraction(-3, 4)
    assert P(str(p)) == p


def test_zero_denominator():
    """Test a zero denominator is rejected"""
    with pytest.raises(ExpressionSyntaxError) as exc:
        P("1/0")
    assert "zero denominator" in exc.value.message


def test_precedence():
    """Power binds tighter than unary minus, which binds tighter than *"""
    assert P("-x^2") == -P("x*x")
    assert P("2*x^3") == P("x*x*x*2")
    assert P("(x + 1)^2") == P("x^2 + 2*x + 1")
    assert P("x - y - z") == P("x - (y + z)")
    assert P("2^3") == Polynomial.constant(8)


def test_implicit_multiplication_rejected():
    """Test juxtaposition is a syntax error"""
    with pytest.raises(ExpressionSyntaxError) as exc:
        P("2x")
    assert exc.value.position == 1


def test_syntax_error_positions():
    """Test syntax errors report their position"""
    with pytest.raises(ExpressionSyntaxError) as exc:
        P("x^")
    assert exc.value.position == 2
    assert "unexpected end of input" in exc.value.message

    with pytest.raises(ExpressionSyntaxError) as exc:
        P("x $ y")
    assert exc.value.position == 2


def test_negative_exponent_rejected():
    """Test negative exponents are rejected"""
    with pytest.raises(ExpressionSyntaxError):
        P("x^-1")


def test_whitespace_ignored():
    """Test whitespace does not change the parse"""
    assert P("  x  *  y ") == P("x*y")
