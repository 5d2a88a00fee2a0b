"""Shared fixtures: standard rings and an independent sympy expansion oracle"""

from pathlib import Path

import pytest
import sympy

from krw.parser import parse_polynomial
from krw.poly import Polynomial, Symbol
from krw.quotient import constant_term_ring, eta_ring, generic_eta

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def repo_root(monkeypatch):
    """Run every test from the repository root so config paths resolve"""
    monkeypatch.chdir(ROOT)
    for key in ("KRW_ITER_CAP", "KRW_LOG_LEVEL", "KRW_REPLAY_CONFIG_PATH", "KRW_MAPS_DIR"):
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def ring_c0():
    """R with eta = c0, i.e. the relation x^2*y + z^2 + t^3 + c0"""
    return eta_ring(parse_polynomial("c0"))


@pytest.fixture
def kr_ring():
    """The Koras-Russell threefold: eta = x"""
    return eta_ring(parse_polynomial("x"))


@pytest.fixture
def generic_ring():
    return eta_ring(generic_eta(3))


@pytest.fixture
def constant_ring():
    return constant_term_ring(generic_eta(3))


def _to_sympy(p: Polynomial):
    total = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for i, e in enumerate(m):
            if e:
                term *= sympy.Symbol(Symbol.at(i).name) ** e
        total += term
    return sympy.expand(total)


@pytest.fixture
def to_sympy():
    return _to_sympy


@pytest.fixture
def sympy_expand():
    """Expand an expression in our grammar with sympy"""
    def expand(text: str):
        names = {n: sympy.Symbol(n) for n in ("x", "y", "z", "t", "U", "V")}
        names.update({f"c{i}": sympy.Symbol(f"c{i}") for i in range(10)})
        return sympy.expand(sympy.sympify(text.replace("^", "**"), locals=names))
    return expand
