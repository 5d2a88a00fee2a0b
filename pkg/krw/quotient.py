"""Quotient rings B/(X^2*Y + g)

Elements are kept in canonical form: no monomial divisible by X^2*Y. The
rewrite rule X^2*Y -> -g lowers the Y-degree, so normal forms always exist,
and monomials not divisible by X^2*Y form a module basis of the quotient, so
they are unique. U and V are inert: the same rewriting works in R[U] and
R[U, V].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from krw.errors import ConfigInvalidError, ContainsYError, NotPrimeError, RingMismatchError
from krw.poly import (
    GENERATORS,
    MAX_PARAM_INDEX,
    Monomial,
    Polynomial,
    Symbol,
    T,
    X,
    Y,
    Z,
    exponent,
    params,
    strip,
    var,
)

logger = logging.getLogger(__name__)

X2Y = Polynomial.monomial({X: 2, Y: 1})


class EtaMode(Enum):
    """Whether the relation has rational coefficients or symbolic parameters"""
    CONCRETE = "concrete"
    GENERIC = "generic"


@dataclass(frozen=True)
class QuotientRingSpec:
    """B/(X^2*Y + g) for g free of Y with g(0, Z, T) != 0

    Construct through qr_new, which validates the relation.
    """

    g: Polynomial
    mode: EtaMode
    label: str = field(default="", compare=False)

    @property
    def relation(self) -> Polynomial:
        return X2Y + self.g

    @property
    def param_count(self) -> int:
        return self.g.max_param_index() + 1

    def parameters(self) -> Tuple[Symbol, ...]:
        return params(self.param_count)

    def symbols(self) -> Tuple[Symbol, ...]:
        """Symbols an element of this ring may mention"""
        return GENERATORS + self.parameters()

    def reduce(self, p: Polynomial) -> Polynomial:
        """Canonical representative of p modulo the relation"""
        return _reduce(self, p)

    def element(self, p: Polynomial) -> "QuotientElement":
        return QuotientElement(self.reduce(p), self)

    def gen(self, sym: Symbol) -> "QuotientElement":
        return QuotientElement(var(sym), self)

    def zero(self) -> "QuotientElement":
        return QuotientElement(Polynomial.zero(), self)

    def one(self) -> "QuotientElement":
        return QuotientElement(Polynomial.constant(1), self)

    def __str__(self) -> str:
        name = f"{self.label}: " if self.label else ""
        return f"{name}B/({self.relation})"


@lru_cache(maxsize=256)
def _neg_g_power(ring: QuotientRingSpec, k: int) -> Polynomial:
    return (-ring.g) ** k


def _reduce(ring: QuotientRingSpec, p: Polynomial) -> Polynomial:
    # Each pass rewrites every reducible term x^a y^b w as (-g)^k x^(a-2k) y^(b-k) w
    # with k = min(a // 2, b). New terms have strictly smaller Y-degree than
    # their source, so the highest reducible Y-degree drops every pass.
    current = p
    passes = 0
    while True:
        canonical: Dict[Monomial, Fraction] = {}
        pending: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in current.terms.items():
            a, b = exponent(m, X), exponent(m, Y)
            k = min(a // 2, b)
            if k == 0:
                canonical[m] = c
                continue
            lst = list(m)
            lst[X.index] = a - 2 * k
            lst[Y.index] = b - k
            pending.setdefault(k, {})[strip(lst)] = c
        if not pending:
            if passes:
                logger.debug(f"Normal form reached after {passes} rewrite passes")
            return Polynomial._raw(canonical)
        passes += 1
        current = Polynomial._raw(canonical)
        for k in sorted(pending, reverse=True):
            current = current + Polynomial._raw(pending[k]) * _neg_g_power(ring, k)


def qr_new(g: Polynomial, mode: Optional[EtaMode] = None, label: str = "") -> QuotientRingSpec:
    """Validate g and build B/(X^2*Y + g)

    X^2*Y + g is linear in Y, so it is prime iff gcd(X^2, g) = 1, i.e. iff
    g(0, Z, T) != 0.

    Args:
        g: Polynomial in X, Z, T and parameters
        mode: Concrete or generic; inferred from the presence of parameters if omitted
        label: Display name

    Raises:
        ContainsYError: g involves Y
        NotPrimeError: X divides g
    """
    if g.degree(Y) > 0:
        raise ContainsYError(str(g))
    if mode is None:
        mode = EtaMode.GENERIC if g.max_param_index() >= 0 else EtaMode.CONCRETE
    if g.substitute({X: 0}).is_zero:
        cofactor = var(X) * var(Y) + g.exact_divide(var(X))
        raise NotPrimeError(str(X2Y + g), f"x*({cofactor})")
    ring = QuotientRingSpec(g=g, mode=mode, label=label)
    logger.debug(f"Constructed ring {ring}")
    return ring


def qr_normal_form(p: Polynomial, ring: QuotientRingSpec) -> "QuotientElement":
    return ring.element(p)


@dataclass(frozen=True)
class QuotientElement:
    """An element of a quotient ring, held by its canonical representative"""

    rep: Polynomial
    ring: QuotientRingSpec

    def _check(self, other: "QuotientElement") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(str(self.ring), str(other.ring))

    def _lift(self, other) -> "QuotientElement":
        if isinstance(other, QuotientElement):
            self._check(other)
            return other
        return self.ring.element(Polynomial.coerce(other))

    def __add__(self, other) -> "QuotientElement":
        o = self._lift(other)
        return QuotientElement(self.rep + o.rep, self.ring)

    __radd__ = __add__

    def __sub__(self, other) -> "QuotientElement":
        o = self._lift(other)
        return QuotientElement(self.rep - o.rep, self.ring)

    def __neg__(self) -> "QuotientElement":
        return QuotientElement(-self.rep, self.ring)

    def __mul__(self, other) -> "QuotientElement":
        o = self._lift(other)
        return self.ring.element(self.rep * o.rep)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuotientElement":
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def __str__(self) -> str:
        return str(self.rep)


def qr_equal(p: QuotientElement, q: QuotientElement) -> bool:
    """Equality modulo the relation

    Raises:
        RingMismatchError: p and q belong to different rings
    """
    p._check(q)
    return p.rep == q.rep


@dataclass(frozen=True)
class TrickDecomposition:
    """p = h + sum_{j=1..epsilon} (u_j*x + v_j) * y^j with u_j, v_j in k[z, t]"""

    h: Polynomial
    pairs: Tuple[Tuple[Polynomial, Polynomial], ...]
    epsilon: int

    def recompose(self, ring: QuotientRingSpec) -> QuotientElement:
        x, y = var(X), var(Y)
        total = self.h
        for j, (u, v) in enumerate(self.pairs, start=1):
            total = total + (u * x + v) * y ** j
        return QuotientElement(total, ring)


def qr_decompose_trick(p: QuotientElement) -> TrickDecomposition:
    """Split a canonical element by Y-degree

    For j >= 1 a canonical monomial x^e y^j has e <= 1, so each Y-degree
    slice splits uniquely as u_j*x + v_j.
    """
    slices = p.rep.coefficients(Y)
    h = slices.pop(0, Polynomial.zero())
    epsilon = max(slices, default=0)
    pairs = []
    for j in range(1, epsilon + 1):
        coeff = slices.get(j, Polynomial.zero())
        by_x = coeff.coefficients(X)
        if any(e > 1 for e in by_x):
            raise ValueError(f"element {p} is not canonical")
        pairs.append((by_x.get(1, Polynomial.zero()), by_x.get(0, Polynomial.zero())))
    return TrickDecomposition(h=h, pairs=tuple(pairs), epsilon=epsilon)


class Subring(Enum):
    """Subrings generated over k by a subset of x, y, z, t"""
    K = "k"
    K_X = "k[x]"
    K_ZT = "k[z,t]"
    K_XT = "k[x,t]"
    K_XZ = "k[x,z]"
    K_XZT = "k[x,z,t]"

    @property
    def generators(self) -> FrozenSet[Symbol]:
        return _SUBRING_GENERATORS[self]


_SUBRING_GENERATORS = {
    Subring.K: frozenset(),
    Subring.K_X: frozenset({X}),
    Subring.K_ZT: frozenset({Z, T}),
    Subring.K_XT: frozenset({X, T}),
    Subring.K_XZ: frozenset({X, Z}),
    Subring.K_XZT: frozenset({X, Z, T}),
}


def qr_subring_member(p: QuotientElement, sub: Subring) -> bool:
    """Whether p lies in the subring; parameters count as constants

    Monomials of these subrings are canonical and canonical forms are unique,
    so inspecting the representative is sound and complete.
    """
    allowed = set(sub.generators) | set(params(MAX_PARAM_INDEX + 1))
    return p.rep.uses_only(allowed)


# --- ring constructors -----------------------------------------------------

def generic_eta(degree: int) -> Polynomial:
    """eta(X) = c0 + c1*X + ... + c_n*X^n with symbolic coefficients"""
    if not 0 <= degree <= MAX_PARAM_INDEX:
        raise ConfigInvalidError(f"generic eta degree {degree} out of range 0..{MAX_PARAM_INDEX}")
    x = var(X)
    return sum((var(Symbol.param(i)) * x ** i for i in range(degree + 1)), Polynomial.zero())


def eta_from_coefficients(coefficients: Sequence[Fraction]) -> Polynomial:
    x = var(X)
    return sum((Polynomial.constant(c) * x ** i for i, c in enumerate(coefficients)), Polynomial.zero())


def translate(eta: Polynomial, c) -> Polynomial:
    """Replace the independent coefficient of eta by c"""
    return eta - eta.coefficient(X, 0) + Polynomial.coerce(c)


def relation_g(eta: Polynomial) -> Polynomial:
    """g = Z^2 + T^3 + eta(X)"""
    return var(Z) ** 2 + var(T) ** 3 + eta


def eta_ring(eta: Polynomial, label: str = "R") -> QuotientRingSpec:
    """R_eta = B/(X^2*Y + Z^2 + T^3 + eta(X))"""
    return qr_new(relation_g(eta), label=label)


def constant_term_ring(eta: Polynomial, label: str = "S_c") -> QuotientRingSpec:
    """S_c = B/(X^2*Y + Z^2 + T^3 + c) where c is the independent coefficient of eta"""
    return qr_new(relation_g(eta.coefficient(X, 0)), label=label)
