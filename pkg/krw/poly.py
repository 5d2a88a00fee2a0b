"""Sparse multivariate polynomials with exact rational coefficients

Polynomials live in Q[c0, c1, ...][X, Y, Z, T, U, V]. Parameters c_i are
treated as ordinary commuting symbols. A monomial is an exponent vector indexed
by symbol position (X, Y, Z, T, U, V, c0, c1, ...) with trailing zeros
stripped, so every monomial has exactly one representation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from krw.errors import DivisorZeroError

logger = logging.getLogger(__name__)

Rational = Fraction
Monomial = Tuple[int, ...]

PARAM_OFFSET = 6
MAX_PARAM_INDEX = 99


@dataclass(frozen=True, order=True)
class Symbol:
    """A ring indeterminate, ordered by its exponent-vector position"""

    index: int
    name: str = field(compare=False)

    @classmethod
    def param(cls, i: int) -> "Symbol":
        if not 0 <= i <= MAX_PARAM_INDEX:
            raise ValueError(f"parameter index {i} out of range 0..{MAX_PARAM_INDEX}")
        return cls(PARAM_OFFSET + i, f"c{i}")

    @classmethod
    def at(cls, index: int) -> "Symbol":
        if index < PARAM_OFFSET:
            return BASE_SYMBOLS[index]
        return cls.param(index - PARAM_OFFSET)

    @property
    def is_param(self) -> bool:
        return self.index >= PARAM_OFFSET

    def __str__(self) -> str:
        return self.name


X = Symbol(0, "x")
Y = Symbol(1, "y")
Z = Symbol(2, "z")
T = Symbol(3, "t")
U = Symbol(4, "U")
V = Symbol(5, "V")

BASE_SYMBOLS = (X, Y, Z, T, U, V)
GENERATORS = (X, Y, Z, T)


def params(count: int) -> Tuple[Symbol, ...]:
    """Parameters c0 .. c{count-1}"""
    return tuple(Symbol.param(i) for i in range(count))


class MonomialOrder(Enum):
    """Monomial orders for single-divisor division"""
    GRLEX = "grlex"
    LEX = "lex"


# --- monomials -------------------------------------------------------------

def strip(exponents: Sequence[int]) -> Monomial:
    """Drop trailing zero exponents"""
    n = len(exponents)
    while n and exponents[n - 1] == 0:
        n -= 1
    return tuple(exponents[:n])


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b if b divides a, else None"""
    if len(b) > len(a):
        return None
    out = list(a)
    for i, e in enumerate(b):
        if out[i] < e:
            return None
        out[i] -= e
    return strip(out)


def exponent(m: Monomial, sym: Symbol) -> int:
    return m[sym.index] if sym.index < len(m) else 0


def mono_of(exps: Mapping[Symbol, int]) -> Monomial:
    """Build a monomial from a map Symbol -> exponent"""
    if not exps:
        return ()
    out = [0] * (max(s.index for s in exps) + 1)
    for s, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent for {s}")
        out[s.index] = e
    return strip(out)


def mono_str(m: Monomial) -> str:
    # parameters print first: c1*x^2 rather than x^2*c1
    order = list(range(PARAM_OFFSET, len(m))) + list(range(min(len(m), PARAM_OFFSET)))
    factors = []
    for i in order:
        e = m[i]
        if not e:
            continue
        name = Symbol.at(i).name
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


def _grlex_key(m: Monomial):
    # stripped vectors compare like their zero-padded versions
    return (sum(m), m)


def _lex_key(m: Monomial):
    return m


_ORDER_KEYS = {MonomialOrder.GRLEX: _grlex_key, MonomialOrder.LEX: _lex_key}


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# --- polynomials -----------------------------------------------------------

Coercible = Union["Polynomial", int, Fraction]


class Polynomial:
    """Immutable sparse polynomial: a map Monomial -> nonzero Rational"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Sequence[int], object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if not c:
                continue
            key = strip(tuple(exps))
            total = clean.get(key, 0) + c
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # caller guarantees stripped keys and nonzero Fraction values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, c: Union[int, Fraction]) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, sym: Symbol) -> "Polynomial":
        return cls._raw({mono_of({sym: 1}): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Mapping[Symbol, int], coeff: Union[int, Fraction] = 1) -> "Polynomial":
        return cls({mono_of(exps): coeff})

    # --- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def uses_only(self, allowed: Iterable[Symbol]) -> bool:
        allowed_idx = {s.index for s in allowed}
        return all(i in allowed_idx for m in self._terms for i, e in enumerate(m) if e)

    def degree(self, sym: Symbol) -> int:
        """Degree in sym; -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(exponent(m, sym) for m in self._terms)

    def max_param_index(self) -> int:
        """Highest parameter index present, or -1"""
        top = max((len(m) for m in self._terms), default=0) - 1
        return top - PARAM_OFFSET if top >= PARAM_OFFSET else -1

    def coefficient(self, sym: Symbol, k: int) -> "Polynomial":
        """Coefficient of sym^k, as a polynomial without sym"""
        i = sym.index
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            if exponent(m, sym) == k:
                if k:
                    lst = list(m)
                    lst[i] = 0
                    m = strip(lst)
                out[m] = c
        return Polynomial._raw(out)

    def coefficients(self, sym: Symbol) -> Dict[int, "Polynomial"]:
        """Map k -> coefficient of sym^k, for every k present"""
        i = sym.index
        buckets: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            k = exponent(m, sym)
            if k:
                lst = list(m)
                lst[i] = 0
                m = strip(lst)
            buckets.setdefault(k, {})[m] = c
        return {k: Polynomial._raw(t) for k, t in sorted(buckets.items())}

    def leading_term(self, order: MonomialOrder = MonomialOrder.GRLEX) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_ORDER_KEYS[order])
        return m, self._terms[m]

    # --- arithmetic --------------------------------------------------------

    @staticmethod
    def coerce(other: object) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: Coercible) -> "Polynomial":
        o = self.coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "Polynomial":
        o = self.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Coercible) -> "Polynomial":
        o = self.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Coercible) -> "Polynomial":
        o = self.coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return Polynomial.zero()
        out: Dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in o._terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        o = self.coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- substitution and division ----------------------------------------

    def substitute(self, assignment: Mapping[Symbol, Coercible]) -> "Polynomial":
        """Apply the ring homomorphism that sends each assigned symbol to its image

        Symbols absent from the assignment map to themselves.
        """
        images = {s.index: self.coerce(p) for s, p in assignment.items()}
        if not images or not self._terms:
            return self
        # group terms by the exponents of substituted symbols so each product
        # of image powers is computed once
        groups: Dict[Tuple[Tuple[int, int], ...], Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            key = tuple((i, e) for i, e in enumerate(m) if e and i in images)
            if key:
                lst = list(m)
                for i, _ in key:
                    lst[i] = 0
                m = strip(lst)
            groups.setdefault(key, {})[m] = c

        power_cache: Dict[Tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            if (i, e) not in power_cache:
                power_cache[(i, e)] = images[i] ** e
            return power_cache[(i, e)]

        result = Polynomial.zero()
        for key, rest in groups.items():
            factor = Polynomial._raw(rest)
            for i, e in key:
                factor = factor * power(i, e)
            result = result + factor
        return result

    def exact_divide(self, d: "Polynomial", order: MonomialOrder = MonomialOrder.GRLEX) -> Optional["Polynomial"]:
        """Quotient q with self = q*d, or None when d does not divide self

        Single-divisor division with remainder: the remainder is zero exactly
        when d divides self, so the first term that cannot be cancelled ends
        the search.
        """
        if d.is_zero:
            raise DivisorZeroError()
        if self.is_zero:
            return Polynomial.zero()
        key = _ORDER_KEYS[order]
        lm_d, lc_d = d.leading_term(order)
        rem = dict(self._terms)
        quotient: Dict[Monomial, Fraction] = {}
        while rem:
            m = max(rem, key=key)
            qm = mono_div(m, lm_d)
            if qm is None:
                return None
            qc = rem[m] / lc_d
            quotient[qm] = qc
            for dm, dc in d._terms.items():
                k = mono_mul(dm, qm)
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Polynomial._raw(quotient)

    # --- formatting --------------------------------------------------------

    def _display_order(self) -> Sequence[Monomial]:
        width = max((len(m) for m in self._terms), default=0)
        rest = [i for i in range(width) if i not in (U.index, V.index)]

        def key(m: Monomial):
            padded = m + (0,) * (width - len(m))
            return (exponent(m, U), exponent(m, V), tuple(-padded[i] for i in rest))

        return sorted(self._terms, key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m in self._display_order():
            c = self._terms[m]
            body = mono_str(m)
            if not body:
                text = _format_coefficient(c)
            elif c == 1:
                text = body
            elif c == -1:
                text = f"-{body}"
            else:
                text = f"{_format_coefficient(c)}*{body}"
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f" - {text[1:]}")
            else:
                pieces.append(f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"


def var(sym: Symbol) -> Polynomial:
    """Shorthand for Polynomial.variable"""
    return Polynomial.variable(sym)
