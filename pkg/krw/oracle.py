"""Decomposition oracle by exact linear algebra

Re-derives the y-degree decomposition p = h + sum_j (u_j x + v_j) y^j without
using canonical-form structure: it writes p as an unknown combination of the
basis {x^a z^b t^c} and {x^e z^b t^c y^j : e <= 1, j >= 1} over a bounding
box of monomials and solves the system exactly. Parameter monomials c^alpha
are separate right-hand sides, so generic coefficients stay symbolic.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from krw.errors import VerificationFailedError
from krw.poly import PARAM_OFFSET, Monomial, Polynomial, T, X, Y, Z, exponent, mono_mul, mono_of, strip
from krw.quotient import QuotientElement, TrickDecomposition

logger = logging.getLogger(__name__)

# (y-degree, part, coefficient monomial) with part "h", "u" or "v"
Unknown = Tuple[int, str, Monomial]


def _split(m: Monomial) -> Tuple[Monomial, Monomial]:
    """(main part over x, y, z, t, U, V; parameter part)"""
    main = strip(m[:PARAM_OFFSET])
    param = strip((0,) * PARAM_OFFSET + tuple(m[PARAM_OFFSET:]))
    return main, param


def _to_fraction(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def oracle_decompose(p: QuotientElement) -> TrickDecomposition:
    """Decompose p by solving the basis-expansion system with sparse exact RREF

    Raises:
        VerificationFailedError: the system is inconsistent or has a free
            unknown, i.e. p is not uniquely expressible in the basis
    """
    if p.is_zero:
        return TrickDecomposition(h=Polynomial.zero(), pairs=(), epsilon=0)

    rhs: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    bounds: Dict[int, List[int]] = {}
    for m, c in p.rep.terms.items():
        main, param = _split(m)
        rhs.setdefault(param, {})[main] = c
        j = exponent(main, Y)
        box = bounds.setdefault(j, [0, 0, 0])
        for k, sym in enumerate((X, Z, T)):
            box[k] = max(box[k], exponent(main, sym))

    rows: Dict[Monomial, int] = {}
    unknowns: List[Unknown] = []
    entries: Dict[int, Dict[int, object]] = {}

    def row_of(main: Monomial) -> int:
        if main not in rows:
            rows[main] = len(rows)
        return rows[main]

    for j in sorted(bounds):
        ax, bz, ct = bounds[j]
        for a, b, c in product(range(ax + 1), range(bz + 1), range(ct + 1)):
            main = mono_of({X: a, Y: j, Z: b, T: c})
            r = row_of(main)
            if j == 0:
                part, coeff_mono = "h", mono_of({X: a, Z: b, T: c})
            elif a <= 1:
                part, coeff_mono = ("u" if a == 1 else "v"), mono_of({Z: b, T: c})
            else:
                continue
            entries.setdefault(r, {})[len(unknowns)] = QQ(1)
            unknowns.append((j, part, coeff_mono))

    n_unknowns = len(unknowns)
    params = sorted(rhs)
    for k, param in enumerate(params):
        for main, c in rhs[param].items():
            entries.setdefault(row_of(main), {})[n_unknowns + k] = QQ(c.numerator, c.denominator)

    shape = (len(rows), n_unknowns + len(params))
    logger.debug(f"Oracle system for {p}: {shape[0]} rows, {n_unknowns} unknowns, {len(params)} right-hand sides")
    reduced, pivots = DomainMatrix(entries, shape, QQ).rref()

    if any(col >= n_unknowns for col in pivots):
        raise VerificationFailedError("oracle system is inconsistent", str(p))
    if len(pivots) < n_unknowns:
        raise VerificationFailedError("oracle system has a free unknown", str(p))

    solution = reduced.to_sparse().rep
    values: Dict[int, Dict[Monomial, Fraction]] = {}
    for i, col in enumerate(pivots):
        row = solution.get(i, {})
        for k, param in enumerate(params):
            val = row.get(n_unknowns + k)
            if val:
                values.setdefault(col, {})[param] = _to_fraction(val)

    h: Dict[Monomial, Fraction] = {}
    u: Dict[int, Dict[Monomial, Fraction]] = {}
    v: Dict[int, Dict[Monomial, Fraction]] = {}
    for col, by_param in values.items():
        j, part, coeff_mono = unknowns[col]
        if part == "h":
            target = h
        else:
            target = (u if part == "u" else v).setdefault(j, {})
        for param, c in by_param.items():
            target[mono_mul(coeff_mono, param)] = c

    epsilon = max((j for j in set(u) | set(v) if u.get(j) or v.get(j)), default=0)
    pairs = tuple((Polynomial(u.get(j, {})), Polynomial(v.get(j, {}))) for j in range(1, epsilon + 1))
    return TrickDecomposition(h=Polynomial(h), pairs=pairs, epsilon=epsilon)
