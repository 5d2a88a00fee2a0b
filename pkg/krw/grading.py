"""Weighted gradings, leading forms and degree filtrations

A grading assigns an integer weight to each symbol; parameters and U, V weigh
0 unless overridden. A grading filters a quotient ring R = B/(F) by
F_m = image of the span of monomials of grade <= m, with degree function delta
and leading form Xi landing in the associated graded ring B/(LF(F)).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Dict, Optional, Tuple, Union

from krw.errors import IterationCapExceededError, NotApplicableError, RingMismatchError, UnknownNameError
from krw.names import suggest
from krw.poly import Monomial, MonomialOrder, Polynomial, Symbol, strip
from krw.quotient import X2Y, QuotientElement, QuotientRingSpec, qr_new
from krw.settings import get_settings

logger = logging.getLogger(__name__)


@total_ordering
class _MinusInfinity:
    """Degree of zero: below every integer, absorbing under addition"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return other is not self

    def __add__(self, other) -> "_MinusInfinity":
        return self

    __radd__ = __add__

    def __hash__(self) -> int:
        return hash("-inf")

    def __repr__(self) -> str:
        return "-inf"


MINUS_INFINITY = _MinusInfinity()
Degree = Union[int, _MinusInfinity]


@dataclass(frozen=True)
class Grading:
    """Integer weights indexed by symbol position; missing positions weigh 0"""

    name: str
    weights: Tuple[int, ...]

    def weight(self, sym: Symbol) -> int:
        return self.weights[sym.index] if sym.index < len(self.weights) else 0

    def grade(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def scaled(self, k: int) -> "Grading":
        if k == 1:
            return self
        return Grading(f"{self.name}*{k}", tuple(w * k for w in self.weights))

    def with_weight(self, sym: Symbol, w: int) -> "Grading":
        lst = list(self.weights) + [0] * max(0, sym.index + 1 - len(self.weights))
        lst[sym.index] = w
        return Grading(self.name, strip(lst))


OMEGA1 = Grading("omega1", (-1, 2, 0, 0))
OMEGA2 = Grading("omega2", (6, -6, 3, 2))
GRADINGS = {OMEGA1.name: OMEGA1, OMEGA2.name: OMEGA2}


def get_grading(name: str) -> Grading:
    """Look up a named grading

    Raises:
        UnknownNameError: name is not omega1 or omega2
    """
    try:
        return GRADINGS[name]
    except KeyError:
        raise UnknownNameError("grading", name, suggest(name, GRADINGS)) from None


def mono_grade(m: Monomial, g: Grading) -> int:
    return g.grade(m)


@dataclass(frozen=True)
class LeadingFormResult:
    """Top grade and the homogeneous component of that grade"""
    degree: Degree
    form: Polynomial


def leading_form_free(p: Polynomial, g: Grading) -> LeadingFormResult:
    """Leading form of p in B under g; the zero polynomial has degree -inf"""
    if p.is_zero:
        return LeadingFormResult(MINUS_INFINITY, p)
    grades = {m: g.grade(m) for m in p.terms}
    top = max(grades.values())
    form = Polynomial._raw({m: c for m, c in p.terms.items() if grades[m] == top})
    return LeadingFormResult(top, form)


def homogeneous_components(p: Polynomial, g: Grading) -> Dict[int, Polynomial]:
    """Partition of p's terms by grade, keyed in increasing grade"""
    buckets: Dict[int, dict] = {}
    for m, c in p.terms.items():
        buckets.setdefault(g.grade(m), {})[m] = c
    return {k: Polynomial._raw(v) for k, v in sorted(buckets.items())}


def is_homogeneous(p: Polynomial, g: Grading) -> bool:
    return len(homogeneous_components(p, g)) <= 1


@dataclass(frozen=True)
class FiltrationSpec:
    """Filtration of `ring` by `grading`, with associated graded ring B/(lead_relation)"""

    ring: QuotientRingSpec
    grading: Grading
    lead_relation: Polynomial
    graded_ring: QuotientRingSpec
    iteration_cap: int = field(default=10_000, compare=False)

    def rescaled(self, k: int) -> "FiltrationSpec":
        """Same filtration with every grade multiplied by k"""
        return FiltrationSpec(self.ring, self.grading.scaled(k), self.lead_relation,
                              self.graded_ring, self.iteration_cap)


@dataclass(frozen=True)
class FiltrationDegree:
    """delta(p) and Xi(p), the latter as an element of the graded ring"""
    degree: Degree
    leading_form: QuotientElement


def assoc_graded_spec(ring: QuotientRingSpec, grading: Grading,
                      iteration_cap: Optional[int] = None) -> FiltrationSpec:
    """Build the filtration of ring by grading and its associated graded ring

    Args:
        ring: The filtered ring B/(X^2*Y + g)
        grading: Weight grading on B
        iteration_cap: Reduction loop cap (default: KRW_ITER_CAP setting)

    Raises:
        NotApplicableError: the leading relation is not of shape X^2*Y + g'
        NotPrimeError: the leading relation fails the linear-in-Y criterion
    """
    lead = leading_form_free(ring.relation, grading).form
    (x2y_mono, _), = X2Y.terms.items()
    if lead.terms.get(x2y_mono) != 1:
        raise NotApplicableError(
            f"leading form {lead} of {ring.relation} under {grading.name} is not of shape x^2*y + g'"
        )
    graded = qr_new(lead - X2Y, label=f"gr_{grading.name}({ring.label or 'R'})")
    cap = iteration_cap if iteration_cap is not None else get_settings().iter_cap
    logger.info(f"Filtration of {ring} by {grading.name}: graded ring {graded}")
    return FiltrationSpec(ring=ring, grading=grading, lead_relation=lead, graded_ring=graded,
                          iteration_cap=cap)


def filt_degree_leading(p: QuotientElement, filt: FiltrationSpec) -> FiltrationDegree:
    """delta(p) and Xi(p) by lowering the top grade of a representative

    While the leading form of the representative q is divisible by the leading
    relation, q - m*F represents the same element with a smaller top grade.
    Once it is not, that top grade is minimal.

    Raises:
        RingMismatchError: p is not in filt.ring
        IterationCapExceededError: no minimal representative within the cap
    """
    if p.ring != filt.ring:
        raise RingMismatchError(str(p.ring), str(filt.ring))
    q = p.rep
    relation = filt.ring.relation
    steps = 0
    while True:
        lf = leading_form_free(q, filt.grading)
        if lf.form.is_zero:
            return FiltrationDegree(MINUS_INFINITY, filt.graded_ring.zero())
        m = lf.form.exact_divide(filt.lead_relation, MonomialOrder.GRLEX)
        if m is None:
            break
        steps += 1
        if steps > filt.iteration_cap:
            raise IterationCapExceededError(filt.iteration_cap)
        q = q - m * relation
    if steps:
        logger.debug(f"Top grade of {p} lowered in {steps} steps to {lf.degree}")
    return FiltrationDegree(lf.degree, filt.graded_ring.element(lf.form))
