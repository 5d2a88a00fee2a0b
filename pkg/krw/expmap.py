"""Exponential maps R -> R[U] given by generator images

An exponential map is stored as the images of x, y, z, t, each canonical in
R[U]. The coefficient of U^i in phi(p) is the higher derivation component
D_i(p).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from krw.errors import (
    NotIdentityAtZeroError,
    NotWellDefinedError,
    RingMismatchError,
    TrivialMapError,
    UnknownNameError,
    VerificationFailedError,
)
from krw.grading import FiltrationSpec, filt_degree_leading, is_homogeneous
from krw.names import suggest
from krw.parser import parse_polynomial
from krw.poly import GENERATORS, Polynomial, Symbol, U, V, var
from krw.quotient import QuotientElement, QuotientRingSpec

logger = logging.getLogger(__name__)

BUILTIN_MAPS: Dict[str, Dict[str, str]] = {
    "phi1": {"x": "x", "y": "y + 2*z*U - x^2*U^2", "z": "z - x^2*U", "t": "t"},
    "phi2": {"x": "x", "y": "y + 3*t^2*U - 3*x^2*t*U^2 + x^4*U^3", "z": "z", "t": "t - x^2*U"},
}


@dataclass(frozen=True)
class ExpMap:
    """Candidate exponential map; None statuses mean not yet verified"""

    name: str
    images: Mapping[Symbol, Polynomial]
    ring: QuotientRingSpec
    well_defined: Optional[bool] = field(default=None, compare=False)
    iterative: Optional[bool] = field(default=None, compare=False)

    def image(self, sym: Symbol) -> Polynomial:
        return self.images[sym]

    def __str__(self) -> str:
        return "; ".join(f"{s} -> {self.images[s]}" for s in GENERATORS)


@dataclass(frozen=True)
class DerivationComponent:
    index: int
    value: QuotientElement


@dataclass(frozen=True)
class WellDefinedResult:
    holds: bool
    residue: Polynomial


@dataclass(frozen=True)
class IterativeResult:
    """Outcome of the phi_V(phi_U(g)) = phi_{U+V}(g) identities"""
    holds: bool
    generator: Optional[Symbol] = None
    residue: Polynomial = field(default_factory=Polynomial.zero)


@dataclass(frozen=True)
class FixedResult:
    """fixed, or the smallest i >= 1 with D_i(p) != 0 and that value"""
    fixed: bool
    index: Optional[int] = None
    witness: Optional[QuotientElement] = None


@dataclass(frozen=True)
class InducedMapResult:
    u_weight: Fraction
    scale: int
    induced: ExpMap
    verified: bool
    filtration: FiltrationSpec
    failure: Optional[str] = None


def expmap_load(images: Mapping[Symbol, Polynomial], ring: QuotientRingSpec, name: str = "custom") -> ExpMap:
    """Canonicalize generator images and check the identity at U = 0

    Generators without an image map to themselves. Well-definedness and
    iterativity are left unverified.

    Raises:
        NotIdentityAtZeroError: some image does not reduce to its generator at U = 0
    """
    canonical: Dict[Symbol, Polynomial] = {}
    for sym in GENERATORS:
        img = ring.reduce(images.get(sym, var(sym)))
        at_zero = img.substitute({U: 0})
        if at_zero != var(sym):
            raise NotIdentityAtZeroError(sym.name, str(at_zero))
        canonical[sym] = img
    logger.debug(f"Loaded map {name}: {canonical}")
    return ExpMap(name=name, images=canonical, ring=ring)


def expmap_builtin(name: str, ring: QuotientRingSpec) -> ExpMap:
    """One of the built-in maps phi1, phi2 on ring

    Raises:
        UnknownNameError: name is not a built-in map
    """
    try:
        texts = BUILTIN_MAPS[name]
    except KeyError:
        raise UnknownNameError("map", name, suggest(name, BUILTIN_MAPS)) from None
    allowed = GENERATORS + (U,)
    images = {sym: parse_polynomial(texts[sym.name], allowed) for sym in GENERATORS}
    return expmap_load(images, ring, name=name)


def _apply(m: ExpMap, p: Polynomial) -> Polynomial:
    return m.ring.reduce(p.substitute(m.images))


def expmap_apply(m: ExpMap, p: QuotientElement) -> Polynomial:
    """phi(p) as a canonical polynomial in R[U]

    Raises:
        RingMismatchError: p is not in m.ring
    """
    if p.ring != m.ring:
        raise RingMismatchError(str(p.ring), str(m.ring))
    return _apply(m, p.rep)


def expmap_check_well_defined(m: ExpMap) -> WellDefinedResult:
    """Whether the relation maps to 0 in R[U]; the residue is its image"""
    residue = _apply(m, m.ring.relation)
    if residue:
        logger.debug(f"Map {m.name} is not well-defined, residue {residue}")
    return WellDefinedResult(holds=residue.is_zero, residue=residue)


def _require_well_defined(m: ExpMap) -> None:
    if m.well_defined is True:
        return
    result = expmap_check_well_defined(m)
    if not result.holds:
        raise NotWellDefinedError(str(result.residue))


def expmap_check_iterative(m: ExpMap) -> IterativeResult:
    """Check phi_V(phi_U(g)) = phi_{U+V}(g) in R[U, V] for each generator g

    All maps involved are ring homomorphisms, so the generators suffice.

    Raises:
        NotWellDefinedError: m is not well-defined
    """
    _require_well_defined(m)
    images_v = {s: img.substitute({U: var(V)}) for s, img in m.images.items()}
    shift = {U: var(U) + var(V)}
    for sym in GENERATORS:
        img = m.images[sym]
        lhs = m.ring.reduce(img.substitute(images_v))
        rhs = m.ring.reduce(img.substitute(shift))
        if lhs != rhs:
            residue = lhs - rhs
            logger.debug(f"Map {m.name} is not iterative on {sym}: {residue}")
            return IterativeResult(holds=False, generator=sym, residue=residue)
    return IterativeResult(holds=True)


def expmap_derivation_component(m: ExpMap, p: QuotientElement, i: int) -> QuotientElement:
    """D_i(p): the coefficient of U^i in phi(p)"""
    return QuotientElement(expmap_apply(m, p).coefficient(U, i), m.ring)


def derivation_components(m: ExpMap, p: QuotientElement) -> List[DerivationComponent]:
    """Every nonzero D_i(p) with i >= 1, by increasing i"""
    image = expmap_apply(m, p)
    return [DerivationComponent(i, QuotientElement(c, m.ring))
            for i, c in image.coefficients(U).items() if i >= 1]


def expmap_is_fixed(m: ExpMap, p: QuotientElement) -> FixedResult:
    components = derivation_components(m, p)
    if not components:
        return FixedResult(fixed=True)
    first = components[0]
    return FixedResult(fixed=False, index=first.index, witness=first.value)


def expmap_induce_graded(m: ExpMap, filt: FiltrationSpec, strict: bool = True) -> InducedMapResult:
    """Grade-preserving exponential map induced on the associated graded ring

    With w the largest (delta(D_i g) - delta(g)) / i over generators g, the
    induced image of Xi(g) keeps Xi(D_i g) U^i for the i attaining w. Grades
    are multiplied by the denominator of w so U gets the integer weight
    -w * scale. The result is checked for well-definedness, iterativity and
    homogeneity.

    Args:
        m: Well-defined exponential map on filt.ring
        filt: Filtration of m.ring
        strict: Raise on a failed verification instead of returning verified=False

    Raises:
        RingMismatchError: m does not act on filt.ring
        TrivialMapError: every D_i(g) with i >= 1 vanishes
        VerificationFailedError: strict and the induced map fails a check
    """
    if m.ring != filt.ring:
        raise RingMismatchError(str(m.ring), str(filt.ring))
    ratios: Dict[Symbol, List[Tuple[int, Fraction, QuotientElement]]] = {}
    for sym in GENERATORS:
        gen_degree = filt_degree_leading(m.ring.gen(sym), filt).degree
        for i, coeff in m.images[sym].coefficients(U).items():
            if i == 0:
                continue
            lead = filt_degree_leading(QuotientElement(coeff, m.ring), filt)
            ratios.setdefault(sym, []).append((i, Fraction(lead.degree - gen_degree, i), lead.leading_form))
    if not ratios:
        raise TrivialMapError(m.name)
    w = max(r for entries in ratios.values() for _, r, _ in entries)
    scale = w.denominator
    u = var(U)
    graded = filt.graded_ring
    images: Dict[Symbol, Polynomial] = {}
    for sym in GENERATORS:
        base = filt_degree_leading(m.ring.gen(sym), filt).leading_form.rep
        extra = [lf.rep * u ** i for i, r, lf in ratios.get(sym, []) if r == w]
        images[sym] = sum(extra, base)
    induced = expmap_load(images, graded, name=f"gr({m.name})")
    scaled = filt.rescaled(scale)
    u_grading = scaled.grading.with_weight(U, int(-w * scale))

    failure: Optional[str] = None
    witness: Optional[str] = None
    wd = expmap_check_well_defined(induced)
    if not wd.holds:
        failure, witness = "induced map is not well-defined", str(wd.residue)
    else:
        induced = replace(induced, well_defined=True)
        it = expmap_check_iterative(induced)
        if not it.holds:
            failure, witness = f"induced map is not iterative on {it.generator}", str(it.residue)
        else:
            induced = replace(induced, iterative=True)
            for sym in GENERATORS:
                if not is_homogeneous(images[sym], u_grading):
                    failure, witness = f"induced image of {sym} is not homogeneous", str(images[sym])
                    break
    if failure is not None:
        logger.warning(f"Induced map of {m.name} under {filt.grading.name} failed: {failure}")
        if strict:
            raise VerificationFailedError(failure, witness)
    logger.info(f"Induced map of {m.name} under {filt.grading.name}: U weight {w}, scale {scale}")
    return InducedMapResult(u_weight=w, scale=scale, induced=induced, verified=failure is None,
                            filtration=scaled, failure=failure)
