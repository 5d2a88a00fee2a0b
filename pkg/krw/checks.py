"""Replay check groups R1..R9

Every check is a function of the replay context returning a CheckOutcome.
Checks are registered under their stable dotted names; a KrwError raised by a
check turns into a fail record instead of aborting the run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from krw.errors import ConfigInvalidError, KrwError
from krw.expmap import BUILTIN_MAPS, ExpMap, expmap_builtin, expmap_check_iterative, expmap_check_well_defined
from krw.expmap import expmap_induce_graded, expmap_is_fixed
from krw.grading import (
    MINUS_INFINITY,
    OMEGA1,
    OMEGA2,
    FiltrationSpec,
    assoc_graded_spec,
    filt_degree_leading,
    homogeneous_components,
    leading_form_free,
)
from krw.models import CheckRecord, CheckStatus, ReplayConfig
from krw.oracle import oracle_decompose
from krw.parser import parse_polynomial
from krw.poly import GENERATORS, MAX_PARAM_INDEX, Polynomial, Symbol, T, X, Y, Z, params, var
from krw.quotient import (
    X2Y,
    EtaMode,
    QuotientRingSpec,
    Subring,
    eta_from_coefficients,
    eta_ring,
    generic_eta,
    qr_decompose_trick,
    qr_new,
    qr_subring_member,
    relation_g,
    translate,
)
from krw.sampling import PRODUCT_MAX_TERMS, PRODUCT_MAX_Y_DEGREE, ElementSampler, check_rng

logger = logging.getLogger(__name__)

MAP_NAMES = tuple(sorted(BUILTIN_MAPS))
ALL_PARAMS = params(MAX_PARAM_INDEX + 1)

# generators fixed and not fixed by each built-in map
FIXED_GENERATORS = {"phi1": (X, T), "phi2": (X, Z)}
UNFIXED_GENERATORS = {"phi1": (Y, Z), "phi2": (Y, T)}

# supports for mixed sampling, so fixed elements actually occur
SAMPLE_SUPPORTS: Tuple[Tuple[Symbol, ...], ...] = ((X,), (X, T), (X, Z), (X, Z, T), GENERATORS)

EXPECTED_U_WEIGHT = -2


@dataclass(frozen=True)
class CheckOutcome:
    passed: bool
    details: str = ""
    witness: Optional[str] = None


@dataclass(frozen=True)
class RelationSetup:
    """eta and the relation part g a replay config describes"""
    eta: Polynomial
    g: Polynomial

    @property
    def mode(self) -> EtaMode:
        return EtaMode.GENERIC if self.g.max_param_index() >= 0 else EtaMode.CONCRETE


def relation_from_config(cfg: ReplayConfig) -> RelationSetup:
    """Resolve eta, the translate c and the relation override

    Raises:
        ConfigInvalidError: an expression in the config does not parse
    """
    try:
        if cfg.eta is not None:
            eta = parse_polynomial(cfg.eta, (X,) + ALL_PARAMS)
        elif cfg.eta_coefficients is not None:
            eta = eta_from_coefficients([Fraction(c) for c in cfg.eta_coefficients])
        else:
            degree = cfg.eta_generic_degree if cfg.eta_generic_degree is not None else cfg.max_param_degree
            eta = generic_eta(degree)
        if cfg.c is not None:
            eta = translate(eta, parse_polynomial(cfg.c, ALL_PARAMS))
        if cfg.relation_g is not None:
            g = parse_polynomial(cfg.relation_g, GENERATORS + ALL_PARAMS)
        else:
            g = relation_g(eta)
    except KrwError as e:
        raise ConfigInvalidError(f"invalid replay config: {e.message}") from None
    return RelationSetup(eta=eta, g=g)


class ReplayContext:
    """Rings, filtrations and maps shared by the check groups of one run"""

    def __init__(self, config: ReplayConfig, setup: RelationSetup, ring: QuotientRingSpec,
                 filtration: FiltrationSpec):
        self.config = config
        self.setup = setup
        self.ring = ring
        self.filtration = filtration
        self.maps: Dict[str, ExpMap] = {name: expmap_builtin(name, ring) for name in MAP_NAMES}

    @property
    def constant_ring(self) -> QuotientRingSpec:
        return self.filtration.graded_ring

    def second_filtration(self) -> FiltrationSpec:
        return assoc_graded_spec(self.constant_ring, OMEGA2, self.filtration.iteration_cap)

    def sample_size(self, cap: int) -> int:
        return min(cap, self.config.sample_count)

    def sampler(self, check_name: str, ring: Optional[QuotientRingSpec] = None, **limits: int) -> ElementSampler:
        return ElementSampler(ring or self.ring, check_rng(self.config.rng_seed, check_name),
                              self.config.max_sample_degree, self.config.coefficient_bound, **limits)


CheckFn = Callable[[Any], CheckOutcome]


def run_check(name: str, fn: CheckFn, subject: Any) -> CheckRecord:
    """Run one check; library errors become fail records"""
    try:
        outcome = fn(subject)
    except KrwError as e:
        logger.debug(f"Check {name} raised {type(e).__name__}: {e.message}")
        witness = getattr(e, "witness", None)
        return CheckRecord(name=name, status=CheckStatus.FAIL, details=e.message,
                           witness=witness if isinstance(witness, str) else None)
    status = CheckStatus.PASS if outcome.passed else CheckStatus.FAIL
    if not outcome.passed:
        logger.debug(f"Check {name} failed, witness {outcome.witness}")
    return CheckRecord(name=name, status=status, details=outcome.details, witness=outcome.witness)


# --- R1: primality ------------------------------------------------------------

def _primality_f_eta(setup: RelationSetup) -> CheckOutcome:
    qr_new(setup.g, setup.mode)
    return CheckOutcome(True, f"x^2*y + g is prime: g(0, z, t) = {setup.g.substitute({X: 0})} is nonzero")


def _primality_f_c(setup: RelationSetup) -> CheckOutcome:
    # validated or not, the omega1 leading relation must pass the same gate
    unvalidated = QuotientRingSpec(g=setup.g, mode=setup.mode, label="R")
    filt = assoc_graded_spec(unvalidated, OMEGA1)
    return CheckOutcome(True, f"omega1 leading relation {filt.lead_relation} is prime")


PRIMALITY_CHECKS: List[Tuple[str, CheckFn]] = [
    ("R1.primality.f_c", _primality_f_c),
    ("R1.primality.f_eta", _primality_f_eta),
]


def check_primality(cfg: ReplayConfig) -> Tuple[List[CheckRecord], Optional[ReplayContext]]:
    """Run R1; the context is None when a relation is not prime

    Raises:
        ConfigInvalidError: the config's expressions do not parse
    """
    setup = relation_from_config(cfg)
    records = [run_check(name, fn, setup) for name, fn in PRIMALITY_CHECKS]
    logger.info(f"R1: {sum(r.status == CheckStatus.PASS for r in records)}/{len(records)} pass")
    if any(r.status != CheckStatus.PASS for r in records):
        return records, None
    ring = qr_new(setup.g, setup.mode, label="R")
    filtration = assoc_graded_spec(ring, OMEGA1)
    return records, ReplayContext(cfg, setup, ring, filtration)


# --- R2, R3: exponential-map axioms ----------------------------------------

def _well_defined(ctx: ReplayContext, map_name: str, generic: bool) -> CheckOutcome:
    if generic:
        degree = ctx.config.max_param_degree
        m = expmap_builtin(map_name, eta_ring(generic_eta(degree)))
        where = f"generic eta of degree {degree}"
    else:
        m = ctx.maps[map_name]
        where = f"ring {ctx.ring}"
    result = expmap_check_well_defined(m)
    if result.holds:
        return CheckOutcome(True, f"relation maps to 0 in R[U] over {where}")
    return CheckOutcome(False, f"relation does not map to 0 over {where}", str(result.residue))


def _iterative(ctx: ReplayContext, map_name: str) -> CheckOutcome:
    result = expmap_check_iterative(ctx.maps[map_name])
    if result.holds:
        return CheckOutcome(True, "phi_V(phi_U(g)) = phi_(U+V)(g) for g in x, y, z, t")
    return CheckOutcome(False, f"iterativity fails on {result.generator}", str(result.residue))


# --- R4: generator fixed-ring facts -------------------------------------------

def _generator_fixed(ctx: ReplayContext, map_name: str, sym: Symbol, expect_fixed: bool) -> CheckOutcome:
    result = expmap_is_fixed(ctx.maps[map_name], ctx.ring.gen(sym))
    witness = None if result.fixed else f"D_{result.index}({sym}) = {result.witness}"
    verdict = "fixed" if result.fixed else "not fixed"
    return CheckOutcome(result.fixed == expect_fixed, f"{sym} is {verdict} by {map_name}", witness)


def _monomial_closure(ctx: ReplayContext, map_name: str) -> CheckOutcome:
    name = f"R4.monomial_closure.{map_name}"
    rng = check_rng(ctx.config.rng_seed, name)
    a, b = FIXED_GENERATORS[map_name]
    n = ctx.sample_size(100)
    for _ in range(n):
        mono = Polynomial.monomial({a: rng.randint(0, ctx.config.max_sample_degree),
                                    b: rng.randint(0, ctx.config.max_sample_degree)})
        p = ctx.ring.element(mono)
        if not expmap_is_fixed(ctx.maps[map_name], p).fixed:
            return CheckOutcome(False, f"monomial in {a}, {b} not fixed by {map_name}", str(p))
    return CheckOutcome(True, f"{n} monomials in {a}, {b} fixed by {map_name}")


# --- R5: element-level AK bound -----------------------------------------------

def _ak_bound_random(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R5.ak_bound.random")
    n = ctx.config.sample_count
    both = 0
    for _ in range(n):
        p = sampler.element(sampler.rng.choice(SAMPLE_SUPPORTS))
        if all(expmap_is_fixed(m, p).fixed for m in ctx.maps.values()):
            both += 1
            if not qr_subring_member(p, Subring.K_X):
                return CheckOutcome(False, "element fixed by phi1 and phi2 lies outside k[x]", str(p))
    return CheckOutcome(True, f"{n} samples, {both} fixed by phi1 and phi2, all in k[x] (AK subset of k[x])")


def _ak_bound_directed(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R5.ak_bound.directed_kx")
    n = ctx.sample_size(100)
    for _ in range(n):
        p = sampler.element((X,))
        for name, m in ctx.maps.items():
            if not expmap_is_fixed(m, p).fixed:
                return CheckOutcome(False, f"element of k[x] not fixed by {name}", str(p))
    return CheckOutcome(True, f"{n} samples from k[x] fixed by phi1 and phi2")


def _theorem_bound(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R5.theorem_bound")
    n = ctx.config.sample_count
    fixed = 0
    for _ in range(n):
        p = sampler.element(sampler.rng.choice(SAMPLE_SUPPORTS))
        for name, m in ctx.maps.items():
            if expmap_is_fixed(m, p).fixed:
                fixed += 1
                if not qr_subring_member(p, Subring.K_XZT):
                    return CheckOutcome(False, f"element fixed by {name} lies outside k[x,z,t]", str(p))
    return CheckOutcome(True, f"{fixed} fixed (sample, map) pairs out of {n} samples, all in k[x,z,t]")


# --- R6: leading forms ----------------------------------------------------------

def _f0() -> Polynomial:
    return X2Y + var(Z) ** 2 + var(T) ** 3


def _lf_omega1_check(g: Polynomial) -> Optional[str]:
    """None if LF(x^2*y + g) under omega1 is x^2*y + g(0, z, t) at grade 0, else the mismatch"""
    f = X2Y + g
    expected = X2Y + g.substitute({X: 0})
    lf = leading_form_free(f, OMEGA1)
    if lf.degree != 0 or lf.form != expected:
        return f"LF({f}) = {lf.form} at grade {lf.degree}"
    return None


def _lf_omega2_check(f_c: Polynomial) -> Optional[str]:
    lf = leading_form_free(f_c, OMEGA2)
    if lf.degree != 6 or lf.form != _f0():
        return f"LF({f_c}) = {lf.form} at grade {lf.degree}"
    return None


def _leading_form_f_eta(ctx: ReplayContext) -> CheckOutcome:
    mismatch = _lf_omega1_check(ctx.ring.g)
    if mismatch:
        return CheckOutcome(False, "omega1 leading form of f_eta is not f_c", mismatch)
    return CheckOutcome(True, f"LF(f_eta) = {ctx.constant_ring.relation} at grade 0 under omega1")


def _leading_form_f_c(ctx: ReplayContext) -> CheckOutcome:
    mismatch = _lf_omega2_check(ctx.constant_ring.relation)
    if mismatch:
        return CheckOutcome(False, "omega2 leading form of f_c is not f_0", mismatch)
    return CheckOutcome(True, f"LF(f_c) = {_f0()} at grade 6 under omega2")


def _leading_form_random_eta(ctx: ReplayContext) -> CheckOutcome:
    rng = check_rng(ctx.config.rng_seed, "R6.leading_form.random_eta")
    bound = ctx.config.coefficient_bound
    n = ctx.sample_size(20)
    for _ in range(n):
        degree = rng.randint(1, ctx.config.max_param_degree)
        eta = eta_from_coefficients([rng.randint(-bound, bound) for _ in range(degree + 1)])
        g = relation_g(eta)
        mismatch = _lf_omega1_check(g) or _lf_omega2_check(X2Y + g.substitute({X: 0}))
        if mismatch:
            return CheckOutcome(False, f"leading form identity fails for eta = {eta}", mismatch)
    return CheckOutcome(True, f"LF(f_eta) = f_c and LF(f_c) = f_0 for {n} random eta")


def _n_grading(ctx: ReplayContext) -> CheckOutcome:
    for sym in (Z, T):
        if OMEGA2.weight(sym) < 0:
            return CheckOutcome(False, f"omega2 weight of {sym} is negative", str(OMEGA2.weight(sym)))
    sampler = ctx.sampler("R6.n_grading.weights")
    n = ctx.sample_size(100)
    for _ in range(n):
        p = sampler.zt_polynomial(max_terms=4)
        low = min(homogeneous_components(p, OMEGA2))
        if low < 0:
            return CheckOutcome(False, "polynomial in z, t has a negative omega2 grade", str(p))
    return CheckOutcome(True, f"omega2 weights z: {OMEGA2.weight(Z)}, t: {OMEGA2.weight(T)}; "
                              f"{n} polynomials in z, t have nonnegative grades")


# --- R7: filtration laws ----------------------------------------------------------

def _multiplicative(ctx: ReplayContext, name: str, filt: FiltrationSpec, count: int) -> CheckOutcome:
    sampler = ctx.sampler(name, filt.ring, max_terms=PRODUCT_MAX_TERMS, max_y_degree=PRODUCT_MAX_Y_DEGREE)
    for _ in range(count):
        p, q = sampler.element(), sampler.element()
        dp, dq = filt_degree_leading(p, filt), filt_degree_leading(q, filt)
        dpq = filt_degree_leading(p * q, filt)
        if dpq.degree != dp.degree + dq.degree:
            return CheckOutcome(False, f"delta(pq) = {dpq.degree} but delta(p) + delta(q) = "
                                       f"{dp.degree + dq.degree}", f"p = {p}; q = {q}")
        if dpq.leading_form != dp.leading_form * dq.leading_form:
            return CheckOutcome(False, "Xi(pq) != Xi(p)*Xi(q)", f"p = {p}; q = {q}")
    return CheckOutcome(True, f"delta and Xi multiplicative on {count} pairs under {filt.grading.name}")


def _filtration_multiplicative(ctx: ReplayContext) -> CheckOutcome:
    return _multiplicative(ctx, "R7.filtration.multiplicative", ctx.filtration, ctx.config.sample_count)


def _filtration2_multiplicative(ctx: ReplayContext) -> CheckOutcome:
    return _multiplicative(ctx, "R7.filtration2.multiplicative", ctx.second_filtration(), ctx.sample_size(100))


def _filtration_subadditive(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R7.filtration.subadditive")
    filt = ctx.filtration
    n = ctx.config.sample_count
    for _ in range(n):
        p, q = sampler.element(), sampler.element()
        dp, dq = filt_degree_leading(p, filt).degree, filt_degree_leading(q, filt).degree
        ds = filt_degree_leading(p + q, filt).degree
        if ds > max(dp, dq) or (dp != dq and ds != max(dp, dq)):
            return CheckOutcome(False, f"delta(p+q) = {ds} with delta(p) = {dp}, delta(q) = {dq}",
                                f"p = {p}; q = {q}")
        if filt_degree_leading(p - p, filt).degree is not MINUS_INFINITY:
            return CheckOutcome(False, "delta(0) is not -inf", str(p))
    return CheckOutcome(True, f"delta(p+q) <= max(delta(p), delta(q)) on {n} pairs, equality when degrees differ")


def _degree_bookkeeping(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R7.degree_bookkeeping")
    rng = sampler.rng
    x, y = var(X), var(Y)
    n = ctx.sample_size(100)
    for _ in range(n):
        m = rng.randint(1, 4)
        u = sampler.zt_polynomial()
        v = Polynomial.zero() if rng.random() < 0.3 else sampler.zt_polynomial()
        p = ctx.ring.element((u * x + v) * y ** m)
        expected = 2 * m if v else 2 * m - 1
        got = filt_degree_leading(p, ctx.filtration).degree
        if got != expected:
            return CheckOutcome(False, f"delta((u*x + v)*y^{m}) = {got}, expected {expected}", str(p))
    return CheckOutcome(True, f"delta((u*x + v)*y^m) = 2m (v != 0) or 2m - 1 (v = 0) on {n} samples")


def _leading_shape(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R7.leading_shape")
    filt = ctx.filtration
    x, y = var(X), var(Y)
    n = ctx.config.sample_count
    for _ in range(n):
        p = sampler.element()
        dec = qr_decompose_trick(p)
        if dec.h:
            dh = filt_degree_leading(ctx.ring.element(dec.h), filt).degree
            if dh > 0:
                return CheckOutcome(False, f"delta(h) = {dh} > 0", str(dec.h))
        if dec.epsilon == 0:
            continue
        m = dec.epsilon
        u, v = dec.pairs[-1]
        result = filt_degree_leading(p, filt)
        top = v * y ** m if v else u * x * y ** m
        expected_degree = 2 * m if v else 2 * m - 1
        if result.degree != expected_degree or result.leading_form != filt.graded_ring.element(top):
            return CheckOutcome(False, f"leading form of element with epsilon = {m} is "
                                       f"{result.leading_form} at {result.degree}", str(p))
    return CheckOutcome(True, f"Xi(p) is the top y-degree part on {n} samples; delta(h) <= 0")


# --- R8: decomposition --------------------------------------------------------------

def _trick_roundtrip(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R8.trick.roundtrip")
    n = ctx.config.sample_count
    for _ in range(n):
        p = sampler.element()
        dec = qr_decompose_trick(p)
        if dec.recompose(ctx.ring).rep != p.rep:
            return CheckOutcome(False, "recomposition differs from the element", str(p))
        if dec.epsilon != max(p.rep.degree(Y), 0):
            return CheckOutcome(False, f"epsilon = {dec.epsilon} differs from the y-degree", str(p))
        if dec.epsilon and not any(dec.pairs[-1]):
            return CheckOutcome(False, "top pair (u, v) is zero", str(p))
    return CheckOutcome(True, f"decomposition recomposes exactly on {n} samples")


def _trick_oracle(ctx: ReplayContext) -> CheckOutcome:
    sampler = ctx.sampler("R8.trick.oracle_agreement")
    n = ctx.sample_size(50)
    for _ in range(n):
        p = sampler.element()
        if oracle_decompose(p) != qr_decompose_trick(p):
            return CheckOutcome(False, "linear-algebra oracle disagrees with the decomposition", str(p))
    return CheckOutcome(True, f"oracle agrees on {n} samples; every system has a unique solution")


# --- R9: induced graded maps -------------------------------------------------------

def _induced(ctx: ReplayContext, map_name: str) -> CheckOutcome:
    m = ctx.maps[map_name]
    result = expmap_induce_graded(m, ctx.filtration, strict=False)
    details = f"U weight {result.u_weight}, scale {result.scale}"
    if not result.verified:
        return CheckOutcome(False, f"{details}; {result.failure}", str(result.induced))
    if result.u_weight != EXPECTED_U_WEIGHT:
        return CheckOutcome(False, f"{details}, expected {EXPECTED_U_WEIGHT}", str(result.induced))
    if dict(result.induced.images) != dict(m.images):
        return CheckOutcome(False, f"{details}; induced images differ in shape", str(result.induced))
    return CheckOutcome(True, f"{details}; induced map verified on the graded ring")


def _compatibility(ctx: ReplayContext, map_name: str) -> CheckOutcome:
    m = ctx.maps[map_name]
    induced = expmap_induce_graded(m, ctx.filtration).induced
    sampler = ctx.sampler(f"R9.compatibility.{map_name}")
    n = ctx.sample_size(100)
    checked = 0
    for _ in range(n):
        p = sampler.element(sampler.rng.choice(SAMPLE_SUPPORTS))
        if not expmap_is_fixed(m, p).fixed:
            continue
        checked += 1
        xi = filt_degree_leading(p, ctx.filtration).leading_form
        if not expmap_is_fixed(induced, xi).fixed:
            return CheckOutcome(False, "leading form of a fixed element is not fixed by the induced map", str(p))
    return CheckOutcome(True, f"Xi(p) fixed by the induced map for {checked} fixed samples out of {n}")


# --- registry -------------------------------------------------------------------------

CHECKS: Dict[str, List[Tuple[str, CheckFn]]] = {}


def _register(group: str, name: str, fn: CheckFn) -> None:
    CHECKS.setdefault(group, []).append((name, fn))


for _map in MAP_NAMES:
    _register("R2", f"R2.well_defined.{_map}.configured", partial(_well_defined, map_name=_map, generic=False))
    _register("R2", f"R2.well_defined.{_map}.generic", partial(_well_defined, map_name=_map, generic=True))
    _register("R3", f"R3.iterative.{_map}", partial(_iterative, map_name=_map))
    for _sym in FIXED_GENERATORS[_map]:
        _register("R4", f"R4.fixed.{_map}.{_sym}", partial(_generator_fixed, map_name=_map, sym=_sym,
                                                            expect_fixed=True))
    for _sym in UNFIXED_GENERATORS[_map]:
        _register("R4", f"R4.unfixed.{_map}.{_sym}", partial(_generator_fixed, map_name=_map, sym=_sym,
                                                              expect_fixed=False))
    _register("R4", f"R4.monomial_closure.{_map}", partial(_monomial_closure, map_name=_map))
    _register("R9", f"R9.induced.{_map}", partial(_induced, map_name=_map))

_register("R5", "R5.ak_bound.random", _ak_bound_random)
_register("R5", "R5.ak_bound.directed_kx", _ak_bound_directed)
_register("R5", "R5.theorem_bound", _theorem_bound)
_register("R6", "R6.leading_form.f_eta_omega1", _leading_form_f_eta)
_register("R6", "R6.leading_form.f_c_omega2", _leading_form_f_c)
_register("R6", "R6.leading_form.random_eta", _leading_form_random_eta)
_register("R6", "R6.n_grading.weights", _n_grading)
_register("R7", "R7.filtration.multiplicative", _filtration_multiplicative)
_register("R7", "R7.filtration.subadditive", _filtration_subadditive)
_register("R7", "R7.degree_bookkeeping", _degree_bookkeeping)
_register("R7", "R7.leading_shape", _leading_shape)
_register("R7", "R7.filtration2.multiplicative", _filtration2_multiplicative)
_register("R8", "R8.trick.roundtrip", _trick_roundtrip)
_register("R8", "R8.trick.oracle_agreement", _trick_oracle)
_register("R9", "R9.compatibility.phi1", partial(_compatibility, map_name="phi1"))

GROUPS: Tuple[str, ...] = tuple(sorted(CHECKS))
GROUP_CHECK_NAMES: Dict[str, List[str]] = {
    "R1": sorted(name for name, _ in PRIMALITY_CHECKS),
    **{group: sorted(name for name, _ in checks) for group, checks in CHECKS.items()},
}


def run_group(group: str, ctx: ReplayContext) -> List[CheckRecord]:
    """Run every check of a group against the context"""
    records = [run_check(name, fn, ctx) for name, fn in CHECKS[group]]
    passed = sum(r.status == CheckStatus.PASS for r in records)
    logger.info(f"{group}: {passed}/{len(records)} pass")
    return records


def check_names(groups: Sequence[str] = ()) -> List[str]:
    selected = groups or GROUP_CHECK_NAMES
    return sorted(name for g in selected for name in GROUP_CHECK_NAMES[g])
