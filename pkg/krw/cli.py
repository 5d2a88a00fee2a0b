"""Command-line front end for krw

Usage:
  python3 -m krw verify [--eta EXPR | --eta-generic N] [--c C] [--seed S] [--samples N] [--json]
  python3 -m krw nf EXPR [--eta EXPR | --eta-generic N] [--c C]
  python3 -m krw decompose EXPR ...
  python3 -m krw lf EXPR --grading omega1|omega2 [--ring eta|constant] [--free] ...
  python3 -m krw degree EXPR --grading omega1|omega2 ...
  python3 -m krw exp apply --map phi1|phi2|FILE EXPR ...
  python3 -m krw exp check --map phi1|phi2|FILE ...
  python3 -m krw exp fixed --map ... EXPR ...
  python3 -m krw exp induce --map ... --grading ... ...

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 1 failed
computation or verification, 2 usage or input error. KRW_ITER_CAP overrides
the filtration iteration cap.
"""

import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from krw.checks import ALL_PARAMS
from krw.errors import ConfigInvalidError, KrwError
from krw.expmap import (
    expmap_apply,
    expmap_check_iterative,
    expmap_check_well_defined,
    expmap_induce_graded,
    expmap_is_fixed,
)
from krw.grading import MINUS_INFINITY, assoc_graded_spec, filt_degree_leading, get_grading, leading_form_free
from krw.map_files import resolve_map
from krw.models import (
    DecompositionOutput,
    ExpressionOutput,
    FixedOutput,
    InducedOutput,
    LeadingFormOutput,
    MapCheckOutput,
    ReplayConfig,
)
from krw.parser import parse_polynomial
from krw.poly import GENERATORS, X
from krw.quotient import (
    QuotientElement,
    QuotientRingSpec,
    constant_term_ring,
    eta_ring,
    generic_eta,
    qr_decompose_trick,
    translate,
)
from krw.replay_graph import replay_all_async
from krw.settings import KrwSettings, get_settings

logger = logging.getLogger(__name__)

DEFAULT_ETA_GENERIC = 3


def _add_ring_options(parser: argparse.ArgumentParser, with_default: bool = True) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--eta", help="eta(x) as an expression in x and c_i")
    default = f" (default {DEFAULT_ETA_GENERIC})" if with_default else ""
    group.add_argument("--eta-generic", type=int, metavar="N", help=f"generic eta of degree N{default}")
    parser.add_argument("--c", help="replace the constant coefficient of eta (rational or c_i)")
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")


def _add_grading_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grading", required=True, help="omega1 or omega2")
    parser.add_argument("--ring", choices=("eta", "constant"), default="eta",
                        help="filter R_eta (default) or the constant-term ring S_c")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krw", description="Exact computations in translates of the "
                                                             "Koras-Russell threefold")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="replay every check and print the report")
    _add_ring_options(verify, with_default=False)
    verify.add_argument("--seed", type=int, help="random seed")
    verify.add_argument("--samples", type=int, help="samples per property check")
    verify.add_argument("--config", help="replay config YAML (default from KRW_REPLAY_CONFIG_PATH)")

    nf = sub.add_parser("nf", help="canonical normal form")
    nf.add_argument("expr")
    _add_ring_options(nf)

    decompose = sub.add_parser("decompose", help="split an element by y-degree")
    decompose.add_argument("expr")
    _add_ring_options(decompose)

    lf = sub.add_parser("lf", help="filtration leading form")
    lf.add_argument("expr")
    lf.add_argument("--free", action="store_true", help="leading form of the polynomial itself, no quotient")
    _add_grading_option(lf)
    _add_ring_options(lf)

    degree = sub.add_parser("degree", help="filtration degree")
    degree.add_argument("expr")
    _add_grading_option(degree)
    _add_ring_options(degree)

    exp = sub.add_parser("exp", help="exponential maps")
    exp_sub = exp.add_subparsers(dest="exp_command", required=True)
    for name, help_text, takes_expr in (
        ("apply", "apply a map", True),
        ("check", "check well-definedness and iterativity", False),
        ("fixed", "test whether an element is fixed", True),
        ("induce", "induced map on the associated graded ring", False),
    ):
        p = exp_sub.add_parser(name, help=help_text)
        p.add_argument("--map", required=True, help="phi1, phi2, a map file, or a file name in the maps dir")
        if takes_expr:
            p.add_argument("expr")
        if name == "induce":
            p.add_argument("--grading", required=True, help="omega1 or omega2")
        _add_ring_options(p)
    return parser


def _ring(args: argparse.Namespace, which: str = "eta") -> QuotientRingSpec:
    if args.eta is not None:
        eta = parse_polynomial(args.eta, (X,) + ALL_PARAMS)
    else:
        eta = generic_eta(args.eta_generic if args.eta_generic is not None else DEFAULT_ETA_GENERIC)
    if args.c is not None:
        eta = translate(eta, parse_polynomial(args.c, ALL_PARAMS))
    return constant_term_ring(eta) if which == "constant" else eta_ring(eta)


def _element(args: argparse.Namespace, ring: QuotientRingSpec) -> QuotientElement:
    return ring.element(parse_polynomial(args.expr, ring.symbols()))


def _emit(args: argparse.Namespace, model: BaseModel, text: str) -> None:
    print(model.model_dump_json(indent=2) if args.json else text)


def _cmd_verify(args: argparse.Namespace, settings: KrwSettings) -> int:
    overrides = {
        "eta": args.eta,
        "eta_generic_degree": args.eta_generic,
        "c": args.c,
        "rng_seed": args.seed,
        "sample_count": args.samples,
    }
    config = ReplayConfig.load(args.config or settings.replay_config_path, overrides)
    report = asyncio.run(replay_all_async(config))
    if args.json:
        print(report.to_json())
    else:
        for check in report.checks:
            print(f"{check.status.value.upper():8}{check.name}: {check.details}")
            if check.witness is not None:
                print(f"{'':8}witness: {check.witness}")
        s = report.summary
        print(f"\n{s.passed} pass, {s.fail} fail, {s.skipped} skipped")
    return 0 if report.ok else 1


def _cmd_nf(args: argparse.Namespace, settings: KrwSettings) -> int:
    ring = _ring(args)
    element = _element(args, ring)
    _emit(args, ExpressionOutput(input=args.expr, ring=str(ring), result=str(element)), str(element))
    return 0


def _cmd_decompose(args: argparse.Namespace, settings: KrwSettings) -> int:
    ring = _ring(args)
    dec = qr_decompose_trick(_element(args, ring))
    lines = [f"epsilon = {dec.epsilon}", f"h = {dec.h}"]
    for j, (u, v) in enumerate(dec.pairs, start=1):
        lines += [f"u_{j} = {u}", f"v_{j} = {v}"]
    model = DecompositionOutput(epsilon=dec.epsilon, h=str(dec.h),
                                pairs=[{"u": str(u), "v": str(v)} for u, v in dec.pairs])
    _emit(args, model, "\n".join(lines))
    return 0


def _degree_value(degree) -> Optional[int]:
    return None if degree is MINUS_INFINITY else degree


def _cmd_lf(args: argparse.Namespace, settings: KrwSettings) -> int:
    grading = get_grading(args.grading)
    ring = _ring(args, args.ring)
    if args.free:
        result = leading_form_free(parse_polynomial(args.expr, ring.symbols()), grading)
        model = LeadingFormOutput(grading=grading.name, degree=_degree_value(result.degree), form=str(result.form))
        _emit(args, model, f"{result.form}  (grade {result.degree})")
        return 0
    filt = assoc_graded_spec(ring, grading, settings.iter_cap)
    result = filt_degree_leading(_element(args, ring), filt)
    model = LeadingFormOutput(grading=grading.name, degree=_degree_value(result.degree),
                              form=str(result.leading_form), graded_ring=str(filt.graded_ring))
    _emit(args, model, f"{result.leading_form}  (delta = {result.degree})")
    return 0


def _cmd_degree(args: argparse.Namespace, settings: KrwSettings) -> int:
    grading = get_grading(args.grading)
    ring = _ring(args, args.ring)
    filt = assoc_graded_spec(ring, grading, settings.iter_cap)
    result = filt_degree_leading(_element(args, ring), filt)
    model = LeadingFormOutput(grading=grading.name, degree=_degree_value(result.degree),
                              form=str(result.leading_form), graded_ring=str(filt.graded_ring))
    _emit(args, model, str(result.degree))
    return 0


def _cmd_exp(args: argparse.Namespace, settings: KrwSettings) -> int:
    ring = _ring(args)
    m = resolve_map(args.map, ring, settings.maps_dir)
    if args.exp_command == "apply":
        image = expmap_apply(m, _element(args, ring))
        _emit(args, ExpressionOutput(input=args.expr, ring=str(ring), result=str(image)), str(image))
        return 0
    if args.exp_command == "check":
        wd = expmap_check_well_defined(m)
        model = MapCheckOutput(map=m.name, well_defined=wd.holds, residue=str(wd.residue))
        lines = [f"well-defined: {'yes' if wd.holds else 'no'} (residue {wd.residue})"]
        if wd.holds:
            it = expmap_check_iterative(m)
            model.iterative = it.holds
            if not it.holds:
                model.iterative_generator = str(it.generator)
                model.iterative_residue = str(it.residue)
                lines.append(f"iterative: no (fails on {it.generator}, residue {it.residue})")
            else:
                lines.append("iterative: yes")
        _emit(args, model, "\n".join(lines))
        return 0 if wd.holds and model.iterative else 1
    if args.exp_command == "fixed":
        result = expmap_is_fixed(m, _element(args, ring))
        witness = None if result.fixed else str(result.witness)
        model = FixedOutput(map=m.name, fixed=result.fixed, index=result.index, witness=witness)
        text = "fixed" if result.fixed else f"not fixed: D_{result.index} = {witness}"
        _emit(args, model, text)
        return 0
    grading = get_grading(args.grading)
    filt = assoc_graded_spec(ring, grading, settings.iter_cap)
    result = expmap_induce_graded(m, filt, strict=True)
    images = {str(s): str(result.induced.images[s]) for s in GENERATORS}
    model = InducedOutput(map=m.name, grading=grading.name, u_weight=str(result.u_weight), scale=result.scale,
                          verified=result.verified, images=images)
    lines = [f"U weight: {result.u_weight}", f"scale: {result.scale}", f"verified: {result.verified}"]
    lines += [f"{s} -> {img}" for s, img in images.items()]
    _emit(args, model, "\n".join(lines))
    return 0


COMMANDS = {
    "verify": _cmd_verify,
    "nf": _cmd_nf,
    "decompose": _cmd_decompose,
    "lf": _cmd_lf,
    "degree": _cmd_degree,
    "exp": _cmd_exp,
}


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the subcommand and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        try:
            settings = get_settings()
        except ValidationError as e:
            first = e.errors()[0]
            raise ConfigInvalidError(f"invalid environment setting {first['loc'][0]}: {first['msg']}") from None
        logging.basicConfig(level=settings.log_level.upper(), stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")
        return COMMANDS[args.command](args, settings)
    except KrwError as e:
        print(f"krw: error: {e.message}", file=sys.stderr)
        return e.exit_code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
