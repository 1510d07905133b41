"""Command-line interface: invariant computation, variety reports, verification.

All subcommands read JSON from stdin (where input is needed) and write a
single JSON document to stdout; diagnostics go to stderr.  Exit codes:
0 success, 1 verification failure, 2 usage or schema error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._backend import backend_name
from .errors import DomainError, LeviDegenerate, SchemaError
from .harness import ALL_SUITES, SUITE_ALIASES, SUITES, SuiteConfig, run_suites
from .invariants import (
    angle_identity_residuals,
    cartan_quad,
    modulus_identity_residuals,
    triple_cross_ratios,
)
from .involution import involution_similarities, verify_involution_similarities
from .jsonio import (
    complex_to_json,
    dumps_canonical,
    json_to_quadruple,
    json_to_variety_point,
    point_to_json,
    quadruple_to_json,
    variety_point_to_json,
)
from .reconstruct import normal_form, quadruple_to_variety, variety_to_quadruple
from .variety import (
    VarietyPoint,
    classify,
    involution_T,
    is_on_variety,
    jacobian_real_rank,
    levi,
    levi_l2_closed,
    minors,
    residuals,
    set_residuals,
    symmetric_condition_residual,
)
from . import rng as sampling
from .charts import verify_psc


def _read_stdin_json():
    data = sys.stdin.read()
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"stdin is not valid JSON: {exc}") from exc


def _emit(obj) -> None:
    sys.stdout.write(dumps_canonical(obj) + "\n")


def _flags_json(flags) -> dict:
    return {
        "in_XR": flags.in_xr,
        "in_XCR": flags.in_xcr,
        "in_XCR_star": flags.in_xcr_star,
        "in_XC": flags.in_xc,
        "in_XC1": flags.in_xc1,
        "in_XC2": flags.in_xc2,
    }


def cmd_invariants(args) -> int:
    q = json_to_quadruple(_read_stdin_json())
    x = triple_cross_ratios(q)
    a = cartan_quad(q)
    v = VarietyPoint.from_cross_ratios(x)
    f1, f2 = residuals(v)
    angle = angle_identity_residuals(x, a)
    modulus = modulus_identity_residuals(x, a)
    out = {
        "X1": complex_to_json(x.x1),
        "X2": complex_to_json(x.x2),
        "X3": complex_to_json(x.x3),
        "A1": a.a1,
        "A2": a.a2,
        "A3": a.a3,
        "A4": a.a4,
        "residuals": {
            "F1": f1,
            "F2": f2,
            "angle_identities": list(angle),
            "modulus_identities": list(modulus),
        },
        "flags": _flags_json(classify(v, tol=args.tol if args.tol > 1e-8 else 1e-8)),
    }
    _emit(out)
    return 0


def _variety_report(v: VarietyPoint, tol: float) -> dict:
    f1, f2 = residuals(v)
    on = is_on_variety(v)
    out = {
        "residuals": {"F1": f1, "F2": f2},
        "on_variety": on,
        "set_residuals": set_residuals(v),
    }
    if on:
        flags = classify(v)
        g = minors(v)
        out["flags"] = _flags_json(flags)
        out["rank"] = jacobian_real_rank(v)
        out["minors"] = {
            "D23": complex_to_json(g.d23),
            "D31": complex_to_json(g.d31),
            "D12": complex_to_json(g.d12),
        }
        out["symmetric_condition"] = symmetric_condition_residual(v)
        try:
            l1, l2 = levi(v)
            out["levi"] = {"L1": l1, "L2": l2, "L2_closed": levi_l2_closed(v)}
            out["levi_degenerate"] = False
        except LeviDegenerate:
            out["levi"] = None
            out["levi_degenerate"] = True
    return out


def cmd_check(args) -> int:
    v = json_to_variety_point(_read_stdin_json())
    report = _variety_report(v, args.tol)
    _emit(report)
    if args.strict and not report["on_variety"]:
        return 1
    return 0


def cmd_classify(args) -> int:
    v = json_to_variety_point(_read_stdin_json())
    if not is_on_variety(v):
        f1, f2 = residuals(v)
        sys.stderr.write(f"point is off the variety (F1={f1:.3e}, F2={f2:.3e})\n")
        return 1
    flags = classify(v)
    _emit({"flags": _flags_json(flags), "set_residuals": flags.residuals})
    return 0


def cmd_reconstruct(args) -> int:
    v = json_to_variety_point(_read_stdin_json())
    q = variety_to_quadruple(v)
    w = quadruple_to_variety(q)
    residual = max(
        abs(w.zeta1 - v.zeta1), abs(w.zeta2 - v.zeta2), abs(w.zeta3 - v.zeta3)
    )
    _emit({"quadruple": quadruple_to_json(q), "roundtrip_residual": residual})
    return 0


def cmd_normal_form(args) -> int:
    v = json_to_variety_point(_read_stdin_json())
    nf = normal_form(v)
    x = triple_cross_ratios(nf.points)
    residual = max(
        abs(x.x1 - v.zeta1), abs(x.x2 - v.zeta2), abs(x.x3 - v.zeta3)
    )
    _emit(
        {
            "points": [point_to_json(p) for p in nf.points],
            "eta": nf.eta,
            "cartans": {
                "A1": nf.cartans.a1,
                "A2": nf.cartans.a2,
                "A3": nf.cartans.a3,
                "A4": nf.cartans.a4,
            },
            "x3_modulus": nf.x3_modulus,
            "roundtrip_residual": residual,
        }
    )
    return 0


def cmd_involute(args) -> int:
    v = json_to_variety_point(_read_stdin_json())
    w = involution_T(v)
    g1, g4 = involution_similarities(v)
    report = verify_involution_similarities(v, tol=args.tol)
    _emit(
        {
            "T": variety_point_to_json(w),
            "g1": {"scale": g1.scale, "angle": g1.angle},
            "g4": {"scale": g4.scale, "angle": g4.angle},
            "report": {
                "point_match_p1_to_p4": report.point_match_p1_to_p4,
                "point_match_p4_to_p1": report.point_match_p4_to_p1,
                "composition_scale_residual": report.composition_scale_residual,
                "composition_angle_residual": report.composition_angle_residual,
                "dilation_scale_residual": report.dilation_scale_residual,
                "dilation_angle_residual": report.dilation_angle_residual,
                "cartan_swap_residual": report.cartan_swap_residual,
                "passed": report.passed,
            },
        }
    )
    return 0


def cmd_verify_psc(args) -> int:
    gen = sampling.suite_generator(args.seed, "psc")
    rows = []
    max_det = 0.0
    failures = 0
    for _ in range(args.samples):
        v = sampling.random_xstar_point(gen, min_im=2e-2, conditioned=True)
        rep = verify_psc(v, h=args.hstep)
        ok = rep.det_magnitude <= args.hstep and (rep.ill_conditioned or rep.rank == 1)
        if not ok:
            failures += 1
        max_det = max(max_det, rep.det_magnitude)
        rows.append(
            {
                "zeta": variety_point_to_json(v)["zeta"],
                "det": rep.det_magnitude,
                "rank": rep.rank,
                "generator_norm": rep.generator_norm,
                "ill_conditioned": rep.ill_conditioned,
                "ok": ok,
            }
        )
    _emit(
        {
            "samples": rows,
            "max_det": max_det,
            "hstep": args.hstep,
            "seed": args.seed,
            "failures": failures,
        }
    )
    return 0 if failures == 0 else 1


def cmd_verify(args) -> int:
    name = SUITE_ALIASES.get(args.suite, args.suite)
    if name == "all":
        names = list(ALL_SUITES)
    elif name in SUITES:
        names = [name]
    else:
        sys.stderr.write(f"unknown suite {args.suite!r}\n")
        return 2
    cfg = SuiteConfig(seed=args.seed, samples=args.samples, tol=args.tol, hstep=args.hstep)
    combined = run_suites(names, cfg)
    _emit(combined)
    return 0 if combined["failures_total"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crvariety",
        description=(
            "Invariants of boundary configurations of the complex hyperbolic "
            "plane and verification of the cross-ratio variety's structure"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"crvariety (kernels: {backend_name()})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tol", type=float, default=1e-9, help="base tolerance")
        p.add_argument("--seed", type=int, default=0, help="RNG seed")
        p.add_argument("--samples", type=int, default=1000, help="sample count")
        p.add_argument("--hstep", type=float, default=1e-5, help="finite-difference step")
        p.add_argument("--strict", action="store_true", help="fail on off-variety input")

    for name, fn in (
        ("invariants", cmd_invariants),
        ("check", cmd_check),
        ("classify", cmd_classify),
        ("reconstruct", cmd_reconstruct),
        ("normal-form", cmd_normal_form),
        ("involute", cmd_involute),
        ("verify-psc", cmd_verify_psc),
        ("verify", cmd_verify),
    ):
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(fn=fn)
        if name == "verify":
            p.add_argument(
                "--suite",
                default="all",
                help="all or one of: " + ", ".join(ALL_SUITES),
            )

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
