"""Command-line front end: one subcommand per pipeline stage, one JSON
document on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 a check ran but failed, 2 usage error, 3 numeric
failure.  Reruns of the same configuration reproduce the output byte for
byte (fixed grids, fixed summation orders).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, beta, conditions, transform, verify
from .errors import (
    BetastarError,
    NotCovered,
    ParamOutOfRange,
    PreconditionViolated,
    UnknownOperator,
)
from .params import ParameterSet
from .series import PowerSeries
from .weights import Weight, make_weight

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_WEIGHT_PARAMS = {
    "uniform": (),
    "bernardi": ("c",),
    "komatu": ("k", "p"),
    "hohlov": ("a", "b", "c"),
    "carlson_shaffer": ("b", "c"),
    "two_param": ("a", "b"),
    "ali_singh": ("k",),
}

_THEOREMS = ("T3_3", "T4_1", "T4_2", "OP", "N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betastar",
        description="Sharp starlikeness bounds for weighted integral transforms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(sp):
        sp.add_argument("--weight", required=True, choices=sorted(_WEIGHT_PARAMS))
        for flag in ("--a", "--b", "--c", "--k", "--p"):
            sp.add_argument(flag, type=float, default=None)
        sp.add_argument("--alpha", type=float, required=True)
        sp.add_argument("--gamma", type=float, required=True)
        sp.add_argument("--delta", type=float, required=True)
        sp.add_argument("--zeta", type=float, required=True)
        sp.add_argument("--tol", type=float, default=1e-10)
        sp.add_argument("--output", default=None, help="write the JSON document here instead of stdout")

    sp = sub.add_parser("beta", help="compute the sharp bound")
    add_common(sp)
    sp.add_argument("--method", choices=("quadrature", "series", "5f4"), default="quadrature")
    sp.add_argument("--series-terms", type=int, default=100_000)

    sp = sub.add_parser("check", help="run one admissibility/sufficiency check")
    add_common(sp)
    sp.add_argument("--theorem", required=True, choices=_THEOREMS)
    sp.add_argument("--grid-size", type=int, default=2001)
    sp.add_argument("--grid-radii", type=int, default=24)
    sp.add_argument("--grid-angles", type=int, default=64)

    sp = sub.add_parser("transform", help="apply the transform to a series")
    add_common(sp)
    sp.add_argument("--beta", type=float, default=None, help="member parameter; default: the sharp bound")
    sp.add_argument("--x", default="1", help="boundary datum x, |x| = 1 (complex literal)")
    sp.add_argument("--y", default="-1", help="boundary datum y, |y| = 1 (complex literal)")
    sp.add_argument("--order", type=int, default=64)
    sp.add_argument("--input", default=None, help="JSON [[re, im], ...] series of (f/z)^delta")

    sp = sub.add_parser("verify", help="starlikeness margin of the transformed extremal member")
    add_common(sp)
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--order", type=int, default=512)
    sp.add_argument("--grid-radii", type=int, default=24)
    sp.add_argument("--grid-angles", type=int, default=128)
    sp.add_argument("--max-radius", type=float, default=0.99)
    sp.add_argument("--csv", default=None, help="dump grid samples (z_re, z_im, margin) as CSV")

    sp = sub.add_parser("report", help="full pipeline for one (weight, params) pair")
    add_common(sp)
    sp.add_argument("--order", type=int, default=512)
    sp.add_argument("--grid-size", type=int, default=2001)
    sp.add_argument("--grid-radii", type=int, default=24)
    sp.add_argument("--grid-angles", type=int, default=128)
    return parser


def _build_weight(args) -> Weight:
    names = _WEIGHT_PARAMS[args.weight]
    params = {}
    for name in names:
        val = getattr(args, name)
        if val is None:
            raise ParamOutOfRange(f"weight {args.weight!r} needs --{name}")
        params[name] = val
    return make_weight(args.weight, **params)


def _build_params(args) -> ParameterSet:
    return ParameterSet.create(args.alpha, args.gamma, args.delta, args.zeta)


def _inputs_doc(args, w: Weight, p: ParameterSet) -> dict:
    return {
        "subcommand": args.subcommand,
        "weight": {"kind": w.kind, "params": w.params},
        "params": p.as_dict(),
        "tol": args.tol,
    }


def _sharp_beta(args, w: Weight, p: ParameterSet) -> float:
    if getattr(args, "beta", None) is not None:
        return args.beta
    return beta.solve_beta(w, p, args.tol).beta


def _series_to_json(s: PowerSeries) -> list:
    return [[c.real, c.imag] for c in s.coeffs]


def _series_from_json(doc) -> PowerSeries:
    return PowerSeries(np.array([complex(re, im) for re, im in doc]))


def _cmd_beta(args, w: Weight, p: ParameterSet):
    if args.method == "quadrature":
        res = beta.solve_beta(w, p, args.tol)
    elif args.method == "series":
        res = beta.solve_beta_series(w, p, args.series_terms)
    else:
        if w.kind != "carlson_shaffer":
            raise ParamOutOfRange("--method 5f4 applies to the carlson_shaffer weight only")
        res = beta.solve_beta_5F4(w.params["b"], w.params["c"], p)
    return {"beta": res.as_dict()}, True


def _cmd_check(args, w: Weight, p: ParameterSet):
    if args.theorem == "T3_3":
        rep = conditions.check_monotone_T33(w, p, args.grid_size)
    elif args.theorem in ("T4_1", "T4_2"):
        rep = conditions.check_differential_bound(w, p, args.grid_size)
        want = "T4_1_gamma_pos" if args.theorem == "T4_1" else "T4_2_gamma_zero"
        if rep.theorem_id != want:
            raise PreconditionViolated(
                f"--theorem {args.theorem} does not match gamma = {p.gamma}"
            )
    elif args.theorem == "OP":
        rep = conditions.check_operator_bounds(w.kind, w.params, p)
    else:
        rep = conditions.minimize_N(
            w,
            p,
            radial_grid=conditions.default_radial_grid(args.grid_radii),
            angular_grid=args.grid_angles,
        )
    return {"check": rep.as_dict()}, rep.passed


def _cmd_transform(args, w: Weight, p: ParameterSet):
    b = _sharp_beta(args, w, p)
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            member = _series_from_json(json.load(fh))
    else:
        spec = transform.TestFunctionSpec(complex(args.x), complex(args.y), b, p)
        member = transform.make_member(spec, args.order)
    out = transform.apply_transform(member, w)
    g = transform.G_series(out)
    results = {
        "beta": b,
        "member": _series_to_json(member),
        "transformed": _series_to_json(out),
        "G": _series_to_json(g),
    }
    return results, True


def _cmd_verify(args, w: Weight, p: ParameterSet):
    b = _sharp_beta(args, w, p)
    spec = transform.extremal_spec(p, b)
    g = transform.G_series(transform.apply_transform(transform.make_member(spec, args.order), w))
    radii = verify.default_radii(args.grid_radii, args.max_radius)
    rep = verify.starlike_margin(
        g,
        p.xi,
        radii=radii,
        angles=args.grid_angles,
        tolerance=verify.BOUNDARY_TOL,
        with_samples=args.csv is not None,
    )
    if args.csv is not None:
        samples = rep.diagnostics.pop("samples")
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("z_re,z_im,margin\n")
            for re, im, m in samples:
                fh.write(f"{re!r},{im!r},{m!r}\n")
    return {"beta": b, "starlike": rep.as_dict()}, rep.passed


def _cmd_report(args, w: Weight, p: ParameterSet):
    results: dict = {}
    stage_ok: list[bool] = []

    def stage(name, fn, gates=True):
        try:
            value = fn()
        except (PreconditionViolated, NotCovered, UnknownOperator) as exc:
            results[name] = {"status": "not_applicable", "reason": str(exc)}
            return None
        except BetastarError as exc:
            results[name] = {"status": "failed", "error": str(exc)}
            if gates:
                stage_ok.append(False)
            return None
        results[name] = value
        return value

    res = stage("beta", lambda: beta.solve_beta(w, p, args.tol).as_dict())
    sharp = res["beta"] if res else None
    if not p.is_gamma_zero:
        stage("beta_series", lambda: beta.solve_beta_series(w, p).as_dict(), gates=False)

    def run_check(name, fn):
        rep = stage(name, lambda: fn().as_dict())
        if rep is not None:
            stage_ok.append(rep["passed"])

    run_check("differential_bound", lambda: conditions.check_differential_bound(w, p))
    run_check("operator_bounds", lambda: conditions.check_operator_bounds(w.kind, w.params, p))
    run_check("monotone", lambda: conditions.check_monotone_T33(w, p, args.grid_size))

    if sharp is not None:
        spec = transform.extremal_spec(p, sharp)
        g = transform.G_series(
            transform.apply_transform(transform.make_member(spec, args.order), w)
        )
        radii = verify.default_radii(args.grid_radii)

        def starlike():
            return verify.starlike_margin(
                g, p.xi, radii=radii, angles=args.grid_angles, tolerance=verify.BOUNDARY_TOL
            ).as_dict()

        def sharpness():
            return verify.sharpness_probe(g, p.xi).as_dict()

        run_check("starlike", starlike)
        run_check("sharpness", sharpness)
    else:
        stage_ok.append(False)

    certified = bool(stage_ok) and all(stage_ok)
    return results, certified


_HANDLERS = {
    "beta": _cmd_beta,
    "check": _cmd_check,
    "transform": _cmd_transform,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        w = _build_weight(args)
        p = _build_params(args)
        results, certified = _HANDLERS[args.subcommand](args, w, p)
    except (ParamOutOfRange, UnknownOperator, PreconditionViolated, NotCovered, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BetastarError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    doc = {
        "version": __version__,
        "inputs": _inputs_doc(args, w, p),
        "results": results,
        "certified": bool(certified),
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if certified else EXIT_CHECK_FAILED


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
