"""Command-line interface.

Exit status: 0 when every asserted inequality held, 1 when one failed
beyond tolerance, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import __version__
from .convexity import (
    conditional_midpoint_bounds,
    delta_lower_bound,
    refined_minkowski,
    sign_cancellation,
    trianpos_bound,
)
from .errors import DomainError, InputError, LpStabError
from .fixtures import run_fixtures
from .holder import (
    INEQ_SLACK,
    drago_bounds,
    holder_general,
    holder_modified,
    holder_report,
    pecaric_bounds,
    young_bounds,
)
from .interpolation import containment_bounds, midpoint_compare, two_exponent_bounds, variance_bounds
from .measure import norm
from .modulus import estimate_modulus
from .reports import ReportDocument, emit_report, parse_input
from .sweeps import SUITES, run_suites

ENV_TOL = "LPSTAB_REL_TOL"
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
COMPLEX_OK = {"holder", "interp", "interp2", "minkowski", "cancel"}


def resolve_tolerance(flag: float | None) -> float:
    """--rel-tol wins over the environment, which wins over the default."""
    if flag is not None:
        tol = flag
    elif os.environ.get(ENV_TOL):
        try:
            tol = float(os.environ[ENV_TOL])
        except ValueError:
            raise InputError(f"{ENV_TOL}={os.environ[ENV_TOL]!r} is not a number") from None
    else:
        tol = INEQ_SLACK
    if not (math.isfinite(tol) and tol >= 0):
        raise InputError(f"relative tolerance must be finite and >= 0, got {tol!r}")
    return tol


def _load(args, command):
    src = sys.stdin if args.input in (None, "-") else args.input
    return parse_input(src, args.input_format, allow_complex=command in COMPLEX_OK)


def _pick(funcs: dict, preferred: tuple[str, ...]):
    """Functions named in ``preferred`` if all present, else the first ones in order."""
    if all(k in funcs for k in preferred):
        return [funcs[k] for k in preferred]
    if len(funcs) < len(preferred):
        raise InputError(f"need {len(preferred)} function(s), got {len(funcs)}")
    return list(funcs.values())[: len(preferred)]


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise InputError(f"--{n.replace('_', '-')} is required")


def _params(args, *names):
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


# -- subcommands -----------------------------------------------------------


def cmd_holder(args, tol):
    _need(args, "p")
    doc = _load(args, "holder")
    _, funcs = doc.build()
    f, g = _pick(funcs, ("f", "g"))
    payload, violations = {}, []
    if args.r is not None:
        _need(args, "q")
        rep = holder_general(f, g, args.p, args.q, args.r)
        op = "holder_general"
    elif args.c_lo is not None or args.c_hi is not None:
        _need(args, "c_lo", "c_hi")
        rep = holder_modified(f, g, args.p, args.c_lo, args.c_hi)
        op = "holder_modified"
    else:
        if args.q is not None and abs(1 / args.p + 1 / args.q - 1) > 1e-12:
            raise DomainError(f"--q {args.q} is not conjugate to --p {args.p}")
        rep = holder_report(f, g, args.p)
        op = "holder"
        if not (f.is_complex or g.is_complex):
            if f.support().all() and g.support().all():
                chain = drago_bounds(f, g, args.p)
                payload["log_chain"] = chain.to_dict()
                violations += [f"log chain: {v}" for v in chain.violations(tol)]
            if args.p >= 2 and f.values.min() >= 0 and g.values.min() >= 0:
                chain = pecaric_bounds(f, g, args.p)
                payload["quadratic_chain"] = chain.to_dict()
                violations += [f"quadratic chain: {v}" for v in chain.violations(tol)]
    payload["bound"] = {
        **rep.to_dict(),
        "lower_slack": rep.lower_slack,
        "upper_slack": rep.upper_slack,
    }
    violations = rep.violations(tol) + violations
    params = _params(args, "p", "q", "r", "c_lo", "c_hi")
    return ReportDocument(op, params, payload, violations, input_digest=doc.digest())


def cmd_young(args, tol):
    _need(args, "u", "v", "p")
    rep = young_bounds(args.u, args.v, args.p)
    return ReportDocument("young", _params(args, "u", "v", "p"), rep.to_dict(), rep.violations(tol))


def cmd_interp(args, tol):
    _need(args, "r", "s")
    doc = _load(args, "interp")
    _, funcs = doc.build()
    (f,) = _pick(funcs, ("f",))
    a = containment_bounds(f, args.r, args.s)
    b = variance_bounds(f, args.r, args.s)
    viol = [f"containment: {v}" for v in a.violations(tol)]
    viol += [f"variance: {v}" for v in b.violations(tol)]
    payload = {"containment": a.to_dict(), "variance": b.to_dict()}
    return ReportDocument("interp", _params(args, "r", "s"), payload, viol, input_digest=doc.digest())


def cmd_interp2(args, tol):
    _need(args, "p0", "p1")
    doc = _load(args, "interp2")
    _, funcs = doc.build()
    payload, viol = {}, []
    fs = list(funcs.items())
    if args.p is not None:
        name, f = fs[0]
        rep = two_exponent_bounds(f, args.p0, args.p, args.p1)
        payload["bound"] = rep.to_dict()
        viol += rep.violations(tol)
    if len(fs) >= 2:
        f, h = _pick(funcs, ("f", "h"))
        dec = midpoint_compare(f, h, args.p0, args.p1)
        payload["midpoint"] = dec.to_dict()
        viol += dec.violations(max(tol, 1e-10))
    if not payload:
        raise InputError("give --p for the two-exponent bound, or two functions for the midpoint comparison")
    return ReportDocument(
        "interp2", _params(args, "p0", "p", "p1"), payload, viol, input_digest=doc.digest()
    )


def cmd_minkowski(args, tol):
    _need(args, "p")
    doc = _load(args, "minkowski")
    _, funcs = doc.build()
    f, h = _pick(funcs, ("f", "h"))
    a = refined_minkowski(f, h, args.p)
    b = trianpos_bound(f, h, args.p)
    viol = [f"refined: {v}" for v in a.violations(tol)]
    viol += [f"modulus deduction: {v}" for v in b.violations(tol)]
    payload = {"refined": a.to_dict(), "modulus_deduction": b.to_dict()}
    return ReportDocument("minkowski", _params(args, "p"), payload, viol, input_digest=doc.digest())


def cmd_cancel(args, tol):
    _need(args, "p", "t")
    doc = _load(args, "cancel")
    _, funcs = doc.build()
    f, h = _pick(funcs, ("f", "h"))
    rep = sign_cancellation(f, h, args.p, args.t)
    payload = {"cancellation": rep.to_dict()}
    viol = list(rep.violations(tol))
    p = args.p
    if p > 1 and all(abs(norm(u, p) - 1) <= 1e-10 for u in (f, h)):
        chk = conditional_midpoint_bounds(f, h, p, args.t)
        payload["midpoint"] = chk.to_dict()
        viol += chk.violations()
    return ReportDocument("cancel", _params(args, "p", "t"), payload, viol, input_digest=doc.digest())


def cmd_convexity(args, tol):
    _need(args, "p", "eps")
    t = 0.5 if args.t is None else args.t
    est = estimate_modulus(
        args.p,
        args.n_dims,
        args.eps,
        seed=args.seed if args.seed is not None else 0,
        restarts=args.restarts,
        t=t,
    )
    payload = est.to_dict()
    payload["lower_bound_t"] = t
    payload["lower_bound"] = delta_lower_bound(args.p, args.eps, t)
    warnings = []
    if not est.diagnostics["asymptotic_within_25pct"]:
        warnings.append("estimate is not within 25% of the small-eps leading term (diagnostic only)")
    payload["warnings"] = warnings
    params = {**_params(args, "p", "eps", "seed", "restarts", "n_dims"), "t": t}
    return ReportDocument("convexity", params, payload, est.violations(max(tol, 1e-9)))


def cmd_fixtures(args, tol):
    results = run_fixtures()
    viol = [f"fixture {r['name']} failed" for r in results if not r["passed"]]
    return ReportDocument("fixtures", {}, {"fixtures": results}, viol)


def cmd_verify(args, tol):
    _need(args, "seed")
    results = run_suites(args.seed, args.cases, tol, names=args.suite)
    payload = {"suites": {k: v.to_dict() for k, v in results.items()}}
    viol = [f"suite {k}: {v.violations} violation(s)" for k, v in results.items() if v.violations]
    params = {"seed": args.seed, "cases": args.cases, "rel_tol": tol}
    return ReportDocument("verify", params, payload, viol)


COMMANDS = {
    "holder": (cmd_holder, "refined Hölder sandwich for ||fg||_1 (or ||fg||_r with --r)"),
    "young": (cmd_young, "refined Young inequality for scalars"),
    "interp": (cmd_interp, "L^s versus L^r on a probability space"),
    "interp2": (cmd_interp2, "two-exponent interpolation bound / midpoint comparison"),
    "minkowski": (cmd_minkowski, "refined triangle inequality"),
    "cancel": (cmd_cancel, "sign-cancellation bound"),
    "convexity": (cmd_convexity, "numerical modulus of convexity of l_p^n"),
    "fixtures": (cmd_fixtures, "reproduce the worked examples"),
    "verify": (cmd_verify, "randomized property suites"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--rel-tol", type=float, default=None, help=f"overrides ${ENV_TOL}")
    common.add_argument("--input", help="input document (JSON or CSV); '-' or omitted reads stdin")
    common.add_argument("--input-format", choices=("json", "csv"), default=None)
    for name in ("p", "q", "r", "s", "p0", "p1", "t", "eps", "u", "v", "c_lo", "c_hi"):
        common.add_argument("--" + name.replace("_", "-"), dest=name, type=float, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--cases", type=int, default=1000)
    common.add_argument("--restarts", type=int, default=32)
    common.add_argument("--n-dims", type=int, default=2)
    common.add_argument("--suite", action="append", choices=list(SUITES), default=None)

    parser = argparse.ArgumentParser(prog="lpstab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def run_command(name: str, args: argparse.Namespace) -> ReportDocument:
    tol = resolve_tolerance(args.rel_tol)
    return COMMANDS[name][0](args, tol)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run_command(args.command, args)
    except (LpStabError, ValueError) as exc:
        print(f"lpstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK if report.ok else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
