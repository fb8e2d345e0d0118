"""Batch command line front end.

Subcommands ``verify``, ``bounds``, ``identity``, ``means`` and ``quad``
write JSON (default) or CSV to stdout.  Floats are written with 17
significant digits so they round-trip exactly.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 adaptive budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import json
import math
import random
import sys
from typing import Optional, Sequence, TextIO

from . import bounds, means, quad, sweep
from .errors import BudgetExceeded, DomainViolation, HHCertError, HypothesisFailed
from .funcs import Interval, fn_by_id

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3

SUBADDITIVITY_TRIALS = 1000

THEOREMS = ("t21", "t22", "t23", "t24", "t25", "c21", "c22", "c23", "c24", "r21", "r22")


class ConfigError(Exception):
    pass


def format_float(x: float) -> str:
    return format(x, ".17g")


def dump_json(obj, indent: int = 0, step: int = 2) -> str:
    """JSON text with floats at 17 significant digits; non-finite floats
    become ``null``."""
    pad, inner = " " * indent, " " * (indent + step)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dump_json(v, indent + step)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + dump_json(v, indent + step) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def write_csv(rows: Sequence[dict], fields: Sequence[str], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_csv_cell(row.get(f)) for f in fields])


def _envelope(args, command: str) -> dict:
    env = {"command": command}
    if not args.no_timestamp:
        env["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return env


def _emit(args, out: TextIO, payload: dict, rows: Sequence[dict], fields: Sequence[str]):
    if args.output == "csv":
        write_csv(rows, fields, out)
    else:
        out.write(dump_json(payload) + "\n")


def _fn_and_interval(args):
    if args.fn is None:
        raise ConfigError("--fn is required")
    try:
        fn = fn_by_id(args.fn)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from None
    if (args.a is None) != (args.b is None):
        raise ConfigError("give both --a and --b, or neither")
    iv = fn.test_interval if args.a is None else Interval(args.a, args.b)
    fn.check_interval(iv)
    return fn, iv


def _report_row(fn_id: str, iv: Interval, rep) -> dict:
    return sweep.SweepRecord(fn_id, iv, rep).as_row()


def cmd_verify(args, out: TextIO) -> int:
    fns = None
    if args.fn is not None:
        try:
            fns = [fn_by_id(args.fn)]
        except KeyError as exc:
            raise ConfigError(str(exc.args[0])) from None
    records = sweep.soundness_sweep(fns)
    # evaluation order is free; output order is canonical
    rng = random.Random(args.seed)
    bad = sweep.failures(rng.sample(records, len(records)))

    trials = []
    for _ in range(SUBADDITIVITY_TRIALS):
        n = rng.randint(1, 8)
        xs = [rng.uniform(0.0, 10.0) for _ in range(n)]
        ys = [rng.uniform(0.0, 10.0) for _ in range(n)]
        trials.append(bounds.power_subadditivity(xs, ys, rng.uniform(0.0, 1.0)))

    rows = [r.as_row() for r in records]
    payload = _envelope(args, "verify")
    payload.update({
        "seed": args.seed,
        "tolerance": bounds.TOL_VERIFY,
        "n_records": len(rows),
        "n_admissible": sum(r["admissible"] for r in rows),
        "n_failures": len(bad),
        "subadditivity": {"trials": len(trials), "passed": sum(trials)},
        "records": rows,
    })
    _emit(args, out, payload, rows, sweep.RECORD_FIELDS)
    return EXIT_OK if not bad and all(trials) else EXIT_FAILED


def cmd_bounds(args, out: TextIO) -> int:
    fn, iv = _fn_and_interval(args)
    if args.theorem is None:
        raise ConfigError("--theorem is required")
    tid = args.theorem.lower()
    if tid.startswith("t"):
        if args.x is None:
            raise ConfigError(f"--x is required for {tid}")
        x = args.x
        if tid == "t21":
            rep = bounds.bound_t21(fn, iv, x, enforce=False)
        elif tid == "t22":
            if args.p is not None:
                hp = bounds.HolderPair.from_p(args.p)
            elif args.q is not None:
                hp = bounds.HolderPair.from_q(args.q)
            else:
                raise ConfigError("t22 needs --p or --q")
            rep = bounds.bound_t22(fn, iv, x, hp, enforce=False)
        elif tid == "t25":
            rep = bounds.bound_t25(fn, iv, x, 1.0 if args.q is None else args.q, enforce=False)
        else:
            if args.q is None:
                raise ConfigError(f"{tid} needs --q")
            evaluator = bounds.bound_t23 if tid == "t23" else bounds.bound_t24
            rep = evaluator(fn, iv, x, args.q, enforce=False)
    else:
        if tid in ("c22",) and args.p is None and args.q is None:
            raise ConfigError("c22 needs --p or --q")
        if tid in ("c23", "r22") and args.q is None:
            raise ConfigError(f"{tid} needs --q")
        rep = bounds.midpoint_bound(fn, iv, tid, p=args.p, q=args.q, enforce=False)

    row = _report_row(fn.id, iv, rep)
    payload = _envelope(args, "bounds")
    payload["report"] = row
    _emit(args, out, payload, [row], sweep.RECORD_FIELDS)
    return EXIT_OK if rep.admissible and rep.holds else EXIT_FAILED


IDENTITY_FIELDS = ("fn", "a", "b", "x", "residual")


def cmd_identity(args, out: TextIO) -> int:
    fn, iv = _fn_and_interval(args)
    xs = iv.grid(sweep.X_POINTS) if args.x is None else [args.x]
    rows = [{"fn": fn.id, "a": iv.a, "b": iv.b, "x": x,
             "residual": bounds.identity_residual(fn, iv, x, args.tol)} for x in xs]
    payload = _envelope(args, "identity")
    payload["threshold"] = 1e-8
    payload["residuals"] = rows
    _emit(args, out, payload, rows, IDENTITY_FIELDS)
    return EXIT_OK if all(r["residual"] < 1e-8 for r in rows) else EXIT_FAILED


def cmd_means(args, out: TextIO) -> int:
    if args.a is None or args.b is None:
        raise ConfigError("means needs --a and --b")
    p = 2.0 if args.p is None else args.p
    q_b = 1.0 if args.q is None else args.q
    reports = list(means.prop31_check(args.a, args.b, args.n, p, q_b))
    reports += means.prop32_check(args.a, args.b, p, q_b)
    iv = Interval(args.a, args.b)
    rows = [_report_row("pow:%d" % args.n if rep.theorem_id.value.startswith("P31") else "recip",
                        iv, rep) for rep in reports]
    payload = _envelope(args, "means")
    payload["n"] = args.n
    payload["reports"] = rows
    _emit(args, out, payload, rows, sweep.RECORD_FIELDS)
    ok = all(rep.holds for rep in reports if rep.admissible)
    return EXIT_OK if ok else EXIT_FAILED


PANEL_FIELDS = ("lo", "hi", "bound", "theorem_used", "param")


def cmd_quad(args, out: TextIO) -> int:
    fn, iv = _fn_and_interval(args)
    if args.eps is None:
        raise ConfigError("quad needs --eps")
    status, code = "ok", EXIT_OK
    try:
        value, cert, part = quad.integrate_adaptive(fn, iv, args.eps, args.max_nodes)
    except BudgetExceeded as exc:
        value, cert, part = exc.value, exc.certificate, exc.partition
        status, code = "budget_exceeded", EXIT_BUDGET

    panels = [{"lo": lo, "hi": hi, "bound": pb.bound, "theorem_used": pb.theorem_used.value,
               "param": pb.param} for (lo, hi), pb in zip(part.panels, cert.per_interval)]
    if args.partition_out:
        with open(args.partition_out, "w") as fh:
            quad.dump_partition(part, fh)
    payload = _envelope(args, "quad")
    payload.update({
        "fn": fn.id, "a": iv.a, "b": iv.b, "eps": args.eps, "status": status,
        "value": value, "cert_total": cert.total, "nodes": len(part), "panels": panels,
    })
    _emit(args, out, payload, panels, PANEL_FIELDS)
    return code


COMMANDS = {"verify": cmd_verify, "bounds": cmd_bounds, "identity": cmd_identity,
            "means": cmd_means, "quad": cmd_quad}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fn", help="function id, e.g. pow:3, recip, sqrt_cube")
    common.add_argument("--a", type=float)
    common.add_argument("--b", type=float)
    common.add_argument("--x", type=float)
    common.add_argument("--p", type=float)
    common.add_argument("--q", type=float)
    common.add_argument("--eps", type=float)
    common.add_argument("--theorem", choices=THEOREMS + tuple(t.upper() for t in THEOREMS))
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--no-timestamp", action="store_true")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="hhcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="sweep every bound over the corpus")
    sub.add_parser("bounds", parents=[common], help="evaluate one bound")
    ident = sub.add_parser("identity", parents=[common], help="integral identity residuals")
    ident.add_argument("--tol", type=float, default=1e-10)
    mp = sub.add_parser("means", parents=[common], help="special-means inequalities")
    mp.add_argument("--n", type=int, default=2)
    qp = sub.add_parser("quad", parents=[common], help="certified adaptive trapezoid")
    qp.add_argument("--max-nodes", type=int, default=4096)
    qp.add_argument("--partition-out", metavar="PATH",
                    help="write the final nodes, one per line")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (ConfigError, DomainViolation, ValueError) as exc:
        err.write(f"hhcert: configuration error: {exc}\n")
        return EXIT_CONFIG
    except HypothesisFailed as exc:
        err.write(f"hhcert: {exc}\n")
        return EXIT_FAILED
    except HHCertError as exc:
        err.write(f"hhcert: {exc}\n")
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())
