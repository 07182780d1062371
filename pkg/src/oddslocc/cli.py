"""Command-line interface: ``oddslocc {compute,verify,counterexample,symbolic-check}``.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from pathlib import Path

import numpy as np

from .invariants import (
    DEFAULT_TOL_EQ,
    DEFAULT_TOL_INEQ,
    pairwise_gaps,
    z3_explicit,
    z5_explicit,
    z_all,
    z_values,
)
from .qstate import QubitState, parse_state, random_state, random_states, serialize_state, standard_state
from .slocc import serialize_transform
from .verify import (
    DEFAULT_TOL_COV,
    DEFAULT_TOL_ORACLE,
    SUITES,
    SuiteResult,
    symbolic_comparison,
)

log = logging.getLogger("oddslocc")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# suite -> (qubit counts when --n is omitted, default trial count)
SUITE_DEFAULTS = {
    "eq3": ((3,), 10_000),
    "ckw": ((3,), 10_000),
    "inequality": ((5,), 1000),
    "covariance": ((3, 5, 7), 1000),
    "modulus": ((3, 5, 7), 1000),
    "sl": ((3, 5, 7), 1000),
    "permutation": ((3, 5), 100),
    "oracle": ((3, 5), 100),
    "symbolic": ((3, 5), 1),
}


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _render(payload: dict, headers: list[str], rows: list[list], fmt: str, footer: list[str]) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    cells = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines + footer) + "\n"


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_state(args) -> QubitState:
    if args.state:
        try:
            text = Path(args.state).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read state file: {exc}") from exc
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                return parse_state(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return _generate(args.gen, args.seed)


def _generate(spec: str, seed: int | None) -> QubitState:
    """``NAME:N[:SEED]``; basis states are ``basis:I:N``."""
    parts = spec.split(":")
    try:
        if parts[0] == "basis":
            name, n, rest = f"basis:{parts[1]}", int(parts[2]), parts[3:]
        else:
            name, n, rest = parts[0], int(parts[1]), parts[2:]
        if rest:
            seed = int(rest[0])
    except (IndexError, ValueError):
        raise UsageError(f"bad --gen spec {spec!r}; expected NAME:N[:SEED]") from None
    try:
        if name == "random":
            return random_state(n, 0 if seed is None else seed)
        return standard_state(name, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_compute(args) -> int:
    s = _load_state(args)
    if s.n < 3 or s.n % 2 == 0:
        raise UsageError(f"invariants need odd n >= 3, state has n={s.n}")
    report = z_all(s, equal_within=args.tol_eq)
    explicit = None
    if s.n == 3:
        explicit = z3_explicit(s)
    elif s.n == 5:
        explicit = z5_explicit(s)
    headers = ["k", "re_z", "im_z", "tau"]
    if explicit is not None:
        headers += ["explicit_re", "explicit_im"]
    rows = []
    for k, (z, tau) in enumerate(zip(report.z, report.tau), start=1):
        row = [k, _fmt(z.real), _fmt(z.imag), _fmt(tau)]
        if explicit is not None:
            row += [_fmt(explicit[k - 1].real), _fmt(explicit[k - 1].imag)]
        rows.append(row)
    payload = report.to_dict()
    if explicit is not None:
        payload["explicit"] = [[v.real, v.imag] for v in explicit]
    footer = [
        f"spread = {_fmt(report.spread)}",
        f"all equal within {report.equal_within:g}: {'yes' if report.all_equal else 'no'}",
    ]
    _write(_render(payload, headers, rows, args.format, footer), args.out)
    return EXIT_OK


def _emit_witness(result: SuiteResult, path: str | None) -> str | None:
    if result.witness is None:
        return None
    target = Path(path or f"witness-{result.name}.json")
    target.write_text(serialize_state(result.witness) + "\n")
    if result.witness_transform is not None:
        tpath = target.with_suffix(".transform.json")
        tpath.write_text(serialize_transform(result.witness_transform) + "\n")
    return str(target)


def _run_suite(name: str, n: int, args) -> SuiteResult:
    trials = args.trials or SUITE_DEFAULTS[name][1]
    if name == "symbolic":
        return symbolic_comparison(n)
    fn = SUITES[name]
    tol = {
        "eq3": args.tol_eq,
        "ckw": args.tol_eq,
        "permutation": args.tol_eq,
        "inequality": args.tol_ineq,
        "covariance": args.tol_cov,
        "modulus": args.tol_cov,
        "sl": args.tol_cov,
        "oracle": args.tol_oracle,
    }[name]
    kwargs = {"trials": trials, "seed": args.seed, "tol": tol}
    if name not in ("eq3", "ckw"):
        kwargs["n"] = n
    return fn(**kwargs)


def cmd_verify(args) -> int:
    names = list(SUITE_DEFAULTS) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        ns = SUITE_DEFAULTS[name][0]
        if args.n is not None and name not in ("eq3", "ckw"):
            ns = (args.n,)
        for n in ns:
            if n < 3 or n % 2 == 0:
                raise UsageError(f"--n must be odd and >= 3, got {n}")
            try:
                result = _run_suite(name, n, args)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            log.info("%s: %s", result.name, "pass" if result.passed else "FAIL")
            results.append(result)
    witnesses = {}
    for r in results:
        if not r.passed:
            witnesses[r.name] = _emit_witness(r, args.witness if len(results) == 1 else None)
    headers = ["suite", "trials", "max_residual", "tolerance", "result"]
    rows = [
        [r.name, r.trials, _fmt(r.max_residual), f"{r.tolerance:g}", "pass" if r.passed else "FAIL"]
        for r in results
    ]
    payload = {
        "suites": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
        "seed": args.seed,
        "witnesses": witnesses,
    }
    footer = [f"witness for {k}: {v}" for k, v in witnesses.items() if v]
    _write(_render(payload, headers, rows, args.format, footer), args.out)
    return EXIT_OK if payload["passed"] else EXIT_FAIL


def cmd_counterexample(args) -> int:
    n = args.n if args.n is not None else 5
    if n < 5 or n % 2 == 0:
        raise UsageError(
            f"counterexamples need odd n >= 5 (n={n}: the invariants coincide; use verify --suite eq3)"
        )
    trials = args.trials or 1000
    amps = random_states(n, trials, args.seed)
    z = z_values(amps, n)
    gaps = pairwise_gaps(z)
    spread, min_gap = gaps.max(axis=1), gaps.min(axis=1)
    best = int(min_gap.argmax())
    witness = QubitState(n, amps[best])
    report = z_all(witness, equal_within=args.tol_eq)
    fraction = float(np.mean(min_gap > args.tol_ineq))
    path = Path(args.witness or f"counterexample-n{n}.json")
    path.write_text(serialize_state(witness) + "\n")

    def quantiles(x):
        q = np.quantile(x, [0.0, 0.5, 1.0])
        return {"min": float(q[0]), "median": float(q[1]), "max": float(q[2])}

    payload = {
        "n": n,
        "trials": trials,
        "seed": args.seed,
        "tol_ineq": args.tol_ineq,
        "fraction_separated": fraction,
        "spread": quantiles(spread),
        "min_gap": quantiles(min_gap),
        "witness_trial": best,
        "witness_seed": args.seed + best,
        "witness_path": str(path),
        "witness_report": report.to_dict(),
    }
    headers = ["statistic", "min", "median", "max"]
    rows = [
        [name, *(_fmt(v) for v in payload[name].values())] for name in ("spread", "min_gap")
    ]
    footer = [
        f"fraction with min pairwise gap > {args.tol_ineq:g}: {fraction:.4f}",
        f"witness (trial {best}, seed {args.seed + best}) written to {path}",
    ] + [f"  Z^{k} = {_fmt(v.real)} {v.imag:+.17g}j" for k, v in enumerate(report.z, 1)]
    _write(_render(payload, headers, rows, args.format, footer), args.out)
    return EXIT_OK


def cmd_symbolic_check(args) -> int:
    n = args.n if args.n is not None else 3
    if n not in (3, 5):
        raise UsageError("symbolic-check supports --n 3 or --n 5")
    result = symbolic_comparison(n, literal=args.literal)
    rows = [
        [r["k"], r["terms"], r["scale"], "pass" if r["equal"] else "FAIL", r["witness"]]
        for r in result.details["rows"]
    ]
    mutual = [m["identical"] for m in result.details["mutual"]]
    if n == 3:
        relation, holds = "mutually identical", all(mutual)
    else:
        relation, holds = "pairwise distinct", not any(mutual)
    footer = [f"expansions {relation}: {'yes' if holds else 'NO'}"]
    footer += [f"note: {note}" for note in result.details["notes"]]
    footer.append("result: " + ("pass" if result.passed else "FAIL"))
    headers = ["k", "terms", "scale", "result", "detail"]
    _write(_render(result.to_dict(), headers, rows, args.format, footer), args.out)
    return EXIT_OK if result.passed else EXIT_FAIL


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="qubit count")
    common.add_argument("--trials", type=_positive(int), help="number of random trials")
    common.add_argument("--seed", type=int, default=1, help="base seed (default: 1)")
    common.add_argument("--tol-eq", type=_positive(float), default=DEFAULT_TOL_EQ)
    common.add_argument("--tol-cov", type=_positive(float), default=DEFAULT_TOL_COV)
    common.add_argument("--tol-ineq", type=_positive(float), default=DEFAULT_TOL_INEQ)
    common.add_argument("--tol-oracle", type=_positive(float), default=DEFAULT_TOL_ORACLE)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="oddslocc",
        description="Odd-n SLOCC invariants Z^k of multiqubit pure states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="evaluate Z^k for one state")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", metavar="PATH", help="state file (JSON)")
    src.add_argument("--gen", metavar="NAME:N[:SEED]", help="ghz, w, product-zero, basis:I, random")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=[*SUITE_DEFAULTS, "all"], default="all")
    p.add_argument("--witness", metavar="PATH", help="where to write the worst state on failure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", parents=[common], help="sample states with distinct Z^k")
    p.add_argument("--witness", metavar="PATH", help="witness state file")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser(
        "symbolic-check", parents=[common], help="exact comparison with the closed forms"
    )
    p.add_argument(
        "--literal", action="store_true",
        help="compare against the closed forms verbatim, without the k=3 erratum",
    )
    p.set_defaults(func=cmd_symbolic_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oddslocc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"oddslocc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
