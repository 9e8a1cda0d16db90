"""CLI entrypoint for the jet prolongation engine.

Subcommands:

- ``prolong``: one prolongation coefficient ``Y^j_{i1..iκ}``
- ``faa``: one Faà di Bruno derivative ``h_{i1..iκ}``
- ``verify``: the cross-engine and combinatorial sweeps

Formulas and reports go to stdout, logs to stderr. Exit codes: 0 on success,
1 when engines disagree or a check fails, 2 on bad flags.
"""

from __future__ import annotations

import argparse
import json
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .closedform import ClosedFormRequest, prolongation_closed
from .config import configure_logging, ensure_output_dir, get_logger, resolve_jobs, DEFAULT_SEED
from .emitter import STYLES, to_json, to_latex, to_text
from .errors import DomainError
from .faadibruno import FaaPolynomial, faa_closed, faa_inductive, faa_partitions
from .inductive import prolong_inductive
from .io import write_cases_csv, write_coefficients_csv, write_coefficients_parquet, write_report_json
from .jetalgebra import CoefficientPolynomial, Dims
from .models import CoefficientRow, explode_polynomial
from .validation import SUITES, compute_table_metrics, first_diff, run_suite

log = get_logger("cli")

FORMATS = ("latex", "text", "json")


def _parse_indices(raw: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"indices must be comma-separated integers, got {raw!r}") from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--debug", action="store_true", help="Enable DEBUG logging")
    p.add_argument("--out-dir", default=None, help="Export tables/reports to this directory")
    p.add_argument("--no-parquet", action="store_true", help="Skip writing Parquet output")
    p.add_argument("--no-csv", action="store_true", help="Skip writing CSV output")


def _add_formula_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=1, help="Number of independent variables")
    p.add_argument("--m", type=int, default=1, help="Number of dependent variables")
    p.add_argument("--kappa", type=int, required=True, help="Derivative order (>= 1)")
    p.add_argument(
        "--indices",
        type=_parse_indices,
        default=None,
        help="Comma-separated x-indices i1,...,iκ (default: all 1)",
    )
    p.add_argument("--format", choices=FORMATS, default="latex", help="Output format")
    p.add_argument("--style", choices=STYLES, default="paper", help="LaTeX/text layout")
    p.add_argument("--validate", action="store_true", help="Log shape metrics of the exported rows")


def build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jet-prolong")
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("prolong", help="Prolongation coefficient Y^j_{i1..iκ}")
    _add_formula_flags(pr)
    pr.add_argument("--j", type=int, default=1, help="Dependent-variable index of the coefficient")
    pr.add_argument("--engine", choices=("closed", "inductive", "both"), default="closed")
    pr.add_argument("--jobs", type=int, default=None, help="Worker processes for the closed formula")
    _add_common(pr)

    fa = sub.add_parser("faa", help="Faà di Bruno derivative h_{i1..iκ} of f(g(x))")
    _add_formula_flags(fa)
    fa.add_argument("--engine", choices=("closed", "inductive", "partitions", "all"), default="closed")
    _add_common(fa)

    ve = sub.add_parser("verify", help="Run verification suites")
    ve.add_argument("--suite", choices=SUITES, default="all")
    ve.add_argument("--max-kappa", type=int, default=None, help="Cap on the order swept")
    ve.add_argument("--max-n", type=int, default=None, help="Cap on n")
    ve.add_argument("--max-m", type=int, default=None, help="Cap on m")
    ve.add_argument("--jobs", type=int, default=None, help="Worker processes (env JETPROLONG_JOBS)")
    ve.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for randomized checks")
    _add_common(ve)
    return p


def _formula_inputs(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Tuple[Dims, Tuple[int, ...]]:
    if args.kappa < 1:
        parser.error(f"--kappa must be >= 1, got {args.kappa}")
    try:
        dims = Dims(args.n, args.m)
    except DomainError as exc:
        parser.error(str(exc))
    indices = args.indices if args.indices is not None else (1,) * args.kappa
    if len(indices) != args.kappa:
        parser.error(f"--indices needs {args.kappa} entries, got {len(indices)}")
    if any(not 1 <= i <= dims.n for i in indices):
        parser.error(f"--indices must lie in 1..{dims.n}, got {','.join(map(str, indices))}")
    return dims, indices


def _render(value, args: argparse.Namespace, dims: Dims) -> str:
    if args.format == "json":
        return to_json(value).decode("utf-8")
    if args.format == "text":
        return to_text(value, args.style, dims=dims)
    return to_latex(value, args.style, dims=dims)


def _compare(results: Dict[str, object], scalar: bool) -> Optional[Dict[str, object]]:
    names = list(results)
    reference = results[names[0]]
    for name in names[1:]:
        diff = first_diff(reference, results[name], scalar=scalar)  # type: ignore[arg-type]
        if diff is not None:
            return {"engine_a": names[0], "engine_b": name, "first_diff": diff}
    return None


def _print_verdict(results: Dict[str, object], args: argparse.Namespace) -> None:
    """One stdout line after the formula when several engines ran.

    JSON output stays a single document; there the exit code is the verdict.
    """
    if len(results) > 1 and args.format != "json":
        print("engines agree: " + " = ".join(results))


def _export(rows: List[CoefficientRow], args: argparse.Namespace, stem: str) -> None:
    if args.out_dir is None:
        return
    out_dir = ensure_output_dir(args.out_dir)
    if not args.no_parquet:
        write_coefficients_parquet(rows, out_dir=out_dir, filename=f"{stem}.parquet")
    if not args.no_csv:
        write_coefficients_csv(rows, out_dir=out_dir, filename=f"{stem}.csv")
    log.info("export: out_dir=%s stem=%s rows=%d", out_dir, stem, len(rows))


def _log_metrics(rows: List[CoefficientRow]) -> None:
    metrics = compute_table_metrics(r.to_dict() for r in rows)
    log.info(
        "metrics: rows=%d monomials=%d max_weight=%d weight_bound_ok=%s order_rule_ok=%s schema_ok=%s",
        metrics["total_rows"],
        metrics["distinct_monomials"],
        metrics["max_weight"],
        metrics["weight_bound_ok"],
        metrics["order_rule_ok"],
        metrics["schema_ok"],
    )


def cmd_prolong(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    dims, indices = _formula_inputs(args, parser)
    if not 1 <= args.j <= dims.m:
        parser.error(f"--j must lie in 1..{dims.m}, got {args.j}")
    jobs = resolve_jobs(args.jobs)

    results: Dict[str, CoefficientPolynomial] = {}
    if args.engine in ("closed", "both"):
        results["closed"] = prolongation_closed(ClosedFormRequest(dims, args.kappa, args.j, indices), jobs=jobs)
    if args.engine in ("inductive", "both"):
        results["inductive"] = prolong_inductive(dims, args.kappa).entry(args.j, indices)

    mismatch = _compare(results, dims.is_scalar)
    value = next(iter(results.values()))
    log.info(
        "prolong_summary: n=%d m=%d kappa=%d j=%d indices=%s engine=%s monomials=%d equal=%s",
        dims.n,
        dims.m,
        args.kappa,
        args.j,
        ",".join(map(str, indices)),
        args.engine,
        len(value),
        mismatch is None,
    )
    if mismatch is not None:
        log.warning("engine_mismatch: %s", json.dumps(mismatch, sort_keys=True))
        print(json.dumps(mismatch, indent=2, sort_keys=True))
        return 1

    print(_render(value, args, dims))
    _print_verdict(results, args)
    rows = explode_polynomial(value, engine=args.engine, dims=dims, kappa=args.kappa, i_tuple=indices, j=args.j)
    _export(rows, args, f"prolong_n{dims.n}_m{dims.m}_k{args.kappa}_j{args.j}")
    if args.validate:
        _log_metrics(rows)
    return 0


FAA_ENGINES: Dict[str, Callable[[Dims, int, Sequence[int]], FaaPolynomial]] = {
    "closed": faa_closed,
    "inductive": faa_inductive,
    "partitions": faa_partitions,
}


def cmd_faa(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    dims, indices = _formula_inputs(args, parser)
    names = list(FAA_ENGINES) if args.engine == "all" else [args.engine]
    results = {name: FAA_ENGINES[name](dims, args.kappa, indices) for name in names}

    mismatch = _compare(results, dims.is_scalar)
    value = results[names[0]]
    log.info(
        "faa_summary: n=%d m=%d kappa=%d indices=%s engine=%s terms=%d equal=%s",
        dims.n,
        dims.m,
        args.kappa,
        ",".join(map(str, indices)),
        args.engine,
        len(value),
        mismatch is None,
    )
    if mismatch is not None:
        log.warning("engine_mismatch: %s", json.dumps(mismatch, sort_keys=True))
        print(json.dumps(mismatch, indent=2, sort_keys=True))
        return 1

    print(_render(value, args, dims))
    _print_verdict(results, args)
    rows = explode_polynomial(value, engine=args.engine, dims=dims, kappa=args.kappa, i_tuple=indices)
    _export(rows, args, f"faa_n{dims.n}_m{dims.m}_k{args.kappa}")
    if args.validate:
        _log_metrics(rows)
    return 0


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    for flag in ("max_kappa", "max_n", "max_m", "jobs"):
        value = getattr(args, flag)
        if value is not None and value < 1:
            parser.error(f"--{flag.replace('_', '-')} must be >= 1, got {value}")
    jobs = resolve_jobs(args.jobs)

    report = run_suite(
        args.suite,
        max_kappa=args.max_kappa,
        max_n=args.max_n,
        max_m=args.max_m,
        jobs=jobs,
        seed=args.seed,
    )
    payload = report.to_dict()
    print(json.dumps(payload, indent=2, sort_keys=True))

    if args.out_dir is not None:
        out_dir = ensure_output_dir(args.out_dir)
        write_report_json(payload, out_dir=out_dir, filename=f"verify_{args.suite}.json")
        if not args.no_csv:
            write_cases_csv(report.records, out_dir=out_dir, filename=f"verify_{args.suite}_cases.csv")

    log.info(
        "verify_summary: suite=%s cases=%d failures=%d errata=%d confirmed=%d elapsed_ms=%d",
        args.suite,
        payload["cases"],
        len(payload["failures"]),
        len(payload["errata"]),
        sum(1 for e in payload["errata"] if e["confirmed"]),
        payload["elapsed_ms"],
    )
    return 0 if report.ok else 1


COMMANDS = {"prolong": cmd_prolong, "faa": cmd_faa, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    configure_logging(debug=args.debug)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
