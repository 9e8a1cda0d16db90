"""Verification suites, table metrics and diff helpers.

A suite expands into independent cases. Each case runs one check and
returns a :class:`CaseRecord` plus, on failure, a structured diff. Cases are
top-level and picklable so ``jobs > 1`` can hand them to worker processes;
results keep case order whatever the completion order.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import asdict, dataclass, field, is_dataclass
from fractions import Fraction
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Literal, Optional, Tuple, Union

import pandas as pd
from sympy.utilities.iterables import multiset_partitions

from . import config
from .closedform import (
    ClosedFormRequest,
    EDGE_FAMILY_MIN_KAPPA,
    binomial_slice,
    edge_family_slice,
    first_order_closed,
    first_order_slice,
    kronecker_counts,
    prolongation_closed,
    prolongation_closed_scalar,
)
from .combinatorics import (
    FAA,
    WeightSpec,
    coset_transversal,
    is_shuffle,
    orbit_key,
    shuffles,
    stabilizer_order,
    stabilizer_translate,
    weight_specs,
)
from .config import get_logger
from .emitter import combination_markup, fsymbol_markup, gproduct_markup, monomial_markup
from .errata import KNOWN_ERRATA, Erratum
from .errors import DomainError, JetProlongError
from .faadibruno import (
    FaaPolynomial,
    FSymbol,
    GSymbol,
    extract_faa,
    faa_closed,
    faa_closed_scalar,
    faa_coefficient_sum,
    faa_inductive,
    faa_numeric_check,
    faa_partitions,
)
from .inductive import index_tuples, prolong_inductive
from .jetalgebra import (
    CoefficientPolynomial,
    Dims,
    JetMonomial,
    X_HEAD,
    Y_HEAD,
    coefficient_of,
    scalar_monomial,
    symbol_sort_key,
)
from .models import COEFFICIENT_COLUMNS, COEFFICIENT_DTYPES, CaseRecord, to_coefficient_dataframe
from .polyoracle import random_poly

log = get_logger("validation")

Suite = Literal["prolong", "faa", "combinatorics", "all"]
SUITES: Tuple[str, ...] = ("prolong", "faa", "combinatorics", "all")


# --- Table metrics ---


def compute_table_metrics(rows_or_df: Iterable[Dict[str, Any]] | pd.DataFrame) -> Dict[str, Any]:
    """Basic shape metrics on exported coefficient rows.

    ``weight_bound_ok`` and ``order_rule_ok`` recheck the degree rules per
    row: prolongation monomials have ``W <= κ+1``, a 𝒴-symbol has orders
    ``(κ-W, H)`` and an 𝒳-symbol ``(κ-W+1, H-1)``; Faà di Bruno rows have
    ``W = κ`` and an ``f``-order equal to ``H``.
    """
    if isinstance(rows_or_df, pd.DataFrame):
        df = to_coefficient_dataframe(rows_or_df.to_dict(orient="records"))
    else:
        dicts: List[Dict[str, Any]] = []
        for r in rows_or_df:  # type: ignore[assignment]
            if is_dataclass(r):
                dicts.append(asdict(r))
            elif isinstance(r, dict):
                dicts.append(r)
            else:
                dicts.append(dict(r))
        df = to_coefficient_dataframe(dicts)

    total = int(len(df))
    faa = df["kind"] == "faa"
    kappa, weight, height = df["kappa"], df["weight"], df["height"]
    weight_ok = (faa & (weight == kappa)) | (~faa & (weight <= kappa + 1))
    y_ok = (df["x_order"] == kappa - weight) & (df["y_order"] == height)
    x_ok = (df["x_order"] == kappa - weight + 1) & (df["y_order"] == height - 1)
    f_ok = df["y_order"] == height
    order_ok = (
        ((df["head"] == Y_HEAD) & y_ok)
        | ((df["head"] == X_HEAD) & x_ok)
        | ((df["head"] == "f") & f_ok)
    )

    return {
        "total_rows": total,
        "distinct_monomials": int(df["monomial"].nunique()),
        "max_weight": int(weight.max()) if total else 0,
        "weight_bound_ok": bool(weight_ok.fillna(False).all()),
        "order_rule_ok": bool(order_ok.fillna(False).all()),
        "schema_ok": list(df.columns) == COEFFICIENT_COLUMNS
        and [str(t) for t in df.dtypes] == [COEFFICIENT_DTYPES[c] for c in COEFFICIENT_COLUMNS],
    }


def weight_bound_violations(p: CoefficientPolynomial, kappa: int) -> List[JetMonomial]:
    return [mono for mono, _ in p.terms if mono.weight > kappa + 1]


def derivative_order_violations(p: CoefficientPolynomial, kappa: int) -> List[Tuple[JetMonomial, Any]]:
    """Terms whose symbol orders break ``𝒴: (κ-W, H)`` / ``𝒳: (κ-W+1, H-1)``."""
    out = []
    for mono, combo in p.terms:
        W, H = mono.weight, mono.height
        for symbol, _ in combo:
            if symbol is None:
                out.append((mono, symbol))
            elif symbol.head == Y_HEAD and (symbol.x_order, symbol.y_order) != (kappa - W, H):
                out.append((mono, symbol))
            elif symbol.head == X_HEAD and (symbol.x_order, symbol.y_order) != (kappa - W + 1, H - 1):
                out.append((mono, symbol))
    return out


# --- Diffs ---


def first_diff(
    a: Union[CoefficientPolynomial, FaaPolynomial],
    b: Union[CoefficientPolynomial, FaaPolynomial],
    *,
    scalar: bool = False,
) -> Optional[Dict[str, str]]:
    """First monomial, in canonical order, where ``a`` and ``b`` differ;
    ``None`` when they are equal."""
    if a == b:
        return None
    if isinstance(a, FaaPolynomial) and isinstance(b, FaaPolynomial):
        fa = {(f, gs): c for f, gs, c in a}
        fb = {(f, gs): c for f, gs, c in b}
        keys = sorted(
            set(fa) | set(fb),
            key=lambda k: (sum(g.order for g in k[1]), tuple(g.sort_key() for g in k[1]), k[0].sort_key()),
        )
        for f, gs in keys:
            ca, cb = fa.get((f, gs), 0), fb.get((f, gs), 0)
            if ca != cb:
                return {
                    "monomial": f"{fsymbol_markup(f, scalar=scalar)} {gproduct_markup(gs, scalar=scalar)}",
                    "a": str(ca),
                    "b": str(cb),
                }
        return None
    if not (isinstance(a, CoefficientPolynomial) and isinstance(b, CoefficientPolynomial)):
        raise DomainError("first_diff needs two values of the same kind")
    da, db = a.as_dict(), b.as_dict()
    for mono in sorted(set(da) | set(db), key=JetMonomial.sort_key):
        ca, cb = da.get(mono, {}), db.get(mono, {})
        if ca != cb:
            return {
                "monomial": monomial_markup(mono, scalar=scalar),
                "a": _combo_text(ca, scalar),
                "b": _combo_text(cb, scalar),
            }
    return None


def _combo_text(combo: Dict[Any, int], scalar: bool) -> str:
    if not combo:
        return "0"
    ordered = tuple(sorted(combo.items(), key=lambda sc: symbol_sort_key(sc[0])))
    return combination_markup(ordered, scalar=scalar, latex=False)


# --- Errata ---


@lru_cache(maxsize=None)
def _scalar_prolongation(kappa: int) -> CoefficientPolynomial:
    return prolong_inductive(Dims(1, 1), kappa).entry(1, (1,) * kappa)


def _terms_of(combo: Dict[Any, int]) -> Tuple[Tuple[str, int, int, int], ...]:
    out = [(s.head, s.x_order, s.y_order, c) for s, c in combo.items() if s is not None]
    return tuple(sorted(out))


def confirm_erratum(e: Erratum) -> Dict[str, Any]:
    """Recompute the erratum's coefficient with the inductive engine."""
    if e.kind == "faa":
        h = faa_inductive(Dims(1, 1), e.kappa, (1,) * e.kappa)
        f = FSymbol((1,) * len(e.monomial))
        c = h.coefficient(f, [GSymbol(1, (1,) * lam) for lam in e.monomial])
        got = (("f", 0, f.order, c),) if c else ()
    else:
        combo = coefficient_of(_scalar_prolongation(e.kappa), scalar_monomial(e.monomial))
        got = _terms_of(combo)
    same_value = e.monomial_missing or e.index_misprint
    confirmed = got == tuple(sorted(e.computed)) and (same_value or got != tuple(sorted(e.printed)))
    if not confirmed:
        log.warning("erratum_not_confirmed: key=%s got=%s", e.key, got)
    out = e.to_dict()
    out["confirmed"] = confirmed
    return out


# --- Cases ---


@dataclass(frozen=True)
class Case:
    case_id: int
    suite: str
    check: str
    params: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CaseOutcome:
    record: CaseRecord
    failure: Optional[Dict[str, Any]] = None


Failure = Optional[Dict[str, Any]]


def _failure(params: Dict[str, Any], engine_a: str, engine_b: str, diff: Any) -> Dict[str, Any]:
    return {"input": dict(params), "engine_a": engine_a, "engine_b": engine_b, "first_diff": diff}


def _check_closed_vs_inductive(p: Dict[str, Any]) -> Failure:
    dims = Dims(p["n"], p["m"])
    kappa = p["kappa"]
    table = prolong_inductive(dims, kappa, check_symmetry=True)
    for j in range(1, dims.m + 1):
        for idx in index_tuples(dims.n, kappa):
            closed = prolongation_closed(ClosedFormRequest(dims, kappa, j, idx))
            inductive = table.entry(j, idx)
            diff = first_diff(closed, inductive, scalar=dims.is_scalar)
            where = dict(p, j=j, indices=list(idx))
            if diff is not None:
                return _failure(where, "closed", "inductive", diff)
            too_heavy = weight_bound_violations(closed, kappa)
            if too_heavy:
                bad = too_heavy[0]
                return _failure(where, "closed", "weight_bound", {"monomial": monomial_markup(bad, scalar=False)})
            wrong_order = derivative_order_violations(closed, kappa)
            if wrong_order:
                bad, _ = wrong_order[0]
                return _failure(where, "closed", "order_rule", {"monomial": monomial_markup(bad, scalar=False)})
    return None


def _check_scalar_paths(p: Dict[str, Any]) -> Failure:
    kappa = p["kappa"]
    inductive = _scalar_prolongation(kappa)
    scalar = prolongation_closed_scalar(kappa)
    diff = first_diff(scalar, inductive, scalar=True)
    if diff is not None:
        return _failure(p, "closed_scalar", "inductive", diff)
    binomial_slice(kappa)
    if kappa >= EDGE_FAMILY_MIN_KAPPA:
        edge_family_slice(kappa, inductive)
    return None


def _check_first_order_closed(p: Dict[str, Any]) -> Failure:
    dims = Dims(p["n"], p["m"])
    kappa = p["kappa"]
    table = prolong_inductive(dims, kappa)
    for idx in index_tuples(dims.n, kappa, sorted_only=True):
        direct = first_order_closed(dims, kappa, idx)
        where = dict(p, indices=list(idx))
        closed = first_order_slice(prolongation_closed(ClosedFormRequest(dims, kappa, 1, idx)))
        diff = first_diff(direct, closed, scalar=dims.is_scalar)
        if diff is not None:
            return _failure(where, "first_order_closed", "closed", diff)
        diff = first_diff(direct, first_order_slice(table.entry(1, idx)), scalar=dims.is_scalar)
        if diff is not None:
            return _failure(where, "first_order_closed", "inductive", diff)
    return None


def _check_kronecker_counts(p: Dict[str, Any]) -> Failure:
    kronecker_counts(p["kappa"])
    return None


def _check_index_symmetry(p: Dict[str, Any]) -> Failure:
    prolong_inductive(Dims(p["n"], p["m"]), p["kappa"], check_symmetry=True)
    return None


def _check_faa_agreement(p: Dict[str, Any]) -> Failure:
    dims = Dims(p["n"], p["m"])
    kappa = p["kappa"]
    scalar = dims.is_scalar
    reference: Dict[Tuple[int, ...], FaaPolynomial] = {}
    for idx in index_tuples(dims.n, kappa):
        closed = faa_closed(dims, kappa, idx)
        where = dict(p, indices=list(idx))
        for name, other in (
            ("inductive", faa_inductive(dims, kappa, idx)),
            ("partitions", faa_partitions(dims, kappa, idx)),
        ):
            diff = first_diff(closed, other, scalar=scalar)
            if diff is not None:
                return _failure(where, "closed", name, diff)
        key = tuple(sorted(idx))
        if key in reference:
            # permuting the indices permutes nothing after canonicalization
            diff = first_diff(reference[key], closed, scalar=scalar)
            if diff is not None:
                return _failure(where, "closed_sorted", "closed_permuted", diff)
        else:
            reference[key] = closed
    if scalar:
        diff = first_diff(reference[(1,) * kappa], faa_closed_scalar(kappa), scalar=True)
        if diff is not None:
            return _failure(p, "closed", "closed_scalar", diff)
    return None


def _check_faa_extract(p: Dict[str, Any]) -> Failure:
    dims = Dims(p["n"], p["m"])
    kappa = p["kappa"]
    table = prolong_inductive(dims, kappa)
    for idx in index_tuples(dims.n, kappa, sorted_only=True):
        expected = faa_closed(dims, kappa, idx)
        # the top-weight part is the same for every dependent index
        for j in range(1, dims.m + 1):
            extracted = extract_faa(table.entry(j, idx), kappa)
            diff = first_diff(expected, extracted, scalar=dims.is_scalar)
            if diff is not None:
                return _failure(dict(p, j=j, indices=list(idx)), "closed", "extracted", diff)
    return None


def _check_bell_sum(p: Dict[str, Any]) -> Failure:
    kappa = p["kappa"]
    total = faa_coefficient_sum(faa_closed(Dims(1, 1), kappa, (1,) * kappa))
    partitions = sum(1 for _ in multiset_partitions(list(range(kappa))))
    if total != partitions:
        return _failure(p, "coefficient_sum", "set_partitions", {"a": str(total), "b": str(partitions)})
    return None


def _numeric_instance(p: Dict[str, Any]):
    n, m = p["n"], p["m"]
    rng = random.Random(f"{p['seed']}:{n}:{m}:{p['instance']}")
    kappa = rng.randint(1, p["max_kappa"])
    idx = tuple(rng.randint(1, n) for _ in range(kappa))
    f = random_poly(m, rng, max_degree=max(2, kappa))
    g = [random_poly(n, rng, max_degree=3) for _ in range(m)]
    point = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))
    return kappa, idx, f, g, point


def _check_faa_numeric(p: Dict[str, Any]) -> Failure:
    kappa, idx, f, g, point = _numeric_instance(p)
    residual = faa_numeric_check(f, g, kappa, idx, point)
    if residual != 0:
        where = dict(p, kappa=kappa, indices=list(idx), point=[str(c) for c in point])
        return _failure(where, "direct_derivative", "closed", {"residual": str(residual)})
    return None


def _specs_of_weight(weight: int) -> List[WeightSpec]:
    return weight_specs(weight, FAA)


def _check_lagrange(p: Dict[str, Any]) -> Failure:
    W = p["weight"]
    for spec in _specs_of_weight(W):
        elements = coset_transversal(spec)
        expected = math.factorial(W) // stabilizer_order(spec)
        keys = {orbit_key(spec, e.images) for e in elements}
        if len(elements) != expected or len(keys) != len(elements):
            return _failure(
                dict(p, spec=[list(pair) for pair in spec.pairs]),
                "transversal",
                "lagrange",
                {"a": str(len(elements)), "b": str(expected), "distinct": str(len(keys))},
            )
    return None


def _check_orbits(p: Dict[str, Any]) -> Failure:
    W = p["weight"]
    for spec in _specs_of_weight(W):
        orbits = {orbit_key(spec, images) for images in itertools.permutations(range(1, W + 1))}
        hits = {orbit_key(spec, e.images) for e in coset_transversal(spec)}
        if hits != orbits:
            return _failure(
                dict(p, spec=[list(pair) for pair in spec.pairs]),
                "transversal",
                "brute_force_orbits",
                {"a": str(len(hits)), "b": str(len(orbits))},
            )
    return None


def _check_shuffles(p: Dict[str, Any]) -> Failure:
    size = p["size"]
    for q in range(size + 1):
        got = [s.images for s in shuffles(size, q)]
        brute = sorted(images for images in itertools.permutations(range(1, size + 1)) if is_shuffle(images, q))
        if sorted(got) != brute or len(got) != math.comb(size, q):
            return _failure(dict(p, q=q), "shuffles", "brute_force", {"a": str(len(got)), "b": str(len(brute))})
    return None


def _check_transversal_swap(p: Dict[str, Any]) -> Failure:
    rng = random.Random(f"{p['seed']}:swap:{p['instance']}")
    dims = Dims(rng.randint(1, 2), rng.randint(1, 2))
    kappa = rng.randint(1, 3)
    j = rng.randint(1, dims.m)
    idx = tuple(rng.randint(1, dims.n) for _ in range(kappa))
    req = ClosedFormRequest(dims, kappa, j, idx)
    translated = prolongation_closed(
        req, transversal=lambda spec: [stabilizer_translate(e, rng) for e in coset_transversal(spec)]
    )
    diff = first_diff(prolongation_closed(req), translated, scalar=dims.is_scalar)
    if diff is not None:
        where = dict(p, n=dims.n, m=dims.m, kappa=kappa, j=j, indices=list(idx))
        return _failure(where, "canonical_transversal", "translated_transversal", diff)
    return None


CHECKS: Dict[str, Callable[[Dict[str, Any]], Failure]] = {
    "closed_vs_inductive": _check_closed_vs_inductive,
    "scalar_paths": _check_scalar_paths,
    "first_order_closed": _check_first_order_closed,
    "kronecker_counts": _check_kronecker_counts,
    "index_symmetry": _check_index_symmetry,
    "faa_agreement": _check_faa_agreement,
    "faa_extract": _check_faa_extract,
    "bell_sum": _check_bell_sum,
    "faa_numeric": _check_faa_numeric,
    "lagrange": _check_lagrange,
    "orbits": _check_orbits,
    "shuffles": _check_shuffles,
    "transversal_swap": _check_transversal_swap,
}


def run_case(case: Case) -> CaseOutcome:
    check = CHECKS[case.check]
    try:
        failure = check(case.params)
    except JetProlongError as exc:
        details = getattr(exc, "details", {}) or {}
        failure = _failure(case.params, case.check, type(exc).__name__, {"error": str(exc), **details})
    params = case.params
    record = CaseRecord(
        case_id=case.case_id,
        suite=case.suite,
        check=case.check,
        n=params.get("n"),
        m=params.get("m"),
        kappa=params.get("kappa"),
        input=json.dumps(params, sort_keys=True, default=str),
        passed=failure is None,
        engine_a=None if failure is None else failure["engine_a"],
        engine_b=None if failure is None else failure["engine_b"],
        detail=None if failure is None else json.dumps(failure["first_diff"], sort_keys=True, default=str),
    )
    return CaseOutcome(record, failure)


# --- Suite planning ---


def _within(budget: Dict[Tuple[int, int], int], max_kappa, max_n, max_m) -> Iterable[Tuple[int, int, int]]:
    for (n, m), top in budget.items():
        if (max_n is not None and n > max_n) or (max_m is not None and m > max_m):
            continue
        for kappa in range(1, (top if max_kappa is None else min(top, max_kappa)) + 1):
            yield n, m, kappa


def plan_cases(
    suite: str,
    *,
    max_kappa: Optional[int] = None,
    max_n: Optional[int] = None,
    max_m: Optional[int] = None,
    seed: int = config.DEFAULT_SEED,
) -> List[Tuple[str, str, Dict[str, Any]]]:
    """``(suite, check, params)`` triples for one suite, in a fixed order."""
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}, expected one of {SUITES}")
    for name, value in (("max_kappa", max_kappa), ("max_n", max_n), ("max_m", max_m)):
        if value is not None and value < 1:
            raise DomainError(f"{name} must be >= 1, got {value}")
    if suite == "all":
        out = []
        for part in ("prolong", "faa", "combinatorics"):
            out.extend(plan_cases(part, max_kappa=max_kappa, max_n=max_n, max_m=max_m, seed=seed))
        return out

    out: List[Tuple[str, str, Dict[str, Any]]] = []
    if suite == "prolong":
        for n, m, kappa in _within(config.PROLONG_SWEEP, max_kappa, max_n, max_m):
            out.append((suite, "closed_vs_inductive", {"n": n, "m": m, "kappa": kappa}))
            if (n, m) == (1, 1):
                out.append((suite, "scalar_paths", {"n": 1, "m": 1, "kappa": kappa}))
        for n, m, kappa in _within(config.FIRST_ORDER_SWEEP, max_kappa, max_n, max_m):
            out.append((suite, "first_order_closed", {"n": n, "m": m, "kappa": kappa}))
        top = config.KRONECKER_MAX_KAPPA if max_kappa is None else min(config.KRONECKER_MAX_KAPPA, max_kappa)
        for kappa in range(1, top + 1):
            out.append((suite, "kronecker_counts", {"kappa": kappa}))
        for (n, m), top in config.SYMMETRY_SWEEP.items():
            if (max_n is not None and n > max_n) or (max_m is not None and m > max_m):
                continue
            kappa = top if max_kappa is None else min(top, max_kappa)
            out.append((suite, "index_symmetry", {"n": n, "m": m, "kappa": kappa}))
    elif suite == "faa":
        for n, m, kappa in _within(config.FAA_SWEEP, max_kappa, max_n, max_m):
            out.append((suite, "faa_agreement", {"n": n, "m": m, "kappa": kappa}))
            out.append((suite, "faa_extract", {"n": n, "m": m, "kappa": kappa}))
        top = config.BELL_MAX_KAPPA if max_kappa is None else min(config.BELL_MAX_KAPPA, max_kappa)
        for kappa in range(1, top + 1):
            out.append((suite, "bell_sum", {"kappa": kappa}))
        numeric_kappa = config.NUMERIC_MAX_KAPPA if max_kappa is None else min(config.NUMERIC_MAX_KAPPA, max_kappa)
        for n, m in config.NUMERIC_DIMS:
            if (max_n is not None and n > max_n) or (max_m is not None and m > max_m):
                continue
            for instance in range(config.NUMERIC_CASES_PER_DIMS):
                out.append(
                    (
                        suite,
                        "faa_numeric",
                        {"n": n, "m": m, "instance": instance, "seed": seed, "max_kappa": numeric_kappa},
                    )
                )
    else:
        for weight in range(1, config.LAGRANGE_MAX_WEIGHT + 1):
            out.append((suite, "lagrange", {"weight": weight}))
        for weight in range(1, config.ORBIT_MAX_WEIGHT + 1):
            out.append((suite, "orbits", {"weight": weight}))
        for size in range(1, config.SHUFFLE_MAX_SIZE + 1):
            out.append((suite, "shuffles", {"size": size}))
        for instance in range(config.TRANSVERSAL_SWAPS):
            out.append((suite, "transversal_swap", {"instance": instance, "seed": seed}))
    return out


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    records: Tuple[CaseRecord, ...]
    failures: Tuple[Dict[str, Any], ...]
    errata: Tuple[Dict[str, Any], ...]
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": len(self.records),
            "failures": [dict(f) for f in self.failures],
            "errata": [dict(e) for e in self.errata],
            "elapsed_ms": self.elapsed_ms,
        }


def run_suite(
    suite: str,
    *,
    max_kappa: Optional[int] = None,
    max_n: Optional[int] = None,
    max_m: Optional[int] = None,
    jobs: int = 1,
    seed: int = config.DEFAULT_SEED,
) -> VerificationReport:
    """Run every case of ``suite`` and collect failures and the errata ledger."""
    started = time.perf_counter()
    planned = plan_cases(suite, max_kappa=max_kappa, max_n=max_n, max_m=max_m, seed=seed)
    cases = [Case(case_id=i, suite=s, check=c, params=p) for i, (s, c, p) in enumerate(planned, start=1)]
    log.info("verify_start: suite=%s cases=%d jobs=%d seed=%d", suite, len(cases), jobs, seed)

    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_case, cases))
    else:
        outcomes = [run_case(c) for c in cases]

    failures = tuple(o.failure for o in outcomes if o.failure is not None)
    for f in failures:
        log.warning("case_failed: %s", json.dumps(f, sort_keys=True, default=str))
    errata = tuple(confirm_erratum(e) for e in KNOWN_ERRATA)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return VerificationReport(
        suite=suite,
        seed=seed,
        records=tuple(o.record for o in outcomes),
        failures=failures,
        errata=errata,
        elapsed_ms=elapsed_ms,
    )
