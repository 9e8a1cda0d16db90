"""Row models and tabular schemas for exported formulas and verification cases."""

from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd
from pandas import DataFrame

from .emitter import fsymbol_markup, gproduct_markup, monomial_markup, symbol_markup
from .faadibruno import FaaPolynomial
from .jetalgebra import CoefficientPolynomial, Dims


@dataclass(frozen=True)
class CoefficientRow:
    """One row per (monomial × symbol) of a computed formula.

    ``coefficient`` is a decimal string; the integers are unbounded.
    """

    kind: str
    engine: str
    n: int
    m: int
    kappa: int
    j: Optional[int]
    indices: str
    monomial: str
    weight: int
    height: int
    symbol: str
    head: str
    x_order: int
    y_order: int
    coefficient: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class CaseRecord:
    """Outcome of one verification case."""

    case_id: int
    suite: str
    check: str
    n: Optional[int]
    m: Optional[int]
    kappa: Optional[int]
    input: str
    passed: bool
    engine_a: Optional[str] = None
    engine_b: Optional[str] = None
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def explode_polynomial(
    value: Union[CoefficientPolynomial, FaaPolynomial],
    *,
    engine: str,
    dims: Dims,
    kappa: int,
    i_tuple: Sequence[int],
    j: Optional[int] = None,
) -> List[CoefficientRow]:
    """Flatten a prolongation coefficient or a Faà di Bruno formula into rows."""
    scalar = dims.is_scalar
    common = dict(
        engine=engine,
        n=dims.n,
        m=dims.m,
        kappa=kappa,
        indices=",".join(str(i) for i in i_tuple),
    )
    rows: List[CoefficientRow] = []
    if isinstance(value, FaaPolynomial):
        for f, gs, c in value:
            rows.append(
                CoefficientRow(
                    kind="faa",
                    j=None,
                    monomial=gproduct_markup(gs, scalar=scalar),
                    weight=sum(g.order for g in gs),
                    height=len(gs),
                    symbol=fsymbol_markup(f, scalar=scalar),
                    head="f",
                    x_order=0,
                    y_order=f.order,
                    coefficient=str(c),
                    **common,
                )
            )
        return rows

    for mono, combo in value.terms:
        mono_text = monomial_markup(mono, scalar=scalar)
        for symbol, c in combo:
            rows.append(
                CoefficientRow(
                    kind="prolongation",
                    j=j,
                    monomial=mono_text,
                    weight=mono.weight,
                    height=mono.height,
                    symbol="1" if symbol is None else symbol_markup(symbol, scalar=scalar, latex=False),
                    head="1" if symbol is None else symbol.head,
                    x_order=0 if symbol is None else symbol.x_order,
                    y_order=0 if symbol is None else symbol.y_order,
                    coefficient=str(c),
                    **common,
                )
            )
    return rows


# ---- Schema utilities ----

COEFFICIENT_COLUMNS: List[str] = [
    "kind",
    "engine",
    "n",
    "m",
    "kappa",
    "j",
    "indices",
    "monomial",
    "weight",
    "height",
    "symbol",
    "head",
    "x_order",
    "y_order",
    "coefficient",
]

COEFFICIENT_DTYPES: Dict[str, Any] = {
    "kind": "string",
    "engine": "string",
    "n": "Int64",
    "m": "Int64",
    "kappa": "Int64",
    "j": "Int64",
    "indices": "string",
    "monomial": "string",
    "weight": "Int64",
    "height": "Int64",
    "symbol": "string",
    "head": "string",
    "x_order": "Int64",
    "y_order": "Int64",
    "coefficient": "string",
}

CASE_COLUMNS: List[str] = [
    "case_id",
    "suite",
    "check",
    "n",
    "m",
    "kappa",
    "input",
    "passed",
    "engine_a",
    "engine_b",
    "detail",
]

CASE_DTYPES: Dict[str, Any] = {
    "case_id": "Int64",
    "suite": "string",
    "check": "string",
    "n": "Int64",
    "m": "Int64",
    "kappa": "Int64",
    "input": "string",
    "passed": "boolean",
    "engine_a": "string",
    "engine_b": "string",
    "detail": "string",
}


def _to_frame(rows: Iterable[Any], columns: List[str], dtypes: Dict[str, Any]) -> DataFrame:
    dict_rows: List[Dict[str, Any]] = []
    for r in rows:
        if isinstance(r, (CoefficientRow, CaseRecord)):
            dict_rows.append(r.to_dict())
        else:
            dict_rows.append(dict(r))

    df = pd.DataFrame(dict_rows)
    for col in columns:
        if col not in df.columns:
            df[col] = pd.NA
    df = df[columns]

    for col, dtype in dtypes.items():
        if dtype == "Int64":
            df[col] = pd.to_numeric(df[col], errors="coerce").astype("Int64")
        elif dtype == "boolean":
            df[col] = df[col].astype("boolean")
        else:
            df[col] = df[col].astype(dtype)
    return df


def to_coefficient_dataframe(rows: Iterable[Dict[str, Any] | CoefficientRow]) -> DataFrame:
    """DataFrame with stable column order and pandas nullable dtypes.

    Missing columns are added as NA.
    """
    return _to_frame(rows, COEFFICIENT_COLUMNS, COEFFICIENT_DTYPES)


def to_case_dataframe(rows: Iterable[Dict[str, Any] | CaseRecord]) -> DataFrame:
    return _to_frame(rows, CASE_COLUMNS, CASE_DTYPES)
