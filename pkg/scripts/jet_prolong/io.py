"""Writers for coefficient tables, verification cases and JSON reports."""

from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Union

from .config import ensure_output_dir, DEFAULT_OUTPUT_DIR
from .models import to_case_dataframe, to_coefficient_dataframe


def _rows_to_dicts(rows: Iterable[object]) -> list[dict]:
    out: list[dict] = []
    for r in rows:
        if is_dataclass(r):
            out.append(asdict(r))
        elif isinstance(r, dict):
            out.append(r)
        else:
            out.append(dict(r))  # attempt mapping-like
    return out


def _target(out_dir: Union[str, Path] | None, filename: str) -> Path:
    return Path(ensure_output_dir(out_dir or DEFAULT_OUTPUT_DIR)) / filename


def write_coefficients_parquet(
    rows: Iterable[object],
    *,
    out_dir: Union[str, Path] | None = None,
    filename: str = "coefficients.parquet",
) -> Path:
    """Write coefficient rows to Parquet with the stable schema."""
    df = to_coefficient_dataframe(_rows_to_dicts(rows))
    out_path = _target(out_dir, filename)
    df.to_parquet(out_path, index=False)
    return out_path


def write_coefficients_csv(
    rows: Iterable[object],
    *,
    out_dir: Union[str, Path] | None = None,
    filename: str = "coefficients.csv",
) -> Path:
    df = to_coefficient_dataframe(_rows_to_dicts(rows))
    out_path = _target(out_dir, filename)
    df.to_csv(out_path, index=False)
    return out_path


def write_cases_csv(
    cases: Iterable[object],
    *,
    out_dir: Union[str, Path] | None = None,
    filename: str = "verify_cases.csv",
) -> Path:
    df = to_case_dataframe(_rows_to_dicts(cases))
    out_path = _target(out_dir, filename)
    df.to_csv(out_path, index=False)
    return out_path


def write_report_json(
    report: Mapping[str, Any] | Dict[str, Any],
    *,
    out_dir: Union[str, Path] | None = None,
    filename: str = "verify_report.json",
) -> Path:
    """Write a verification report as indented, key-sorted JSON."""
    out_path = _target(out_dir, filename)
    out_path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return out_path
