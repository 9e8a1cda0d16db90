"""Centralized configuration for the jet prolongation engine.

Holds logging configuration, output locations, the parallelism setting and
the verification budgets used by the sweep suites.
"""

from __future__ import annotations

import logging
import os
import sys
from pathlib import Path
from typing import Dict, Final, Optional, Tuple

# Package-wide logger base name
PACKAGE_LOGGER_NAME: Final[str] = "jet_prolong"

# Logging format and date format
LOG_FORMAT: Final[str] = (
    "%(asctime)s %(levelname)s [%(name)s] %(message)s"
)
DATE_FORMAT: Final[str] = "%Y-%m-%dT%H:%M:%SZ"


def configure_logging(debug: bool = False) -> None:
    """Initialize logging with INFO by default and DEBUG when requested.

    This function is idempotent: if handlers are already configured on the
    root logger, it updates the level and formatter instead of adding new
    handlers.
    """
    level = logging.DEBUG if debug else logging.INFO
    root = logging.getLogger()

    if root.handlers:
        root.setLevel(level)
        for handler in root.handlers:
            try:
                handler.setLevel(level)
            except Exception:
                pass
            handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    else:
        logging.basicConfig(
            level=level,
            format=LOG_FORMAT,
            datefmt=DATE_FORMAT,
            stream=sys.stderr,
        )

    # sympy and pyarrow are silent at INFO, keep them that way under --debug
    for noisy in ("sympy", "pyarrow", "concurrent.futures"):
        logging.getLogger(noisy).setLevel(logging.WARNING)


def get_logger(name: str | None = None) -> logging.Logger:
    """Get a namespaced logger under the package logger name."""
    full_name = PACKAGE_LOGGER_NAME if not name else f"{PACKAGE_LOGGER_NAME}.{name}"
    return logging.getLogger(full_name)


log = get_logger("config")

# Default output directory for exported tables and reports
DEFAULT_OUTPUT_DIR: Final[Path] = Path("data/jet_prolong")


def ensure_output_dir(path: str | Path | None = None) -> Path:
    """Ensure output directory exists and return it as a Path.

    If ``path`` is None, uses ``DEFAULT_OUTPUT_DIR``.
    """
    out = Path(path) if path is not None else DEFAULT_OUTPUT_DIR
    out.mkdir(parents=True, exist_ok=True)
    return out


# --- Parallelism ---

JOBS_ENV_VAR: Final[str] = "JETPROLONG_JOBS"


def resolve_jobs(cli_value: Optional[int] = None) -> int:
    """Return the worker count: CLI flag first, then ``JETPROLONG_JOBS``, else 1."""
    if cli_value is not None:
        return max(1, int(cli_value))
    raw = os.environ.get(JOBS_ENV_VAR)
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        log.warning("bad_jobs_env: %s=%r fallback=1", JOBS_ENV_VAR, raw)
        return 1
    if value < 1:
        log.warning("bad_jobs_env: %s=%r fallback=1", JOBS_ENV_VAR, raw)
        return 1
    return value


# --- Verification budgets ---

DEFAULT_SEED: Final[int] = 0

# (n, m) -> highest order checked by the closed-vs-inductive sweep
PROLONG_SWEEP: Final[Dict[Tuple[int, int], int]] = {
    (1, 1): 6,
    (2, 1): 4,
    (3, 1): 3,
    (1, 2): 4,
    (1, 3): 3,
    (2, 2): 3,
}

# (n, m) -> highest order for the Faà di Bruno agreement sweep
FAA_SWEEP: Final[Dict[Tuple[int, int], int]] = {
    (1, 1): 7,
    (2, 1): 5,
    (3, 1): 5,
    (1, 2): 5,
    (1, 3): 5,
    (2, 2): 4,
}

# (n, m) -> highest order for the shuffle-sum first-order comparison; m = 1 only
FIRST_ORDER_SWEEP: Final[Dict[Tuple[int, int], int]] = {
    (1, 1): 4,
    (2, 1): 4,
    (3, 1): 4,
}

KRONECKER_MAX_KAPPA: Final[int] = 6

# (n, m) -> order of the single index-symmetry case
SYMMETRY_SWEEP: Final[Dict[Tuple[int, int], int]] = {
    (2, 1): 4,
    (3, 1): 4,
    (2, 2): 4,
    (3, 2): 4,
}

NUMERIC_DIMS: Final[Tuple[Tuple[int, int], ...]] = ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2))
NUMERIC_CASES_PER_DIMS: Final[int] = 50
NUMERIC_MAX_KAPPA: Final[int] = 4

LAGRANGE_MAX_WEIGHT: Final[int] = 8
ORBIT_MAX_WEIGHT: Final[int] = 6
SHUFFLE_MAX_SIZE: Final[int] = 7
TRANSVERSAL_SWAPS: Final[int] = 100
BELL_MAX_KAPPA: Final[int] = 8
