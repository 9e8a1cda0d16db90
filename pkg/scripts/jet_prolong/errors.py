"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any, Dict, Optional


class JetProlongError(Exception):
    """Base class for all package errors."""


class DomainError(JetProlongError, ValueError):
    """An argument lies outside the domain of an operation (e.g. kappa = 0)."""


class DimensionError(DomainError):
    """An index is outside ``1..n`` or ``1..m`` for the active dimensions."""


class LinearityError(JetProlongError, ArithmeticError):
    """Two polynomials that both carry derivative symbols were multiplied."""


class EntryNotFoundError(JetProlongError, KeyError):
    """A prolongation table has no entry for the requested key."""


class VerificationError(JetProlongError):
    """A checked identity failed; ``details`` carries the evidence."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.details: Dict[str, Any] = dict(details or {})
