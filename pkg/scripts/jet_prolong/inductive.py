"""Inductive prolongation: the ground-truth recursion.

    Y^j_{i1}          = D_{i1}(𝒴^j) - Σ_k D_{i1}(𝒳^k) · y^j_k
    Y^j_{i1..iλ}      = D_{iλ}(Y^j_{i1..iλ-1}) - Σ_k D_{iλ}(𝒳^k) · y^j_{i1..iλ-1,k}

Levels are built bottom-up; level λ only needs level λ-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from .config import get_logger
from .errors import DomainError, EntryNotFoundError, VerificationError
from .jetalgebra import (
    CoefficientPolynomial,
    DerivativeSymbol,
    Dims,
    X_HEAD,
    Y_HEAD,
    PolynomialAccumulator,
    jet_poly,
    mul,
    symbol_poly,
    total_derivative,
)

log = get_logger("inductive")

EntryKey = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class ProlongationTable:
    """All coefficients ``Y^j_{i1..iλ}`` for ``1 <= λ <= kappa``.

    Entries are keyed by ``(j, sorted index tuple)``.
    """

    dims: Dims
    kappa: int
    entries: Mapping[EntryKey, CoefficientPolynomial]

    def __iter__(self) -> Iterator[EntryKey]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, j: int, i_tuple: Sequence[int]) -> CoefficientPolynomial:
        return entry(self, j, i_tuple)


def _step(
    parent: CoefficientPolynomial,
    parent_indices: Tuple[int, ...],
    j: int,
    i: int,
    dims: Dims,
    dx: Mapping[Tuple[int, int], CoefficientPolynomial],
) -> CoefficientPolynomial:
    acc = PolynomialAccumulator()
    acc.add_polynomial(total_derivative(parent, i, dims))
    for k in range(1, dims.n + 1):
        acc.add_polynomial(mul(dx[(i, k)], jet_poly(j, parent_indices + (k,))), -1)
    return acc.freeze()


def prolong_inductive(dims: Dims, kappa: int, *, check_symmetry: bool = False) -> ProlongationTable:
    """Build the full prolongation table up to order ``kappa``.

    With ``check_symmetry`` every raw (unsorted) index tuple is computed along
    its own recursion path and compared with the sorted entry; a mismatch
    raises :class:`VerificationError`.
    """
    if kappa < 1:
        raise DomainError(f"kappa must be >= 1, got {kappa}")

    n, m = dims.n, dims.m
    # D_i(𝒳^k), shared by every step
    dx: Dict[Tuple[int, int], CoefficientPolynomial] = {
        (i, k): total_derivative(symbol_poly(DerivativeSymbol(X_HEAD, k)), i, dims)
        for i in range(1, n + 1)
        for k in range(1, n + 1)
    }
    y_fields = {j: symbol_poly(DerivativeSymbol(Y_HEAD, j)) for j in range(1, m + 1)}

    entries: Dict[EntryKey, CoefficientPolynomial] = {}
    raw: Dict[EntryKey, CoefficientPolynomial] = {}
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            value = _step(y_fields[j], (), j, i, dims, dx)
            entries[(j, (i,))] = value
            raw[(j, (i,))] = value
    log.debug("inductive_level: lambda=1 entries=%d", len(entries))

    for lam in range(2, kappa + 1):
        count = 0
        if check_symmetry:
            level: Dict[EntryKey, CoefficientPolynomial] = {}
            for (j, parent), value in raw.items():
                if len(parent) != lam - 1:
                    continue
                for i in range(1, n + 1):
                    level[(j, parent + (i,))] = _step(value, parent, j, i, dims, dx)
            for (j, tup), value in level.items():
                key = (j, tuple(sorted(tup)))
                if key not in entries:
                    entries[key] = value
                    count += 1
                elif entries[key] != value:
                    raise VerificationError(
                        "prolongation entry depends on index order",
                        {"j": j, "indices": list(tup), "sorted": list(key[1])},
                    )
            raw = level
        else:
            for (j, parent), value in list(entries.items()):
                if len(parent) != lam - 1:
                    continue
                # sorted tuples extend only with indices >= the last one
                for i in range(parent[-1], n + 1):
                    entries[(j, parent + (i,))] = _step(value, parent, j, i, dims, dx)
                    count += 1
        log.debug("inductive_level: lambda=%d entries=%d", lam, count)

    return ProlongationTable(dims=dims, kappa=kappa, entries=MappingProxyType(entries))


def entry(table: ProlongationTable, j: int, i_tuple: Sequence[int]) -> CoefficientPolynomial:
    """Stored polynomial for ``(j, i_tuple)``; index order does not matter."""
    key = (j, tuple(sorted(i_tuple)))
    try:
        return table.entries[key]
    except KeyError:
        raise EntryNotFoundError(
            f"no entry j={j} indices={tuple(i_tuple)} in table dims=({table.dims.n},{table.dims.m}) kappa={table.kappa}"
        ) from None


def index_tuples(n: int, length: int, *, sorted_only: bool = False) -> Iterator[Tuple[int, ...]]:
    """All index tuples of a given length over ``1..n``."""
    if sorted_only:
        return itertools.combinations_with_replacement(range(1, n + 1), length)
    return itertools.product(range(1, n + 1), repeat=length)
