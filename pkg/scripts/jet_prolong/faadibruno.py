"""Multivariate Faà di Bruno formulas for ``h = f ∘ g``.

``f`` depends on ``y¹..yᵐ`` and every ``gˡ`` on ``x¹..xⁿ``. A term of
``h_{i1..iκ}`` is an integer times one derivative ``f_{l1..lH}`` times a
product of derivatives ``g^l_{k1..kλ}``. Four independent paths compute it:
the closed coset formula, the derivation recursion, set partitions, and
extraction from a prolongation coefficient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from .combinatorics import FAA, coset_transversal, stabilizer_order, weight_specs
from .config import get_logger
from .errors import DomainError, VerificationError
from .jetalgebra import CoefficientPolynomial, Dims, X_HEAD
from .polyoracle import RationalPoly, poly_compose, poly_diff, poly_eval

log = get_logger("faadibruno")


@dataclass(frozen=True)
class FSymbol:
    """Derivative of ``f`` along ``y^{l}`` for every ``l`` in ``y_indices``."""

    y_indices: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "y_indices", tuple(sorted(self.y_indices)))

    @property
    def order(self) -> int:
        return len(self.y_indices)

    def sort_key(self) -> tuple:
        return (len(self.y_indices), self.y_indices)


@dataclass(frozen=True)
class GSymbol:
    """Derivative of ``g^component`` along ``x^{k}`` for every ``k`` in ``x_indices``."""

    component: int
    x_indices: Tuple[int, ...]

    def __post_init__(self) -> None:
        xs = tuple(sorted(self.x_indices))
        if not xs:
            raise DomainError("a g-derivative needs at least one x-index")
        object.__setattr__(self, "x_indices", xs)

    @property
    def order(self) -> int:
        return len(self.x_indices)

    def extend(self, i: int) -> "GSymbol":
        return GSymbol(self.component, self.x_indices + (i,))

    def sort_key(self) -> tuple:
        return (len(self.x_indices), self.component, self.x_indices)


GProduct = Tuple[GSymbol, ...]


def _gproduct_key(gs: GProduct) -> tuple:
    return (sum(g.order for g in gs), tuple(g.sort_key() for g in gs))


@dataclass(frozen=True)
class FaaPolynomial:
    """Canonical sum of ``coefficient · f_L · ∏ g``, ordered by the g-product."""

    terms: Tuple[Tuple[FSymbol, GProduct, int], ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[FSymbol, GProduct, int]]:
        return iter(self.terms)

    def coefficient(self, f: FSymbol, gs: Iterable[GSymbol]) -> int:
        key = tuple(sorted(gs, key=GSymbol.sort_key))
        for f2, gs2, c in self.terms:
            if f2 == f and gs2 == key:
                return c
        return 0


class FaaAccumulator:
    """Running sum of Faà di Bruno terms; :meth:`freeze` canonicalizes and
    checks that every ``f``-index is paired with one ``g``-factor of the same
    component.
    """

    __slots__ = ("_terms",)

    def __init__(self) -> None:
        self._terms: Dict[Tuple[FSymbol, GProduct], int] = {}

    def add_term(self, coefficient: int, f: FSymbol, gs: Iterable[GSymbol]) -> None:
        if coefficient == 0:
            return
        key = (f, tuple(sorted(gs, key=GSymbol.sort_key)))
        self._terms[key] = self._terms.get(key, 0) + coefficient

    def freeze(self) -> FaaPolynomial:
        out: List[Tuple[FSymbol, GProduct, int]] = []
        for (f, gs), c in self._terms.items():
            if c == 0:
                continue
            if tuple(sorted(g.component for g in gs)) != f.y_indices:
                raise VerificationError(
                    "chain-rule pairing violated",
                    {"f": list(f.y_indices), "g_components": [g.component for g in gs]},
                )
            out.append((f, gs, c))
        out.sort(key=lambda t: (_gproduct_key(t[1]), t[0].sort_key()))
        return FaaPolynomial(tuple(out))


def _check_request(dims: Dims, kappa: int, i_tuple: Sequence[int]) -> Tuple[int, ...]:
    if kappa < 1:
        raise DomainError(f"kappa must be >= 1, got {kappa}")
    idx = tuple(i_tuple)
    if len(idx) != kappa:
        raise DomainError(f"expected {kappa} indices, got {len(idx)}")
    for i in idx:
        dims.check_x(i)
    return idx


def faa_closed(dims: Dims, kappa: int, i_tuple: Sequence[int]) -> FaaPolynomial:
    """Closed formula: over weight specs with ``W = κ``, dependent-index
    assignments and coset representatives, each group ``(e, ν)`` contributes
    ``g^{l_{e:ν}}`` differentiated by the ``i``'s at its block of positions.
    """
    idx = _check_request(dims, kappa, i_tuple)
    acc = FaaAccumulator()
    for spec in weight_specs(kappa, FAA):
        H = spec.height
        for sigma in coset_transversal(spec):
            xs = [tuple(idx[a - 1] for a in block) for block in sigma.blocks()]
            for ls in itertools.product(range(1, dims.m + 1), repeat=H):
                acc.add_term(1, FSymbol(ls), (GSymbol(l, x) for l, x in zip(ls, xs)))
    return acc.freeze()


def faa_inductive(dims: Dims, kappa: int, i_tuple: Sequence[int]) -> FaaPolynomial:
    """Derivation recursion: ``h_{i1} = Σ_l f_l g^l_{i1}``, then each further
    index acts by ``F_i(f_L) = Σ_l f_{L,l} g^l_i`` and ``F_i(g^l_K) = g^l_{K,i}``
    with Leibniz on products.
    """
    idx = _check_request(dims, kappa, i_tuple)
    components = range(1, dims.m + 1)
    acc = FaaAccumulator()
    for l in components:
        acc.add_term(1, FSymbol((l,)), (GSymbol(l, (idx[0],)),))
    h = acc.freeze()
    for i in idx[1:]:
        acc = FaaAccumulator()
        for f, gs, c in h:
            for l in components:
                acc.add_term(c, FSymbol(f.y_indices + (l,)), gs + (GSymbol(l, (i,)),))
            for pos, g in enumerate(gs):
                acc.add_term(c, f, gs[:pos] + (g.extend(i),) + gs[pos + 1:])
        h = acc.freeze()
    return h


def faa_partitions(dims: Dims, kappa: int, i_tuple: Sequence[int]) -> FaaPolynomial:
    """Set-partition oracle: every partition of the ``κ`` positions into
    blocks, every block paired with its own component of ``g``.
    """
    idx = _check_request(dims, kappa, i_tuple)
    acc = FaaAccumulator()
    for blocks in multiset_partitions(list(range(kappa))):
        xs = [tuple(idx[p] for p in block) for block in blocks]
        for ls in itertools.product(range(1, dims.m + 1), repeat=len(blocks)):
            acc.add_term(1, FSymbol(ls), (GSymbol(l, x) for l, x in zip(ls, xs)))
    return acc.freeze()


def faa_closed_scalar(kappa: int) -> FaaPolynomial:
    """One-variable formula ``Σ κ!/∏(λ_e!)^{μ_e} μ_e! · f_H ∏ (g_{λ_e})^{μ_e}``."""
    if kappa < 1:
        raise DomainError(f"kappa must be >= 1, got {kappa}")
    acc = FaaAccumulator()
    for spec in weight_specs(kappa, FAA):
        coefficient, rem = divmod(math.factorial(kappa), stabilizer_order(spec))
        if rem:
            raise VerificationError("Faà di Bruno multinomial is not an integer", {"spec": spec.pairs})
        acc.add_term(
            coefficient,
            FSymbol((1,) * spec.height),
            (GSymbol(1, (1,) * lam) for lam in spec.orders()),
        )
    return acc.freeze()


def extract_faa(prolongation: CoefficientPolynomial, kappa: int) -> FaaPolynomial:
    """Keep the weight-``κ`` monomials, drop every 𝒳-symbol, and read
    ``𝒴^j_{y^L}`` as ``f_L`` and ``y^l_K`` as ``g^l_K``.
    """
    acc = FaaAccumulator()
    for mono, combo in prolongation.terms:
        if mono.weight != kappa:
            continue
        gs = tuple(GSymbol(v.dep, v.indep) for v in mono.factors)
        for symbol, coefficient in combo:
            if symbol is None or symbol.head == X_HEAD:
                continue
            if symbol.x_indices:
                raise VerificationError(
                    "weight-kappa 𝒴-symbol still carries x-derivatives",
                    {"symbol": [symbol.head, symbol.index, list(symbol.x_indices), list(symbol.y_indices)]},
                )
            acc.add_term(coefficient, FSymbol(symbol.y_indices), gs)
    return acc.freeze()


def faa_coefficient_sum(p: FaaPolynomial) -> int:
    return sum(c for _, _, c in p.terms)


def faa_numeric_check(
    f: RationalPoly,
    g: Sequence[RationalPoly],
    kappa: int,
    i_tuple: Sequence[int],
    point: Sequence[Fraction | int],
    *,
    formula: Optional[FaaPolynomial] = None,
) -> Fraction:
    """``∂^κ(f∘g)/∂x^{i1}..∂x^{iκ}`` at ``point`` minus the closed formula
    evaluated there. Exact; the identity holds when the result is 0.
    """
    if len(g) != f.arity:
        raise DomainError(f"f takes {f.arity} arguments, got {len(g)}")
    dims = Dims(n=g[0].arity, m=f.arity)
    idx = _check_request(dims, kappa, i_tuple)

    h = poly_compose(f, g)
    for i in idx:
        h = poly_diff(h, i)
    lhs = poly_eval(h, point)

    if formula is None:
        formula = faa_closed(dims, kappa, idx)
    inner_point = [poly_eval(gl, point) for gl in g]
    f_values: Dict[FSymbol, Fraction] = {}
    g_values: Dict[GSymbol, Fraction] = {}

    def f_value(fs: FSymbol) -> Fraction:
        if fs not in f_values:
            p = f
            for l in fs.y_indices:
                p = poly_diff(p, l)
            f_values[fs] = poly_eval(p, inner_point)
        return f_values[fs]

    def g_value(gs: GSymbol) -> Fraction:
        if gs not in g_values:
            p = g[gs.component - 1]
            for i in gs.x_indices:
                p = poly_diff(p, i)
            g_values[gs] = poly_eval(p, point)
        return g_values[gs]

    rhs = Fraction(0)
    for fs, gs, c in formula:
        term = Fraction(c) * f_value(fs)
        for factor in gs:
            term *= g_value(factor)
        rhs += term
    residual = lhs - rhs
    if residual:
        log.warning("faa_numeric_residual: kappa=%d indices=%s residual=%s", kappa, idx, residual)
    return residual
