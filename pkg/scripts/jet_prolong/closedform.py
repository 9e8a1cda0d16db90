"""Closed combinatorial formulas for prolongation coefficients.

For every weight spec the coefficient is a sum over dependent-index
assignments ``l`` (one per group), transversal elements ``σ`` and shuffles
``τ``. Kronecker symbols are contracted while enumerating: in the 𝒴-part the
slot at position ``α`` receives ``i_{τ(α)}`` for ``α = 1..W``; in the 𝒳-part
only positions ``1..W-1`` are pinned and the slot at position ``W`` runs
freely over ``1..n`` while its group's ``l`` is forced to ``j``.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .combinatorics import (
    PROLONGATION,
    TransversalElement,
    WeightSpec,
    coset_transversal,
    shuffles,
    stabilizer_order,
    weight_specs,
)
from .config import get_logger
from .errors import DomainError, VerificationError
from .jetalgebra import (
    CoefficientPolynomial,
    DerivativeSymbol,
    Dims,
    JetMonomial,
    JetVariable,
    ONE,
    PolynomialAccumulator,
    SymbolKey,
    X_HEAD,
    Y_HEAD,
    add,
    coefficient_of,
    scalar_monomial,
    scalar_symbol,
)

log = get_logger("closedform")

TransversalFn = Callable[[WeightSpec], List[TransversalElement]]


@dataclass(frozen=True)
class ClosedFormRequest:
    """Which coefficient ``Y^j_{i1..iκ}`` to evaluate."""

    dims: Dims
    kappa: int
    j: int
    i_tuple: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "i_tuple", tuple(self.i_tuple))
        if self.kappa < 1:
            raise DomainError(f"kappa must be >= 1, got {self.kappa}")
        if len(self.i_tuple) != self.kappa:
            raise DomainError(f"expected {self.kappa} indices, got {len(self.i_tuple)}")
        self.dims.check_y(self.j)
        for i in self.i_tuple:
            self.dims.check_x(i)


@dataclass(frozen=True)
class KroneckerTerm:
    """One summand of a weight-spec contribution before contraction.

    ``pins`` pairs a slot ``s`` with the position ``α`` of the factor
    ``δ^{k_s}_{i_α}``. ``rest`` holds the positions left on the symbol.
    ``free_slot`` is set on 𝒳-terms only.
    """

    head: str
    pins: Tuple[Tuple[int, int], ...]
    rest: Tuple[int, ...]
    free_slot: Optional[int] = None

    @property
    def deltas(self) -> int:
        return len(self.pins)


def kronecker_terms(
    kappa: int,
    spec: WeightSpec,
    elements: Optional[Sequence[TransversalElement]] = None,
) -> Iterator[KroneckerTerm]:
    """Summands of one weight spec: 𝒴-terms first, then 𝒳-terms.

    In a 𝒴-term the slot at position ``α`` is pinned to ``i_{τ(α)}`` for
    ``α = 1..W``. In an 𝒳-term only ``α < W`` is pinned.
    """
    if elements is None:
        elements = coset_transversal(spec)
    W = spec.weight
    if W <= kappa:
        for tau in shuffles(kappa, W):
            for sigma in elements:
                pins = tuple((s, tau.head[a - 1]) for s, a in enumerate(sigma.images))
                yield KroneckerTerm(Y_HEAD, pins, tau.tail)
    for tau in shuffles(kappa, W - 1):
        for sigma in elements:
            pins = tuple((s, tau.head[a - 1]) for s, a in enumerate(sigma.images) if a < W)
            yield KroneckerTerm(X_HEAD, pins, tau.tail, sigma.positions()[W - 1])


def _accumulate_spec(
    req: ClosedFormRequest,
    spec: WeightSpec,
    elements: Sequence[TransversalElement],
    acc: PolynomialAccumulator,
) -> None:
    n, m = req.dims.n, req.dims.m
    j, idx = req.j, req.i_tuple
    H = spec.height
    group_slots = spec.group_slots()
    slot_groups = spec.slot_groups()
    l_range = range(1, m + 1)

    def monomial(k: Sequence[int], ls: Sequence[int]) -> JetMonomial:
        return JetMonomial(
            tuple(JetVariable(ls[g], tuple(k[s] for s in slots)) for g, slots in enumerate(group_slots))
        )

    for term in kronecker_terms(req.kappa, spec, elements):
        k = [0] * spec.weight
        for s, alpha in term.pins:
            k[s] = idx[alpha - 1]
        rest_x = tuple(idx[a - 1] for a in term.rest)

        if term.free_slot is None:
            for ls in itertools.product(l_range, repeat=H):
                acc.add_term(1, DerivativeSymbol(Y_HEAD, j, rest_x, ls), monomial(k, ls))
            continue

        # the free slot carries δ^j_l of its group
        free_group = slot_groups[term.free_slot]
        for k_free in range(1, n + 1):
            k[term.free_slot] = k_free
            for others in itertools.product(l_range, repeat=H - 1):
                ls = others[:free_group] + (j,) + others[free_group:]
                acc.add_term(-1, DerivativeSymbol(X_HEAD, k_free, rest_x, others), monomial(k, ls))


def _spec_contribution(req: ClosedFormRequest, spec: WeightSpec) -> CoefficientPolynomial:
    acc = PolynomialAccumulator()
    _accumulate_spec(req, spec, coset_transversal(spec), acc)
    return acc.freeze()


def prolongation_closed(
    req: ClosedFormRequest,
    *,
    jobs: int = 1,
    transversal: Optional[TransversalFn] = None,
) -> CoefficientPolynomial:
    """Evaluate ``Y^j_{i1..iκ}`` by the general closed formula.

    ``jobs > 1`` spreads weight specs over worker processes and merges the
    partial sums. ``transversal`` replaces the canonical coset representatives
    (any transversal gives the same polynomial); it forces serial evaluation.
    """
    specs = weight_specs(req.kappa, PROLONGATION)
    constant = DerivativeSymbol(Y_HEAD, req.j, req.i_tuple)

    if jobs > 1 and transversal is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_spec_contribution, [req] * len(specs), specs))
        total = CoefficientPolynomial(((ONE, ((constant, 1),)),))
        for part in parts:
            total = add(total, part)
        return total

    pick = transversal or coset_transversal
    acc = PolynomialAccumulator()
    acc.add_term(1, constant, ONE)
    for spec in specs:
        _accumulate_spec(req, spec, pick(spec), acc)
        log.debug("closed_spec: kappa=%d spec=%s", req.kappa, spec.pairs)
    return acc.freeze()


# --- Scalar path (n = m = 1) ---


def scalar_coefficients(kappa: int, spec: WeightSpec) -> Tuple[int, int]:
    """Integer multipliers of 𝒴_{x^{κ-W} y^H} and 𝒳_{x^{κ-W+1} y^{H-1}}.

    𝒴: κ(κ-1)...(κ-W+1) / ∏(λ_e!)^{μ_e} μ_e!
    𝒳: -κ(κ-1)...(κ-W+2) · W / ∏(λ_e!)^{μ_e} μ_e!
    """
    W = spec.weight
    denominator = stabilizer_order(spec)
    y_num = math.perm(kappa, W) if W <= kappa else 0
    x_num = math.perm(kappa, W - 1) * W
    y_coeff, y_rem = divmod(y_num, denominator)
    x_coeff, x_rem = divmod(x_num, denominator)
    if y_rem or x_rem:
        raise VerificationError(
            "closed-form multinomial is not an integer",
            {"kappa": kappa, "spec": spec.pairs, "y": [y_num, denominator], "x": [x_num, denominator]},
        )
    return y_coeff, -x_coeff


def prolongation_closed_scalar(kappa: int) -> CoefficientPolynomial:
    """``Y_κ`` for n = m = 1 straight from the multinomial coefficients,
    without enumerating permutations.
    """
    if kappa < 1:
        raise DomainError(f"kappa must be >= 1, got {kappa}")
    acc = PolynomialAccumulator()
    acc.add_term(1, scalar_symbol(Y_HEAD, kappa, 0), ONE)
    for spec in weight_specs(kappa, PROLONGATION):
        W, H = spec.weight, spec.height
        mono = scalar_monomial(spec.orders())
        y_coeff, x_coeff = scalar_coefficients(kappa, spec)
        if y_coeff:
            acc.add_term(y_coeff, scalar_symbol(Y_HEAD, kappa - W, H), mono)
        acc.add_term(x_coeff, scalar_symbol(X_HEAD, kappa - W + 1, H - 1), mono)
    return acc.freeze()


def binomial_slice(kappa: int) -> Dict[int, Dict[SymbolKey, int]]:
    """Coefficients of ``(y_1)^λ`` for ``λ = 1..κ+1``, checked against
    ``C(κ,λ) 𝒴_{x^{κ-λ} y^λ} - C(κ,λ-1) 𝒳_{x^{κ-λ+1} y^{λ-1}}`` and the top
    term ``-𝒳_{y^κ}``.
    """
    poly = prolongation_closed_scalar(kappa)
    out: Dict[int, Dict[SymbolKey, int]] = {}
    mismatches = []
    for lam in range(1, kappa + 2):
        got = coefficient_of(poly, scalar_monomial((1,) * lam))
        expected: Dict[SymbolKey, int] = {
            scalar_symbol(X_HEAD, kappa - lam + 1, lam - 1): -math.comb(kappa, lam - 1),
        }
        if lam <= kappa:
            expected[scalar_symbol(Y_HEAD, kappa - lam, lam)] = math.comb(kappa, lam)
        if got != expected:
            mismatches.append({"lambda": lam, "got": _combo_repr(got), "expected": _combo_repr(expected)})
        out[lam] = got
    if mismatches:
        raise VerificationError("binomial slice has the wrong shape", {"kappa": kappa, "mismatches": mismatches})
    return out


# --- Kronecker bookkeeping ---


@dataclass(frozen=True)
class KroneckerCount:
    """Summand and δ tally of one (weight spec, head) pair."""

    spec: Tuple[Tuple[int, int], ...]
    head: str
    x_order: int
    y_order: int
    terms: int
    deltas: Tuple[int, ...]


def kronecker_counts(kappa: int) -> List[KroneckerCount]:
    """Count the summands of every weight spec and the δ's each carries.

    Every summand must use each index ``i_1..i_κ`` exactly once, either in a δ
    or on the symbol, so a symbol of x-order ``γ`` carries ``κ - γ`` δ's. The
    number of summands must equal the integer multiplier of the scalar case.
    """
    if kappa < 1:
        raise DomainError(f"kappa must be >= 1, got {kappa}")
    everything = tuple(range(1, kappa + 1))
    out: List[KroneckerCount] = []
    bad: List[Dict[str, object]] = []
    for spec in weight_specs(kappa, PROLONGATION):
        tally: Dict[str, List[KroneckerTerm]] = {Y_HEAD: [], X_HEAD: []}
        for term in kronecker_terms(kappa, spec):
            used = tuple(sorted([alpha for _, alpha in term.pins] + list(term.rest)))
            if used != everything:
                bad.append({"spec": spec.pairs, "head": term.head, "pins": term.pins, "rest": term.rest})
            tally[term.head].append(term)
        y_coeff, x_coeff = scalar_coefficients(kappa, spec)
        W, H = spec.weight, spec.height
        for head, x_order, y_order, expected in (
            (Y_HEAD, kappa - W, H, y_coeff),
            (X_HEAD, kappa - W + 1, H - 1, -x_coeff),
        ):
            terms = tally[head]
            if not terms and not expected:
                continue
            count = KroneckerCount(
                spec=spec.pairs,
                head=head,
                x_order=x_order,
                y_order=y_order,
                terms=len(terms),
                deltas=tuple(sorted({t.deltas for t in terms})),
            )
            rests = {len(t.rest) for t in terms}
            if count.deltas != (kappa - x_order,) or rests != {x_order} or count.terms != expected:
                bad.append(
                    {
                        "spec": spec.pairs,
                        "head": head,
                        "terms": count.terms,
                        "expected": expected,
                        "deltas": list(count.deltas),
                        "x_order": x_order,
                    }
                )
            out.append(count)
    if bad:
        raise VerificationError("Kronecker bookkeeping is off", {"kappa": kappa, "entries": bad[:10]})
    log.debug("kronecker_counts: kappa=%d entries=%d", kappa, len(out))
    return out


# --- Sparse families for κ >= 4 ---

EDGE_FAMILY_MIN_KAPPA = 4


def edge_family_monomials(kappa: int) -> Dict[str, JetMonomial]:
    """The nine named monomials of ``Y_κ`` near the two ends of the weight range."""
    return {
        "1": ONE,
        "y_1": scalar_monomial((1,)),
        "y_2": scalar_monomial((2,)),
        "y_{k-2}": scalar_monomial((kappa - 2,)),
        "y_{k-1}": scalar_monomial((kappa - 1,)),
        "y_1 y_{k-1}": scalar_monomial((1, kappa - 1)),
        "y_2 y_{k-1}": scalar_monomial((2, kappa - 1)),
        "y_k": scalar_monomial((kappa,)),
        "y_1 y_k": scalar_monomial((1, kappa)),
    }


def edge_family_expected(kappa: int) -> Dict[str, Dict[SymbolKey, int]]:
    """Closed binomial expressions of the nine edge-family coefficients."""
    if kappa < EDGE_FAMILY_MIN_KAPPA:
        raise DomainError(f"edge family needs kappa >= {EDGE_FAMILY_MIN_KAPPA}, got {kappa}")
    Y = lambda a, b: scalar_symbol(Y_HEAD, a, b)  # noqa: E731
    X = lambda a, b: scalar_symbol(X_HEAD, a, b)  # noqa: E731
    c = math.comb
    return {
        "1": {Y(kappa, 0): 1},
        "y_1": {Y(kappa - 1, 1): kappa, X(kappa, 0): -1},
        "y_2": {Y(kappa - 2, 1): c(kappa, 2), X(kappa - 1, 0): -kappa},
        "y_{k-2}": {Y(2, 1): c(kappa, 2), X(3, 0): -c(kappa, 3)},
        "y_{k-1}": {Y(1, 1): kappa, X(2, 0): -c(kappa, 2)},
        "y_1 y_{k-1}": {Y(0, 2): kappa, X(1, 1): -kappa * kappa},
        "y_2 y_{k-1}": {X(0, 1): -c(kappa + 1, 2)},
        "y_k": {Y(0, 1): 1, X(1, 0): -kappa},
        "y_1 y_k": {X(0, 1): -(kappa + 1)},
    }


def edge_family_slice(kappa: int, poly: Optional[CoefficientPolynomial] = None) -> Dict[str, Dict[SymbolKey, int]]:
    """Read the nine edge-family coefficients off ``Y_κ`` and check them."""
    expected = edge_family_expected(kappa)
    if poly is None:
        poly = prolongation_closed_scalar(kappa)
    got = {name: coefficient_of(poly, mono) for name, mono in edge_family_monomials(kappa).items()}
    bad = [name for name in expected if got[name] != expected[name]]
    if bad:
        raise VerificationError(
            "edge-family coefficients differ from their binomial expressions",
            {"kappa": kappa, "monomials": bad},
        )
    return got


def first_order_slice(poly: CoefficientPolynomial) -> CoefficientPolynomial:
    """Part of ``poly`` whose monomials use first-order jet variables only."""
    return CoefficientPolynomial(
        tuple((mono, combo) for mono, combo in poly.terms if all(v.order == 1 for v in mono.factors))
    )


def _first_order_monomial(ks: Sequence[int]) -> JetMonomial:
    return JetMonomial(tuple(JetVariable(1, (k,)) for k in ks))


def first_order_closed(dims: Dims, kappa: int, i_tuple: Sequence[int]) -> CoefficientPolynomial:
    """First-order part of ``Y_{i1..iκ}`` for one dependent variable.

    Summed straight over shuffles with no coset transversal::

        𝒴_{x^{i1..iκ}}
          + Σ_q Σ_{τ} 𝒴_{x^{i_τ(q+1)..i_τ(κ)} y^q} y_{i_τ(1)}..y_{i_τ(q)}
          - Σ_q Σ_{τ} Σ_k 𝒳^k_{x^{i_τ(q)..i_τ(κ)} y^{q-1}} y_{i_τ(1)}..y_{i_τ(q-1)} y_k
    """
    if dims.m != 1:
        raise DomainError(f"first-order closed form needs one dependent variable, got m={dims.m}")
    req = ClosedFormRequest(dims, kappa, 1, tuple(i_tuple))
    idx = req.i_tuple
    acc = PolynomialAccumulator()
    acc.add_term(1, DerivativeSymbol(Y_HEAD, 1, idx), ONE)
    for q in range(1, kappa + 2):
        if q <= kappa:
            for tau in shuffles(kappa, q):
                ks = tuple(idx[a - 1] for a in tau.head)
                rest = tuple(idx[a - 1] for a in tau.tail)
                acc.add_term(1, DerivativeSymbol(Y_HEAD, 1, rest, (1,) * q), _first_order_monomial(ks))
        for tau in shuffles(kappa, q - 1):
            pinned = tuple(idx[a - 1] for a in tau.head)
            rest = tuple(idx[a - 1] for a in tau.tail)
            for k in range(1, dims.n + 1):
                acc.add_term(
                    -1,
                    DerivativeSymbol(X_HEAD, k, rest, (1,) * (q - 1)),
                    _first_order_monomial(pinned + (k,)),
                )
    return acc.freeze()


def _combo_repr(combo: Dict[SymbolKey, int]) -> List[List[object]]:
    return [
        [None if s is None else [s.head, s.index, list(s.x_indices), list(s.y_indices)], c]
        for s, c in combo.items()
    ]
