"""Exact polynomial ring in jet variables with symbolic-derivative coefficients.

A value of the ring is a finite sum ``c * S * M`` where ``c`` is a Python
integer, ``S`` is either a :class:`DerivativeSymbol` (a partial derivative of
a vector-field component) or ``None`` for a pure integer, and ``M`` is a
:class:`JetMonomial`. Derivative symbols appear at most linearly in every
term. Every value is kept in one canonical form so that two formulas are equal
exactly when their canonical forms are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .config import get_logger
from .errors import DimensionError, DomainError, LinearityError

log = get_logger("jetalgebra")

X_HEAD = "X"
Y_HEAD = "Y"
# 𝒴-symbols print before 𝒳-symbols inside a bracket
_HEAD_RANK = {Y_HEAD: 0, X_HEAD: 1}


@dataclass(frozen=True)
class Dims:
    """Counts of independent (``n``) and dependent (``m``) variables."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise DomainError(f"dimensions must be positive, got n={self.n} m={self.m}")

    @property
    def is_scalar(self) -> bool:
        return self.n == 1 and self.m == 1

    def check_x(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise DimensionError(f"x-index {i} outside 1..{self.n}")
        return i

    def check_y(self, l: int) -> int:
        if not 1 <= l <= self.m:
            raise DimensionError(f"y-index {l} outside 1..{self.m}")
        return l


@dataclass(frozen=True)
class DerivativeSymbol:
    """A partial derivative of the component 𝒳^index or 𝒴^index.

    ``x_indices`` and ``y_indices`` are the differentiation slots, stored
    sorted. The order-0 symbol is the undifferentiated component.
    """

    head: str
    index: int
    x_indices: Tuple[int, ...] = ()
    y_indices: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.head not in _HEAD_RANK:
            raise DomainError(f"unknown symbol head {self.head!r}")
        xs = tuple(sorted(self.x_indices))
        ys = tuple(sorted(self.y_indices))
        if self.index < 1 or any(v < 1 for v in xs) or any(v < 1 for v in ys):
            raise DimensionError(f"non-positive index in symbol {self.head}{self.index} {xs} {ys}")
        object.__setattr__(self, "x_indices", xs)
        object.__setattr__(self, "y_indices", ys)

    @property
    def x_order(self) -> int:
        return len(self.x_indices)

    @property
    def y_order(self) -> int:
        return len(self.y_indices)

    @property
    def order(self) -> int:
        return len(self.x_indices) + len(self.y_indices)

    def differentiate_x(self, i: int) -> "DerivativeSymbol":
        return DerivativeSymbol(self.head, self.index, self.x_indices + (i,), self.y_indices)

    def differentiate_y(self, l: int) -> "DerivativeSymbol":
        return DerivativeSymbol(self.head, self.index, self.x_indices, self.y_indices + (l,))

    def check(self, dims: Dims) -> None:
        if self.head == X_HEAD:
            dims.check_x(self.index)
        else:
            dims.check_y(self.index)
        for i in self.x_indices:
            dims.check_x(i)
        for l in self.y_indices:
            dims.check_y(l)

    def sort_key(self) -> tuple:
        return (_HEAD_RANK[self.head], self.index, self.order, self.x_indices, self.y_indices)


@dataclass(frozen=True)
class JetVariable:
    """Pure jet coordinate ``y^dep_{indep}`` with sorted lower indices."""

    dep: int
    indep: Tuple[int, ...]

    def __post_init__(self) -> None:
        indep = tuple(sorted(self.indep))
        if not indep:
            raise DomainError("a jet variable needs at least one lower index")
        if self.dep < 1 or indep[0] < 1:
            raise DimensionError(f"non-positive index in jet variable y^{self.dep}_{indep}")
        object.__setattr__(self, "indep", indep)

    @property
    def order(self) -> int:
        return len(self.indep)

    def extend(self, i: int) -> "JetVariable":
        return JetVariable(self.dep, self.indep + (i,))

    def check(self, dims: Dims) -> None:
        dims.check_y(self.dep)
        for i in self.indep:
            dims.check_x(i)

    def sort_key(self) -> tuple:
        return (len(self.indep), self.dep, self.indep)


@dataclass(frozen=True)
class JetMonomial:
    """Multiset product of jet variables; the empty product is the constant 1."""

    factors: Tuple[JetVariable, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=JetVariable.sort_key)))

    @property
    def weight(self) -> int:
        return sum(v.order for v in self.factors)

    @property
    def height(self) -> int:
        return len(self.factors)

    def times(self, other: "JetMonomial") -> "JetMonomial":
        return JetMonomial(self.factors + other.factors)

    def powers(self) -> List[Tuple[JetVariable, int]]:
        """Factors grouped as ``(variable, exponent)`` in canonical order."""
        out: List[Tuple[JetVariable, int]] = []
        for v in self.factors:
            if out and out[-1][0] == v:
                out[-1] = (v, out[-1][1] + 1)
            else:
                out.append((v, 1))
        return out

    def orders(self) -> Tuple[int, ...]:
        return tuple(v.order for v in self.factors)

    def check(self, dims: Dims) -> None:
        for v in self.factors:
            v.check(dims)

    def sort_key(self) -> tuple:
        return (self.weight, tuple(v.sort_key() for v in self.factors))


ONE = JetMonomial()

SymbolKey = Optional[DerivativeSymbol]
Combination = Tuple[Tuple[SymbolKey, int], ...]
RawTerm = Tuple[int, SymbolKey, Union[JetMonomial, Iterable[JetVariable]]]


def symbol_sort_key(symbol: SymbolKey) -> tuple:
    """Sort key placing the integer part (``None``) before any symbol."""
    return (0,) if symbol is None else (1,) + symbol.sort_key()


@dataclass(frozen=True)
class CoefficientPolynomial:
    """Canonical polynomial: monomials in canonical order, each with its
    bracketed coefficient (a nonzero integer combination of symbols).
    """

    terms: Tuple[Tuple[JetMonomial, Combination], ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> List[JetMonomial]:
        return [mono for mono, _ in self.terms]

    def iter_terms(self) -> Iterator[Tuple[int, SymbolKey, JetMonomial]]:
        for mono, combo in self.terms:
            for symbol, coefficient in combo:
                yield coefficient, symbol, mono

    def as_dict(self) -> Dict[JetMonomial, Dict[SymbolKey, int]]:
        return {mono: dict(combo) for mono, combo in self.terms}

    def __add__(self, other: "CoefficientPolynomial") -> "CoefficientPolynomial":
        return add(self, other)

    def __sub__(self, other: "CoefficientPolynomial") -> "CoefficientPolynomial":
        return add(self, scale(other, -1))

    def __neg__(self) -> "CoefficientPolynomial":
        return scale(self, -1)

    def __mul__(self, other: Union[int, "CoefficientPolynomial"]) -> "CoefficientPolynomial":
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__


ZERO = CoefficientPolynomial()


class PolynomialAccumulator:
    """Mutable running sum of terms; :meth:`freeze` yields the canonical value."""

    __slots__ = ("_terms",)

    def __init__(self) -> None:
        self._terms: Dict[JetMonomial, Dict[SymbolKey, int]] = {}

    def add_term(self, coefficient: int, symbol: SymbolKey, monomial: JetMonomial) -> None:
        if coefficient == 0:
            return
        inner = self._terms.setdefault(monomial, {})
        inner[symbol] = inner.get(symbol, 0) + coefficient

    def add_polynomial(self, p: CoefficientPolynomial, factor: int = 1) -> None:
        for coefficient, symbol, mono in p.iter_terms():
            self.add_term(coefficient * factor, symbol, mono)

    def freeze(self) -> CoefficientPolynomial:
        out: List[Tuple[JetMonomial, Combination]] = []
        for mono in sorted(self._terms, key=JetMonomial.sort_key):
            combo = tuple(
                sorted(
                    ((s, c) for s, c in self._terms[mono].items() if c != 0),
                    key=lambda sc: symbol_sort_key(sc[0]),
                )
            )
            if combo:
                out.append((mono, combo))
        return CoefficientPolynomial(tuple(out))


# --- Construction ---


def canonicalize(
    raw: Union[CoefficientPolynomial, Iterable[RawTerm]],
    dims: Optional[Dims] = None,
) -> CoefficientPolynomial:
    """Bring an unordered list of ``(coefficient, symbol, monomial)`` terms to
    canonical form: sorted jet indices and factors, like terms merged, zeros
    dropped. With ``dims`` every index is range-checked.
    """
    if isinstance(raw, CoefficientPolynomial):
        raw = list(raw.iter_terms())
    acc = PolynomialAccumulator()
    for coefficient, symbol, mono in raw:
        if not isinstance(mono, JetMonomial):
            mono = JetMonomial(tuple(mono))
        if dims is not None:
            mono.check(dims)
            if symbol is not None:
                symbol.check(dims)
        acc.add_term(int(coefficient), symbol, mono)
    return acc.freeze()


def constant(value: int) -> CoefficientPolynomial:
    return canonicalize([(value, None, ONE)])


def symbol_poly(symbol: DerivativeSymbol, coefficient: int = 1) -> CoefficientPolynomial:
    return canonicalize([(coefficient, symbol, ONE)])


def jet_poly(dep: int, indep: Iterable[int], coefficient: int = 1) -> CoefficientPolynomial:
    return canonicalize([(coefficient, None, JetMonomial((JetVariable(dep, tuple(indep)),)))])


def scalar_symbol(head: str, x_order: int, y_order: int) -> DerivativeSymbol:
    """Symbol 𝒳_{x^a y^b} or 𝒴_{x^a y^b} for n = m = 1."""
    return DerivativeSymbol(head, 1, (1,) * x_order, (1,) * y_order)


def scalar_monomial(orders: Iterable[int]) -> JetMonomial:
    """Monomial y_{λ₁} y_{λ₂} ... for n = m = 1 from its jet orders."""
    return JetMonomial(tuple(JetVariable(1, (1,) * lam) for lam in orders))


# --- Ring operations ---


def add(p: CoefficientPolynomial, q: CoefficientPolynomial) -> CoefficientPolynomial:
    acc = PolynomialAccumulator()
    acc.add_polynomial(p)
    acc.add_polynomial(q)
    return acc.freeze()


def scale(p: CoefficientPolynomial, factor: int) -> CoefficientPolynomial:
    if factor == 0:
        return ZERO
    if factor == 1:
        return p
    return CoefficientPolynomial(
        tuple((mono, tuple((s, c * factor) for s, c in combo)) for mono, combo in p.terms)
    )


def mul(p: CoefficientPolynomial, q: CoefficientPolynomial) -> CoefficientPolynomial:
    """Product of two polynomials; at most one side may carry symbols per term."""
    acc = PolynomialAccumulator()
    for m1, c1 in p.terms:
        for m2, c2 in q.terms:
            mono = m1.times(m2)
            for s1, a in c1:
                for s2, b in c2:
                    if s1 is not None and s2 is not None:
                        raise LinearityError(f"symbol product {s1} * {s2} is not linear")
                    acc.add_term(a * b, s1 if s1 is not None else s2, mono)
    return acc.freeze()


def total_derivative(p: CoefficientPolynomial, i: int, dims: Dims) -> CoefficientPolynomial:
    """Total derivative D_i.

    On a symbol S: S_{x^i} + sum_l y^l_i S_{y^l}. On a jet variable: one more
    lower index i. Leibniz on products.
    """
    dims.check_x(i)
    first_order = [JetVariable(l, (i,)) for l in range(1, dims.m + 1)]
    acc = PolynomialAccumulator()
    for mono, combo in p.terms:
        factors = mono.factors
        for symbol, coefficient in combo:
            if symbol is not None:
                acc.add_term(coefficient, symbol.differentiate_x(i), mono)
                for l, var in enumerate(first_order, start=1):
                    acc.add_term(coefficient, symbol.differentiate_y(l), JetMonomial(factors + (var,)))
            for pos, var in enumerate(factors):
                rest = factors[:pos] + factors[pos + 1:]
                acc.add_term(coefficient, symbol, JetMonomial(rest + (var.extend(i),)))
    return acc.freeze()


def coefficient_of(p: CoefficientPolynomial, mono: JetMonomial) -> Dict[SymbolKey, int]:
    """Bracketed coefficient of ``mono`` in ``p``; empty when absent."""
    for candidate, combo in p.terms:
        if candidate == mono:
            return dict(combo)
    return {}
