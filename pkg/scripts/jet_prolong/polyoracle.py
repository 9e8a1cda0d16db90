"""Exact multivariate rational polynomials for the numeric identity checks.

Thin layer over ``sympy.Poly`` with domain ``QQ``: composition,
formal differentiation and evaluation at rational points. Variables are
numbered from 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

import sympy
from sympy import QQ

from .config import get_logger
from .errors import DomainError

log = get_logger("polyoracle")

Number = Union[int, Fraction]


def _gens(arity: int) -> Tuple[sympy.Symbol, ...]:
    if arity < 1:
        raise DomainError(f"polynomial arity must be >= 1, got {arity}")
    return tuple(sympy.symbols(f"z1:{arity + 1}"))


def _rational(value: Number) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with rational coefficients in ``arity`` variables."""

    arity: int
    poly: sympy.Poly

    @classmethod
    def from_terms(cls, arity: int, terms: Mapping[Tuple[int, ...], Number]) -> "RationalPoly":
        """Build from ``{exponent vector: coefficient}``; zero coefficients vanish."""
        gens = _gens(arity)
        rep: Dict[Tuple[int, ...], sympy.Rational] = {}
        for exps, coeff in terms.items():
            if len(exps) != arity:
                raise DomainError(f"exponent vector {exps} does not have arity {arity}")
            if coeff:
                rep[tuple(int(e) for e in exps)] = _rational(coeff)
        if not rep:
            return cls(arity, sympy.Poly(0, *gens, domain=QQ))
        return cls(arity, sympy.Poly.from_dict(rep, *gens, domain=QQ))

    @classmethod
    def variable(cls, arity: int, index: int) -> "RationalPoly":
        if not 1 <= index <= arity:
            raise DomainError(f"variable {index} outside 1..{arity}")
        exps = tuple(1 if v == index else 0 for v in range(1, arity + 1))
        return cls.from_terms(arity, {exps: 1})

    @classmethod
    def constant(cls, arity: int, value: Number) -> "RationalPoly":
        return cls.from_terms(arity, {(0,) * arity: value})

    @property
    def terms(self) -> Dict[Tuple[int, ...], Fraction]:
        return {
            tuple(exps): Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
            for exps, c in self.poly.as_dict().items()
            if c != 0
        }

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def total_degree(self) -> int:
        return 0 if self.poly.is_zero else int(self.poly.total_degree())


def poly_compose(f: RationalPoly, g: Sequence[RationalPoly]) -> RationalPoly:
    """``f(g¹, ..., gᵐ)`` as a polynomial in the variables of the ``g``'s."""
    if len(g) != f.arity:
        raise DomainError(f"f takes {f.arity} arguments, got {len(g)}")
    arities = {p.arity for p in g}
    if len(arities) != 1:
        raise DomainError(f"inner polynomials disagree on arity: {sorted(arities)}")
    arity = arities.pop()
    # xreplace substitutes all variables at once
    expr = f.poly.as_expr().xreplace({gen: p.poly.as_expr() for gen, p in zip(f.poly.gens, g)})
    return RationalPoly(arity, sympy.Poly(expr, *_gens(arity), domain=QQ))


def poly_diff(p: RationalPoly, var: int) -> RationalPoly:
    if not 1 <= var <= p.arity:
        raise DomainError(f"variable {var} outside 1..{p.arity}")
    return RationalPoly(p.arity, p.poly.diff(p.poly.gens[var - 1]))


def poly_eval(p: RationalPoly, point: Sequence[Number]) -> Fraction:
    if len(point) != p.arity:
        raise DomainError(f"point has {len(point)} coordinates, polynomial has arity {p.arity}")
    value = sympy.Rational(p.poly.as_expr().subs({gen: _rational(v) for gen, v in zip(p.poly.gens, point)}))
    return Fraction(int(value.p), int(value.q))


def random_poly(
    arity: int,
    rng: random.Random,
    *,
    max_degree: int = 4,
    max_terms: int = 4,
    max_numerator: int = 5,
    max_denominator: int = 3,
) -> RationalPoly:
    """Sparse random polynomial with small rational coefficients."""
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree)
        exps = [0] * arity
        for _ in range(degree):
            exps[rng.randrange(arity)] += 1
        numerator = rng.choice([v for v in range(-max_numerator, max_numerator + 1) if v])
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + Fraction(numerator, rng.randint(1, max_denominator))
    return RationalPoly.from_terms(arity, terms)
