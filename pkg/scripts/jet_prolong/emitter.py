"""Rendering of computed formulas as LaTeX, plain text and canonical JSON.

Prolongation coefficients print one bracketed combination per monomial in
the canonical monomial order (``paper`` style) or fully expanded
(``compact`` style). With ``n = m = 1`` every index is redundant and the
one-variable notation is used: ``\\mathcal{Y}_{x^2y}``, ``(y_1)^2``,
``f_2 (g_1)^2``.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, List, Literal, Optional, Sequence, Tuple, Union

from .config import get_logger
from .errors import DomainError
from .faadibruno import FaaAccumulator, FaaPolynomial, FSymbol, GSymbol
from .jetalgebra import (
    CoefficientPolynomial,
    Combination,
    DerivativeSymbol,
    Dims,
    JetMonomial,
    JetVariable,
    SymbolKey,
    X_HEAD,
    Y_HEAD,
    canonicalize,
)

log = get_logger("emitter")

Style = Literal["paper", "compact"]
Kind = Literal["prolongation", "faa"]
Value = Union[CoefficientPolynomial, FaaPolynomial]

STYLES: Tuple[str, ...] = ("paper", "compact")


# --- Scalar detection ---


def _all_ones(values: Iterable[int]) -> bool:
    return all(v == 1 for v in values)


def is_scalar_value(value: Value) -> bool:
    """True when every index in ``value`` is 1, so the one-variable notation
    loses nothing."""
    if isinstance(value, FaaPolynomial):
        for f, gs, _ in value:
            if not _all_ones(f.y_indices):
                return False
            if not all(g.component == 1 and _all_ones(g.x_indices) for g in gs):
                return False
        return True
    for mono, combo in value.terms:
        if not all(v.dep == 1 and _all_ones(v.indep) for v in mono.factors):
            return False
        for symbol, _ in combo:
            if symbol is None:
                continue
            if symbol.index != 1 or not _all_ones(symbol.x_indices + symbol.y_indices):
                return False
    return True


def _scalar_mode(value: Value, dims: Optional[Dims]) -> bool:
    if dims is not None:
        return dims.is_scalar
    return is_scalar_value(value)


# --- Atoms ---


def _power(base: str, exponent: int) -> str:
    if exponent == 1:
        return base
    return f"({base})^{exponent}" if exponent < 10 else f"({base})^{{{exponent}}}"


def symbol_markup(symbol: DerivativeSymbol, *, scalar: bool, latex: bool = True) -> str:
    name = f"\\mathcal{{{symbol.head}}}" if latex else symbol.head
    if scalar:
        parts = []
        for letter, order in (("x", symbol.x_order), ("y", symbol.y_order)):
            if order == 1:
                parts.append(letter)
            elif order > 1:
                parts.append(f"{letter}^{order}" if order < 10 else f"{letter}^{{{order}}}")
        sub = "".join(parts)
        if not sub:
            return name
        return f"{name}_{sub}" if len(sub) == 1 else f"{name}_{{{sub}}}"
    sub = "".join(f"x^{{{k}}}" for k in symbol.x_indices) + "".join(f"y^{{{l}}}" for l in symbol.y_indices)
    head = f"{name}^{{{symbol.index}}}"
    return f"{head}_{{{sub}}}" if sub else head


def jet_variable_markup(var: JetVariable, *, scalar: bool) -> str:
    if scalar:
        return f"y_{var.order}" if var.order < 10 else f"y_{{{var.order}}}"
    return f"y^{{{var.dep}}}_{{{','.join(str(i) for i in var.indep)}}}"


def monomial_markup(mono: JetMonomial, *, scalar: bool) -> str:
    """Space-separated factors; the constant monomial renders as ``1``."""
    if not mono.factors:
        return "1"
    return " ".join(_power(jet_variable_markup(v, scalar=scalar), e) for v, e in mono.powers())


def fsymbol_markup(f: FSymbol, *, scalar: bool) -> str:
    if not f.y_indices:
        return "f"
    if scalar:
        return f"f_{f.order}" if f.order < 10 else f"f_{{{f.order}}}"
    return f"f_{{{','.join(str(l) for l in f.y_indices)}}}"


def gsymbol_markup(g: GSymbol, *, scalar: bool) -> str:
    if scalar:
        return f"g_{g.order}" if g.order < 10 else f"g_{{{g.order}}}"
    return f"g^{{{g.component}}}_{{{','.join(str(i) for i in g.x_indices)}}}"


def gproduct_markup(gs: Sequence[GSymbol], *, scalar: bool) -> str:
    grouped: List[Tuple[GSymbol, int]] = []
    for g in gs:
        if grouped and grouped[-1][0] == g:
            grouped[-1] = (g, grouped[-1][1] + 1)
        else:
            grouped.append((g, 1))
    return " ".join(_power(gsymbol_markup(g, scalar=scalar), e) for g, e in grouped)


# --- Sums ---


def _scaled(coefficient: int, body: str) -> str:
    """``c · body`` with unit coefficients elided."""
    if not body:
        return str(coefficient)
    if coefficient == 1:
        return body
    if coefficient == -1:
        return f"-{body}"
    return f"{coefficient}{body}" if body.startswith("\\") else f"{coefficient} {body}"


def _join(pieces: Sequence[str]) -> str:
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out


def combination_markup(combo: Combination, *, scalar: bool, latex: bool = True) -> str:
    pieces = []
    for symbol, coefficient in combo:
        body = "" if symbol is None else symbol_markup(symbol, scalar=scalar, latex=latex)
        pieces.append(_scaled(coefficient, body))
    return _join(pieces)


def _prolongation_pieces(p: CoefficientPolynomial, style: Style, scalar: bool, latex: bool) -> List[str]:
    pieces: List[str] = []
    for mono, combo in p.terms:
        mono_text = "" if not mono.factors else monomial_markup(mono, scalar=scalar)
        if style == "compact":
            for symbol, coefficient in combo:
                body = " ".join(
                    part
                    for part in (
                        "" if symbol is None else symbol_markup(symbol, scalar=scalar, latex=latex),
                        mono_text,
                    )
                    if part
                )
                pieces.append(_scaled(coefficient, body))
            continue
        if not mono_text:
            pieces.append(combination_markup(combo, scalar=scalar, latex=latex))
        elif len(combo) == 1 and combo[0][0] is None:
            pieces.append(_scaled(combo[0][1], mono_text))
        else:
            pieces.append(f"[{combination_markup(combo, scalar=scalar, latex=latex)}] {mono_text}")
    return pieces


def _faa_pieces(p: FaaPolynomial, scalar: bool) -> List[str]:
    pieces = []
    for f, gs, coefficient in p:
        body = " ".join(part for part in (fsymbol_markup(f, scalar=scalar), gproduct_markup(gs, scalar=scalar)) if part)
        pieces.append(_scaled(coefficient, body))
    return pieces


def _render(value: Value, style: str, dims: Optional[Dims], latex: bool) -> str:
    if style not in STYLES:
        raise DomainError(f"unknown style {style!r}, expected one of {STYLES}")
    scalar = _scalar_mode(value, dims)
    if isinstance(value, FaaPolynomial):
        pieces = _faa_pieces(value, scalar)
    elif isinstance(value, CoefficientPolynomial):
        pieces = _prolongation_pieces(value, style, scalar, latex)  # type: ignore[arg-type]
    else:
        raise DomainError(f"cannot render {type(value).__name__}")
    return _join(pieces)


def to_latex(value: Value, style: Style = "paper", *, dims: Optional[Dims] = None) -> str:
    """LaTeX source of ``value``; the zero value renders as ``0``."""
    return _render(value, style, dims, latex=True)


def to_text(value: Value, style: Style = "paper", *, dims: Optional[Dims] = None) -> str:
    """Plain-text form: the LaTeX layout with ``X``/``Y`` in place of
    ``\\mathcal`` heads."""
    return _render(value, style, dims, latex=False)


# --- JSON ---


def _symbol_json(symbol: SymbolKey) -> Optional[List[Any]]:
    if symbol is None:
        return None
    return [symbol.head, symbol.index, list(symbol.x_indices), list(symbol.y_indices)]


def to_payload(value: Value) -> List[dict]:
    """JSON-ready list in canonical term order."""
    if isinstance(value, FaaPolynomial):
        return [
            {"coeff": c, "f": list(f.y_indices), "g": [[g.component, list(g.x_indices)] for g in gs]}
            for f, gs, c in value
        ]
    return [
        {
            "coeff": [[_symbol_json(s), c] for s, c in combo],
            "monomial": [[v.dep, list(v.indep)] for v in mono.factors],
        }
        for mono, combo in value.terms
    ]


def to_json(value: Value) -> bytes:
    """Canonical UTF-8 JSON; byte-identical for equal values."""
    return json.dumps(to_payload(value), sort_keys=True, separators=(",", ":"), ensure_ascii=True).encode("utf-8")


def _symbol_from_json(raw: Optional[Sequence[Any]]) -> SymbolKey:
    if raw is None:
        return None
    head, index, xs, ys = raw
    if head not in (X_HEAD, Y_HEAD):
        raise DomainError(f"unknown symbol head {head!r} in JSON payload")
    return DerivativeSymbol(head, int(index), tuple(int(i) for i in xs), tuple(int(l) for l in ys))


def from_json(data: Union[bytes, str], kind: Kind = "prolongation") -> Value:
    """Parse a payload written by :func:`to_json` back to its canonical value."""
    payload = json.loads(data)
    if not isinstance(payload, list):
        raise DomainError("JSON payload must be a list of terms")
    if kind == "faa":
        acc = FaaAccumulator()
        for entry in payload:
            acc.add_term(
                int(entry["coeff"]),
                FSymbol(tuple(int(l) for l in entry["f"])),
                (GSymbol(int(c), tuple(int(i) for i in xs)) for c, xs in entry["g"]),
            )
        return acc.freeze()
    if kind != "prolongation":
        raise DomainError(f"unknown value kind {kind!r}")
    raw = []
    for entry in payload:
        mono = JetMonomial(tuple(JetVariable(int(dep), tuple(int(i) for i in idx)) for dep, idx in entry["monomial"]))
        for symbol, coefficient in entry["coeff"]:
            raw.append((int(coefficient), _symbol_from_json(symbol), mono))
    return canonicalize(raw)
