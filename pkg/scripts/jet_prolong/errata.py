"""Known misprints in the published reference tables.

Centralized and data-only. Each entry pins one coefficient by its monomial
and lists the printed value next to the value both engines compute, both
read on the scalar (``n = m = 1``) reduction of the table. Reports carry the
ledger as information; a misprint is never a failure.

A coefficient term is ``(head, x_order, y_order, coefficient)``. Heads are
``"X"``/``"Y"`` for prolongations and ``"f"`` (with ``y_order`` the order of
the ``f``-derivative) for Faà di Bruno tables.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Dict, Literal, Tuple

Term = Tuple[str, int, int, int]


@dataclass(frozen=True)
class Erratum:
    """One misprinted coefficient.

    ``monomial`` holds the jet orders of ``∏ y_λ`` (or the ``g``-orders of
    ``∏ g_λ``). ``monomial_missing`` marks a bracket printed without its
    monomial. ``index_misprint`` marks a wrong free or Kronecker index that
    disappears on the scalar reduction; ``note`` gives the correction. In
    both cases ``printed`` equals ``computed``.
    """

    key: str
    kind: Literal["prolongation", "faa"]
    table: str
    kappa: int
    monomial: Tuple[int, ...]
    printed: Tuple[Term, ...]
    computed: Tuple[Term, ...]
    monomial_missing: bool = False
    index_misprint: bool = False
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["monomial"] = list(self.monomial)
        out["printed"] = [list(t) for t in self.printed]
        out["computed"] = [list(t) for t in self.computed]
        return out


KNOWN_ERRATA: Tuple[Erratum, ...] = (
    Erratum(
        key="y1-square",
        kind="prolongation",
        table="Y_1",
        kappa=1,
        monomial=(1, 1),
        printed=(("Y", 0, 1, -1),),
        computed=(("X", 0, 1, -1),),
        note="head of the (y_1)^2 coefficient",
    ),
    Erratum(
        key="y5-top",
        kind="prolongation",
        table="Y_5",
        kappa=5,
        monomial=(5,),
        printed=(("Y", 0, 1, 1), ("X", 0, 1, -5)),
        computed=(("Y", 0, 1, 1), ("X", 1, 0, -5)),
        note="X-derivative of y_5 is along x, not y",
    ),
    Erratum(
        key="y6-top",
        kind="prolongation",
        table="Y_6",
        kappa=6,
        monomial=(6,),
        printed=(("Y", 0, 1, 1), ("X", 0, 1, -6)),
        computed=(("Y", 0, 1, 1), ("X", 1, 0, -6)),
        note="X-derivative of y_6 is along x, not y",
    ),
    Erratum(
        key="y6-y1cube-y2square",
        kind="prolongation",
        table="Y_6",
        kappa=6,
        monomial=(1, 1, 1, 2, 2),
        printed=(("X", 0, 4, -210),),
        computed=(("X", 0, 4, -105),),
        note="multinomial 6!*7/(3!*2!*2!^2)",
    ),
    Erratum(
        key="edge-y2-ykm1",
        kind="prolongation",
        table="edge family (shown at kappa=4)",
        kappa=4,
        monomial=(2, 3),
        printed=(("X", 0, 1, -6),),
        computed=(("X", 0, 1, -10),),
        note="printed -C(k,2), computed -C(k+1,2)",
    ),
    Erratum(
        key="edge-yk-bracket",
        kind="prolongation",
        table="edge family (shown at kappa=4)",
        kappa=4,
        monomial=(4,),
        printed=(("Y", 0, 1, 1), ("X", 1, 0, -4)),
        computed=(("Y", 0, 1, 1), ("X", 1, 0, -4)),
        monomial_missing=True,
        note="bracket Y_y - k X_x belongs to y_k",
    ),
    Erratum(
        key="h5-g1square-g3",
        kind="faa",
        table="h_5",
        kappa=5,
        monomial=(1, 1, 3),
        printed=(("f", 0, 3, 15),),
        computed=(("f", 0, 3, 10),),
        note="swapped with g_1 (g_2)^2",
    ),
    Erratum(
        key="h5-g1-g2square",
        kind="faa",
        table="h_5",
        kappa=5,
        monomial=(1, 2, 2),
        printed=(("f", 0, 3, 10),),
        computed=(("f", 0, 3, 15),),
        note="swapped with (g_1)^2 g_3",
    ),
    Erratum(
        key="y4-one-var-y1pow4",
        kind="prolongation",
        table="Y_4^j (one independent variable)",
        kappa=4,
        monomial=(1, 1, 1, 1),
        printed=(("Y", 1, 4, 1), ("X", 1, 3, -4)),
        computed=(("Y", 0, 4, 1), ("X", 1, 3, -4)),
        note="the Y-symbol of y_1^4 carries no x-derivative",
    ),
    Erratum(
        key="y3-one-var-y2square",
        kind="prolongation",
        table="Y_3^j (one independent variable)",
        kappa=3,
        monomial=(2, 2),
        printed=(("X", 0, 1, -3),),
        computed=(("X", 0, 1, -3),),
        index_misprint=True,
        note="delta_{l3} is not summed; read delta_{l1}",
    ),
    Erratum(
        key="y3-general-y2square",
        kind="prolongation",
        table="Y^j_{i1,i2,i3}",
        kappa=3,
        monomial=(2, 2),
        printed=(("X", 0, 1, -3),),
        computed=(("X", 0, 1, -3),),
        index_misprint=True,
        note="delta^{k1 k2 k3} next to X^{k3} repeats k3; read delta^{k1 k2 k4}",
    ),
)


def errata_for(table: str) -> Tuple[Erratum, ...]:
    return tuple(e for e in KNOWN_ERRATA if e.table == table)
