"""Several-variable prolongations and Faà di Bruno derivatives written out
by hand, with every Kronecker symbol contracted.

Third-order tables are written in a small bracket notation: each line names
a monomial shape such as ``"l1:k1 l2:k2,k3"`` (for ``y^{l1}_{k1}
y^{l2}_{k2,k3}``) and lists its bracket terms. A term pins some ``k``'s to
``i``'s, sums the remaining ``k``'s over ``1..n`` and every ``l`` over
``1..m``, and an 𝒳-term keeps only ``l = j`` for the group it names.
"""

import itertools

import pytest

from scripts.jet_prolong.closedform import ClosedFormRequest, first_order_slice, prolongation_closed
from scripts.jet_prolong.errata import errata_for
from scripts.jet_prolong.faadibruno import (
    FaaAccumulator,
    FSymbol,
    GSymbol,
    extract_faa,
    faa_closed,
    faa_inductive,
    faa_partitions,
)
from scripts.jet_prolong.inductive import index_tuples, prolong_inductive
from scripts.jet_prolong.jetalgebra import DerivativeSymbol, Dims, JetMonomial, JetVariable, canonicalize, coefficient_of


def Ysym(j, xs=(), ys=()):
    return DerivativeSymbol("Y", j, tuple(xs), tuple(ys))


def Xsym(k, xs=(), ys=()):
    return DerivativeSymbol("X", k, tuple(xs), tuple(ys))


def y(l, *idx):
    return JetVariable(l, tuple(idx))


def first_prolongation(dims, j, i):
    """Y^j_i = 𝒴^j_{x^i} + y^l_i 𝒴^j_{y^l} - y^j_k 𝒳^k_{x^i} - y^j_k y^l_i 𝒳^k_{y^l}."""
    L, K = range(1, dims.m + 1), range(1, dims.n + 1)
    raw = [(1, Ysym(j, (i,)), ())]
    raw += [(1, Ysym(j, (), (l,)), (y(l, i),)) for l in L]
    raw += [(-1, Xsym(k, (i,)), (y(j, k),)) for k in K]
    raw += [(-1, Xsym(k, (), (l,)), (y(j, k), y(l, i))) for k in K for l in L]
    return canonicalize(raw, dims)


def second_prolongation(dims, j, i1, i2):
    L, K = range(1, dims.m + 1), range(1, dims.n + 1)
    raw = [(1, Ysym(j, (i1, i2)), ())]
    for l in L:
        raw += [
            (1, Ysym(j, (i1,), (l,)), (y(l, i2),)),
            (1, Ysym(j, (i2,), (l,)), (y(l, i1),)),
            (1, Ysym(j, (), (l,)), (y(l, i1, i2),)),
        ]
    for l1, l2 in itertools.product(L, L):
        raw.append((1, Ysym(j, (), (l1, l2)), (y(l1, i1), y(l2, i2))))
    for k in K:
        raw += [
            (-1, Xsym(k, (i1, i2)), (y(j, k),)),
            (-1, Xsym(k, (i2,)), (y(j, k, i1),)),
            (-1, Xsym(k, (i1,)), (y(j, k, i2),)),
        ]
        for l in L:
            raw += [
                (-1, Xsym(k, (i1,), (l,)), (y(j, k), y(l, i2))),
                (-1, Xsym(k, (i2,), (l,)), (y(j, k), y(l, i1))),
                (-1, Xsym(k, (), (l,)), (y(j, k), y(l, i1, i2))),
                (-1, Xsym(k, (), (l,)), (y(j, k, i1), y(l, i2))),
                (-1, Xsym(k, (), (l,)), (y(j, k, i2), y(l, i1))),
            ]
        for l1, l2 in itertools.product(L, L):
            raw.append((-1, Xsym(k, (), (l1, l2)), (y(j, k), y(l1, i1), y(l2, i2))))
    return canonicalize(raw, dims)


DIMS = [Dims(2, 1), Dims(3, 1), Dims(1, 2), Dims(1, 3), Dims(2, 2)]


@pytest.mark.parametrize("dims", DIMS, ids=lambda d: f"n{d.n}m{d.m}")
def test_first_prolongation_both_engines(dims):
    table = prolong_inductive(dims, 1)
    for j in range(1, dims.m + 1):
        for i in range(1, dims.n + 1):
            expected = first_prolongation(dims, j, i)
            assert table.entry(j, (i,)) == expected
            assert prolongation_closed(ClosedFormRequest(dims, 1, j, (i,))) == expected


@pytest.mark.parametrize("dims", DIMS, ids=lambda d: f"n{d.n}m{d.m}")
def test_second_prolongation_both_engines(dims):
    table = prolong_inductive(dims, 2)
    for j in range(1, dims.m + 1):
        for i1, i2 in index_tuples(dims.n, 2):
            expected = second_prolongation(dims, j, i1, i2)
            assert table.entry(j, (i1, i2)) == expected
            assert prolongation_closed(ClosedFormRequest(dims, 2, j, (i1, i2))) == expected


def test_first_order_slice_of_second_prolongation():
    dims = Dims(2, 1)
    poly = prolong_inductive(dims, 2).entry(1, (1, 2))
    part = first_order_slice(poly)
    assert part.terms
    assert all(v.order == 1 for mono, _ in part.terms for v in mono.factors)
    # every first-order monomial of the full value is kept with its bracket
    kept = part.as_dict()
    for mono, combo in poly.terms:
        if all(v.order == 1 for v in mono.factors):
            assert kept[mono] == dict(combo)


# --- Third order in bracket notation ---


def pin(names="", *values):
    return dict(zip(names.split(), values))


def plus_y(xs, ys, pins):
    return (1, "Y", None, tuple(xs), tuple(ys), pins, None)


def minus_x(comp, xs, ys, pins, l_of_j):
    return (-1, "X", comp, tuple(xs), tuple(ys), pins, l_of_j)


def expand(dims, j, lines):
    raw = []
    for shape, bracket in lines:
        groups = [(l, tuple(ks.split(","))) for l, ks in (g.split(":") for g in shape.split())]
        l_names = [l for l, _ in groups]
        k_names = [k for _, ks in groups for k in ks]
        for sign, head, comp, xs, ys, pins, l_of_j in bracket:
            free = [k for k in k_names if k not in pins]
            for l_values in itertools.product(range(1, dims.m + 1), repeat=len(l_names)):
                L = dict(zip(l_names, l_values))
                if l_of_j is not None and L[l_of_j] != j:
                    continue
                for k_values in itertools.product(range(1, dims.n + 1), repeat=len(free)):
                    K = {**pins, **dict(zip(free, k_values))}
                    symbol = DerivativeSymbol(head, j if head == "Y" else K[comp], xs, tuple(L[l] for l in ys))
                    monomial = tuple(y(L[l], *(K[k] for k in ks)) for l, ks in groups)
                    raw.append((sign, symbol, monomial))
    return canonicalize(raw, dims)


def third_prolongation(dims, j, a, b, c, *, printed_misprint=False):
    """``Y^j_{abc}`` for any ``n, m``; with ``m = 1`` every ``δ^j_l`` is 1.

    ``printed_misprint`` swaps in the published ``δ^{k1k2k3} 𝒳^{k3}`` term of
    the ``y_{k1,k2} y_{k3,k4}`` bracket.
    """
    second_square = [
        minus_x("k3", (), ("l1",), pin("k2 k4 k1", a, b, c), "l2"),
        minus_x("k3", (), ("l1",), pin("k4 k1 k2", a, b, c), "l2"),
    ]
    if printed_misprint:
        second_square.append(minus_x("k3", (), ("l1",), pin("k1 k2 k3", a, b, c), "l2"))
    else:
        second_square.append(minus_x("k3", (), ("l1",), pin("k1 k2 k4", a, b, c), "l2"))
    lines = [
        ("", [plus_y((a, b, c), (), pin())]),
        (
            "l1:k1",
            [
                plus_y((b, c), ("l1",), pin("k1", a)),
                plus_y((a, c), ("l1",), pin("k1", b)),
                plus_y((a, b), ("l1",), pin("k1", c)),
                minus_x("k1", (a, b, c), (), pin(), "l1"),
            ],
        ),
        (
            "l1:k1 l2:k2",
            [
                plus_y((c,), ("l1", "l2"), pin("k1 k2", a, b)),
                plus_y((b,), ("l1", "l2"), pin("k1 k2", c, a)),
                plus_y((a,), ("l1", "l2"), pin("k1 k2", b, c)),
                minus_x("k2", (b, c), ("l1",), pin("k1", a), "l2"),
                minus_x("k2", (a, c), ("l1",), pin("k1", b), "l2"),
                minus_x("k2", (a, b), ("l1",), pin("k1", c), "l2"),
            ],
        ),
        (
            "l1:k1 l2:k2 l3:k3",
            [
                plus_y((), ("l1", "l2", "l3"), pin("k1 k2 k3", a, b, c)),
                minus_x("k3", (c,), ("l1", "l2"), pin("k1 k2", a, b), "l3"),
                minus_x("k3", (b,), ("l1", "l2"), pin("k1 k2", a, c), "l3"),
                minus_x("k3", (a,), ("l1", "l2"), pin("k1 k2", b, c), "l3"),
            ],
        ),
        (
            "l1:k1 l2:k2 l3:k3 l4:k4",
            [minus_x("k4", (), ("l1", "l2", "l3"), pin("k1 k2 k3", a, b, c), "l4")],
        ),
        (
            "l1:k1,k2",
            [
                plus_y((c,), ("l1",), pin("k1 k2", a, b)),
                plus_y((b,), ("l1",), pin("k1 k2", c, a)),
                plus_y((a,), ("l1",), pin("k1 k2", b, c)),
                minus_x("k2", (b, c), (), pin("k1", a), "l1"),
                minus_x("k2", (a, c), (), pin("k1", b), "l1"),
                minus_x("k2", (a, b), (), pin("k1", c), "l1"),
            ],
        ),
        (
            "l1:k1 l2:k2,k3",
            [
                plus_y((), ("l1", "l2"), pin("k1 k2 k3", a, b, c)),
                plus_y((), ("l1", "l2"), pin("k3 k1 k2", a, b, c)),
                plus_y((), ("l1", "l2"), pin("k2 k3 k1", a, b, c)),
                minus_x("k1", (c,), ("l2",), pin("k2 k3", a, b), "l1"),
                minus_x("k1", (b,), ("l2",), pin("k2 k3", a, c), "l1"),
                minus_x("k1", (a,), ("l2",), pin("k2 k3", b, c), "l1"),
                minus_x("k2", (c,), ("l1",), pin("k3 k1", a, b), "l2"),
                minus_x("k2", (b,), ("l1",), pin("k3 k1", a, c), "l2"),
                minus_x("k2", (a,), ("l1",), pin("k3 k1", b, c), "l2"),
                minus_x("k3", (c,), ("l1",), pin("k1 k2", a, b), "l2"),
                minus_x("k3", (b,), ("l1",), pin("k1 k2", a, c), "l2"),
                minus_x("k3", (a,), ("l1",), pin("k1 k2", b, c), "l2"),
            ],
        ),
        (
            "l1:k1 l2:k2 l3:k3,k4",
            [
                minus_x("k4", (), ("l1", "l2"), pin("k1 k2 k3", a, b, c), "l3"),
                minus_x("k4", (), ("l1", "l2"), pin("k2 k3 k1", a, b, c), "l3"),
                minus_x("k4", (), ("l1", "l2"), pin("k3 k2 k1", a, b, c), "l3"),
                minus_x("k2", (), ("l1", "l3"), pin("k3 k4 k1", a, b, c), "l2"),
                minus_x("k2", (), ("l1", "l3"), pin("k3 k1 k4", a, b, c), "l2"),
                minus_x("k2", (), ("l1", "l3"), pin("k1 k3 k4", a, b, c), "l2"),
            ],
        ),
        ("l1:k1,k2 l2:k3,k4", second_square),
        (
            "l1:k1,k2,k3",
            [
                plus_y((), ("l1",), pin("k1 k2 k3", a, b, c)),
                minus_x("k3", (c,), (), pin("k1 k2", a, b), "l1"),
                minus_x("k3", (b,), (), pin("k1 k2", a, c), "l1"),
                minus_x("k3", (a,), (), pin("k1 k2", b, c), "l1"),
            ],
        ),
        (
            "l1:k1 l2:k2,k3,k4",
            [
                minus_x("k4", (), ("l1",), pin("k1 k2 k3", a, b, c), "l2"),
                minus_x("k3", (), ("l1",), pin("k4 k1 k2", a, b, c), "l2"),
                minus_x("k2", (), ("l1",), pin("k3 k4 k1", a, b, c), "l2"),
                minus_x("k1", (), ("l2",), pin("k2 k3 k4", a, b, c), "l1"),
            ],
        ),
    ]
    return expand(dims, j, lines)


@pytest.mark.parametrize("dims", [Dims(2, 1), Dims(3, 1)], ids=lambda d: f"n{d.n}m{d.m}")
def test_third_prolongation_one_dependent_both_engines(dims):
    table = prolong_inductive(dims, 3)
    for idx in index_tuples(dims.n, 3):
        expected = third_prolongation(dims, 1, *idx)
        assert table.entry(1, idx) == expected
        assert prolongation_closed(ClosedFormRequest(dims, 3, 1, idx)) == expected


@pytest.mark.parametrize("dims", [Dims(2, 2), Dims(1, 2)], ids=lambda d: f"n{d.n}m{d.m}")
def test_third_prolongation_several_dependent_both_engines(dims):
    table = prolong_inductive(dims, 3)
    for j in range(1, dims.m + 1):
        for idx in index_tuples(dims.n, 3):
            expected = third_prolongation(dims, j, *idx)
            assert table.entry(j, idx) == expected
            assert prolongation_closed(ClosedFormRequest(dims, 3, j, idx)) == expected


def test_published_third_order_index_misprint_changes_the_value():
    dims = Dims(2, 2)
    assert errata_for("Y^j_{i1,i2,i3}")[0].index_misprint
    printed = third_prolongation(dims, 1, 1, 1, 2, printed_misprint=True)
    assert printed != prolong_inductive(dims, 3).entry(1, (1, 1, 2))


# --- One independent variable, integer multipliers ---


def plus(c, x_order, ys):
    return (c, "Y", x_order, tuple(ys), None)


def minus(c, x_order, ys, l_of_j):
    return (-c, "X", x_order, tuple(ys), l_of_j)


def expand_one_independent(dims, j, lines):
    raw = []
    for shape, bracket in lines:
        groups = [(l, int(order)) for l, order in (g.split(":") for g in shape.split())]
        l_names = [l for l, _ in groups]
        for coeff, head, x_order, ys, l_of_j in bracket:
            for l_values in itertools.product(range(1, dims.m + 1), repeat=len(l_names)):
                L = dict(zip(l_names, l_values))
                if l_of_j is not None and L[l_of_j] != j:
                    continue
                symbol = DerivativeSymbol(head, j if head == "Y" else 1, (1,) * x_order, tuple(L[l] for l in ys))
                monomial = tuple(y(L[l], *(1,) * order) for l, order in groups)
                raw.append((coeff, symbol, monomial))
    return canonicalize(raw, dims)


L2 = ("l1", "l2")
L3 = ("l1", "l2", "l3")


def third_one_independent(dims, j):
    """``Y^j_3`` for ``n = 1``; the ``(y_2)^2`` bracket reads ``δ_{l1}``."""
    return expand_one_independent(
        dims,
        j,
        [
            ("", [plus(1, 3, ())]),
            ("l1:1", [plus(3, 2, ("l1",)), minus(1, 3, (), "l1")]),
            ("l1:1 l2:1", [plus(3, 1, L2), minus(3, 2, ("l2",), "l1")]),
            ("l1:1 l2:1 l3:1", [plus(1, 0, L3), minus(3, 1, ("l2", "l3"), "l1")]),
            ("l1:1 l2:1 l3:1 l4:1", [minus(1, 0, ("l2", "l3", "l4"), "l1")]),
            ("l1:2", [plus(3, 1, ("l1",)), minus(3, 2, (), "l1")]),
            ("l1:1 l2:2", [plus(3, 0, L2), minus(3, 1, ("l2",), "l1"), minus(6, 1, ("l1",), "l2")]),
            ("l1:1 l2:1 l3:2", [minus(3, 0, ("l2", "l3"), "l1"), minus(3, 0, L2, "l3")]),
            ("l1:2 l2:2", [minus(3, 0, ("l2",), "l1")]),
            ("l1:3", [plus(1, 0, ("l1",)), minus(3, 1, (), "l1")]),
            ("l1:1 l2:3", [minus(1, 0, ("l2",), "l1"), minus(3, 0, ("l1",), "l2")]),
        ],
    )


def fourth_one_independent(dims, j):
    """``Y^j_4`` for ``n = 1``; the ``(y_1)^4`` bracket has ``𝒴_{y^4}``."""
    return expand_one_independent(
        dims,
        j,
        [
            ("", [plus(1, 4, ())]),
            ("l1:1", [plus(4, 3, ("l1",)), minus(1, 4, (), "l1")]),
            ("l1:1 l2:1", [plus(6, 2, L2), minus(4, 3, ("l2",), "l1")]),
            ("l1:1 l2:1 l3:1", [plus(4, 1, L3), minus(6, 2, ("l2", "l3"), "l1")]),
            ("l1:1 l2:1 l3:1 l4:1", [plus(1, 0, L3 + ("l4",)), minus(4, 1, ("l2", "l3", "l4"), "l1")]),
            ("l1:1 l2:1 l3:1 l4:1 l5:1", [minus(1, 0, ("l2", "l3", "l4", "l5"), "l1")]),
            ("l1:2", [plus(6, 2, ("l1",)), minus(4, 3, (), "l1")]),
            ("l1:1 l2:2", [plus(12, 1, L2), minus(6, 2, ("l2",), "l1"), minus(12, 2, ("l1",), "l2")]),
            ("l1:1 l2:1 l3:2", [plus(6, 0, L3), minus(12, 1, ("l2", "l3"), "l1"), minus(12, 1, L2, "l3")]),
            ("l1:1 l2:1 l3:1 l4:2", [minus(6, 0, ("l2", "l3", "l4"), "l1"), minus(4, 0, L3, "l4")]),
            ("l1:2 l2:2", [plus(3, 0, L2), minus(12, 1, ("l2",), "l1")]),
            ("l1:1 l2:2 l3:2", [minus(3, 0, ("l2", "l3"), "l1"), minus(12, 0, ("l1", "l3"), "l2")]),
            ("l1:3", [plus(4, 1, ("l1",)), minus(6, 2, (), "l1")]),
            ("l1:1 l2:3", [plus(4, 0, L2), minus(4, 1, ("l2",), "l1"), minus(12, 1, ("l1",), "l2")]),
            ("l1:1 l2:1 l3:3", [minus(4, 0, ("l2", "l3"), "l1"), minus(6, 0, L2, "l3")]),
            ("l1:2 l2:3", [minus(4, 0, ("l2",), "l1"), minus(6, 0, ("l1",), "l2")]),
            ("l1:4", [plus(1, 0, ("l1",)), minus(4, 1, (), "l1")]),
            ("l1:1 l2:4", [minus(1, 0, ("l2",), "l1"), minus(4, 0, ("l1",), "l2")]),
        ],
    )


ONE_INDEPENDENT = [Dims(1, 2), Dims(1, 3)]


@pytest.mark.parametrize("dims", ONE_INDEPENDENT, ids=lambda d: f"n{d.n}m{d.m}")
@pytest.mark.parametrize("kappa, builder", [(3, third_one_independent), (4, fourth_one_independent)], ids=["k3", "k4"])
def test_one_independent_several_dependent_both_engines(dims, kappa, builder):
    table = prolong_inductive(dims, kappa)
    idx = (1,) * kappa
    for j in range(1, dims.m + 1):
        expected = builder(dims, j)
        assert table.entry(j, idx) == expected
        assert prolongation_closed(ClosedFormRequest(dims, kappa, j, idx)) == expected


@pytest.mark.parametrize("dims", ONE_INDEPENDENT, ids=lambda d: f"n{d.n}m{d.m}")
def test_general_third_order_collapses_to_one_independent_form(dims):
    for j in range(1, dims.m + 1):
        assert third_prolongation(dims, j, 1, 1, 1) == third_one_independent(dims, j)


def test_fourth_order_first_jet_power_has_no_x_derivative():
    assert errata_for("Y_4^j (one independent variable)")[0].computed[0] == ("Y", 0, 4, 1)
    value = prolongation_closed(ClosedFormRequest(Dims(1, 2), 4, 2, (1,) * 4))
    combo = coefficient_of(value, JetMonomial((y(2, 1),) * 4))
    assert combo[Ysym(2, (), (2, 2, 2, 2))] == 1
    assert Ysym(2, (1,), (2, 2, 2, 2)) not in combo


# --- Faà di Bruno ---


def build(terms):
    acc = FaaAccumulator()
    for c, ls, gs in terms:
        acc.add_term(c, FSymbol(ls), [GSymbol(l, xs) for l, xs in gs])
    return acc.freeze()


def h3_one_dependent(i1, i2, i3):
    return build(
        [
            (1, (1, 1, 1), [(1, (i1,)), (1, (i2,)), (1, (i3,))]),
            (1, (1, 1), [(1, (i1,)), (1, (i2, i3))]),
            (1, (1, 1), [(1, (i2,)), (1, (i1, i3))]),
            (1, (1, 1), [(1, (i3,)), (1, (i1, i2))]),
            (1, (1,), [(1, (i1, i2, i3))]),
        ]
    )


def h4_one_dependent(idx):
    terms = [(1, (1,) * 4, [(1, (i,)) for i in idx])]
    positions = range(4)
    for a, b in itertools.combinations(positions, 2):
        rest = [p for p in positions if p not in (a, b)]
        terms.append((1, (1, 1, 1), [(1, (idx[a], idx[b]))] + [(1, (idx[p],)) for p in rest]))
    for pairing in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)):
        a, b, c, d = pairing
        terms.append((1, (1, 1), [(1, (idx[a], idx[b])), (1, (idx[c], idx[d]))]))
    for single in positions:
        rest = tuple(idx[p] for p in positions if p != single)
        terms.append((1, (1, 1), [(1, (idx[single],)), (1, rest)]))
    terms.append((1, (1,), [(1, tuple(idx))]))
    return build(terms)


def h2_general(dims, i1, i2):
    L = range(1, dims.m + 1)
    terms = [(1, (l1, l2), [(l1, (i1,)), (l2, (i2,))]) for l1, l2 in itertools.product(L, L)]
    terms += [(1, (l,), [(l, (i1, i2))]) for l in L]
    return build(terms)


@pytest.mark.parametrize("idx", [(1, 2, 3), (1, 1, 2), (3, 2, 1), (2, 2, 2)])
def test_h3_several_independent(idx):
    dims = Dims(3, 1)
    expected = h3_one_dependent(*idx)
    assert faa_closed(dims, 3, idx) == expected
    assert faa_inductive(dims, 3, idx) == expected
    assert faa_partitions(dims, 3, idx) == expected


@pytest.mark.parametrize("idx", [(1, 2, 3, 4), (1, 1, 2, 2), (1, 2, 1, 3)])
def test_h4_several_independent(idx):
    dims = Dims(4, 1)
    expected = h4_one_dependent(idx)
    assert faa_closed(dims, 4, idx) == expected
    assert faa_inductive(dims, 4, idx) == expected


def test_h4_three_pairings_present():
    h = faa_closed(Dims(4, 1), 4, (1, 2, 3, 4))
    f2 = FSymbol((1, 1))
    for (a, b), (c, d) in (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))):
        assert h.coefficient(f2, [GSymbol(1, (a, b)), GSymbol(1, (c, d))]) == 1


@pytest.mark.parametrize("dims", [Dims(1, 2), Dims(1, 3), Dims(2, 2), Dims(3, 2)], ids=lambda d: f"n{d.n}m{d.m}")
def test_h2_general(dims):
    for i1, i2 in index_tuples(dims.n, 2):
        expected = h2_general(dims, i1, i2)
        assert faa_closed(dims, 2, (i1, i2)) == expected
        assert faa_inductive(dims, 2, (i1, i2)) == expected
        assert faa_partitions(dims, 2, (i1, i2)) == expected


def test_h2_from_second_prolongation():
    dims = Dims(2, 2)
    for j in (1, 2):
        extracted = extract_faa(second_prolongation(dims, j, 1, 2), 2)
        assert extracted == h2_general(dims, 1, 2)


def test_h1_from_first_prolongation():
    dims = Dims(3, 2)
    extracted = extract_faa(first_prolongation(dims, 1, 2), 1)
    assert extracted == build([(1, (l,), [(l, (2,))]) for l in (1, 2)])


def g(l, order):
    return (l, (1,) * order)


def h3_several_dependent(dims):
    L = range(1, dims.m + 1)
    terms = [(1, ls, [g(l, 1) for l in ls]) for ls in itertools.product(L, repeat=3)]
    terms += [(3, (l1, l2), [g(l1, 1), g(l2, 2)]) for l1, l2 in itertools.product(L, L)]
    terms += [(1, (l,), [g(l, 3)]) for l in L]
    return build(terms)


def h4_several_dependent(dims):
    L = range(1, dims.m + 1)
    terms = [(1, ls, [g(l, 1) for l in ls]) for ls in itertools.product(L, repeat=4)]
    terms += [(6, ls, [g(ls[0], 1), g(ls[1], 1), g(ls[2], 2)]) for ls in itertools.product(L, repeat=3)]
    terms += [(3, (l1, l2), [g(l1, 2), g(l2, 2)]) for l1, l2 in itertools.product(L, L)]
    terms += [(4, (l1, l2), [g(l1, 1), g(l2, 3)]) for l1, l2 in itertools.product(L, L)]
    terms += [(1, (l,), [g(l, 4)]) for l in L]
    return build(terms)


@pytest.mark.parametrize("dims", [Dims(1, 2), Dims(1, 3)], ids=lambda d: f"n{d.n}m{d.m}")
@pytest.mark.parametrize("kappa, builder", [(3, h3_several_dependent), (4, h4_several_dependent)], ids=["h3", "h4"])
def test_h3_h4_several_dependent(dims, kappa, builder):
    expected = builder(dims)
    idx = (1,) * kappa
    assert faa_closed(dims, kappa, idx) == expected
    assert faa_inductive(dims, kappa, idx) == expected
    assert faa_partitions(dims, kappa, idx) == expected
    table = prolong_inductive(dims, kappa)
    for j in range(1, dims.m + 1):
        assert extract_faa(table.entry(j, idx), kappa) == expected


def test_h3_h4_read_off_the_hand_written_prolongations():
    dims = Dims(1, 2)
    assert extract_faa(third_one_independent(dims, 2), 3) == h3_several_dependent(dims)
    assert extract_faa(fourth_one_independent(dims, 1), 4) == h4_several_dependent(dims)
