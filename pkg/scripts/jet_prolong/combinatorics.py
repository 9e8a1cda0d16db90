"""Combinatorial objects quantified over by the closed formulas.

Weight specifications index the monomial families ``∏ (y_{λ_e})^{μ_e}``.
Each spec owns ``W = Σ μ_e λ_e`` slots ``(e, ν, γ)`` ordered
lexicographically; a transversal element assigns every slot a position in
``1..W`` and represents one coset of the monomial stabilizer. Shuffles split
``1..p`` into two increasing runs.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Literal, Sequence, Tuple

from .config import get_logger
from .errors import DomainError

log = get_logger("combinatorics")

Mode = Literal["prolongation", "faa"]
PROLONGATION: Mode = "prolongation"
FAA: Mode = "faa"


@dataclass(frozen=True, order=True)
class Slot:
    """Index slot ``(e, ν, γ)``: family, group number, position in group."""

    e: int
    nu: int
    gamma: int

    @property
    def label(self) -> str:
        return f"{self.e}:{self.nu}:{self.gamma}"


@dataclass(frozen=True)
class WeightSpec:
    """Shape data ``(λ_e, μ_e)`` of the monomial ``∏ (y_{λ_e})^{μ_e}``.

    ``pairs`` holds ``(λ_e, μ_e)`` with strictly increasing ``λ``.
    """

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(lam), int(mu)) for lam, mu in self.pairs)
        prev = 0
        for lam, mu in pairs:
            if lam <= prev or mu < 1:
                raise DomainError(f"invalid weight spec {pairs}")
            prev = lam
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "WeightSpec":
        """Spec of the monomial whose jet variables have the given orders."""
        counts: dict[int, int] = {}
        for lam in orders:
            counts[lam] = counts.get(lam, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @property
    def d(self) -> int:
        return len(self.pairs)

    @property
    def weight(self) -> int:
        return sum(lam * mu for lam, mu in self.pairs)

    @property
    def height(self) -> int:
        return sum(mu for _, mu in self.pairs)

    def orders(self) -> Tuple[int, ...]:
        """Jet order of every group, in group order."""
        return tuple(lam for lam, mu in self.pairs for _ in range(mu))

    def groups(self) -> Tuple[Tuple[int, int], ...]:
        """Group labels ``(e, ν)`` in lexicographic order."""
        return tuple((e, nu) for e, (_, mu) in enumerate(self.pairs, start=1) for nu in range(1, mu + 1))

    def slots(self) -> Tuple[Slot, ...]:
        return tuple(
            Slot(e, nu, gamma)
            for e, (lam, mu) in enumerate(self.pairs, start=1)
            for nu in range(1, mu + 1)
            for gamma in range(1, lam + 1)
        )

    def slot_groups(self) -> Tuple[int, ...]:
        """For every slot (in slot order) the index of its group in :meth:`groups`."""
        return tuple(g for g, lam in enumerate(self.orders()) for _ in range(lam))

    def group_slots(self) -> Tuple[Tuple[int, ...], ...]:
        """For every group the indices of its slots."""
        out: List[Tuple[int, ...]] = []
        start = 0
        for lam in self.orders():
            out.append(tuple(range(start, start + lam)))
            start += lam
        return tuple(out)


def weight_specs(kappa: int, mode: Mode) -> List[WeightSpec]:
    """All specs with ``1 <= λ₁ < ... < λ_d <= κ`` and the mode's weight bound.

    ``prolongation`` keeps ``W <= κ+1``; ``faa`` keeps ``W == κ``. Ordered by
    ``(d, λ-vector, μ-vector)``.
    """
    if kappa < 1:
        raise DomainError(f"kappa must be >= 1, got {kappa}")
    if mode == PROLONGATION:
        bound = kappa + 1
    elif mode == FAA:
        bound = kappa
    else:
        raise DomainError(f"unknown weight-spec mode {mode!r}")

    out: List[WeightSpec] = []
    for d in range(1, kappa + 2):
        # smallest weight of d distinct orders is 1+2+...+d
        if d * (d + 1) // 2 > bound:
            break
        for lams in itertools.combinations(range(1, kappa + 1), d):
            if sum(lams) > bound:
                continue
            for mus in _multiplicities(lams, bound - sum(lams)):
                spec = WeightSpec(tuple(zip(lams, mus)))
                if mode == FAA and spec.weight != kappa:
                    continue
                out.append(spec)
    return out


def _multiplicities(lams: Tuple[int, ...], slack: int) -> Iterator[Tuple[int, ...]]:
    # μ_e = 1 + extra_e with Σ extra_e λ_e <= slack
    if not lams:
        yield ()
        return
    head, rest = lams[0], lams[1:]
    for extra in range(slack // head + 1):
        for tail in _multiplicities(rest, slack - extra * head):
            yield (1 + extra,) + tail


# --- Shuffles ---


@dataclass(frozen=True)
class Shuffle:
    """Permutation ``τ`` of ``1..p`` increasing on ``1..q`` and on ``q+1..p``.

    ``images[a-1]`` is ``τ(a)``.
    """

    p: int
    q: int
    images: Tuple[int, ...]

    @property
    def head(self) -> Tuple[int, ...]:
        return self.images[: self.q]

    @property
    def tail(self) -> Tuple[int, ...]:
        return self.images[self.q:]


def shuffles(p: int, q: int) -> List[Shuffle]:
    """All ``C(p, q)`` shuffles, in lexicographic order of their head."""
    if p < 1:
        raise DomainError(f"shuffle size must be >= 1, got {p}")
    if not 0 <= q <= p:
        raise DomainError(f"shuffle split {q} outside 0..{p}")
    universe = range(1, p + 1)
    out: List[Shuffle] = []
    for head in itertools.combinations(universe, q):
        chosen = set(head)
        tail = tuple(a for a in universe if a not in chosen)
        out.append(Shuffle(p, q, head + tail))
    return out


def is_shuffle(images: Sequence[int], q: int) -> bool:
    head, tail = images[:q], images[q:]
    return all(a < b for a, b in zip(head, head[1:])) and all(a < b for a, b in zip(tail, tail[1:]))


# --- Stabilizer and transversal ---


def stabilizer_order(spec: WeightSpec) -> int:
    """``∏ μ_e! (λ_e!)^{μ_e}``."""
    out = 1
    for lam, mu in spec.pairs:
        out *= math.factorial(mu) * math.factorial(lam) ** mu
    return out


def project_pi(slot: Slot) -> Tuple[int, int]:
    """Group label ``(e, ν)`` of a slot."""
    return (slot.e, slot.nu)


@dataclass(frozen=True)
class TransversalElement:
    """Bijection slot -> position in ``1..W``.

    ``images[s]`` is the position of the ``s``-th slot in lexicographic slot
    order.
    """

    spec: WeightSpec
    images: Tuple[int, ...]

    def positions(self) -> Tuple[int, ...]:
        """Inverse map: ``positions()[a-1]`` is the slot index at position ``a``."""
        inverse = [0] * len(self.images)
        for s, a in enumerate(self.images):
            inverse[a - 1] = s
        return tuple(inverse)

    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """Positions held by each group, in group order."""
        return tuple(tuple(self.images[s] for s in slots) for slots in self.spec.group_slots())

    def two_line(self) -> Tuple[Tuple[str, ...], Tuple[int, ...]]:
        """Two-line array: slot labels over their positions."""
        return tuple(s.label for s in self.spec.slots()), self.images

    def __str__(self) -> str:
        top, bottom = self.two_line()
        width = max(len(t) for t in top) if top else 1
        return "\n".join(
            (
                " ".join(t.rjust(width) for t in top),
                " ".join(str(b).rjust(width) for b in bottom),
            )
        )


def coset_transversal(spec: WeightSpec) -> List[TransversalElement]:
    """One canonical representative per stabilizer coset.

    Built as ordered set partitions of ``1..W``: each group receives an
    increasing block of positions; groups of one family have increasing
    least elements.
    """
    orders = spec.orders()
    families = [e for e, (_, mu) in enumerate(spec.pairs) for _ in range(mu)]
    first_of_family = [g == 0 or families[g - 1] != families[g] for g in range(len(orders))]
    W = spec.weight
    out: List[TransversalElement] = []

    def place(g: int, remaining: Tuple[int, ...], chosen: List[Tuple[int, ...]]) -> None:
        if g == len(orders):
            images = tuple(a for block in chosen for a in block)
            out.append(TransversalElement(spec, images))
            return
        floor = 0 if first_of_family[g] else chosen[-1][0]
        for block in itertools.combinations(remaining, orders[g]):
            if block[0] <= floor:
                continue
            taken = set(block)
            chosen.append(block)
            place(g + 1, tuple(a for a in remaining if a not in taken), chosen)
            chosen.pop()

    place(0, tuple(range(1, W + 1)), [])
    return out


def orbit_key(spec: WeightSpec, images: Sequence[int]) -> Tuple[FrozenSet[FrozenSet[int]], ...]:
    """Stabilizer-orbit invariant of a bijection slot -> position.

    Two bijections lie in one coset exactly when every family distributes the
    same position blocks among its groups.
    """
    blocks_by_family: List[List[FrozenSet[int]]] = [[] for _ in spec.pairs]
    families = [e for e, (_, mu) in enumerate(spec.pairs) for _ in range(mu)]
    for g, slots in enumerate(spec.group_slots()):
        blocks_by_family[families[g]].append(frozenset(images[s] for s in slots))
    return tuple(frozenset(blocks) for blocks in blocks_by_family)


def stabilizer_translate(element: TransversalElement, rng: random.Random) -> TransversalElement:
    """Random element of the same coset: permute slots inside each group and
    groups inside each family.
    """
    spec = element.spec
    group_slots = spec.group_slots()
    families = [e for e, (_, mu) in enumerate(spec.pairs) for _ in range(mu)]
    # h maps every slot to a slot of the same shape
    h = list(range(spec.weight))
    for e in range(spec.d):
        members = [g for g in range(len(group_slots)) if families[g] == e]
        targets = members[:]
        rng.shuffle(targets)
        for src, dst in zip(members, targets):
            inner = list(group_slots[dst])
            rng.shuffle(inner)
            for s, t in zip(group_slots[src], inner):
                h[s] = t
    return TransversalElement(spec, tuple(element.images[h[s]] for s in range(spec.weight)))
