"""Point-set operators on a pre-topology.

Closure is computed as the intersection of closed supersets; the
point-membership characterization (every open through the point meets the
set) serves as the oracle in the tests. Unions of opens are again open,
so closed sets are intersection-closed and the smallest closed superset
exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ItemSet, KnowledgeStructure, PreTopology, irreducible_states


def _check_subset(space: KnowledgeStructure, a: ItemSet) -> None:
    if a.universe != space.universe:
        raise ValueError("subset belongs to a different universe")


def closure(space: PreTopology, a: ItemSet) -> ItemSet:
    """Smallest closed superset of a."""
    _check_subset(space, a)
    full = space.universe.full.mask
    out = full
    for open_mask in space.states.masks():
        closed = full & ~open_mask
        if a.mask & ~closed == 0:
            out &= closed
    return ItemSet(space.universe, out)


def interior(space: PreTopology, a: ItemSet) -> ItemSet:
    """Largest open subset of a (the union of opens inside it)."""
    _check_subset(space, a)
    out = 0
    for open_mask in space.states.masks():
        if open_mask & ~a.mask == 0:
            out |= open_mask
    return ItemSet(space.universe, out)


def boundary(space: PreTopology, a: ItemSet) -> ItemSet:
    """closure(a) ∩ closure(complement); equals closure(a) minus interior(a)."""
    return closure(space, a) & closure(space, a.complement())


def derived_set(space: PreTopology, a: ItemSet) -> ItemSet:
    """Accumulation points: every open through z meets a \\ {z}."""
    _check_subset(space, a)
    u = space.universe
    out = 0
    for i in range(len(u)):
        bit = 1 << i
        rest = a.mask & ~bit
        if all(
            open_mask & rest for open_mask in space.states.masks() if open_mask & bit
        ):
            out |= bit
    return ItemSet(u, out)


def is_dense(space: PreTopology, d: ItemSet) -> bool:
    """True iff closure(d) is the whole universe.

    Fast path: d is dense iff it meets every member of the minimal
    pre-base (each nonempty open contains a base member).
    """
    _check_subset(space, d)
    return all(b.mask & d.mask for b in irreducible_states(space))


@dataclass(frozen=True)
class FringeReport:
    inner: ItemSet
    outer: ItemSet

    @property
    def full(self) -> ItemSet:
        return self.inner | self.outer


def fringes(space: PreTopology, w: ItemSet) -> FringeReport:
    """One-element moves that stay inside the family.

    inner: z in w with w \\ {z} a state; outer: z outside w with w ∪ {z} a
    state. w need not itself be open.
    """
    _check_subset(space, w)
    u = space.universe
    inner = 0
    outer = 0
    for i in range(len(u)):
        bit = 1 << i
        if w.mask & bit:
            if space.states.has_mask(w.mask & ~bit):
                inner |= bit
        elif space.states.has_mask(w.mask | bit):
            outer |= bit
    return FringeReport(inner=ItemSet(u, inner), outer=ItemSet(u, outer))
