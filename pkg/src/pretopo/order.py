"""Quasi-order correspondence, minimal states, atoms, reduction.

Intersection-closed spaces (quasi-ordinal / Alexandroff) are in bijection
with quasi-orders: x ⪯ y iff x lies in every open containing y, and the
space is regenerated as the union closure of the principal down-sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import (
    ItemSet,
    KnowledgeStructure,
    PreTopology,
    SetFamily,
    Universe,
    union_closure_masks,
)
from .errors import AxiomViolation, NotQuasiOrdinal, SchemaError
from .maps import PointMap


class QuasiOrder:
    """Reflexive transitive relation, rows packed as successor masks."""

    __slots__ = ("universe", "up")

    def __init__(self, universe: Universe, up: tuple[int, ...]):
        if len(up) != len(universe):
            raise ValueError("relation rows do not match the universe")
        for i, row in enumerate(up):
            if not row >> i & 1:
                raise AxiomViolation("reflexive", witness=universe.labels[i])
        for i, row in enumerate(up):
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                rest ^= low
                if up[j] & ~row:
                    k = (up[j] & ~row).bit_length() - 1
                    raise AxiomViolation(
                        "transitive",
                        witness=(
                            universe.labels[i],
                            universe.labels[j],
                            universe.labels[k],
                        ),
                    )
        self.universe = universe
        self.up = tuple(up)

    def leq(self, x: str, y: str) -> bool:
        return bool(self.up[self.universe.index(x)] >> self.universe.index(y) & 1)

    def down_set(self, q: str) -> ItemSet:
        qi = self.universe.index(q)
        mask = 0
        for i, row in enumerate(self.up):
            if row >> qi & 1:
                mask |= 1 << i
        return ItemSet(self.universe, mask)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuasiOrder)
            and self.universe == other.universe
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.up))

    def __repr__(self) -> str:
        pairs = [
            f"{a}<={b}"
            for i, a in enumerate(self.universe.labels)
            for j, b in enumerate(self.universe.labels)
            if i != j and self.up[i] >> j & 1
        ]
        return f"QuasiOrder({', '.join(pairs)})"

    def to_obj(self) -> dict:
        return {
            "universe": list(self.universe.labels),
            "leq": [
                [a, b]
                for i, a in enumerate(self.universe.labels)
                for j, b in enumerate(self.universe.labels)
                if i != j and self.up[i] >> j & 1
            ],
        }

    @classmethod
    def from_pairs(
        cls, universe: Universe, pairs: list[tuple[str, str]]
    ) -> "QuasiOrder":
        up = [1 << i for i in range(len(universe))]
        for a, b in pairs:
            up[universe.index(a)] |= 1 << universe.index(b)
        return cls(universe, tuple(up))

    @classmethod
    def from_obj(cls, obj: object) -> "QuasiOrder":
        if not isinstance(obj, dict) or "universe" not in obj or "leq" not in obj:
            raise SchemaError("quasi-order JSON needs 'universe' and 'leq'")
        universe = Universe(obj["universe"])
        pairs = obj["leq"]
        if not isinstance(pairs, list):
            raise SchemaError("'leq' must be an array of pairs")
        try:
            return cls.from_pairs(universe, [(a, b) for a, b in pairs])
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad leq entry: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "QuasiOrder":
        return cls.from_obj(json.loads(text))


def is_quasi_ordinal(space: KnowledgeStructure) -> bool:
    """Union closure is given; intersections must also stay in the family."""
    masks = sorted(space.states.masks())
    mask_set = space.states.masks()
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a & b not in mask_set:
                return False
    return True


def to_quasi_order(space: PreTopology) -> QuasiOrder:
    """x ⪯ y iff x belongs to every open containing y."""
    if not is_quasi_ordinal(space):
        raise NotQuasiOrdinal("space is not closed under intersections")
    u = space.universe
    full = u.full.mask
    min_state = []
    for i in range(len(u)):
        inter = full
        for m in space.states.masks():
            if m >> i & 1:
                inter &= m
        min_state.append(inter)
    up = []
    for x in range(len(u)):
        row = 0
        for y in range(len(u)):
            if min_state[y] >> x & 1:
                row |= 1 << y
        up.append(row)
    return QuasiOrder(u, tuple(up))


def from_quasi_order(order: QuasiOrder) -> PreTopology:
    """Union closure of the principal down-sets; intersection-closed."""
    u = order.universe
    downs = [order.down_set(q).mask for q in u.labels]
    masks = union_closure_masks(downs)
    return PreTopology(u, SetFamily.from_masks(u, masks), _trusted=True)


def minimal_state(space: PreTopology, t: str) -> ItemSet | None:
    """The minimum of the states containing t, or None if not unique."""
    minimals = atoms_at(space, t)
    if len(minimals) == 1:
        return minimals[0]
    return None


def atoms_at(space: PreTopology, t: str) -> SetFamily:
    """⊆-minimal states containing the item."""
    bit = 1 << space.universe.index(t)
    through = [m for m in space.states.masks() if m & bit]
    minimals = [
        m for m in through if not any(o != m and o & ~m == 0 for o in through)
    ]
    return SetFamily.from_masks(space.universe, minimals)


def is_granular(space: PreTopology) -> bool:
    """Every state through t sits above an atom at t (finite: always)."""
    for i, t in enumerate(space.universe.labels):
        atoms = atoms_at(space, t).masks()
        bit = 1 << i
        for m in space.states.masks():
            if m & bit and not any(a & ~m == 0 for a in atoms):
                return False
    return True


def is_antimatroid(space: PreTopology) -> bool:
    """Every nonempty state keeps some single element removable."""
    for m in space.states.masks():
        if m == 0:
            continue
        rest = m
        found = False
        while rest:
            low = rest & -rest
            rest ^= low
            if space.states.has_mask(m & ~low):
                found = True
                break
        if not found:
            return False
    return True


@dataclass(frozen=True)
class Reduction:
    classes: tuple[ItemSet, ...]
    reduced: KnowledgeStructure
    projection: PointMap

    def to_obj(self) -> dict:
        return {
            "classes": [list(c.labels) for c in self.classes],
            "reduced": self.reduced.to_obj(),
            "projection": self.projection.to_obj(),
        }


def discriminative_reduction(structure: KnowledgeStructure) -> Reduction:
    """Quotient by notions: items with identical state systems collapse.

    States are saturated under the notion partition, so they map cleanly
    onto the class universe; the result is discriminative (T0) and
    union-closed whenever the input is.
    """
    u = structure.universe
    systems = [structure.state_system_mask(t) for t in u.labels]
    class_of: dict[int, int] = {}
    classes: list[int] = []
    for i in range(len(u)):
        for rep in classes:
            if systems[rep] == systems[i]:
                class_of[i] = rep
                break
        else:
            class_of[i] = i
            classes.append(i)
    class_masks = []
    for rep in classes:
        mask = 0
        for i in range(len(u)):
            if class_of[i] == rep:
                mask |= 1 << i
        class_masks.append(mask)
    labels = ["+".join(ItemSet(u, m).labels) for m in class_masks]
    reduced_universe = Universe(labels)
    reduced_states = set()
    for m in structure.states.masks():
        img = 0
        for ci, cm in enumerate(class_masks):
            if m & cm:
                img |= 1 << ci
        reduced_states.add(img)
    family = SetFamily.from_masks(reduced_universe, reduced_states)
    reduced: KnowledgeStructure
    if isinstance(structure, PreTopology):
        reduced = PreTopology(reduced_universe, family)
    else:
        reduced = KnowledgeStructure(reduced_universe, family)
    assignment = {
        u.labels[i]: labels[classes.index(class_of[i])] for i in range(len(u))
    }
    projection = PointMap(u, reduced_universe, assignment)
    return Reduction(
        classes=tuple(ItemSet(u, m) for m in class_masks),
        reduced=reduced,
        projection=projection,
    )


def m_graph_connected(space: PreTopology) -> bool:
    """Items chained by overlapping minimal states (quasi-ordinal spaces)."""
    if not is_quasi_ordinal(space):
        raise NotQuasiOrdinal("minimal-state graph needs a quasi-ordinal space")
    u = space.universe
    full = u.full.mask
    mins = []
    for i in range(len(u)):
        inter = full
        for m in space.states.masks():
            if m >> i & 1:
                inter &= m
        mins.append(inter)
    n = len(u)
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if j not in seen and mins[i] & mins[j]:
                seen.add(j)
                frontier.append(j)
    return len(seen) == n
