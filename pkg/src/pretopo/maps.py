"""Maps between pre-topologies and the derived space constructions.

Pre-continuity asks for open preimages of opens; since preimages commute
with unions it suffices to test the minimal pre-base of the codomain,
which is what the global test does. Subspace, product, quotient, and the
child pre-topology each build a new validated space.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .core import (
    ItemSet,
    PreTopology,
    SetFamily,
    Universe,
    irreducible_states,
    union_closure_masks,
)
from .errors import (
    EmptySubspace,
    NotAPartition,
    NotAState,
    NotSurjective,
    SchemaError,
    UniverseOverflow,
)

MAX_PRODUCT_ITEMS = 64


class PointMap:
    """Total map between two universes, one codomain item per domain item."""

    __slots__ = ("domain", "codomain", "assignment", "_targets")

    def __init__(self, domain: Universe, codomain: Universe, assignment: dict[str, str]):
        missing = [t for t in domain.labels if t not in assignment]
        if missing:
            raise ValueError(f"assignment misses domain items: {missing}")
        extra = [t for t in assignment if t not in domain]
        if extra:
            raise ValueError(f"assignment has unknown domain items: {extra}")
        self.domain = domain
        self.codomain = codomain
        self.assignment = {t: assignment[t] for t in domain.labels}
        self._targets = tuple(
            codomain.index(self.assignment[t]) for t in domain.labels
        )

    def __call__(self, t: str) -> str:
        return self.assignment[t]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PointMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.assignment == other.assignment
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{a}->{b}" for a, b in self.assignment.items())
        return f"PointMap({body})"

    def image_mask(self, domain_mask: int) -> int:
        out = 0
        for i, j in enumerate(self._targets):
            if domain_mask >> i & 1:
                out |= 1 << j
        return out

    def preimage_mask(self, codomain_mask: int) -> int:
        out = 0
        for i, j in enumerate(self._targets):
            if codomain_mask >> j & 1:
                out |= 1 << i
        return out

    def image(self, a: ItemSet) -> ItemSet:
        return ItemSet(self.codomain, self.image_mask(a.mask))

    def preimage(self, b: ItemSet) -> ItemSet:
        return ItemSet(self.domain, self.preimage_mask(b.mask))

    def is_surjective(self) -> bool:
        return self.image_mask(self.domain.full.mask) == self.codomain.full.mask

    def is_injective(self) -> bool:
        return len(set(self._targets)) == len(self._targets)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "PointMap":
        if not self.is_bijective():
            raise ValueError("only bijections invert")
        return PointMap(
            self.codomain,
            self.domain,
            {b: a for a, b in self.assignment.items()},
        )

    def then(self, other: "PointMap") -> "PointMap":
        if other.domain != self.codomain:
            raise ValueError("maps do not compose: universes differ")
        return PointMap(
            self.domain,
            other.codomain,
            {t: other.assignment[v] for t, v in self.assignment.items()},
        )

    @classmethod
    def identity(cls, universe: Universe) -> "PointMap":
        return cls(universe, universe, {t: t for t in universe.labels})

    def to_obj(self) -> dict:
        return {"map": dict(self.assignment)}

    @classmethod
    def from_obj(cls, obj: object, domain: Universe, codomain: Universe) -> "PointMap":
        if not isinstance(obj, dict) or "map" not in obj or not isinstance(obj["map"], dict):
            raise SchemaError("point-map JSON needs a 'map' object")
        try:
            return cls(domain, codomain, dict(obj["map"]))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str, domain: Universe, codomain: Universe) -> "PointMap":
        return cls.from_obj(json.loads(text), domain, codomain)


def pre_continuity_witness(
    f: PointMap, x: PreTopology, y: PreTopology
) -> ItemSet | None:
    """Canonically least open of the codomain with a non-open preimage."""
    _check_map(f, x, y)
    for w in y.states.members:
        if not x.states.has_mask(f.preimage_mask(w.mask)):
            return w
    return None


def _check_map(f: PointMap, x: PreTopology, y: PreTopology) -> None:
    if f.domain != x.universe or f.codomain != y.universe:
        raise ValueError("map universes do not match the given spaces")


def is_pre_continuous(f: PointMap, x: PreTopology, y: PreTopology) -> bool:
    """Preimages of opens are open; tested on the minimal pre-base."""
    _check_map(f, x, y)
    return all(
        x.states.has_mask(f.preimage_mask(b.mask)) for b in irreducible_states(y)
    )


def is_pre_continuous_at(
    f: PointMap, x: PreTopology, y: PreTopology, point: str
) -> bool:
    """Every open around f(point) pulls back to an open set."""
    _check_map(f, x, y)
    bit = 1 << y.universe.index(f(point))
    return all(
        x.states.has_mask(f.preimage_mask(w))
        for w in y.states.masks()
        if w & bit
    )


def is_pre_open(f: PointMap, x: PreTopology, y: PreTopology) -> bool:
    _check_map(f, x, y)
    return all(y.states.has_mask(f.image_mask(o)) for o in x.states.masks())


def is_pre_closed(f: PointMap, x: PreTopology, y: PreTopology) -> bool:
    _check_map(f, x, y)
    full_x = x.universe.full.mask
    full_y = y.universe.full.mask
    for o in x.states.masks():
        closed = full_x & ~o
        if not y.states.has_mask(full_y & ~f.image_mask(closed)):
            return False
    return True


def is_pre_quotient(f: PointMap, x: PreTopology, y: PreTopology) -> bool:
    """Surjective, with opens of the codomain exactly the open-preimage sets."""
    _check_map(f, x, y)
    if not f.is_surjective():
        raise NotSurjective("quotient maps must be surjective")
    if not is_pre_continuous(f, x, y):
        return False
    for w in range(1 << len(y.universe)):
        if x.states.has_mask(f.preimage_mask(w)) and not y.states.has_mask(w):
            return False
    return True


@dataclass(frozen=True)
class MapClassification:
    pre_continuous: bool
    pre_open: bool
    pre_closed: bool
    pre_quotient: bool | None
    pre_homeomorphism: bool

    def to_obj(self) -> dict:
        return {
            "pre_continuous": self.pre_continuous,
            "pre_open": self.pre_open,
            "pre_closed": self.pre_closed,
            "pre_quotient": self.pre_quotient,
            "pre_homeomorphism": self.pre_homeomorphism,
        }


def classify_map(f: PointMap, x: PreTopology, y: PreTopology) -> MapClassification:
    cont = is_pre_continuous(f, x, y)
    homeo = (
        f.is_bijective()
        and cont
        and is_pre_continuous(f.inverse(), y, x)
    )
    quotient: bool | None
    if f.is_surjective():
        quotient = is_pre_quotient(f, x, y)
    else:
        quotient = None
    return MapClassification(
        pre_continuous=cont,
        pre_open=is_pre_open(f, x, y),
        pre_closed=is_pre_closed(f, x, y),
        pre_quotient=quotient,
        pre_homeomorphism=homeo,
    )


def subspace(space: PreTopology, y: ItemSet) -> PreTopology:
    """Trace family on a nonempty subset, relabelled to its own universe."""
    if y.universe != space.universe:
        raise ValueError("subspace carrier is over a different universe")
    if y.is_empty():
        raise EmptySubspace("subspace carrier must be non-empty")
    sub_universe = Universe(y.labels)
    positions = [space.universe.index(t) for t in sub_universe.labels]
    traces = set()
    for m in space.states.masks():
        t = 0
        for new_i, old_i in enumerate(positions):
            if m >> old_i & 1:
                t |= 1 << new_i
        traces.add(t)
    return PreTopology(
        sub_universe, SetFamily.from_masks(sub_universe, traces), _trusted=True
    )


def product(xs: list[PreTopology]) -> PreTopology:
    """Union closure of open boxes over the tuple universe (row-major)."""
    if not xs:
        raise ValueError("product needs at least one factor")
    total = 1
    for s in xs:
        total *= len(s.universe)
    if total > MAX_PRODUCT_ITEMS:
        raise UniverseOverflow(
            f"product universe would have {total} items (cap {MAX_PRODUCT_ITEMS})"
        )
    label_tuples = list(itertools.product(*(s.universe.labels for s in xs)))
    labels = ["(" + ",".join(t) + ")" for t in label_tuples]
    universe = Universe(labels)
    index_of = {t: i for i, t in enumerate(label_tuples)}
    boxes = []
    for opens in itertools.product(*(s.states.members for s in xs)):
        mask = 0
        for combo in itertools.product(*(o.labels for o in opens)):
            mask |= 1 << index_of[combo]
        boxes.append(mask)
    masks = union_closure_masks(boxes)
    return PreTopology(universe, SetFamily.from_masks(universe, masks), _trusted=True)


def _partition_masks(space: PreTopology, classes: list[ItemSet]) -> list[int]:
    seen = 0
    for c in classes:
        if c.universe != space.universe:
            raise NotAPartition("class over a different universe")
        if c.is_empty():
            raise NotAPartition("empty class")
        if c.mask & seen:
            raise NotAPartition(f"classes overlap at {c}")
        seen |= c.mask
    if seen != space.universe.full.mask:
        raise NotAPartition("classes do not cover the universe")
    return [c.mask for c in classes]


def quotient(space: PreTopology, classes: list[ItemSet]) -> PreTopology:
    """Finest pre-topology on the classes making the projection continuous.

    A class set is open exactly when its preimage is open.
    """
    masks = _partition_masks(space, classes)
    labels = ["+".join(ItemSet(space.universe, m).labels) for m in masks]
    q_universe = Universe(labels)
    opens = []
    for w in range(1 << len(masks)):
        pre = 0
        for ci, cm in enumerate(masks):
            if w >> ci & 1:
                pre |= cm
        if space.states.has_mask(pre):
            opens.append(w)
    return PreTopology(
        q_universe, SetFamily.from_masks(q_universe, opens), _trusted=True
    )


def quotient_projection(space: PreTopology, classes: list[ItemSet]) -> PointMap:
    masks = _partition_masks(space, classes)
    labels = ["+".join(ItemSet(space.universe, m).labels) for m in masks]
    q_universe = Universe(labels)
    assignment = {}
    for ci, cm in enumerate(masks):
        for t in ItemSet(space.universe, cm).labels:
            assignment[t] = labels[ci]
    return PointMap(space.universe, q_universe, assignment)


@dataclass(frozen=True)
class ChildPretopology:
    family: SetFamily
    carrier: ItemSet
    coarser_than_subspace: bool

    def to_obj(self) -> dict:
        return {
            "family": [list(m.labels) for m in self.family.members],
            "carrier": list(self.carrier.labels),
            "coarser_than_subspace": self.coarser_than_subspace,
        }


def child_pretopology(space: PreTopology, b: ItemSet, u: ItemSet) -> ChildPretopology:
    """Family of trace-class members with the common core removed.

    The trace class of u on b is every open with the same intersection
    with b; subtracting the class intersection yields a union-closed
    family on its own carrier.
    """
    if b.universe != space.universe or u.universe != space.universe:
        raise ValueError("arguments over a different universe")
    if u not in space.states:
        raise NotAState(f"{u} is not a state")
    trace = u.mask & b.mask
    cls = [m for m in space.states.masks() if m & b.mask == trace]
    core = space.universe.full.mask
    for m in cls:
        core &= m
    gamma = {m & ~core for m in cls}
    gamma.add(0)
    family = SetFamily.from_masks(space.universe, gamma)
    carrier = family.union_of_members()
    if carrier.is_empty():
        coarser = True
    else:
        traces = subspace(space, carrier)
        relabel = {t: i for i, t in enumerate(carrier.labels)}
        coarser = True
        for g in family.members:
            tm = 0
            for t in g.labels:
                tm |= 1 << relabel[t]
            if not traces.states.has_mask(tm):
                coarser = False
                break
    return ChildPretopology(
        family=family, carrier=carrier, coarser_than_subspace=coarser
    )
