"""Universes, packed item sets, and canonical set families.

A universe is an ordered list of at most 64 item labels; subsets are packed
into plain ints, one bit per item. Families of subsets are kept in a single
canonical order -- (cardinality, then position-lexicographic) -- so that
serialization round-trips byte for byte and every downstream tie-break is
deterministic.

Examples
--------
>>> u = Universe(["z1", "z2", "z3"])
>>> space = union_closure(SetFamily.of(u, [["z1"], ["z2", "z3"]]))
>>> [str(s) for s in space.states]
['{}', '{z1}', '{z2,z3}', '{z1,z2,z3}']
>>> distance(u.subset(["z1", "z2"]), u.subset(["z2", "z3"]))
2
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

from .errors import AxiomViolation, CoverError, SchemaError, UniverseOverflow

MAX_UNIVERSE = 64


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Universe:
    """Ordered ground set of distinct item labels (at most 64).

    The declared order is the canonical order: it drives subset
    serialization, family sorting, and every "least item" tie-break.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise ValueError("a universe needs at least one item")
        if len(labels) > MAX_UNIVERSE:
            raise UniverseOverflow(
                f"{len(labels)} items exceed the {MAX_UNIVERSE}-item packed representation"
            )
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate item labels in universe")
        self.labels = labels
        self._index = {label: i for i, label in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown item {label!r}") from None

    def subset(self, labels: Iterable[str]) -> "ItemSet":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return ItemSet(self, mask)

    def from_mask(self, mask: int) -> "ItemSet":
        return ItemSet(self, mask)

    def item(self, label: str) -> "ItemSet":
        return ItemSet(self, 1 << self.index(label))

    @property
    def empty(self) -> "ItemSet":
        return ItemSet(self, 0)

    @property
    def full(self) -> "ItemSet":
        return ItemSet(self, (1 << len(self.labels)) - 1)

    def subsets(self) -> Iterator["ItemSet"]:
        """All 2^m subsets in mask order. Caller is responsible for bounding m."""
        for mask in range(1 << len(self.labels)):
            yield ItemSet(self, mask)


class ItemSet:
    """Immutable subset of a universe, packed into an int."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: Universe, mask: int):
        if mask >> len(universe):
            raise ValueError("mask has bits outside the universe")
        self.universe = universe
        self.mask = mask

    @property
    def labels(self) -> tuple[str, ...]:
        names = self.universe.labels
        return tuple(names[i] for i in _iter_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.universe._index and bool(
            self.mask >> self.universe._index[label] & 1
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ItemSet)
            and self.universe == other.universe
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.mask))

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"

    def __repr__(self) -> str:
        return f"ItemSet({str(self)})"

    def _check(self, other: "ItemSet") -> None:
        if self.universe != other.universe:
            raise ValueError("item sets belong to different universes")

    def __or__(self, other: "ItemSet") -> "ItemSet":
        self._check(other)
        return ItemSet(self.universe, self.mask | other.mask)

    def __and__(self, other: "ItemSet") -> "ItemSet":
        self._check(other)
        return ItemSet(self.universe, self.mask & other.mask)

    def __sub__(self, other: "ItemSet") -> "ItemSet":
        self._check(other)
        return ItemSet(self.universe, self.mask & ~other.mask)

    def __xor__(self, other: "ItemSet") -> "ItemSet":
        self._check(other)
        return ItemSet(self.universe, self.mask ^ other.mask)

    def __le__(self, other: "ItemSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ItemSet") -> bool:
        return self <= other and self.mask != other.mask

    def complement(self) -> "ItemSet":
        return ItemSet(self.universe, self.universe.full.mask & ~self.mask)

    def is_empty(self) -> bool:
        return self.mask == 0

    def indices(self) -> tuple[int, ...]:
        return tuple(_iter_bits(self.mask))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.mask.bit_count(), self.indices())

    def with_label(self, label: str) -> "ItemSet":
        return ItemSet(self.universe, self.mask | 1 << self.universe.index(label))

    def without_label(self, label: str) -> "ItemSet":
        return ItemSet(self.universe, self.mask & ~(1 << self.universe.index(label)))


def distance(a: ItemSet, b: ItemSet) -> int:
    """Symmetric-difference size |a Δ b| (a metric on subsets of one universe)."""
    a._check(b)
    return (a.mask ^ b.mask).bit_count()


class SetFamily:
    """Duplicate-free collection of item sets in canonical order."""

    __slots__ = ("universe", "members", "_mask_set")

    def __init__(self, universe: Universe, members: Iterable[ItemSet] = ()):
        seen: set[int] = set()
        canon: list[ItemSet] = []
        for m in members:
            if not isinstance(m, ItemSet):
                raise TypeError("SetFamily members must be ItemSets")
            if m.universe != universe:
                raise ValueError("member belongs to a different universe")
            if m.mask not in seen:
                seen.add(m.mask)
                canon.append(m)
        canon.sort(key=ItemSet.sort_key)
        self.universe = universe
        self.members = tuple(canon)
        self._mask_set = frozenset(seen)

    @classmethod
    def of(cls, universe: Universe, members: Iterable[Iterable[str]]) -> "SetFamily":
        return cls(universe, [universe.subset(m) for m in members])

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> "SetFamily":
        return cls(universe, [ItemSet(universe, m) for m in masks])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ItemSet]:
        return iter(self.members)

    def __getitem__(self, i: int) -> ItemSet:
        return self.members[i]

    def __contains__(self, s: object) -> bool:
        return (
            isinstance(s, ItemSet)
            and s.universe == self.universe
            and s.mask in self._mask_set
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.universe == other.universe
            and self._mask_set == other._mask_set
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self._mask_set))

    def __repr__(self) -> str:
        return "SetFamily(" + ", ".join(str(m) for m in self.members) + ")"

    def masks(self) -> frozenset[int]:
        return self._mask_set

    def has_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    def union_of_members(self) -> ItemSet:
        mask = 0
        for m in self.members:
            mask |= m.mask
        return ItemSet(self.universe, mask)

    def nonempty_members(self) -> tuple[ItemSet, ...]:
        return tuple(m for m in self.members if m.mask)

    def members_containing(self, label: str) -> tuple[ItemSet, ...]:
        bit = 1 << self.universe.index(label)
        return tuple(m for m in self.members if m.mask & bit)

    def restrict(self, keep: Iterable[ItemSet]) -> "SetFamily":
        return SetFamily(self.universe, keep)

    def to_obj(self) -> dict:
        return {
            "universe": list(self.universe.labels),
            "states": [list(m.labels) for m in self.members],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2) + "\n"

    @classmethod
    def from_obj(cls, obj: object) -> "SetFamily":
        if not isinstance(obj, dict):
            raise SchemaError("set-family JSON must be an object")
        try:
            labels = obj["universe"]
            states = obj["states"]
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"set-family JSON missing key: {exc}") from None
        if not isinstance(labels, list) or not isinstance(states, list):
            raise SchemaError("'universe' and 'states' must be arrays")
        universe = Universe(labels)
        try:
            members = [universe.subset(s) for s in states]
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad state entry: {exc}") from None
        return cls(universe, members)

    @classmethod
    def from_json(cls, text: str) -> "SetFamily":
        return cls.from_obj(json.loads(text))


class KnowledgeStructure:
    """A set family containing the empty set and the whole universe."""

    __slots__ = ("universe", "states")

    def __init__(self, universe: Universe, states: SetFamily):
        if states.universe != universe:
            raise ValueError("states family is over a different universe")
        if not states.has_mask(0):
            raise AxiomViolation("empty-set-membership", witness="{}")
        if not states.has_mask(universe.full.mask):
            raise CoverError("states do not cover the universe: Q is not a state")
        self.universe = universe
        self.states = states

    @classmethod
    def from_family(cls, family: SetFamily) -> "KnowledgeStructure":
        return cls(family.universe, family)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, KnowledgeStructure) and self.states == getattr(
            other, "states", None
        )

    def __hash__(self) -> int:
        return hash(self.states)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.states!r})"

    def is_state(self, s: ItemSet) -> bool:
        return s in self.states

    def states_containing(self, label: str) -> tuple[ItemSet, ...]:
        return self.states.members_containing(label)

    def state_system_mask(self, label: str) -> frozenset[int]:
        """Masks of all states containing the item (the system H_t)."""
        bit = 1 << self.universe.index(label)
        return frozenset(m for m in self.states.masks() if m & bit)

    def closed_family(self) -> SetFamily:
        full = self.universe.full.mask
        return SetFamily.from_masks(
            self.universe, (full & ~m for m in self.states.masks())
        )

    def to_obj(self) -> dict:
        return self.states.to_obj()

    def to_json(self) -> str:
        return self.states.to_json()


class PreTopology(KnowledgeStructure):
    """A knowledge space: states closed under arbitrary unions.

    For a finite family, closure under binary unions is equivalent and is
    what construction verifies, pair by pair.
    """

    __slots__ = ()

    def __init__(self, universe: Universe, states: SetFamily, _trusted: bool = False):
        super().__init__(universe, states)
        if not _trusted:
            masks = sorted(states.masks())
            mask_set = states.masks()
            for i, a in enumerate(masks):
                for b in masks[i + 1 :]:
                    if a | b not in mask_set:
                        raise AxiomViolation(
                            "union-closure",
                            witness=(
                                str(ItemSet(universe, a)),
                                str(ItemSet(universe, b)),
                            ),
                        )

    @classmethod
    def from_family(cls, family: SetFamily) -> "PreTopology":
        return cls(family.universe, family)

    @classmethod
    def from_obj(cls, obj: object) -> "PreTopology":
        return cls.from_family(SetFamily.from_obj(obj))

    @classmethod
    def from_json(cls, text: str) -> "PreTopology":
        return cls.from_obj(json.loads(text))


def union_closure(base: SetFamily) -> PreTopology:
    """Close a generating family under arbitrary unions.

    The empty union contributes the empty set; the family covering the
    universe makes the result a pre-topology, otherwise the generating
    family is rejected.

    >>> u = Universe(["a", "b"])
    >>> [str(s) for s in union_closure(SetFamily.of(u, [["a"], ["b"]])).states]
    ['{}', '{a}', '{b}', '{a,b}']
    """
    universe = base.universe
    if base.union_of_members().mask != universe.full.mask:
        missing = universe.full - base.union_of_members()
        raise CoverError(f"generators do not cover the universe: {missing} uncovered")
    closed: set[int] = {0}
    for g in base.masks():
        closed |= {m | g for m in closed}
    return PreTopology(universe, SetFamily.from_masks(universe, closed), _trusted=True)


def union_closure_masks(masks: Iterable[int]) -> set[int]:
    """Union-close raw masks (no cover requirement); always contains 0."""
    closed: set[int] = {0}
    for g in masks:
        closed |= {m | g for m in closed}
    return closed


def irreducible_states(space: KnowledgeStructure) -> SetFamily:
    """Union-irreducible nonempty states: the unique minimal pre-base.

    A nonempty state is irreducible when it is not the union of the states
    properly below it.
    """
    masks = sorted(space.states.masks())
    keep = []
    for m in masks:
        if m == 0:
            continue
        below = 0
        for other in masks:
            if other != m and other & ~m == 0:
                below |= other
        if below != m:
            keep.append(m)
    return SetFamily.from_masks(space.universe, keep)


def is_pre_base_for(candidate: SetFamily, space: PreTopology) -> bool:
    """Does the candidate generate the space?

    Checked via the point criterion (every open W and z in W admit a
    candidate member H with z in H and H inside W), which for candidates
    drawn from the states is equivalent to union_closure(candidate) == space.
    """
    if candidate.universe != space.universe:
        raise ValueError("candidate and space use different universes")
    if any(m not in space.states for m in candidate):
        return False
    cand_masks = tuple(candidate.masks())
    for w in space.states.masks():
        covered = 0
        for h in cand_masks:
            if h & ~w == 0:
                covered |= h
        if covered != w:
            return False
    return True
