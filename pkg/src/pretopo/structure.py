"""Structure classification and constructors.

Distinguishes knowledge structures, knowledge spaces (pre-topologies),
topologies and quasi-ordinal (Alexandroff) families, and builds spaces
from binary relations and extensional closure operators.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .core import (
    ItemSet,
    PreTopology,
    SetFamily,
    Universe,
    irreducible_states,
    is_pre_base_for,
)
from .errors import (
    AxiomViolation,
    BoundExceeded,
    EmptyMemberError,
    NotAPreBase,
    SchemaError,
)

RELATION_UNIVERSE_BOUND = 20


def _guard(size: int, default: int, what: str, bound: int | None = None) -> None:
    limit = bound if bound is not None else int(os.environ.get("PRETOPO_BOUND", default))
    if size > limit:
        raise BoundExceeded(f"{what}: {size} exceeds the configured bound {limit}")


@dataclass(frozen=True)
class Classification:
    is_knowledge_structure: bool
    is_knowledge_space: bool
    is_topology: bool
    is_quasi_ordinal: bool

    def to_obj(self) -> dict:
        return {
            "is_knowledge_structure": self.is_knowledge_structure,
            "is_knowledge_space": self.is_knowledge_space,
            "is_topology": self.is_topology,
            "is_quasi_ordinal": self.is_quasi_ordinal,
        }


def classify(family: SetFamily) -> Classification:
    """Flags for the structure hierarchy; monotone along it.

    Finite families make topology and quasi-ordinality coincide (both
    reduce to closure under binary intersection on top of a knowledge
    space); the two flags are kept separate for reporting.
    """
    full = family.universe.full.mask
    masks = sorted(family.masks())
    structure = family.has_mask(0) and family.has_mask(full)
    union_closed = structure
    inter_closed = structure
    if structure:
        mask_set = family.masks()
        for i, a in enumerate(masks):
            for b in masks[i + 1 :]:
                if a | b not in mask_set:
                    union_closed = False
                if a & b not in mask_set:
                    inter_closed = False
            if not union_closed and not inter_closed:
                break
    space = structure and union_closed
    quasi = space and inter_closed
    return Classification(
        is_knowledge_structure=structure,
        is_knowledge_space=space,
        is_topology=quasi,
        is_quasi_ordinal=quasi,
    )


def from_relation(
    universe: Universe,
    pairs: list[tuple[ItemSet, ItemSet]],
    bound: int | None = None,
) -> PreTopology:
    """Space of all sets U with K ∩ U = ∅ ⇒ H ∩ U = ∅ for every pair (K, H).

    The filter ranges over all 2^m subsets, so the universe size is guarded.
    """
    _guard(len(universe), RELATION_UNIVERSE_BOUND, "from_relation universe", bound)
    checked: list[tuple[int, int]] = []
    for k, h in pairs:
        if k.universe != universe or h.universe != universe:
            raise ValueError("relation pair over a different universe")
        if k.is_empty() or h.is_empty():
            raise EmptyMemberError("relation pairs must relate non-empty sets")
        checked.append((k.mask, h.mask))
    opens = []
    for u_mask in range(1 << len(universe)):
        if all(h & u_mask == 0 for k, h in checked if k & u_mask == 0):
            opens.append(u_mask)
    return PreTopology(
        universe, SetFamily.from_masks(universe, opens), _trusted=True
    )


class ClosureOperatorTable:
    """Extensional closure operator: a total map over all 2^m subsets.

    The four axioms (empty fixed, extensive, idempotent, monotone) are
    checked on construction; monotonicity via single-element extensions.
    """

    __slots__ = ("universe", "assignment")

    def __init__(self, universe: Universe, assignment: dict[int, int]):
        m = len(universe)
        if len(assignment) != 1 << m or set(assignment) != set(range(1 << m)):
            raise SchemaError("closure table must cover every subset exactly once")
        if assignment[0] != 0:
            raise AxiomViolation("empty-fixed", witness=str(ItemSet(universe, assignment[0])))
        for b, c in assignment.items():
            if b & ~c:
                raise AxiomViolation("extensive", witness=str(ItemSet(universe, b)))
            if assignment[c] != c:
                raise AxiomViolation("idempotent", witness=str(ItemSet(universe, b)))
            for i in range(m):
                if c & ~assignment[b | (1 << i)]:
                    raise AxiomViolation(
                        "monotone",
                        witness=(
                            str(ItemSet(universe, b)),
                            str(ItemSet(universe, b | (1 << i))),
                        ),
                    )
        self.universe = universe
        self.assignment = dict(assignment)

    def of(self, a: ItemSet) -> ItemSet:
        return ItemSet(self.universe, self.assignment[a.mask])

    @classmethod
    def from_obj(cls, obj: object) -> "ClosureOperatorTable":
        if not isinstance(obj, dict) or "universe" not in obj or "closure" not in obj:
            raise SchemaError("closure-operator JSON needs 'universe' and 'closure'")
        universe = Universe(obj["universe"])
        entries = obj["closure"]
        if not isinstance(entries, list):
            raise SchemaError("'closure' must be an array of {of, is} entries")
        assignment: dict[int, int] = {}
        for entry in entries:
            try:
                src = universe.subset(entry["of"])
                dst = universe.subset(entry["is"])
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"bad closure entry: {exc}") from None
            if src.mask in assignment:
                raise SchemaError(f"duplicate closure entry for {src}")
            assignment[src.mask] = dst.mask
        return cls(universe, assignment)

    @classmethod
    def from_json(cls, text: str) -> "ClosureOperatorTable":
        return cls.from_obj(json.loads(text))

    @classmethod
    def of_space(cls, space: PreTopology) -> "ClosureOperatorTable":
        from .operators import closure

        u = space.universe
        table = {
            m: closure(space, ItemSet(u, m)).mask for m in range(1 << len(u))
        }
        return cls(u, table)


def from_closure_operator(table: ClosureOperatorTable) -> PreTopology:
    """Opens are the complements of the operator's fixed points.

    Cross-checks that the resulting space's closure reproduces the table
    (the standard correspondence; the check guards transcription bugs).
    """
    from .operators import closure

    u = table.universe
    full = u.full.mask
    opens = [full & ~b for b, c in table.assignment.items() if b == c]
    space = PreTopology(u, SetFamily.from_masks(u, opens), _trusted=True)
    for b, c in table.assignment.items():
        got = closure(space, ItemSet(u, b))
        if got.mask != c:
            raise AxiomViolation(
                "closure-correspondence", witness=str(ItemSet(u, b))
            )
    return space


def _require_pre_base(candidate: SetFamily, space: PreTopology) -> None:
    if not is_pre_base_for(candidate, space):
        raise NotAPreBase("candidate family does not generate the space")


def is_atom_pre_base(candidate: SetFamily, space: PreTopology) -> bool:
    """Literal per-point minimality: no other member sits below a point.

    True iff for each member B and each z in B there is no other candidate
    member P with z in P and P ⊆ B.
    """
    _require_pre_base(candidate, space)
    members = candidate.nonempty_members()
    for b in members:
        for p in members:
            if p.mask != b.mask and p <= b:
                return False
    return True


def is_minimal_pre_base(candidate: SetFamily, space: PreTopology) -> bool:
    """True iff the candidate is the union-irreducible family of the space.

    For finite spaces the minimal pre-base is unique and equals the
    union-irreducible states; the drop-one subfamily probe in the tests
    confirms the equivalence with the literal definition.
    """
    _require_pre_base(candidate, space)
    return SetFamily(candidate.universe, candidate.nonempty_members()) == irreducible_states(space)
