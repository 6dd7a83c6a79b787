"""Skill multimaps, problem functions, delineation, and its characterizations.

A skill multimap assigns every item a non-empty finite set of non-empty
competencies over a skill universe. The problem function p sends a skill
set R to the items having some competency inside R; the delineated
structure is the family of all p(R).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .core import ItemSet, KnowledgeStructure, SetFamily, Universe
from .errors import CombinatorialBoundExceeded, SchemaError, SkillBoundExceeded
from .structure import classify

SKILL_BOUND = 20
POOL_BOUND = 16


class SkillMultimap:
    """Items, skills, and the competency assignment with minimal members."""

    __slots__ = ("items", "skills", "mu", "mu_min")

    def __init__(
        self,
        items: Universe,
        skills: Universe,
        mu: dict[str, list[ItemSet]],
    ):
        for t in items.labels:
            if t not in mu or not mu[t]:
                raise ValueError(f"item {t!r} needs at least one competency")
        clean: dict[str, tuple[ItemSet, ...]] = {}
        minimal: dict[str, tuple[ItemSet, ...]] = {}
        for t in items.labels:
            comps = []
            seen = set()
            for c in mu[t]:
                if c.universe != skills:
                    raise ValueError("competency over a different skill universe")
                if c.is_empty():
                    raise ValueError(f"item {t!r} has an empty competency")
                if c.mask not in seen:
                    seen.add(c.mask)
                    comps.append(c)
            comps.sort(key=ItemSet.sort_key)
            clean[t] = tuple(comps)
            minimal[t] = tuple(
                c
                for c in comps
                if not any(o.mask != c.mask and o <= c for o in comps)
            )
        self.items = items
        self.skills = skills
        self.mu = clean
        self.mu_min = minimal

    def is_skill_function(self) -> bool:
        """Competencies of each item pairwise incomparable."""
        return all(self.mu[t] == self.mu_min[t] for t in self.items.labels)

    def competency_pool(self) -> tuple[ItemSet, ...]:
        """Deduplicated union of all competencies, canonical order."""
        seen: dict[int, ItemSet] = {}
        for t in self.items.labels:
            for c in self.mu[t]:
                seen[c.mask] = c
        return tuple(sorted(seen.values(), key=ItemSet.sort_key))

    def minimal_pool(self) -> tuple[ItemSet, ...]:
        seen: dict[int, ItemSet] = {}
        for t in self.items.labels:
            for c in self.mu_min[t]:
                seen[c.mask] = c
        return tuple(sorted(seen.values(), key=ItemSet.sort_key))

    def to_obj(self) -> dict:
        return {
            "items": list(self.items.labels),
            "skills": list(self.skills.labels),
            "mu": {t: [list(c.labels) for c in self.mu[t]] for t in self.items.labels},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2) + "\n"

    @classmethod
    def from_obj(cls, obj: object) -> "SkillMultimap":
        if (
            not isinstance(obj, dict)
            or "items" not in obj
            or "skills" not in obj
            or "mu" not in obj
        ):
            raise SchemaError("skill-map JSON needs 'items', 'skills' and 'mu'")
        items = Universe(obj["items"])
        skills = Universe(obj["skills"])
        raw = obj["mu"]
        if not isinstance(raw, dict):
            raise SchemaError("'mu' must map items to competency arrays")
        mu: dict[str, list[ItemSet]] = {}
        for t, comps in raw.items():
            if not isinstance(comps, list):
                raise SchemaError(f"competencies of {t!r} must be an array")
            try:
                mu[t] = [skills.subset(c) for c in comps]
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"bad competency for {t!r}: {exc}") from None
        try:
            return cls(items, skills, mu)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> "SkillMultimap":
        return cls.from_obj(json.loads(text))


def problem_function(m: SkillMultimap, r: ItemSet) -> ItemSet:
    """Items with some competency contained in r; monotone in r."""
    if r.universe != m.skills:
        raise ValueError("skill set over a different universe")
    mask = 0
    for i, t in enumerate(m.items.labels):
        if any(c.mask & ~r.mask == 0 for c in m.mu_min[t]):
            mask |= 1 << i
    return ItemSet(m.items, mask)


def _skill_guard(m: SkillMultimap, bound: int | None) -> None:
    limit = bound if bound is not None else int(
        os.environ.get("PRETOPO_BOUND", SKILL_BOUND)
    )
    if len(m.skills) > limit:
        raise SkillBoundExceeded(
            f"{len(m.skills)} skills exceed the delineation bound {limit}"
        )


def delineate(m: SkillMultimap, bound: int | None = None) -> KnowledgeStructure:
    """Family of all p(R) over the 2^|S| skill sets."""
    _skill_guard(m, bound)
    states = set()
    for r in range(1 << len(m.skills)):
        states.add(problem_function(m, ItemSet(m.skills, r)).mask)
    return KnowledgeStructure(m.items, SetFamily.from_masks(m.items, states))


@dataclass(frozen=True)
class DelineationReport:
    space: bool
    via_characterization: bool
    agree: bool

    def to_obj(self) -> dict:
        return {
            "space": self.space,
            "via_characterization": self.via_characterization,
            "agree": self.agree,
        }


def is_delineated_space(
    m: SkillMultimap, bound: int | None = None
) -> DelineationReport:
    """Union-closedness of the delineated family, via two routes.

    Direct route: check closure under binary unions. Characterization
    route: the family must coincide with all unions of p(D) for D drawn
    from the minimal competencies of all items.
    """
    family = delineate(m, bound).states
    space = classify(family).is_knowledge_space
    unions = {0}
    for d in m.minimal_pool():
        pd = problem_function(m, d).mask
        unions |= {u | pd for u in unions}
    via = unions == set(family.masks())
    return DelineationReport(space=space, via_characterization=via, agree=space == via)


def star_condition(m: SkillMultimap, bound: int | None = None) -> bool:
    """Covering condition on competency subfamilies.

    For every item g and every subfamily M of the global competency pool:
    if every minimal competency of g leaves a remainder against each
    member of M separately, it must leave a remainder against the union
    of M. The item-provenance quantifier collapses onto the full pool.
    """
    pool = m.competency_pool()
    limit = bound if bound is not None else int(
        os.environ.get("PRETOPO_BOUND", POOL_BOUND)
    )
    if len(pool) > limit:
        raise CombinatorialBoundExceeded(
            f"competency pool of {len(pool)} exceeds the bound {limit}"
        )
    pool_masks = [c.mask for c in pool]
    n = len(pool_masks)
    minimal = {
        t: [c.mask for c in m.mu_min[t]] for t in m.items.labels
    }
    for sub in range(1, 1 << n):
        chosen = [pool_masks[i] for i in range(n) if sub >> i & 1]
        union = 0
        for d in chosen:
            union |= d
        for t in m.items.labels:
            mins = minimal[t]
            if all(c & ~d for c in mins for d in chosen):
                if any(c & ~union == 0 for c in mins):
                    return False
    return True


def refines(c: ItemSet, family: tuple[ItemSet, ...]) -> bool:
    """Some member of the family sits inside c."""
    return any(w <= c for w in family)


def is_completely_discriminative_delineation(
    m: SkillMultimap, bound: int | None = None
) -> bool:
    """Minimal-competency route to complete discrimination.

    For each pair of distinct items there must be minimal competencies
    whose refinement marks never overlap across items.
    """
    del bound
    labels = m.items.labels
    for i, h in enumerate(labels):
        for q in labels[i + 1 :]:
            found = False
            for ch in m.mu_min[h]:
                for cq in m.mu_min[q]:
                    if all(
                        not (refines(ch, m.mu_min[g]) and refines(cq, m.mu_min[g]))
                        for g in labels
                    ):
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True
