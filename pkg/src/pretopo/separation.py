"""Separation axioms and the discrimination notions, with witnesses.

T3 and T4 are layered on top of T1; the bare point/closed-set and
closed/closed separation properties are reported independently as
regular_property and normal_property because several order-theoretic
results need them in spaces that fail T1. Witnesses are the first failing
pair in canonical scan order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ItemSet, PreTopology
from .operators import fringes


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    t2: bool
    regular_property: bool
    t3: bool
    normal_property: bool
    t4: bool
    discriminative: bool
    bi_discriminative: bool
    completely_discriminative: bool
    witnesses: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        out = {
            "t0": self.t0,
            "t1": self.t1,
            "t2": self.t2,
            "regular_property": self.regular_property,
            "t3": self.t3,
            "normal_property": self.normal_property,
            "t4": self.t4,
            "discriminative": self.discriminative,
            "bi_discriminative": self.bi_discriminative,
            "completely_discriminative": self.completely_discriminative,
        }
        out["witnesses"] = self.witnesses
        return out


def _system(space: PreTopology, bit: int) -> frozenset[int]:
    return frozenset(m for m in space.states.masks() if m & bit)


def is_t0(space: PreTopology) -> tuple[bool, tuple[str, str] | None]:
    """Some open contains exactly one of each pair of distinct points."""
    u = space.universe
    opens = space.states.masks()
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            pair = (1 << i) | (1 << j)
            if not any((m & pair).bit_count() == 1 for m in opens):
                return False, (u.labels[i], u.labels[j])
    return True, None


def is_discriminative(space: PreTopology) -> tuple[bool, tuple[str, str] | None]:
    """Distinct points have distinct state systems."""
    u = space.universe
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if _system(space, 1 << i) == _system(space, 1 << j):
                return False, (u.labels[i], u.labels[j])
    return True, None


def is_t1(space: PreTopology) -> tuple[bool, tuple[str, str] | None]:
    """Each point of a pair lies in an open missing the other.

    Failure witness (p, q): every state containing p contains q.
    """
    u = space.universe
    opens = space.states.masks()
    for i in range(len(u)):
        for j in range(len(u)):
            if i == j:
                continue
            bi, bj = 1 << i, 1 << j
            if not any(m & bi and not m & bj for m in opens):
                return False, (u.labels[i], u.labels[j])
    return True, None


def is_t2(space: PreTopology) -> tuple[bool, tuple[str, str] | None]:
    """Distinct points admit disjoint opens."""
    u = space.universe
    opens = sorted(space.states.masks())
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            bi, bj = 1 << i, 1 << j
            found = False
            for m in opens:
                if not m & bi:
                    continue
                for w in opens:
                    if w & bj and not (m & w):
                        found = True
                        break
                if found:
                    break
            if not found:
                return False, (u.labels[i], u.labels[j])
    return True, None


def _reach(space: PreTopology) -> dict[int, int]:
    """For each open W, the union of opens disjoint from W."""
    opens = space.states.masks()
    out: dict[int, int] = {}
    for w in opens:
        r = 0
        for m in opens:
            if not m & w:
                r |= m
        out[w] = r
    return out


def is_regular_property(
    space: PreTopology,
) -> tuple[bool, tuple[str, tuple[str, ...]] | None]:
    """Point and avoiding closed set separated by disjoint opens."""
    u = space.universe
    reach = _reach(space)
    opens = space.states.masks()
    closed = sorted(
        (space.universe.full.mask & ~m for m in opens),
        key=lambda m: (m.bit_count(), ItemSet(u, m).indices()),
    )
    for i in range(len(u)):
        bit = 1 << i
        for f in closed:
            if f & bit:
                continue
            if not any(f & ~w == 0 and reach[w] & bit for w in opens):
                return False, (u.labels[i], ItemSet(u, f).labels)
    return True, None


def is_normal_property(
    space: PreTopology,
) -> tuple[bool, tuple[tuple[str, ...], tuple[str, ...]] | None]:
    """Disjoint closed sets separated by disjoint opens."""
    u = space.universe
    opens = sorted(space.states.masks())
    full = u.full.mask
    closed = sorted(
        (full & ~m for m in opens),
        key=lambda m: (m.bit_count(), ItemSet(u, m).indices()),
    )
    for idx_e, e in enumerate(closed):
        for f in closed[idx_e + 1 :]:
            if e & f:
                continue
            ok = False
            for uu in opens:
                if e & ~uu:
                    continue
                for w in opens:
                    if not f & ~w and not (uu & w):
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False, (ItemSet(u, e).labels, ItemSet(u, f).labels)
    return True, None


def is_completely_discriminative(space: PreTopology) -> bool:
    """Every pair of distinct points lies in some pair of disjoint states."""
    ok, _ = _completely_discriminative(space)
    return ok


def _completely_discriminative(
    space: PreTopology,
) -> tuple[bool, tuple[str, str] | None]:
    u = space.universe
    opens = space.states.masks()
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            bi, bj = 1 << i, 1 << j
            found = False
            for h in opens:
                if not h & bi:
                    continue
                for l_ in opens:
                    if l_ & bj and not (h & l_):
                        found = True
                        break
                if found:
                    break
            if not found:
                return False, (u.labels[i], u.labels[j])
    return True, None


def bi_discriminative_via_fringe(space: PreTopology) -> bool:
    """T1 criterion through the inner fringe of the whole universe."""
    return fringes(space, space.universe.full).inner == space.universe.full


def separation_profile(space: PreTopology) -> SeparationProfile:
    witnesses: dict = {}
    t0, w = is_t0(space)
    if w:
        witnesses["t0"] = list(w)
    disc, w = is_discriminative(space)
    if w:
        witnesses["discriminative"] = list(w)
    t1, w = is_t1(space)
    if w:
        witnesses["t1"] = list(w)
    bi = bi_discriminative_via_fringe(space)
    if not bi and "t1" in witnesses:
        witnesses["bi_discriminative"] = witnesses["t1"]
    t2, w = is_t2(space)
    if w:
        witnesses["t2"] = list(w)
    cd, w = _completely_discriminative(space)
    if w:
        witnesses["completely_discriminative"] = list(w)
    reg, w = is_regular_property(space)
    if w:
        witnesses["regular_property"] = [w[0], list(w[1])]
    norm, w = is_normal_property(space)
    if w:
        witnesses["normal_property"] = [list(w[0]), list(w[1])]
    return SeparationProfile(
        t0=t0,
        t1=t1,
        t2=t2,
        regular_property=reg,
        t3=t1 and reg,
        normal_property=norm,
        t4=t1 and norm,
        discriminative=disc,
        bi_discriminative=bi,
        completely_discriminative=cd,
        witnesses=witnesses,
    )
