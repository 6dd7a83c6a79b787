"""Cardinal functions and the primary-items algorithms.

Weight, density, cellularity and character of a finite space, the
greedy max-coverage construction of a dense item set with its prune
pass, the row/column matrix formulation of the same procedure, and an
exact branch-and-bound density oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ItemSet,
    PreTopology,
    SetFamily,
    irreducible_states,
    union_closure,
)
from .errors import NotMinimalPreBase
from .structure import _guard

DENSITY_UNIVERSE_BOUND = 24
CELLULARITY_STATES_BOUND = 4096


def weight(space: PreTopology) -> int:
    """Size of the minimal pre-base."""
    return len(irreducible_states(space).members)


def _greedy_hitting(members: list[int], m: int) -> list[int]:
    """Greedy hitting set over member masks, as item indices."""
    chosen: list[int] = []
    left = [b for b in members]
    while left:
        best_i, best_n = 0, -1
        for i in range(m):
            bit = 1 << i
            n = sum(1 for b in left if b & bit)
            if n > best_n:
                best_i, best_n = i, n
        chosen.append(best_i)
        bit = 1 << best_i
        left = [b for b in left if not b & bit]
    return sorted(chosen)


def _disjoint_lower_bound(members: list[int]) -> int:
    """Pairwise disjoint members each need their own hitter."""
    used = 0
    count = 0
    for b in members:
        if not b & used:
            used |= b
            count += 1
    return count


def density_exact(
    space: PreTopology, bound: int | None = None
) -> tuple[int, ItemSet]:
    """Minimum dense set as a minimum hitting set of the minimal pre-base.

    A set is dense iff it meets every member of the minimal pre-base.
    Returns the lexicographically least optimum.
    """
    u = space.universe
    m = len(u)
    _guard(m, DENSITY_UNIVERSE_BOUND, "density universe", bound)
    members = [s.mask for s in irreducible_states(space).members]
    if not members:
        return 0, u.empty
    best = _greedy_hitting(members, m)
    best_key = (len(best), tuple(best))

    def rec(chosen: list[int], start: int) -> None:
        nonlocal best_key, best
        left = [b for b in members if not any(b >> i & 1 for i in chosen)]
        if not left:
            key = (len(chosen), tuple(chosen))
            if key < best_key:
                best_key, best = key, list(chosen)
            return
        if len(chosen) + _disjoint_lower_bound(left) > best_key[0]:
            return
        for i in range(start, m):
            if any(b >> i & 1 for b in left):
                chosen.append(i)
                rec(chosen, i + 1)
                chosen.pop()

    rec([], 0)
    mask = 0
    for i in best:
        mask |= 1 << i
    return len(best), ItemSet(u, mask)


@dataclass(frozen=True)
class PrimaryItemsTrace:
    """Pick-by-pick record of the greedy construction and its prune."""

    picked: tuple[tuple[str, SetFamily], ...]
    pruned: tuple[ItemSet, ...]
    result: ItemSet

    def to_obj(self) -> dict:
        return {
            "picked": [
                {"item": p, "block": [list(b.labels) for b in blk.members]}
                for p, blk in self.picked
            ],
            "pruned": [list(b.labels) for b in self.pruned],
            "result": list(self.result.labels),
        }


def _select(
    masks: list[int],
    m: int,
    consumed_items: int,
    order: list[int] | None = None,
) -> int:
    """One greedy pick over the remaining base members.

    Maximum hit count; when that count is 1 prefer items outside every
    already consumed member; then maximum covered-item count, then the
    first in `order` (universe order when absent).
    """
    ranks = order if order is not None else list(range(m))
    counts = {i: sum(1 for b in masks if b >> i & 1) for i in ranks}
    top = max(counts.values())
    cand = [i for i in ranks if counts[i] == top]
    if top == 1:
        outside = [i for i in cand if not consumed_items >> i & 1]
        if outside:
            cand = outside
    best_i = cand[0]
    best_cov = -1
    for i in cand:
        cov = 0
        for b in masks:
            if b >> i & 1:
                cov |= b
        cov_n = bin(cov).count("1")
        if cov_n > best_cov:
            best_i, best_cov = i, cov_n
    return best_i


def _prune(
    u, picks: list[tuple[int, list[int]]], all_members: list[int]
) -> tuple[tuple[ItemSet, ...], ItemSet]:
    """Drop a pick when the survivors still hit every base member."""
    current = 0
    for i, _ in picks:
        current |= 1 << i
    stages: list[ItemSet] = []
    for i, _ in picks:
        trial = current & ~(1 << i)
        if all(b & trial for b in all_members):
            current = trial
        stages.append(ItemSet(u, current))
    return tuple(stages), ItemSet(u, current)


def greedy_primary_items(space: PreTopology) -> PrimaryItemsTrace:
    """Greedy dense-set construction over the minimal pre-base."""
    u = space.universe
    m = len(u)
    base = [s.mask for s in irreducible_states(space).members]
    remaining = list(base)
    consumed = 0
    picks: list[tuple[int, list[int]]] = []
    while remaining:
        i = _select(remaining, m, consumed)
        block = [b for b in remaining if b >> i & 1]
        remaining = [b for b in remaining if not b >> i & 1]
        for b in block:
            consumed |= b
        picks.append((i, block))
    pruned, result = _prune(u, picks, base)
    picked = tuple(
        (u.labels[i], SetFamily.from_masks(u, blk)) for i, blk in picks
    )
    return PrimaryItemsTrace(picked=picked, pruned=pruned, result=result)


@dataclass(frozen=True)
class MatrixState:
    """Permuted incidence matrix with its block decomposition."""

    rows: tuple[str, ...]
    cols: tuple[ItemSet, ...]
    t: tuple[tuple[int, ...], ...]
    block_sizes: tuple[int, ...]

    def final_submatrix(self) -> tuple[tuple[int, ...], ...]:
        n_rows = len(self.block_sizes)
        n_cols = sum(self.block_sizes)
        return tuple(row[:n_cols] for row in self.t[:n_rows])

    def to_obj(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": [list(c.labels) for c in self.cols],
            "t": [list(r) for r in self.t],
            "block_sizes": list(self.block_sizes),
        }


def matrix_primary_items(base: SetFamily) -> tuple[ItemSet, MatrixState]:
    """Row/column form of the greedy construction plus prune.

    Selected rows move to the front, their block columns move to the
    front of the unconsumed column range; both moves keep the relative
    order of everything else.
    """
    u = base.universe
    space = union_closure(base)
    minimal = irreducible_states(space)
    if set(minimal.masks()) != {s.mask for s in base.nonempty_members()}:
        raise NotMinimalPreBase("base is not the minimal pre-base of its space")
    m = len(u)
    rows = list(range(m))
    cols = [s.mask for s in minimal.members]
    picks: list[tuple[int, list[int]]] = []
    block_sizes: list[int] = []
    done = 0
    consumed = 0
    k = 0
    while done < len(cols):
        rest = cols[done:]
        sub_order = rows[k:]
        i = _select(rest, m, consumed, order=sub_order)
        block = [b for b in rest if b >> i & 1]
        keep = [b for b in rest if not b >> i & 1]
        for b in block:
            consumed |= b
        cols = cols[:done] + block + keep
        rows.remove(i)
        rows.insert(k, i)
        picks.append((i, block))
        block_sizes.append(len(block))
        done += len(block)
        k += 1
    t = tuple(
        tuple(1 if c >> r & 1 else 0 for c in cols) for r in rows
    )
    state = MatrixState(
        rows=tuple(u.labels[r] for r in rows),
        cols=tuple(ItemSet(u, c) for c in cols),
        t=t,
        block_sizes=tuple(block_sizes),
    )
    base_masks = [s.mask for s in minimal.members]
    _, result = _prune(u, picks, base_masks)
    return result, state


def cellularity(space: PreTopology, bound: int | None = None) -> int:
    """Maximum number of pairwise disjoint nonempty open sets."""
    opens = sorted(b for b in space.states.masks() if b)
    _guard(len(opens), CELLULARITY_STATES_BOUND, "cellularity states", bound)
    best = 0

    def rec(idx: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + len(opens) - idx <= best:
            return
        for j in range(idx, len(opens)):
            if not opens[j] & used:
                rec(j + 1, used | opens[j], count + 1)

    rec(0, 0, 0)
    return best


def character(space: PreTopology, z: str | None = None) -> int:
    """Size of the minimal neighborhood pre-base at z, or the maximum."""
    if z is not None:
        bit = 1 << space.universe.index(z)
        around = [b for b in space.states.masks() if b & bit]
        return sum(
            1
            for b in around
            if not any(o != b and o & ~b == 0 for o in around)
        )
    return max(character(space, t) for t in space.universe.labels)
