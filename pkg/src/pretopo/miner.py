"""Exhaustive small-universe enumeration and automated theorem audits.

Enumerates every union-closed family on small universes (and seeded
random families on slightly larger ones), then runs a registry of
checks, one per documented claim, reporting counterexamples instead of
raising. Claims the library does not assert (the literal atom-pre-base
reading, greedy optimality, boundary-union subadditivity) run in
audit-only mode: their reports carry witnesses and frequencies without
a pass/fail verdict.

Heavy checks downsample deterministically from the enumerated stream;
fast in-loop formulas are tied back to the public operators by
dedicated definition checks so the audited statements always rest on
library behaviour.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import cardinal, connectivity, maps, operators, order, separation, skills, structure
from .core import (
    ItemSet,
    PreTopology,
    SetFamily,
    Universe,
    distance,
    irreducible_states,
    is_pre_base_for,
    union_closure,
    union_closure_masks,
)
from .errors import PretopoError
from .skills import SkillMultimap
from .structure import _guard

MAX_EXHAUSTIVE = 4
MAX_SAMPLED = 6
DEFAULT_SAMPLES = 2000
MAX_STORED = 20

# checks that would dominate the sampled sweeps run on deterministic
# prefixes of this many spaces; exhaustive runs are never truncated
CAP_HEAVY = 2000
CAP_VERY_HEAVY = 500


def _universe(n: int) -> Universe:
    return Universe([f"z{i + 1}" for i in range(n)])


def enumerate_spaces(n: int, bound: int | None = None) -> list[PreTopology]:
    """Every union-closed family containing the empty set and the
    whole universe, exactly once, in canonical order.

    Masks are decided in increasing numeric order; a union of already
    chosen members is numerically larger than each operand, so pending
    union obligations always sit strictly ahead of the cursor.
    """
    if n < 1:
        raise PretopoError("universe size must be at least 1")
    _guard(n, MAX_EXHAUSTIVE, "exhaustive enumeration universe", bound)
    u = _universe(n)
    full = (1 << n) - 1
    found: list[tuple[int, ...]] = []

    def rec(m: int, chosen: list[int], forced: frozenset[int]) -> None:
        if m == full:
            found.append(tuple(chosen))
            return
        if m not in forced:
            rec(m + 1, chosen, forced)
        unions = {m | c for c in chosen}
        nf = (forced | {x for x in unions if m < x < full}) - {m}
        chosen.append(m)
        rec(m + 1, chosen, frozenset(nf))
        chosen.pop()

    rec(1, [], frozenset())
    found.sort(key=lambda masks: (len(masks), masks))
    return [
        PreTopology(u, SetFamily.from_masks(u, {0, full, *masks}), _trusted=True)
        for masks in found
    ]


def sample_spaces(
    n: int, count: int, seed: int = 0, bound: int | None = None
) -> list[PreTopology]:
    """Seeded stream of union closures of random generator families.

    Repetition is allowed; the stream is reproducible from (n, count,
    seed) alone.
    """
    if n < 1:
        raise PretopoError("universe size must be at least 1")
    _guard(n, MAX_SAMPLED, "sampled enumeration universe", bound)
    rng = random.Random(f"spaces:{n}:{seed}")
    u = _universe(n)
    full = (1 << n) - 1
    out = []
    for _ in range(count):
        gens = [rng.randint(1, full) for _ in range(rng.randint(1, 2 * n))]
        gens.append(full)
        masks = union_closure_masks(gens)
        out.append(PreTopology(u, SetFamily.from_masks(u, masks), _trusted=True))
    return out


@dataclass(frozen=True)
class MinerReport:
    theorem: str
    checked: int
    violations: tuple[tuple[str, str], ...]
    status: str
    summary: str | None = None

    def to_obj(self) -> dict:
        obj = {
            "theorem": self.theorem,
            "checked": self.checked,
            "violations": [
                {"space": s, "witness": w} for s, w in self.violations
            ],
            "status": self.status,
        }
        if self.summary is not None:
            obj["summary"] = self.summary
        return obj


def reports_to_json(reports: Iterable[MinerReport]) -> str:
    return json.dumps([r.to_obj() for r in reports], indent=2) + "\n"


class _Collector:
    """Counts every violation, stores the first MAX_STORED."""

    __slots__ = ("stored", "total")

    def __init__(self) -> None:
        self.stored: list[tuple[str, str]] = []
        self.total = 0

    def add(self, space_ser: str, witness: str) -> None:
        self.total += 1
        if len(self.stored) < MAX_STORED:
            self.stored.append((space_ser, witness))


class _View:
    """One enumerated space with lazily shared tables.

    The closure and interior tables are built with the public
    operators; the derived-set table uses an in-place rewriting of the
    definition for speed and is reconciled with the public function by
    the derived-set-definition check.
    """

    __slots__ = (
        "space", "n", "full", "opens",
        "_cl", "_itr", "_der", "_fr", "_irr", "_qo", "_ser",
        "_t0", "_t1", "_wg", "_tight1", "_profile",
    )

    def __init__(self, space: PreTopology):
        self.space = space
        self.n = len(space.universe)
        self.full = (1 << self.n) - 1
        self.opens = sorted(space.states.masks())
        self._cl = None
        self._itr = None
        self._der = None
        self._fr = None
        self._irr = None
        self._qo = None
        self._ser = None
        self._t0 = None
        self._t1 = None
        self._wg = None
        self._tight1 = None
        self._profile = None

    def item(self, mask: int) -> ItemSet:
        return ItemSet(self.space.universe, mask)

    def ser(self) -> str:
        if self._ser is None:
            self._ser = json.dumps(self.space.to_obj(), separators=(",", ":"))
        return self._ser

    def cl(self) -> list[int]:
        if self._cl is None:
            sp = self.space
            self._cl = [
                operators.closure(sp, self.item(a)).mask
                for a in range(self.full + 1)
            ]
        return self._cl

    def itr(self) -> list[int]:
        if self._itr is None:
            sp = self.space
            self._itr = [
                operators.interior(sp, self.item(a)).mask
                for a in range(self.full + 1)
            ]
        return self._itr

    def der(self) -> list[int]:
        if self._der is None:
            table = []
            for a in range(self.full + 1):
                d = self.full
                for o in self.opens:
                    x = o & a
                    if x == 0:
                        d &= ~o
                    elif x & (x - 1) == 0:
                        d &= ~x
                table.append(d)
            self._der = table
        return self._der

    def fr(self) -> dict[int, tuple[int, int]]:
        if self._fr is None:
            sp = self.space
            out = {}
            for o in self.opens:
                rep = operators.fringes(sp, self.item(o))
                out[o] = (rep.inner.mask, rep.outer.mask)
            self._fr = out
        return self._fr

    def irr(self) -> SetFamily:
        if self._irr is None:
            self._irr = irreducible_states(self.space)
        return self._irr

    def quasi_ordinal(self) -> bool:
        if self._qo is None:
            self._qo = order.is_quasi_ordinal(self.space)
        return self._qo

    def t0(self) -> bool:
        if self._t0 is None:
            self._t0 = separation.is_t0(self.space)[0]
        return self._t0

    def t1(self) -> bool:
        if self._t1 is None:
            self._t1 = separation.is_t1(self.space)[0]
        return self._t1

    def well_graded(self) -> bool:
        """One-step-descent form: every pair of states admits a state
        one toggled differing item closer; chains then compose."""
        if self._wg is None:
            has = self.space.states.has_mask
            ok = True
            for k in self.opens:
                for h in self.opens:
                    delta = k ^ h
                    if not delta:
                        continue
                    rest = delta
                    step = False
                    while rest:
                        low = rest & -rest
                        rest ^= low
                        if has(k ^ low):
                            step = True
                            break
                    if not step:
                        ok = False
                        break
                if not ok:
                    break
            self._wg = ok
        return self._wg

    def tight1(self) -> bool:
        if self._tight1 is None:
            self._tight1 = connectivity.is_tight_n_connected(self.space, 1)
        return self._tight1

    def profile(self) -> separation.SeparationProfile:
        if self._profile is None:
            self._profile = separation.separation_profile(self.space)
        return self._profile


_RunResult = tuple[int, list[tuple[str, str]], str | None]
_Runner = Callable[[list[_View], random.Random], _RunResult]


@dataclass(frozen=True)
class _Check:
    ident: str
    audit_only: bool
    run: _Runner


_REGISTRY: dict[str, _Check] = {}


def _register(ident: str, audit_only: bool = False):
    def deco(fn: _Runner) -> _Runner:
        _REGISTRY[ident] = _Check(ident, audit_only, fn)
        return fn

    return deco


def available_theorems() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def _cap(views: list[_View], limit: int) -> list[_View]:
    return views if len(views) <= limit else views[:limit]


def _random_space(u: Universe, rng: random.Random) -> PreTopology:
    full = (1 << len(u)) - 1
    gens = [rng.randint(1, full) for _ in range(rng.randint(1, 2 * len(u)))]
    gens.append(full)
    return PreTopology(
        u, SetFamily.from_masks(u, union_closure_masks(gens)), _trusted=True
    )


def _random_map(
    x: Universe, y: Universe, rng: random.Random
) -> maps.PointMap:
    return maps.PointMap(
        x, y, {a: rng.choice(y.labels) for a in x.labels}
    )


def sample_quasi_orders(n: int, count: int, seed: int = 0) -> list[order.QuasiOrder]:
    """Seeded random quasi-orders: transitive closures of sparse
    random relations over the reflexive diagonal."""
    rng = random.Random(f"quasi-orders:{n}:{seed}")
    u = _universe(n)
    out = []
    for _ in range(count):
        rel = [
            [i == j or rng.random() < 0.3 for j in range(n)] for i in range(n)
        ]
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        up = tuple(
            sum(1 << j for j in range(n) if rel[i][j]) for i in range(n)
        )
        out.append(order.QuasiOrder(u, up))
    return out


def enumerate_multimaps(
    n_items: int, n_skills: int, max_competencies: int
) -> Iterator[SkillMultimap]:
    """All skill multimaps with the given exact universe sizes and at
    most max_competencies competencies per item."""
    items = Universe([f"q{i + 1}" for i in range(n_items)])
    skill_u = Universe([f"s{i + 1}" for i in range(n_skills)])
    comp_masks = list(range(1, 1 << n_skills))
    choices: list[tuple[int, ...]] = []
    for size in range(1, max_competencies + 1):
        choices.extend(itertools.combinations(comp_masks, size))
    for assignment in itertools.product(choices, repeat=n_items):
        mu = {
            label: [ItemSet(skill_u, m) for m in comps]
            for label, comps in zip(items.labels, assignment)
        }
        yield SkillMultimap(items, skill_u, mu)


def audit(
    theorem_set: str | Iterable[str] = "all",
    n: int = 3,
    seed: int = 0,
    samples: int | None = None,
) -> list[MinerReport]:
    """Run the selected checks over the size-n space stream.

    Exhaustive for n up to 4, seeded sampling beyond. Reports are a
    pure function of (theorem_set, n, seed, samples).
    """
    if isinstance(theorem_set, str):
        idents = list(_REGISTRY) if theorem_set == "all" else [theorem_set]
    else:
        idents = list(theorem_set)
    for ident in idents:
        if ident not in _REGISTRY:
            raise PretopoError(f"unknown theorem id: {ident}")
    if samples is not None:
        spaces = sample_spaces(n, samples, seed)
    elif n <= MAX_EXHAUSTIVE:
        spaces = enumerate_spaces(n)
    else:
        spaces = sample_spaces(n, DEFAULT_SAMPLES, seed)
    views = [_View(s) for s in spaces]
    reports = []
    for ident in idents:
        chk = _REGISTRY[ident]
        rng = random.Random(f"{seed}:{ident}")
        checked, stored, summary = chk.run(views, rng)
        if chk.audit_only:
            status = "audit-only"
        else:
            status = "holds" if not stored else "fails"
        reports.append(
            MinerReport(
                theorem=ident,
                checked=checked,
                violations=tuple(stored),
                status=status,
                summary=summary,
            )
        )
    return reports


# ---------------------------------------------------------------- structure


@_register("union-closure-laws")
def _chk_union_closure_laws(views, rng):
    col = _Collector()
    for v in views:
        sp = union_closure(v.irr())
        if sp.states.masks() != v.space.states.masks():
            col.add(v.ser(), "union closure of the minimal pre-base differs")
            continue
        if not (sp.states.has_mask(0) and sp.states.has_mask(v.full)):
            col.add(v.ser(), "closure dropped the empty set or the universe")
        if union_closure(sp.states).states.masks() != sp.states.masks():
            col.add(v.ser(), "union closure is not idempotent")
    return len(views), col.stored, None


@_register("minimal-base-in-every-pre-base")
def _chk_minimal_base_containment(views, rng):
    """The union-irreducible states sit inside every generating
    subfamily, so the minimal pre-base really is minimum."""
    col = _Collector()
    checked = 0
    for v in views:
        irr_masks = set(v.irr().masks()) - {0}
        nonzero = [m for m in v.opens if m]
        k = len(nonzero)
        if k <= 10:
            pool = range(1, 1 << k)
        else:
            pool = [rng.randrange(1, 1 << k) for _ in range(200)]
        target = set(v.opens)
        for pick in pool:
            fam = [nonzero[i] for i in range(k) if pick >> i & 1]
            checked += 1
            if union_closure_masks(fam) != target:
                continue
            if not irr_masks <= set(fam):
                col.add(v.ser(), f"pre-base {fam} misses an irreducible state")
    return checked, col.stored, None


@_register("distance-metric")
def _chk_distance_metric(views, rng):
    u = views[0].space.universe if views else _universe(2)
    full = (1 << len(u)) - 1
    pts = [ItemSet(u, m) for m in range(full + 1)]
    col = _Collector()
    checked = 0
    for a in pts:
        for b in pts:
            checked += 1
            d = distance(a, b)
            if d != bin(a.mask ^ b.mask).count("1"):
                col.add("-", f"d({a.labels},{b.labels}) wrong")
            if (d == 0) != (a.mask == b.mask):
                col.add("-", f"identity fails at ({a.labels},{b.labels})")
            if d != distance(b, a):
                col.add("-", f"symmetry fails at ({a.labels},{b.labels})")
            for c in pts:
                if distance(a, c) > d + distance(b, c):
                    col.add("-", f"triangle fails at ({a.labels},{b.labels},{c.labels})")
    return checked, col.stored, None


@_register("minimal-pre-base-recognized")
def _chk_minimal_pre_base_recognized(views, rng):
    col = _Collector()
    for v in views:
        base = v.irr()
        if not is_pre_base_for(base, v.space):
            col.add(v.ser(), "irreducible states rejected as a pre-base")
        if not structure.is_minimal_pre_base(base, v.space):
            col.add(v.ser(), "irreducible states rejected as the minimal pre-base")
    return len(views), col.stored, None


@_register("closure-operator-round-trip")
def _chk_closure_round_trip(views, rng):
    col = _Collector()
    for v in _cap(views, CAP_HEAVY):
        table = structure.ClosureOperatorTable.of_space(v.space)
        back = structure.from_closure_operator(table)
        if back.states.masks() != v.space.states.masks():
            col.add(v.ser(), "closure-operator round trip changed the family")
    return len(_cap(views, CAP_HEAVY)), col.stored, None


@_register("classify-monotone")
def _chk_classify_monotone(views, rng):
    col = _Collector()
    for v in views:
        c = structure.classify(v.space.states)
        if not c.is_knowledge_space:
            col.add(v.ser(), "enumerated family not classified as a space")
        if c.is_knowledge_space and not c.is_knowledge_structure:
            col.add(v.ser(), "space flag without structure flag")
        if c.is_quasi_ordinal and not c.is_knowledge_space:
            col.add(v.ser(), "quasi-ordinal flag without space flag")
        if c.is_quasi_ordinal != c.is_topology:
            col.add(v.ser(), "quasi-ordinal and topology flags disagree")
        if c.is_quasi_ordinal != v.quasi_ordinal():
            col.add(v.ser(), "classification disagrees with the intersection test")
    return len(views), col.stored, None


@_register("atom-pre-base-of-minimal", audit_only=True)
def _chk_atom_pre_base(views, rng):
    """Literal reading: the minimal pre-base is an atom pre-base.

    False whenever two irreducible states are nested, e.g. the family
    containing only {z1} and {z1,z2} besides the trivial members.
    """
    col = _Collector()
    for v in views:
        if not structure.is_atom_pre_base(v.irr(), v.space):
            col.add(v.ser(), "minimal pre-base is not an antichain")
    frac = f"{col.total}/{len(views)} minimal pre-bases are not atom pre-bases"
    return len(views), col.stored, frac


# ---------------------------------------------------------------- operators


@_register("closure-axioms")
def _chk_closure_axioms(views, rng):
    """Empty set fixed, extensive, idempotent; monotone via
    single-item extensions, which compose along chains."""
    col = _Collector()
    for v in views:
        cl = v.cl()
        if cl[0] != 0:
            col.add(v.ser(), "closure of the empty set is nonempty")
        for a in range(v.full + 1):
            c = cl[a]
            if a & ~c:
                col.add(v.ser(), f"not extensive at {a:b}")
            if cl[c] != c:
                col.add(v.ser(), f"not idempotent at {a:b}")
            rest = v.full & ~a
            while rest:
                low = rest & -rest
                rest ^= low
                if c & ~cl[a | low]:
                    col.add(v.ser(), f"not monotone at {a:b}+{low:b}")
    return len(views), col.stored, None


@_register("closure-point-test")
def _chk_closure_point_test(views, rng):
    """z lies in the closure of A exactly when every open set
    containing z meets A."""
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    for v in vs:
        cl = v.cl()
        for a in range(v.full + 1):
            miss = 0
            for o in v.opens:
                if not o & a:
                    miss |= o
            if cl[a] != v.full & ~miss:
                col.add(v.ser(), f"point test disagrees at {a:b}")
    return len(vs), col.stored, None


@_register("derived-set-definition")
def _chk_derived_set_definition(views, rng):
    col = _Collector()
    vs = _cap(views, CAP_VERY_HEAVY)
    for v in vs:
        der = v.der()
        for a in range(v.full + 1):
            got = operators.derived_set(v.space, v.item(a)).mask
            if got != der[a]:
                col.add(v.ser(), f"derived set disagrees at {a:b}")
    return len(vs), col.stored, None


@_register("closure-derived-union")
def _chk_closure_derived_union(views, rng):
    col = _Collector()
    for v in views:
        cl = v.cl()
        der = v.der()
        for a in range(v.full + 1):
            if cl[a] != a | der[a]:
                col.add(v.ser(), f"closure != set plus derived set at {a:b}")
    return len(views), col.stored, None


@_register("closure-union-superadditive")
def _chk_closure_union_superadditive(views, rng):
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    for v in vs:
        cl = v.cl()
        for a in range(v.full + 1):
            ca = cl[a]
            for b in range(a, v.full + 1):
                if (ca | cl[b]) & ~cl[a | b]:
                    col.add(v.ser(), f"union closure too small at {a:b},{b:b}")
    return len(vs), col.stored, None


@_register("boundary-formulas")
def _chk_boundary_formulas(views, rng):
    col = _Collector()
    for v in views:
        cl = v.cl()
        itr = v.itr()
        for a in range(v.full + 1):
            bd = cl[a] & cl[v.full & ~a]
            if bd != cl[a] & ~itr[a]:
                col.add(v.ser(), f"boundary formulas split at {a:b}")
            if cl[bd] != bd:
                col.add(v.ser(), f"boundary not closed at {a:b}")
    for v in _cap(views, CAP_VERY_HEAVY):
        cl = v.cl()
        for a in range(v.full + 1):
            got = operators.boundary(v.space, v.item(a)).mask
            if got != cl[a] & cl[v.full & ~a]:
                col.add(v.ser(), f"boundary() disagrees at {a:b}")
            comp = operators.boundary(v.space, v.item(v.full & ~a)).mask
            if got != comp:
                col.add(v.ser(), f"boundary not complement-symmetric at {a:b}")
    return len(views), col.stored, None


@_register("interior-closure-duality")
def _chk_interior_closure_duality(views, rng):
    col = _Collector()
    for v in views:
        cl = v.cl()
        itr = v.itr()
        for a in range(v.full + 1):
            if itr[a] != v.full & ~cl[v.full & ~a]:
                col.add(v.ser(), f"duality fails at {a:b}")
    return len(views), col.stored, None


@_register("boundary-union-subadditivity", audit_only=True)
def _chk_boundary_union_subadditivity(views, rng):
    """Boundary of a union inside the union of boundaries: fails in
    general; the audit records how often."""
    col = _Collector()
    vs = _cap(views, CAP_VERY_HEAVY)
    pairs = 0
    bad_pairs = 0
    for v in vs:
        cl = v.cl()
        itr = v.itr()

        def bd(a: int) -> int:
            return cl[a] & ~itr[a]

        hit = False
        for a in range(v.full + 1):
            for b in range(a, v.full + 1):
                pairs += 1
                if bd(a | b) & ~(bd(a) | bd(b)):
                    bad_pairs += 1
                    if not hit:
                        hit = True
                        col.add(v.ser(), f"strict at {a:b},{b:b}")
    summary = f"{bad_pairs}/{pairs} subset pairs violate subadditivity"
    return len(vs), col.stored, summary


@_register("fringe-characterizations")
def _chk_fringe_characterizations(views, rng):
    """Inner fringe via the closure of the complement of H minus the
    candidate; outer fringe via the derived set of the complement."""
    col = _Collector()
    for v in views:
        cl = v.cl()
        der = v.der()
        for h, (inner, outer) in v.fr().items():
            want_inner = 0
            rest = h
            while rest:
                low = rest & -rest
                rest ^= low
                hm = h & ~low
                if not hm & cl[v.full & ~hm]:
                    want_inner |= low
            if inner != want_inner:
                col.add(v.ser(), f"inner fringe of {h:b} disagrees")
            want_outer = (v.full & ~h) & ~der[v.full & ~h]
            if outer != want_outer:
                col.add(v.ser(), f"outer fringe of {h:b} disagrees")
            rest = outer
            while rest:
                low = rest & -rest
                rest ^= low
                if not v.space.states.has_mask(h | low):
                    col.add(v.ser(), f"outer fringe item {low:b} does not extend {h:b}")
    return len(views), col.stored, None


# --------------------------------------------------------------- separation


def _signatures(v: _View) -> list[int]:
    """Per item, the bitmask over open-set indices of the opens
    containing it. Direct from the family, independent of the
    separation predicates under audit."""
    sigs = [0] * v.n
    for i, o in enumerate(v.opens):
        rest = o
        while rest:
            low = rest & -rest
            rest ^= low
            sigs[low.bit_length() - 1] |= 1 << i
    return sigs


@_register("separation-hierarchy")
def _chk_separation_hierarchy(views, rng):
    """T0 against signature distinctness, T1 against both the
    bi-discriminative signatures and open complements of singletons,
    T2 against complete discrimination, and the implication chain of
    the profile flags."""
    col = _Collector()
    for v in views:
        sigs = _signatures(v)
        t0 = len(set(sigs)) == v.n
        if v.t0() != t0:
            col.add(v.ser(), "T0 disagrees with signature distinctness")
        bi = all(
            sigs[p] & ~sigs[q] and sigs[q] & ~sigs[p]
            for p in range(v.n)
            for q in range(p + 1, v.n)
        )
        if v.t1() != bi:
            col.add(v.ser(), "T1 disagrees with bi-discrimination")
        co_singletons = all(
            v.space.states.has_mask(v.full & ~(1 << t)) for t in range(v.n)
        )
        if v.t1() != co_singletons:
            col.add(v.ser(), "T1 disagrees with open singleton complements")
        inner_q = v.fr()[v.full][0]
        if v.t1() != (inner_q == v.full):
            col.add(v.ser(), "T1 disagrees with the inner fringe of the universe")
    for v in _cap(views, CAP_HEAVY):
        if separation.is_t2(v.space)[0] != separation.is_completely_discriminative(v.space):
            col.add(v.ser(), "T2 disagrees with complete discrimination")
        if separation.bi_discriminative_via_fringe(v.space) != v.t1():
            col.add(v.ser(), "fringe route to bi-discrimination disagrees")
    for v in _cap(views, CAP_VERY_HEAVY):
        p = v.profile()
        chain = (p.t4, p.t3, p.t2, p.t1, p.t0)
        for hi, lo in zip(chain, chain[1:]):
            if hi and not lo:
                col.add(v.ser(), "separation hierarchy implication fails")
                break
        if p.t0 != v.t0() or p.t1 != v.t1():
            col.add(v.ser(), "profile flags disagree with predicates")
        if p.discriminative != p.t0 or p.bi_discriminative != p.t1:
            col.add(v.ser(), "profile discrimination flags disagree")
        if p.completely_discriminative != p.t2:
            col.add(v.ser(), "profile complete discrimination disagrees")
    return len(views), col.stored, None


@_register("size-weight-bound")
def _chk_size_weight_bound(views, rng):
    col = _Collector()
    checked = 0
    for v in views:
        if not v.t0():
            continue
        checked += 1
        if len(v.opens) > 1 << cardinal.weight(v.space):
            col.add(v.ser(), "family larger than 2^weight on a T0 space")
    return checked, col.stored, None


@_register("locally-closed-uniqueness")
def _chk_locally_closed_uniqueness(views, rng):
    """On T0 spaces, two opens whose symmetric difference sits inside
    one of their locally-closed fringes and whose fringes agree must
    be equal."""
    col = _Collector()
    vs = [v for v in _cap(views, CAP_HEAVY) if v.t0()]
    for v in vs:
        fr = v.fr()
        for a in v.opens:
            ia, oa = fr[a]
            for b in v.opens:
                if a == b:
                    continue
                ib, ob = fr[b]
                delta = a ^ b
                if delta & ~(ia | oa) and delta & ~(ib | ob):
                    continue
                if ia == ib and oa == ob:
                    col.add(v.ser(), f"{a:b} and {b:b} share fringes")
    return len(vs), col.stored, None


# -------------------------------------------------------------- connectivity


def _covers_for(v: _View, rng: random.Random) -> list[list[int]]:
    nonzero = [m for m in v.opens if m]
    out = []
    if v.n <= 3:
        k = len(nonzero)
        for pick in range(1, 1 << k):
            fam = [nonzero[i] for i in range(k) if pick >> i & 1]
            acc = 0
            for m in fam:
                acc |= m
            if acc == v.full:
                out.append(fam)
        return out
    out.append([m for m in v.irr().masks() if m])
    out.append(nonzero)
    for m in nonzero:
        if m != v.full and v.space.states.has_mask(v.full & ~m):
            out.append([m, v.full & ~m])
            if len(out) > 8:
                break
    for _ in range(3):
        shuffled = nonzero[:]
        rng.shuffle(shuffled)
        acc = 0
        fam = []
        for m in shuffled:
            fam.append(m)
            acc |= m
            if acc == v.full:
                break
        out.append(fam)
    return out


def _cover_chain_connected(fam: list[int], n: int) -> bool:
    """Every pair of items admits a simple chain: components of the
    intersection graph, then a shared component per item pair."""
    k = len(fam)
    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if fam[i] & fam[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    comp_mask = [0] * n
    for i in range(k):
        r = find(i)
        rest = fam[i]
        while rest:
            low = rest & -rest
            rest ^= low
            comp_mask[low.bit_length() - 1] |= 1 << r
    return all(
        comp_mask[x] & comp_mask[y]
        for x in range(n)
        for y in range(x + 1, n)
    )


@_register("chain-connected-iff-connected")
def _chk_chain_connected_iff_connected(views, rng):
    col = _Collector()
    for v in views:
        conn = connectivity.is_connected(v.space)
        chain = all(
            _cover_chain_connected(fam, v.n) for fam in _covers_for(v, rng)
        )
        if conn != chain:
            col.add(v.ser(), f"connected={conn} but chain-connected={chain}")
    labels = None
    for v in _cap(views, 200):
        if labels is None:
            labels = v.space.universe.labels
        covers = _covers_for(v, rng)[:2]
        for fam in covers:
            family = SetFamily.from_masks(v.space.universe, fam)
            fast = _cover_chain_connected(fam, v.n)
            slow = all(
                not isinstance(
                    connectivity.find_simple_chain(v.space, family, x, y),
                    connectivity._NoChain,
                )
                for x in labels
                for y in labels
                if x < y
            )
            if fast != slow:
                col.add(v.ser(), "component route disagrees with chain search")
    return len(views), col.stored, None


@_register("tight1-iff-well-graded")
def _chk_tight1_iff_well_graded(views, rng):
    col = _Collector()
    for v in views:
        if v.tight1() != v.well_graded():
            col.add(v.ser(), f"tight-1={v.tight1()} well-graded={v.well_graded()}")
    for v in _cap(views, CAP_VERY_HEAVY):
        if connectivity.is_well_graded(v.space.states) != v.well_graded():
            col.add(v.ser(), "one-step form disagrees with path lengths")
    return len(views), col.stored, None


@_register("tight1-equivalences")
def _chk_tight1_equivalences(views, rng):
    """Chain form, fringe-difference form, and the rigidity form
    (inner fringe inside W, outer fringe outside W forces U = W) all
    agree."""
    col = _Collector()
    for v in views:
        fr = v.fr()
        cond2 = True
        cond3 = True
        for u in v.opens:
            iu, ou = fr[u]
            lc = iu | ou
            for w in v.opens:
                if u == w:
                    continue
                if not (u ^ w) & lc:
                    cond2 = False
                if not (iu & ~w) and not (ou & w):
                    cond3 = False
            if not (cond2 or cond3):
                break
        if not (v.tight1() == cond2 == cond3):
            col.add(
                v.ser(),
                f"tight1={v.tight1()} fringe-diff={cond2} rigidity={cond3}",
            )
    return len(views), col.stored, None


# --------------------------------------------------------------------- order


@_register("quasi-order-round-trip")
def _chk_quasi_order_round_trip(views, rng):
    """Every open is a down-set of the specialization order; the
    Alexandroff family it generates equals the original exactly when
    the original is quasi-ordinal."""
    col = _Collector()
    n = views[0].n if views else 3
    for v in views:
        sigs = _signatures(v)
        up = tuple(
            sum(
                1 << y
                for y in range(v.n)
                if not sigs[y] & ~sigs[x]
            )
            for x in range(v.n)
        )
        spec = order.QuasiOrder(v.space.universe, up)
        back = order.from_quasi_order(spec)
        masks = back.states.masks()
        if not v.space.states.masks() <= masks:
            col.add(v.ser(), "an open set is not a down-set of the specialization order")
        if v.quasi_ordinal() != (masks == v.space.states.masks()):
            col.add(v.ser(), "Alexandroff fixed point disagrees with quasi-ordinality")
        if v.quasi_ordinal():
            qo = order.to_quasi_order(v.space)
            if qo.up != up:
                col.add(v.ser(), "specialization order disagrees with the intersection route")
            if order.from_quasi_order(qo).states.masks() != v.space.states.masks():
                col.add(v.ser(), "quasi-ordinal space does not round trip")
    checked = len(views)
    for qo in sample_quasi_orders(n, 40, rng.randrange(1 << 30)):
        checked += 1
        back = order.to_quasi_order(order.from_quasi_order(qo))
        if back.up != qo.up:
            col.add(json.dumps(qo.to_obj()), "quasi-order round trip changed the order")
    return checked, col.stored, None


@_register("alexandroff-equality")
def _chk_alexandroff_equality(views, rng):
    """Two quasi-ordinal families coincide exactly when the inclusion
    order of their per-item open systems is the same relation."""
    col = _Collector()
    qos = [v for v in views if v.quasi_ordinal()]
    pairs = [(a, b) for i, a in enumerate(qos) for b in qos[i:]]
    if len(pairs) > CAP_HEAVY:
        pairs = rng.sample(pairs, CAP_HEAVY)
    for a, b in pairs:
        sa, sb = _signatures(a), _signatures(b)
        same_rel = all(
            (sa[p] & ~sa[q] == 0) == (sb[p] & ~sb[q] == 0)
            for p in range(a.n)
            for q in range(a.n)
        )
        same_fam = a.space.states.masks() == b.space.states.masks()
        if same_rel != same_fam:
            col.add(a.ser(), f"versus {b.ser()}")
    return len(pairs), col.stored, None


@_register("bi-discriminative-quasi-ordinal-powerset")
def _chk_bi_discriminative_powerset(views, rng):
    col = _Collector()
    checked = 0
    for v in views:
        if not (v.quasi_ordinal() and v.t1()):
            continue
        checked += 1
        if len(v.opens) != 1 << v.n:
            col.add(v.ser(), "bi-discriminative quasi-ordinal family is not the powerset")
    return checked, col.stored, None


@_register("quasi-ordinal-regularity")
def _chk_quasi_ordinal_regularity(views, rng):
    col = _Collector()
    checked = 0
    for v in views:
        if not v.quasi_ordinal():
            continue
        checked += 1
        reg = separation.is_regular_property(v.space)[0]
        via_m = all(
            v.space.states.has_mask(
                v.full & ~order.minimal_state(v.space, t).mask
            )
            for t in v.space.universe.labels
        )
        if reg != via_m:
            col.add(v.ser(), "regularity disagrees with open complements of minimal states")
    return checked, col.stored, None


@_register("ordinal-connectivity")
def _chk_ordinal_connectivity(views, rng):
    col = _Collector()
    checked = 0
    for v in views:
        if not (v.quasi_ordinal() and v.t0()):
            continue
        checked += 1
        if connectivity.is_connected(v.space) != order.m_graph_connected(v.space):
            col.add(v.ser(), "connectivity disagrees with the minimal-state graph")
    return checked, col.stored, None


@_register("t0-quasi-ordinal-antimatroid-tight1")
def _chk_t0_quasi_ordinal_antimatroid(views, rng):
    col = _Collector()
    checked = 0
    for v in views:
        if not (v.quasi_ordinal() and v.t0()):
            continue
        checked += 1
        if not order.is_antimatroid(v.space):
            col.add(v.ser(), "T0 quasi-ordinal space is not an antimatroid")
        if not v.tight1():
            col.add(v.ser(), "T0 quasi-ordinal space is not tight 1-connected")
    return checked, col.stored, None


@_register("regular-atom-complement")
def _chk_regular_atom_complement(views, rng):
    """In regular spaces a state is either co-open or not an atom at
    any of its items; likewise one step above an open set."""
    col = _Collector()
    checked = 0
    for v in _cap(views, CAP_HEAVY):
        if not separation.is_regular_property(v.space)[0]:
            continue
        checked += 1
        atom_masks = {
            t: {a.mask for a in order.atoms_at(v.space, t).members}
            for t in v.space.universe.labels
        }
        for o in v.opens:
            rest = o
            while rest:
                low = rest & -rest
                rest ^= low
                t = v.space.universe.labels[low.bit_length() - 1]
                if not v.space.states.has_mask(v.full & ~o) and o in atom_masks[t]:
                    col.add(v.ser(), f"atom {o:b} at {t} with closed complement missing")
        fr = v.fr()
        for k in v.opens:
            outer = fr[k][1]
            rest = outer
            while rest:
                low = rest & -rest
                rest ^= low
                t = v.space.universe.labels[low.bit_length() - 1]
                ell = k | low
                if not v.space.states.has_mask(v.full & ~ell) and ell in atom_masks[t]:
                    col.add(v.ser(), f"outer-fringe extension {ell:b} at {t} fails")
    return checked, col.stored, None


@_register("granular-regular-disconnected")
def _chk_granular_regular_disconnected(views, rng):
    col = _Collector()
    checked = 0
    for v in _cap(views, CAP_HEAVY):
        if v.n < 2 or not v.t1():
            continue
        if not separation.is_regular_property(v.space)[0]:
            continue
        if not order.is_granular(v.space):
            col.add(v.ser(), "finite space not granular")
            continue
        checked += 1
        if connectivity.is_connected(v.space):
            col.add(v.ser(), "granular regular bi-discriminative space is connected")
    return checked, col.stored, None


@_register("quasi-ordinal-regular-normal")
def _chk_quasi_ordinal_regular_normal(views, rng):
    col = _Collector()
    checked = 0
    for v in views:
        if not v.quasi_ordinal():
            continue
        if not separation.is_regular_property(v.space)[0]:
            continue
        checked += 1
        if not separation.is_normal_property(v.space)[0]:
            col.add(v.ser(), "regular quasi-ordinal space is not normal")
    return checked, col.stored, None


@_register("reduction-pre-quotient")
def _chk_reduction_pre_quotient(views, rng):
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    for v in vs:
        red = order.discriminative_reduction(v.space)
        if not separation.is_t0(red.reduced)[0]:
            col.add(v.ser(), "reduction is not discriminative")
        if not structure.classify(red.reduced.states).is_knowledge_space:
            col.add(v.ser(), "reduction is not a space")
        if not maps.is_pre_quotient(red.projection, v.space, red.reduced):
            col.add(v.ser(), "reduction projection is not a pre-quotient")
    return len(vs), col.stored, None


# ---------------------------------------------------------------------- maps


def _random_partition(u: Universe, rng: random.Random) -> list[ItemSet]:
    labels = list(u.labels)
    rng.shuffle(labels)
    k = rng.randint(1, len(labels))
    blocks: list[list[str]] = [[] for _ in range(k)]
    for i, label in enumerate(labels):
        blocks[i % k].append(label)
    return [u.subset(b) for b in blocks if b]


def _sub_to_parent(mask: int, parent_bits: list[int]) -> int:
    acc = 0
    i = 0
    while mask:
        if mask & 1:
            acc |= parent_bits[i]
        mask >>= 1
        i += 1
    return acc


def _parent_to_sub(mask: int, parent_bits: list[int]) -> int:
    acc = 0
    for i, pb in enumerate(parent_bits):
        if mask & pb:
            acc |= 1 << i
    return acc


@_register("subspace-pre-base-trace")
def _chk_subspace_pre_base_trace(views, rng):
    """Traces of a pre-base generate the subspace."""
    col = _Collector()
    checked = 0
    for v in _cap(views, CAP_HEAVY):
        for _ in range(2):
            ymask = rng.randint(1, v.full)
            sub = maps.subspace(v.space, v.item(ymask))
            parent_bits = [
                1 << v.space.universe.index(label)
                for label in sub.universe.labels
            ]
            trace = SetFamily.from_masks(
                sub.universe,
                {_parent_to_sub(b & ymask, parent_bits) for b in v.irr().masks()},
            )
            checked += 1
            if not is_pre_base_for(trace, sub):
                col.add(v.ser(), f"trace of the minimal pre-base on {ymask:b} fails")
    return checked, col.stored, None


@_register("subspace-closed-trace")
def _chk_subspace_closed_trace(views, rng):
    """Closure inside a subspace is the trace of the parent closure;
    inside a closed subspace, closed means closed in the parent."""
    col = _Collector()
    checked = 0
    for v in _cap(views, CAP_VERY_HEAVY):
        cl = v.cl()
        for _ in range(2):
            ymask = rng.randint(1, v.full)
            sub = maps.subspace(v.space, v.item(ymask))
            parent_bits = [
                1 << v.space.universe.index(label)
                for label in sub.universe.labels
            ]
            subfull = (1 << len(sub.universe)) - 1
            checked += 1
            for fsub in range(subfull + 1):
                fpar = _sub_to_parent(fsub, parent_bits)
                got = operators.closure(sub, ItemSet(sub.universe, fsub)).mask
                want = _parent_to_sub(cl[fpar] & ymask, parent_bits)
                if got != want:
                    col.add(v.ser(), f"closure trace fails on {ymask:b} at {fsub:b}")
                    break
        closed_y = [v.full & ~o for o in v.opens if o != v.full]
        closed_y = [c for c in closed_y if c]
        if closed_y:
            ymask = rng.choice(closed_y)
            sub = maps.subspace(v.space, v.item(ymask))
            parent_bits = [
                1 << v.space.universe.index(label)
                for label in sub.universe.labels
            ]
            subfull = (1 << len(sub.universe)) - 1
            checked += 1
            for asub in range(subfull + 1):
                apar = _sub_to_parent(asub, parent_bits)
                in_sub = sub.states.has_mask(subfull & ~asub)
                in_parent = v.space.states.has_mask(v.full & ~apar)
                if in_sub != in_parent:
                    col.add(v.ser(), f"closed-in-closed fails on {ymask:b} at {asub:b}")
                    break
    return checked, col.stored, None


@_register("map-composition")
def _chk_map_composition(views, rng):
    """Continuity composes and is pointwise; quotient projections
    compose to quotients; a quotient map factors continuity and
    quotients through itself."""
    col = _Collector()
    checked = 0
    for _ in range(min(300, 3 * len(views))):
        x, y, z = rng.choice(views), rng.choice(views), rng.choice(views)
        f = _random_map(x.space.universe, y.space.universe, rng)
        g = _random_map(y.space.universe, z.space.universe, rng)
        cf = maps.is_pre_continuous(f, x.space, y.space)
        pointwise = all(
            maps.is_pre_continuous_at(f, x.space, y.space, p)
            for p in x.space.universe.labels
        )
        checked += 1
        if cf != pointwise:
            col.add(x.ser(), "pointwise continuity disagrees with continuity")
        if cf and maps.is_pre_continuous(g, y.space, z.space):
            if not maps.is_pre_continuous(f.then(g), x.space, z.space):
                col.add(x.ser(), "composition of continuous maps fails")
    for _ in range(min(120, 2 * len(views))):
        x = rng.choice(views)
        cls1 = _random_partition(x.space.universe, rng)
        q1 = maps.quotient(x.space, cls1)
        p1 = maps.quotient_projection(x.space, cls1)
        cls2 = _random_partition(q1.universe, rng)
        q2 = maps.quotient(q1, cls2)
        p2 = maps.quotient_projection(q1, cls2)
        comp = p1.then(p2)
        checked += 1
        if not maps.is_pre_quotient(comp, x.space, q2):
            col.add(x.ser(), "quotient projections do not compose to a quotient")
        k = rng.randint(1, max(1, x.n - 1))
        target = _random_space(
            Universe([f"w{i + 1}" for i in range(k)]), rng
        )
        g = _random_map(q2.universe, target.universe, rng)
        through = maps.is_pre_continuous(comp.then(g), x.space, target)
        direct = maps.is_pre_continuous(g, q2, target)
        if through != direct:
            col.add(x.ser(), "factoring continuity through a quotient fails")
        onto = g.image_mask((1 << len(q2.universe)) - 1) == (1 << len(target.universe)) - 1
        if onto:
            tq = maps.is_pre_quotient(comp.then(g), x.space, target)
            dq = maps.is_pre_quotient(g, q2, target)
            if tq != dq:
                col.add(x.ser(), "factoring quotients through a quotient fails")
    return checked, col.stored, None


@_register("continuous-open-closed-quotient")
def _chk_continuous_open_closed_quotient(views, rng):
    col = _Collector()
    checked = 0
    for _ in range(min(300, 3 * len(views))):
        x = rng.choice(views)
        cls = _random_partition(x.space.universe, rng)
        target = _random_space(
            Universe([f"w{i + 1}" for i in range(len(cls))]), rng
        )
        assign = {}
        for i, c in enumerate(cls):
            for label in c.labels:
                assign[label] = f"w{i + 1}"
        f = maps.PointMap(x.space.universe, target.universe, assign)
        checked += 1
        if maps.is_pre_continuous(f, x.space, target) and (
            maps.is_pre_open(f, x.space, target)
            or maps.is_pre_closed(f, x.space, target)
        ):
            if not maps.is_pre_quotient(f, x.space, target):
                col.add(x.ser(), "continuous open/closed surjection is not a quotient")
    return checked, col.stored, None


@_register("pre-continuous-bijection-equivalences")
def _chk_bijection_equivalences(views, rng):
    col = _Collector()
    checked = 0
    for _ in range(min(400, 4 * len(views))):
        x, y = rng.choice(views), rng.choice(views)
        u = x.space.universe
        perm = list(u.labels)
        rng.shuffle(perm)
        f = maps.PointMap(u, u, dict(zip(u.labels, perm)))
        if not maps.is_pre_continuous(f, x.space, y.space):
            continue
        checked += 1
        homeo = maps.is_pre_continuous(f.inverse(), y.space, x.space)
        po = maps.is_pre_open(f, x.space, y.space)
        pc = maps.is_pre_closed(f, x.space, y.space)
        pq = maps.is_pre_quotient(f, x.space, y.space)
        if not (homeo == po == pc == pq):
            col.add(
                x.ser(),
                f"bijection flags diverge: homeo={homeo} open={po} closed={pc} quotient={pq}",
            )
    return checked, col.stored, None


@_register("partial-pasting")
def _chk_partial_pasting(views, rng):
    """Closed pieces covering the domain, each closed preimage inside
    one piece, restrictions continuous: then the whole map is."""
    col = _Collector()
    checked = 0
    for _ in range(min(400, 4 * len(views))):
        v = rng.choice(views)
        closed = [v.full & ~o for o in v.opens]
        cs = [c for c in closed if c]
        if not cs:
            continue
        c = rng.choice(cs)
        ds = [d for d in closed if d and (c | d) == v.full]
        if not ds:
            continue
        d = rng.choice(ds)
        k = rng.randint(1, max(1, v.n - 1))
        target = _random_space(
            Universe([f"w{i + 1}" for i in range(k)]), rng
        )
        h = _random_map(v.space.universe, target.universe, rng)
        tfull = (1 << k) - 1
        hyp = True
        for w in target.states.masks():
            pre = h.preimage_mask(tfull & ~w)
            if pre & ~c and pre & ~d:
                hyp = False
                break
        if not hyp:
            continue
        subc = maps.subspace(v.space, v.item(c))
        subd = maps.subspace(v.space, v.item(d))
        hc = maps.PointMap(
            subc.universe, target.universe,
            {label: h(label) for label in subc.universe.labels},
        )
        hd = maps.PointMap(
            subd.universe, target.universe,
            {label: h(label) for label in subd.universe.labels},
        )
        if not (
            maps.is_pre_continuous(hc, subc, target)
            and maps.is_pre_continuous(hd, subd, target)
        ):
            continue
        checked += 1
        if not maps.is_pre_continuous(h, v.space, target):
            col.add(v.ser(), f"pasting over {c:b} and {d:b} fails")
    return checked, col.stored, None


@_register("product-of-maps")
def _chk_product_of_maps(views, rng):
    if not views or views[0].n > 3:
        return 0, [], "skipped beyond 3 items per factor"
    col = _Collector()
    checked = 0
    for _ in range(min(150, 2 * len(views))):
        x1, x2, b = rng.choice(views), rng.choice(views), rng.choice(views)
        prod = maps.product([x1.space, x2.space])
        h1 = _random_map(b.space.universe, x1.space.universe, rng)
        h2 = _random_map(b.space.universe, x2.space.universe, rng)
        h = maps.PointMap(
            b.space.universe,
            prod.universe,
            {label: f"({h1(label)},{h2(label)})" for label in b.space.universe.labels},
        )
        checked += 1
        joint = maps.is_pre_continuous(h, b.space, prod)
        split = maps.is_pre_continuous(
            h1, b.space, x1.space
        ) and maps.is_pre_continuous(h2, b.space, x2.space)
        if joint != split:
            col.add(b.ser(), f"joint={joint} coordinates={split}")
    return checked, col.stored, None


@_register("product-closure-law")
def _chk_product_closure_law(views, rng):
    if not views or views[0].n > 3:
        return 0, [], "skipped beyond 3 items per factor"
    col = _Collector()
    checked = 0

    def box(prod: PreTopology, a1: ItemSet, a2: ItemSet) -> int:
        mask = 0
        for la in a1.labels:
            for lb in a2.labels:
                mask |= 1 << prod.universe.index(f"({la},{lb})")
        return mask

    for _ in range(min(100, len(views))):
        v1, v2 = rng.choice(views), rng.choice(views)
        prod = maps.product([v1.space, v2.space])
        checked += 1
        for _ in range(3):
            a1 = v1.item(rng.randint(0, v1.full))
            a2 = v2.item(rng.randint(0, v2.full))
            got = operators.closure(prod, ItemSet(prod.universe, box(prod, a1, a2))).mask
            want = box(
                prod,
                operators.closure(v1.space, a1),
                operators.closure(v2.space, a2),
            )
            if got != want:
                col.add(v1.ser(), f"with {v2.ser()}: closure of a box is not the box of closures")
    return checked, col.stored, None


@_register("quotient-finest")
def _chk_quotient_finest(views, rng):
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    for v in vs:
        cls = _random_partition(v.space.universe, rng)
        q = maps.quotient(v.space, cls)
        proj = maps.quotient_projection(v.space, cls)
        if not maps.is_pre_quotient(proj, v.space, q):
            col.add(v.ser(), "projection onto the quotient is not a quotient")
        qfull = (1 << len(q.universe)) - 1
        for w in range(qfull + 1):
            if v.space.states.has_mask(proj.preimage_mask(w)) != q.states.has_mask(w):
                col.add(v.ser(), "quotient family is not the open-preimage family")
                break
    return len(vs), col.stored, None


# -------------------------------------------------------------------- skills


_SKILLS_IDS = (
    "p-monotone-union",
    "delineation-theorem-agree",
    "star-implies-space",
    "cd-thm-agrees",
)

_skills_cache: dict[tuple[int, int, int], dict[str, _RunResult]] = {}


def run_skills_suite(
    max_items: int = 2, max_skills: int = 2, max_comps: int = 2
) -> dict[str, _RunResult]:
    """One sweep over every multimap up to the given sizes, shared by
    the four skill checks. Results are cached per size triple."""
    key = (max_items, max_skills, max_comps)
    if key in _skills_cache:
        return _skills_cache[key]
    cols = {ident: _Collector() for ident in _SKILLS_IDS}
    checked = 0
    for qn in range(1, max_items + 1):
        for sn in range(1, max_skills + 1):
            for m in enumerate_multimaps(qn, sn, max_comps):
                checked += 1
                ser = json.dumps(m.to_obj(), separators=(",", ":"))
                delin = skills.delineate(m)
                rep = skills.is_delineated_space(m)
                star = skills.star_condition(m)
                if not rep.agree:
                    cols["delineation-theorem-agree"].add(
                        ser,
                        f"direct={rep.space} characterization={rep.via_characterization}",
                    )
                if star and not rep.space:
                    cols["star-implies-space"].add(
                        ser, "pooling condition without a delineated space"
                    )
                sfull = (1 << len(m.skills)) - 1
                p = [
                    skills.problem_function(m, ItemSet(m.skills, r)).mask
                    for r in range(sfull + 1)
                ]
                for r in range(sfull + 1):
                    rest = sfull & ~r
                    while rest:
                        low = rest & -rest
                        rest ^= low
                        if p[r] & ~p[r | low]:
                            cols["p-monotone-union"].add(
                                ser, f"p not monotone at {r:b}+{low:b}"
                            )
                pool = [c.mask for c in m.minimal_pool()]
                for pick in range(1, 1 << len(pool)):
                    union = 0
                    up = 0
                    for i, cm in enumerate(pool):
                        if pick >> i & 1:
                            union |= cm
                            up |= p[cm]
                    if up & ~p[union]:
                        cols["p-monotone-union"].add(
                            ser, f"union lower bound fails at {pick:b}"
                        )
                    if star and p[union] != up:
                        cols["p-monotone-union"].add(
                            ser, f"union equality under pooling fails at {pick:b}"
                        )
                via = skills.is_completely_discriminative_delineation(m)
                masks = delin.states.masks()
                direct = True
                for a in range(len(m.items)):
                    for b in range(a + 1, len(m.items)):
                        ba, bb = 1 << a, 1 << b
                        if not any(
                            h & ba and l & bb and not h & l
                            for h in masks
                            for l in masks
                        ):
                            direct = False
                if via != direct:
                    cols["cd-thm-agrees"].add(
                        ser, f"competency route={via} direct={direct}"
                    )
    _skills_cache[key] = {
        ident: (checked, cols[ident].stored, None) for ident in _SKILLS_IDS
    }
    return _skills_cache[key]


@_register("p-monotone-union")
def _chk_p_monotone_union(views, rng):
    return run_skills_suite()["p-monotone-union"]


@_register("delineation-theorem-agree")
def _chk_delineation_theorem_agree(views, rng):
    return run_skills_suite()["delineation-theorem-agree"]


@_register("star-implies-space")
def _chk_star_implies_space(views, rng):
    return run_skills_suite()["star-implies-space"]


@_register("cd-thm-agrees")
def _chk_cd_thm_agrees(views, rng):
    return run_skills_suite()["cd-thm-agrees"]


# ------------------------------------------------------------------ cardinal


@_register("density-exact-minimal")
def _chk_density_exact_minimal(views, rng):
    """The exact answer is dense, minimum, and the least such set in
    the canonical subset order."""
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    for v in vs:
        k, dset = cardinal.density_exact(v.space)
        blocks = [b for b in v.irr().masks() if b]
        if not all(dset.mask & b for b in blocks):
            col.add(v.ser(), "exact answer is not dense")
        if not operators.is_dense(v.space, dset):
            col.add(v.ser(), "is_dense rejects the exact answer")
        first = None
        for size in range(k + 1):
            for combo in itertools.combinations(range(v.n), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if all(mask & b for b in blocks):
                    first = (size, mask)
                    break
            if first:
                break
        if first != (k, dset.mask):
            col.add(v.ser(), f"exact density {k} is not the least optimum")
    return len(vs), col.stored, None


@_register("primary-items-dense")
def _chk_primary_items_dense(views, rng):
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    for v in vs:
        blocks = [b for b in v.irr().masks() if b]
        tr = cardinal.greedy_primary_items(v.space)
        dm, _ = cardinal.matrix_primary_items(v.irr())
        for name, got in (("greedy", tr.result), ("matrix", dm)):
            if not all(got.mask & b for b in blocks):
                col.add(v.ser(), f"{name} output is not dense")
    return len(vs), col.stored, None


@_register("greedy-matrix-dense-gap", audit_only=True)
def _chk_greedy_matrix_gap(views, rng):
    """Greedy and matrix runs against the exact optimum; gaps are a
    known possibility, recorded as a distribution."""
    col = _Collector()
    vs = _cap(views, CAP_HEAVY)
    hist: dict[str, int] = {}
    for v in vs:
        k, _ = cardinal.density_exact(v.space)
        tr = cardinal.greedy_primary_items(v.space)
        dm, _ = cardinal.matrix_primary_items(v.irr())
        g_gap = len(tr.result.labels) - k
        m_gap = len(dm.labels) - k
        key = f"greedy+{g_gap} matrix+{m_gap}"
        hist[key] = hist.get(key, 0) + 1
        if g_gap or m_gap:
            col.add(
                v.ser(),
                f"greedy={len(tr.result.labels)} matrix={len(dm.labels)} exact={k}",
            )
    summary = "gap distribution: " + "; ".join(
        f"{key}: {cnt}" for key, cnt in sorted(hist.items())
    )
    return len(vs), col.stored, summary


@_register("dense-ge-cellularity")
def _chk_dense_ge_cellularity(views, rng):
    col = _Collector()
    for v in views:
        k, _ = cardinal.density_exact(v.space)
        c = cardinal.cellularity(v.space)
        if k < c:
            col.add(v.ser(), f"density {k} below cellularity {c}")
    return len(views), col.stored, None


@_register("hausdorff-trace-density-bound")
def _chk_hausdorff_trace_density_bound(views, rng):
    """Complete discrimination plus a dense set whose trace preserves
    state closures caps the universe by a double exponential."""
    col = _Collector()
    checked = 0
    for v in _cap(views, CAP_HEAVY):
        if not separation.is_t2(v.space)[0]:
            continue
        k, dset = cardinal.density_exact(v.space)
        cl = v.cl()
        if not all(cl[h & dset.mask] == cl[h] for h in v.opens):
            continue
        checked += 1
        if v.n > 1 << (1 << k):
            col.add(v.ser(), f"universe exceeds the bound at density {k}")
    return checked, col.stored, None


@_register("block-disjointness")
def _chk_block_disjointness(views, rng):
    """Items hit by the maximum number of members of a subfamily have
    pairwise equal or disjoint intersections of their members."""
    col = _Collector()
    checked = 0
    for v in _cap(views, CAP_HEAVY):
        nonzero = [m for m in v.opens if m]
        for _ in range(3):
            fam = rng.sample(nonzero, rng.randint(1, min(6, len(nonzero))))
            counts = [0] * v.n
            for m in fam:
                rest = m
                while rest:
                    low = rest & -rest
                    rest ^= low
                    counts[low.bit_length() - 1] += 1
            best = max(counts)
            if best == 0:
                continue
            checked += 1
            inters = []
            for i in range(v.n):
                if counts[i] == best:
                    inter = v.full
                    for m in fam:
                        if m >> i & 1:
                            inter &= m
                    inters.append(inter)
            for a in range(len(inters)):
                for b in range(a + 1, len(inters)):
                    if inters[a] != inters[b] and inters[a] & inters[b]:
                        col.add(v.ser(), "maximum-count intersections overlap partially")
    return checked, col.stored, None


@_register("cover-dense-subfamily")
def _chk_cover_dense_subfamily(views, rng):
    """Every open cover has at most cellularity-many members whose
    union is dense. Checked by sweep; kept to small universes."""
    if not views or views[0].n > 4:
        return 0, [], "skipped beyond 4 items"
    col = _Collector()
    checked = 0
    vs = views if views[0].n <= 3 else _cap(views, 300)
    for v in vs:
        c = cardinal.cellularity(v.space)
        cl = v.cl()
        for fam in _covers_for(v, rng):
            checked += 1
            found = False
            for size in range(1, min(c, len(fam)) + 1):
                for combo in itertools.combinations(fam, size):
                    acc = 0
                    for m in combo:
                        acc |= m
                    if cl[acc] == v.full:
                        found = True
                        break
                if found:
                    break
            if not found:
                col.add(v.ser(), f"no dense subfamily of size {c} in a {len(fam)}-member cover")
    return checked, col.stored, None
