"""Space enumeration, seeded sampling, and the theorem audit harness."""

import itertools
import json

import pytest

from pretopo import (
    BoundExceeded,
    PretopoError,
    audit,
    available_theorems,
    enumerate_spaces,
    reports_to_json,
    sample_spaces,
)
from pretopo.miner import enumerate_multimaps, sample_quasi_orders


def brute_union_closed_families(n):
    """All families over n points with empty set, full set, and unions."""
    full = (1 << n) - 1
    middles = list(range(1, full))
    out = set()
    for k in range(len(middles) + 1):
        for combo in itertools.combinations(middles, k):
            fam = frozenset({0, full, *combo})
            if all(a | b in fam for a in fam for b in fam):
                out.add(fam)
    return out


def test_enumeration_counts_against_the_brute_force_oracle():
    for n, expect in ((1, 1), (2, 4), (3, 45)):
        spaces = enumerate_spaces(n)
        assert len(spaces) == expect
        got = {frozenset(s.states.masks()) for s in spaces}
        assert got == brute_union_closed_families(n)


def test_enumeration_count_at_four():
    spaces = enumerate_spaces(4)
    assert len(spaces) == 2271
    assert len({frozenset(s.states.masks()) for s in spaces}) == 2271


def test_the_four_two_point_families():
    got = [sorted(s.states.masks()) for s in enumerate_spaces(2)]
    assert got == [[0, 3], [0, 1, 3], [0, 2, 3], [0, 1, 2, 3]]


def test_enumeration_bounds():
    with pytest.raises(PretopoError):
        enumerate_spaces(0)
    with pytest.raises(BoundExceeded):
        enumerate_spaces(5)
    assert len(enumerate_spaces(2, bound=5)) == 4


def test_sampling_is_reproducible_and_valid():
    a = sample_spaces(4, 25, seed=9)
    b = sample_spaces(4, 25, seed=9)
    assert [s.states.masks() for s in a] == [s.states.masks() for s in b]
    for s in a:
        masks = s.states.masks()
        assert 0 in masks and s.universe.full.mask in masks
        for x in masks:
            for y in masks:
                assert x | y in masks


def test_quasi_order_sampling_is_reproducible():
    a = sample_quasi_orders(4, 20, seed=3)
    b = sample_quasi_orders(4, 20, seed=3)
    assert a == b
    assert len(a) == 20


def test_multimap_enumeration_counts():
    assert sum(1 for _ in enumerate_multimaps(1, 1, 1)) == 1
    assert sum(1 for _ in enumerate_multimaps(1, 2, 2)) == 6
    assert sum(1 for _ in enumerate_multimaps(2, 2, 2)) == 36


def test_theorem_registry():
    ths = available_theorems()
    assert len(ths) == 52
    assert len(set(ths)) == 52
    for ident in (
        "closure-axioms",
        "closure-derived-union",
        "derived-set-definition",
        "boundary-formulas",
        "interior-closure-duality",
        "fringe-characterizations",
        "separation-hierarchy",
        "chain-connected-iff-connected",
        "tight1-iff-well-graded",
        "size-weight-bound",
        "dense-ge-cellularity",
    ):
        assert ident in ths


def test_unknown_theorem_id():
    with pytest.raises(PretopoError):
        audit("no-such-theorem", 2)


def test_audit_is_a_pure_function_of_its_arguments():
    args = (["closure-axioms", "boundary-formulas"], 3, 1)
    assert reports_to_json(audit(*args)) == reports_to_json(audit(*args))
    sampled = ("closure-axioms", 5, 2, 40)
    assert reports_to_json(audit(*sampled)) == reports_to_json(audit(*sampled))


def test_audit_statuses_at_three():
    reports = audit("all", 3, seed=0)
    assert len(reports) == 52
    for r in reports:
        assert r.status in ("holds", "fails", "audit-only")
        assert r.status != "fails", r.theorem
        if r.status == "holds":
            assert not r.violations


def test_atom_pre_base_audit_witness_at_two():
    report = audit("atom-pre-base-of-minimal", 2, seed=0)[0]
    assert report.status == "audit-only"
    assert report.checked == 4
    spaces = [json.loads(s)["states"] for s, _ in report.violations]
    assert [[], ["z1"], ["z1", "z2"]] in spaces


def test_report_serialization_schema():
    report = audit("closure-axioms", 2, seed=0)[0]
    obj = report.to_obj()
    assert obj["theorem"] == "closure-axioms"
    assert obj["status"] == "holds"
    assert obj["checked"] == 4
    assert obj["violations"] == []
    parsed = json.loads(reports_to_json([report]))
    assert parsed[0]["theorem"] == "closure-axioms"
