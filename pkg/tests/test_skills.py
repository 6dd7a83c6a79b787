"""Skill multimaps: problem functions, delineation, star condition, bounds."""

import pytest

from pretopo import (
    CombinatorialBoundExceeded,
    ItemSet,
    SchemaError,
    SkillBoundExceeded,
    SkillMultimap,
    Universe,
    classify,
    delineate,
    is_completely_discriminative_delineation,
    is_delineated_space,
    problem_function,
    star_condition,
)
from pretopo.separation import _completely_discriminative
from pretopo.miner import enumerate_multimaps

ITEMS2 = Universe(["q1", "q2"])
SKILLS2 = Universe(["s1", "s2"])


def mk(items, skills, mu_masks):
    mu = {t: [ItemSet(skills, m) for m in masks] for t, masks in mu_masks.items()}
    return SkillMultimap(items, skills, mu)


def test_problem_function_examples():
    m = mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b11]})
    assert problem_function(m, ItemSet(SKILLS2, 0b00)).mask == 0
    assert sorted(problem_function(m, ItemSet(SKILLS2, 0b01)).labels) == ["q1"]
    assert sorted(problem_function(m, ItemSet(SKILLS2, 0b10)).labels) == []
    assert sorted(problem_function(m, ItemSet(SKILLS2, 0b11)).labels) == ["q1", "q2"]


def test_full_competency_delineates_the_two_state_structure():
    m = mk(ITEMS2, SKILLS2, {"q1": [0b11], "q2": [0b11]})
    assert delineate(m).states.masks() == {0b00, 0b11}


def test_nested_competencies_delineate_a_chain():
    m = mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b11]})
    assert delineate(m).states.masks() == {0b00, 0b01, 0b11}


def test_disjoint_singletons_delineate_the_powerset():
    m = mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b10]})
    assert delineate(m).states.masks() == {0b00, 0b01, 0b10, 0b11}
    report = is_delineated_space(m)
    assert report.space and report.via_characterization and report.agree


def test_delineated_family_contains_empty_and_full():
    for m in enumerate_multimaps(2, 2, 2):
        family = delineate(m).states
        assert family.has_mask(0)
        assert family.has_mask(0b11)


def test_star_condition_examples():
    items3 = Universe(["q1", "q2", "q3"])
    split = mk(items3, SKILLS2, {"q1": [0b11], "q2": [0b01], "q3": [0b10]})
    assert not star_condition(split)
    assert not is_delineated_space(split).space
    assert star_condition(mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b10]}))
    one = mk(Universe(["q1"]), SKILLS2, {"q1": [0b11]})
    assert star_condition(one)


def test_star_condition_implies_a_delineated_space():
    for m in enumerate_multimaps(2, 2, 2):
        if star_condition(m):
            assert classify(delineate(m).states).is_knowledge_space


def test_delineation_characterization_agrees():
    for m in enumerate_multimaps(2, 2, 2):
        assert is_delineated_space(m).agree


def test_complete_discrimination_route_matches_the_direct_check():
    for m in enumerate_multimaps(2, 2, 2):
        direct, _ = _completely_discriminative(delineate(m))
        assert is_completely_discriminative_delineation(m) == direct


def test_complete_discrimination_examples():
    assert is_completely_discriminative_delineation(
        mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b10]})
    )
    assert not is_completely_discriminative_delineation(
        mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b01]})
    )
    one = mk(Universe(["q1"]), SKILLS2, {"q1": [0b01]})
    assert is_completely_discriminative_delineation(one)


def test_skill_function_and_minimal_pool():
    m = mk(ITEMS2, SKILLS2, {"q1": [0b01, 0b11], "q2": [0b10]})
    assert not m.is_skill_function()
    assert [c.mask for c in m.mu_min["q1"]] == [0b01]
    pool = m.minimal_pool()
    for c in pool:
        for d in pool:
            assert c.mask == d.mask or not (c <= d)
    assert mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b10]}).is_skill_function()


def test_validation_errors():
    with pytest.raises(ValueError):
        SkillMultimap(ITEMS2, SKILLS2, {"q1": [ItemSet(SKILLS2, 0b01)]})
    with pytest.raises(ValueError):
        mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": []})
    with pytest.raises(ValueError):
        mk(ITEMS2, SKILLS2, {"q1": [0b01], "q2": [0b00]})


def test_skill_bound():
    skills = Universe([f"s{i}" for i in range(1, 22)])
    m = mk(Universe(["q1"]), skills, {"q1": [0b1]})
    with pytest.raises(SkillBoundExceeded):
        delineate(m)
    assert delineate(m, bound=21).states.has_mask(0b1)


def test_pool_bound():
    skills = Universe([f"s{i}" for i in range(1, 18)])
    m = mk(Universe(["q1"]), skills, {"q1": [1 << i for i in range(17)]})
    with pytest.raises(CombinatorialBoundExceeded):
        star_condition(m)


def test_json_round_trip_and_schema():
    m = mk(ITEMS2, SKILLS2, {"q1": [0b01, 0b11], "q2": [0b10]})
    again = SkillMultimap.from_json(m.to_json())
    assert again.to_obj() == m.to_obj()
    with pytest.raises(SchemaError):
        SkillMultimap.from_obj({"items": ["q1"], "skills": ["s1"]})
    with pytest.raises(SchemaError):
        SkillMultimap.from_obj(
            {"items": ["q1"], "skills": ["s1"], "mu": {"q1": [[]]}}
        )
