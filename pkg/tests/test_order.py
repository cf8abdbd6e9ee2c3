"""The closed strength relation, checked against the naive oracle."""

from __future__ import annotations

import dataclasses
import random

import pytest
from hypothesis import given, settings

from res import (
    UsageError,
    build_closure,
    build_sentence,
    check_consistency,
)

import oracle
from oracle import Recipe
from strategies import build_engine, random_recipe, recipes


def atom_mask(atom_count: int, i: int) -> int:
    return sum(1 << v for v in range(2**atom_count) if v >> i & 1)


def models_set(argument) -> tuple[frozenset, frozenset]:
    models = argument.presumption.models
    return (
        frozenset(v for v in range(argument.presumption.frame.valuations)
                  if models >> v & 1),
        frozenset(argument.conclusion.names()),
    )


def assert_same_closure(structure, closure, model: oracle.OracleModel):
    engine_args = [models_set(a) for a in structure.arguments]
    oracle_args = [(a.presumption, a.conclusion) for a in model.arguments]
    assert engine_args == oracle_args
    count = len(engine_args)
    engine_rel = {
        (i, j) for i in range(count) for j in range(count) if closure.leq_index(i, j)
    }
    assert engine_rel == model.leq
    assert structure.disjunction_capped == model.capped


def assert_closure_laws(structure, closure):
    args = structure.arguments
    ids = [a.id for a in args]
    for a in ids:
        assert closure.leq(a, a)
    for a in ids:
        for b in ids:
            for c in ids:
                if closure.leq(a, b) and closure.leq(b, c):
                    assert closure.leq(a, c)
    for lower in args:
        for upper in args:
            if lower.id == upper.id:
                continue
            same = lower.presumption.equivalent(upper.presumption)
            if same and lower.conclusion.implies(upper.conclusion):
                assert closure.leq(lower.id, upper.id)
            if upper.presumption.strictly_implies(lower.presumption):
                assert closure.leq(lower.id, upper.id)
    for declaration in structure.declarations:
        if declaration.level != "argument":
            continue
        assert closure.leq(declaration.left, declaration.right)
        if declaration.kind == "equal":
            assert closure.leq(declaration.right, declaration.left)


# -- fixture recipes ---------------------------------------------------------

E1 = atom_mask(2, 0)
E2 = atom_mask(2, 1)
EXAMPLE1_RECIPE = Recipe(
    atoms=("e1", "e2"),
    alternatives=("Al1", "Al2", "Al3"),
    supports=((E1, 1), (E1, 2), ((~E2) & 0b1111, 1)),
    refutes=((E2, 1, "singletons"),),
)


def hominids_recipe(lifting: bool) -> Recipe:
    a = {name: atom_mask(5, i) for i, name in
         enumerate(("e1", "e2", "e12", "e23", "e13"))}
    alt = {f"B{i + 1}": 1 << i for i in range(5)}
    supports = tuple(
        (a[e], alt[b])
        for (e, b) in [
            ("e1", "B1"), ("e2", "B2"), ("e2", "B5"),
            ("e12", "B3"), ("e12", "B4"), ("e12", "B5"),
            ("e23", "B2"), ("e23", "B4"), ("e23", "B5"),
            ("e13", "B2"), ("e13", "B3"), ("e13", "B5"),
        ]
    )
    pres_rels = (
        ("strict", a["e12"], a["e1"]),
        ("strict", a["e1"], a["e2"] & a["e13"]),
        ("strict", a["e12"], a["e13"]),
        ("strict", a["e23"], a["e13"]),
    )
    return Recipe(
        atoms=("e1", "e2", "e12", "e23", "e13"),
        alternatives=("B1", "B2", "B3", "B4", "B5"),
        supports=supports,
        pres_rels=pres_rels,
        conjunction_arguments=True,
        conjunction_lifting=lifting,
    )


def test_example1_closure_matches_oracle(example1):
    structure, closure = example1
    model = oracle.evaluate(EXAMPLE1_RECIPE)
    assert_same_closure(structure, closure, model)


@pytest.mark.parametrize("lifting", [False, True])
def test_hominids_closure_matches_oracle(lifting, hominids, hominids_lifting):
    structure, closure = hominids_lifting if lifting else hominids
    model = oracle.evaluate(hominids_recipe(lifting))
    assert_same_closure(structure, closure, model)


def test_fixture_closure_laws(example1, hominids, hominids_lifting):
    for structure, closure in (example1, hominids, hominids_lifting):
        assert_closure_laws(structure, closure)


# -- random differential -----------------------------------------------------


@settings(max_examples=120, deadline=None)
@given(recipes())
def test_random_recipes_match_oracle(recipe):
    structure, closure = build_engine(recipe)
    assert_same_closure(structure, closure, oracle.evaluate(recipe))


@settings(max_examples=60, deadline=None)
@given(recipes())
def test_random_recipes_satisfy_closure_laws(recipe):
    structure, closure = build_engine(recipe)
    assert_closure_laws(structure, closure)


def test_seeded_differential_batch():
    rng = random.Random(2024)
    for _ in range(150):
        recipe = random_recipe(rng, allow_generation=True)
        structure, closure = build_engine(recipe)
        assert_same_closure(structure, closure, oracle.evaluate(recipe))


# -- declaration order must not matter ---------------------------------------


def keyed_relation(structure, closure):
    keys = [models_set(a) for a in structure.arguments]
    count = len(keys)
    return {
        (keys[i], keys[j])
        for i in range(count)
        for j in range(count)
        if closure.leq_index(i, j)
    }


def test_declaration_order_is_irrelevant():
    rng = random.Random(77)
    tried = 0
    while tried < 40:
        recipe = random_recipe(rng, allow_generation=True)
        if recipe.refutes or len(set(recipe.supports)) != len(recipe.supports):
            continue
        tried += 1
        count = len(recipe.supports)
        flipped = dataclasses.replace(
            recipe,
            supports=tuple(reversed(recipe.supports)),
            arg_rels=tuple(
                (kind, count - 1 - left, count - 1 - right)
                for (kind, left, right) in recipe.arg_rels
            ),
            pres_rels=tuple(reversed(recipe.pres_rels)),
        )
        structure, closure = build_engine(recipe)
        if structure.disjunction_capped:
            continue  # a hit cap keeps whichever arguments came first
        assert keyed_relation(structure, closure) == keyed_relation(
            *build_engine(flipped)
        )


# -- strictness is derived, never seeded -------------------------------------


def test_single_strict_declaration_stays_strict():
    recipe = Recipe(
        atoms=("x", "y"),
        alternatives=("A", "B"),
        supports=((atom_mask(2, 0), 1), (atom_mask(2, 1), 2)),
        arg_rels=(("strict", 0, 1),),
    )
    structure, closure = build_engine(recipe)
    first, second = (a.id for a in structure.arguments)
    assert closure.strictly_less(first, second)
    assert not closure.leq(second, first)
    assert check_consistency(closure, structure).ok


def test_declared_strict_collapsed_by_sharing_a_presumption():
    recipe = Recipe(
        atoms=("x",),
        alternatives=("A", "B"),
        supports=((1 << 1, 1), (1 << 1, 2)),
        arg_rels=(("strict", 0, 1),),
    )
    structure, closure = build_engine(recipe)
    report = check_consistency(closure, structure)
    assert not report.ok
    violation = report.violations[0]
    assert violation.declaration.kind == "strict"
    assert violation.chain
    steps = violation.chain
    ids = [a.id for a in structure.arguments]
    assert steps[0].lower == ids[1] and steps[-1].upper == ids[0]
    for step in steps:
        assert closure.seed_reasons(step.lower, step.upper)


def test_consistency_differential():
    rng = random.Random(4096)
    for _ in range(200):
        recipe = random_recipe(rng, allow_generation=True)
        structure, closure = build_engine(recipe)
        model = oracle.evaluate(recipe)
        report = check_consistency(closure, structure)
        where = {a.id: i for i, a in enumerate(structure.arguments)}
        engine_pairs = set()
        for violation in report.violations:
            high, low = violation.counter
            engine_pairs.add((where[low], where[high]))
        assert engine_pairs == oracle.strict_violations(model)


def test_fixture_consistency_is_clean(example1, hominids, hominids_lifting):
    for structure, closure in (example1, hominids, hominids_lifting):
        report = check_consistency(closure, structure)
        assert report.ok and report.violations == []


# -- provenance --------------------------------------------------------------


def test_provenance_chains_are_walkable(hominids):
    structure, closure = hominids
    ids = [a.id for a in structure.arguments]
    seen_kinds = set()
    for lower in ids:
        for upper in ids:
            if not closure.leq(lower, upper):
                with pytest.raises(UsageError):
                    closure.provenance_chain(lower, upper)
                continue
            chain = closure.provenance_chain(lower, upper)
            if lower == upper:
                assert chain == []
                continue
            assert chain[0].lower == lower
            assert chain[-1].upper == upper
            for earlier, later in zip(chain, chain[1:]):
                assert earlier.upper == later.lower
            for step in chain:
                reasons = closure.seed_reasons(step.lower, step.upper)
                assert reasons
                assert step.reason in reasons
                seen_kinds.add(step.reason.kind)
    assert "declaration" in seen_kinds
    assert "presumption-specificity" in seen_kinds
    assert "same-presumption" in seen_kinds


def test_lifting_seeds_show_up(hominids_lifting):
    structure, closure = hominids_lifting
    # The conjoined support for B4 sits below the conjoined support for B3
    # because e12 matches and e23 is declared weaker than e13.
    lower = next(
        a.id for a in structure.arguments
        if a.presumption.describe() == "e12 & e23"
        and a.conclusion.names() == ("B4",)
    )
    upper = next(
        a.id for a in structure.arguments
        if a.presumption.describe() == "e12 & e13"
        and a.conclusion.names() == ("B3",)
    )
    reasons = closure.seed_reasons(lower, upper)
    assert any(r.kind == "conjunction-lifting" for r in reasons)
    assert closure.leq(lower, upper) and not closure.leq(upper, lower)


def test_closure_rejects_invalid_structures():
    from res import (
        ConclusionFrame,
        DeclarationError,
        EvidenceFrame,
        EvidenceStructure,
        StructureOptions,
        conclusion_of,
    )

    frame = EvidenceFrame(("x",))
    structure = EvidenceStructure(
        frame, ConclusionFrame(("A", "B")), StructureOptions(conjunction_lifting=True)
    )
    structure.add_support(
        build_sentence(frame, "x"), conclusion_of(structure.conclusion_frame, ["A"])
    )
    with pytest.raises(DeclarationError):
        build_closure(structure)
