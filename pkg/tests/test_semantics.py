"""Sentence semantics against an independent truth-table evaluator."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from res import (
    ConclusionFrame,
    ConclusionSentence,
    DeclarationError,
    EvidenceFrame,
    EvidenceSentence,
    FormulaError,
    build_sentence,
    combine,
    conclusion_of,
    parse_conclusion,
)

from strategies import random_formula_text

THREE = EvidenceFrame(("w", "x", "y"))


# -- an independent model of formulas ----------------------------------------
#
# Formulas are built as explicit trees, rendered to text for the parser,
# and evaluated per valuation by plain recursion over the tree.  The two
# routes share nothing but the convention that atom i is true in
# valuation v exactly when bit i of v is set.


def all_trees(atoms, height):
    if height <= 1:
        return [("atom", name) for name in atoms]
    smaller = all_trees(atoms, height - 1)
    trees = [("atom", name) for name in atoms]
    trees += [("not", t) for t in smaller]
    trees += [(op, a, b) for op in ("and", "or") for a in smaller for b in smaller]
    return trees


def render(tree) -> str:
    kind = tree[0]
    if kind == "atom":
        return tree[1]
    if kind == "not":
        return "!(" + render(tree[1]) + ")"
    middle = " & " if kind == "and" else " | "
    return "(" + render(tree[1]) + middle + "(" + render(tree[2]) + ")" + ")"


def holds(tree, assignment) -> bool:
    kind = tree[0]
    if kind == "atom":
        return assignment[tree[1]]
    if kind == "not":
        return not holds(tree[1], assignment)
    if kind == "and":
        return holds(tree[1], assignment) and holds(tree[2], assignment)
    return holds(tree[1], assignment) or holds(tree[2], assignment)


def reference_models(frame, tree) -> int:
    mask = 0
    for v in range(frame.valuations):
        assignment = {
            name: bool(v >> i & 1) for i, name in enumerate(frame.atoms)
        }
        if holds(tree, assignment):
            mask |= 1 << v
    return mask


def test_every_formula_up_to_height_three_matches_the_truth_tables():
    trees = all_trees(THREE.atoms, 3)
    assert len(trees) == 1179
    for tree in trees:
        sentence = build_sentence(THREE, render(tree))
        assert sentence.models == reference_models(THREE, tree), render(tree)


def test_random_deeper_formulas_match_the_truth_tables():
    rng = random.Random(91)
    for _ in range(300):
        text = random_formula_text(rng, THREE.atoms, depth=5)
        sentence = build_sentence(THREE, text)
        # Parse the text back into a tree with a tiny independent parser:
        # rebuilding the tree is exactly what the engine must have done.
        assert sentence.models == reference_models(THREE, _reparse(text)), text


def _reparse(text: str):
    """A minimal second parser used only to cross-check random formulas."""
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()!&|":
            tokens.append(c)
            i += 1
        else:
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        pos += 1
        return tokens[pos - 1]

    def parse_or():
        node = parse_and()
        while peek() == "|":
            take()
            node = ("or", node, parse_and())
        return node

    def parse_and():
        node = parse_unit()
        while peek() == "&":
            take()
            node = ("and", node, parse_unit())
        return node

    def parse_unit():
        token = take()
        if token == "!":
            return ("not", parse_unit())
        if token == "(":
            node = parse_or()
            take()
            return node
        return ("atom", token)

    return parse_or()


def test_atom_bit_convention():
    # Atom i is true in valuation v exactly when v has bit i set.
    for i, name in enumerate(THREE.atoms):
        expected = 0
        for v in range(8):
            if v >> i & 1:
                expected |= 1 << v
        assert build_sentence(THREE, name).models == expected


def test_unicode_connectives_are_aliases():
    assert (
        build_sentence(THREE, "¬w ∧ (x ∨ y)").models
        == build_sentence(THREE, "!w & (x | y)").models
    )


# -- algebraic laws ----------------------------------------------------------

frames = st.sampled_from(
    [EvidenceFrame(("w",)), EvidenceFrame(("w", "x")), THREE]
)


@st.composite
def sentence_pairs(draw):
    frame = draw(frames)
    full = frame.full_mask
    a = EvidenceSentence(frame, draw(st.integers(0, full)))
    b = EvidenceSentence(frame, draw(st.integers(0, full)))
    return a, b


@settings(max_examples=100)
@given(sentence_pairs())
def test_connective_laws(pair):
    a, b = pair
    assert (~(a & b)).models == (~a | ~b).models
    assert (~(a | b)).models == (~a & ~b).models
    assert (a & b).implies(a)
    assert a.implies(a | b)
    assert (~~a).models == a.models
    assert a.equivalent(a)
    assert a.implies(a)


@settings(max_examples=100)
@given(sentence_pairs())
def test_implication_is_a_partial_order_up_to_equivalence(pair):
    a, b = pair
    if a.implies(b) and b.implies(a):
        assert a.equivalent(b)
    assert a.strictly_implies(b) == (a.implies(b) and not b.implies(a))
    assert a.is_satisfiable() == (a.models != 0)
    assert a.is_tautology() == (a.models == a.frame.full_mask)


@settings(max_examples=60)
@given(sentence_pairs())
def test_describe_reparses_to_the_same_models(pair):
    a, _ = pair
    if a.is_satisfiable() and not a.is_tautology():
        assert build_sentence(a.frame, a.describe()).models == a.models


def test_describe_synthesised_text():
    w, x, y = (build_sentence(THREE, n) for n in THREE.atoms)
    assert (w & x).describe() == "w & x"
    assert ((w | x) & y).describe() == "(w | x) & y"
    assert (~w).describe() == "!w"
    assert (~(w & x)).describe() == "!(w & x)"
    assert (w | x).describe() == "w | x"
    assert EvidenceSentence(THREE, 0).describe() == "false"
    assert EvidenceSentence(THREE, THREE.full_mask).describe() == "true"


def test_combine():
    w, x, y = (build_sentence(THREE, n) for n in THREE.atoms)
    assert combine("conjoin", [w, x, y]).models == (w & x & y).models
    assert combine("disjoin", [w, x]).models == (w | x).models
    assert combine("negate", [w]).models == (~w).models
    with pytest.raises(Exception):
        combine("negate", [w, x])
    with pytest.raises(Exception):
        combine("conjoin", [])
    with pytest.raises(Exception):
        combine("sideways", [w])


# -- parse errors ------------------------------------------------------------


def test_unknown_atom_is_named_and_located():
    with pytest.raises(FormulaError) as caught:
        build_sentence(THREE, "w & bogus")
    assert "bogus" in str(caught.value)
    assert caught.value.column == 5


@pytest.mark.parametrize(
    "bad", ["", "w &", "& w", "(w", "w)", "!", "w x", "w & ()"]
)
def test_malformed_formulas_raise(bad):
    with pytest.raises(FormulaError):
        build_sentence(THREE, bad)


# -- frames ------------------------------------------------------------------


def test_frame_bounds():
    with pytest.raises(DeclarationError):
        EvidenceFrame(())
    with pytest.raises(DeclarationError):
        EvidenceFrame(tuple(f"a{i}" for i in range(17)))
    with pytest.raises(DeclarationError):
        EvidenceFrame(("w", "w"))
    with pytest.raises(DeclarationError):
        EvidenceFrame(("w", ""))
    assert EvidenceFrame(tuple(f"a{i}" for i in range(16))).valuations == 2**16
    with pytest.raises(DeclarationError):
        ConclusionFrame(tuple(f"b{i}" for i in range(25)))
    assert ConclusionFrame(("A",)).size == 1


def test_mixed_frames_are_rejected():
    other = EvidenceFrame(("w", "x", "y"))
    a = build_sentence(THREE, "w")
    b = build_sentence(EvidenceFrame(("w", "x")), "w")
    assert other == THREE  # frames are value objects
    with pytest.raises(Exception):
        a & b


# -- conclusions -------------------------------------------------------------

ALTS = ConclusionFrame(("A", "B", "C"))


def test_conclusion_basics():
    ab = conclusion_of(ALTS, ["A", "B"])
    b = conclusion_of(ALTS, ["B"])
    assert b.implies(ab) and not ab.implies(b)
    assert ab.complement().names() == ("C",)
    assert (b | conclusion_of(ALTS, ["C"])).describe() == "{B, C}"
    assert ab.describe() == "{A, B}"
    assert conclusion_of(ALTS, []).is_empty()
    assert ab.complement().complement().members == ab.members


def test_conclusion_parsing():
    assert parse_conclusion(ALTS, "{A, C}").names() == ("A", "C")
    assert parse_conclusion(ALTS, "!{B}").names() == ("A", "C")
    assert parse_conclusion(ALTS, "{ A }").names() == ("A",)
    with pytest.raises(FormulaError):
        parse_conclusion(ALTS, "{A, D}")
    with pytest.raises(FormulaError):
        parse_conclusion(ALTS, "{A")
    with pytest.raises(FormulaError):
        parse_conclusion(ALTS, "A")
    with pytest.raises(DeclarationError):
        conclusion_of(ALTS, ["Z"])
