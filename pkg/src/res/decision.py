"""Comparing conclusions under an observation.

A conclusion is only as believable as the triggered arguments that support
it, where an argument supports a conclusion when its own conclusion implies
it.  One conclusion is at most as believable as another when every argument
for the first is matched by an at-least-as-strong argument for the second;
a conclusion with no support at all sits below anything that has some.
Everything else here (verdicts, plausibility, maximal candidates, diagrams,
explanations) is bookkeeping over that one definition, and none of it ever
invents an order where the arguments are silent: ties and incomparable
pairs are reported, never broken.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .conditioning import ConditionedStructure
from .errors import UsageError
from .order import ChainStep
from .semantics import ConclusionFrame, ConclusionSentence
from .structure import Argument


class ComparisonVerdict(enum.Enum):
    STRICTLY_LESS = "StrictlyLess"
    STRICTLY_GREATER = "StrictlyGreater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def mirrored(self) -> "ComparisonVerdict":
        if self is ComparisonVerdict.STRICTLY_LESS:
            return ComparisonVerdict.STRICTLY_GREATER
        if self is ComparisonVerdict.STRICTLY_GREATER:
            return ComparisonVerdict.STRICTLY_LESS
        return self


def _check_conclusion(conditioned: ConditionedStructure, p: ConclusionSentence):
    if p.frame != conditioned.structure.conclusion_frame:
        raise UsageError("conclusion belongs to a different frame")


def supports_of(
    conditioned: ConditionedStructure, p: ConclusionSentence
) -> list[Argument]:
    """Triggered arguments whose conclusion implies *p*, in stable order."""
    _check_conclusion(conditioned, p)
    return [a for a in conditioned.triggered if a.conclusion.implies(p)]


def leq_conclusions(
    conditioned: ConditionedStructure,
    first: ConclusionSentence,
    second: ConclusionSentence,
) -> bool:
    """Is *first* at most as believable as *second* under the observation?"""
    base = supports_of(conditioned, first)
    rivals = supports_of(conditioned, second)
    if not base:
        return bool(rivals)
    return all(
        any(conditioned.closure.leq(a.id, b.id) for b in rivals) for a in base
    )


def compare(
    conditioned: ConditionedStructure,
    first: ConclusionSentence,
    second: ConclusionSentence,
) -> ComparisonVerdict:
    forward = leq_conclusions(conditioned, first, second)
    backward = leq_conclusions(conditioned, second, first)
    if forward and backward:
        return ComparisonVerdict.EQUAL
    if forward:
        return ComparisonVerdict.STRICTLY_LESS
    if backward:
        return ComparisonVerdict.STRICTLY_GREATER
    return ComparisonVerdict.INCOMPARABLE


def is_plausible(conditioned: ConditionedStructure, p: ConclusionSentence) -> bool:
    """Is *p* strictly more believable than its complement?"""
    _check_conclusion(conditioned, p)
    if p.is_empty() or p.is_full():
        raise UsageError("plausibility needs a non-empty, non-full conclusion")
    return (
        compare(conditioned, p.complement(), p) is ComparisonVerdict.STRICTLY_LESS
    )


@dataclass(frozen=True)
class RankResult:
    """Pairwise verdicts over a candidate list, with nothing invented.

    ``maximal`` holds the candidates no other candidate strictly beats.
    ``strata`` peels maximal layers off repeatedly; it is a presentation
    aid, the ``matrix`` is the authority.
    """

    candidates: tuple[ConclusionSentence, ...]
    matrix: tuple[tuple[ComparisonVerdict, ...], ...]
    maximal: tuple[ConclusionSentence, ...]
    strata: tuple[tuple[ConclusionSentence, ...], ...]


def rank(
    conditioned: ConditionedStructure, candidates: Sequence[ConclusionSentence]
) -> RankResult:
    if not candidates:
        raise UsageError("rank needs at least one candidate")
    for candidate in candidates:
        _check_conclusion(conditioned, candidate)
    order = [list(row) for row in _verdict_matrix(conditioned, candidates)]
    indices = list(range(len(candidates)))

    def beaten(i: int, pool: list[int]) -> bool:
        return any(
            order[i][j] is ComparisonVerdict.STRICTLY_LESS for j in pool if j != i
        )

    maximal = [i for i in indices if not beaten(i, indices)]
    strata: list[tuple[ConclusionSentence, ...]] = []
    remaining = indices
    while remaining:
        layer = [i for i in remaining if not beaten(i, remaining)]
        strata.append(tuple(candidates[i] for i in layer))
        remaining = [i for i in remaining if i not in layer]
    return RankResult(
        tuple(candidates),
        tuple(tuple(row) for row in order),
        tuple(candidates[i] for i in maximal),
        tuple(strata),
    )


def _verdict_matrix(conditioned, candidates):
    count = len(candidates)
    matrix = [[ComparisonVerdict.EQUAL] * count for _ in range(count)]
    for i in range(count):
        for j in range(i, count):
            verdict = compare(conditioned, candidates[i], candidates[j])
            matrix[i][j] = verdict
            matrix[j][i] = verdict.mirrored()
    return matrix


@dataclass(frozen=True)
class HasseDiagram:
    """Candidates grouped into equal-believability classes, with cover edges.

    ``edges`` pairs class indices ``(lower, higher)`` and is the transitive
    reduction of the strict relation between classes.
    """

    classes: tuple[tuple[ConclusionSentence, ...], ...]
    edges: tuple[tuple[int, int], ...]


def hasse(
    conditioned: ConditionedStructure, candidates: Sequence[ConclusionSentence]
) -> HasseDiagram:
    result = rank(conditioned, candidates)
    matrix = result.matrix
    count = len(candidates)
    # Group mutually-equal candidates; first occurrence names the class.
    class_of: list[int] = [-1] * count
    classes: list[list[int]] = []
    for i in range(count):
        if class_of[i] >= 0:
            continue
        group = [i]
        class_of[i] = len(classes)
        for j in range(i + 1, count):
            if class_of[j] < 0 and matrix[i][j] is ComparisonVerdict.EQUAL:
                class_of[j] = len(classes)
                group.append(j)
        classes.append(group)

    def less(a: int, b: int) -> bool:
        return matrix[classes[a][0]][classes[b][0]] is ComparisonVerdict.STRICTLY_LESS

    total = len(classes)
    edges = []
    for a in range(total):
        for b in range(total):
            if a == b or not less(a, b):
                continue
            if any(less(a, c) and less(c, b) for c in range(total)):
                continue  # not a covering pair
            edges.append((a, b))
    return HasseDiagram(
        tuple(tuple(result.candidates[i] for i in group) for group in classes),
        tuple(edges),
    )


@dataclass(frozen=True)
class SupportMatch:
    """One support of the weaker side and what, if anything, outweighs it."""

    support: str
    matched_by: str | None
    provenance: tuple[ChainStep, ...] = ()


@dataclass(frozen=True)
class DirectionTrace:
    """Evidence for or against ``source <= target``.

    With supports on the source side, ``holds`` means every one of them is
    matched; ``unmatched`` lists the holdouts.  With none, the direction
    rests solely on whether the target is supported at all.
    """

    source: ConclusionSentence
    target: ConclusionSentence
    source_supported: bool
    holds: bool
    matches: tuple[SupportMatch, ...]
    unmatched: tuple[str, ...]
    target_supports: tuple[str, ...]


@dataclass(frozen=True)
class ExplanationTrace:
    left: ConclusionSentence
    right: ConclusionSentence
    verdict: ComparisonVerdict
    forward: DirectionTrace  # left <= right
    backward: DirectionTrace  # right <= left


def explain(
    conditioned: ConditionedStructure,
    left: ConclusionSentence,
    right: ConclusionSentence,
) -> ExplanationTrace:
    """The comparison verdict together with enough detail to recheck it."""
    forward = _trace_direction(conditioned, left, right)
    backward = _trace_direction(conditioned, right, left)
    if forward.holds and backward.holds:
        verdict = ComparisonVerdict.EQUAL
    elif forward.holds:
        verdict = ComparisonVerdict.STRICTLY_LESS
    elif backward.holds:
        verdict = ComparisonVerdict.STRICTLY_GREATER
    else:
        verdict = ComparisonVerdict.INCOMPARABLE
    return ExplanationTrace(left, right, verdict, forward, backward)


def _trace_direction(conditioned, source, target) -> DirectionTrace:
    base = supports_of(conditioned, source)
    rivals = supports_of(conditioned, target)
    rival_ids = tuple(b.id for b in rivals)
    if not base:
        return DirectionTrace(
            source, target, False, bool(rivals), (), (), rival_ids
        )
    closure = conditioned.closure
    matches = []
    unmatched = []
    for argument in base:
        chosen = None
        if any(b.id == argument.id for b in rivals):
            chosen = argument.id  # an argument always matches itself
        else:
            for rival in rivals:
                if closure.leq(argument.id, rival.id):
                    chosen = rival.id
                    break
        if chosen is None:
            unmatched.append(argument.id)
            matches.append(SupportMatch(argument.id, None))
        else:
            matches.append(
                SupportMatch(
                    argument.id,
                    chosen,
                    tuple(closure.provenance_chain(argument.id, chosen)),
                )
            )
    return DirectionTrace(
        source,
        target,
        True,
        not unmatched,
        tuple(matches),
        tuple(unmatched),
        rival_ids,
    )


def candidate_sentences(frame: ConclusionFrame, mode: str) -> list[ConclusionSentence]:
    """Candidate sets for ranking: ``singletons``, ``singletons+complements``
    or ``all`` non-empty subsets (the latter only for small frames)."""
    singles = [ConclusionSentence(frame, 1 << i) for i in range(frame.size)]
    if mode == "singletons":
        return singles
    if mode == "singletons+complements":
        out = list(singles)
        seen = {s.members for s in singles}
        for single in singles:
            other = single.complement()
            if other.members not in seen and not other.is_empty():
                seen.add(other.members)
                out.append(other)
        return out
    if mode == "all":
        if frame.size > 5:
            raise UsageError(
                "candidate mode 'all' is limited to frames with at most 5 alternatives"
            )
        return [
            ConclusionSentence(frame, members)
            for members in range(1, frame.full_mask + 1)
        ]
    raise UsageError(f"unknown candidate mode {mode!r}")
