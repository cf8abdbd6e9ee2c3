"""The relative-strength preorder over a structure's arguments.

The closed relation is the least reflexive, transitive relation containing
five families of seed pairs:

* declared argument-level relations (an equality seeds both directions);
* declared presumption-level relations, expanded to every pair of arguments
  carrying the two presumptions;
* arguments sharing a presumption rank below those concluding more
  (conclusion implication with equal presumptions);
* an argument whose presumption is strictly more specific dominates one
  with a strictly weaker presumption, whatever the two conclusions;
* optionally, equality across one presumption, and lifting of declared
  presumption-level strengths to conjunction-rule arguments.

Strictness is never seeded: ``a`` is strictly below ``b`` exactly when the
closure holds one way and not the other.  Declared strict or equal pairs
are instead audited afterwards by :func:`check_consistency`, which reports
each violation with a seed-by-seed provenance chain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DeclarationError, UsageError
from .structure import (
    EvidenceStructure,
    KIND_EQUAL,
    KIND_STRICT,
    LEVEL_ARGUMENT,
    LEVEL_PRESUMPTION,
    ORIGIN_CONJUNCTION,
    RelationDeclaration,
)

SEED_DECLARATION = "declaration"
SEED_CONSTRAINT_CONCLUSION = "conclusion-implication"
SEED_CONSTRAINT_SPECIFICITY = "presumption-specificity"
SEED_SAME_PRESUMPTION = "same-presumption"
SEED_LIFTING = "conjunction-lifting"


@dataclass(frozen=True)
class SeedReason:
    """Why one seed pair is in the relation."""

    kind: str
    detail: str

    def describe(self) -> str:
        return f"{self.kind}: {self.detail}" if self.detail else self.kind


@dataclass(frozen=True)
class ChainStep:
    """One seeded link ``lower`` is at most ``upper`` in a provenance chain."""

    lower: str
    upper: str
    reason: SeedReason


class OrderClosure:
    """The closed strength relation, queryable by argument id."""

    def __init__(
        self,
        structure: EvidenceStructure,
        rows: list[int],
        seeds: dict[tuple[int, int], list[SeedReason]],
    ):
        self.structure = structure
        self.ids = tuple(a.id for a in structure.arguments)
        self._index = {arg_id: i for i, arg_id in enumerate(self.ids)}
        self._rows = rows
        self._seeds = seeds
        self._adjacency: list[list[int]] = [[] for _ in self.ids]
        for (i, j) in sorted(seeds):
            if i != j:
                self._adjacency[i].append(j)

    def _at(self, arg_id: str) -> int:
        try:
            return self._index[self.structure.resolve_id(arg_id)]
        except KeyError:
            raise UsageError(f"unknown argument id {arg_id!r}") from None

    def leq(self, lower: str, upper: str) -> bool:
        """Is *lower* at most as strong as *upper*?"""
        return bool(self._rows[self._at(lower)] >> self._at(upper) & 1)

    def strictly_less(self, lower: str, upper: str) -> bool:
        i, j = self._at(lower), self._at(upper)
        return bool(self._rows[i] >> j & 1) and not self._rows[j] >> i & 1

    def equivalent(self, left: str, right: str) -> bool:
        i, j = self._at(left), self._at(right)
        return bool(self._rows[i] >> j & 1) and bool(self._rows[j] >> i & 1)

    def incomparable(self, left: str, right: str) -> bool:
        i, j = self._at(left), self._at(right)
        return not self._rows[i] >> j & 1 and not self._rows[j] >> i & 1

    def leq_index(self, i: int, j: int) -> bool:
        return bool(self._rows[i] >> j & 1)

    def seed_reasons(self, lower: str, upper: str) -> list[SeedReason]:
        return list(self._seeds.get((self._at(lower), self._at(upper)), []))

    def provenance_chain(self, lower: str, upper: str) -> list[ChainStep]:
        """A shortest seed-by-seed derivation of ``lower <= upper``.

        Empty for a reflexive pair; raises if the relation does not hold.
        """
        start, goal = self._at(lower), self._at(upper)
        if not self._rows[start] >> goal & 1:
            raise UsageError(
                f"{lower!r} is not at most {upper!r}; no chain exists"
            )
        if start == goal:
            return []
        parent: dict[int, int] = {start: start}
        queue = deque([start])
        while queue:
            here = queue.popleft()
            if here == goal:
                break
            for there in self._adjacency[here]:
                if there not in parent:
                    parent[there] = here
                    queue.append(there)
        steps: list[ChainStep] = []
        node = goal
        while node != start:
            prev = parent[node]
            reason = self._seeds[(prev, node)][0]
            steps.append(ChainStep(self.ids[prev], self.ids[node], reason))
            node = prev
        steps.reverse()
        return steps


def _presumption_preorder(structure: EvidenceStructure) -> set[tuple[int, int]]:
    """Reflexive-transitive closure of the declared presumption-level pairs,
    as a set of (model-mask, model-mask) pairs."""
    pairs: set[tuple[int, int]] = set()
    for declaration in structure.declarations:
        if declaration.level != LEVEL_PRESUMPTION:
            continue
        left, right = declaration.left.models, declaration.right.models
        pairs.add((left, right))
        if declaration.kind == KIND_EQUAL:
            pairs.add((right, left))
    changed = True
    while changed:
        changed = False
        for (a, b) in list(pairs):
            for (c, d) in list(pairs):
                if b == c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return pairs


def build_closure(structure: EvidenceStructure) -> OrderClosure:
    """Seed and close the strength relation for a validated structure."""
    report = structure.validate()
    if not report.ok:
        raise DeclarationError(
            "structure has declaration errors: " + "; ".join(report.errors)
        )
    arguments = structure.arguments
    count = len(arguments)
    index = {a.id: i for i, a in enumerate(arguments)}
    seeds: dict[tuple[int, int], list[SeedReason]] = {}

    def seed(i: int, j: int, kind: str, detail: str) -> None:
        reasons = seeds.setdefault((i, j), [])
        if not any(r.kind == kind for r in reasons):
            reasons.append(SeedReason(kind, detail))

    for declaration in structure.declarations:
        detail = f"#{declaration.ordinal} {declaration.describe()}"
        if declaration.level == LEVEL_ARGUMENT:
            pairs = [(index[declaration.left], index[declaration.right])]
        else:
            lows = [
                index[a.id]
                for a in structure.arguments_with_presumption(declaration.left)
            ]
            highs = [
                index[a.id]
                for a in structure.arguments_with_presumption(declaration.right)
            ]
            pairs = [(i, j) for i in lows for j in highs]
        for (i, j) in pairs:
            seed(i, j, SEED_DECLARATION, detail)
            if declaration.kind == KIND_EQUAL:
                seed(j, i, SEED_DECLARATION, detail)

    same_presumption_equal = structure.options.same_presumption_equal
    for i, lower in enumerate(arguments):
        for j, upper in enumerate(arguments):
            if i == j:
                continue
            if lower.presumption.models == upper.presumption.models:
                if lower.conclusion.implies(upper.conclusion):
                    seed(
                        i,
                        j,
                        SEED_CONSTRAINT_CONCLUSION,
                        f"{lower.id} concludes a subset of {upper.id}",
                    )
                if same_presumption_equal:
                    seed(
                        i,
                        j,
                        SEED_SAME_PRESUMPTION,
                        f"{lower.id} and {upper.id} share a presumption",
                    )
            elif upper.presumption.implies(lower.presumption):
                # upper's presumption is strictly more specific than lower's.
                seed(
                    i,
                    j,
                    SEED_CONSTRAINT_SPECIFICITY,
                    f"{upper.id} presumes strictly more than {lower.id}",
                )

    if structure.options.conjunction_lifting:
        _seed_lifting(structure, index, seed)

    # Close by per-argument breadth-first reachability over the seed graph:
    # the row of i holds i itself plus everything a seed path reaches.
    forward: list[list[int]] = [[] for _ in range(count)]
    for (i, j) in seeds:
        if i != j:
            forward[i].append(j)
    rows: list[int] = []
    for start in range(count):
        seen = 1 << start
        queue = deque([start])
        while queue:
            here = queue.popleft()
            for there in forward[here]:
                bit = 1 << there
                if not seen & bit:
                    seen |= bit
                    queue.append(there)
        rows.append(seen)
    return OrderClosure(structure, rows, seeds)


def _seed_lifting(structure: EvidenceStructure, index: dict[str, int], seed) -> None:
    """Seed conjunction-lifting pairs from the declared presumption order."""
    order = _presumption_preorder(structure)

    def below(x, y) -> bool:
        return x.models == y.models or (x.models, y.models) in order

    sources = [
        a for a in structure.arguments if ORIGIN_CONJUNCTION in a.origins and a.parents
    ]
    for source in sources:
        i = index[source.id]
        for target in structure.arguments:
            j = index[target.id]
            if i == j:
                continue
            lifted = False
            for (x, y) in source.parents:
                # Collapsed bound: both parents sit below the whole target
                # presumption.
                if below(x, target.presumption) and below(y, target.presumption):
                    lifted = True
                    break
                for (tx, ty) in target.parents:
                    if (below(x, tx) and below(y, ty)) or (
                        below(x, ty) and below(y, tx)
                    ):
                        lifted = True
                        break
                if lifted:
                    break
            if lifted:
                seed(
                    i,
                    j,
                    SEED_LIFTING,
                    f"parents of {source.id} are each outweighed toward {target.id}",
                )


@dataclass(frozen=True)
class Violation:
    """A declared strict/equal relation the closure fails to honour."""

    declaration: RelationDeclaration
    counter: tuple[str, str]  # the pair whose presence (or absence) offends
    chain: tuple[ChainStep, ...]  # derivation of the offending direction

    def describe(self) -> str:
        lower, upper = self.counter
        if self.declaration.kind == KIND_STRICT:
            return (
                f"declared {self.declaration.describe()!r} but the closure also "
                f"makes {lower} at most {upper}"
            )
        return (
            f"declared {self.declaration.describe()!r} but the closure does not "
            f"relate {lower} and {upper} both ways"
        )


@dataclass
class ConsistencyReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_consistency(
    closure: OrderClosure, structure: EvidenceStructure
) -> ConsistencyReport:
    """Audit every declared strict and equal relation against the closure.

    A strict declaration is violated when the reverse direction is also
    derivable (the pair collapsed into an equivalence); the report then
    carries the chain that derives the reverse direction.
    """
    report = ConsistencyReport()
    for declaration in structure.declarations:
        if declaration.kind == KIND_STRICT:
            for (low, high) in _declared_pairs(structure, declaration):
                if closure.leq(high, low):
                    report.violations.append(
                        Violation(
                            declaration,
                            (high, low),
                            tuple(closure.provenance_chain(high, low)),
                        )
                    )
        elif declaration.kind == KIND_EQUAL:
            for (low, high) in _declared_pairs(structure, declaration):
                if not (closure.leq(low, high) and closure.leq(high, low)):
                    report.violations.append(Violation(declaration, (low, high), ()))
    return report


def _declared_pairs(structure, declaration) -> list[tuple[str, str]]:
    if declaration.level == LEVEL_ARGUMENT:
        return [(declaration.left, declaration.right)]
    lows = structure.arguments_with_presumption(declaration.left)
    highs = structure.arguments_with_presumption(declaration.right)
    return [(low.id, high.id) for low in lows for high in highs]
