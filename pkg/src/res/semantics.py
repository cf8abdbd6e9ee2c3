"""Finite propositional semantics for evidence and conclusions.

Evidence is described over a frame of at most 16 boolean atoms; a sentence
denotes the set of valuations that satisfy it, held as a bit mask over the
2**n valuations (valuation ``v`` makes atom ``i`` true iff bit ``i`` of ``v``
is set).  Conclusions live over a separate frame of at most 24 mutually
exclusive alternatives; a conclusion sentence is simply a subset of them.
Implication is set inclusion on both sides, so every semantic question is an
exact integer operation with no prover in sight.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import formula as _formula
from .errors import DeclarationError, UsageError

MAX_ATOMS = 16
MAX_ALTERNATIVES = 24

_BARE_TERM = re.compile(r"!?[A-Za-z][A-Za-z0-9_]*\Z")


def _check_names(names: tuple[str, ...], what: str, cap: int) -> None:
    if not names:
        raise DeclarationError(f"a frame needs at least one {what}")
    if len(names) > cap:
        raise DeclarationError(f"too many {what}s: {len(names)} (limit {cap})")
    seen = set()
    for name in names:
        if not name:
            raise DeclarationError(f"empty {what} name")
        if name in seen:
            raise DeclarationError(f"duplicate {what} name {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class EvidenceFrame:
    """An ordered tuple of evidence atoms."""

    atoms: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        _check_names(self.atoms, "atom", MAX_ATOMS)

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def valuations(self) -> int:
        return 1 << len(self.atoms)

    @property
    def full_mask(self) -> int:
        return (1 << self.valuations) - 1


@lru_cache(maxsize=None)
def _atom_masks(frame: EvidenceFrame) -> dict[str, int]:
    masks: dict[str, int] = {}
    for i, name in enumerate(frame.atoms):
        mask = 0
        for v in range(frame.valuations):
            if v >> i & 1:
                mask |= 1 << v
        masks[name] = mask
    return masks


@dataclass(frozen=True)
class EvidenceSentence:
    """A set of valuations of an :class:`EvidenceFrame`.

    ``text`` records how the sentence was written down; it takes no part in
    equality, which is purely semantic.
    """

    frame: EvidenceFrame
    models: int
    text: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.models <= self.frame.full_mask:
            raise UsageError("model mask out of range for this frame")

    def _check(self, other: "EvidenceSentence") -> None:
        if self.frame != other.frame:
            raise UsageError("evidence sentences belong to different frames")

    def implies(self, other: "EvidenceSentence") -> bool:
        self._check(other)
        return self.models & ~other.models == 0

    def strictly_implies(self, other: "EvidenceSentence") -> bool:
        self._check(other)
        return self.models != other.models and self.models & ~other.models == 0

    def equivalent(self, other: "EvidenceSentence") -> bool:
        self._check(other)
        return self.models == other.models

    def is_satisfiable(self) -> bool:
        return self.models != 0

    def is_tautology(self) -> bool:
        return self.models == self.frame.full_mask

    def __and__(self, other: "EvidenceSentence") -> "EvidenceSentence":
        self._check(other)
        return EvidenceSentence(
            self.frame,
            self.models & other.models,
            _and_text(self.text, other.text),
        )

    def __or__(self, other: "EvidenceSentence") -> "EvidenceSentence":
        self._check(other)
        return EvidenceSentence(
            self.frame,
            self.models | other.models,
            _or_text(self.text, other.text),
        )

    def __invert__(self) -> "EvidenceSentence":
        return EvidenceSentence(
            self.frame, self.models ^ self.frame.full_mask, _not_text(self.text)
        )

    def describe(self) -> str:
        """A printable form: the source text when known, otherwise a summary."""
        if self.text is not None:
            return self.text
        if self.models == 0:
            return "false"
        if self.is_tautology():
            return "true"
        if self.frame.size <= 6:
            return self._as_minterms()
        count = bin(self.models).count("1")
        return f"<{count}/{self.frame.valuations} valuations>"

    def _as_minterms(self) -> str:
        terms = []
        for v in range(self.frame.valuations):
            if self.models >> v & 1:
                lits = [
                    name if v >> i & 1 else "!" + name
                    for i, name in enumerate(self.frame.atoms)
                ]
                terms.append(" & ".join(lits))
        if len(terms) == 1:
            return terms[0]
        return " | ".join(f"({t})" for t in terms)


def _needs_parens(text: str) -> bool:
    return _BARE_TERM.match(text) is None


def _and_text(left: str | None, right: str | None) -> str | None:
    if left is None or right is None:
        return None
    lt = f"({left})" if "|" in left else left
    rt = f"({right})" if "|" in right else right
    return f"{lt} & {rt}"


def _or_text(left: str | None, right: str | None) -> str | None:
    if left is None or right is None:
        return None
    return f"{left} | {right}"


def _not_text(text: str | None) -> str | None:
    if text is None:
        return None
    return f"!{text}" if not _needs_parens(text) else f"!({text})"


def build_sentence(frame: EvidenceFrame, formula: str) -> EvidenceSentence:
    """Parse *formula* over *frame* into an :class:`EvidenceSentence`."""
    mask = _formula.parse_formula_mask(formula, _atom_masks(frame), frame.full_mask)
    return EvidenceSentence(frame, mask, formula.strip())


def combine(op: str, operands: Sequence[EvidenceSentence]) -> EvidenceSentence:
    """Apply ``negate`` (unary), ``conjoin`` or ``disjoin`` (n-ary, n >= 1)."""
    if not operands:
        raise UsageError("combine needs at least one operand")
    if op == "negate":
        if len(operands) != 1:
            raise UsageError("negate takes exactly one operand")
        return ~operands[0]
    if op not in ("conjoin", "disjoin"):
        raise UsageError(f"unknown combination {op!r}")
    result = operands[0]
    for operand in operands[1:]:
        result = result & operand if op == "conjoin" else result | operand
    return result


@dataclass(frozen=True)
class ConclusionFrame:
    """An ordered tuple of mutually exclusive, exhaustive alternatives."""

    alternatives: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        _check_names(self.alternatives, "alternative", MAX_ALTERNATIVES)

    @property
    def size(self) -> int:
        return len(self.alternatives)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.alternatives)) - 1


@lru_cache(maxsize=None)
def _alternative_bits(frame: ConclusionFrame) -> dict[str, int]:
    return {name: 1 << i for i, name in enumerate(frame.alternatives)}


@dataclass(frozen=True)
class ConclusionSentence:
    """A subset of the alternatives of a :class:`ConclusionFrame`."""

    frame: ConclusionFrame
    members: int

    def __post_init__(self):
        if not 0 <= self.members <= self.frame.full_mask:
            raise UsageError("member mask out of range for this frame")

    def _check(self, other: "ConclusionSentence") -> None:
        if self.frame != other.frame:
            raise UsageError("conclusion sentences belong to different frames")

    def implies(self, other: "ConclusionSentence") -> bool:
        self._check(other)
        return self.members & ~other.members == 0

    def complement(self) -> "ConclusionSentence":
        return ConclusionSentence(self.frame, self.members ^ self.frame.full_mask)

    def __or__(self, other: "ConclusionSentence") -> "ConclusionSentence":
        self._check(other)
        return ConclusionSentence(self.frame, self.members | other.members)

    def is_empty(self) -> bool:
        return self.members == 0

    def is_full(self) -> bool:
        return self.members == self.frame.full_mask

    def names(self) -> tuple[str, ...]:
        return tuple(
            name
            for i, name in enumerate(self.frame.alternatives)
            if self.members >> i & 1
        )

    def describe(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


def parse_conclusion(frame: ConclusionFrame, text: str) -> ConclusionSentence:
    """Parse a conclusion literal such as ``{Al1, Al2}`` or ``!{Al1}``."""
    mask = _formula.parse_conclusion_mask(
        text, _alternative_bits(frame), frame.full_mask
    )
    return ConclusionSentence(frame, mask)


def conclusion_of(frame: ConclusionFrame, names: Iterable[str]) -> ConclusionSentence:
    """Build a conclusion from alternative names."""
    bits = _alternative_bits(frame)
    mask = 0
    for name in names:
        try:
            mask |= bits[name]
        except KeyError:
            raise DeclarationError(f"unknown alternative {name!r}") from None
    return ConclusionSentence(frame, mask)
