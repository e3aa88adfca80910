"""Suboperad generation by closure under substitution.

A worklist closure: every newly found word is paired with every word found
so far, in both substitution orders and at every position whose result still
fits the arity bound.  Results never shrink in arity, so the truncation of a
large closure agrees with the closure computed at the smaller bound.  When
the symmetric flag is set, each word is inserted together with all
rearrangements of its letters.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Protocol

from .monoids import Monoid, Morphism
from .words import Letters, Word, splice

__all__ = [
    "GeneratorSet",
    "GradedFamily",
    "ComparisonVerdict",
    "NonEnumerableError",
    "generate_closure",
    "dimension_sequence",
    "equals_predicate",
    "quotient_image",
]


class NonEnumerableError(ValueError):
    """A predicate admits no finite enumeration at the requested arity."""


@dataclass(frozen=True)
class GeneratorSet:
    """A finite set of generating words over one monoid."""

    monoid: Monoid
    generators: tuple[Letters, ...]
    symmetric: bool = False

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("at least one generator is required")
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if not g:
                raise ValueError("generators are nonempty words")
            for a in g:
                self.monoid.check(a)

    @classmethod
    def from_words(cls, words: list[Word], symmetric: bool = False) -> "GeneratorSet":
        monoids = {w.monoid for w in words}
        if len(monoids) != 1:
            raise ValueError("generators must share one monoid")
        return cls(monoids.pop(), tuple(w.letters for w in words), symmetric)


@dataclass
class GradedFamily:
    """Arity-indexed finite sets of canonical words, an arity-truncated closure."""

    monoid: Monoid
    max_arity: int
    by_arity: dict[int, frozenset[Letters]]

    def arity_set(self, n: int) -> frozenset[Letters]:
        return self.by_arity.get(n, frozenset())

    def contains(self, letters: Letters) -> bool:
        return tuple(letters) in self.arity_set(len(letters))

    def words(self, n: int) -> list[Letters]:
        return sorted(self.arity_set(n))

    def iter_all(self) -> Iterator[Letters]:
        for n in range(1, self.max_arity + 1):
            yield from self.words(n)

    def dimensions(self) -> tuple[int, ...]:
        return tuple(len(self.arity_set(n)) for n in range(1, self.max_arity + 1))

    def truncate(self, max_arity: int) -> "GradedFamily":
        if max_arity > self.max_arity:
            raise ValueError("cannot truncate upward")
        kept = {n: s for n, s in self.by_arity.items() if n <= max_arity}
        return GradedFamily(self.monoid, max_arity, kept)

    def to_jsonl(self) -> str:
        lines = [Word(self.monoid, w).to_record() for w in self.iter_all()]
        return "\n".join(lines) + ("\n" if lines else "")


def generate_closure(gens: GeneratorSet, max_arity: int) -> GradedFamily:
    """Smallest family containing the unit and the generators, closed under
    substitution (and under letter permutation when symmetric), truncated to
    the arity bound."""
    top = max(len(g) for g in gens.generators)
    if max_arity < top:
        raise ValueError(
            f"arity bound {max_arity} is below the largest generator arity {top}"
        )
    op = gens.monoid.op
    symmetric = gens.symmetric
    by_arity: dict[int, set[Letters]] = {n: set() for n in range(1, max_arity + 1)}
    pools: dict[int, list[Letters]] = {n: [] for n in range(1, max_arity + 1)}
    queue: deque[Letters] = deque()

    def insert(w: Letters) -> None:
        target = by_arity[len(w)]
        if w in target:
            return
        orbit = set(itertools.permutations(w)) if symmetric else (w,)
        for v in orbit:
            if v not in target:
                target.add(v)
                pools[len(v)].append(v)
                queue.append(v)

    insert((gens.monoid.unit,))
    for g in gens.generators:
        insert(g)

    # every unordered pair is attempted when its later member leaves the
    # queue; only arity-compatible buckets are scanned
    while queue:
        w = queue.popleft()
        nw = len(w)
        for b in range(1, max_arity - nw + 2):
            for v in pools[b].copy():
                for i in range(1, len(v) + 1):
                    insert(splice(v, i, w, op))
                for i in range(1, nw + 1):
                    insert(splice(w, i, v, op))

    frozen = {n: frozenset(s) for n, s in by_arity.items()}
    return GradedFamily(gens.monoid, max_arity, frozen)


def dimension_sequence(family: GradedFamily) -> tuple[int, ...]:
    """Cardinalities per arity, from arity 1 up to the bound."""
    return family.dimensions()


class MembershipPredicate(Protocol):
    monoid: Monoid

    def enumerate_arity(self, n: int) -> list[Letters]: ...


@dataclass(frozen=True)
class ComparisonVerdict:
    """Result of comparing a generated family with a predicate enumeration."""

    ok: bool
    arity: int | None = None
    missing: Letters | None = None  # satisfies the predicate, absent from the family
    extra: Letters | None = None  # in the family, rejected by the predicate
    detail: str = ""

    def __str__(self) -> str:
        if self.ok:
            return "equal"
        parts = [f"mismatch at arity {self.arity}"]
        if self.missing is not None:
            parts.append(f"missing {self.missing}")
        if self.extra is not None:
            parts.append(f"extra {self.extra}")
        if self.detail:
            parts.append(self.detail)
        return "; ".join(parts)


def equals_predicate(
    family: GradedFamily, predicate: MembershipPredicate
) -> ComparisonVerdict:
    """Compare the family, arity by arity, with the brute-force enumeration of
    all words satisfying the predicate."""
    if family.monoid != predicate.monoid:
        return ComparisonVerdict(
            False, detail=f"monoid mismatch: {family.monoid} vs {predicate.monoid}"
        )
    for n in range(1, family.max_arity + 1):
        try:
            expected = frozenset(predicate.enumerate_arity(n))
        except NonEnumerableError as exc:
            return ComparisonVerdict(False, arity=n, detail=str(exc))
        got = family.arity_set(n)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            return ComparisonVerdict(
                False,
                arity=n,
                missing=missing[0] if missing else None,
                extra=extra[0] if extra else None,
            )
    return ComparisonVerdict(True)


def quotient_image(family: GradedFamily, theta: Morphism) -> GradedFamily:
    """Letterwise image of every word under a monoid morphism, deduplicated."""
    if family.monoid != theta.source:
        raise ValueError(
            f"family over {family.monoid.name}, morphism from {theta.source.name}"
        )
    image: dict[int, frozenset[Letters]] = {}
    for n in range(1, family.max_arity + 1):
        image[n] = frozenset(
            tuple(theta(a) for a in w) for w in family.arity_set(n)
        )
    return GradedFamily(theta.target, family.max_arity, image)
