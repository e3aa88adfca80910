"""Membership predicates and enumerators for the word families.

Each family ships two independent routes to the same set: a letterwise
predicate and a direct enumerator per arity.  The generated closures are
compared against these in the test suite.  Twisted variants of the classical
families (endofunctions, parking functions, packed words, permutations)
shift every letter down by one so that substitution stays inside the set.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable

from ..generation import GeneratorSet, GradedFamily, generate_closure
from ..monoids import BOOLEAN, Monoid, NATURALS, cyclic
from ..words import Letters, MonoidMismatchError, Word, parse_letters
from .paths import da_phi, is_motzkin_prefix


class NotAMemberError(ValueError):
    """A word does not belong to the family required by a converter."""


# ---------------------------------------------------------------------------
# twisted classical families (letters shifted down by one)


def is_twisted_endofunction(letters: Letters) -> bool:
    n = len(letters)
    return all(a < n for a in letters)


def is_twisted_parking_function(letters: Letters) -> bool:
    return all(a <= idx for idx, a in enumerate(sorted(letters)))


def is_twisted_packed_word(letters: Letters) -> bool:
    seen = set(letters)
    return seen == set(range(max(letters) + 1))


def is_twisted_permutation(letters: Letters) -> bool:
    return sorted(letters) == list(range(len(letters)))


def has_repeated_letter(letters: Letters) -> bool:
    return len(set(letters)) < len(letters)


# ---------------------------------------------------------------------------
# generated families over the naturals


def is_prt_word(letters: Letters) -> bool:
    """Depth words of planar rooted trees: starts at 0, steps into 1..prev+1."""
    if letters[0] != 0:
        return False
    return all(1 <= b <= a + 1 for a, b in zip(letters, letters[1:]))


def is_fcat_word(letters: Letters, k: int) -> bool:
    """Starting ordinates of the up steps of a k-Dyck path."""
    if letters[0] != 0:
        return False
    return all(b <= a + k for a, b in zip(letters, letters[1:]))


def is_motz_word(letters: Letters) -> bool:
    """Ordinate sequences of Motzkin paths: 0 at both ends, unit steps."""
    if letters[0] != 0 or letters[-1] != 0:
        return False
    return all(abs(a - b) <= 1 for a, b in zip(letters, letters[1:]))


def is_schr_word(letters: Letters) -> bool:
    """Sector-depth words of trees whose nodes never have exactly one child.

    Every letter b >= 1 needs an occurrence of b - 1 reachable from it across
    letters that all stay >= b.
    """
    if 0 not in letters:
        return False
    for pos, b in enumerate(letters):
        if b == 0:
            continue
        if not _reaches_lower(letters, pos, b):
            return False
    return True


def _reaches_lower(letters: Letters, pos: int, b: int) -> bool:
    for q in range(pos - 1, -1, -1):
        if letters[q] == b - 1:
            return True
        if letters[q] < b:
            break
    for q in range(pos + 1, len(letters)):
        if letters[q] == b - 1:
            return True
        if letters[q] < b:
            break
    return False


def is_comp_word(letters: Letters) -> bool:
    """Words over {0, 1} that begin with 0; they encode integer compositions."""
    return letters[0] == 0 and all(a <= 1 for a in letters)


def is_scomp_word(letters: Letters) -> bool:
    """Words over {0, 1, 2} that begin with 0; segmented compositions."""
    return letters[0] == 0 and all(a <= 2 for a in letters)


def is_dias_word(letters: Letters) -> bool:
    """Words over {0, 1} holding exactly one 1."""
    return letters.count(1) == 1 and all(a <= 1 for a in letters)


# ---------------------------------------------------------------------------
# enumerators


def _prefix_walk(n: int, start: int, next_range: Callable[[int], Iterable[int]]):
    """All length-n walks from `start` where each step draws from next_range(prev)."""
    word = [start]

    def extend(depth: int):
        if depth == n:
            yield tuple(word)
            return
        for b in next_range(word[-1]):
            word.append(b)
            yield from extend(depth + 1)
            word.pop()

    yield from extend(1)


def enumerate_prt(n: int) -> list[Letters]:
    return list(_prefix_walk(n, 0, lambda a: range(1, a + 2)))


def enumerate_fcat(n: int, k: int) -> list[Letters]:
    return list(_prefix_walk(n, 0, lambda a: range(0, a + k + 1)))


def enumerate_motz(n: int) -> list[Letters]:
    walks = _prefix_walk(n, 0, lambda a: range(max(0, a - 1), a + 2))
    return [w for w in walks if w[-1] == 0]


def enumerate_schr(n: int) -> list[Letters]:
    # letters of an arity-n member never exceed n - 1: below any b the whole
    # chain b-1, ..., 0 must occur
    candidates = itertools.product(range(n), repeat=n)
    return [w for w in candidates if is_schr_word(w)]


def enumerate_comp(n: int) -> list[Letters]:
    return [(0,) + tail for tail in itertools.product((0, 1), repeat=n - 1)]


def enumerate_scomp(n: int) -> list[Letters]:
    return [(0,) + tail for tail in itertools.product((0, 1, 2), repeat=n - 1)]


def enumerate_dias(n: int) -> list[Letters]:
    out = []
    for pos in range(n):
        w = [0] * n
        w[pos] = 1
        out.append(tuple(w))
    return out


def _filtered_words(n: int, predicate: Callable[[Letters], bool]) -> list[Letters]:
    return [w for w in itertools.product(range(n), repeat=n) if predicate(w)]


def enumerate_end(n: int) -> list[Letters]:
    return list(itertools.product(range(n), repeat=n))


def enumerate_pf(n: int) -> list[Letters]:
    return _filtered_words(n, is_twisted_parking_function)


def enumerate_pw(n: int) -> list[Letters]:
    return _filtered_words(n, is_twisted_packed_word)


def enumerate_per(n: int) -> list[Letters]:
    return [tuple(p) for p in itertools.permutations(range(n))]


# ---------------------------------------------------------------------------
# the directed-animal family is defined by its closure; the letter-difference
# description below is checked against it and reported, never assumed

_da_cache: GradedFamily | None = None


def da_closure(max_arity: int) -> GradedFamily:
    global _da_cache
    if _da_cache is None or _da_cache.max_arity < max_arity:
        gens = GeneratorSet(cyclic(3), ((0, 0), (0, 1)))
        _da_cache = generate_closure(gens, max(max_arity, 2))
    return _da_cache


def is_da_word(letters: Letters) -> bool:
    return da_closure(len(letters)).contains(letters)


def enumerate_da(n: int) -> list[Letters]:
    return da_closure(n).words(n)


def da_prefix_description(letters: Letters) -> bool:
    """Conjectured description: starts with 0 and the step word of consecutive
    differences never dips below zero."""
    return letters[0] == 0 and is_motzkin_prefix(da_phi(letters))


def da_description_report(max_arity: int) -> list[tuple[int, bool, int, int]]:
    """Per arity: (n, agreement, closure count, description count)."""
    rows = []
    closure = da_closure(max_arity)
    for n in range(1, max_arity + 1):
        generated = closure.arity_set(n)
        described = frozenset(
            w
            for w in itertools.product(range(3), repeat=n)
            if da_prefix_description(w)
        )
        rows.append((n, generated == described, len(generated), len(described)))
    return rows


# ---------------------------------------------------------------------------
# family registry


@dataclass(frozen=True)
class Family:
    """A named family: monoid, generators when finitely generated, predicate,
    and a per-arity enumerator."""

    name: str
    monoid: Monoid
    generators: tuple[Letters, ...] | None
    symmetric: bool
    contains: Callable[[Letters], bool]
    enumerate_arity: Callable[[int], list[Letters]]
    table_dims: tuple[int, ...] | None = None
    description: str = ""
    note: str | None = None

    @property
    def finitely_generated(self) -> bool:
        return self.generators is not None

    def generator_set(self) -> GeneratorSet:
        if self.generators is None:
            raise ValueError(f"{self.name} has no finite generating set")
        return GeneratorSet(self.monoid, self.generators, self.symmetric)

    def closure(self, max_arity: int) -> GradedFamily:
        if self.name == "da":
            return da_closure(max_arity).truncate(max_arity)
        return generate_closure(self.generator_set(), max_arity)

    def expected_dims(self, max_arity: int) -> tuple[int, ...] | None:
        """Reference dimensions from a closed-form count, where one is known."""
        formula = _DIMENSION_FORMULAS.get(self.name)
        if formula is None:
            return None
        return tuple(formula(n) for n in range(1, max_arity + 1))


def _gens(*texts: str) -> tuple[Letters, ...]:
    return tuple(parse_letters(t) for t in texts)


def _fuss_catalan(k: int) -> Callable[[int], int]:
    def count(n: int) -> int:
        return math.comb((k + 1) * n, n) // (k * n + 1)

    return count


_DIMENSION_FORMULAS: dict[str, Callable[[int], int]] = {
    "end": lambda n: n**n,
    "pf": lambda n: (n + 1) ** (n - 1),
    "per": math.factorial,
    "comp": lambda n: 2 ** (n - 1),
    "scomp": lambda n: 3 ** (n - 1),
    "dias": lambda n: n,
    "fcat0": _fuss_catalan(0),
    "fcat1": _fuss_catalan(1),
    "fcat2": _fuss_catalan(2),
    "fcat3": _fuss_catalan(3),
}


def fcat_family(k: int) -> Family:
    return Family(
        name=f"fcat{k}",
        monoid=NATURALS,
        generators=tuple((0, j) for j in range(k + 1)),
        symmetric=False,
        contains=lambda w, k=k: is_fcat_word(w, k),
        enumerate_arity=lambda n, k=k: enumerate_fcat(n, k),
        table_dims=None,
        description=f"{k}-Dyck paths (up steps rise by {k})",
    )


FAMILIES: dict[str, Family] = {
    "end": Family(
        "end", NATURALS, None, True, is_twisted_endofunction, enumerate_end,
        table_dims=(1, 4, 27, 256, 3125),
        description="twisted endofunctions",
    ),
    "pf": Family(
        "pf", NATURALS, None, True, is_twisted_parking_function, enumerate_pf,
        table_dims=(1, 3, 16, 125, 1296),
        description="twisted parking functions",
    ),
    "pw": Family(
        "pw", NATURALS, _gens("00", "01"), True, is_twisted_packed_word,
        enumerate_pw,
        table_dims=(1, 3, 13, 75, 541),
        description="twisted packed words",
    ),
    "per": Family(
        "per", NATURALS, None, True, is_twisted_permutation, enumerate_per,
        table_dims=(1, 2, 6, 24, 120),
        description="twisted permutations with an absorbing zero",
    ),
    "prt": Family(
        "prt", NATURALS, _gens("01"), False, is_prt_word, enumerate_prt,
        table_dims=(1, 1, 2, 5, 14, 42),
        description="planar rooted trees as depth words",
    ),
    "fcat0": fcat_family(0),
    "fcat1": fcat_family(1),
    "fcat2": fcat_family(2),
    "fcat3": fcat_family(3),
    "schr": Family(
        "schr", NATURALS, _gens("00", "01", "10"), False, is_schr_word,
        enumerate_schr,
        table_dims=(1, 3, 11, 45, 197),
        description="Schroeder trees as sector-depth words",
    ),
    "motz": Family(
        "motz", NATURALS, _gens("00", "010"), False, is_motz_word, enumerate_motz,
        table_dims=(1, 1, 2, 4, 9, 21, 51),
        description="Motzkin paths as ordinate words",
    ),
    "comp": Family(
        "comp", cyclic(2), _gens("00", "01"), False, is_comp_word, enumerate_comp,
        table_dims=(1, 2, 4, 8, 16, 32),
        description="integer compositions",
    ),
    "da": Family(
        "da", cyclic(3), _gens("00", "01"), False, is_da_word, enumerate_da,
        table_dims=(1, 2, 5, 13, 35, 96),
        description="directed animals (membership defined by the closure)",
    ),
    "scomp": Family(
        "scomp", cyclic(3), _gens("00", "01", "02"), False, is_scomp_word,
        enumerate_scomp,
        table_dims=(1, 3, 27, 81, 243),
        description="segmented integer compositions",
        note=(
            "reference table prints 1, 3, 27, 81, 243 but the membership count "
            "is 3^(n-1) = 1, 3, 9, 27, 81; the printed row is a suspected "
            "misprint and is flagged, not matched"
        ),
    ),
    "dias": Family(
        "dias", BOOLEAN, _gens("10", "01"), False, is_dias_word, enumerate_dias,
        table_dims=None,
        description="words with exactly one 1; the two-sided associative pair",
    ),
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")


def is_member(name: str, x: Word) -> bool:
    """Does the word belong to the named family?  The word must live over the
    family's monoid."""
    fam = get_family(name)
    if x.monoid != fam.monoid:
        raise MonoidMismatchError(
            f"{name} lives over {fam.monoid.name}, word is over {x.monoid.name}"
        )
    return fam.contains(x.letters)


# ---------------------------------------------------------------------------
# the permutation quotient: substitution with an absorbing zero


class _PerZero:
    __slots__ = ()

    def __repr__(self) -> str:
        return "PER_ZERO"


PER_ZERO = _PerZero()

PerElement = Word | _PerZero


def per_substitute(x: PerElement, i: int, y: PerElement) -> PerElement:
    """Substitution in the quotient of packed words by the repeated-letter
    ideal: the plain word substitution when the result stays duplicate-free,
    the absorbing zero otherwise.

    The result is duplicate-free exactly when y is the unit or the letter
    x_i is the maximum of x.
    """
    if isinstance(x, _PerZero) or isinstance(y, _PerZero):
        return PER_ZERO
    if not is_twisted_permutation(x.letters) or not is_twisted_permutation(y.letters):
        raise NotAMemberError("operands must be duplicate-free words on 0..n-1")
    if not 1 <= i <= len(x):
        raise IndexError(f"position {i} not in 1..{len(x)}")
    if len(y) > 1 and x.letters[i - 1] != max(x.letters):
        return PER_ZERO
    from ..words import substitute

    return substitute(x, i, y)
