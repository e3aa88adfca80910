"""Free-operad terms over decorated generators and finite presentation checks.

A term is a planar tree whose internal nodes carry generator symbols and
whose leaves are input slots; its arity is the leaf count.  Relations are
pairs of terms of equal arity whose leaves pair up left to right.  The
congruence generated by a relation set is computed by enumerating every term
of an arity, rewriting at every subterm in both directions, and joining the
results with a union-find; the class count can then be compared with the
dimensions of the operad the generators realize.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .monoids import BOOLEAN, Monoid, NATURALS, cyclic
from .words import PositionError, Word, substitute, word

__all__ = [
    "Term",
    "LEAF",
    "node",
    "GeneratorSymbol",
    "Relation",
    "RelationCheck",
    "SizeError",
    "term_arity",
    "term_to_text",
    "graft_term",
    "parse_term",
    "parse_relations",
    "eval_term",
    "enumerate_terms",
    "count_terms",
    "congruence_class_count",
    "PresentationPreset",
    "PRESENTATIONS",
]


class SizeError(ValueError):
    """A term enumeration would exceed the configured guard."""


@dataclass(frozen=True)
class Term:
    """A free term: a leaf (empty symbol) or a symbol applied to subterms."""

    sym: str
    args: tuple["Term", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.sym == ""

    def __str__(self) -> str:
        return term_to_text(self)


LEAF = Term("")


def node(sym: str, *args: Term) -> Term:
    return Term(sym, tuple(args))


def term_arity(t: Term) -> int:
    if t.is_leaf:
        return 1
    return sum(term_arity(a) for a in t.args)


def graft_term(t: Term, i: int, s: Term) -> Term:
    """Substitute s for the i-th leaf of t, counting leaves left to right."""
    total = term_arity(t)
    if not 1 <= i <= total:
        raise PositionError(f"position {i} not in 1..{total}")
    seen = 0

    def go(node: Term) -> Term:
        nonlocal seen
        if node.is_leaf:
            seen += 1
            return s if seen == i else node
        args = tuple(go(a) if seen < i else a for a in node.args)
        return Term(node.sym, args)

    return go(t)


def term_to_text(t: Term) -> str:
    if t.is_leaf:
        return "."
    return f"{t.sym}({','.join(term_to_text(a) for a in t.args)})"


def parse_term(text: str) -> Term:
    term, rest = _parse_term(text.replace(" ", ""))
    if rest:
        raise ValueError(f"trailing characters {rest!r}")
    return term


def _parse_term(text: str) -> tuple[Term, str]:
    if text.startswith("."):
        return LEAF, text[1:]
    head = ""
    while text and text[0] not in ".,()":
        head, text = head + text[0], text[1:]
    if not head or not text.startswith("("):
        raise ValueError(f"expected a symbol application at {text!r}")
    args = []
    rest = text[1:]
    while True:
        arg, rest = _parse_term(rest)
        args.append(arg)
        if rest.startswith(","):
            rest = rest[1:]
            continue
        if rest.startswith(")"):
            return Term(head, tuple(args)), rest[1:]
        raise ValueError(f"expected ',' or ')' at {rest!r}")


@dataclass(frozen=True)
class GeneratorSymbol:
    """A named generator together with its realization in the target operad."""

    name: str
    image: Word

    @property
    def arity(self) -> int:
        return len(self.image)


@dataclass(frozen=True)
class Relation:
    left: Term
    right: Term

    def __post_init__(self) -> None:
        if term_arity(self.left) != term_arity(self.right):
            raise ValueError(
                f"relation sides have arities {term_arity(self.left)} "
                f"and {term_arity(self.right)}"
            )

    def __str__(self) -> str:
        return f"{term_to_text(self.left)} == {term_to_text(self.right)}"


def parse_relations(text: str) -> tuple[Relation, ...]:
    """One relation per line, `left == right`; blank lines and # comments skip."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, sep, rhs = line.partition("==")
        if not sep:
            raise ValueError(f"missing '==' in {line!r}")
        out.append(Relation(parse_term(lhs), parse_term(rhs)))
    return tuple(out)


# ---------------------------------------------------------------------------
# evaluation and enumeration


def eval_term(
    t: Term, symbols: Mapping[str, GeneratorSymbol], monoid: Monoid | None = None
) -> Word:
    """Interpret a term in the operad the symbols realize.

    Children are substituted into the symbol's image right to left so that
    earlier positions stay valid.
    """
    monoids = {s.image.monoid for s in symbols.values()}
    if monoid is not None:
        monoids.add(monoid)
    if len(monoids) != 1:
        raise ValueError("symbols must realize generators over a single monoid")
    m = monoids.pop()

    def go(t: Term) -> Word:
        if t.is_leaf:
            return Word(m, (m.unit,))
        sym = symbols[t.sym]
        if len(t.args) != sym.arity:
            raise ValueError(
                f"{t.sym} has arity {sym.arity}, got {len(t.args)} children"
            )
        acc = sym.image
        for j in range(len(t.args), 0, -1):
            acc = substitute(acc, j, go(t.args[j - 1]))
        return acc

    return go(t)


def count_terms(symbols: Mapping[str, GeneratorSymbol], arity: int) -> int:
    """Number of planar terms of the arity, by dynamic programming."""
    counts = [0] * (arity + 1)
    counts[1] = 1
    for n in range(2, arity + 1):
        total = 0
        for sym in symbols.values():
            total += _compositions_product(counts, n, sym.arity)
        counts[n] = total
    return counts[arity]


def _compositions_product(counts: list[int], n: int, k: int) -> int:
    # sum over compositions of n into k positive parts of the product of counts
    if k == 1:
        return counts[n] if n < len(counts) else 0
    total = 0
    for first in range(1, n - k + 2):
        total += counts[first] * _compositions_product(counts, n - first, k - 1)
    return total


def enumerate_terms(
    symbols: Mapping[str, GeneratorSymbol], arity: int
) -> list[Term]:
    """All planar terms of the arity over the symbols, in a stable order."""
    by_arity: list[list[Term]] = [[] for _ in range(arity + 1)]
    if arity >= 1:
        by_arity[1] = [LEAF]
    ordered = sorted(symbols.values(), key=lambda s: s.name)
    for n in range(2, arity + 1):
        bucket = by_arity[n]
        for sym in ordered:
            for parts in _compositions(n, sym.arity):
                for args in _product([by_arity[p] for p in parts]):
                    bucket.append(Term(sym.name, args))
    return by_arity[arity]


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _product(pools: list[list[Term]]) -> Iterator[tuple[Term, ...]]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _product(pools[1:]):
            yield (head,) + tail


# ---------------------------------------------------------------------------
# relation verification and congruence counting


@dataclass(frozen=True)
class RelationCheck:
    relation: Relation
    left_word: Word
    right_word: Word

    @property
    def ok(self) -> bool:
        return self.left_word == self.right_word


def verify_relations(
    relations: tuple[Relation, ...], symbols: Mapping[str, GeneratorSymbol]
) -> list[RelationCheck]:
    """Evaluate both sides of every relation in the target operad."""
    return [
        RelationCheck(rel, eval_term(rel.left, symbols), eval_term(rel.right, symbols))
        for rel in relations
    ]


def subterm_paths(t: Term) -> Iterator[tuple[int, ...]]:
    yield ()
    for idx, arg in enumerate(t.args):
        for path in subterm_paths(arg):
            yield (idx,) + path


def subterm_at(t: Term, path: tuple[int, ...]) -> Term:
    for idx in path:
        t = t.args[idx]
    return t


def replace_at(t: Term, path: tuple[int, ...], repl: Term) -> Term:
    if not path:
        return repl
    idx = path[0]
    args = list(t.args)
    args[idx] = replace_at(args[idx], path[1:], repl)
    return Term(t.sym, tuple(args))


def match_slots(pattern: Term, subject: Term) -> list[Term] | None:
    """Match the node structure of `pattern` on top of `subject`; leaves of the
    pattern capture the subterms below them, left to right."""
    slots: list[Term] = []

    def go(p: Term, s: Term) -> bool:
        if p.is_leaf:
            slots.append(s)
            return True
        if s.is_leaf or s.sym != p.sym:
            return False
        return all(go(pa, sa) for pa, sa in zip(p.args, s.args))

    return slots if go(pattern, subject) else None


def instantiate(pattern: Term, slots: list[Term]) -> Term:
    filled = iter(slots)

    def go(p: Term) -> Term:
        if p.is_leaf:
            return next(filled)
        return Term(p.sym, tuple(go(a) for a in p.args))

    return go(pattern)


def rewrites(t: Term, relations: tuple[Relation, ...]) -> Iterator[Term]:
    """Every term reachable from t by one relation applied at one subterm,
    in either direction."""
    for path in subterm_paths(t):
        sub = subterm_at(t, path)
        for rel in relations:
            for pat, out in ((rel.left, rel.right), (rel.right, rel.left)):
                slots = match_slots(pat, sub)
                if slots is not None:
                    yield replace_at(t, path, instantiate(out, slots))


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def congruence_class_count(
    symbols: Mapping[str, GeneratorSymbol],
    relations: tuple[Relation, ...],
    arity: int,
    max_terms: int = 500_000,
) -> int:
    """Number of classes of arity-`arity` terms under the congruence the
    relations generate.

    Every single-step rewrite lands on another enumerated term, so the
    congruence closure is exactly the connected components of the rewrite
    graph; no orientation or confluence assumption is needed.
    """
    total = count_terms(symbols, arity)
    if total > max_terms:
        raise SizeError(f"{total} terms at arity {arity} exceed the {max_terms} guard")
    terms = enumerate_terms(symbols, arity)
    index = {t: i for i, t in enumerate(terms)}
    uf = _UnionFind(len(terms))
    for t, ti in index.items():
        for neighbor in rewrites(t, relations):
            uf.union(ti, index[neighbor])
    return sum(1 for i in range(len(terms)) if uf.find(i) == i)


# ---------------------------------------------------------------------------
# shipped presentations


@dataclass(frozen=True)
class PresentationPreset:
    """Generators with realizations, their relations, and whether the class
    counts are asserted to match the operad's dimensions (as opposed to being
    reported only)."""

    name: str
    symbols: Mapping[str, GeneratorSymbol]
    relations_text: str
    asserted_complete: bool
    family: str

    @property
    def relations(self) -> tuple[Relation, ...]:
        return parse_relations(self.relations_text)


def _symbols(m: Monoid, **images: str) -> dict[str, GeneratorSymbol]:
    return {name: GeneratorSymbol(name, word(m, text)) for name, text in images.items()}


PRESENTATIONS: dict[str, PresentationPreset] = {
    "prt": PresentationPreset(
        "prt",
        _symbols(NATURALS, a="01"),
        "",
        asserted_complete=True,
        family="prt",
    ),
    "fcat1": PresentationPreset(
        "fcat1",
        _symbols(NATURALS, a="00", b="01"),
        """
        a(a(.,.),.) == a(.,a(.,.))
        b(a(.,.),.) == a(.,b(.,.))
        b(b(.,.),.) == b(.,a(.,.))
        """,
        asserted_complete=True,
        family="fcat1",
    ),
    "comp": PresentationPreset(
        "comp",
        _symbols(cyclic(2), a="00", b="01"),
        """
        a(a(.,.),.) == a(.,a(.,.))
        b(a(.,.),.) == a(.,b(.,.))
        b(b(.,.),.) == b(.,a(.,.))
        a(b(.,.),.) == b(.,b(.,.))
        """,
        asserted_complete=True,
        family="comp",
    ),
    "schr": PresentationPreset(
        "schr",
        _symbols(NATURALS, a="00", b="01", c="10"),
        """
        a(a(.,.),.) == a(.,a(.,.))
        b(c(.,.),.) == c(.,b(.,.))
        a(b(.,.),.) == a(.,c(.,.))
        b(a(.,.),.) == a(.,b(.,.))
        a(c(.,.),.) == c(.,a(.,.))
        b(b(.,.),.) == b(.,a(.,.))
        c(a(.,.),.) == c(.,c(.,.))
        """,
        asserted_complete=False,
        family="schr",
    ),
    "motz": PresentationPreset(
        "motz",
        _symbols(NATURALS, a="00", b="010"),
        """
        a(a(.,.),.) == a(.,a(.,.))
        b(a(.,.),.,.) == a(.,b(.,.,.))
        a(b(.,.,.),.) == b(.,.,a(.,.))
        b(b(.,.,.),.,.) == b(.,.,b(.,.,.))
        """,
        asserted_complete=False,
        family="motz",
    ),
    "dias": PresentationPreset(
        "dias",
        _symbols(BOOLEAN, l="10", r="01"),
        """
        l(l(.,.),.) == l(.,l(.,.))
        l(.,l(.,.)) == l(.,r(.,.))
        r(.,r(.,.)) == r(r(.,.),.)
        r(r(.,.),.) == r(l(.,.),.)
        l(r(.,.),.) == r(.,l(.,.))
        """,
        asserted_complete=True,
        family="dias",
    ),
}
