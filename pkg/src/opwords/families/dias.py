"""The two binary one-sided products realized on {0, 1}-words.

The left product keeps its first argument (image 10 under multiplication),
the right product keeps its second (image 01).  Terms over the two evaluate
to words with exactly one 1, and evaluation commutes with substitution.
"""
from __future__ import annotations

from ..presentations import PRESENTATIONS, Term, eval_term
from ..words import Word

DIAS_SYMBOLS = PRESENTATIONS["dias"].symbols
DIAS_RELATIONS = PRESENTATIONS["dias"].relations


def dias_encode(term: Term) -> Word:
    """Evaluate a term over the symbols l (image 10) and r (image 01)."""
    return eval_term(term, DIAS_SYMBOLS)
