"""Brute-force reference answers for every query type.

These materialize the pattern and scan, which the indexed paths never
do; tests compare the two routes.
"""

from __future__ import annotations

from .corpus import Corpus, SubstringRef


def naive_report(corpus: Corpus, ref: SubstringRef, ell: int) -> set[int]:
    """All 1-based start positions of the pattern in document ell (overlaps count)."""
    corpus.check_ref(ref)
    pattern = corpus.substring(ref)
    text = corpus.text(ell)
    out: set[int] = set()
    start = text.find(pattern)
    while start != -1:
        out.add(start + 1)
        start = text.find(pattern, start + 1)
    return out


def naive_count(corpus: Corpus, ref: SubstringRef, ell: int) -> int:
    return len(naive_report(corpus, ref, ell))


def naive_docs(corpus: Corpus, ref: SubstringRef) -> set[int]:
    """Ids of all documents containing the pattern at least once."""
    corpus.check_ref(ref)
    pattern = corpus.substring(ref)
    return {d for d in corpus.document_ids() if pattern in corpus.text(d)}
