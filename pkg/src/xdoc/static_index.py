"""Occurrence queries over a frozen corpus.

Patterns are named by coordinates (doc, i, j) into the corpus itself
and are never materialized. A query first locates a witness occurrence
in the target document by comparing the pattern's suffix against the
target document's nearest suffixes in the corpus-wide order; counting
and reporting then run entirely inside the target document's own
structures.

The index is immutable once built: any number of threads may query it
concurrently.
"""

from __future__ import annotations

from bisect import bisect_left

from .corpus import Corpus, SubstringRef
from .errors import RankOutOfRange, UnknownDocument
from .rmq import lcp_between
from .suffixes import (
    GsaIndex,
    LcpArray,
    SuffixArray,
    build_gsa,
    build_lcp_array,
    build_suffix_array,
    build_suffix_tree,
)
from .wla import WlaStructure, build_wla


class DocKit:
    """Per-document query kit: suffix array, LCP array, suffix tree with
    leaf counts, and the tree's weighted-ancestor index."""

    __slots__ = ("sa", "lcp", "tree", "wla", "leaf_of_pos")

    def __init__(self, sa: SuffixArray, lcp: LcpArray, tree, wla: WlaStructure, leaf_of_pos):
        self.sa = sa
        self.lcp = lcp
        self.tree = tree
        self.wla = wla
        self.leaf_of_pos = leaf_of_pos


def build_doc_kit(text) -> DocKit:
    sa = build_suffix_array(text)
    lcp = build_lcp_array(text, sa)
    tree = build_suffix_tree(sa, lcp)
    w = build_wla(tree)
    leaf_of_pos = [0] * len(sa)
    for r0, node in enumerate(tree.leaf_of_rank):
        leaf_of_pos[sa.pos_of[r0] - 1] = node
    return DocKit(sa, lcp, tree, w, leaf_of_pos)


def count_from_witness(kit: DocKit, p: int, length: int) -> int:
    """Occurrences of the length-`length` substring starting at witness p."""
    v = kit.leaf_of_pos[p - 1]
    u = kit.wla.query(v, length)
    return kit.tree.count[u]


def report_from_witness(kit: DocKit, p: int, length: int) -> set[int]:
    """All start positions of that substring: walk outward from the witness
    rank while adjacent suffixes keep sharing at least `length` symbols."""
    sa = kit.sa
    vals = kit.lcp.values
    r = sa.rank_of[p - 1]
    out = {p}
    t = r
    while t > 1 and vals[t - 1] >= length:
        out.add(sa.pos_of[t - 2])
        t -= 1
    t = r
    L = len(sa.pos_of)
    while t < L and vals[t] >= length:
        out.add(sa.pos_of[t])
        t += 1
    return out


class StaticIndex:
    """Frozen-corpus index for cross-document substring queries."""

    __slots__ = ("corpus", "gsa", "kits", "doc_ranks")

    def __init__(self, corpus: Corpus, gsa: GsaIndex, kits: list[DocKit], doc_ranks):
        self.corpus = corpus
        self.gsa = gsa
        self.kits = kits
        self.doc_ranks = doc_ranks

    @classmethod
    def build(cls, corpus: Corpus) -> "StaticIndex":
        gsa = build_gsa(corpus)
        kits = [build_doc_kit(corpus.text(d)) for d in corpus.document_ids()]
        doc_ranks: list[list[int]] = [[] for _ in range(len(corpus))]
        for r0, d in enumerate(gsa.docs):
            doc_ranks[d - 1].append(r0 + 1)
        return cls(corpus, gsa, kits, doc_ranks)

    def _check_doc(self, ell: int) -> None:
        if not isinstance(ell, int) or not 1 <= ell <= len(self.corpus):
            raise UnknownDocument(f"no document with id {ell!r}")

    def doc_rank(self, ell: int, r: int) -> int:
        """How many suffixes of document ell rank strictly below r."""
        self._check_doc(ell)
        if not 1 <= r <= self.gsa.n + 1:
            raise RankOutOfRange(f"rank {r} outside 1..{self.gsa.n + 1}")
        return bisect_left(self.doc_ranks[ell - 1], r)

    def doc_select(self, ell: int, i: int) -> int | None:
        """Global rank of document ell's i-th smallest suffix, or None."""
        self._check_doc(ell)
        if i < 1:
            raise RankOutOfRange(f"selection index {i} must be positive")
        ranks = self.doc_ranks[ell - 1]
        if i > len(ranks):
            return None
        return ranks[i - 1]

    def find_witness(self, ref: SubstringRef, ell: int) -> int | None:
        """One start position of the pattern in document ell, or None.

        The pattern occurs in ell iff one of the two nearest ell-suffixes
        around the pattern's own suffix shares at least the pattern's
        length with it. When both do, the preceding one is returned.
        """
        self.corpus.check_ref(ref)
        self._check_doc(ell)
        need = ref.length
        gsa = self.gsa
        r = gsa.rank_of(ref.doc, ref.i)
        ranks = self.doc_ranks[ell - 1]
        c = bisect_left(ranks, r)
        if c > 0:
            r1 = ranks[c - 1]
            if lcp_between(gsa, r1, r) >= need:
                return gsa.pos_at(r1)
        if c < len(ranks):
            r2 = ranks[c]  # equals r itself when ell owns the pattern
            if lcp_between(gsa, r, r2) >= need:
                return gsa.pos_at(r2)
        return None

    def count_occurrences(self, ref: SubstringRef, ell: int) -> int:
        p = self.find_witness(ref, ell)
        if p is None:
            return 0
        return count_from_witness(self.kits[ell - 1], p, ref.length)

    def report_occurrences(self, ref: SubstringRef, ell: int) -> set[int]:
        p = self.find_witness(ref, ell)
        if p is None:
            return set()
        return report_from_witness(self.kits[ell - 1], p, ref.length)
