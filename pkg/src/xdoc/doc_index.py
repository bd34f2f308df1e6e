"""Document-level queries: which documents contain a pattern, and how many.

Built on the corpus-wide suffix order. The locus of a pattern is found
by a weighted-ancestor query on the generalized suffix tree, giving a
rank interval [l..r]. Inside it, a document's first appearance is a
rank t whose chain value c[t] (previous rank of the same document)
falls before l; listing recurses over range minima of c, counting uses
a rank-space dominance counter so the document set is never built.
"""

from __future__ import annotations

from .corpus import Corpus, SubstringRef
from .errors import UnknownDocument
from .rmq import RangeMinQuery
from .suffixes import GsaIndex, build_generalized_suffix_tree, build_gsa
from .wla import WlaStructure, build_wla


def build_chain_array(docs: list[int]) -> list[int]:
    """chain[r-1] = largest rank below r with the same document id, else 0."""
    last: dict[int, int] = {}
    out = []
    for idx, d in enumerate(docs):
        out.append(last.get(d, 0))
        last[d] = idx + 1
    return out


class _WNode:
    __slots__ = ("lo", "hi", "zeros", "left", "right")

    def __init__(self, lo, hi, zeros, left, right):
        self.lo = lo
        self.hi = hi
        self.zeros = zeros
        self.left = left
        self.right = right


class WaveletTree:
    """Bit-partitioned rank-space counter over a fixed integer array.

    count_less(a, b, x) returns how many of values[a:b] are < x, in
    O(log U) where U is the value range. Space O(n log U).
    """

    __slots__ = ("_root", "_n")

    def __init__(self, values: list[int]):
        self._n = len(values)
        lo = min(values, default=0)
        hi = max(values, default=0)
        self._root = self._build(values, lo, hi)

    def _build(self, vals, lo, hi):
        if lo == hi:
            return _WNode(lo, hi, None, None, None)
        mid = (lo + hi) // 2
        zeros = [0] * (len(vals) + 1)
        lows = []
        highs = []
        z = 0
        for i, v in enumerate(vals):
            if v <= mid:
                z += 1
                lows.append(v)
            else:
                highs.append(v)
            zeros[i + 1] = z
        left = self._build(lows, lo, mid) if lows else None
        right = self._build(highs, mid + 1, hi) if highs else None
        return _WNode(lo, hi, zeros, left, right)

    def count_less(self, a: int, b: int, x: int) -> int:
        """Values strictly below x among positions [a, b), 0-based."""
        node = self._root
        total = 0
        while node is not None and a < b:
            if x <= node.lo:
                return total
            if x > node.hi:
                return total + (b - a)
            za = node.zeros[a]
            zb = node.zeros[b]
            if x <= (node.lo + node.hi) // 2 + 1:
                node = node.left
                a, b = za, zb
            else:
                total += zb - za
                node = node.right
                a, b = a - za, b - zb
        return total


class DocIndex:
    """Document-listing and document-counting queries over a frozen corpus."""

    __slots__ = ("corpus", "gsa", "gst", "gst_wla", "chain", "chain_rmq", "counter")

    def __init__(self, corpus, gsa, gst, gst_wla, chain, chain_rmq, counter):
        self.corpus = corpus
        self.gsa = gsa
        self.gst = gst
        self.gst_wla = gst_wla
        self.chain = chain
        self.chain_rmq = chain_rmq
        self.counter = counter

    @classmethod
    def build(cls, corpus: Corpus, gsa: GsaIndex | None = None) -> "DocIndex":
        if gsa is None:
            gsa = build_gsa(corpus)
        gst = build_generalized_suffix_tree(gsa)
        gst_wla = build_wla(gst)
        chain = build_chain_array(gsa.docs)
        return cls(corpus, gsa, gst, gst_wla, chain, RangeMinQuery(chain), WaveletTree(chain))

    def locus_interval(self, ref: SubstringRef) -> tuple[int, int]:
        """Rank interval of all corpus suffixes starting with the pattern."""
        self.corpus.check_ref(ref)
        r = self.gsa.rank_of(ref.doc, ref.i)
        v = self.gst.leaf_of_rank[r - 1]
        u = self.gst_wla.query(v, ref.length)
        return self.gst.left[u], self.gst.right[u]

    def list_documents(self, ref: SubstringRef) -> set[int]:
        """Ids of all documents containing the pattern; never empty."""
        l, r = self.locus_interval(ref)
        chain = self.chain
        docs = self.gsa.docs
        rmq = self.chain_rmq
        out: set[int] = set()
        stack = [(l, r)]
        while stack:
            lo, hi = stack.pop()
            if lo > hi:
                continue
            p = rmq.argmin(lo, hi)
            if chain[p - 1] >= l:
                continue
            out.add(docs[p - 1])
            stack.append((p + 1, hi))
            stack.append((lo, p - 1))
        return out

    def count_documents(self, ref: SubstringRef) -> int:
        """|list_documents| without building the set: ranks t in [l..r]
        whose chain value falls before l are exactly the first
        appearances, one per containing document."""
        l, r = self.locus_interval(ref)
        return self.counter.count_less(l - 1, r, l)
