"""Suffix arrays, LCP arrays, the corpus-wide suffix order, and suffix trees.

Every document is conceptually terminated by a unique end marker. All
markers compare below every text byte, and the marker of a later
document compares above the marker of an earlier one. Consequently all
suffixes of a corpus are pairwise distinct, a suffix that is a proper
prefix of another sorts first, and equal text suffixes sort by
document id. Nothing here ever materializes a marker byte in document
text; markers exist only inside the integer work sequences.
"""

from __future__ import annotations

from .corpus import Corpus
from .errors import EmptyDocument


def sort_suffix_starts(seq: list[int]) -> list[int]:
    """0-based start offsets of all suffixes of seq, in ascending suffix order.

    Prefix doubling: O(L log L) rounds of built-in sorting over composite
    integer keys. Works for any integer alphabet.
    """
    n = len(seq)
    if n == 0:
        return []
    order = sorted(range(n), key=seq.__getitem__)
    rank = [0] * n
    r = 0
    for idx in range(1, n):
        if seq[order[idx]] != seq[order[idx - 1]]:
            r += 1
        rank[order[idx]] = r
    k = 1
    base = n + 1
    while r + 1 < n:
        keys = [0] * n
        for i in range(n):
            nxt = rank[i + k] + 1 if i + k < n else 0
            keys[i] = rank[i] * base + nxt
        order.sort(key=keys.__getitem__)
        r = 0
        rank[order[0]] = 0
        for idx in range(1, n):
            if keys[order[idx]] != keys[order[idx - 1]]:
                r += 1
            rank[order[idx]] = r
        k <<= 1
    return order


def lcp_from_sorted(seq: list[int], order: list[int]) -> list[int]:
    """Kasai: lcp[r] = common prefix length of the suffixes ranked r-1 and r."""
    n = len(order)
    rank_of = [0] * n
    for r, p in enumerate(order):
        rank_of[p] = r
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = rank_of[p]
        if r > 0:
            q = order[r - 1]
            while p + h < n and q + h < n and seq[p + h] == seq[q + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


class SuffixArray:
    """Suffix ranks of a single text, 1-based on both axes.

    pos_of[r-1] is the start position of the rank-r suffix; rank_of[p-1]
    is the rank of the suffix starting at position p.
    """

    __slots__ = ("pos_of", "rank_of")

    def __init__(self, pos_of: list[int], rank_of: list[int]):
        self.pos_of = pos_of
        self.rank_of = rank_of

    def __len__(self) -> int:
        return len(self.pos_of)

    def pos(self, r: int) -> int:
        return self.pos_of[r - 1]

    def rank(self, p: int) -> int:
        return self.rank_of[p - 1]


class LcpArray:
    """Adjacent-suffix common prefix lengths; at(1) is 0 by convention."""

    __slots__ = ("values",)

    def __init__(self, values: list[int]):
        self.values = values

    def __len__(self) -> int:
        return len(self.values)

    def at(self, r: int) -> int:
        return self.values[r - 1]


def build_suffix_array(text) -> SuffixArray:
    data = bytes(text)
    if not data:
        raise EmptyDocument("cannot build a suffix array of an empty text")
    seq = list(data)
    seq.append(0)
    order = sort_suffix_starts(seq)
    # order[0] is the end-marker suffix; drop it
    pos_of = [p + 1 for p in order[1:]]
    rank_of = [0] * len(data)
    for r0, p in enumerate(pos_of):
        rank_of[p - 1] = r0 + 1
    return SuffixArray(pos_of, rank_of)


def build_lcp_array(text, sa: SuffixArray) -> LcpArray:
    data = bytes(text)
    seq = list(data)
    seq.append(0)
    order = [len(data)] + [p - 1 for p in sa.pos_of]
    vals = lcp_from_sorted(seq, order)[1:]
    return LcpArray(vals)


class GsaIndex:
    """Corpus-wide suffix order with per-rank document ids and LCP values.

    Ranks run 1..n over all text suffixes of all documents. docs[r-1]
    and poss[r-1] identify the rank-r suffix; lcp[r-1] is its common
    prefix length with the rank-(r-1) suffix (0 at rank 1).
    """

    __slots__ = ("n", "docs", "poss", "lcp", "doc_lengths", "_ranks", "_lcp_rmq")

    def __init__(self, docs, poss, lcp, doc_lengths, ranks):
        self.n = len(docs)
        self.docs = docs
        self.poss = poss
        self.lcp = lcp
        self.doc_lengths = doc_lengths
        self._ranks = ranks
        self._lcp_rmq = None

    def suffix(self, r: int) -> tuple[int, int]:
        return self.docs[r - 1], self.poss[r - 1]

    def doc_at(self, r: int) -> int:
        return self.docs[r - 1]

    def pos_at(self, r: int) -> int:
        return self.poss[r - 1]

    def lcp_at(self, r: int) -> int:
        return self.lcp[r - 1]

    def rank_of(self, doc: int, pos: int) -> int:
        return self._ranks[doc - 1][pos - 1]

    def suffix_length(self, r: int) -> int:
        d, p = self.docs[r - 1], self.poss[r - 1]
        return self.doc_lengths[d - 1] - p + 1


def build_gsa(corpus: Corpus) -> GsaIndex:
    m = len(corpus)
    if m == 0:
        raise EmptyDocument("corpus holds no documents")
    seq: list[int] = []
    owner: list[int] = []
    offs: list[int] = []
    lengths: list[int] = []
    for d in corpus.document_ids():
        text = corpus.text(d)
        offs.append(len(seq))
        lengths.append(len(text))
        seq.extend(b + m for b in text)
        owner.extend([d] * len(text))
        seq.append(d)  # end marker of document d: value d, below every shifted byte
        owner.append(0)
    order = sort_suffix_starts(seq)
    full_lcp = lcp_from_sorted(seq, order)
    # the m smallest suffixes start at the markers themselves
    docs: list[int] = []
    poss: list[int] = []
    lcp: list[int] = []
    for idx in range(m, len(order)):
        g = order[idx]
        d = owner[g]
        docs.append(d)
        poss.append(g - offs[d - 1] + 1)
        lcp.append(full_lcp[idx])
    if lcp:
        lcp[0] = 0  # predecessor was a marker suffix; shared prefix is empty
    ranks = [[0] * lengths[d] for d in range(m)]
    for r0, (d, p) in enumerate(zip(docs, poss)):
        ranks[d - 1][p - 1] = r0 + 1
    return GsaIndex(docs, poss, lcp, lengths, ranks)


class SuffixTree:
    """Compacted suffix tree over one suffix ordering.

    Node 0 is the root. depth[v] is the string depth (leaf depths count
    the end marker, so depth strictly increases from root to leaf).
    Leaves carry 1-based left-to-right ranks matching the suffix order
    they were built from; left/right/count give each node's leaf-rank
    interval and its size.
    """

    __slots__ = (
        "parent",
        "depth",
        "children",
        "left",
        "right",
        "count",
        "leaf_rank",
        "leaf_of_rank",
    )

    def __init__(self, parent, depth, children, left, right, count, leaf_rank, leaf_of_rank):
        self.parent = parent
        self.depth = depth
        self.children = children
        self.left = left
        self.right = right
        self.count = count
        self.leaf_rank = leaf_rank
        self.leaf_of_rank = leaf_of_rank

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def string_depth(self, v: int) -> int:
        return self.depth[v]

    def leaf_count(self, v: int) -> int:
        return self.count[v]

    def leaf_range(self, v: int) -> tuple[int, int]:
        return self.left[v], self.right[v]


def _tree_from_lcp(lcp_values: list[int], leaf_depths: list[int]) -> SuffixTree:
    """Left-to-right interval stacking over ranks; O(L) nodes, O(L) time."""
    parent = [-1]
    depth = [0]
    children: list[list[int]] = [[]]
    leaf_rank = [0]

    def new_node(par: int, dep: int, rank: int) -> int:
        parent.append(par)
        depth.append(dep)
        children.append([])
        leaf_rank.append(rank)
        return len(parent) - 1

    stack = [0]
    L = len(leaf_depths)
    for r0 in range(L):
        cut = lcp_values[r0]  # shared depth with the previous leaf (0 at r0 == 0)
        last = -1
        while depth[stack[-1]] > cut:
            last = stack.pop()
        top = stack[-1]
        if depth[top] == cut:
            attach = top
        else:
            # split point strictly between top and the popped child
            mid = new_node(top, cut, 0)
            children[top][-1] = mid
            parent[last] = mid
            children[mid].append(last)
            stack.append(mid)
            attach = mid
        leaf = new_node(attach, leaf_depths[r0], r0 + 1)
        children[attach].append(leaf)
        stack.append(leaf)

    n = len(parent)
    left = [0] * n
    right = [0] * n
    count = [0] * n
    # children precede parents in reversed preorder
    pre = []
    st = [0]
    while st:
        v = st.pop()
        pre.append(v)
        st.extend(children[v])
    for v in reversed(pre):
        if not children[v]:
            left[v] = right[v] = leaf_rank[v]
            count[v] = 1
        else:
            left[v] = left[children[v][0]]
            right[v] = right[children[v][-1]]
            count[v] = sum(count[c] for c in children[v])
    leaf_of_rank = [0] * L
    for v in range(n):
        if not children[v]:
            leaf_of_rank[leaf_rank[v] - 1] = v
    return SuffixTree(parent, depth, children, left, right, count, leaf_rank, leaf_of_rank)


def build_suffix_tree(sa: SuffixArray, lcp: LcpArray) -> SuffixTree:
    """Suffix tree of one document from its suffix and LCP arrays."""
    L = len(sa)
    leaf_depths = [L - p + 2 for p in sa.pos_of]  # remaining text plus end marker
    return _tree_from_lcp(lcp.values, leaf_depths)


def build_generalized_suffix_tree(gsa: GsaIndex) -> SuffixTree:
    """Suffix tree over all corpus suffixes in generalized rank order."""
    leaf_depths = [
        gsa.doc_lengths[d - 1] - p + 2 for d, p in zip(gsa.docs, gsa.poss)
    ]
    return _tree_from_lcp(gsa.lcp, leaf_depths)
