"""Versioned binary index files: header ``XDOC1``, little-endian layout.

The file stores exactly what is expensive or ambiguous to recompute —
document bytes, the corpus-wide suffix order with its LCP values, and
each document's suffix array, LCP array, and suffix tree skeleton.
Derived lookup structures (rank inverses, children lists, sparse
tables, weighted-ancestor paths, document-query transforms) are
rebuilt deterministically on load. Identical input produces identical
bytes.
"""

from __future__ import annotations

import io
import struct

from .corpus import Corpus
from .errors import XdocError
from .static_index import DocKit, StaticIndex
from .suffixes import GsaIndex, LcpArray, SuffixArray, SuffixTree
from .wla import build_wla

MAGIC = b"XDOC1"
VERSION = 1

_U8 = struct.Struct("<B")
_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")


class IndexFormatError(XdocError):
    """The bytes do not form a readable index file."""


def _write_u8(f, v: int) -> None:
    f.write(_U8.pack(v))


def _write_u32(f, v: int) -> None:
    f.write(_U32.pack(v))


def _write_u64(f, v: int) -> None:
    f.write(_U64.pack(v))


def _write_u32s(f, values) -> None:
    f.write(struct.pack(f"<{len(values)}I", *values))


def _write_i32s(f, values) -> None:
    f.write(struct.pack(f"<{len(values)}i", *values))


class _Reader:
    """Cursor over the whole file in memory; every read is bounds-checked
    before any allocation, so corrupted length fields cannot balloon."""

    __slots__ = ("blob", "off")

    def __init__(self, blob: bytes):
        self.blob = blob
        self.off = 0

    def _advance(self, n: int) -> int:
        start = self.off
        end = start + n
        if end > len(self.blob):
            raise IndexFormatError("truncated index file")
        self.off = end
        return start

    def bytes(self, n: int) -> bytes:
        start = self._advance(n)
        return self.blob[start : start + n]

    def u8(self) -> int:
        return _U8.unpack_from(self.blob, self._advance(1))[0]

    def u32(self) -> int:
        return _U32.unpack_from(self.blob, self._advance(4))[0]

    def u64(self) -> int:
        return _U64.unpack_from(self.blob, self._advance(8))[0]

    def u32s(self, n: int) -> list[int]:
        return list(struct.unpack_from(f"<{n}I", self.blob, self._advance(4 * n)))

    def i32s(self, n: int) -> list[int]:
        return list(struct.unpack_from(f"<{n}i", self.blob, self._advance(4 * n)))

    def at_end(self) -> bool:
        return self.off == len(self.blob)


def _write_tree(f, tree: SuffixTree) -> None:
    nn = tree.n_nodes
    _write_u32(f, nn)
    _write_i32s(f, tree.parent)
    _write_u32s(f, tree.depth)
    _write_u32s(f, tree.left)
    _write_u32s(f, tree.right)
    _write_u32s(f, tree.count)


def _read_tree(r: _Reader, n_leaves: int) -> SuffixTree:
    nn = r.u32()
    parent = r.i32s(nn)
    depth = r.u32s(nn)
    left = r.u32s(nn)
    right = r.u32s(nn)
    count = r.u32s(nn)
    children: list[list[int]] = [[] for _ in range(nn)]
    for v in range(1, nn):
        p = parent[v]
        if not 0 <= p < nn or p == v:
            raise IndexFormatError("tree parent out of range")
        children[p].append(v)  # ids ascend left to right within a node
    leaf_rank = [0] * nn
    leaf_of_rank = [0] * n_leaves
    for v in range(nn):
        if not children[v]:
            rank = left[v]
            if right[v] != rank or not 1 <= rank <= n_leaves:
                raise IndexFormatError("leaf interval is not a single valid rank")
            leaf_rank[v] = rank
            leaf_of_rank[rank - 1] = v
    return SuffixTree(parent, depth, children, left, right, count, leaf_rank, leaf_of_rank)


def save_index(index: StaticIndex, path) -> None:
    """Write the frozen index; overwrites an existing file."""
    buf = io.BytesIO()
    buf.write(MAGIC)
    _write_u8(buf, VERSION)
    corpus = index.corpus
    m = len(corpus)
    _write_u32(buf, m)
    for d in corpus.document_ids():
        text = corpus.text(d)
        _write_u64(buf, len(text))
        buf.write(text)
    gsa = index.gsa
    _write_u32(buf, gsa.n)
    _write_u32s(buf, gsa.docs)
    _write_u32s(buf, gsa.poss)
    _write_u32s(buf, gsa.lcp)
    for d, kit in enumerate(index.kits, start=1):
        L = corpus.length(d)
        _write_u32(buf, L)
        _write_u32s(buf, kit.sa.pos_of)
        _write_u32s(buf, kit.lcp.values)
        _write_tree(buf, kit.tree)
    with open(path, "wb") as f:
        f.write(buf.getvalue())


def load_index(path) -> StaticIndex:
    """Read an index file back into a fully query-ready StaticIndex."""
    with open(path, "rb") as f:
        r = _Reader(f.read())
    if r.bytes(len(MAGIC)) != MAGIC:
        raise IndexFormatError("not an index file (bad magic)")
    version = r.u8()
    if version != VERSION:
        raise IndexFormatError(f"unsupported index version {version}")
    corpus = Corpus()
    m = r.u32()
    for _ in range(m):
        length = r.u64()
        data = r.bytes(length)
        try:
            corpus.add_document(data)
        except XdocError as exc:
            raise IndexFormatError(f"stored document rejected: {exc}") from None
    n = r.u32()
    docs = r.u32s(n)
    poss = r.u32s(n)
    lcp = r.u32s(n)
    lengths = [corpus.length(d) for d in corpus.document_ids()]
    if n != sum(lengths):
        raise IndexFormatError("suffix count does not match corpus size")
    ranks = [[0] * lengths[d] for d in range(m)]
    try:
        for r0, (d, p) in enumerate(zip(docs, poss)):
            ranks[d - 1][p - 1] = r0 + 1
    except IndexError:
        raise IndexFormatError("suffix coordinates out of range") from None
    gsa = GsaIndex(docs, poss, lcp, lengths, ranks)
    kits = []
    for d in corpus.document_ids():
        L = r.u32()
        if L != corpus.length(d):
            raise IndexFormatError("per-document section length mismatch")
        pos_of = r.u32s(L)
        rank_of = [0] * L
        try:
            for r0, p in enumerate(pos_of):
                rank_of[p - 1] = r0 + 1
        except IndexError:
            raise IndexFormatError("suffix position out of range") from None
        sa = SuffixArray(pos_of, rank_of)
        lcp_vals = r.u32s(L)
        tree = _read_tree(r, L)
        wla = build_wla(tree)
        leaf_of_pos = [0] * L
        for r0, node in enumerate(tree.leaf_of_rank):
            leaf_of_pos[pos_of[r0] - 1] = node
        kits.append(DocKit(sa, LcpArray(lcp_vals), tree, wla, leaf_of_pos))
    if not r.at_end():
        raise IndexFormatError("trailing bytes after index data")
    doc_ranks: list[list[int]] = [[] for _ in range(m)]
    for r0, d in enumerate(docs):
        doc_ranks[d - 1].append(r0 + 1)
    return StaticIndex(corpus, gsa, kits, doc_ranks)
