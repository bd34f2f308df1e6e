"""Online generalized suffix tree (Ukkonen) over an integer sequence.

Documents are appended one at a time; each contributes its text bytes
(values 1..255) followed by a unique end marker (a negative value that
grows with document id, so markers sort below every byte and by
document id among themselves). The marker makes every pending suffix
explicit, so between documents the tree is true: one leaf per suffix
of text+marker, the bare-marker leaf included. Bare-marker leaves
carry position length+1 and cluster below all text suffixes.

Structural hooks fire at creation time, in creation order:
  on_internal(v, old_child)    edge subdivision inserted v above old_child
  on_leaf(u, parent, depth)    new leaf u; depth is parent's string depth now

Node ids are dense and increasing in creation order; node 0 is the root.
"""

from __future__ import annotations

_MARKER_BASE = -(1 << 40)


def marker_value(doc: int) -> int:
    return _MARKER_BASE + doc


class OnlineGst:
    __slots__ = (
        "data",
        "parent",
        "start",
        "end",
        "slink",
        "depth",
        "children",
        "leaf_doc",
        "leaf_pos",
        "on_internal",
        "on_leaf",
        "_anode",
        "_aedge",
        "_alen",
        "_remainder",
        "_open_leaves",
        "_doc_start",
    )

    def __init__(self):
        self.data: list[int] = []
        self.parent = [-1]
        self.start = [0]
        self.end = [0]
        self.slink = [0]
        self.depth = [0]
        self.children: list[dict] = [{}]
        self.leaf_doc = [0]
        self.leaf_pos = [0]
        self.on_internal = None
        self.on_leaf = None
        self._anode = 0
        self._aedge = 0
        self._alen = 0
        self._remainder = 0
        self._open_leaves: list[int] = []
        self._doc_start: list[int] = []

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def edge_length(self, v: int) -> int:
        e = self.end[v]
        if e < 0:
            e = len(self.data)
        return e - self.start[v]

    def add_document(self, doc: int, text: bytes) -> None:
        """Feed one whole document plus its end marker."""
        self._doc_start.append(len(self.data))
        for b in text:
            self._extend(b, doc)
        self._extend(marker_value(doc), doc)
        # the marker closed every pending suffix
        assert self._remainder == 0 and self._anode == 0 and self._alen == 0
        e = len(self.data)
        for leaf in self._open_leaves:
            self.end[leaf] = e
            g = self._doc_start[doc - 1] + self.leaf_pos[leaf] - 1
            self.depth[leaf] = e - g
        self._open_leaves.clear()

    def _new_node(self, par, start, end, doc, pos) -> int:
        self.parent.append(par)
        self.start.append(start)
        self.end.append(end)
        self.slink.append(0)
        self.depth.append(0)
        self.children.append({})
        self.leaf_doc.append(doc)
        self.leaf_pos.append(pos)
        return len(self.parent) - 1

    def _split(self, par: int, child: int, offset: int) -> int:
        """Insert an internal node `offset` symbols down the edge to child."""
        cs = self.start[child]
        v = self._new_node(par, cs, cs + offset, 0, 0)
        self.depth[v] = self.depth[par] + offset
        data = self.data
        self.children[par][data[cs]] = v
        self.start[child] = cs + offset
        self.parent[child] = v
        self.children[v][data[cs + offset]] = child
        if self.on_internal is not None:
            self.on_internal(v, child)
        return v

    def _new_leaf(self, par: int, edge_start: int, doc: int, g_suffix: int) -> int:
        pos = g_suffix - self._doc_start[doc - 1] + 1
        leaf = self._new_node(par, edge_start, -1, doc, pos)
        self.children[par][self.data[edge_start]] = leaf
        self._open_leaves.append(leaf)
        if self.on_leaf is not None:
            self.on_leaf(leaf, par, self.depth[par])
        return leaf

    def _extend(self, c: int, doc: int) -> None:
        data = self.data
        data.append(c)
        pos = len(data) - 1
        self._remainder += 1
        last_internal = 0
        children = self.children
        start = self.start
        while self._remainder:
            if self._alen == 0:
                self._aedge = pos
            anode = self._anode
            nxt = children[anode].get(data[self._aedge])
            if nxt is not None:
                elen = self.edge_length(nxt)
                if self._alen >= elen:
                    self._aedge += elen
                    self._alen -= elen
                    self._anode = nxt
                    continue
                if data[start[nxt] + self._alen] == c:
                    # suffix already present; markers never take this path
                    if last_internal and anode != 0:
                        self.slink[last_internal] = anode
                    self._alen += 1
                    break
                v = self._split(anode, nxt, self._alen)
                self._new_leaf(v, pos, doc, pos + 1 - self._remainder)
                if last_internal:
                    self.slink[last_internal] = v
                last_internal = v
            else:
                g = pos + 1 - self._remainder
                self._new_leaf(anode, pos, doc, g)
                if last_internal:
                    self.slink[last_internal] = anode
                    last_internal = 0
            self._remainder -= 1
            if self._anode == 0 and self._alen > 0:
                self._alen -= 1
                self._aedge = pos - self._remainder + 1
            elif self._anode != 0:
                self._anode = self.slink[self._anode]

    def sorted_children(self, v: int):
        """Children of v in edge order (markers sort below bytes)."""
        ch = self.children[v]
        return [ch[s] for s in sorted(ch)]
