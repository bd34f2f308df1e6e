"""Weighted ancestor queries over suffix trees.

Nodes are weighted by string depth, which strictly increases from the
root down. wla(v, q) is the shallowest ancestor-or-self of v with
weight at least q, or None when even v is too light. The tree is cut
into heavy paths: a path is extended from a node to a child only while
the node's subtree holds at most twice as many nodes as the child's,
so each hop between paths at least halves the subtree and any
root-to-node walk crosses O(log n) paths. A query climbs the path
hierarchy to the topmost path whose head is heavy enough, then binary
searches inside a single path (weights along a path are strictly
increasing).
"""

from __future__ import annotations

from bisect import bisect_left

from .errors import NodeNotInTree
from .suffixes import SuffixTree


class WlaStructure:
    """Heavy-path decomposition of one suffix tree plus query state."""

    __slots__ = (
        "tree",
        "path_of",
        "offset_of",
        "path_nodes",
        "path_weights",
        "path_parent",
        "head_parent_offset",
    )

    def __init__(self, tree: SuffixTree):
        self.tree = tree
        n = tree.n_nodes
        children = tree.children
        size = [1] * n
        pre = []
        st = [0]
        while st:
            v = st.pop()
            pre.append(v)
            st.extend(children[v])
        for v in reversed(pre):
            for c in children[v]:
                size[v] += size[c]

        path_of = [-1] * n
        offset_of = [0] * n
        path_nodes: list[list[int]] = []
        path_weights: list[list[int]] = []
        path_parent: list[int] = []
        head_parent_offset: list[int] = []
        depth = tree.depth
        for v in pre:
            if path_of[v] != -1:
                continue
            pid = len(path_nodes)
            nodes: list[int] = []
            cur = v
            while True:
                path_of[cur] = pid
                offset_of[cur] = len(nodes)
                nodes.append(cur)
                ch = children[cur]
                if not ch:
                    break
                best = max(ch, key=size.__getitem__)
                if size[cur] <= 2 * size[best]:
                    cur = best
                else:
                    break
            path_nodes.append(nodes)
            path_weights.append([depth[x] for x in nodes])
            head = nodes[0]
            if head == 0:
                path_parent.append(-1)
                head_parent_offset.append(-1)
            else:
                par = tree.parent[head]
                path_parent.append(path_of[par])
                head_parent_offset.append(offset_of[par])

        self.path_of = path_of
        self.offset_of = offset_of
        self.path_nodes = path_nodes
        self.path_weights = path_weights
        self.path_parent = path_parent
        self.head_parent_offset = head_parent_offset

    def query(self, v: int, q: int) -> int | None:
        tree = self.tree
        if not isinstance(v, int) or not 0 <= v < tree.n_nodes:
            raise NodeNotInTree(f"node {v!r} is not in this tree")
        if q <= 0:
            return 0
        if tree.depth[v] < q:
            return None
        pid = self.path_of[v]
        if self.path_weights[pid][0] < q:
            # every strict ancestor path has an even lighter head; the
            # answer sits on v's own path, at or above v
            w = self.path_weights[pid]
            return self.path_nodes[pid][bisect_left(w, q)]
        # climb to the topmost ancestor path whose head weighs >= q
        while True:
            par = self.path_parent[pid]
            if par == -1 or self.path_weights[par][0] < q:
                break
            pid = par
        par = self.path_parent[pid]
        # the root path's head weighs 0 < q, so a parent path exists
        w = self.path_weights[par]
        idx = bisect_left(w, q)
        if idx <= self.head_parent_offset[pid]:
            # found inside the parent path, at or above where v's walk exits it
            return self.path_nodes[par][idx]
        return self.path_nodes[pid][0]


def build_wla(tree: SuffixTree) -> WlaStructure:
    return WlaStructure(tree)


def wla(structure: WlaStructure, v: int, q: int) -> int | None:
    return structure.query(v, q)
