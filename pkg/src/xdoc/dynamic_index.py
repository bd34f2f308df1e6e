"""Dynamic cross-document index: documents arrive one at a time.

The corpus-wide suffix order is maintained implicitly as the sequence
of suffix leaves inside an Euler tour of the online generalized suffix
tree. Each internal node contributes two tour elements bracketing its
subtree, each leaf one. Tour elements live in an order-maintenance
list (O(1) comparisons) and double as the leaves of a height-balanced
tree whose nodes aggregate, over suffix-leaf descendants: the leftmost
and rightmost ones and the minimum stored LCP. A suffix leaf stores
the LCP with the previous suffix leaf in tour order; the globally
first suffix leaf always stores 0.

A witness query binary-searches the target document's suffix array,
comparing tour positions, then verifies the nearest neighbors with a
range-minimum over stored LCPs. Counting and reporting then use the
target document's own kit, exactly as in the frozen index.

Single writer: add_document must not run concurrently with anything.
"""

from __future__ import annotations

from .corpus import Corpus, SubstringRef
from .errors import OrderViolation, UnknownDocument
from .gst import OnlineGst
from .order_list import OrderList
from .static_index import DocKit, build_doc_kit, count_from_witness, report_from_witness

INTERNAL_FIRST = 0
INTERNAL_SECOND = 1
SUFFIX_LEAF = 2

_INF = float("inf")


class EulerElement:
    __slots__ = ("kind", "node", "doc", "pos", "lcp", "item", "tleaf")

    def __init__(self, kind: int, node: int, doc: int = 0, pos: int = 0):
        self.kind = kind
        self.node = node
        self.doc = doc
        self.pos = pos
        self.lcp = _INF
        self.item = None
        self.tleaf = None


class _TLeaf:
    __slots__ = ("el", "parent", "height")

    def __init__(self, el):
        self.el = el
        self.parent = None
        self.height = 0


class _TNode:
    __slots__ = ("left", "right", "parent", "height", "min_lcp", "first", "last")

    def __init__(self):
        self.left = None
        self.right = None
        self.parent = None
        self.height = 1
        self.min_lcp = _INF
        self.first = None
        self.last = None


def _leaf_min(c) -> float:
    el = c.el
    return el.lcp if el.kind == SUFFIX_LEAF else _INF


def _min_of(c):
    return c.min_lcp if type(c) is _TNode else _leaf_min(c)


def _first_of(c):
    if type(c) is _TNode:
        return c.first
    el = c.el
    return el if el.kind == SUFFIX_LEAF else None


def _last_of(c):
    if type(c) is _TNode:
        return c.last
    el = c.el
    return el if el.kind == SUFFIX_LEAF else None


class AugTree:
    """Height-balanced binary tree over the tour elements, in tour order.

    Every tour element is a leaf; internal nodes have exactly two
    children and O(1)-recomputable aggregates, so an insertion or a
    stored-LCP change costs O(log n).
    """

    __slots__ = ("root",)

    def __init__(self):
        self.root = None

    def insert_first_element(self, el: EulerElement) -> None:
        leaf = _TLeaf(el)
        el.tleaf = leaf
        if self.root is None:
            self.root = leaf
            return
        raise ValueError("tree is not empty")

    def _insert_adjacent(self, anchor: EulerElement, el: EulerElement, after: bool) -> None:
        a = anchor.tleaf
        leaf = _TLeaf(el)
        el.tleaf = leaf
        p = a.parent
        z = _TNode()
        if after:
            z.left, z.right = a, leaf
        else:
            z.left, z.right = leaf, a
        a.parent = leaf.parent = z
        z.parent = p
        if p is None:
            self.root = z
        elif p.left is a:
            p.left = z
        else:
            p.right = z
        self._pull(z)
        self._fix(p)

    def insert_after_element(self, anchor: EulerElement, el: EulerElement) -> None:
        self._insert_adjacent(anchor, el, True)

    def insert_before_element(self, anchor: EulerElement, el: EulerElement) -> None:
        self._insert_adjacent(anchor, el, False)

    @staticmethod
    def _pull(n: _TNode) -> None:
        l = n.left
        r = n.right
        n.height = (l.height if l.height >= r.height else r.height) + 1
        lm = _min_of(l)
        rm = _min_of(r)
        n.min_lcp = lm if lm <= rm else rm
        f = _first_of(l)
        n.first = f if f is not None else _first_of(r)
        g = _last_of(r)
        n.last = g if g is not None else _last_of(l)

    def _rot_right(self, y: _TNode) -> _TNode:
        x = y.left
        p = y.parent
        y.left = x.right
        y.left.parent = y
        x.right = y
        y.parent = x
        x.parent = p
        if p is None:
            self.root = x
        elif p.left is y:
            p.left = x
        else:
            p.right = x
        self._pull(y)
        self._pull(x)
        return x

    def _rot_left(self, x: _TNode) -> _TNode:
        y = x.right
        p = x.parent
        x.right = y.left
        x.right.parent = x
        y.left = x
        x.parent = y
        y.parent = p
        if p is None:
            self.root = y
        elif p.left is x:
            p.left = y
        else:
            p.right = y
        self._pull(x)
        self._pull(y)
        return y

    def _fix(self, n) -> None:
        while n is not None:
            old = (n.height, n.min_lcp, n.first, n.last)
            self._pull(n)
            bf = n.left.height - n.right.height
            if bf > 1:
                if n.left.left.height < n.left.right.height:
                    self._rot_left(n.left)
                n = self._rot_right(n)
            elif bf < -1:
                if n.right.right.height < n.right.left.height:
                    self._rot_right(n.right)
                n = self._rot_left(n)
            elif old == (n.height, n.min_lcp, n.first, n.last):
                return  # nothing above can change either
            n = n.parent

    def refresh_lcp(self, el: EulerElement) -> None:
        """Re-aggregate after el.lcp changed."""
        n = el.tleaf.parent
        while n is not None:
            m = n.min_lcp
            self._pull(n)
            if n.min_lcp == m:
                return
            n = n.parent

    def next_suffix_leaf(self, el: EulerElement) -> EulerElement | None:
        n = el.tleaf
        p = n.parent
        while p is not None:
            if n is p.left:
                f = _first_of(p.right)
                if f is not None:
                    return f
            n = p
            p = p.parent
        return None

    def prev_suffix_leaf(self, el: EulerElement) -> EulerElement | None:
        n = el.tleaf
        p = n.parent
        while p is not None:
            if n is p.right:
                g = _last_of(p.left)
                if g is not None:
                    return g
            n = p
            p = p.parent
        return None

    def first_suffix_leaf(self) -> EulerElement | None:
        return _first_of(self.root) if self.root is not None else None

    def range_min(self, a: EulerElement, b: EulerElement):
        """Min stored LCP over suffix leaves strictly after a, up to and
        including b. Requires a strictly before b in tour order."""
        ta = a.tleaf
        tb = b.tleaf
        chain = []
        n = ta
        while n is not None:
            chain.append(n)
            n = n.parent
        aset = set(map(id, chain))
        n = tb
        while id(n.parent) not in aset:
            n = n.parent
        lca = n.parent
        best = b.lcp
        n = ta
        while n.parent is not lca:
            p = n.parent
            if n is p.left:
                m = _min_of(p.right)
                if m < best:
                    best = m
            n = p
        n = tb
        while n.parent is not lca:
            p = n.parent
            if n is p.right:
                m = _min_of(p.left)
                if m < best:
                    best = m
            n = p
        return best


class DynamicIndex:
    """Growing corpus with the same query surface as the frozen index."""

    def __init__(self):
        self.corpus = Corpus()
        self.gst = OnlineGst()
        self.gst.on_internal = self._on_internal
        self.gst.on_leaf = self._on_leaf
        self.order = OrderList()
        self.aug = AugTree()
        self.kits: list[DocKit] = []
        self.suffix_el: dict[tuple[int, int], EulerElement] = {}
        self.leaf_events = None  # optional per-insertion instrumentation
        root_first = EulerElement(INTERNAL_FIRST, 0)
        root_first.item = self.order.insert_first()
        root_first.item.ref = root_first
        self.aug.insert_first_element(root_first)
        root_second = EulerElement(INTERNAL_SECOND, 0)
        root_second.item = self.order.insert_after(root_first.item)
        root_second.item.ref = root_second
        self.aug.insert_after_element(root_first, root_second)
        self._el_first = [root_first]
        self._el_second = [root_second]

    # ------------------------------------------------------------------
    # structure maintenance

    def _span(self, node: int) -> tuple[EulerElement, EulerElement]:
        first = self._el_first[node]
        second = self._el_second[node]
        return first, second if second is not None else first

    def _register(self, node: int, first: EulerElement, second: EulerElement | None) -> None:
        assert node == len(self._el_first)
        self._el_first.append(first)
        self._el_second.append(second)

    def _on_internal(self, v: int, old_child: int) -> None:
        # bracket exactly the subdivided child's tour segment
        lo, hi = self._span(old_child)
        first = EulerElement(INTERNAL_FIRST, v)
        first.item = self.order.insert_before(lo.item)
        first.item.ref = first
        self.aug.insert_before_element(lo, first)
        second = EulerElement(INTERNAL_SECOND, v)
        second.item = self.order.insert_after(hi.item)
        second.item.ref = second
        self.aug.insert_after_element(hi, second)
        self._register(v, first, second)

    def _on_leaf(self, u: int, par: int, pdepth: int) -> None:
        gst = self.gst
        doc = gst.leaf_doc[u]
        pos = gst.leaf_pos[u]
        el = EulerElement(SUFFIX_LEAF, u, doc, pos)
        sibs = gst.children[par]
        s = gst.data[gst.start[u]]
        left_sym = None
        right_sym = None
        for sym in sibs:
            if sym < s:
                if left_sym is None or sym > left_sym:
                    left_sym = sym
            elif sym > s:
                if right_sym is None or sym < right_sym:
                    right_sym = sym
        if left_sym is not None:
            anchor = self._span(sibs[left_sym])[1]
            el.item = self.order.insert_after(anchor.item)
            self.aug.insert_after_element(anchor, el)
        elif right_sym is not None:
            anchor = self._span(sibs[right_sym])[0]
            el.item = self.order.insert_before(anchor.item)
            self.aug.insert_before_element(anchor, el)
        else:
            # the very first leaf of the whole tree hangs off the root
            anchor = self._el_first[par]
            el.item = self.order.insert_after(anchor.item)
            self.aug.insert_after_element(anchor, el)
        el.item.ref = el
        self._register(u, el, None)
        self.suffix_el[(doc, pos)] = el

        succ = self.aug.next_suffix_leaf(el)
        old_succ_lcp = succ.lcp if succ is not None else None
        if succ is None:
            # rightmost suffix leaf overall
            value = pdepth if self.aug.prev_suffix_leaf(el) is not None else 0
            case = "rightmost"
        elif left_sym is None and right_sym is not None:
            # leftmost child: inherit the successor's old LCP, then the
            # successor now diverges from u at the parent
            value = succ.lcp
            succ.lcp = pdepth
            self.aug.refresh_lcp(succ)
            case = "leftmost"
        else:
            value = pdepth
            case = "middle" if right_sym is not None else "rightmost"
        if self.aug.first_suffix_leaf() is el:
            value = 0  # the globally first suffix leaf always stores 0
        el.lcp = value
        self.aug.refresh_lcp(el)
        if self.leaf_events is not None:
            self.leaf_events.append(
                {
                    "doc": doc,
                    "pos": pos,
                    "case": case,
                    "parent_depth": pdepth,
                    "old_succ_lcp": old_succ_lcp,
                    "lcp": el.lcp,
                    "succ_lcp": succ.lcp if succ is not None else None,
                }
            )

    # ------------------------------------------------------------------
    # public surface

    def add_document(self, text) -> int:
        """Append one document; all structures are query-ready on return."""
        doc = self.corpus.add_document(text)
        data = self.corpus.text(doc)
        self.gst.add_document(doc, data)
        self.kits.append(build_doc_kit(data))
        return doc

    def _check_doc(self, ell: int) -> None:
        if not isinstance(ell, int) or not 1 <= ell <= len(self.corpus):
            raise UnknownDocument(f"no document with id {ell!r}")

    def range_min_lcp(self, a: EulerElement, b: EulerElement):
        """Common prefix length of two suffixes given as tour elements."""
        if a is b:
            return self.corpus.length(a.doc) - a.pos + 1
        if self.order.order(a.item, b.item) > 0:
            raise OrderViolation("endpoints given in reverse tour order")
        return self.aug.range_min(a, b)

    def find_witness(self, ref: SubstringRef, ell: int) -> int | None:
        """Same contract as the frozen index: a start position or None."""
        self.corpus.check_ref(ref)
        self._check_doc(ell)
        need = ref.length
        ek = self.suffix_el[(ref.doc, ref.i)]
        ek_item = ek.item
        sa_pos = self.kits[ell - 1].sa.pos_of
        suffix_el = self.suffix_el
        order = self.order.order
        lo = 0
        hi = len(sa_pos)
        while lo < hi:
            mid = (lo + hi) // 2
            e = suffix_el[(ell, sa_pos[mid])]
            if order(e.item, ek_item) < 0:
                lo = mid + 1
            else:
                hi = mid
        c = lo
        if c > 0:
            a = suffix_el[(ell, sa_pos[c - 1])]
            if self.aug.range_min(a, ek) >= need:
                return sa_pos[c - 1]
        if c < len(sa_pos):
            b = suffix_el[(ell, sa_pos[c])]
            if b is ek:
                return ref.i  # own suffix: remaining length covers the span
            if self.aug.range_min(ek, b) >= need:
                return sa_pos[c]
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

    # ------------------------------------------------------------------
    # introspection used by tests and tooling

    def euler_elements(self) -> list[EulerElement]:
        return [item.ref for item in self.order]

    def suffix_leaves_in_order(self) -> list[EulerElement]:
        return [el for el in self.euler_elements() if el.kind == SUFFIX_LEAF]
