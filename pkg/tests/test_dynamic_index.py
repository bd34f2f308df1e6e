import random

import pytest

from xdoc import (
    DynamicIndex,
    EmptyDocument,
    OrderViolation,
    StaticIndex,
    SubstringRef,
    UnknownDocument,
    naive_count,
    naive_report,
)
from xdoc.dynamic_index import (
    INTERNAL_FIRST,
    INTERNAL_SECOND,
    SUFFIX_LEAF,
    AugTree,
    EulerElement,
    _INF,
    _TNode,
)
from xdoc.order_list import OrderList
from xdoc.suffixes import build_gsa

from conftest import iter_refs, make_corpus, rand_text


def suffix_bytes(dyn, el):
    """The text suffix an element stands for (empty for a bare-marker leaf)."""
    return dyn.corpus.text(el.doc)[el.pos - 1 :]


def byte_lcp(dyn, a, b):
    """LCP of two suffix leaves; unique markers never match each other."""
    sa, sb = suffix_bytes(dyn, a), suffix_bytes(dyn, b)
    n = 0
    for x, y in zip(sa, sb):
        if x != y:
            return n
        n += 1
    return min(len(sa), len(sb))


def build_dynamic(texts):
    dyn = DynamicIndex()
    for t in texts:
        dyn.add_document(t)
    return dyn


def recompute_aggregates(node):
    """(min_lcp, first, last, height) of an AugTree node, from scratch."""
    if type(node) is not _TNode:
        el = node.el
        if el.kind == SUFFIX_LEAF:
            return el.lcp, el, el, 0
        return _INF, None, None, 0
    lm, lf, ll, lh = recompute_aggregates(node.left)
    rm, rf, rl, rh = recompute_aggregates(node.right)
    first = lf if lf is not None else rf
    last = rl if rl is not None else ll
    return min(lm, rm), first, last, max(lh, rh) + 1


def check_augtree(dyn):
    def walk(node):
        got = recompute_aggregates(node)
        if type(node) is _TNode:
            assert (node.min_lcp, node.first, node.last) == got[:3]
            assert node.height == got[3]
            lh = node.left.height if type(node.left) is _TNode else 0
            rh = node.right.height if type(node.right) is _TNode else 0
            assert abs(lh - rh) <= 1
            walk(node.left)
            walk(node.right)

    if dyn.aug.root is not None:
        walk(dyn.aug.root)


def gst_dfs_elements(dyn):
    """(kind, node) sequence of a left-to-right DFS of the current tree."""
    gst = dyn.gst
    seq = []

    def visit(v):
        if v != 0 and gst.is_leaf(v):
            seq.append((SUFFIX_LEAF, v))
            return
        seq.append((INTERNAL_FIRST, v))
        for c in gst.sorted_children(v):
            visit(c)
        seq.append((INTERNAL_SECOND, v))

    visit(0)
    return seq


class TestAddDocument:
    def test_first_document_leaf_order(self):
        """"ab" creates three suffix leaves, sorted as suffixes of "ab"+marker."""
        dyn = build_dynamic([b"ab"])
        leaves = dyn.suffix_leaves_in_order()
        assert [(e.doc, e.pos) for e in leaves] == [(1, 3), (1, 1), (1, 2)]

    def test_second_document_matches_scratch_gsa(self):
        dyn = build_dynamic([b"ab", b"b"])
        gsa = build_gsa(make_corpus([b"ab", b"b"]))
        text_leaves = [
            (e.doc, e.pos)
            for e in dyn.suffix_leaves_in_order()
            if e.pos <= dyn.corpus.length(e.doc)
        ]
        assert text_leaves == [gsa.suffix(r) for r in range(1, gsa.n + 1)]

    def test_empty_document_rejected(self):
        with pytest.raises(EmptyDocument):
            DynamicIndex().add_document(b"")

    def test_ids_sequential(self):
        dyn = DynamicIndex()
        assert dyn.add_document(b"x") == 1
        assert dyn.add_document(b"y") == 2


class TestEulerStructure:
    def test_subdividing_the_only_edge(self):
        """Right after the first subdivision of a one-leaf tree, the tour is
        root, v, leaf, v, root."""
        dyn = DynamicIndex()
        orig = dyn.gst.on_internal
        snapshots = []

        def wrapper(v, old_child):
            orig(v, old_child)
            snapshots.append([(e.kind, e.node) for e in dyn.euler_elements()])

        dyn.gst.on_internal = wrapper
        dyn.add_document(b"aa")
        assert snapshots[0] == [
            (INTERNAL_FIRST, 0),
            (INTERNAL_FIRST, 2),
            (SUFFIX_LEAF, 1),
            (INTERNAL_SECOND, 2),
            (INTERNAL_SECOND, 0),
        ]

    def test_tour_matches_dfs_after_every_insertion(self):
        """Internal-node copies bracket exactly their subtrees at all times."""
        rng = random.Random(34)
        for _ in range(30):
            dyn = DynamicIndex()
            for _ in range(rng.randint(1, 5)):
                dyn.add_document(rand_text(rng, 10))
                got = [(e.kind, e.node) for e in dyn.euler_elements()]
                assert got == gst_dfs_elements(dyn)

    def test_markers_cluster_in_front(self):
        dyn = build_dynamic([b"abab", b"ba", b"abc"])
        leaves = dyn.suffix_leaves_in_order()
        markers = [e for e in leaves if e.pos > dyn.corpus.length(e.doc)]
        assert leaves[: len(markers)] == markers
        assert [e.doc for e in markers] == [1, 2, 3]


class TestStoredLcp:
    def test_all_values_match_byte_comparison(self):
        """After every insertion each stored LCP is the true adjacent LCP."""
        rng = random.Random(35)
        for _ in range(30):
            dyn = DynamicIndex()
            for _ in range(rng.randint(1, 5)):
                dyn.add_document(rand_text(rng, 10))
                leaves = dyn.suffix_leaves_in_order()
                assert leaves[0].lcp == 0
                for a, b in zip(leaves, leaves[1:]):
                    assert b.lcp == byte_lcp(dyn, a, b)

    def test_aggregates_match_recomputation(self):
        rng = random.Random(36)
        for _ in range(25):
            dyn = DynamicIndex()
            for _ in range(rng.randint(1, 5)):
                dyn.add_document(rand_text(rng, 10))
                check_augtree(dyn)


class TestLeafInsertionRule:
    def test_leftmost_child_inherits_then_resets_successor(self):
        """A leftmost child takes its successor's old LCP; the successor
        then stores the parent depth (frozen corpus: old 6, depth 7)."""
        dyn = DynamicIndex()
        dyn.leaf_events = []
        for t in (b"aaabbbb", b"bbabbbbaabaa", b"bbaabaabaab"):
            dyn.add_document(t)
        ev = next(
            e
            for e in dyn.leaf_events
            if e["case"] == "leftmost" and e["doc"] == 3 and e["pos"] == 5
        )
        assert ev["parent_depth"] == 7 and ev["old_succ_lcp"] == 6
        assert ev["lcp"] == 6  # inherited
        assert ev["succ_lcp"] == 7  # now meets the new leaf at the parent

    def test_rightmost_child_takes_parent_depth(self):
        """A rightmost child stores the parent depth; the successor is
        untouched (frozen corpus: depth 2)."""
        dyn = DynamicIndex()
        dyn.leaf_events = []
        for t in (b"abbbbbba", b"abaababaab"):
            dyn.add_document(t)
        ev = next(
            e
            for e in dyn.leaf_events
            if e["case"] == "rightmost" and e["doc"] == 2 and e["pos"] == 2
        )
        assert ev["parent_depth"] == 2
        assert ev["lcp"] == 2
        assert ev["old_succ_lcp"] == ev["succ_lcp"] == 1  # successor unchanged

    def test_rule_bookkeeping_with_literal_values(self):
        """The stated assignments (old LCP(u') = 3, D = 1 → LCP(u) = 3,
        LCP(u') = 1) flow through the tour machinery verbatim."""
        ol = OrderList()
        aug = AugTree()
        prev = EulerElement(SUFFIX_LEAF, 1)
        prev.item = ol.insert_first()
        aug.insert_first_element(prev)
        prev.lcp = 0
        succ = EulerElement(SUFFIX_LEAF, 2)
        succ.item = ol.insert_after(prev.item)
        aug.insert_after_element(prev, succ)
        succ.lcp = 3
        aug.refresh_lcp(succ)
        # a leftmost-child insertion of u between them, parent depth D = 1
        u = EulerElement(SUFFIX_LEAF, 3)
        u.item = ol.insert_after(prev.item)
        aug.insert_after_element(prev, u)
        u.lcp = succ.lcp
        succ.lcp = 1
        aug.refresh_lcp(succ)
        aug.refresh_lcp(u)
        assert u.lcp == 3 and succ.lcp == 1
        assert aug.range_min(prev, u) == 3
        assert aug.range_min(prev, succ) == 1
        assert aug.next_suffix_leaf(prev) is u
        assert aug.next_suffix_leaf(u) is succ

    def test_leftmost_old_value_never_exceeds_parent_depth(self):
        """Geometry: a leftmost child's successor previously diverged above
        the parent, so its old LCP is at most D − 1 (D = 0 aside)."""
        rng = random.Random(37)
        for _ in range(40):
            dyn = DynamicIndex()
            dyn.leaf_events = []
            for _ in range(rng.randint(1, 4)):
                dyn.add_document(rand_text(rng, 12))
            for ev in dyn.leaf_events:
                if ev["case"] == "leftmost" and ev["old_succ_lcp"] is not None:
                    assert ev["old_succ_lcp"] <= max(ev["parent_depth"] - 1, 0)


class TestRangeMinLcp:
    def test_adjacent_and_self(self):
        dyn = build_dynamic([b"abab"])
        leaves = dyn.suffix_leaves_in_order()
        for a, b in zip(leaves, leaves[1:]):
            assert dyn.range_min_lcp(a, b) == b.lcp
        for e in leaves:
            want = dyn.corpus.length(e.doc) - e.pos + 1
            assert dyn.range_min_lcp(e, e) == want

    def test_order_violation(self):
        dyn = build_dynamic([b"ab"])
        leaves = dyn.suffix_leaves_in_order()
        with pytest.raises(OrderViolation):
            dyn.range_min_lcp(leaves[-1], leaves[0])

    def test_random_pairs_match_byte_comparison(self):
        rng = random.Random(38)
        for _ in range(20):
            dyn = build_dynamic([rand_text(rng, 12) for _ in range(rng.randint(1, 4))])
            leaves = dyn.suffix_leaves_in_order()
            for _ in range(100):
                x = rng.randrange(len(leaves))
                y = rng.randrange(len(leaves))
                if x == y:
                    continue
                a, b = leaves[min(x, y)], leaves[max(x, y)]
                assert dyn.range_min_lcp(a, b) == byte_lcp(dyn, a, b)


class TestQueries:
    def test_worked_examples(self):
        dyn = build_dynamic([b"abab", b"ba"])
        assert dyn.find_witness(SubstringRef(2, 1, 2), 1) == 2
        assert dyn.find_witness(SubstringRef(1, 1, 4), 1) == 1
        assert dyn.find_witness(SubstringRef(1, 3, 4), 2) is None
        assert dyn.count_occurrences(SubstringRef(1, 1, 2), 1) == 2
        assert dyn.report_occurrences(SubstringRef(1, 1, 2), 1) == {1, 3}
        assert dyn.count_occurrences(SubstringRef(1, 1, 2), 2) == 0

    def test_bad_inputs(self):
        dyn = build_dynamic([b"ab"])
        with pytest.raises(UnknownDocument):
            dyn.count_occurrences(SubstringRef(1, 1, 1), 5)

    def test_later_documents_query_earlier_ones(self):
        """All (k, l) combinations work regardless of insertion order."""
        dyn = build_dynamic([b"xyz", b"zxyzx"])
        assert dyn.count_occurrences(SubstringRef(2, 2, 4), 1) == 1  # "xyz"
        assert dyn.count_occurrences(SubstringRef(1, 1, 3), 2) == 1

    def test_agreement_with_static_after_every_insertion(self):
        """dyn count/report equal a scratch-built frozen index throughout."""
        rng = random.Random(39)
        for _ in range(12):
            dyn = DynamicIndex()
            texts = []
            for _ in range(rng.randint(2, 5)):
                t = rand_text(rng, 8)
                texts.append(t)
                dyn.add_document(t)
                static = StaticIndex.build(make_corpus(texts))
                for ref in iter_refs(static.corpus):
                    for ell in static.corpus.document_ids():
                        assert dyn.count_occurrences(ref, ell) == static.count_occurrences(ref, ell)
                        assert dyn.report_occurrences(ref, ell) == static.report_occurrences(ref, ell)

    def test_matches_oracle(self):
        rng = random.Random(40)
        for _ in range(15):
            texts = [rand_text(rng, 10) for _ in range(rng.randint(1, 5))]
            dyn = build_dynamic(texts)
            for ref in iter_refs(dyn.corpus):
                for ell in dyn.corpus.document_ids():
                    assert dyn.count_occurrences(ref, ell) == naive_count(dyn.corpus, ref, ell)
                    assert dyn.report_occurrences(ref, ell) == naive_report(dyn.corpus, ref, ell)
