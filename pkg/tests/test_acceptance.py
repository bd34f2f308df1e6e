"""Acceptance gate: eight release criteria, one pass/fail line each.

The verdict lines print outside pytest's capture, so they appear in
any run, redirected ones included.
"""

import contextlib
import io
import os
import random
import tempfile
import time

from xdoc import (
    Corpus,
    DocIndex,
    DynamicIndex,
    StaticIndex,
    naive_count,
    naive_docs,
    naive_report,
)
from xdoc.cli import main as cli_main
from xdoc.corpus import SubstringRef
from xdoc.dynamic_index import SUFFIX_LEAF, _INF, _TNode
from xdoc.suffixes import build_gsa
from xdoc import reporting


def _criterion(n, summary, fn, capsys):
    try:
        detail = fn()
    except BaseException:
        with capsys.disabled():
            print(f"\ncriterion {n}: FAIL - {summary}")
        raise
    with capsys.disabled():
        print(f"\ncriterion {n}: PASS - {summary}" + (f" [{detail}]" if detail else ""))


def make_corpus(texts):
    corpus = Corpus()
    for t in texts:
        corpus.add_document(t)
    return corpus


def rand_texts(rng, max_docs=8, max_len=40, alphabet=b"abc"):
    return [
        bytes(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))
        for _ in range(rng.randint(1, max_docs))
    ]


def iter_refs(corpus):
    for k in corpus.document_ids():
        L = corpus.length(k)
        for i in range(1, L + 1):
            for j in range(i, L + 1):
                yield SubstringRef(k, i, j)


def the_same_corpora(n=200, seed=101):
    rng = random.Random(seed)
    return [rand_texts(rng) for _ in range(n)]


# ----------------------------------------------------------------------
# criterion 1


def test_criterion_1_static_oracle_equivalence(capsys):
    def body():
        t0 = time.perf_counter()
        checked = 0
        for texts in the_same_corpora():
            corpus = make_corpus(texts)
            index = StaticIndex.build(corpus)
            for ref in iter_refs(corpus):
                for ell in corpus.document_ids():
                    want = naive_report(corpus, ref, ell)
                    assert index.count_occurrences(ref, ell) == len(want)
                    assert index.report_occurrences(ref, ell) == want
                    checked += 1
        elapsed = time.perf_counter() - t0
        assert elapsed < 60.0
        return f"{checked} queries on 200 corpora in {elapsed:.1f}s"

    _criterion(1, "static count/report equal the naive oracle", body, capsys)


# ----------------------------------------------------------------------
# criterion 2


def test_criterion_2_document_query_equivalence(capsys):
    def body():
        checked = 0
        for texts in the_same_corpora():
            corpus = make_corpus(texts)
            docs = DocIndex.build(corpus)
            for ref in iter_refs(corpus):
                want = naive_docs(corpus, ref)
                assert docs.list_documents(ref) == want
                assert docs.count_documents(ref) == len(want)
                checked += 1
        return f"{checked} queries on the same 200 corpora"

    _criterion(2, "document list/count equal the naive oracle", body, capsys)


# ----------------------------------------------------------------------
# criterion 3


def test_criterion_3_dynamic_static_agreement(capsys):
    def body():
        rng = random.Random(103)
        dyn = DynamicIndex()
        texts = []
        checked = 0
        for _ in range(10):
            t = bytes(rng.choice(b"abc") for _ in range(rng.randint(1, 15)))
            texts.append(t)
            dyn.add_document(t)
            static = StaticIndex.build(make_corpus(texts))
            for ref in iter_refs(static.corpus):
                for ell in static.corpus.document_ids():
                    assert dyn.count_occurrences(ref, ell) == static.count_occurrences(ref, ell)
                    assert dyn.report_occurrences(ref, ell) == static.report_occurrences(ref, ell)
                    checked += 1
        return f"{checked} queries across 10 staged insertions"

    _criterion(3, "growing index agrees with a scratch-built frozen index", body, capsys)


# ----------------------------------------------------------------------
# criterion 4


def _suffix_bytes(dyn, el):
    return dyn.corpus.text(el.doc)[el.pos - 1 :]


def _byte_lcp(dyn, a, b):
    sa, sb = _suffix_bytes(dyn, a), _suffix_bytes(dyn, b)
    n = 0
    for x, y in zip(sa, sb):
        if x != y:
            return n
        n += 1
    return min(len(sa), len(sb))


def _recompute(node):
    if type(node) is not _TNode:
        el = node.el
        if el.kind == SUFFIX_LEAF:
            return el.lcp, el, el, 0
        return _INF, None, None, 0
    lm, lf, ll, lh = _recompute(node.left)
    rm, rf, rl, rh = _recompute(node.right)
    return (
        min(lm, rm),
        lf if lf is not None else rf,
        rl if rl is not None else ll,
        max(lh, rh) + 1,
    )


def _check_aug(dyn):
    def walk(node):
        if type(node) is not _TNode:
            return
        got = _recompute(node)
        assert (node.min_lcp, node.first, node.last, node.height) == got
        walk(node.left)
        walk(node.right)

    walk(dyn.aug.root)


def _dfs_elements(dyn):
    from xdoc.dynamic_index import INTERNAL_FIRST, INTERNAL_SECOND

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


def test_criterion_4_dynamic_structural_invariants(capsys):
    def body():
        rng = random.Random(104)
        sequences = 50
        for _ in range(sequences):
            dyn = DynamicIndex()
            texts = []
            for _ in range(rng.randint(1, 4)):
                t = bytes(rng.choice(b"abc") for _ in range(rng.randint(1, 10)))
                texts.append(t)
                dyn.add_document(t)
                leaves = dyn.suffix_leaves_in_order()
                # (a) suffix-leaf order equals a scratch suffix array,
                # marker leaves clustered in front in document order
                m = len(texts)
                assert [(e.doc, e.pos) for e in leaves[:m]] == [
                    (d, len(texts[d - 1]) + 1) for d in range(1, m + 1)
                ]
                gsa = build_gsa(make_corpus(texts))
                assert [(e.doc, e.pos) for e in leaves[m:]] == [
                    gsa.suffix(r) for r in range(1, gsa.n + 1)
                ]
                # (b) every stored LCP is the byte-comparison LCP
                assert leaves[0].lcp == 0
                for a, b in zip(leaves, leaves[1:]):
                    assert b.lcp == _byte_lcp(dyn, a, b)
                # (c) every aggregate equals leaf-level recomputation
                _check_aug(dyn)
                # (d) a DFS of the tree reproduces the tour
                got = [(e.kind, e.node) for e in dyn.euler_elements()]
                assert got == _dfs_elements(dyn)
        return f"{sequences} randomized build sequences"

    _criterion(4, "tour order, stored LCPs, aggregates, and DFS all verify", body, capsys)


# ----------------------------------------------------------------------
# criterion 5


def test_criterion_5_weighted_ancestor_oracle(capsys):
    def body():
        from xdoc.static_index import build_doc_kit

        rng = random.Random(105)
        checked = 0
        for _ in range(100):
            text = bytes(rng.choice(b"abc") for _ in range(rng.randint(1, 128)))
            kit = build_doc_kit(text)
            tree = kit.tree
            for v in range(tree.n_nodes):
                chain = []
                u = v
                while u != -1:
                    chain.append(u)
                    u = tree.parent[u]
                chain.reverse()  # root -> v, depths strictly increasing
                dv = tree.depth[v]
                for q in range(dv + 2):
                    want = next((u for u in chain if tree.depth[u] >= q), None)
                    assert kit.wla.query(v, q) == want
                    checked += 1
        return f"{checked} (node, threshold) pairs on 100 texts"

    _criterion(5, "weighted ancestor queries match the naive walk", body, capsys)


# ----------------------------------------------------------------------
# criterion 6


def test_criterion_6_locus_counting_identity(capsys):
    def body():
        rng = random.Random(106)
        checked = 0
        for _ in range(30):
            texts = rand_texts(rng, max_docs=5, max_len=20)
            corpus = make_corpus(texts)
            index = StaticIndex.build(corpus)
            for ref in iter_refs(corpus):
                for ell in corpus.document_ids():
                    p = index.find_witness(ref, ell)
                    if p is None:
                        continue
                    kit = index.kits[ell - 1]
                    u = kit.wla.query(kit.leaf_of_pos[p - 1], ref.length)
                    assert kit.tree.count[u] == naive_count(corpus, ref, ell)
                    checked += 1
        return f"{checked} witnessed queries"

    _criterion(6, "the weighted ancestor of a witness leaf counts all matches", body, capsys)


# ----------------------------------------------------------------------
# criterion 7


def test_criterion_7_scaling_smoke(capsys):
    def body():
        rows = reporting.run_scaling((14, 16, 18), seed=7)
        ratios = reporting.latency_ratios(rows)
        for r in ratios:
            assert r < 2.0  # quadrupling n must not double count latency
        c = reporting.fit_log_constant(rows)
        assert c > 0
        pretty = ", ".join(f"{x:.2f}" for x in ratios)
        return f"latency ratios {pretty}; insert <= {c:.0f} ns/char/log2(n)"

    _criterion(7, "count latency grows sub-linearly; insert cost fits c*log n", body, capsys)


# ----------------------------------------------------------------------
# criterion 8


GOLDEN = [b"abab", b"ba", b"abc"]


def test_criterion_8_golden_fixtures(capsys):
    def body():
        corpus = make_corpus(GOLDEN)
        index = StaticIndex.build(corpus)
        docs = DocIndex.build(corpus)

        # witness lookups
        assert index.find_witness(SubstringRef(1, 1, 2), 3) == 1
        assert index.find_witness(SubstringRef(1, 1, 2), 2) is None
        # occurrence counting and reporting
        assert index.count_occurrences(SubstringRef(1, 1, 2), 1) == 2
        assert index.count_occurrences(SubstringRef(2, 1, 2), 3) == 0
        assert index.report_occurrences(SubstringRef(1, 1, 2), 1) == {1, 3}
        assert index.report_occurrences(SubstringRef(2, 2, 2), 1) == {1, 3}
        assert index.report_occurrences(SubstringRef(1, 1, 2), 2) == set()
        # locus interval over the corpus-wide suffix order
        lo, hi = docs.locus_interval(SubstringRef(1, 1, 2))
        assert hi - lo + 1 == 3
        # document-level queries
        assert docs.list_documents(SubstringRef(1, 1, 2)) == {1, 3}
        assert docs.list_documents(SubstringRef(1, 2, 2)) == {1, 2, 3}
        assert docs.count_documents(SubstringRef(1, 2, 2)) == 3
        assert docs.count_documents(SubstringRef(2, 1, 2)) == 2
        # oracle hand-checks
        assert naive_count(corpus, SubstringRef(1, 1, 2), 1) == 2
        assert naive_report(corpus, SubstringRef(1, 1, 2), 1) == {1, 3}
        assert naive_docs(corpus, SubstringRef(1, 2, 2)) == {1, 2, 3}
        # dynamic flavor on the two-document prefix
        dyn = DynamicIndex()
        dyn.add_document(b"abab")
        dyn.add_document(b"ba")
        assert dyn.find_witness(SubstringRef(2, 1, 2), 1) == 2
        assert dyn.find_witness(SubstringRef(1, 3, 4), 2) is None
        assert dyn.count_occurrences(SubstringRef(1, 1, 2), 1) == 2
        assert dyn.report_occurrences(SubstringRef(1, 1, 2), 1) == {1, 3}
        assert dyn.count_occurrences(SubstringRef(1, 1, 2), 2) == 0
        # command-line surface over the same corpus
        with tempfile.TemporaryDirectory() as tmp:
            cdir = os.path.join(tmp, "docs")
            os.mkdir(cdir)
            for i, t in enumerate(GOLDEN, start=1):
                with open(os.path.join(cdir, f"{i}.txt"), "wb") as f:
                    f.write(t)
            idx = os.path.join(tmp, "golden.idx")
            script = os.path.join(tmp, "script")
            with open(script, "w") as f:
                f.write("count 1 1 2 1\nreport 1 1 2 1\n")
            out = io.StringIO()
            with contextlib.redirect_stdout(out):
                assert cli_main(["build", cdir, idx]) == 0
                assert cli_main(["query", "--index", idx, script, "--verify"]) == 0
            assert out.getvalue() == "2\n1 3\n"
        return "all recorded answers for {abab, ba, abc}"

    _criterion(8, "the worked three-document corpus reproduces every recorded answer", body, capsys)
