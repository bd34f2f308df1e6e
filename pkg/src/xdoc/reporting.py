"""Scaling measurements with delimited output and rendered figures.

Builds synthetic corpora of doubling total size, times the frozen
index's count queries and the growing index's per-character insertion
cost, and writes the numbers as TSV plus two PNG charts.
"""

from __future__ import annotations

import gc
import os
import random
import time

from .corpus import Corpus, SubstringRef
from .dynamic_index import DynamicIndex
from .static_index import StaticIndex

_ALPHABET = b"abcd"


def make_corpus_texts(total_size: int, n_docs: int, rng: random.Random) -> list[bytes]:
    """n_docs random texts over a 4-letter alphabet, sizes summing to total_size."""
    base = total_size // n_docs
    sizes = [base] * n_docs
    sizes[-1] += total_size - base * n_docs
    return [bytes(rng.choice(_ALPHABET) for _ in range(s)) for s in sizes]


def sample_queries(texts: list[bytes], n_queries: int, rng: random.Random, max_len: int = 32):
    """Random (ref, target) pairs with pattern length ≤ max_len."""
    m = len(texts)
    out = []
    for _ in range(n_queries):
        k = rng.randrange(m) + 1
        L = len(texts[k - 1])
        i = rng.randrange(L) + 1
        j = min(L, i + rng.randrange(max_len))
        ell = rng.randrange(m) + 1
        out.append((SubstringRef(k, i, j), ell))
    return out


def run_scaling(exponents=(14, 16, 18), seed: int = 7, n_queries: int = 2000, n_docs: int = 64):
    """One row of measurements per corpus size 2**e."""
    rows = []
    for e in exponents:
        rng = random.Random(seed * 1000 + e)
        total = 1 << e
        texts = make_corpus_texts(total, n_docs, rng)
        corpus = Corpus()
        for t in texts:
            corpus.add_document(t)
        t0 = time.perf_counter()
        index = StaticIndex.build(corpus)
        build_s = time.perf_counter() - t0
        queries = sample_queries(texts, n_queries, rng)
        # collector pauses would dwarf the millisecond-scale timed loops
        gc.collect()
        gc_was_enabled = gc.isenabled()
        gc.disable()
        try:
            for ref, ell in queries:  # warm-up
                index.count_occurrences(ref, ell)
            best = None
            for _ in range(3):
                t0 = time.perf_counter_ns()
                for ref, ell in queries:
                    index.count_occurrences(ref, ell)
                dt = time.perf_counter_ns() - t0
                if best is None or dt < best:
                    best = dt
            count_ns = best / n_queries
            dyn = DynamicIndex()
            t0 = time.perf_counter_ns()
            for t in texts:
                dyn.add_document(t)
            insert_ns = (time.perf_counter_ns() - t0) / total
        finally:
            if gc_was_enabled:
                gc.enable()
        rows.append(
            {
                "n": total,
                "log2_n": e,
                "build_s": build_s,
                "count_ns": count_ns,
                "insert_ns_per_char": insert_ns,
            }
        )
    return rows


def fit_log_constant(rows) -> float:
    """Smallest c with insert_ns_per_char ≤ c·log2(n) at every measured size."""
    return max(r["insert_ns_per_char"] / r["log2_n"] for r in rows)


_COLUMNS = ("n", "log2_n", "build_s", "count_ns", "insert_ns_per_char")


def write_tsv(rows, path) -> None:
    with open(path, "w") as f:
        f.write("\t".join(_COLUMNS) + "\n")
        for r in rows:
            f.write("\t".join(f"{r[c]:.3f}" if isinstance(r[c], float) else str(r[c]) for c in _COLUMNS) + "\n")


def render_figures(rows, out_dir) -> list[str]:
    """Two PNGs: count latency vs corpus size, insert cost vs log2(n)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(out_dir, exist_ok=True)
    ns = [r["n"] for r in rows]
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [r["count_ns"] / 1000 for r in rows], "o-", label="measured")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("corpus size n (bytes)")
    ax.set_ylabel("mean count latency (µs)")
    ax.set_title("Count-query latency")
    ax.grid(True, alpha=0.3)
    ax.legend()
    p = os.path.join(out_dir, "count_latency.png")
    fig.savefig(p, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(p)

    c = fit_log_constant(rows)
    logs = [r["log2_n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(logs, [r["insert_ns_per_char"] / 1000 for r in rows], "o-", label="measured")
    ax.plot(logs, [c * x / 1000 for x in logs], "--", label=f"fitted {c / 1000:.2f}·log2(n) µs")
    ax.set_xlabel("log2(corpus size)")
    ax.set_ylabel("insert cost per character (µs)")
    ax.set_title("Dynamic insertion cost")
    ax.grid(True, alpha=0.3)
    ax.legend()
    p = os.path.join(out_dir, "insert_cost.png")
    fig.savefig(p, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(p)
    return paths


def latency_ratios(rows) -> list[float]:
    """count_ns ratios between successive doubling steps."""
    return [rows[i + 1]["count_ns"] / rows[i]["count_ns"] for i in range(len(rows) - 1)]


def run_and_render(out_dir, exponents=(14, 16, 18), seed: int = 7):
    """Full pipeline: measure, write TSV, render figures; returns (rows, paths)."""
    rows = run_scaling(exponents, seed=seed)
    os.makedirs(out_dir, exist_ok=True)
    tsv = os.path.join(out_dir, "scaling.tsv")
    write_tsv(rows, tsv)
    figs = render_figures(rows, out_dir)
    return rows, [tsv] + figs


def main_summary(rows) -> str:
    c = fit_log_constant(rows)
    lines = ["\t".join(_COLUMNS)]
    for r in rows:
        lines.append(
            f"{r['n']}\t{r['log2_n']}\t{r['build_s']:.3f}\t{r['count_ns']:.0f}\t{r['insert_ns_per_char']:.0f}"
        )
    ratios = ", ".join(f"{x:.2f}" for x in latency_ratios(rows))
    lines.append(f"# latency ratios between sizes: {ratios}")
    lines.append(f"# fitted insertion constant: {c:.0f} ns per char per log2(n)")
    return "\n".join(lines)
