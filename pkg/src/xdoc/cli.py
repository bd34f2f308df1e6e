"""Command-line front end.

    xdoc build CORPUS INDEX
    xdoc query (--index FILE | --dynamic) SCRIPT [--verify] [--bench]
    xdoc bench [--out DIR] [--sizes 14,16,18] [--seed N]

CORPUS is either a directory (documents are its files, sorted by name)
or a manifest file listing one document path per line, relative to the
manifest's directory.

Query scripts hold one command per line (blank lines and ``#``
comments allowed), all coordinates 1-based:

    count k i j l      occurrences of document k's slice [i..j] in document l
    report k i j l     their start positions, ascending, space-separated
    doccount k i j     number of documents containing the slice
    docreport k i j    their ids, ascending
    add PATH           (dynamic mode) append the file as a new document

Exit codes: 0 ok; 2 I/O failure; 3 invalid corpus, script, or
arguments; 4 answer mismatch under --verify.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .corpus import Corpus
from .corpus import SubstringRef
from .doc_index import DocIndex
from .dynamic_index import DynamicIndex
from .errors import XdocError
from .oracle import naive_count, naive_docs, naive_report
from .serialize import load_index, save_index
from .static_index import StaticIndex

EXIT_OK = 0
EXIT_IO = 2
EXIT_INVALID = 3
EXIT_MISMATCH = 4


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_corpus_texts(corpus_path: str) -> list[tuple[str, bytes]]:
    """(name, bytes) pairs from a directory or a manifest file."""
    try:
        if os.path.isdir(corpus_path):
            names = sorted(
                name
                for name in os.listdir(corpus_path)
                if os.path.isfile(os.path.join(corpus_path, name))
            )
            paths = [(name, os.path.join(corpus_path, name)) for name in names]
        else:
            base = os.path.dirname(os.path.abspath(corpus_path))
            paths = []
            with open(corpus_path) as f:
                for raw in f:
                    line = raw.strip()
                    if not line or line.startswith("#"):
                        continue
                    paths.append((line, os.path.join(base, line)))
        out = []
        for name, path in paths:
            with open(path, "rb") as f:
                out.append((name, f.read()))
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read corpus: {exc}") from exc
    return out


def _cmd_build(args) -> int:
    texts = _read_corpus_texts(args.corpus)
    if not texts:
        raise _Failure(EXIT_INVALID, f"no documents found in {args.corpus!r}")
    corpus = Corpus()
    for name, data in texts:
        try:
            corpus.add_document(data)
        except XdocError as exc:
            raise _Failure(EXIT_INVALID, f"document {name!r}: {exc}") from exc
    index = StaticIndex.build(corpus)
    try:
        save_index(index, args.index)
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot write index: {exc}") from exc
    return EXIT_OK


def _parse_script(path: str) -> list[tuple[int, str, list]]:
    """(line_number, command, args) triples; syntax-checked, not validated."""
    try:
        with open(path) as f:
            raw_lines = f.readlines()
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read script: {exc}") from exc
    commands = []
    for ln, raw in enumerate(raw_lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        cmd = parts[0]
        if cmd in ("count", "report"):
            arity = 4
        elif cmd in ("doccount", "docreport"):
            arity = 3
        elif cmd == "add":
            if len(parts) != 2:
                raise _Failure(EXIT_INVALID, f"line {ln}: add takes exactly one path")
            commands.append((ln, cmd, [parts[1]]))
            continue
        else:
            raise _Failure(EXIT_INVALID, f"line {ln}: unknown command {cmd!r}")
        if len(parts) != arity + 1:
            raise _Failure(EXIT_INVALID, f"line {ln}: {cmd} takes {arity} integers")
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise _Failure(EXIT_INVALID, f"line {ln}: {cmd} takes {arity} integers") from None
        commands.append((ln, cmd, nums))
    return commands


def _format_positions(values) -> str:
    return " ".join(str(v) for v in sorted(values))


class _QueryRunner:
    """Executes a parsed script against either index flavor."""

    def __init__(self, index: StaticIndex | None, dynamic: bool, verify: bool, bench: bool, script_dir: str):
        self.static = index
        self.dyn = DynamicIndex() if dynamic else None
        self.doc_index: DocIndex | None = None
        self.verify = verify
        self.bench = bench
        self.script_dir = script_dir

    @property
    def corpus(self) -> Corpus:
        return self.dyn.corpus if self.dyn is not None else self.static.corpus

    def _doc_queries(self) -> DocIndex:
        if self.dyn is not None:
            raise XdocError("document-level queries need a frozen index")
        if self.doc_index is None:
            self.doc_index = DocIndex.build(self.static.corpus, self.static.gsa)
        return self.doc_index

    def _answer(self, cmd: str, nums: list[int]):
        if cmd == "count":
            ref = SubstringRef(nums[0], nums[1], nums[2])
            target = self.dyn if self.dyn is not None else self.static
            return target.count_occurrences(ref, nums[3])
        if cmd == "report":
            ref = SubstringRef(nums[0], nums[1], nums[2])
            target = self.dyn if self.dyn is not None else self.static
            return target.report_occurrences(ref, nums[3])
        if cmd == "doccount":
            return self._doc_queries().count_documents(SubstringRef(*nums))
        if cmd == "docreport":
            return self._doc_queries().list_documents(SubstringRef(*nums))
        raise AssertionError(cmd)

    def _check(self, cmd: str, nums: list[int], got) -> None:
        ref = SubstringRef(nums[0], nums[1], nums[2])
        if cmd == "count":
            want = naive_count(self.corpus, ref, nums[3])
        elif cmd == "report":
            want = naive_report(self.corpus, ref, nums[3])
        elif cmd == "doccount":
            want = len(naive_docs(self.corpus, ref))
        else:
            want = naive_docs(self.corpus, ref)
        if got != want:
            raise _Failure(
                EXIT_MISMATCH,
                f"{cmd} {' '.join(map(str, nums))}: index answered {got!r}, oracle says {want!r}",
            )

    def run_line(self, ln: int, cmd: str, args: list) -> None:
        if cmd == "add":
            if self.dyn is None:
                raise _Failure(EXIT_INVALID, f"line {ln}: add requires --dynamic")
            path = os.path.join(self.script_dir, args[0])
            try:
                with open(path, "rb") as f:
                    data = f.read()
            except OSError as exc:
                raise _Failure(EXIT_IO, f"line {ln}: cannot read {args[0]!r}: {exc}") from exc
            try:
                self.dyn.add_document(data)
            except XdocError as exc:
                raise _Failure(EXIT_INVALID, f"line {ln}: {exc}") from exc
            return
        try:
            t0 = time.perf_counter_ns()
            answer = self._answer(cmd, args)
            elapsed = time.perf_counter_ns() - t0
        except XdocError as exc:
            raise _Failure(EXIT_INVALID, f"line {ln}: {exc}") from exc
        if self.verify:
            self._check(cmd, args, answer)
        if isinstance(answer, int):
            out = str(answer)
        else:
            out = _format_positions(answer)
        if self.bench:
            out += f"\t{elapsed}"
        print(out)


def _cmd_query(args) -> int:
    commands = _parse_script(args.script)
    if args.dynamic:
        index = None
    else:
        try:
            index = load_index(args.index)
        except OSError as exc:
            raise _Failure(EXIT_IO, f"cannot read index: {exc}") from exc
        except XdocError as exc:
            raise _Failure(EXIT_INVALID, str(exc)) from exc
    script_dir = os.path.dirname(os.path.abspath(args.script))
    runner = _QueryRunner(index, args.dynamic, args.verify, args.bench, script_dir)
    for ln, cmd, cargs in commands:
        runner.run_line(ln, cmd, cargs)
    return EXIT_OK


def _cmd_bench(args) -> int:
    from . import reporting

    try:
        exponents = tuple(int(s) for s in args.sizes.split(","))
    except ValueError:
        raise _Failure(EXIT_INVALID, f"bad --sizes value {args.sizes!r}") from None
    rows, paths = reporting.run_and_render(args.out, exponents, seed=args.seed)
    print(reporting.main_summary(rows))
    for p in paths:
        print(f"# wrote {p}", file=sys.stderr)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Failure(EXIT_INVALID, message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xdoc", description="Cross-document substring index.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="index a corpus directory or manifest")
    p_build.add_argument("corpus", help="corpus directory or manifest file")
    p_build.add_argument("index", help="output index file")
    p_build.set_defaults(func=_cmd_build)

    p_query = sub.add_parser("query", help="run a query script")
    source = p_query.add_mutually_exclusive_group(required=True)
    source.add_argument("--index", help="serialized index file")
    source.add_argument("--dynamic", action="store_true", help="start empty; script may add documents")
    p_query.add_argument("script", help="query script file")
    p_query.add_argument("--verify", action="store_true", help="cross-check each answer against the oracle")
    p_query.add_argument("--bench", action="store_true", help="append per-query wall time (ns) as a tab column")
    p_query.set_defaults(func=_cmd_query)

    p_bench = sub.add_parser("bench", help="scaling measurements with TSV and figures")
    p_bench.add_argument("--out", default="bench_out", help="output directory")
    p_bench.add_argument("--sizes", default="14,16,18", help="comma-separated log2 corpus sizes")
    p_bench.add_argument("--seed", type=int, default=7)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except _Failure as exc:
        print(f"xdoc: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
