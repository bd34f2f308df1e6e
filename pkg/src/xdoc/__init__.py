"""Cross-document substring queries without materializing the pattern.

A corpus of documents is indexed so that, given a pattern spelled as a
slice of one document (document k, positions i..j) and a target
document l, the occurrences of that slice inside l can be counted or
reported, and the set of documents containing it can be computed —
all from coordinates alone. A frozen-corpus index and a growing-corpus
index expose the same query surface.
"""

from .corpus import Corpus, SubstringRef
from .doc_index import DocIndex
from .dynamic_index import DynamicIndex
from .errors import (
    AnchorNotInList,
    ElementNotInList,
    EmptyDocument,
    InvalidSubstring,
    NodeNotInTree,
    OrderViolation,
    OutOfRange,
    RankOutOfRange,
    SentinelInText,
    UnknownDocument,
    XdocError,
)
from .oracle import naive_count, naive_docs, naive_report
from .serialize import IndexFormatError, load_index, save_index
from .static_index import StaticIndex

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "SubstringRef",
    "StaticIndex",
    "DocIndex",
    "DynamicIndex",
    "load_index",
    "save_index",
    "naive_count",
    "naive_report",
    "naive_docs",
    "XdocError",
    "EmptyDocument",
    "SentinelInText",
    "UnknownDocument",
    "OutOfRange",
    "InvalidSubstring",
    "RankOutOfRange",
    "NodeNotInTree",
    "AnchorNotInList",
    "ElementNotInList",
    "OrderViolation",
    "IndexFormatError",
    "__version__",
]
