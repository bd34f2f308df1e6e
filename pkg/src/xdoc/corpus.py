"""Document storage and substring coordinates.

All positions in the public API are 1-based and inclusive. Byte 0 is
reserved as the internal suffix-structure terminator and may not occur
in document text; every other byte value is allowed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyDocument,
    InvalidSubstring,
    OutOfRange,
    SentinelInText,
    UnknownDocument,
)

SENTINEL = 0


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        return text.encode("utf-8")
    return bytes(text)


@dataclass(frozen=True)
class SubstringRef:
    """Coordinates of one substring: a document id and an inclusive span."""

    doc: int
    i: int
    j: int

    @property
    def length(self) -> int:
        return self.j - self.i + 1


class Corpus:
    """Ordered, append-only collection of byte documents.

    Document ids are assigned 1, 2, ... in insertion order and never
    change. Reads are safe from any number of threads; add_document
    requires exclusive access (single writer, no concurrent reader).
    """

    def __init__(self):
        self._texts: list[bytes] = []

    def __len__(self) -> int:
        return len(self._texts)

    @property
    def total_size(self) -> int:
        return sum(len(t) for t in self._texts)

    def add_document(self, text) -> int:
        """Append one document and return its id."""
        data = _as_bytes(text)
        if not data:
            raise EmptyDocument("documents must be non-empty")
        if SENTINEL in data:
            raise SentinelInText("byte 0 is reserved and may not occur in documents")
        self._texts.append(data)
        return len(self._texts)

    def text(self, doc: int) -> bytes:
        if not isinstance(doc, int) or not 1 <= doc <= len(self._texts):
            raise UnknownDocument(f"no document with id {doc!r}")
        return self._texts[doc - 1]

    def length(self, doc: int) -> int:
        return len(self.text(doc))

    def document_ids(self) -> range:
        return range(1, len(self._texts) + 1)

    def substring(self, ref: SubstringRef) -> bytes:
        """Materialize the substring named by ref (query code never does this)."""
        text = self.text(ref.doc)
        if not 1 <= ref.i <= ref.j <= len(text):
            raise OutOfRange(
                f"span [{ref.i}..{ref.j}] leaves document {ref.doc} of length {len(text)}"
            )
        return text[ref.i - 1 : ref.j]

    def check_ref(self, ref: SubstringRef) -> None:
        """Validate query coordinates; queries call this before any work."""
        text = self.text(ref.doc)
        if not 1 <= ref.i <= ref.j <= len(text):
            raise InvalidSubstring(
                f"span [{ref.i}..{ref.j}] is not a substring of document "
                f"{ref.doc} (length {len(text)})"
            )
