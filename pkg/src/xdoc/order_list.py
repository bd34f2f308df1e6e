"""Order-maintenance list: O(1) order comparison, amortized-cheap insertion.

Two-level labeling. Items live in buckets of Theta(log n) items; each
bucket carries an integer label on a top-level list and each item an
integer label inside its bucket, so comparing two items compares the
pair (bucket label, item label). Inserting between neighbors takes the
midpoint label; when a gap inside a bucket is exhausted the bucket is
relabeled (O(log n)), when a bucket overflows it splits, and when the
top-level gap is exhausted every bucket is renumbered with a wide
stride (rare: a gap of 2**62 survives 62 midpoint insertions).
"""

from __future__ import annotations

from .errors import AnchorNotInList, ElementNotInList

BEFORE = -1
EQUAL = 0
AFTER = 1

_WITHIN = 1 << 32
_TOP = 1 << 62


class OrderItem:
    __slots__ = ("bucket", "label", "prev", "next", "ref")

    def __init__(self, bucket, label):
        self.bucket = bucket
        self.label = label
        self.prev = None
        self.next = None
        self.ref = None


class _Bucket:
    __slots__ = ("owner", "label", "first", "count", "prev", "next")

    def __init__(self, owner, label):
        self.owner = owner
        self.label = label
        self.first = None
        self.count = 0
        self.prev = None
        self.next = None


class OrderList:
    def __init__(self):
        self._first_bucket: _Bucket | None = None
        self._bucket_count = 0
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def __iter__(self):
        it = self.first_item()
        while it is not None:
            yield it
            it = it.next

    def first_item(self) -> OrderItem | None:
        b = self._first_bucket
        return b.first if b is not None else None

    def _check_member(self, item, exc):
        if (
            not isinstance(item, OrderItem)
            or item.bucket is None
            or item.bucket.owner is not self
        ):
            raise exc("item does not belong to this list")

    def order(self, a: OrderItem, b: OrderItem) -> int:
        """BEFORE, EQUAL or AFTER for a relative to b. O(1)."""
        self._check_member(a, ElementNotInList)
        self._check_member(b, ElementNotInList)
        if a is b:
            return EQUAL
        ka = (a.bucket.label, a.label)
        kb = (b.bucket.label, b.label)
        return BEFORE if ka < kb else AFTER

    def insert_first(self) -> OrderItem:
        """Insert at the very front (the designated origin when empty)."""
        if self._first_bucket is None:
            b = _Bucket(self, 0)
            self._first_bucket = b
            self._bucket_count = 1
            it = OrderItem(b, 0)
            b.first = it
            b.count = 1
            self._size = 1
            return it
        return self.insert_before(self._first_bucket.first)

    def insert_after(self, anchor: OrderItem) -> OrderItem:
        self._check_member(anchor, AnchorNotInList)
        b = anchor.bucket
        nxt = anchor.next
        if nxt is None or nxt.bucket is not b:
            label = anchor.label + _WITHIN
        else:
            gap = nxt.label - anchor.label
            if gap < 2:
                self._relabel_bucket(b)
                return self.insert_after(anchor)
            label = anchor.label + gap // 2
        it = OrderItem(b, label)
        it.prev = anchor
        it.next = nxt
        anchor.next = it
        if nxt is not None:
            nxt.prev = it
        b.count += 1
        self._size += 1
        if b.count > self._capacity():
            self._split(b)
        return it

    def insert_before(self, anchor: OrderItem) -> OrderItem:
        self._check_member(anchor, AnchorNotInList)
        b = anchor.bucket
        prv = anchor.prev
        if prv is None or prv.bucket is not b:
            label = anchor.label - _WITHIN
        else:
            gap = anchor.label - prv.label
            if gap < 2:
                self._relabel_bucket(b)
                return self.insert_before(anchor)
            label = prv.label + gap // 2
        it = OrderItem(b, label)
        it.prev = prv
        it.next = anchor
        anchor.prev = it
        if prv is not None:
            prv.next = it
        if b.first is anchor:
            b.first = it
        b.count += 1
        self._size += 1
        if b.count > self._capacity():
            self._split(b)
        return it

    def _capacity(self) -> int:
        return max(16, 2 * self._size.bit_length())

    def _relabel_bucket(self, b: _Bucket) -> None:
        it = b.first
        label = 0
        for _ in range(b.count):
            it.label = label
            label += _WITHIN
            it = it.next

    def _split(self, b: _Bucket) -> None:
        keep = b.count // 2
        it = b.first
        for _ in range(keep - 1):
            it = it.next
        # it is the last item staying in b
        first2 = it.next
        if b.next is None:
            label2 = b.label + _TOP
        else:
            gap = b.next.label - b.label
            if gap < 2:
                self._renumber_buckets()
                self._split(b)
                return
            label2 = b.label + gap // 2
        b2 = _Bucket(self, label2)
        b2.first = first2
        b2.count = b.count - keep
        b.count = keep
        b2.prev = b
        b2.next = b.next
        if b.next is not None:
            b.next.prev = b2
        b.next = b2
        self._bucket_count += 1
        cur = first2
        for _ in range(b2.count):
            cur.bucket = b2
            cur = cur.next
        self._relabel_bucket(b2)

    def _renumber_buckets(self) -> None:
        b = self._first_bucket
        label = 0
        while b is not None:
            b.label = label
            label += _TOP
            b = b.next
