"""Constant-time range-minimum queries and rank-pair LCP lookup."""

from __future__ import annotations

from .errors import RankOutOfRange
from .suffixes import GsaIndex


class RangeMinQuery:
    """Sparse table of doubling-window minima over a fixed integer array.

    Build is O(L log L) time and space; each query is O(1) and returns
    the leftmost index attaining the minimum of a closed 1-based range.
    """

    __slots__ = ("_v", "_table")

    def __init__(self, values):
        v = list(values)
        if not v:
            raise ValueError("need a non-empty array")
        self._v = v
        n = len(v)
        table = [list(range(n))]
        k = 1
        while (1 << k) <= n:
            prev = table[-1]
            half = 1 << (k - 1)
            cur = [0] * (n - (1 << k) + 1)
            for i in range(len(cur)):
                a = prev[i]
                b = prev[i + half]
                cur[i] = a if v[a] <= v[b] else b
            table.append(cur)
            k += 1
        self._table = table

    def __len__(self) -> int:
        return len(self._v)

    def argmin(self, l: int, r: int) -> int:
        """1-based index of the leftmost minimum on [l..r]."""
        if not 1 <= l <= r <= len(self._v):
            raise ValueError(f"bad range [{l}..{r}] for array of length {len(self._v)}")
        i = l - 1
        j = r - 1
        k = (j - i + 1).bit_length() - 1
        row = self._table[k]
        a = row[i]
        b = row[j - (1 << k) + 1]
        # equal values: the left window holds every earlier occurrence
        best = a if self._v[a] <= self._v[b] else b
        return best + 1

    def min_value(self, l: int, r: int) -> int:
        return self._v[self.argmin(l, r) - 1]


def build_rmq(values) -> RangeMinQuery:
    return RangeMinQuery(values)


def lcp_between(gsa: GsaIndex, r1: int, r2: int) -> int:
    """Common prefix length of the rank-r1 and rank-r2 suffixes.

    A rank paired with itself yields the suffix's own remaining length,
    which keeps self-comparisons uniform with neighbor comparisons.
    """
    n = gsa.n
    if not (1 <= r1 <= n and 1 <= r2 <= n):
        raise RankOutOfRange(f"ranks ({r1}, {r2}) outside 1..{n}")
    if r1 == r2:
        return gsa.suffix_length(r1)
    if r1 > r2:
        r1, r2 = r2, r1
    rm = gsa._lcp_rmq
    if rm is None:
        rm = RangeMinQuery(gsa.lcp)
        gsa._lcp_rmq = rm
    return rm.min_value(r1 + 1, r2)
