"""LCP array over the states of a Wheeler DFA.

Every state ``i`` has a smallest and a largest incoming string, read
backwards towards the initial state (which loops on ``#`` forever).  They are
obtained by always following the smallest, respectively largest,
predecessor.  The array interleaves, in Wheeler order, the common-prefix
lengths of (min_i, max_i) and (max_i, min_{i+1}) and is indexed ``2..2n``.

Two distinct such strings never agree on ``3n`` or more characters, so
streams are compared up to that cap and full agreement is stored as ``INF``.
"""
from __future__ import annotations

import math
from functools import cached_property
from itertools import islice
from typing import Callable, Iterator

from .automaton import WheelerDFA, max_predecessor, min_predecessor
from .rmq import RangeMinQuery

INF = math.inf


def _stream(A: WheelerDFA, i: int, step: Callable[[WheelerDFA, int], int]) -> Iterator[str]:
    while True:
        yield A.label(i)
        i = step(A, i)


def min_stream(A: WheelerDFA, i: int) -> Iterator[str]:
    """Lazily yield the smallest incoming string of state ``i``."""
    return _stream(A, i, min_predecessor)


def max_stream(A: WheelerDFA, i: int) -> Iterator[str]:
    return _stream(A, i, max_predecessor)


def min_string_prefix(A: WheelerDFA, i: int, length: int) -> str:
    return "".join(islice(min_stream(A, i), length))


def max_string_prefix(A: WheelerDFA, i: int, length: int) -> str:
    return "".join(islice(max_stream(A, i), length))


def stream_lcp(left: Iterator[str], right: Iterator[str], cap: int):
    """Common-prefix length of two streams, ``INF`` if they agree on ``cap`` characters."""
    for k, (a, b) in enumerate(zip(left, right)):
        if k >= cap:
            break
        if a != b:
            return k
    return INF


class WheelerLcpArray:
    """The ``2n - 1`` interleaved LCP values, addressed by positions ``2..2n``.

    ``self[2 * i]`` is lcp(min_i, max_i) and ``self[2 * i + 1]`` is
    lcp(max_i, min_{i+1}).
    """

    def __init__(self, values, n: int, cap: int):
        values = tuple(values)
        if len(values) != 2 * n - 1:
            raise ValueError(f"expected {2 * n - 1} values, got {len(values)}")
        self.values = values
        self.n = n
        self.cap = cap

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k: int):
        if not 2 <= k <= 2 * self.n:
            raise IndexError(f"position {k} outside [2, {2 * self.n}]")
        return self.values[k - 2]

    def __eq__(self, other):
        if not isinstance(other, WheelerLcpArray):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self):
        return f"WheelerLcpArray(n={self.n}, values={list(self.values)})"

    @cached_property
    def rmq(self) -> RangeMinQuery:
        return RangeMinQuery(self.values, origin=2)

    def entries(self):
        """Yield ``(position, kind, left state, right state, value)`` rows."""
        for k in range(2, 2 * self.n + 1):
            i = k // 2
            if k % 2 == 0:
                yield k, "min-max", i, i, self[k]
            else:
                yield k, "max-min", i, i + 1, self[k]


def format_value(v) -> str:
    return "inf" if v == INF else str(v)


def build_lcp_array(A: WheelerDFA) -> WheelerLcpArray:
    """Compute the LCP array of ``A`` by direct stream comparison."""
    n = A.n
    cap = 3 * n
    values = []
    for i in range(1, n + 1):
        values.append(stream_lcp(min_stream(A, i), max_stream(A, i), cap))
        if i < n:
            values.append(stream_lcp(max_stream(A, i), min_stream(A, i + 1), cap))
    return WheelerLcpArray(values, n, cap)
