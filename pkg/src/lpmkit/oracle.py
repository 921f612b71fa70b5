"""Rank oracles over bitmask subsets.

Element e of the ground set {1..n} is bit e-1 of a mask. Public helpers
accept either an int mask or any iterable of element ids.
"""

from __future__ import annotations

from typing import Callable, Iterable

MAX_N = 64


def to_mask(X, n: int | None = None) -> int:
    if isinstance(X, int):
        if n is not None and X >> n:
            raise ValueError(f"mask {X:#x} has elements outside 1..{n}")
        return X
    m = 0
    for e in X:
        if e < 1 or (n is not None and e > n):
            raise ValueError(f"element {e} outside 1..{n}")
        m |= 1 << (e - 1)
    return m


def from_mask(m: int) -> frozenset[int]:
    out = []
    e = 1
    while m:
        if m & 1:
            out.append(e)
        m >>= 1
        e += 1
    return frozenset(out)


def elements(m: int) -> list[int]:
    return sorted(from_mask(m))


def popcount(m: int) -> int:
    return bin(m).count("1")


def bits(m: int):
    """Yield the single-bit masks of m in increasing element order."""
    while m:
        low = m & -m
        yield low
        m ^= low


class RankOracle:
    """A rank function on subsets of {1..n}, memoized per instance.

    ``labels[i]`` is the original name of element i+1; minors carry the
    labels of the matroid they came from.
    """

    def __init__(self, n: int, rank_fn: Callable[[int], int], labels: Iterable[int] | None = None):
        if n > MAX_N:
            raise ValueError(f"ground sets larger than {MAX_N} are not supported")
        self.n = n
        self.full = (1 << n) - 1
        self._rank_fn = rank_fn
        self._memo: dict[int, int] = {}
        self.labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        if len(self.labels) != n:
            raise ValueError("labels must name every element")

    def rank(self, X) -> int:
        m = to_mask(X, self.n)
        r = self._memo.get(m)
        if r is None:
            r = self._rank_fn(m)
            self._memo[m] = r
        return r

    @property
    def r(self) -> int:
        return self.rank(self.full)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def __repr__(self):
        return f"RankOracle(n={self.n}, rank={self.r})"
