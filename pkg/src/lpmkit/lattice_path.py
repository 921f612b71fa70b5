"""Lattice paths over {N, E}, the south-of order and the paths between two bounds.

Positions are 1-based throughout, matching the element ids of the matroid
ground set {1..n}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from .errors import InvalidPairError, InvalidPathError

NORTH = "N"
EAST = "E"


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        for i, c in enumerate(self.steps, start=1):
            if c not in (NORTH, EAST):
                raise InvalidPathError(f"invalid symbol {c!r} at position {i}")

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps

    @property
    def n(self) -> int:
        return len(self.steps)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """heights[k] = number of N-steps among the first k steps."""
        out = [0]
        for c in self.steps:
            out.append(out[-1] + (c == NORTH))
        return tuple(out)

    def h(self, k: int) -> int:
        return self.heights[k]

    def is_north(self, i: int) -> bool:
        return self.steps[i - 1] == NORTH

    def north_positions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.steps, start=1) if c == NORTH)

    def diagram(self) -> str:
        """Text staircase of the path, north at the top."""
        x = y = 0
        cells = {(0, 0)}
        for c in self.steps:
            if c == NORTH:
                y += 1
            else:
                x += 1
            cells.add((x, y))
        rows = []
        for row in range(y, -1, -1):
            rows.append("".join("o" if (col, row) in cells else "." for col in range(x + 1)))
        return "\n".join(rows)


def parse_path(text: str) -> LatticePath:
    return LatticePath(text)


def _as_path(p) -> LatticePath:
    return p if isinstance(p, LatticePath) else LatticePath(p)


def precedes(p, q) -> bool:
    """True iff p is south of q and both end at the same height."""
    p, q = _as_path(p), _as_path(q)
    if p.n != q.n:
        raise InvalidPairError(f"length mismatch: {p.n} != {q.n}")
    hp, hq = p.heights, q.heights
    return hp[-1] == hq[-1] and all(a <= b for a, b in zip(hp, hq))


@dataclass(frozen=True)
class PathPair:
    p: LatticePath
    q: LatticePath
    n: int = field(init=False)

    def __post_init__(self):
        p, q = _as_path(self.p), _as_path(self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        if p.n != q.n:
            raise InvalidPairError(f"length mismatch: {p.n} != {q.n}")
        if p.h(p.n) != q.h(q.n):
            raise InvalidPairError("p and q have no common endpoints")
        if not all(a <= b for a, b in zip(p.heights, q.heights)):
            raise InvalidPairError("p not south of q")
        object.__setattr__(self, "n", p.n)

    @classmethod
    def parse(cls, p: str, q: str) -> "PathPair":
        return cls(parse_path(p), parse_path(q))


def iter_between(pair: PathPair) -> Iterator[LatticePath]:
    """Depth-first walk of the corridor between p and q, E before N.

    Every prefix inside the corridor extends to a full path, so the walk
    never backtracks out of a dead end.
    """
    n = pair.n
    lo, hi = pair.p.heights, pair.q.heights
    stack = [("", 0)]
    while stack:
        word, c = stack.pop()
        k = len(word)
        if k == n:
            yield LatticePath(word)
            continue
        # pushed in reverse so that E is expanded first
        if lo[k + 1] <= c + 1 <= hi[k + 1]:
            stack.append((word + NORTH, c + 1))
        if lo[k + 1] <= c <= hi[k + 1]:
            stack.append((word + EAST, c))


def enumerate_between(pair: PathPair) -> list[LatticePath]:
    return list(iter_between(pair))


def count_between(pair: PathPair) -> int:
    """|P[p,q]| by a prefix-count dynamic program."""
    lo, hi = pair.p.heights, pair.q.heights
    ways = {0: 1}
    for k in range(1, pair.n + 1):
        nxt = {}
        for c, w in ways.items():
            for c2 in (c, c + 1):
                if lo[k] <= c2 <= hi[k]:
                    nxt[c2] = nxt.get(c2, 0) + w
        ways = nxt
    return sum(ways.values())


def path_to_base(r) -> frozenset[int]:
    return frozenset(_as_path(r).north_positions())


def base_to_path(B: Iterable[int], n: int) -> LatticePath:
    B = set(B)
    bad = [e for e in B if not (1 <= e <= n)]
    if bad:
        raise ValueError(f"element {min(bad)} outside 1..{n}")
    return LatticePath("".join(NORTH if i in B else EAST for i in range(1, n + 1)))


def all_paths(n: int) -> Iterator[LatticePath]:
    """All 2^n words, lexicographic with E < N."""
    for w in product(EAST + NORTH, repeat=n):
        yield LatticePath("".join(w))


def all_pairs(n: int) -> Iterator[PathPair]:
    """Every valid pair p <= q of length n, in lexicographic (p, q) order."""
    by_height: dict[int, list[LatticePath]] = {}
    for r in all_paths(n):
        by_height.setdefault(r.h(n), []).append(r)
    pairs = []
    for group in by_height.values():
        for p in group:
            for q in group:
                if all(a <= b for a, b in zip(p.heights, q.heights)):
                    pairs.append((p.steps, q.steps, p, q))
    pairs.sort(key=lambda t: (t[0], t[1]))
    for _, _, p, q in pairs:
        yield PathPair(p, q)
