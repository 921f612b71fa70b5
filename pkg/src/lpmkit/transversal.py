"""Strong lattice path matroids as transversal matroids of interval families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import _config
from .lattice_path import PathPair, iter_between, path_to_base
from .oracle import RankOracle, to_mask
from .errors import InvalidPairError


_INTS = {"type": "array", "items": {"type": "integer"}}

# JSON schema of StrongLpm.to_dict; other modules declare theirs next to the producer
LPM_SCHEMA = {
    "type": "object",
    "required": ["n", "p", "q", "presentation"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "p": {"type": "string", "pattern": "^[NE]*$"},
        "q": {"type": "string", "pattern": "^[NE]*$"},
        "presentation": {"type": "array", "items": {**_INTS, "minItems": 2, "maxItems": 2}},
    },
}


@dataclass(frozen=True)
class StrongLpm:
    pair: PathPair
    n: int
    m: int
    presentation: tuple[tuple[int, int], ...]

    @property
    def p(self):
        return self.pair.p

    @property
    def q(self):
        return self.pair.q

    def level_set(self, i: int) -> frozenset[int]:
        lo, hi = self.presentation[i - 1]
        return frozenset(range(lo, hi + 1))

    @cached_property
    def _level_masks(self) -> tuple[int, ...]:
        # element j -> bitmask of levels i with j in A_i
        out = [0] * (self.n + 1)
        for i, (lo, hi) in enumerate(self.presentation):
            for j in range(lo, hi + 1):
                out[j] |= 1 << i
        return tuple(out)

    def _matching_size(self, X: int) -> int:
        adj = self._level_masks
        match_of_level = [0] * self.m  # element matched to level, 0 = free

        def augment(j, seen):
            free = adj[j] & ~seen[0]
            while free:
                low = free & -free
                free ^= low
                seen[0] |= low
                i = low.bit_length() - 1
                if match_of_level[i] == 0 or augment(match_of_level[i], seen):
                    match_of_level[i] = j
                    return True
            return False

        size = 0
        j = 1
        while X:
            if X & 1 and augment(j, [0]):
                size += 1
            X >>= 1
            j += 1
        return size

    @cached_property
    def oracle(self) -> RankOracle:
        return RankOracle(self.n, self._matching_size)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p.steps,
            "q": self.q.steps,
            "presentation": [[lo, hi] for lo, hi in self.presentation],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StrongLpm":
        M = build_lpm(PathPair.parse(d["p"], d["q"]))
        if d.get("n", M.n) != M.n:
            raise InvalidPairError(f"n={d['n']} does not match path length {M.n}")
        if "presentation" in d and [list(x) for x in d["presentation"]] != [list(x) for x in M.presentation]:
            raise InvalidPairError("presentation does not match the paths")
        return M

    def __repr__(self):
        return f"M[{self.p.steps},{self.q.steps}]"


def presentation_by_paths(pair: PathPair) -> tuple[frozenset[int], ...]:
    """Level sets read off from every path between p and q (exponential)."""
    m = pair.q.h(pair.n)
    sets = [set() for _ in range(m)]
    for r in iter_between(pair):
        for i, j in enumerate(r.north_positions()):
            sets[i].add(j)
    return tuple(frozenset(s) for s in sets)


def build_lpm(pair: PathPair, check: bool | None = None) -> StrongLpm:
    """M[p,q] with A_i = {j : h_p(j-1) < i <= h_q(j)} stored as intervals."""
    if not isinstance(pair, PathPair):
        pair = PathPair(*pair)
    n = pair.n
    hp, hq = pair.p.heights, pair.q.heights
    m = hq[n]
    pres = []
    for i in range(1, m + 1):
        members = [j for j in range(1, n + 1) if hp[j - 1] < i <= hq[j]]
        lo, hi = members[0], members[-1]
        assert len(members) == hi - lo + 1
        pres.append((lo, hi))
    M = StrongLpm(pair, n, m, tuple(pres))
    if _config.checking(check) and n <= 10:
        expected = presentation_by_paths(pair)
        got = tuple(M.level_set(i) for i in range(1, m + 1))
        if got != expected:
            raise AssertionError(f"interval presentation {got} disagrees with path semantics {expected}")
    return M


def lpm(p: str, q: str, check: bool | None = None) -> StrongLpm:
    return build_lpm(PathPair.parse(p, q), check=check)


def is_independent(M: StrongLpm, X) -> bool:
    mask = to_mask(X, M.n)
    return M.oracle.rank(mask) == bin(mask).count("1")


def rank(M: StrongLpm, X) -> int:
    return M.oracle.rank(to_mask(X, M.n))


def bases(M: StrongLpm) -> list[frozenset[int]]:
    """Bases in the order of their paths (lexicographic, E < N)."""
    return [path_to_base(r) for r in iter_between(M.pair)]


def bases_by_matching(M: StrongLpm) -> list[frozenset[int]]:
    """Reference base family from the matching side alone.

    Grows partial transversals in increasing element order, one augmenting
    search per added element, and keeps those that reach size m.
    """
    adj = M._level_masks
    n, m = M.n, M.m
    out = []

    def augment(match, j, seen):
        free = adj[j] & ~seen[0]
        while free:
            low = free & -free
            free ^= low
            seen[0] |= low
            i = low.bit_length() - 1
            if match[i] == 0 or augment(match, match[i], seen):
                match[i] = j
                return True
        return False

    def grow(start, chosen, match):
        if len(chosen) == m:
            out.append(frozenset(chosen))
            return
        for j in range(start, n - (m - len(chosen)) + 2):
            trial = list(match)
            if augment(trial, j, [0]):
                chosen.append(j)
                grow(j + 1, chosen, trial)
                chosen.pop()

    grow(1, [], [0] * m)
    return out


__all__ = [
    "StrongLpm",
    "build_lpm",
    "lpm",
    "is_independent",
    "rank",
    "bases",
    "bases_by_matching",
    "presentation_by_paths",
]
