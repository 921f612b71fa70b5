"""Closed-form structure of strong lattice path matroids.

Everything here reads the answer off the two bounding paths; the
``check`` flags (or LPMKIT_ORACLE_LEVEL=oracle) re-derive it from the
matching oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _config
from .errors import (
    HasLoopsError,
    HasParallelError,
    NotNorthStepError,
    PreconditionError,
    RankTooSmallError,
)
from .lattice_path import PathPair
from .matroid_engine import COLINE_REPORT_SCHEMA, ColineReport, closure_mask, coline_report
from .oracle import from_mask, to_mask
from .transversal import StrongLpm, build_lpm


def _prefix(j: int) -> int:
    return (1 << j) - 1 if j > 0 else 0


def _check_element(M: StrongLpm, j: int, low: int = 1):
    if not (low <= j <= M.n):
        raise ValueError(f"element {j} outside {low}..{M.n}")


def rank_prefix(M: StrongLpm, j: int) -> int:
    """rank({1..j}) = number of N-steps of q among its first j steps."""
    _check_element(M, j, low=0)
    return M.q.h(j)


def is_loop_fast(M: StrongLpm, j: int) -> bool:
    _check_element(M, j)
    return M.p.h(j - 1) == M.q.h(j)


def is_coloop_fast(M: StrongLpm, j: int) -> bool:
    # every path between p and q is forced north at step j
    _check_element(M, j)
    return M.p.h(j) == M.q.h(j - 1) + 1


def is_parallel_fast(M: StrongLpm, j: int, k: int) -> bool:
    _check_element(M, j)
    _check_element(M, k)
    if not j < k:
        raise ValueError(f"expected j < k, got {j}, {k}")
    for e in (j, k):
        if is_loop_fast(M, e):
            raise HasLoopsError([e], f"element {e} is a loop")
    hp, hq = M.p.h, M.q.h
    return hp(j - 1) == hp(k - 1) == hq(j) - 1 == hq(k) - 1


def loops_fast(M: StrongLpm) -> frozenset[int]:
    return frozenset(j for j in range(1, M.n + 1) if is_loop_fast(M, j))


def coloops_fast(M: StrongLpm) -> frozenset[int]:
    return frozenset(j for j in range(1, M.n + 1) if is_coloop_fast(M, j))


def parallel_pairs_fast(M: StrongLpm) -> list[tuple[int, int]]:
    nonloops = [j for j in range(1, M.n + 1) if not is_loop_fast(M, j)]
    return [(j, k) for a, j in enumerate(nonloops) for k in nonloops[a + 1:]
            if is_parallel_fast(M, j, k)]


def require_simple(M: StrongLpm, min_rank: int = 2):
    lp = loops_fast(M)
    if lp:
        raise HasLoopsError(lp)
    par = parallel_pairs_fast(M)
    if par:
        raise HasParallelError(par[0])
    if M.m < min_rank:
        raise RankTooSmallError(f"rank {M.m} < {min_rank}")


@dataclass(frozen=True)
class PrefixFlatWitness:
    j: int
    prefix: frozenset[int]
    rank: int
    closed: bool
    # k -> rank(prefix + k), one entry per k >= j
    raised: tuple[tuple[int, int], ...]

    @property
    def holds(self) -> bool:
        return self.closed and all(r == self.rank + 1 for _, r in self.raised)


def prefix_is_flat(M: StrongLpm, j: int) -> PrefixFlatWitness:
    """Check that {1..j-1} is closed and every k >= j raises its rank."""
    _check_element(M, j)
    lp = loops_fast(M)
    if lp:
        raise HasLoopsError(lp)
    if not M.q.is_north(j):
        raise NotNorthStepError(f"step {j} of q is E")
    O = M.oracle
    X = _prefix(j - 1)
    r = O.rank(X)
    raised = tuple((k, O.rank(X | (1 << (k - 1)))) for k in range(j, M.n + 1))
    return PrefixFlatWitness(j, from_mask(X), r, closure_mask(O, X) == X, raised)


WESTERN_SCHEMA = {
    **COLINE_REPORT_SCHEMA,
    "required": COLINE_REPORT_SCHEMA["required"] + ["j1", "j2"],
    "properties": {**COLINE_REPORT_SCHEMA["properties"],
                   "j1": {"type": "integer"}, "j2": {"type": "integer"}},
}


@dataclass(frozen=True)
class WesternColineResult:
    j1: int
    j2: int
    coline: frozenset[int]
    prefix_copoint: frozenset[int]
    prefix_copoint_kind: str
    eastern_simple_copoints: tuple[frozenset[int], ...]
    report: ColineReport

    def to_dict(self) -> dict:
        d = self.report.to_dict()
        d["j1"] = self.j1
        d["j2"] = self.j2
        return d


def western_coline(M: StrongLpm, check: bool | None = None) -> WesternColineResult:
    require_simple(M)
    north = M.q.north_positions()
    j1, j2 = north[-1], north[-2]
    W = frozenset(range(1, j2))
    X = frozenset(range(1, j1))
    kind = "multiple" if j1 - j2 >= 2 else "simple"
    eastern = tuple(W | {k} for k in range(j1, M.n + 1))
    res = WesternColineResult(j1, j2, W, X, kind, eastern, coline_report(M, W))
    if _config.checking(check):
        _verify_western(M, res)
    return res


def _verify_western(M: StrongLpm, res: WesternColineResult):
    O = M.oracle
    r = O.r
    W = to_mask(res.coline)
    X = to_mask(res.prefix_copoint)
    problems = []
    if O.rank(W) != r - 2 or closure_mask(O, W) != W:
        problems.append("W is not a coline")
    if O.rank(X) != r - 1 or closure_mask(O, X) != X:
        problems.append("prefix set is not a copoint")
    for Y in res.eastern_simple_copoints:
        Ym = to_mask(Y)
        if O.rank(Ym) != r - 1 or closure_mask(O, Ym) != Ym:
            problems.append(f"{sorted(Y)} is not a copoint")
    listed = {Y for Y, _ in res.report.copoints}
    if res.prefix_copoint not in listed or not set(res.eastern_simple_copoints) <= listed:
        problems.append("predicted copoints missing from the closure report")
    if problems:
        raise AssertionError(f"{M!r}: " + "; ".join(problems))


def truncate_last(M: StrongLpm) -> StrongLpm:
    """Contract the coloop n by dropping the last step of both paths."""
    if not (M.q.is_north(M.n) and M.p.is_north(M.n)):
        raise PreconditionError("last step is not forced north")
    return build_lpm(PathPair.parse(M.p.steps[:-1], M.q.steps[:-1]))


def quite_simple_coline(M: StrongLpm) -> frozenset[int]:
    """A coline with more simple than multiple copoints.

    j1 < n: the Western coline. Otherwise n is a coloop; take
    {1..n-1} minus the least other coloop if there is one, else recurse
    on M/n and add n back.
    """
    require_simple(M)
    return _qsc(M)


def _qsc(M: StrongLpm) -> frozenset[int]:
    n = M.n
    north = M.q.north_positions()
    j1, j2 = north[-1], north[-2]
    if j1 < n:
        return frozenset(range(1, j2))
    others = sorted(coloops_fast(M) - {n})
    if others:
        return frozenset(range(1, n)) - {others[0]}
    return _qsc(truncate_last(M)) | {n}


def rank2_lpm(size: int) -> StrongLpm:
    """U_{2,size} as M[E..ENN, NNE..E]."""
    if size < 2:
        raise ValueError("size must be at least 2")
    return build_lpm(PathPair.parse("E" * (size - 2) + "NN", "NN" + "E" * (size - 2)))
