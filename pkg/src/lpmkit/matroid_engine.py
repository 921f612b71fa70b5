"""Generic matroid machinery on top of a RankOracle.

Flats are found by ascending from cl(empty) through closures of F + e.
The ``*_bruteforce`` functions scan all 2^n subsets and exist to check the
fast paths in tests.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .lattice_path import PathPair
from .oracle import RankOracle, bits, elements, from_mask, popcount, to_mask
from .transversal import StrongLpm, build_lpm

log = logging.getLogger(__name__)


def as_oracle(M) -> RankOracle:
    if isinstance(M, RankOracle):
        return M
    if isinstance(M, StrongLpm):
        return M.oracle
    raise TypeError(f"expected a RankOracle or StrongLpm, got {type(M).__name__}")


# -- closure and friends (mask level) ---------------------------------------

def closure_mask(O: RankOracle, X: int) -> int:
    r = O.rank(X)
    out = X
    for e in bits(O.full & ~X):
        if O.rank(X | e) == r:
            out |= e
    return out


def closure(M, X) -> frozenset[int]:
    O = as_oracle(M)
    return from_mask(closure_mask(O, to_mask(X, O.n)))


def is_flat(M, X) -> bool:
    O = as_oracle(M)
    m = to_mask(X, O.n)
    return closure_mask(O, m) == m


def loops(M) -> frozenset[int]:
    O = as_oracle(M)
    return frozenset(e for e in range(1, O.n + 1) if O.rank(1 << (e - 1)) == 0)


def coloops(M) -> frozenset[int]:
    O = as_oracle(M)
    r = O.r
    return frozenset(e for e in range(1, O.n + 1) if O.rank(O.full & ~(1 << (e - 1))) == r - 1)


def parallel_pairs(M) -> list[tuple[int, int]]:
    O = as_oracle(M)
    nonloops = [e for e in range(1, O.n + 1) if O.rank(1 << (e - 1)) == 1]
    return [(j, k) for j, k in combinations(nonloops, 2)
            if O.rank((1 << (j - 1)) | (1 << (k - 1))) == 1]


def is_simple(M) -> bool:
    return not loops(M) and not parallel_pairs(M)


# -- flats ------------------------------------------------------------------

def flats_by_rank(O: RankOracle, max_rank: int | None = None) -> list[list[int]]:
    """Flats grouped by rank as sorted mask lists, up to ``max_rank``."""
    top = O.r if max_rank is None else min(max_rank, O.r)
    level = [closure_mask(O, 0)]
    out = [level]
    for _ in range(top):
        nxt = set()
        for F in level:
            rest = O.full & ~F
            while rest:
                e = rest & -rest
                G = closure_mask(O, F | e)
                nxt.add(G)
                rest &= ~G
        level = sorted(nxt)
        out.append(level)
    return out


def flats(M) -> list[frozenset[int]]:
    O = as_oracle(M)
    return [from_mask(F) for level in flats_by_rank(O) for F in level]


def flats_bruteforce(M) -> list[frozenset[int]]:
    O = as_oracle(M)
    found = [X for X in range(O.full + 1) if closure_mask(O, X) == X]
    found.sort(key=lambda X: (O.rank(X), X))
    return [from_mask(X) for X in found]


def copoint_masks(O: RankOracle) -> list[int]:
    if O.r < 1:
        return []
    return flats_by_rank(O, O.r - 1)[O.r - 1]


def copoints(M) -> list[frozenset[int]]:
    return [from_mask(H) for H in copoint_masks(as_oracle(M))]


_INTS = {"type": "array", "items": {"type": "integer", "minimum": 1}}

COLINE_REPORT_SCHEMA = {
    "type": "object",
    "required": ["coline", "copoints", "quite_simple"],
    "properties": {
        "coline": _INTS,
        "copoints": {"type": "array", "items": {
            "type": "object",
            "required": ["set", "kind"],
            "properties": {"set": _INTS, "kind": {"enum": ["simple", "multiple"]}},
        }},
        "quite_simple": {"type": "boolean"},
    },
}


@dataclass(frozen=True)
class ColineReport:
    coline: frozenset[int]
    copoints: tuple[tuple[frozenset[int], str], ...]
    quite_simple: bool

    @property
    def n_simple(self) -> int:
        return sum(kind == "simple" for _, kind in self.copoints)

    @property
    def n_multiple(self) -> int:
        return sum(kind == "multiple" for _, kind in self.copoints)

    def to_dict(self) -> dict:
        return {
            "coline": sorted(self.coline),
            "copoints": [{"set": sorted(Y), "kind": kind} for Y, kind in self.copoints],
            "quite_simple": self.quite_simple,
        }


class ColineList(list):
    """List of coline reports; ``rank_deficient`` flags rank(E) < 2."""

    rank_deficient = False


def copoints_on_mask(O: RankOracle, W: int) -> list[int]:
    found = set()
    rest = O.full & ~W
    while rest:
        e = rest & -rest
        Y = closure_mask(O, W | e)
        found.add(Y)
        rest &= ~Y
    return sorted(found)


def coline_report(M, W) -> ColineReport:
    """Classify the copoints on the coline W as simple or multiple."""
    O = as_oracle(M)
    Wm = to_mask(W, O.n)
    if O.rank(Wm) != O.r - 2 or closure_mask(O, Wm) != Wm:
        raise PreconditionError(f"{sorted(from_mask(Wm))} is not a coline")
    cps = []
    for Y in copoints_on_mask(O, Wm):
        kind = "simple" if popcount(Y & ~Wm) == 1 else "multiple"
        cps.append((from_mask(Y), kind))
    cps.sort(key=lambda t: (min(t[0] - from_mask(Wm)), sorted(t[0])))
    n_simple = sum(k == "simple" for _, k in cps)
    return ColineReport(from_mask(Wm), tuple(cps), n_simple > len(cps) - n_simple)


def colines(M) -> ColineList:
    O = as_oracle(M)
    out = ColineList()
    if O.r < 2:
        out.rank_deficient = True
        log.debug("rank %d < 2: no colines", O.r)
        return out
    for W in flats_by_rank(O, O.r - 2)[O.r - 2]:
        out.append(coline_report(O, W))
    return out


# -- minors -----------------------------------------------------------------

def _lifter(O: RankOracle, keep: int):
    """Map masks over the kept elements (renumbered 1..k) to parent masks."""
    pos = [b for b in bits(keep)]
    k = len(pos)
    if k <= 16:
        table = [0] * (1 << k)
        for X in range(1, 1 << k):
            low = X & -X
            table[X] = table[X ^ low] | pos[low.bit_length() - 1]
        return table.__getitem__

    def lift(X):
        out = 0
        i = 0
        while X:
            if X & 1:
                out |= pos[i]
            X >>= 1
            i += 1
        return out

    return lift


def _kept_labels(O: RankOracle, keep: int):
    return [O.labels[e - 1] for e in elements(keep)]


def restrict(M, keep) -> RankOracle:
    O = as_oracle(M)
    keep = to_mask(keep, O.n)
    lift = _lifter(O, keep)
    return RankOracle(popcount(keep), lambda X: O.rank(lift(X)), _kept_labels(O, keep))


def delete(M, S) -> RankOracle:
    O = as_oracle(M)
    S = to_mask(S, O.n)
    return restrict(O, O.full & ~S)


def contract(M, S) -> RankOracle:
    O = as_oracle(M)
    S = to_mask(S, O.n)
    keep = O.full & ~S
    lift = _lifter(O, keep)
    rS = O.rank(S)
    return RankOracle(popcount(keep), lambda X: O.rank(lift(X) | S) - rS, _kept_labels(O, keep))


def minor(M, contract_set=0, delete_set=0) -> RankOracle:
    """M / C \\ D for disjoint C and D, relabelled onto 1..k in order."""
    O = as_oracle(M)
    C, D = to_mask(contract_set, O.n), to_mask(delete_set, O.n)
    if C & D:
        raise ValueError("contracted and deleted sets must be disjoint")
    keep = O.full & ~(C | D)
    lift = _lifter(O, keep)
    rC = O.rank(C)
    return RankOracle(popcount(keep), lambda X: O.rank(lift(X) | C) - rC, _kept_labels(O, keep))


def dual(M) -> RankOracle:
    O = as_oracle(M)
    full, r = O.full, O.r
    return RankOracle(O.n, lambda X: popcount(X) + O.rank(full & ~X) - r, O.labels)


def direct_sum(M1, M2) -> RankOracle:
    O1, O2 = as_oracle(M1), as_oracle(M2)
    n1, low = O1.n, O1.full
    return RankOracle(n1 + O2.n, lambda X: O1.rank(X & low) + O2.rank(X >> n1))


def simplify(M) -> tuple[RankOracle, dict[int, int]]:
    """Remove loops and all but the least element of each parallel class.

    Returns the simple restriction and a map from every non-loop element of
    M to the id (in the restriction) of its representative.
    """
    O = as_oracle(M)
    reps: list[int] = []
    rep_of: dict[int, int] = {}
    for e in range(1, O.n + 1):
        eb = 1 << (e - 1)
        if O.rank(eb) == 0:
            continue
        for idx, f in enumerate(reps):
            if O.rank(eb | (1 << (f - 1))) == 1:
                rep_of[e] = idx + 1
                break
        else:
            reps.append(e)
            rep_of[e] = len(reps)
    return restrict(O, to_mask(reps)), rep_of


# -- brute-force references -------------------------------------------------

def bases_of(M) -> list[frozenset[int]]:
    O = as_oracle(M)
    r = O.r
    return [frozenset(B) for B in combinations(range(1, O.n + 1), r) if O.rank(to_mask(B)) == r]


def same_rank_function(O1: RankOracle, O2: RankOracle) -> bool:
    return O1.n == O2.n and all(O1.rank(X) == O2.rank(X) for X in range(O1.full + 1))


# -- path-level constructions ------------------------------------------------

_SWAP = str.maketrans("NE", "EN")


def lpm_dual_paths(M: StrongLpm) -> StrongLpm:
    """Swap N and E in both bounds and exchange their roles."""
    p, q = M.p.steps.translate(_SWAP), M.q.steps.translate(_SWAP)
    return build_lpm(PathPair.parse(q, p))


def lpm_concat(M1: StrongLpm, M2: StrongLpm) -> StrongLpm:
    return build_lpm(PathPair.parse(M1.p.steps + M2.p.steps, M1.q.steps + M2.q.steps))
