"""Orientations from rational representations, and coflow certificates.

An orientation here is always the one induced by a concrete rational
matrix realizing the matroid. Signed cocircuits are sign vectors of
linear functionals vanishing on a copoint; the coflow lattice is their
integer span. Nowhere-zero coflows are found by a depth-first search over
the Hermite basis of that lattice, which is complete for a given bound.

Vector order used by every search: entries are compared left to right and
values are ranked 1, -1, 2, -2, 3, -3, ... (small magnitude first,
positive before negative). The first certificate found is the least one
in that order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from . import _config
from .errors import FalsificationError, HasLoopsError, PreconditionError, RepresentationError
from .linalg import (
    column_rank,
    hermite_normal_form,
    lattice_coordinates,
    left_nullspace_of_columns,
    rref,
)
from .matroid_engine import (
    as_oracle,
    closure_mask,
    coline_report,
    copoint_masks,
    loops,
    minor,
    simplify,
)
from .oracle import RankOracle, bits, elements, from_mask, to_mask
from .transversal import StrongLpm

ENTRY_MAX = 2 ** 20
MAX_ATTEMPTS = 32
RANDOM_SUBSETS = 10_000


# -- representations --------------------------------------------------------

@dataclass(frozen=True)
class RationalRepresentation:
    matrix: tuple[tuple[Fraction, ...], ...]
    seed: int | None = None
    lpm: StrongLpm | None = field(default=None, compare=False)
    labels: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.matrix[0]) if self.matrix else len(self.labels or ())

    @property
    def rows(self) -> int:
        return len(self.matrix)

    def column(self, e: int) -> tuple[Fraction, ...]:
        return tuple(row[e - 1] for row in self.matrix)

    def column_rank(self, X) -> int:
        cols = [b.bit_length() - 1 for b in bits(to_mask(X, self.n))]
        return column_rank(self.matrix, cols) if self.matrix else 0

    @cached_property
    def oracle(self) -> RankOracle:
        return RankOracle(self.n, self.column_rank, self.labels)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "matrix": [[str(v) for v in row] for row in self.matrix],
        }


def representation_from_matrix(rows, seed=None, lpm=None, labels=None) -> RationalRepresentation:
    mat = tuple(tuple(Fraction(v) for v in row) for row in rows)
    if lpm is not None and labels is None:
        labels = tuple(range(1, lpm.n + 1))
    return RationalRepresentation(mat, seed, lpm, labels)


def _verification_subsets(M: StrongLpm, O: RankOracle, seed: int):
    n = M.n
    if n <= _config.FULL_CHECK_NMAX:
        yield from range(1 << n)
        return
    full = O.full
    for e in range(n):
        yield 1 << e
    for a, b in combinations(range(n), 2):
        yield (1 << a) | (1 << b)
    # fundamental circuits of the bases read off p and q
    r = O.r
    for B in (to_mask(M.p.north_positions()), to_mask(M.q.north_positions())):
        for e in bits(full & ~B):
            yield e | sum(f for f in bits(B) if O.rank((B & ~f) | e) == r)
    for H in copoint_masks(O):
        yield full & ~H
    rng = random.Random(seed)
    for _ in range(RANDOM_SUBSETS):
        yield rng.getrandbits(n)


def verify_representation(R: RationalRepresentation, M) -> int | None:
    """First subset (as a mask) where column rank and matroid rank differ."""
    O = as_oracle(M)
    if R.n != O.n:
        return 0
    lpm_ = M if isinstance(M, StrongLpm) else R.lpm
    if lpm_ is None:
        subsets = range(1 << O.n)
    else:
        subsets = _verification_subsets(lpm_, O, R.seed or 0)
    for X in subsets:
        if R.column_rank(X) != O.rank(X):
            return X
    return None


def synthesize_representation(M: StrongLpm, seed: int = 0) -> RationalRepresentation:
    """Random integer entries on the presentation pattern, verified.

    Attempt k uses seed + k; after MAX_ATTEMPTS failures the last failing
    subset is reported.
    """
    last_bad = None
    for attempt in range(MAX_ATTEMPTS):
        s = seed + attempt
        rng = random.Random(s)
        rows = []
        for lo, hi in M.presentation:
            rows.append([rng.randint(1, ENTRY_MAX) if lo <= j <= hi else 0
                         for j in range(1, M.n + 1)])
        R = representation_from_matrix(rows, seed=s, lpm=M)
        bad = verify_representation(R, M)
        if bad is None:
            return R
        last_bad = bad
    raise RepresentationError(
        f"no valid representation of {M!r} after {MAX_ATTEMPTS} seeds from {seed}",
        subset=sorted(from_mask(last_bad)),
    )


# -- signed cocircuits ------------------------------------------------------

@dataclass(frozen=True)
class SignedCocircuit:
    vector: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self.vector, start=1) if s)

    def sign(self, e: int) -> int:
        return self.vector[e - 1]

    def __neg__(self):
        return SignedCocircuit(tuple(-s for s in self.vector))


def _independent_rows(R: RationalRepresentation):
    r = R.oracle.r
    if r == R.rows:
        return [list(row) for row in R.matrix]
    basis, _ = rref(R.matrix)
    return basis


def signed_cocircuits(R: RationalRepresentation, M=None) -> list[SignedCocircuit]:
    """One signed cocircuit per copoint, in increasing copoint-mask order.

    The functional vanishing on a copoint is the nullspace vector whose
    free coordinate is +1.
    """
    O = as_oracle(M) if M is not None else R.oracle
    A = _independent_rows(R)
    full = O.full
    out = []
    for H in copoint_masks(O):
        cols = [b.bit_length() - 1 for b in bits(H)]
        null = left_nullspace_of_columns(A, cols)
        if len(null) != 1:
            raise RepresentationError(
                f"copoint {sorted(from_mask(H))} spans a subspace of codimension {len(null)}",
                subset=sorted(from_mask(H)))
        y = null[0]
        vec = []
        for j in range(O.n):
            v = sum(yi * row[j] for yi, row in zip(y, A))
            vec.append((v > 0) - (v < 0))
        sc = SignedCocircuit(tuple(vec))
        if to_mask(sc.support) != full & ~H:
            raise RepresentationError(
                f"functional for copoint {sorted(from_mask(H))} vanishes off the copoint",
                subset=sorted(from_mask(H)))
        out.append(sc)
    return out


# -- the coflow lattice -----------------------------------------------------

class CoflowLattice:
    """Integer span of signed cocircuit vectors, with a Hermite basis."""

    def __init__(self, cocircuits, n: int | None = None):
        self.cocircuits = list(cocircuits)
        vecs = [list(c.vector) if isinstance(c, SignedCocircuit) else list(c)
                for c in self.cocircuits]
        self.n = n if n is not None else (len(vecs[0]) if vecs else 0)
        self.vectors = vecs
        if vecs:
            self.basis, self.transform, self.pivots = hermite_normal_form(vecs)
        else:
            self.basis, self.transform, self.pivots = [], [], []

    def coefficients(self, F) -> list[int] | None:
        """Integer weights on the cocircuits summing to F, or None."""
        F = list(F)
        if len(F) != self.n:
            raise ValueError(f"vector has length {len(F)}, expected {self.n}")
        x = lattice_coordinates(self.basis, self.pivots, F)
        if x is None:
            return None
        return self._lift(x)

    def _lift(self, x):
        k = len(self.vectors)
        coeffs = [0] * k
        for xi, urow in zip(x, self.transform):
            if xi:
                for j in range(k):
                    coeffs[j] += xi * urow[j]
        return coeffs

    def combination(self, coeffs) -> list[int]:
        out = [0] * self.n
        for c, v in zip(coeffs, self.vectors):
            if c:
                for j in range(self.n):
                    out[j] += c * v[j]
        return out

    def __contains__(self, F):
        return self.coefficients(F) is not None

    def bounded_search(self, bound: int, stats: dict | None = None):
        """Least nowhere-zero F with |F(e)| <= bound, as (F, x) or None.

        x are coordinates over the Hermite basis. Entries are fixed column
        by column: a pivot column picks its value, the columns up to the
        next pivot are then determined and must be admissible.
        """
        values = [v for a in range(1, bound + 1) for v in (a, -a)]
        allowed = set(values)
        H, piv, n = self.basis, self.pivots, self.n
        s = len(H)
        nodes = 0
        if s == 0 or piv[0] != 0:
            if stats is not None:
                stats["nodes"] = 0
            return None
        ends = piv[1:] + [n]
        x = [0] * s
        result = None

        def dfs(i, partial):
            nonlocal nodes, result
            c = piv[i]
            h = H[i][c]
            row = H[i]
            for v in values:
                t, rem = divmod(v - partial[c], h)
                if rem:
                    continue
                nodes += 1
                cur = [a + t * b for a, b in zip(partial, row)] if t else partial
                if all(cur[j] in allowed for j in range(c + 1, ends[i])):
                    x[i] = t
                    if i + 1 == s:
                        result = cur
                        return True
                    if dfs(i + 1, cur):
                        return True
            return False

        dfs(0, [0] * n)
        if stats is not None:
            stats["nodes"] = nodes
        if result is None:
            return None
        return list(result), list(x)


def is_coflow(F, cocircuits):
    """(True, weights on the cocircuits) if F is a coflow, else (False, None)."""
    lat = cocircuits if isinstance(cocircuits, CoflowLattice) else CoflowLattice(cocircuits, len(F))
    coeffs = lat.coefficients(F)
    return coeffs is not None, coeffs


@dataclass(frozen=True)
class Coflow:
    values: tuple[int, ...]
    coefficients: tuple[int, ...] | None = None

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e, v in enumerate(self.values, start=1) if v)


CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["F", "coefficients", "max_abs", "verified"],
    "properties": {
        "F": {"type": "array", "items": {"enum": [-2, -1, 1, 2]}},
        "coefficients": {"type": "array", "items": {"type": "integer"}},
        "max_abs": {"enum": [1, 2]},
        "verified": {"const": True},
    },
}


@dataclass(frozen=True)
class ThreeColorCertificate:
    coflow: Coflow
    cocircuits: tuple[SignedCocircuit, ...]
    verified: bool

    @property
    def F(self) -> tuple[int, ...]:
        return self.coflow.values

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.coflow.coefficients

    @property
    def nowhere_zero(self) -> bool:
        return all(self.F)

    @property
    def max_abs(self) -> int:
        return max((abs(v) for v in self.F), default=0)

    def to_dict(self) -> dict:
        return {
            "F": list(self.F),
            "coefficients": list(self.coefficients),
            "max_abs": self.max_abs,
            "verified": self.verified,
        }


def verify_certificate(cert: ThreeColorCertificate, bound: int = 2) -> bool:
    F = list(cert.F)
    lat = CoflowLattice(cert.cocircuits, len(F))
    ok, _ = is_coflow(F, lat)
    combo = lat.combination(cert.coefficients)
    return ok and combo == F and all(F) and max(map(abs, F), default=0) <= bound


# -- searches ---------------------------------------------------------------

def _instance_dump(M, R: RationalRepresentation) -> dict:
    d = {"representation": R.to_dict()}
    lpm_ = M if isinstance(M, StrongLpm) else R.lpm
    if lpm_ is not None:
        d["instance"] = lpm_.to_dict()
    if R.labels is not None:
        d["labels"] = list(R.labels)
    return d


def _require_loopless(M):
    lp = loops(M)
    if lp:
        raise HasLoopsError(lp, "chromatic number undefined on loops")


def nowhere_zero_coflow(M, R: RationalRepresentation, bound: int):
    """Least nowhere-zero coflow with entries in [-bound, bound], or None."""
    _require_loopless(M)
    cocs = signed_cocircuits(R, M)
    lat = CoflowLattice(cocs, as_oracle(M).n)
    found = lat.bounded_search(bound)
    if found is None:
        return None
    F, x = found
    coeffs = lat._lift(x)
    return Coflow(tuple(F), tuple(coeffs)), cocs, lat


def nowhere_zero_3_coflow(M, R: RationalRepresentation) -> ThreeColorCertificate:
    _require_loopless(M)
    cocs = signed_cocircuits(R, M)
    n = as_oracle(M).n
    lat = CoflowLattice(cocs, n)
    stats = {}
    found = lat.bounded_search(2, stats)
    if found is None:
        artifact = _instance_dump(M, R)
        artifact["search"] = {
            "values": [1, -1, 2, -2],
            "lattice_rank": len(lat.basis),
            "pivots": lat.pivots,
            "cocircuits": [list(c.vector) for c in cocs],
            "nodes": stats.get("nodes", 0),
        }
        raise FalsificationError("no nowhere-zero coflow with |F(e)| < 3", artifact)
    F, x = found
    coeffs = tuple(lat._lift(x))
    ok = lat.combination(coeffs) == F and all(F) and max(map(abs, F)) <= 2
    cert = ThreeColorCertificate(Coflow(tuple(F), coeffs), tuple(cocs), ok)
    if not ok:
        raise FalsificationError("certificate failed to re-verify", _instance_dump(M, R))
    return cert


def chromatic_upper(M, R: RationalRepresentation, k: int) -> bool:
    """Is there a nowhere-zero coflow with |F(e)| < k?"""
    if k < 2:
        _require_loopless(M)
        return False
    return nowhere_zero_coflow(M, R, k - 1) is not None


def chromatic_number(M, R: RationalRepresentation) -> int:
    _require_loopless(M)
    cocs = signed_cocircuits(R, M)
    lat = CoflowLattice(cocs, as_oracle(M).n)
    k = 2
    while lat.bounded_search(k - 1) is None:
        k += 1
    return k


def local_coflow_candidates(n: int):
    """Vectors with one or two entries in {1, -1}, smaller support first."""
    for e in range(n):
        for v in (1, -1):
            F = [0] * n
            F[e] = v
            yield F
    for e, f in combinations(range(n), 2):
        for v in (1, -1):
            for w in (1, -1):
                F = [0] * n
                F[e], F[f] = v, w
                yield F


def first_local_coflow(lat: CoflowLattice, n: int):
    for F in local_coflow_candidates(n):
        coeffs = lat.coefficients(F)
        if coeffs is not None:
            return Coflow(tuple(F), tuple(coeffs))
    return None


def qsc_local_coflow(M, R: RationalRepresentation, W) -> Coflow:
    """A {0, +-1} coflow with one or two nonzero entries.

    W must be a quite simple coline of the simplification of M, given in
    M's element ids.
    """
    O = as_oracle(M)
    S, rep_of = simplify(O)
    Ws = to_mask({rep_of[e] for e in from_mask(to_mask(W, O.n)) if e in rep_of})
    report = coline_report(S, Ws)
    if not report.quite_simple:
        raise PreconditionError(f"{sorted(from_mask(to_mask(W, O.n)))} is not a quite simple coline")
    lat = CoflowLattice(signed_cocircuits(R, O), O.n)
    found = first_local_coflow(lat, O.n)
    if found is None:
        artifact = _instance_dump(M, R)
        artifact["coline"] = sorted(from_mask(to_mask(W, O.n)))
        artifact["search"] = {"candidates": 2 * O.n + 4 * O.n * (O.n - 1) // 2}
        raise FalsificationError("no {0,+-1} coflow with one or two nonzero entries", artifact)
    return found


# -- minors of a represented matroid ---------------------------------------

def minor_representation(R: RationalRepresentation, contract_set=0, delete_set=0) -> RationalRepresentation:
    """Columns of R/C\\D: project away span(C), then drop C and D."""
    n = R.n
    C, D = to_mask(contract_set, n), to_mask(delete_set, n)
    keep = [b.bit_length() - 1 for b in bits(((1 << n) - 1) & ~(C | D))]
    A = [list(row) for row in R.matrix]
    if C:
        P = left_nullspace_of_columns(A, [b.bit_length() - 1 for b in bits(C)])
        A = [[sum(pi * A[i][j] for i, pi in enumerate(prow)) for j in range(n)] for prow in P]
    mat = tuple(tuple(Fraction(row[j]) for j in keep) for row in A)
    labels = R.labels or tuple(range(1, n + 1))
    return RationalRepresentation(mat, R.seed, None, tuple(labels[j] for j in keep))


@dataclass(frozen=True)
class GspReport:
    n: int
    minors: int
    trivial: int
    entries: tuple[dict, ...]
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "minors": self.minors,
            "trivial": self.trivial,
            "simple_minors": len(self.entries),
            "entries": list(self.entries),
            "failures": list(self.failures),
        }


def gsp_check(M, R: RationalRepresentation, budget: int = 10) -> GspReport:
    """Local {0, +-1} coflows on every nonempty simple minor.

    All 3^n (contract, delete) splits are visited. Splits whose contracted
    closure and kept parallel-class representatives coincide give the same
    oriented minor and are checked once.
    """
    O = as_oracle(M)
    n = O.n
    if n > budget:
        raise PreconditionError(f"n={n} exceeds the minor budget {budget}")
    full = O.full
    seen: dict = {}
    entries, failures = [], []
    count = trivial = 0
    for C in range(full + 1):
        clC = closure_mask(O, C)
        rest = full & ~C
        D = rest
        while True:
            # submasks of rest in increasing order
            Dm = rest & ~D
            count += 1
            _gsp_visit(O, R, C, Dm, clC, seen, entries, failures)
            if D == 0:
                break
            D = (D - 1) & rest
    trivial = sum(1 for v in seen.values() if v is None)
    return GspReport(n, count, trivial, tuple(entries), tuple(failures))


def _simple_representatives(O: RankOracle, C: int, keep: int) -> int:
    """Least element of each parallel class of (O/C)|keep, loops dropped."""
    rC = O.rank(C)
    reps = []
    for e in bits(keep):
        if O.rank(C | e) == rC:
            continue
        if not any(O.rank(C | e | f) == rC + 1 for f in reps):
            reps.append(e)
    return sum(reps)


def _gsp_visit(O, R, C, D, clC, seen, entries, failures):
    keep = O.full & ~(C | D)
    reps = _simple_representatives(O, C, keep)
    key = (clC, reps)
    if key in seen:
        return
    if reps == 0:
        seen[key] = None
        return
    dropped = O.full & ~(C | reps)
    S = minor(O, C, dropped)
    Rm = minor_representation(R, C, dropped)
    err = None
    try:
        lat = CoflowLattice(signed_cocircuits(Rm, S), S.n)
        found = first_local_coflow(lat, S.n)
    except RepresentationError as exc:
        found, err = None, str(exc)
    entry = {
        "contract": elements(C),
        "delete": elements(D),
        "elements": list(S.labels),
        "rank": S.r,
    }
    seen[key] = entry
    if found is None:
        entry["error"] = err or "no local coflow"
        failures.append(entry)
    else:
        entry["witness"] = list(found.values)
        entries.append(entry)
