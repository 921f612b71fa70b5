import random
from fractions import Fraction
from itertools import product

import pytest

from lpmkit.errors import HasLoopsError, PreconditionError, RepresentationError
from lpmkit.lpm_structure import quite_simple_coline, rank2_lpm
from lpmkit.matroid_engine import copoints
from lpmkit.orient_coflow import (
    CoflowLattice,
    SignedCocircuit,
    chromatic_number,
    chromatic_upper,
    gsp_check,
    is_coflow,
    local_coflow_candidates,
    minor_representation,
    nowhere_zero_3_coflow,
    qsc_local_coflow,
    representation_from_matrix,
    signed_cocircuits,
    synthesize_representation,
    verify_certificate,
    verify_representation,
)
from lpmkit.transversal import lpm

from oracles import lattice_contains_bruteforce


@pytest.fixture
def u24():
    M = rank2_lpm(4)
    return M, representation_from_matrix([(1, 1, 1, 1), (1, 2, 3, 4)], lpm=M)


@pytest.fixture
def u23():
    M = rank2_lpm(3)
    return M, representation_from_matrix([(1, 1, 1), (1, 2, 3)], lpm=M)


def test_collinear_u24_is_a_representation(u24):
    M, R = u24
    assert verify_representation(R, M) is None


def test_zero_matrix_fails_at_a_singleton(u24):
    M, _ = u24
    Z = representation_from_matrix([(0, 0, 0, 0), (0, 0, 0, 0)], lpm=M)
    bad = verify_representation(Z, M)
    assert bad is not None and bin(bad).count("1") == 1


def test_synthesized_six_element(ex1):
    R = synthesize_representation(ex1, seed=0)
    assert verify_representation(R, ex1) is None
    for i, (lo, hi) in enumerate(ex1.presentation):
        for j in range(ex1.n):
            assert (R.matrix[i][j] != 0) == (lo <= j + 1 <= hi)
    assert synthesize_representation(ex1, seed=0) == R


def test_synthesis_exhaustion_is_reported(monkeypatch, ex1):
    import lpmkit.orient_coflow as oc
    monkeypatch.setattr(oc, "verify_representation", lambda R, M: 0b1)
    with pytest.raises(RepresentationError) as info:
        oc.synthesize_representation(ex1, seed=5)
    assert info.value.subset == [1]


def test_u24_sign_examples(u24):
    M, R = u24
    by_copoint = {frozenset(H): c for H, c in zip(copoints(M), signed_cocircuits(R, M))}
    assert by_copoint[frozenset({1})].vector == (0, 1, 1, 1)
    assert by_copoint[frozenset({4})].vector == (-1, -1, -1, 0)


def test_u23_sign_example(u23):
    M, R = u23
    by_copoint = {frozenset(H): c for H, c in zip(copoints(M), signed_cocircuits(R, M))}
    assert by_copoint[frozenset({2})].vector == (-1, 0, 1)


def test_cocircuit_supports_are_copoint_complements(ex1):
    R = synthesize_representation(ex1)
    E = frozenset(range(1, 7))
    cocs = signed_cocircuits(R, ex1)
    assert [c.support for c in cocs] == [E - H for H in copoints(ex1)]
    lat = CoflowLattice(cocs, 6)
    for c in cocs:
        assert (-c).vector in lat
        assert SignedCocircuit(c.vector).sign(min(c.support)) != 0


def test_degenerate_representation_is_rejected(u24):
    M, _ = u24
    # points 1 and 2 coincide: rank({1,2}) = 1 in the matrix but 2 in M
    R = representation_from_matrix([(1, 1, 1, 1), (1, 1, 3, 4)], lpm=M)
    assert verify_representation(R, M) == 0b11
    with pytest.raises(RepresentationError):
        signed_cocircuits(R, M)


def test_is_coflow_examples(u23):
    M, R = u23
    cocs = signed_cocircuits(R, M)
    ok, w = is_coflow([-1, 1, 2], cocs)
    assert ok
    assert CoflowLattice(cocs).combination(w) == [-1, 1, 2]
    assert is_coflow([0, 0, 0], cocs)[0]
    assert is_coflow([1, 0, 0], cocs) == (False, None)


def test_is_coflow_against_relation_and_bruteforce(u23):
    M, R = u23
    vecs = [c.vector for c in signed_cocircuits(R, M)]
    for F in product(range(-2, 3), repeat=3):
        member = F[0] - F[1] + F[2] == 0
        assert is_coflow(list(F), vecs)[0] == member
        if member:
            assert lattice_contains_bruteforce(vecs, F)


def test_coflow_lattice_closed_under_addition(ex1):
    R = synthesize_representation(ex1)
    lat = CoflowLattice(signed_cocircuits(R, ex1), 6)
    rng = random.Random(0)
    members = []
    for _ in range(30):
        w = [rng.randint(-2, 2) for _ in lat.vectors]
        members.append(lat.combination(w))
    for F in members[:10]:
        for G in members[10:20]:
            assert [a + b for a, b in zip(F, G)] in lat


def test_u24_certificates(u24):
    M, R = u24
    cocs = signed_cocircuits(R, M)
    assert is_coflow([1, 2, 2, 1], cocs)[0]
    c1, c4 = cocs[0].vector, cocs[-1].vector
    assert [a - b for a, b in zip(c1, c4)] == [1, 2, 2, 1]
    cert = nowhere_zero_3_coflow(M, R)
    # least in the documented order: small magnitudes first, + before -
    assert cert.F == (1, 1, 1, 1)
    assert verify_certificate(cert)


def test_u23_certificate(u23):
    M, R = u23
    cert = nowhere_zero_3_coflow(M, R)
    assert cert.F == (1, -1, -2)
    assert cert.max_abs == 2 and cert.nowhere_zero and cert.verified
    assert cert.to_dict() == {"F": [1, -1, -2], "coefficients": list(cert.coefficients),
                              "max_abs": 2, "verified": True}


def test_single_coloop_certificate():
    M = lpm("N", "N")
    R = synthesize_representation(M)
    assert nowhere_zero_3_coflow(M, R).F == (1,)


def test_chromatic_numbers(u23):
    M, R = u23
    # x2 = x1 + x3 is even for x1, x3 in {+1, -1}
    assert not any(s[1] == s[0] + s[2] for s in product((1, -1), repeat=3))
    assert not chromatic_upper(M, R, 2)
    assert chromatic_upper(M, R, 3)
    assert chromatic_number(M, R) == 3
    NN = lpm("NN", "NN")
    assert chromatic_number(NN, synthesize_representation(NN)) == 2


def test_chromatic_number_undefined_with_loops():
    M = lpm("NE", "NE")
    R = representation_from_matrix([(1, 0)], lpm=M)
    with pytest.raises(HasLoopsError):
        chromatic_number(M, R)
    with pytest.raises(HasLoopsError):
        nowhere_zero_3_coflow(M, R)


def test_chromatic_number_lattice_invariance(ex1):
    R = synthesize_representation(ex1)
    base = chromatic_number(ex1, R)
    rows = [list(r) for r in R.matrix]
    scaled = [[v * Fraction(3, 7) for v in rows[0]]] + rows[1:]
    permuted = rows[::-1]
    for mat in (scaled, permuted):
        R2 = representation_from_matrix(mat, lpm=ex1)
        assert verify_representation(R2, ex1) is None
        assert chromatic_number(ex1, R2) == base


def test_local_candidates_count():
    n = 5
    cands = list(local_coflow_candidates(n))
    assert len(cands) == 2 * n + 4 * n * (n - 1) // 2 <= 2 * n + 4 * n * n
    assert cands[0] == [1, 0, 0, 0, 0] and cands[1] == [-1, 0, 0, 0, 0]


def test_qsc_local_coflow_examples(u23, u24):
    M, R = u23
    F = qsc_local_coflow(M, R, set())
    assert F.values == (1, 1, 0)
    cocs = signed_cocircuits(R, M)
    assert [a - b for a, b in zip(cocs[0].vector, cocs[1].vector)] == [1, 1, 0]
    M4, R4 = u24
    F4 = qsc_local_coflow(M4, R4, set())
    assert 1 <= len(F4.support) <= 2 and is_coflow(list(F4.values), signed_cocircuits(R4, M4))[0]
    # rank 1 has no coline; the single coloop is covered by the minor check
    one = lpm("N", "N")
    assert gsp_check(one, synthesize_representation(one)).entries[0]["witness"] == [1]


def test_qsc_local_coflow_requires_quite_simple(ex1):
    R = synthesize_representation(ex1)
    with pytest.raises(PreconditionError):
        qsc_local_coflow(ex1, R, {1, 2})


def test_qsc_local_coflow_on_six_element(ex1):
    R = synthesize_representation(ex1)
    F = qsc_local_coflow(ex1, R, quite_simple_coline(ex1))
    assert 1 <= len(F.support) <= 2
    assert set(F.values) <= {0, 1, -1}


def test_minor_representation_ranks(ex1):
    R = synthesize_representation(ex1)
    Rm = minor_representation(R, {1}, {6})
    from lpmkit.matroid_engine import minor, same_rank_function
    assert same_rank_function(Rm.oracle, minor(ex1, {1}, {6}))
    assert Rm.labels == (2, 3, 4, 5)


@pytest.mark.parametrize("paths", [("EENENN", "NNENEE"), ("EENN", "NNEE")])
def test_gsp_check_passes(paths):
    M = lpm(*paths)
    rep = gsp_check(M, synthesize_representation(M))
    assert rep.ok and rep.minors == 3 ** M.n
    assert rep.trivial >= 1  # the empty minor
    for e in rep.entries:
        nz = [v for v in e["witness"] if v]
        assert 1 <= len(nz) <= 2 and set(nz) <= {1, -1}


def test_gsp_check_budget(ex1):
    with pytest.raises(PreconditionError):
        gsp_check(ex1, synthesize_representation(ex1), budget=5)
