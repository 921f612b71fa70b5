import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpmkit.errors import InvalidPairError, InvalidPathError
from lpmkit.lattice_path import (
    PathPair,
    all_pairs,
    all_paths,
    base_to_path,
    count_between,
    enumerate_between,
    parse_path,
    path_to_base,
    precedes,
)

from oracles import paths_between, south_of_common, words

EX1 = ("EENENN", "NNENEE")

path_words = st.text(alphabet="NE", max_size=12)


def test_parse_six_element():
    p = parse_path("EENENN")
    assert p.north_positions() == (3, 5, 6)
    assert len(p) == 6


def test_parse_empty():
    p = parse_path("")
    assert p.n == 0
    assert p.heights == (0,)


def test_parse_rejects_bad_symbol_with_position():
    with pytest.raises(InvalidPathError, match="position 2"):
        parse_path("NXE")


@pytest.mark.parametrize("p,q,expected", [
    ("EENENN", "NNENEE", True),
    ("NE", "EN", False),
    ("NENE", "NENE", True),
    ("NN", "NE", False),  # different endpoints
])
def test_precedes(p, q, expected):
    assert precedes(p, q) is expected


def test_precedes_length_mismatch_is_error():
    with pytest.raises(InvalidPairError):
        precedes("NE", "N")


def test_pair_validation_messages():
    with pytest.raises(InvalidPairError, match="not south"):
        PathPair.parse("NE", "EN")
    with pytest.raises(InvalidPairError, match="endpoints"):
        PathPair.parse("NE", "NN")


def test_six_element_enumeration_matches_filter():
    oracle = paths_between(*EX1)
    assert len(oracle) == 18
    got = [r.steps for r in enumerate_between(PathPair.parse(*EX1))]
    assert got == oracle  # oracle is lexicographic with E < N as well


def test_enumerate_singleton_and_uniform():
    assert [r.steps for r in enumerate_between(PathPair.parse("NEN", "NEN"))] == ["NEN"]
    got = [r.steps for r in enumerate_between(PathPair.parse("EENN", "NNEE"))]
    assert got == [w for w in words(4) if w.count("N") == 2]


@pytest.mark.parametrize("p,q,expected", [(*EX1, 18), ("NEN", "NEN", 1), ("EENN", "NNEE", 6)])
def test_count_between(p, q, expected):
    assert count_between(PathPair.parse(p, q)) == expected


def test_path_base_bijection_examples():
    assert path_to_base("NNENEE") == {1, 2, 4}
    assert path_to_base("EENENN") == {3, 5, 6}
    assert path_to_base("EEE") == frozenset()
    assert base_to_path({1, 2, 4}, 6).steps == "NNENEE"
    assert base_to_path(set(), 3).steps == "EEE"
    with pytest.raises(ValueError):
        base_to_path({7}, 6)


@given(path_words)
def test_round_trip(w):
    r = parse_path(w)
    assert base_to_path(path_to_base(r), len(w)) == r


def test_order_axioms_up_to_length_6():
    for n in range(7):
        ws = words(n)
        rel = {(a, b) for a in ws for b in ws if precedes(a, b)}
        for a in ws:
            assert (a, a) in rel
        for a, b in rel:
            if (b, a) in rel:
                assert a == b
        for a, b in rel:
            for c in ws:
                if (b, c) in rel:
                    assert (a, c) in rel


@settings(max_examples=60)
@given(st.integers(0, 9), st.data())
def test_enumeration_matches_dp_and_bounds(n, data):
    pairs = list(all_pairs(n))
    pair = data.draw(st.sampled_from(pairs))
    rs = enumerate_between(pair)
    assert len(rs) == len(set(rs)) == count_between(pair)
    assert all(precedes(pair.p, r) and precedes(r, pair.q) for r in rs)
    assert [r.steps for r in rs] == sorted(r.steps for r in rs)


def test_all_pairs_is_exhaustive():
    for n in range(6):
        expected = sorted((p, q) for p in words(n) for q in words(n) if south_of_common(p, q))
        assert [(x.p.steps, x.q.steps) for x in all_pairs(n)] == expected


def test_all_paths_order():
    assert [r.steps for r in all_paths(2)] == ["EE", "EN", "NE", "NN"]


def test_long_thin_corridor_enumerates():
    # n = 40 but only a handful of paths in between
    p = "E" * 19 + "EN" + "N" * 19
    q = "E" * 19 + "NE" + "N" * 19
    assert count_between(PathPair.parse(p, q)) == 2
    assert len(enumerate_between(PathPair.parse(p, q))) == 2
