import pytest

import cslab

SAMPLE = "UUUUDUUUUUDUD"


def test_sample_permutations():
    assert cslab.full_csp(SAMPLE, 4) == [3, 5, 8, 11, 2, 4, 7, 10, 12, 13, 6, 9, 1]
    assert cslab.short_csp(SAMPLE[1:], 4) == [2, 4, 7, 1, 3, 6, 8, 9, 5]
    assert cslab.reconstruct([2, 4, 7, 1, 3, 6, 8, 9, 5], 4) == SAMPLE[1:]
    assert cslab.path_type(SAMPLE[1:], 4) == [3, 2, 3, 3, 1, 1]


def test_counts_are_python_ints():
    assert cslab.fuss_catalan(3, 4) == 22
    assert cslab.fuss_catalan(40, 2) == 2622127042276492108820
    assert len(cslab.enumerate_catalan(5, 2)) == 42
    assert cslab.enumerate_bridges(1, 2) == ["UD", "DU"]


def test_cyclic_statistics():
    assert cslab.huq_profile([1, 1, -1]) == [2, 1, 0]
    assert cslab.functional_order([3, -2, 1, -3, 2, 1, -1]) == [
        (4, -1), (0, 0), (5, 1), (2, 1), (6, 2), (3, 2), (1, 3)]


def test_trees():
    assert cslab.fs_levels([1, 3, 4, 2]) == {1: 0, 2: 1, 3: 1, 4: 2}
    assert cslab.rl_word([1, 3, 4, 2], 4) == "rlr"
    assert not cslab.is_levelwise_numbered([3, 1, 2])
    assert cslab.k_condition([1, 3, 4, 2], 3)


def test_series():
    assert cslab.type_count([2, 1], 2) == 1
    assert cslab.q_poly(2, 2) == {(0, 0): 1, (1, 1): -1}
    assert cslab.t_series(2, 2, 3)[(2, 1)] == 1
    assert cslab.continuant_ones(3, 8) == [1, 1, 1, 2, 3, 4, 6, 9, 13]


def test_orbits():
    recs = cslab.orbits("short-csp", 3)
    assert [r["rep"] for r in recs] == [[1, 2, 3], [2, 1, 3]]
    assert recs[0]["I"] == [1, 2] and recs[0]["size"] == 4
    s = cslab.orbit_series("all", 6)
    assert s["agrees"]
    assert s["O"] == [0, 1, 1, 3, 13, 71, 461]
    assert s["Oxy"][6] == [328, 100, 24, 8, 0, 1]


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        cslab.reconstruct([3, 1, 2], 2)
    with pytest.raises(cslab.InvalidInput):
        cslab.full_csp("DU", 2)


def test_verify_suite():
    ok, cases = cslab.verify("raney", 4)
    assert ok and all(passed for _, passed, _ in cases)
