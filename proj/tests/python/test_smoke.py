"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import unavoid


def test_decide_and_verify_roundtrip():
    result = unavoid.decide("aba")
    assert result["unavoidable"] is True
    check = unavoid.verify("aba", result["certificate"])
    assert check["valid"] is True


def test_avoidable_patterns():
    assert unavoid.decide("xx")["unavoidable"] is False
    assert unavoid.decide("xxx", strategy="bem")["unavoidable"] is False
    assert unavoid.decide("xyxy")["unavoidable"] is False


def test_freeness():
    assert unavoid.is_free("aba", "a") is True
    assert unavoid.is_free("xx", "x") is False
    assert unavoid.free_letters("aba") == ["a", "b"]
    assert unavoid.free_sets("aba") == [["a"], ["b"]]
    assert unavoid.is_free_set("ab", ["a", "b"]) is False


def test_pattern_operations():
    assert unavoid.canonicalize("bab") == "aba"
    assert unavoid.delete_letters("aba", ["a"]) == "b"
    assert unavoid.identify("abc", "c", "a") == "aba"
    assert ("a", "b") in unavoid.two_factors("aba")


def test_reflection_and_zimin():
    assert unavoid.zimin(3) == "abacaba"
    witness = unavoid.reflects("zababz", "xx")
    assert witness == {"x": "ab"}
    assert unavoid.reflects("abc", "xx") is None
    assert unavoid.apply_morphism("xyx", {"x": "a", "y": "ba"}) == "abaa"
    assert unavoid.decide_via_zimin("aba") is True
    assert unavoid.decide_via_zimin("xx") is False


def test_bounds():
    assert unavoid.bound_n(2, 2) == "30"
    assert unavoid.bound_n(2, 3) == "257698037820"
    assert unavoid.bound_n(2, 4) is None  # past any feasible digit cap
    assert unavoid.count_bound(3) == "381"
    assert unavoid.density_bound(3, 2) == ("2", "3")


def test_census():
    report = unavoid.census(3, 2)
    assert report["total"] == 9
    assert report["unavoidable"] == 6
    assert Fraction(int(report["fraction"][0]), int(report["fraction"][1])) == Fraction(2, 3)
    assert report["holds"] is True


def test_sat_reduction():
    dimacs = "p cnf 3 1\n1 2 3 0\n"
    word = unavoid.build_word(dimacs)
    assert word["letters"] == 48
    assert word["alphabet"] == 25
    assert word["factors"][0] == "e x1 ~x1 e z1"
    report = unavoid.check_sat(dimacs)
    assert report["satisfiable"] is True
    assert report["verdict"] == "unavoidable"
    assert report["agree"] is True
    assert report["schedule_valid"] is True


def test_longest_avoiding():
    result = unavoid.longest_avoiding("xx", 2, 10)
    assert result["cap_reached"] is False
    assert result["max_length"] == 3
    assert result["witness"] == "aba"


def test_errors():
    with pytest.raises(ValueError):
        unavoid.decide("")
    with pytest.raises(RuntimeError):
        unavoid.decide("xyxzyx", budget=1)
