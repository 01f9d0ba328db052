import pytest

import sympow


def test_commands():
    assert "sym-count" in sympow.commands()
    assert "invariant-ring" in sympow.commands()


def test_sym_count_of_affine_line():
    assert sympow.sym_count(2, ["x"], [], 2) == 4
    assert sympow.sym_count(3, ["x", "y"], [], 2) == 81


def test_conic_without_points():
    n, c = sympow.point_counts(2, ["x"], ["x^2 + x + 1"], 2)
    assert n == [0, 2]
    assert c == [0, 1]
    assert sympow.sym_count(2, ["x"], ["x^2 + x + 1"], 2) == 1


def test_canonical_poly():
    assert sympow.canonical_poly("(x + 1)^2", ["x"]) == "x^2 + 2*x + 1"
    assert sympow.canonical_poly("(x + 1)^2", ["x"], 2) == "x^2 + 1"


def test_invariant_dimension():
    assert sympow.invariant_dimension(3, 3, 2) == (6, 6)


def test_linearization_inverse():
    assert sympow.linearization_inverse_holds(2, 3)


def test_run_report():
    report = sympow.run("kunneth", n=2, q=2)
    assert report["ok"]
    assert report["reports"][0]["lhs"] == 12


def test_errors():
    with pytest.raises(sympow.ParseError) as info:
        sympow.canonical_poly("x +", ["x"])
    assert info.value.line == 1
    with pytest.raises(sympow.InvalidInput):
        sympow.sym_count(6, ["x"], [], 1)
    with pytest.raises(sympow.Error):
        sympow.run("frobnicate")
