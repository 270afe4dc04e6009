"""Smoke tests for the python module."""

import pytest

xxz = pytest.importorskip("xxz")


def test_groups():
    z6 = xxz.make_cyclic(6)
    assert z6.order == 6
    assert z6.inv(2) == 4
    assert z6.mul(2, 3) == 5

    torus = xxz.make_torus(2, 2, 2)
    assert torus.order == 8
    assert torus.abelian
    assert torus.name(torus.identity) == "1"
    assert torus.element("-x") == torus.inv(torus.element("x"))

    prod = xxz.direct_product(xxz.make_cyclic(2), xxz.make_cyclic(3))
    assert prod.order == 6
    assert prod.element_order(1 * 3 + 1) == 6

    table = [[0, 1], [1, 0]]
    g = xxz.from_cayley_table(table)
    assert g.order == 2


def test_haah_a_degeneracy_law():
    spec = xxz.load_spec("haah-a", size=2)
    assert spec.q == 1
    assert spec.n_qubits == 16

    report = xxz.verify(spec)
    assert report["ok"]
    assert report["violations"] == []

    deg = xxz.degeneracy(spec)
    assert deg["k"] == 6
    assert deg["rank"] == 10

    assert xxz.ground_space_dim(spec) == 2 ** 6


def test_haah_b_locality_and_metric():
    spec = xxz.load_spec("haah-b", size=3)
    assert xxz.verify(spec)["ok"]
    assert xxz.locality(spec) == 1
    assert xxz.word_metric(spec, "1", "x") == 1
    ball = xxz.ball(spec, "1", 1)
    assert "1" in ball and "x" in ball


def test_spec_text_round_trip():
    text = """
group cyclic 6
q 1
A1 {0, 2}
B1 {0, 4}
matrix [1]
"""
    spec = xxz.parse_spec_text(text)
    assert xxz.degeneracy(spec)["k"] == 4
    blob = xxz.serialize_spec(spec)
    again = xxz.parse_spec_text(blob)
    assert xxz.serialize_spec(again) == blob


def test_qudit_path():
    spec = xxz.parse_spec_text(
        '{"group": {"cyclic": 3}, "q": 1, "d": 3,'
        ' "A": [{"0": 1}], "B": [{"0": 1}], "matrices": [[[1]]]}'
    )
    assert spec.d == 3
    assert xxz.verify(spec)["ok"]
    assert xxz.degeneracy(spec)["k"] == 0

    qubit = xxz.load_spec("trivial", size=2)
    lifted = xxz.to_qudit_spec(qubit, 3)
    assert lifted.d == 3
    assert xxz.verify(lifted)["ok"]


def test_errors():
    with pytest.raises(xxz.ParseError):
        xxz.parse_spec_text("group torus 2 2\nq 1\n")
    bad = (
        "group cyclic 2\nq 2\nA1 {0}\nA2 {1}\nB1 {0}\nB2 {1}\n"
        "matrix [1 1; 0 1]\nmatrix [1 0; 1 1]\n"
    )
    with pytest.raises(xxz.ParseError):
        xxz.parse_spec_text(bad)
    with pytest.raises(xxz.AnalysisError):
        xxz.ground_space_dim(xxz.load_spec("haah-a", size=3))
