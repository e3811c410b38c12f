import pytest

import pyqsp


def test_quantum_scalars():
    assert pyqsp.qint(2) == "q^-1 + q"
    assert pyqsp.qint(0) == "0"
    assert pyqsp.brace(1) == "p^-1*q^-1 + p*q"
    assert pyqsp.qfact(2) == pyqsp.qint(2)
    assert pyqsp.ratfunc_eval("(q^2 - q^-2) / (q - q^-1)") == pyqsp.qint(2)


def test_limits():
    assert pyqsp.ratfunc_limit("1 / (1 + q)") == "1"
    assert pyqsp.ratfunc_limit("q / (1 - q)") == "0"
    with pytest.raises(ValueError):
        pyqsp.ratfunc_limit("1/q")


def test_pi_parametrization():
    a, b = pyqsp.pi_map("(4,2,2,1;4,2,0)", 3)
    assert a == [2, 2, 3]
    assert b == [2, 0, 1]
    assert pyqsp.pi_inverse([2, 2, 3], [2, 0, 1]) == "(4,2,2,1;4,2,0)"
    assert pyqsp.pi_equiv("(1,0;0)", "(2,1;1)", 1)


def test_word_operators():
    assert pyqsp.jop([0], 1, "lower") == [-1]
    assert pyqsp.jop([0], 1, "raise") is None
    assert pyqsp.jop_primed([2], 2, "raise") == [1]
    assert pyqsp.crystal_op([0], 1, "lower") == [1]  # index 1/2
    assert pyqsp.is_yamanouchi_biword([0], 1)
    assert not pyqsp.is_yamanouchi_biword([-1], 1)


def test_decompose_square():
    rows = {r["shape"]: r for r in pyqsp.decompose(1, 2)}
    assert rows["(1,0;1)"]["multiplicity"] == 2
    assert rows["(2,0;0)"]["dimension"] == 3
    total = sum(r["multiplicity"] * r["dimension"] for r in rows.values())
    assert total == 9


def test_lr_branching():
    table = pyqsp.lr_all(1, "(;)", "(1,0,0)")
    assert table == {"(1,0;0)": 1, "(0,0;1)": 1}
    assert pyqsp.lr(1, "(1,0;0)", "()", "(2,1;1)") == 1


def test_cells_and_kl():
    cells = pyqsp.left_cells(2)
    assert len(cells) == 6
    assert sum(len(c) for c in cells) == 8
    c = pyqsp.kl_basis(2, "[-1,2]")
    assert c == {"[1,2]": "p", "[-1,2]": "1"}


def test_rs_pair():
    p, q = pyqsp.rs_pair([0, 1, 0], 1)
    assert p == [[0, 0], [1]]
    assert q == [[1, 3], [2]]


def test_shape_counts():
    assert pyqsp.standard_count("(1,0;1)", 1) == 2
    assert pyqsp.module_dimension("(2,0;0)", 1) == 3


def test_verify_small():
    rep = pyqsp.verify(1, 1, [])
    assert rep["all_pass"]
    only = pyqsp.verify(1, 1, ["h1-matrix"])
    assert len(only["checks"]) == 1
