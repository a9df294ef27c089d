from fractions import Fraction

from rxtx import exactlin as xl


def test_rref_identity():
    rows, pivots = xl.rref([[2, 0], [0, 3]])
    assert rows == [[1, 0], [0, 1]]
    assert pivots == [0, 1]


def test_rank():
    assert xl.rank([[1, 2, 3], [2, 4, 6], [0, 1, 0]]) == 2
    assert xl.rank([]) == 0


def test_residue_zero_inside_span():
    basis, pivots = xl.rref([[1, 0, 1], [0, 1, 1]])
    assert all(v == 0 for v in xl.residue(basis, pivots, [3, 5, 8]))
    assert any(v != 0 for v in xl.residue(basis, pivots, [0, 0, 1]))


def test_primitive_int():
    assert xl.primitive_int([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert xl.primitive_int([-2, 4]) == (1, -2)  # leading sign positive
    assert xl.primitive_int([0, 0]) is None


def test_independent_subset():
    vecs = [[1, 0], [2, 0], [0, 1], [1, 1]]
    assert xl.independent_subset(vecs) == [0, 2]
    assert xl.independent_subset(vecs, limit=1) == [0]


def test_solve_combination():
    cols = [[1, 0, 1], [0, 1, 1]]
    sol = xl.solve_combination(cols, [2, 3, 5])
    assert sol == [Fraction(2), Fraction(3)]
    assert xl.solve_combination(cols, [0, 0, 1]) is None
    assert xl.solve_combination([], [1]) is None
