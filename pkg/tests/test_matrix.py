import random

import pytest

from rxtx import matrix as mx
from rxtx.matrix import DenseMatrix, DimensionMismatchError, Domain, OpCounter


def rand_int_matrix(rng, n, m):
    return DenseMatrix.from_rows(
        [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])


def test_from_rows_roundtrip():
    rows = [[1, 2, 3], [4, 5, 6]]
    a = DenseMatrix.from_rows(rows)
    assert a.rows == 2 and a.cols == 3
    assert a.to_rows() == rows
    assert a.get(1, 2) == 6


def test_immutable():
    a = DenseMatrix.zeros(2, 2)
    with pytest.raises(AttributeError):
        a.rows = 3


def test_transpose_involution():
    rng = random.Random(0)
    a = rand_int_matrix(rng, 3, 5)
    assert a.transpose().transpose() == a
    assert a.transpose().get(4, 2) == a.get(2, 4)


def test_add_sub_neg():
    a = DenseMatrix.from_rows([[1, 2], [3, 4]])
    b = DenseMatrix.from_rows([[5, 6], [7, 8]])
    assert mx.add(a, b).to_rows() == [[6, 8], [10, 12]]
    assert mx.sub(b, a).to_rows() == [[4, 4], [4, 4]]
    assert mx.neg(a).to_rows() == [[-1, -2], [-3, -4]]
    with pytest.raises(DimensionMismatchError):
        mx.add(a, DenseMatrix.zeros(3, 2))


def test_signed_sum_counts_k_minus_1_additions():
    counter = OpCounter()
    a = DenseMatrix.from_rows([[1, 0], [0, 1]])
    out = mx.signed_sum([(1, a), (-1, a), (1, a)], counter)
    assert out == a
    assert counter.adds == 2 * 4  # two binary additions over 4 cells
    assert counter.mults == 0


def test_naive_multiply_matches_by_hand():
    a = DenseMatrix.from_rows([[1, 2], [3, 4]])
    b = DenseMatrix.from_rows([[5, 6], [7, 8]])
    counter = OpCounter()
    c = mx.naive_multiply(a, b, counter)
    assert c.to_rows() == [[19, 22], [43, 50]]
    assert counter.mults == 8 and counter.adds == 4


def test_naive_gram_equals_x_xt():
    rng = random.Random(1)
    for n, m in [(1, 1), (3, 2), (4, 4), (5, 7)]:
        x = rand_int_matrix(rng, n, m)
        assert mx.naive_gram(x) == mx.naive_multiply(x, x.transpose())


def test_naive_gram_counts():
    counter = OpCounter()
    x = rand_int_matrix(random.Random(2), 4, 4)
    mx.naive_gram(x, counter)
    assert counter.mults == 40  # n*(n+1)/2 entries, n mults each
    assert counter.total == 70


def test_naive_gram_float_exactly_symmetric():
    rng = random.Random(3)
    n = 9
    x = DenseMatrix.from_rows(
        [[rng.gauss(0, 1) for _ in range(n)] for _ in range(n)],
        Domain.FLOAT64)
    g = mx.naive_gram(x)
    for i in range(n):
        for j in range(n):
            assert g.get(i, j) == g.get(j, i)


def test_partition_assemble_roundtrip():
    rng = random.Random(4)
    for n, m, grid in [(8, 8, 4), (6, 10, 2), (7, 5, 4)]:
        x = rand_int_matrix(rng, n, m)
        part = mx.partition(x, grid)
        back = mx.crop(mx.assemble(part), n, m)
        assert back == x


def test_partition_block_indexing():
    x = DenseMatrix.from_rows([[r * 4 + c for c in range(4)]
                               for r in range(4)])
    part = mx.partition(x, 4)
    assert part.block(1).to_rows() == [[0]]
    assert part.block(4).to_rows() == [[3]]
    assert part.block(13).to_rows() == [[12]]


def test_assemble_symmetric_mirrors_lower_triangle():
    rng = random.Random(5)
    blocks = {}
    for i in range(1, 3):
        for j in range(i, 3):
            blocks[(i, j)] = rand_int_matrix(rng, 2, 2)
    g = mx.assemble_symmetric(blocks, 4, 2)
    for i in range(4):
        for j in range(4):
            assert g.get(i, j) == g.get(j, i)


def test_counter_merge():
    a, b = OpCounter(), OpCounter()
    a.count_mults(3)
    b.count_adds(4)
    a.merge(b)
    assert (a.mults, a.adds, a.total) == (3, 4, 7)
