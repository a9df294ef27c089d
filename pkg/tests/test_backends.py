import random

import pytest

from rxtx import matrix as mx
from rxtx.backends import (ExternalBackend, NaiveBackend,
                           StrassenWinogradBackend, make_backend,
                           winograd_addition_count)
from rxtx.matrix import DenseMatrix, Domain, OpCounter


def rand_int_matrix(rng, n, m):
    return DenseMatrix.from_rows(
        [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])


def test_winograd_one_level_additions():
    assert winograd_addition_count() == 15


def test_strassen_winograd_equals_naive_exact():
    rng = random.Random(0)
    sw = StrassenWinogradBackend(cutoff=2)
    for n, k, m in [(4, 4, 4), (8, 8, 8), (5, 7, 3), (16, 16, 16)]:
        a = rand_int_matrix(rng, n, k)
        b = rand_int_matrix(rng, k, m)
        assert sw.gemm(a, b) == mx.naive_multiply(a, b)


def test_strassen_winograd_mult_count_n4():
    sw = StrassenWinogradBackend(cutoff=1)
    rng = random.Random(1)
    a = rand_int_matrix(rng, 4, 4)
    b = rand_int_matrix(rng, 4, 4)
    counter = OpCounter()
    sw.gemm(a, b, counter)
    assert counter.mults == 49  # 7^2


def test_strassen_winograd_float_close_to_naive():
    rng = random.Random(2)
    n = 16
    a = DenseMatrix.from_rows(
        [[rng.gauss(0, 1) for _ in range(n)] for _ in range(n)],
        Domain.FLOAT64)
    b = DenseMatrix.from_rows(
        [[rng.gauss(0, 1) for _ in range(n)] for _ in range(n)],
        Domain.FLOAT64)
    got = StrassenWinogradBackend(cutoff=4).gemm(a, b)
    want = mx.naive_multiply(a, b)
    for i in range(n):
        for j in range(n):
            assert got.get(i, j) == pytest.approx(want.get(i, j),
                                                  rel=1e-12, abs=1e-12)


def test_external_backend_exact_when_available():
    ext = ExternalBackend()
    if not ext.available():
        pytest.skip("no external array library installed")
    rng = random.Random(3)
    a = rand_int_matrix(rng, 6, 4)
    b = rand_int_matrix(rng, 4, 5)
    assert ext.gemm(a, b) == mx.naive_multiply(a, b)


def test_make_backend():
    assert isinstance(make_backend("naive"), NaiveBackend)
    assert isinstance(make_backend("strassen-winograd", cutoff=8),
                      StrassenWinogradBackend)
    with pytest.raises(ValueError):
        make_backend("bogus")
