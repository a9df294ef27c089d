import math
import random

import pytest

from rxtx import matrix as mx
from rxtx.backends import StrassenWinogradBackend
from rxtx.executor import rxtx_gram, strassen_xxt_gram
from rxtx.matrix import DenseMatrix, Domain, OpCounter


def rand_int_matrix(rng, n, m):
    return DenseMatrix.from_rows(
        [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])


def rand_float_matrix(rng, n, m):
    return DenseMatrix.from_rows(
        [[rng.gauss(0, 1) for _ in range(m)] for _ in range(n)],
        Domain.FLOAT64)


def test_exact_equivalence_small_grid_of_cases():
    rng = random.Random(0)
    for n, m in [(1, 1), (4, 4), (5, 3), (8, 8), (12, 7), (16, 16)]:
        x = rand_int_matrix(rng, n, m)
        want = mx.naive_gram(x)
        for cutoff in (1, 2, 4):
            for plan in ("naive139", "optimized100"):
                assert rxtx_gram(x, cutoff=cutoff, plan=plan) == want
            assert strassen_xxt_gram(x, cutoff=cutoff) == want


def test_output_exactly_symmetric():
    rng = random.Random(1)
    x = rand_float_matrix(rng, 16, 16)
    g = rxtx_gram(x, cutoff=4)
    for i in range(16):
        for j in range(16):
            assert g.get(i, j) == g.get(j, i)


def test_instrumented_counts_n4():
    rng = random.Random(2)
    x = rand_int_matrix(rng, 4, 4)

    counter = OpCounter()
    rxtx_gram(x, cutoff=1, plan="optimized100", counter=counter)
    assert counter.mults == 34
    assert counter.total == 134

    counter = OpCounter()
    rxtx_gram(x, cutoff=1, plan="naive139", counter=counter)
    assert counter.mults == 34
    assert counter.total == 34 + 139

    # the 2x2 baseline reaches 38 multiplications only when its general
    # products are themselves done with Strassen-Winograd
    counter = OpCounter()
    strassen_xxt_gram(x, cutoff=1,
                      backend=StrassenWinogradBackend(cutoff=1),
                      counter=counter)
    assert counter.mults == 38


def test_strassen_winograd_backend_inside_rxtx():
    rng = random.Random(3)
    x = rand_int_matrix(rng, 16, 16)
    got = rxtx_gram(x, cutoff=4, backend=StrassenWinogradBackend(cutoff=2))
    assert got == mx.naive_gram(x)


def test_float_accuracy_deep_recursion():
    rng = random.Random(4)
    for n in (64, 128):
        x = rand_float_matrix(rng, n, n)
        got = rxtx_gram(x, cutoff=1)
        want = mx.naive_gram(x)
        num = den = 0.0
        gd, wd = got.data, want.data
        for i in range(len(gd)):
            d = gd[i] - wd[i]
            num += d * d
            den += wd[i] * wd[i]
        assert math.sqrt(num / den) <= 1e-12


def test_bad_arguments():
    x = DenseMatrix.zeros(4, 4)
    with pytest.raises(ValueError):
        rxtx_gram(x, cutoff=0)
    with pytest.raises(ValueError):
        rxtx_gram(x, plan="bogus")
