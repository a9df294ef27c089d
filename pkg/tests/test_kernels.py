import random
from array import array

import pytest

from rxtx.kernels import KERNEL_IMPL, fallback

try:
    from rxtx.kernels import _speedups
except ImportError:
    _speedups = None


def _rand_array(rng, k):
    return array("d", (rng.gauss(0.0, 1.0) for _ in range(k)))


def test_active_implementation_reported():
    assert KERNEL_IMPL in ("compiled", "python")


def test_fallback_gemm_small():
    a = array("d", [1, 2, 3, 4])
    b = array("d", [5, 6, 7, 8])
    out = array("d", [0.0] * 4)
    fallback.gemm_f64(a, b, 2, 2, 2, out)
    assert list(out) == [19, 22, 43, 50]


def test_fallback_gram_matches_gemm_with_transpose():
    rng = random.Random(0)
    n, m = 5, 7
    x = _rand_array(rng, n * m)
    xt = array("d", [0.0] * (m * n))
    for i in range(n):
        for j in range(m):
            xt[j * n + i] = x[i * m + j]
    want = array("d", [0.0] * (n * n))
    fallback.gemm_f64(x, xt, n, m, n, want)
    got = array("d", [0.0] * (n * n))
    fallback.gram_f64(x, n, m, got)
    assert got == want


@pytest.mark.skipif(_speedups is None, reason="compiled kernels not built")
def test_compiled_matches_fallback_bitwise():
    rng = random.Random(1)
    n, k, m = 6, 9, 5
    a = _rand_array(rng, n * k)
    b = _rand_array(rng, k * m)
    out_c = array("d", [0.0] * (n * m))
    out_py = array("d", [0.0] * (n * m))
    _speedups.gemm_f64(a, b, n, k, m, out_c)
    fallback.gemm_f64(a, b, n, k, m, out_py)
    assert out_c == out_py

    x = _rand_array(rng, n * k)
    g_c = array("d", [0.0] * (n * n))
    g_py = array("d", [0.0] * (n * n))
    _speedups.gram_f64(x, n, k, g_c)
    fallback.gram_f64(x, n, k, g_py)
    assert g_c == g_py
