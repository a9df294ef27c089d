# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled float64 inner kernels: schoolbook GEMM and the symmetric
Gram product.  Buffers are flat row-major float64 arrays."""


def gemm_f64(double[::1] a, double[::1] b, int n, int k, int m,
             double[::1] out):
    cdef int i, j, p
    cdef double v
    for i in range(n):
        for p in range(k):
            v = a[i * k + p]
            if v == 0.0:
                continue
            for j in range(m):
                out[i * m + j] += v * b[p * m + j]


def gram_f64(double[::1] x, int n, int m, double[::1] out):
    cdef int i, j, p
    cdef double acc
    for i in range(n):
        for j in range(i, n):
            acc = 0.0
            for p in range(m):
                acc += x[i * m + p] * x[j * m + p]
            out[i * n + j] = acc
            out[j * n + i] = acc
