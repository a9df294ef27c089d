"""Pure-Python float64 kernels, used when the compiled extension is not
available.  Same contracts as the Cython versions in ``_speedups.pyx``."""


def gemm_f64(a, b, n, k, m, out):
    """out[n*m] = a[n*k] @ b[k*m], all row-major float buffers."""
    for i in range(n):
        abase = i * k
        obase = i * m
        for p in range(k):
            v = a[abase + p]
            if v == 0.0:
                continue
            bbase = p * m
            for j in range(m):
                out[obase + j] += v * b[bbase + j]


def gram_f64(x, n, m, out):
    """out[n*n] = x @ x^t for row-major x[n*m]; computes the upper triangle
    and mirrors it."""
    for i in range(n):
        ri = i * m
        for j in range(i, n):
            rj = j * m
            acc = 0.0
            for p in range(m):
                acc += x[ri + p] * x[rj + p]
            out[i * n + j] = acc
            out[j * n + i] = acc
