"""General matrix-product engines: naive, Strassen-Winograd with cutoff,
and an optional BLAS-backed external backend (numpy).

The Strassen-Winograd level is the 7-product / 15-addition variant.  Its
block additions are listed in ``WINOGRAD_ADDITIONS`` so the structural
count can be checked independently of an instrumented run.
"""

from __future__ import annotations

from . import matrix as mx
from .matrix import DenseMatrix, Domain, DimensionMismatchError


class BackendUnavailableError(RuntimeError):
    pass


class GemmBackend:
    """Base contract: gemm(a, b, counter) -> a @ b."""

    name = "base"

    def gemm(self, a, b, counter=None):
        raise NotImplementedError

    def available(self):
        return True


class NaiveBackend(GemmBackend):
    name = "naive"

    def gemm(self, a, b, counter=None):
        return mx.naive_multiply(a, b, counter)


# One level of Strassen-Winograd, as data.  Each entry is one binary block
# addition/subtraction; 15 in total (4 left-side, 4 right-side, 7 combine).
WINOGRAD_ADDITIONS = (
    ("S1", "+", "A21", "A22"),
    ("S2", "-", "S1", "A11"),
    ("S3", "-", "A11", "A21"),
    ("S4", "-", "A12", "S2"),
    ("T1", "-", "B12", "B11"),
    ("T2", "-", "B22", "T1"),
    ("T3", "-", "B22", "B12"),
    ("T4", "-", "T2", "B21"),
    ("U1", "+", "P1", "P2"),
    ("U2", "+", "P1", "P6"),
    ("U3", "+", "U2", "P7"),
    ("U4", "+", "U2", "P5"),
    ("C12", "+", "U4", "P3"),
    ("C21", "-", "U3", "P4"),
    ("C22", "+", "U3", "P5"),
)

# The 7 products of the same level.
WINOGRAD_PRODUCTS = (
    ("P1", "A11", "B11"),
    ("P2", "A12", "B21"),
    ("P3", "S4", "B22"),
    ("P4", "A22", "T4"),
    ("P5", "S1", "T1"),
    ("P6", "S2", "T2"),
    ("P7", "S3", "T3"),
)


def winograd_addition_count():
    """Number of block additions in one Strassen-Winograd level (15)."""
    return len(WINOGRAD_ADDITIONS)


class StrassenWinogradBackend(GemmBackend):
    """Recursive Strassen-Winograd with a naive-kernel cutoff.

    Dimensions are padded per level to even; at or below the cutoff (max
    dimension) the naive kernel runs.  Counted operations are exact.
    """

    name = "strassen-winograd"

    def __init__(self, cutoff=64):
        if cutoff < 1:
            raise ValueError("cutoff must be >= 1")
        self.cutoff = cutoff

    def gemm(self, a, b, counter=None):
        if a.cols != b.rows:
            raise DimensionMismatchError(
                f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
        return self._mul(a, b, counter)

    def _mul(self, a, b, counter):
        n, k, m = a.rows, a.cols, b.cols
        if max(n, k, m) <= self.cutoff or min(n, k, m) <= 1:
            return mx.naive_multiply(a, b, counter)

        pa = mx.partition(a, 2)
        pb = mx.partition(b, 2)
        blocks = {}
        blocks["A11"], blocks["A12"] = pa.block(1), pa.block(2)
        blocks["A21"], blocks["A22"] = pa.block(3), pa.block(4)
        blocks["B11"], blocks["B12"] = pb.block(1), pb.block(2)
        blocks["B21"], blocks["B22"] = pb.block(3), pb.block(4)

        prods = {name: (la, rb) for name, la, rb in WINOGRAD_PRODUCTS}
        for name, op, x, y in WINOGRAD_ADDITIONS:
            if name in ("C12", "C21", "C22"):
                continue
            if name.startswith("U"):
                continue
            f = mx.add if op == "+" else mx.sub
            blocks[name] = f(blocks[x], blocks[y], counter)

        for name, la, rb in WINOGRAD_PRODUCTS:
            blocks[name] = self._mul(blocks[la], blocks[rb], counter)

        for name, op, x, y in WINOGRAD_ADDITIONS:
            if name in blocks:
                continue
            f = mx.add if op == "+" else mx.sub
            blocks[name] = f(blocks[x], blocks[y], counter)

        c11 = blocks["U1"]
        c12, c21, c22 = blocks["C12"], blocks["C21"], blocks["C22"]
        br, bc = c11.rows, c11.cols
        domain = a.domain
        out = mx._new_data(domain, (2 * br) * (2 * bc))
        pc = 2 * bc
        for (r0, c0, blk) in ((0, 0, c11), (0, bc, c12), (br, 0, c21),
                              (br, bc, c22)):
            for i in range(br):
                dst = (r0 + i) * pc + c0
                out[dst:dst + bc] = blk.data[i * bc:(i + 1) * bc]
        full = DenseMatrix(2 * br, 2 * bc, domain, out)
        return mx.crop(full, n, m)


class ExternalBackend(GemmBackend):
    """Platform-optimized provider (numpy / BLAS) behind the same contract.

    Operation counters are not updated: the provider's internal algorithm
    is opaque.  Exact-integer inputs run through numpy object arrays, so
    results stay exact.
    """

    name = "external"

    def __init__(self):
        try:
            import numpy
        except ImportError:
            numpy = None
        self._np = numpy

    def available(self):
        return self._np is not None

    def gemm(self, a, b, counter=None):
        if self._np is None:
            raise BackendUnavailableError("external backend unavailable: "
                                          "numpy not importable")
        if a.cols != b.rows:
            raise DimensionMismatchError(
                f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
        np = self._np
        if a.domain is Domain.FLOAT64:
            na = np.frombuffer(a.data, dtype=np.float64).reshape(a.rows,
                                                                 a.cols)
            nb = np.frombuffer(b.data, dtype=np.float64).reshape(b.rows,
                                                                 b.cols)
            res = na @ nb
            from array import array
            return DenseMatrix(a.rows, b.cols, Domain.FLOAT64,
                               array("d", res.reshape(-1).tolist()))
        na = np.array(a.to_rows(), dtype=object)
        nb = np.array(b.to_rows(), dtype=object)
        res = na @ nb
        flat = [int(v) for row in res.tolist() for v in row]
        return DenseMatrix(a.rows, b.cols, Domain.EXACT_INT, flat)


_BACKENDS = {
    "naive": NaiveBackend,
    "strassen-winograd": StrassenWinogradBackend,
    "external": ExternalBackend,
}


def make_backend(name, cutoff=64):
    if name == "strassen-winograd":
        return StrassenWinogradBackend(cutoff)
    try:
        return _BACKENDS[name]()
    except KeyError:
        raise ValueError(f"unknown backend {name!r}") from None
