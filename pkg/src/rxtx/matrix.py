"""Dense matrices over a pluggable element domain, block partitioning, and
the naive multiply / Gram kernels used as oracles everywhere else.

Two domains are supported: float64 (backed by ``array('d')``, so the data
buffer can be handed to the compiled kernels) and exact arbitrary-precision
integers (plain Python ints, which never overflow).
"""

from __future__ import annotations

import enum
from array import array

from .kernels import gemm_f64, gram_f64


class Domain(enum.Enum):
    FLOAT64 = "float64"
    EXACT_INT = "exact_int"


class DimensionMismatchError(ValueError):
    pass


class OpCounter:
    """Exact running totals of scalar multiplications and additions.

    Counts are plain Python ints, so they never overflow.  Counters only
    ever increase; ``merge`` folds a child counter in (the contract used
    when sub-products are evaluated on separate workers).
    """

    __slots__ = ("mults", "adds")

    def __init__(self):
        self.mults = 0
        self.adds = 0

    @property
    def total(self):
        return self.mults + self.adds

    def count_mults(self, k):
        if k < 0:
            raise ValueError("counter can only increase")
        self.mults += k

    def count_adds(self, k):
        if k < 0:
            raise ValueError("counter can only increase")
        self.adds += k

    def merge(self, other):
        self.mults += other.mults
        self.adds += other.adds

    def __repr__(self):
        return f"OpCounter(mults={self.mults}, adds={self.adds})"


def _new_data(domain, n):
    if domain is Domain.FLOAT64:
        return array("d", bytes(8 * n))
    return [0] * n


class DenseMatrix:
    """Immutable row-major dense matrix over a single element domain."""

    __slots__ = ("rows", "cols", "domain", "data")

    def __init__(self, rows, cols, domain, data):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dims must be positive")
        if len(data) != rows * cols:
            raise ValueError("data length must equal rows * cols")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("DenseMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols, domain=Domain.EXACT_INT):
        return cls(rows, cols, domain, _new_data(domain, rows * cols))

    @classmethod
    def from_rows(cls, rows_list, domain=Domain.EXACT_INT):
        r = len(rows_list)
        c = len(rows_list[0])
        if any(len(row) != c for row in rows_list):
            raise ValueError("ragged rows")
        flat = [v for row in rows_list for v in row]
        if domain is Domain.FLOAT64:
            flat = array("d", [float(v) for v in flat])
        else:
            flat = [int(v) for v in flat]
        return cls(r, c, domain, flat)

    def get(self, i, j):
        return self.data[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.data[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self):
        r, c, d = self.rows, self.cols, self.data
        out = _new_data(self.domain, r * c)
        for i in range(r):
            base = i * c
            for j in range(c):
                out[j * r + i] = d[base + j]
        return DenseMatrix(c, r, self.domain, out)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.domain is other.domain
                and list(self.data) == list(other.data))

    def __hash__(self):
        return hash((self.rows, self.cols, self.domain, tuple(self.data)))

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols}, {self.domain.value})"


def _check_same_shape(a, b):
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatchError(
            f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    if a.domain is not b.domain:
        raise DimensionMismatchError("mixed element domains")


def add(a, b, counter=None):
    """Elementwise sum.  Counts one scalar addition per cell."""
    _check_same_shape(a, b)
    da, db = a.data, b.data
    out = _new_data(a.domain, len(da))
    for i in range(len(da)):
        out[i] = da[i] + db[i]
    if counter is not None:
        counter.count_adds(len(da))
    return DenseMatrix(a.rows, a.cols, a.domain, out)


def sub(a, b, counter=None):
    _check_same_shape(a, b)
    da, db = a.data, b.data
    out = _new_data(a.domain, len(da))
    for i in range(len(da)):
        out[i] = da[i] - db[i]
    if counter is not None:
        counter.count_adds(len(da))
    return DenseMatrix(a.rows, a.cols, a.domain, out)


def neg(a):
    out = _new_data(a.domain, len(a.data))
    for i, v in enumerate(a.data):
        out[i] = -v
    return DenseMatrix(a.rows, a.cols, a.domain, out)


def signed_sum(terms, counter=None):
    """Signed sum of equally-shaped matrices given as (sign, matrix) pairs.

    A k-term sum costs k-1 elementwise additions; leading negation is free
    (it is fused into the first accumulation pass).
    """
    if not terms:
        raise ValueError("empty sum")
    s0, m0 = terms[0]
    for _, m in terms[1:]:
        _check_same_shape(m0, m)
    out = _new_data(m0.domain, len(m0.data))
    for i, v in enumerate(m0.data):
        out[i] = v if s0 > 0 else -v
    for s, m in terms[1:]:
        dm = m.data
        if s > 0:
            for i in range(len(out)):
                out[i] += dm[i]
        else:
            for i in range(len(out)):
                out[i] -= dm[i]
    if counter is not None:
        counter.count_adds((len(terms) - 1) * len(out))
    return DenseMatrix(m0.rows, m0.cols, m0.domain, out)


def naive_multiply(a, b, counter=None):
    """Schoolbook product: rows*cols*b.cols multiplications when counted."""
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.domain is not b.domain:
        raise DimensionMismatchError("mixed element domains")
    n, k, m = a.rows, a.cols, b.cols
    if a.domain is Domain.FLOAT64:
        out = array("d", bytes(8 * n * m))
        gemm_f64(a.data, b.data, n, k, m, out)
    else:
        out = [0] * (n * m)
        da, db = a.data, b.data
        for i in range(n):
            abase = i * k
            obase = i * m
            for p in range(k):
                v = da[abase + p]
                if v == 0:
                    continue
                bbase = p * m
                for j in range(m):
                    out[obase + j] += v * db[bbase + j]
    if counter is not None:
        counter.count_mults(n * k * m)
        counter.count_adds(n * m * (k - 1))
    return DenseMatrix(n, m, a.domain, out)


def naive_gram(x, counter=None):
    """Symmetry-exploiting X X^t: upper triangle computed, lower mirrored.

    For a square n x n input the multiplication count is n^2 (n+1) / 2.
    """
    n, m = x.rows, x.cols
    if x.domain is Domain.FLOAT64:
        out = array("d", bytes(8 * n * n))
        gram_f64(x.data, n, m, out)
    else:
        out = [0] * (n * n)
        d = x.data
        for i in range(n):
            ri = i * m
            for j in range(i, n):
                rj = j * m
                acc = 0
                for p in range(m):
                    acc += d[ri + p] * d[rj + p]
                out[i * n + j] = acc
                out[j * n + i] = acc
    if counter is not None:
        ut = n * (n + 1) // 2
        counter.count_mults(ut * m)
        counter.count_adds(ut * (m - 1))
    return DenseMatrix(n, n, x.domain, out)


def _pad_to(x, rows, cols):
    if x.rows == rows and x.cols == cols:
        return x
    out = _new_data(x.domain, rows * cols)
    for i in range(x.rows):
        src = i * x.cols
        dst = i * cols
        out[dst:dst + x.cols] = x.data[src:src + x.cols]
    return DenseMatrix(rows, cols, x.domain, out)


def crop(x, rows, cols):
    if x.rows == rows and x.cols == cols:
        return x
    out = _new_data(x.domain, rows * cols)
    for i in range(rows):
        src = i * x.cols
        dst = i * cols
        out[dst:dst + cols] = x.data[src:src + cols]
    return DenseMatrix(rows, cols, x.domain, out)


class BlockPartition:
    """A g x g blocking of a (zero-padded) matrix.

    Blocks are indexed 1..g*g in row-major block order, matching the
    X_1..X_16 labelling of the 4x4 scheme (block (r, c), 1-based, is
    X_{g(r-1)+c}).
    """

    __slots__ = ("source_rows", "source_cols", "grid", "padded_rows",
                 "padded_cols", "_blocks")

    def __init__(self, source_rows, source_cols, grid, padded_rows,
                 padded_cols, blocks):
        self.source_rows = source_rows
        self.source_cols = source_cols
        self.grid = grid
        self.padded_rows = padded_rows
        self.padded_cols = padded_cols
        self._blocks = blocks

    @property
    def block_rows(self):
        return self.padded_rows // self.grid

    @property
    def block_cols(self):
        return self.padded_cols // self.grid

    def block(self, idx):
        """1-based row-major block index, 1..grid**2."""
        if not 1 <= idx <= self.grid * self.grid:
            raise IndexError(f"block index {idx} out of range")
        return self._blocks[idx - 1]

    def blocks(self):
        return list(self._blocks)


def partition(x, grid):
    """Split ``x`` into a grid x grid block partition, zero-padding each
    dimension up to the next multiple of ``grid``."""
    if grid not in (2, 4):
        raise ValueError("grid must be 2 or 4")
    pr = -(-x.rows // grid) * grid
    pc = -(-x.cols // grid) * grid
    xp = _pad_to(x, pr, pc)
    br, bc = pr // grid, pc // grid
    blocks = []
    for r in range(grid):
        for c in range(grid):
            out = _new_data(x.domain, br * bc)
            for i in range(br):
                src = (r * br + i) * pc + c * bc
                out[i * bc:(i + 1) * bc] = xp.data[src:src + bc]
            blocks.append(DenseMatrix(br, bc, x.domain, out))
    return BlockPartition(x.rows, x.cols, grid, pr, pc, blocks)


def assemble(part):
    """Inverse of :func:`partition`: rebuild and crop to the source dims."""
    g = part.grid
    br, bc = part.block_rows, part.block_cols
    pr, pc = part.padded_rows, part.padded_cols
    domain = part.block(1).domain
    out = _new_data(domain, pr * pc)
    for r in range(g):
        for c in range(g):
            blk = part.block(r * g + c + 1)
            for i in range(br):
                dst = (r * br + i) * pc + c * bc
                out[dst:dst + bc] = blk.data[i * bc:(i + 1) * bc]
    full = DenseMatrix(pr, pc, domain, out)
    return crop(full, part.source_rows, part.source_cols)


def assemble_symmetric(upper_blocks, n, grid):
    """Assemble a symmetric n x n result from its upper-triangle blocks.

    ``upper_blocks`` maps 1-based (i, j) with i <= j to square blocks of
    equal size.  Lower-triangle blocks are mirrored, never recomputed, and
    the strict upper part of each diagonal block is mirrored onto its lower
    part so the output is symmetric bit-for-bit even in float arithmetic.
    """
    bs = upper_blocks[(1, 1)].rows
    domain = upper_blocks[(1, 1)].domain
    pn = grid * bs
    out = _new_data(domain, pn * pn)

    def put(i, j, blk):
        for r in range(bs):
            dst = (i * bs + r) * pn + j * bs
            out[dst:dst + bs] = blk.data[r * bs:(r + 1) * bs]

    for i in range(1, grid + 1):
        for j in range(i, grid + 1):
            blk = upper_blocks[(i, j)]
            if i == j:
                blk = symmetrize_upper(blk)
                put(i - 1, i - 1, blk)
            else:
                put(i - 1, j - 1, blk)
                put(j - 1, i - 1, blk.transpose())
    return crop(DenseMatrix(pn, pn, domain, out), n, n)


def symmetrize_upper(blk):
    """Copy the strict upper triangle onto the lower one."""
    n = blk.rows
    out = _new_data(blk.domain, n * n)
    out[:] = blk.data[:]
    for i in range(n):
        for j in range(i + 1, n):
            out[j * n + i] = out[i * n + j]
    return DenseMatrix(n, n, blk.domain, out)
