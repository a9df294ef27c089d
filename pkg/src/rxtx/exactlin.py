"""Small exact linear algebra over rationals used by the discovery search:
row reduction, rank, residues modulo a subspace, and linear solves.

Vectors are tuples/lists of ints or Fractions; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form.  Returns (rref rows, pivot columns)."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def residue(basis_rref, pivots, v):
    """v minus its projection onto the row space given in RREF."""
    out = [Fraction(x) for x in v]
    for row, c in zip(basis_rref, pivots):
        f = out[c]
        if f != 0:
            out = [a - f * b for a, b in zip(out, row)]
    return out


def primitive_int(vec):
    """Scale a rational vector to coprime ints with positive leading sign.

    Returns None for the zero vector.
    """
    fr = [Fraction(x) for x in vec]
    if all(x == 0 for x in fr):
        return None
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def independent_subset(vectors, limit=None):
    """Indices of a greedy maximal (or size-``limit``) independent subset."""
    chosen = []
    basis = []
    pivots = []
    for idx, v in enumerate(vectors):
        r = residue(basis, pivots, v)
        p = next((c for c, x in enumerate(r) if x != 0), None)
        if p is None:
            continue
        r = [x / r[p] for x in r]
        for brow_i in range(len(basis)):
            f = basis[brow_i][p]
            if f != 0:
                basis[brow_i] = [a - f * b for a, b in zip(basis[brow_i], r)]
        basis.append(r)
        pivots.append(p)
        chosen.append(idx)
        if limit is not None and len(chosen) == limit:
            break
    return chosen


def solve_combination(columns, target):
    """Solve sum_i x_i columns[i] = target exactly.

    Returns a list of Fractions (one particular solution, free variables
    set to 0) or None if the target is outside the span.
    """
    n = len(columns)
    if n == 0:
        return None
    dim = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])]
           for i in range(dim)]
    red, pivots = rref(aug)
    sol = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        if p == n:  # pivot in the RHS column: inconsistent
            return None
        sol[p] = row[n]
    # rows below rank are zero by construction of rref
    return sol
