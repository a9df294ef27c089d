"""Bilinear schemes for X X^t as data, plus an exact symbolic verifier.

A scheme over a g x g blocking consists of

* general products: product k computes (sum_i alpha_ki X_i) (sum_j beta_kj X_j)^t,
* recursive calls: call c computes X_a X_a^t for one block index a,
* outputs: each upper-triangle block (i, j) is an integer combination of
  products and recursive calls.

Correctness is proved over the free non-commutative monomial basis
{X_a X_b^t}: left factors are linear in blocks and right factors linear in
transposed blocks, so the monomials are linearly independent and exact
coefficient matching is necessary and sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BilinearScheme:
    grid: int
    # products[k] = (alpha, beta), integer (or rational) vectors of length grid**2
    products: tuple
    # 1-based block indices receiving a recursive call
    calls: tuple
    # outputs[(i, j)] = (gamma over products, sigma over calls), upper triangle
    outputs: dict

    def n_products(self):
        return len(self.products)

    def n_calls(self):
        return len(self.calls)

    def validate_shape(self):
        g2 = self.grid * self.grid
        for k, (a, b) in enumerate(self.products):
            if len(a) != g2 or len(b) != g2:
                raise ValueError(
                    f"product {k + 1}: coefficient vector length != {g2}")
        for (i, j), (gam, sig) in self.outputs.items():
            if not 1 <= i <= j <= self.grid:
                raise ValueError(f"output ({i},{j}) not upper-triangle")
            if len(gam) != len(self.products) or len(sig) != len(self.calls):
                raise ValueError(f"output ({i},{j}): combination length")


def _vec(grid, signed_indices):
    """Coefficient vector from 1-based signed block indices."""
    v = [0] * (grid * grid)
    for s in signed_indices:
        v[abs(s) - 1] += 1 if s > 0 else -1
    return tuple(v)


def _combo(n, signed_indices):
    v = [0] * n
    for s in signed_indices:
        v[abs(s) - 1] += 1 if s > 0 else -1
    return tuple(v)


# The 26 general products of the 4x4 X X^t scheme: signed 1-based block
# indices of the left factor and of the (transposed) right factor.
_RXTX_PRODUCTS = (
    ((-2, 3, -4, 8), (8, 11)),
    ((1, -5, -6, 7), (15, 5)),
    ((-2, 12), (-10, 16, 12)),
    ((9, -6), (13, 9, -14)),
    ((2, 11), (-6, 15, -7)),
    ((6, 11), (6, 7, -11)),
    ((11,), (6, 7)),
    ((2,), (-14, -10, 6, -15, 7, 16, 12)),
    ((6,), (13, 9, -14, -10, 6, 7, -11)),
    ((2, -3, 7, 11, 4, -8), (11,)),
    ((5, 6, -7), (5,)),
    ((2, -3, 4), (8,)),
    ((-1, 5, 6, 3, -7, 11), (15,)),
    ((-1, 5, 6), (13, 9, 15)),
    ((2, 4, -8), (11, 16, 12)),
    ((1, -8), (9, -16)),
    ((12,), (10, -12)),
    ((9,), (13, -14)),
    ((-2, 3), (-15, 7, 8)),
    ((5, 9, -8), (9,)),
    ((8,), (9, -8, 12)),
    ((-6, 7), (5, 7, -11)),
    ((1,), (13, -5, 16)),
    ((-1, 4, 12), (16,)),
    ((9, 2, 10), (14,)),
    ((6, 10, 12), (10,)),
)

_RXTX_CALLS = (1, 2, 3, 4, 13, 14, 15, 16)

# Output combinations: signed 1-based product indices and call indices.
_RXTX_OUTPUTS = {
    (1, 1): ((), (1, 2, 3, 4)),
    (1, 2): ((2, -5, -7, 11, 12, 13, 19), ()),
    (1, 3): ((1, 3, 12, 15, 16, 17, 21, -24), ()),
    (1, 4): ((2, -3, -5, -7, -8, 11, 13, -17, 23, 24), ()),
    (2, 2): ((1, 6, -7, 10, 11, 12, 22), ()),
    (2, 3): ((1, -4, 6, -7, -9, 10, 12, 18, 20, 21), ()),
    (2, 4): ((2, 4, 11, 14, 16, -18, -20, 23), ()),
    (3, 3): ((4, -6, 7, 9, -17, -18, 26), ()),
    (3, 4): ((3, 5, 7, 8, 17, 18, 25), ()),
    (4, 4): ((), (5, 6, 7, 8)),
}


def rxtx_scheme():
    """The 4x4 scheme: 26 general products and 8 recursive calls."""
    products = tuple((_vec(4, a), _vec(4, b)) for a, b in _RXTX_PRODUCTS)
    outputs = {
        ij: (_combo(26, gam), _combo(8, sig))
        for ij, (gam, sig) in _RXTX_OUTPUTS.items()
    }
    s = BilinearScheme(4, products, _RXTX_CALLS, outputs)
    s.validate_shape()
    return s


def strassen_xxt_scheme():
    """The 2x2 baseline: 4 recursive calls (A, B, C, D) plus the two
    general products A C^t and B D^t."""
    products = (
        (_vec(2, (1,)), _vec(2, (3,))),
        (_vec(2, (2,)), _vec(2, (4,))),
    )
    calls = (1, 2, 3, 4)
    outputs = {
        (1, 1): (_combo(2, ()), _combo(4, (1, 2))),
        (1, 2): (_combo(2, (1, 2)), _combo(4, ())),
        (2, 2): (_combo(2, ()), _combo(4, (3, 4))),
    }
    s = BilinearScheme(2, products, calls, outputs)
    s.validate_shape()
    return s


def target_monomial_matrix(grid, i, j):
    """g^2 x g^2 coefficient matrix of the target sum_k X_(i,k) X_(j,k)^t;
    entry (a-1, b-1) holds the coefficient of the monomial X_a X_b^t."""
    g2 = grid * grid
    t = [[0] * g2 for _ in range(g2)]
    for k in range(1, grid + 1):
        a = (i - 1) * grid + k
        b = (j - 1) * grid + k
        t[a - 1][b - 1] += 1
    return t


def expand_output(scheme, i, j):
    """Monomial-coefficient matrix of one output's combination."""
    g2 = scheme.grid * scheme.grid
    m = [[0] * g2 for _ in range(g2)]
    gam, sig = scheme.outputs[(i, j)]
    for k, c in enumerate(gam):
        if c == 0:
            continue
        alpha, beta = scheme.products[k]
        for a in range(g2):
            if alpha[a] == 0:
                continue
            ca = c * alpha[a]
            for b in range(g2):
                if beta[b] != 0:
                    m[a][b] += ca * beta[b]
    for c_idx, c in enumerate(sig):
        if c == 0:
            continue
        a = scheme.calls[c_idx] - 1
        m[a][a] += c
    return m


def _symmetrize(m):
    g2 = len(m)
    return [[m[a][b] + m[b][a] for b in range(g2)] for a in range(g2)]


@dataclass
class SchemeVerdict:
    ok: bool
    # (label, diff matrix: expansion minus target) per failing output
    failures: list

    def failing_labels(self):
        return [label for label, _ in self.failures]


def verify_scheme(scheme, commutative=False):
    """Check every upper-triangle output identity by exact expansion.

    With ``commutative=False`` the comparison happens in the free
    non-commutative basis (the right notion for block schemes).  With
    ``commutative=True`` both sides are symmetrized first, which is the
    right notion for scalar-entry schemes such as discovery output.
    """
    scheme.validate_shape()
    failures = []
    for i in range(1, scheme.grid + 1):
        for j in range(i, scheme.grid + 1):
            got = expand_output(scheme, i, j)
            want = target_monomial_matrix(scheme.grid, i, j)
            if commutative:
                got = _symmetrize(got)
                want = _symmetrize(want)
            if got != want:
                g2 = len(got)
                diff = [[got[a][b] - want[a][b] for b in range(g2)]
                        for a in range(g2)]
                failures.append((f"C{i}{j}", diff))
    return SchemeVerdict(not failures, failures)


def mutate_product_coefficient(scheme, product_idx, side, block_idx, delta):
    """Return a copy with one product coefficient changed (test helper).

    ``product_idx`` and ``block_idx`` are 1-based; side is "left"/"right".
    """
    products = list(scheme.products)
    alpha, beta = products[product_idx - 1]
    if side == "left":
        v = list(alpha)
        v[block_idx - 1] += delta
        products[product_idx - 1] = (tuple(v), beta)
    else:
        v = list(beta)
        v[block_idx - 1] += delta
        products[product_idx - 1] = (alpha, tuple(v))
    return BilinearScheme(scheme.grid, tuple(products), scheme.calls,
                          dict(scheme.outputs))


# ---------------------------------------------------------------------------
# Plain-text tabular scheme format
# ---------------------------------------------------------------------------
#   grid 4
#   calls 1 2 3 4 13 14 15 16
#   1 : a1 ... a16 | b1 ... b16          (one line per product)
#   C11 : g1 ... g26 | s1 ... s8         (one line per output)
# Coefficients are integers, or p/q rationals for discovered schemes.


def _fmt_coef(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _parse_coef(tok):
    if "/" in tok:
        return Fraction(tok)
    return int(tok)


def scheme_to_text(scheme):
    lines = [f"grid {scheme.grid}",
             "calls " + " ".join(str(c) for c in scheme.calls)]
    for k, (alpha, beta) in enumerate(scheme.products, start=1):
        lines.append(f"{k} : " + " ".join(_fmt_coef(c) for c in alpha)
                     + " | " + " ".join(_fmt_coef(c) for c in beta))
    for (i, j) in sorted(scheme.outputs):
        gam, sig = scheme.outputs[(i, j)]
        lines.append(f"C{i}{j} : " + " ".join(_fmt_coef(c) for c in gam)
                     + " | " + " ".join(_fmt_coef(c) for c in sig))
    return "\n".join(lines) + "\n"


def scheme_from_text(text):
    grid = None
    calls = ()
    products = []
    outputs = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("grid "):
            grid = int(line.split()[1])
            continue
        if line.startswith("calls"):
            calls = tuple(int(t) for t in line.split()[1:])
            continue
        head, _, rest = line.partition(":")
        left, _, right = rest.partition("|")
        lv = tuple(_parse_coef(t) for t in left.split())
        rv = tuple(_parse_coef(t) for t in right.split())
        head = head.strip()
        if head.startswith("C"):
            i, j = int(head[1]), int(head[2])
            outputs[(i, j)] = (lv, rv)
        else:
            products.append((lv, rv))
    if grid is None:
        raise ValueError("scheme text missing 'grid' line")
    s = BilinearScheme(grid, tuple(products), calls, outputs)
    s.validate_shape()
    return s
