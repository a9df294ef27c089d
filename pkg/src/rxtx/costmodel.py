"""Exact operation-count model: recurrences, closed forms, optimal-cutoff
dynamic programming, and CSV ratio tables.

All arithmetic is exact (Python ints and fractions.Fraction); floats only
appear in the 6-decimal renderings of the emitted table.  The closed forms
use n^(log2 7) = 7^(log2 n), an integer power whenever log2 n is integral.

Algorithms and metrics:

* rxtx          - 4x4 recursive X X^t scheme (n a power of 4)
* strassen-xxt  - 2x2 recursive X X^t baseline (n a power of 2)
* winograd      - Strassen-Winograd general product (n a power of 2)
* naive-gram    - symmetry-exploiting schoolbook X X^t (any n)
* naive-gemm    - schoolbook general product (any n)

metric "mults" counts scalar multiplications, "ops" multiplications plus
additions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

ALGORITHMS = ("rxtx", "strassen-xxt", "winograd", "naive-gram", "naive-gemm")
METRICS = ("mults", "ops")


def _log2_exact(n):
    k = n.bit_length() - 1
    if n <= 0 or (1 << k) != n:
        raise ValueError(f"{n} is not a power of 2")
    return k


def _check_power(alg, n):
    k = _log2_exact(n)
    if alg == "rxtx" and k % 2 != 0:
        raise ValueError(f"rxtx counts require n to be a power of 4, got {n}")
    return k


def naive_gram_mults(n):
    return n * n * (n + 1) // 2


def naive_gram_ops(n):
    return (2 * n - 1) * n * (n + 1) // 2


def naive_gemm_mults(n):
    return n ** 3


def naive_gemm_ops(n):
    # n mults and n-1 adds per output entry
    return 2 * n ** 3 - n * n


@lru_cache(maxsize=None)
def _winograd(n, metric):
    if n == 1:
        return 1
    sub = _winograd(n // 2, metric)
    if metric == "mults":
        return 7 * sub
    return 7 * sub + 15 * (n // 2) ** 2


@lru_cache(maxsize=None)
def _strassen_xxt(n, metric):
    if n == 1:
        return 1
    sub = _strassen_xxt(n // 2, metric)
    m = _winograd(n // 2, metric)
    if metric == "mults":
        return 4 * sub + 2 * m
    return 4 * sub + 2 * m + 3 * (n // 2) ** 2


@lru_cache(maxsize=None)
def _rxtx(n, metric):
    if n == 1:
        return 1
    sub = _rxtx(n // 4, metric)
    m = _winograd(n // 4, metric)
    if metric == "mults":
        return 8 * sub + 26 * m
    return 8 * sub + 26 * m + 100 * (n // 4) ** 2


def count_recurrence(alg, metric, n):
    """Exact count by direct recurrence evaluation (base cases all 1)."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if alg == "naive-gram":
        return naive_gram_mults(n) if metric == "mults" else naive_gram_ops(n)
    if alg == "naive-gemm":
        return naive_gemm_mults(n) if metric == "mults" else naive_gemm_ops(n)
    _check_power(alg, n)
    if alg == "winograd":
        return _winograd(n, metric)
    if alg == "strassen-xxt":
        return _strassen_xxt(n, metric)
    if alg == "rxtx":
        return _rxtx(n, metric)
    raise ValueError(f"unknown algorithm {alg!r}")


def count_closed_form(alg, metric, n):
    """Exact rational evaluation of the closed-form count expressions."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if alg == "naive-gram":
        return Fraction(count_recurrence(alg, metric, n))
    if alg == "naive-gemm":
        return Fraction(count_recurrence(alg, metric, n))
    k = _check_power(alg, n)
    pow7 = 7 ** k  # n^(log2 7)
    if alg == "winograd":
        if metric == "mults":
            return Fraction(pow7)
        return Fraction(6 * pow7 - 5 * n * n)
    if alg == "strassen-xxt":
        if metric == "mults":
            return Fraction(2, 3) * pow7 + Fraction(1, 3) * n * n
        return (4 * Fraction(pow7) - Fraction(7, 4) * n * n * k
                - 3 * Fraction(n * n))
    if alg == "rxtx":
        n32 = 2 ** (3 * k // 2)  # n^(3/2), integral since k is even
        if metric == "mults":
            return Fraction(26, 41) * pow7 + Fraction(15, 41) * n32
        return (Fraction(156, 41) * pow7 - Fraction(615, 164) * n * n
                + Fraction(155, 164) * n32)
    raise ValueError(f"unknown algorithm {alg!r}")


# ---------------------------------------------------------------------------
# Optimal cutoff: switch to the naive count whenever it is smaller.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _winograd_opt(n, metric):
    naive = naive_gemm_mults(n) if metric == "mults" else naive_gemm_ops(n)
    if n == 1:
        return naive
    sub = _winograd_opt(n // 2, metric)
    rec = 7 * sub + (0 if metric == "mults" else 15 * (n // 2) ** 2)
    return min(naive, rec)


@lru_cache(maxsize=None)
def _strassen_xxt_opt(n, metric):
    naive = naive_gram_mults(n) if metric == "mults" else naive_gram_ops(n)
    if n == 1:
        return naive
    rec = (4 * _strassen_xxt_opt(n // 2, metric)
           + 2 * _winograd_opt(n // 2, metric)
           + (0 if metric == "mults" else 3 * (n // 2) ** 2))
    return min(naive, rec)


@lru_cache(maxsize=None)
def _rxtx_opt(n, metric):
    # a 4x4 level needs n divisible by 4; below that only the naive kernel
    # (or the 2x2 baseline, which the DP treats as a separate algorithm)
    # is available
    naive = naive_gram_mults(n) if metric == "mults" else naive_gram_ops(n)
    if n % 4 != 0:
        return naive
    rec = (8 * _rxtx_opt(n // 4, metric)
           + 26 * _winograd_opt(n // 4, metric)
           + (0 if metric == "mults" else 100 * (n // 4) ** 2))
    return min(naive, rec)


def count_optimal_cutoff(alg, metric, n):
    """(count, decisions): minimal count with the best cutoff, plus the
    recurse/naive choice taken at each size on the recursion path."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    fns = {"rxtx": (_rxtx_opt, 4), "strassen-xxt": (_strassen_xxt_opt, 2),
           "winograd": (_winograd_opt, 2)}
    if alg in ("naive-gram", "naive-gemm"):
        return count_recurrence(alg, metric, n), {n: "naive"}
    try:
        fn, shrink = fns[alg]
    except KeyError:
        raise ValueError(f"unknown algorithm {alg!r}") from None
    # the cutoff DP accepts any power of 2: recursion steps are simply
    # unavailable at sizes they do not divide
    _log2_exact(n)
    value = fn(n, metric)
    decisions = {}
    size = n
    while True:
        if alg == "winograd":
            naive = (naive_gemm_mults(size) if metric == "mults"
                     else naive_gemm_ops(size))
        else:
            naive = (naive_gram_mults(size) if metric == "mults"
                     else naive_gram_ops(size))
        if size == 1 or fn(size, metric) == naive:
            decisions[size] = "naive"
            break
        decisions[size] = "recurse"
        size //= shrink
    return value, decisions


# ---------------------------------------------------------------------------
# Ratio table (CSV)
# ---------------------------------------------------------------------------

TABLE_COLUMNS = (
    "n", "R_mults", "S_mults", "M_mults", "naive_gram_mults",
    "R_ops", "S_ops", "M_ops", "naive_gram_ops",
    "R_opt_ops", "S_opt_ops",
    "R_over_S_mults", "R_over_naive_mults",
    "R_over_S_ops", "R_over_naive_ops",
    "R_opt_over_S_opt_ops", "R_opt_over_naive_ops",
)


def _dec6(x):
    """Render an exact rational as a decimal with 6 places, half-up."""
    num, den = x.numerator, x.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled = (num * 10 ** 6 + den // 2) // den
    return f"{sign}{scaled // 10 ** 6}.{scaled % 10 ** 6:06d}"


def table_rows(max_exp):
    """Exact rows for n = 4^1 .. 4^max_exp."""
    if not 1 <= max_exp <= 20:
        raise ValueError("max_exp must be in 1..20")
    rows = []
    for e in range(1, max_exp + 1):
        n = 4 ** e
        r_m = count_recurrence("rxtx", "mults", n)
        s_m = count_recurrence("strassen-xxt", "mults", n)
        m_m = count_recurrence("winograd", "mults", n)
        ng_m = naive_gram_mults(n)
        r_o = count_recurrence("rxtx", "ops", n)
        s_o = count_recurrence("strassen-xxt", "ops", n)
        m_o = count_recurrence("winograd", "ops", n)
        ng_o = naive_gram_ops(n)
        r_opt = _rxtx_opt(n, "ops")
        s_opt = _strassen_xxt_opt(n, "ops")
        rows.append({
            "n": n,
            "R_mults": r_m, "S_mults": s_m, "M_mults": m_m,
            "naive_gram_mults": ng_m,
            "R_ops": r_o, "S_ops": s_o, "M_ops": m_o,
            "naive_gram_ops": ng_o,
            "R_opt_ops": r_opt, "S_opt_ops": s_opt,
            "R_over_S_mults": Fraction(r_m, s_m),
            "R_over_naive_mults": Fraction(r_m, ng_m),
            "R_over_S_ops": Fraction(r_o, s_o),
            "R_over_naive_ops": Fraction(r_o, ng_o),
            "R_opt_over_S_opt_ops": Fraction(r_opt, s_opt),
            "R_opt_over_naive_ops": Fraction(r_opt, ng_o),
        })
    return rows


def emit_ratio_table(max_exp):
    """Deterministic CSV text: counts as exact integers, ratios to 6
    decimal places."""
    lines = [",".join(TABLE_COLUMNS)]
    for row in table_rows(max_exp):
        cells = []
        for col in TABLE_COLUMNS:
            v = row[col]
            cells.append(_dec6(v) if isinstance(v, Fraction) else str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
