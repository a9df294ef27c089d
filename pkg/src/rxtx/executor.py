"""Generic recursive executor for X X^t bilinear schemes.

One executor serves the 4x4 scheme, the 2x2 recursive baseline, and any
verified external scheme: the scheme is data, the addition plan is data,
and the general products are delegated to a pluggable GEMM backend.
"""

from __future__ import annotations

from . import matrix as mx
from .backends import NaiveBackend
from .plan import naive_plan, optimized_rxtx_plan
from .scheme import rxtx_scheme, strassen_xxt_scheme

_RXTX = rxtx_scheme()
_STRASSEN = strassen_xxt_scheme()
_RXTX_PLANS = {
    "naive139": naive_plan(_RXTX),
    "optimized100": optimized_rxtx_plan(),
}


def _eval_nodes(nodes, env, counter):
    for node in nodes:
        if len(node.terms) == 1 and node.terms[0][0] == 1:
            env[node.name] = env[node.terms[0][1]]
            continue
        terms = [(c, env[ref]) for c, ref in node.terms]
        env[node.name] = mx.signed_sum(terms, counter)
    return env


def scheme_gram(x, scheme, plan, cutoff=1, backend=None, counter=None):
    """Compute X X^t by recursive application of ``scheme``.

    At or below ``cutoff`` (in the row dimension) the naive Gram kernel
    runs instead of further recursion.  The result is exactly symmetric:
    lower-triangle blocks are mirrored from the computed upper triangle.
    """
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if backend is None:
        backend = NaiveBackend()
    n = x.rows
    if n <= cutoff:
        return mx.naive_gram(x, counter)

    g = scheme.grid
    part = mx.partition(x, g)
    env = {f"X{i}": part.block(i) for i in range(1, g * g + 1)}
    _eval_nodes(plan.stage1, env, counter)

    for k in range(1, scheme.n_products() + 1):
        rt = env[f"R{k}"].transpose()
        env[f"m{k}"] = backend.gemm(env[f"L{k}"], rt, counter)

    for c, blk_idx in enumerate(scheme.calls, start=1):
        env[f"s{c}"] = scheme_gram(part.block(blk_idx), scheme, plan,
                                   cutoff, backend, counter)

    _eval_nodes(plan.stage2, env, counter)
    upper = {}
    for i in range(1, g + 1):
        for j in range(i, g + 1):
            upper[(i, j)] = env[f"C{i}{j}"]
    return mx.assemble_symmetric(upper, n, g)


def rxtx_gram(x, cutoff=1, backend=None, plan="optimized100", counter=None):
    """X X^t via the 4x4 recursive scheme (26 products, 8 calls).

    ``plan`` selects the addition plan: "naive139" (term-by-term) or
    "optimized100" (shared subexpressions).  Both produce identical
    results; they differ only in addition count.
    """
    try:
        plan_obj = _RXTX_PLANS[plan]
    except KeyError:
        raise ValueError(f"unknown plan {plan!r}") from None
    return scheme_gram(x, _RXTX, plan_obj, cutoff, backend, counter)


def strassen_xxt_gram(x, cutoff=1, backend=None, counter=None):
    """X X^t via the 2x2 recursive baseline (2 products, 4 calls)."""
    return scheme_gram(x, _STRASSEN, naive_plan(_STRASSEN), cutoff, backend,
                       counter)
