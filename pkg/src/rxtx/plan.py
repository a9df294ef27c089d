"""Addition plans: DAGs of named signed sums realizing a scheme's linear
stages.

Stage 1 builds the left/right product factors L_k / R_k from the input
blocks; stage 2 builds the output blocks from the products m_k and the
recursive-call results s_c.  The "naive" plan sums each factor and output
directly from the scheme's coefficient vectors; the optimized 4x4 plan
shares common subexpressions and brings the addition count from
(77, 62) down to (53, 47).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PlanNode:
    name: str
    # ((coef, ref), ...) over input names or earlier node names; coefs +-1
    terms: tuple

    def n_additions(self):
        return max(len(self.terms) - 1, 0)


@dataclass(frozen=True)
class AdditionPlan:
    stage1: tuple  # PlanNodes ending with L1..Lp, R1..Rp definitions
    stage2: tuple  # PlanNodes ending with C11.. output definitions

    def stage1_additions(self):
        return sum(n.n_additions() for n in self.stage1)

    def stage2_additions(self):
        return sum(n.n_additions() for n in self.stage2)

    def total_additions(self):
        return self.stage1_additions() + self.stage2_additions()


def naive_plan(scheme):
    """Direct plan: every factor and output summed term by term."""
    stage1 = []
    for k, (alpha, beta) in enumerate(scheme.products, start=1):
        lt = tuple((c, f"X{i + 1}") for i, c in enumerate(alpha) if c != 0)
        rt = tuple((c, f"X{i + 1}") for i, c in enumerate(beta) if c != 0)
        stage1.append(PlanNode(f"L{k}", lt))
        stage1.append(PlanNode(f"R{k}", rt))
    stage2 = []
    for (i, j) in sorted(scheme.outputs):
        gam, sig = scheme.outputs[(i, j)]
        terms = tuple((c, f"s{ci + 1}") for ci, c in enumerate(sig) if c != 0)
        terms += tuple((c, f"m{k + 1}") for k, c in enumerate(gam) if c != 0)
        stage2.append(PlanNode(f"C{i}{j}", terms))
    return AdditionPlan(tuple(stage1), tuple(stage2))


def _node(spec):
    name, rhs = spec
    return PlanNode(name, tuple(rhs))


# Optimized stage 1 for the 4x4 scheme: 53 binary additions.
_OPT_STAGE1 = tuple(_node(s) for s in [
    ("y1", [(1, "X13"), (-1, "X14")]),
    ("y2", [(1, "X12"), (-1, "X10")]),
    ("w1", [(1, "X2"), (1, "X4"), (-1, "X8")]),
    ("w2", [(1, "X1"), (-1, "X5"), (-1, "X6")]),
    ("w3", [(1, "X6"), (1, "X7")]),
    ("w4", [(1, "X14"), (1, "X15")]),
    ("w5", [(1, "y2"), (1, "X16")]),
    ("w6", [(1, "X10"), (1, "X11")]),
    ("w7", [(1, "X9"), (1, "y1")]),
    ("w8", [(1, "X9"), (-1, "X8")]),
    ("w9", [(1, "X7"), (-1, "X11")]),
    ("w10", [(1, "X6"), (-1, "X7")]),
    ("w11", [(1, "X2"), (-1, "X3")]),
    ("L1", [(-1, "w1"), (1, "X3")]),
    ("R1", [(1, "X8"), (1, "X11")]),
    ("L2", [(1, "w2"), (1, "X7")]),
    ("R2", [(1, "X15"), (1, "X5")]),
    ("L3", [(-1, "X2"), (1, "X12")]),
    ("R3", [(1, "w5")]),
    ("L4", [(1, "X9"), (-1, "X6")]),
    ("R4", [(1, "w7")]),
    ("L5", [(1, "X2"), (1, "X11")]),
    ("R5", [(1, "X15"), (-1, "w3")]),
    ("L6", [(1, "X6"), (1, "X11")]),
    ("R6", [(1, "w3"), (-1, "X11")]),
    ("L7", [(1, "X11")]),
    ("R7", [(1, "w3")]),
    ("L8", [(1, "X2")]),
    ("R8", [(1, "w3"), (-1, "w4"), (1, "w5")]),
    ("L9", [(1, "X6")]),
    ("R9", [(1, "w7"), (-1, "w6"), (1, "w3")]),
    ("L10", [(1, "w1"), (-1, "X3"), (1, "X7"), (1, "X11")]),
    ("R10", [(1, "X11")]),
    ("L11", [(1, "X5"), (1, "w10")]),
    ("R11", [(1, "X5")]),
    ("L12", [(1, "w11"), (1, "X4")]),
    ("R12", [(1, "X8")]),
    ("L13", [(-1, "w2"), (1, "X3"), (-1, "w9")]),
    ("R13", [(1, "X15")]),
    ("L14", [(-1, "w2")]),
    ("R14", [(1, "w7"), (1, "w4")]),
    ("L15", [(1, "w1")]),
    ("R15", [(1, "w6"), (1, "w5")]),
    ("L16", [(1, "X1"), (-1, "X8")]),
    ("R16", [(1, "X9"), (-1, "X16")]),
    ("L17", [(1, "X12")]),
    ("R17", [(-1, "y2")]),
    ("L18", [(1, "X9")]),
    ("R18", [(1, "y1")]),
    ("L19", [(-1, "w11")]),
    ("R19", [(-1, "X15"), (1, "X7"), (1, "X8")]),
    ("L20", [(1, "X5"), (1, "w8")]),
    ("R20", [(1, "X9")]),
    ("L21", [(1, "X8")]),
    ("R21", [(1, "X12"), (1, "w8")]),
    ("L22", [(-1, "w10")]),
    ("R22", [(1, "X5"), (1, "w9")]),
    ("L23", [(1, "X1")]),
    ("R23", [(1, "X13"), (-1, "X5"), (1, "X16")]),
    ("L24", [(-1, "X1"), (1, "X4"), (1, "X12")]),
    ("R24", [(1, "X16")]),
    ("L25", [(1, "X9"), (1, "X2"), (1, "X10")]),
    ("R25", [(1, "X14")]),
    ("L26", [(1, "X6"), (1, "X10"), (1, "X12")]),
    ("R26", [(1, "X10")]),
])

# Optimized stage 2 for the 4x4 scheme: 47 binary additions.
_OPT_STAGE2 = tuple(_node(s) for s in [
    ("z1", [(1, "m7"), (-1, "m11"), (-1, "m12")]),
    ("z2", [(1, "m1"), (1, "m12"), (1, "m21")]),
    ("z3", [(1, "m3"), (1, "m17"), (-1, "m24")]),
    ("z4", [(1, "m2"), (1, "m11"), (1, "m23")]),
    ("z5", [(1, "m5"), (1, "m7"), (1, "m8")]),
    ("z6", [(1, "m4"), (-1, "m18"), (-1, "m20")]),
    ("z7", [(1, "m6"), (-1, "m7"), (-1, "m9")]),
    ("z8", [(1, "m17"), (1, "m18")]),
    ("C11", [(1, "s1"), (1, "s2"), (1, "s3"), (1, "s4")]),
    ("C12", [(1, "m2"), (-1, "m5"), (-1, "z1"), (1, "m13"), (1, "m19")]),
    ("C13", [(1, "z2"), (1, "z3"), (1, "m15"), (1, "m16")]),
    ("C14", [(1, "z4"), (-1, "z3"), (-1, "z5"), (1, "m13")]),
    ("C22", [(1, "m1"), (1, "m6"), (-1, "z1"), (1, "m10"), (1, "m22")]),
    ("C23", [(1, "z2"), (-1, "z6"), (1, "z7"), (1, "m10")]),
    ("C24", [(1, "z4"), (1, "z6"), (1, "m14"), (1, "m16")]),
    ("C33", [(1, "m4"), (-1, "z7"), (-1, "z8"), (1, "m26")]),
    ("C34", [(1, "m3"), (1, "z5"), (1, "z8"), (1, "m25")]),
    ("C44", [(1, "s5"), (1, "s6"), (1, "s7"), (1, "s8")]),
])


def optimized_rxtx_plan():
    """Shared-subexpression plan for the 4x4 scheme: 53 + 47 additions."""
    return AdditionPlan(_OPT_STAGE1, _OPT_STAGE2)


def count_scheme_additions(scheme, plan=None):
    """(stage1, stage2, total) structural binary addition counts.

    With ``plan=None`` the naive plan derived from the scheme's coefficient
    vectors is counted.
    """
    if plan is None:
        plan = naive_plan(scheme)
    return (plan.stage1_additions(), plan.stage2_additions(),
            plan.total_additions())


def _eval_symbolic(nodes, env, dim):
    """Evaluate plan nodes over integer coefficient vectors in ``env``."""
    for node in nodes:
        acc = [0] * dim
        for coef, ref in node.terms:
            v = env[ref]
            for idx in range(dim):
                acc[idx] += coef * v[idx]
        env[node.name] = acc
    return env


def plan_consistent_with_scheme(scheme, plan):
    """Symbolically evaluate the plan and compare against the scheme.

    Stage 1 must net out to the product factors (alpha_k, beta_k) and
    stage 2 to each output's (gamma, sigma) combination.  Returns a list of
    mismatch descriptions; empty means consistent.
    """
    g2 = scheme.grid * scheme.grid
    env = {}
    for i in range(g2):
        unit = [0] * g2
        unit[i] = 1
        env[f"X{i + 1}"] = unit
    _eval_symbolic(plan.stage1, env, g2)
    problems = []
    for k, (alpha, beta) in enumerate(scheme.products, start=1):
        if tuple(env[f"L{k}"]) != tuple(alpha):
            problems.append(f"L{k} != alpha_{k}")
        if tuple(env[f"R{k}"]) != tuple(beta):
            problems.append(f"R{k} != beta_{k}")

    np_, nc = len(scheme.products), len(scheme.calls)
    dim = np_ + nc
    env2 = {}
    for k in range(np_):
        unit = [0] * dim
        unit[k] = 1
        env2[f"m{k + 1}"] = unit
    for c in range(nc):
        unit = [0] * dim
        unit[np_ + c] = 1
        env2[f"s{c + 1}"] = unit
    _eval_symbolic(plan.stage2, env2, dim)
    for (i, j) in sorted(scheme.outputs):
        gam, sig = scheme.outputs[(i, j)]
        want = tuple(gam) + tuple(sig)
        if tuple(env2[f"C{i}{j}"]) != want:
            problems.append(f"C{i}{j} combination mismatch")
    return problems
