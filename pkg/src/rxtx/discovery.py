"""Desk-scale rediscovery pipeline for 2x2 X X^t schemes.

Pipeline: sample candidate rank-1 bilinear products with coefficients in
{-1, 0, +1}; enumerate exact linear relations between candidates and the
target quadratic forms; then select a minimum-cardinality subset of
candidates whose rational span contains every target.

The subset search is exact.  It runs by increasing size k and uses the
subspace structure of the problem: a minimal covering subset of size k is
linearly independent, so the candidate residues modulo the target space
have rank k - t (t = number of targets).  Size t means all chosen
candidates lie inside the target space; size t+1 means all residues share
one direction; size t+2 means the residues lie in a plane spanned by two
occupied directions.  Each case is an exhaustive scan, so failure at a
size is a proof of infeasibility at that size.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as xl
from .scheme import BilinearScheme


@dataclass(frozen=True)
class CandidateProduct:
    """One sampled product (sum_i alpha_i x_i)(sum_j beta_j x_j)."""

    alpha: tuple
    beta: tuple

    def doubled_form(self):
        """Upper-triangle vector of alpha beta^t + beta alpha^t (integers;
        twice the canonical symmetric form, so no denominators appear)."""
        a, b = self.alpha, self.beta
        m = len(a)
        return tuple(a[i] * b[j] + a[j] * b[i]
                     for i in range(m) for j in range(i, m))

    def canonical_form(self):
        """(alpha beta^t + beta alpha^t) / 2 as a matrix of Fractions."""
        a, b = self.alpha, self.beta
        m = len(a)
        return [[Fraction(a[i] * b[j] + a[j] * b[i], 2) for j in range(m)]
                for i in range(m)]


def _sym_vec_from_matrix(mat):
    m = len(mat)
    return tuple(mat[i][j] for i in range(m) for j in range(i, m))


def _dedup(cands):
    """Deduplicate by canonical form up to sign, keeping first-seen order."""
    seen = set()
    out = []
    for c in cands:
        form = c.doubled_form()
        key = xl.primitive_int(form)
        if key is None or key in seen:
            continue
        seen.add(key)
        out.append(c)
    return out


def sample_candidates(count=None, seed=None, mode="exhaustive", dim=2):
    """Candidate products over x_1..x_{dim^2}, deduplicated.

    mode "exhaustive" enumerates all nonzero coefficient pairs; "random"
    draws ``count`` raw pairs from a seeded PRNG.
    """
    m = dim * dim
    coeffs = (-1, 0, 1)
    if mode == "exhaustive":
        nonzero = [v for v in itertools.product(coeffs, repeat=m)
                   if any(v)]
        raw = [CandidateProduct(a, b)
               for a in nonzero for b in nonzero]
    elif mode == "random":
        if count is None or count < 1:
            raise ValueError("random mode needs count >= 1")
        rng = random.Random(seed)
        raw = []
        while len(raw) < count:
            a = tuple(rng.choice(coeffs) for _ in range(m))
            b = tuple(rng.choice(coeffs) for _ in range(m))
            if any(a) and any(b):
                raw.append(CandidateProduct(a, b))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _dedup(raw)


def gram_targets(dim=2):
    """Target quadratic forms of X X^t for a dim x dim scalar matrix, as
    doubled upper-triangle vectors keyed by output position (i, j).

    For dim = 2: x1^2 + x2^2, x1 x3 + x2 x4, x3^2 + x4^2.
    """
    m = dim * dim
    targets = {}
    for i in range(1, dim + 1):
        for j in range(i, dim + 1):
            mat = [[0] * m for _ in range(m)]
            for k in range(1, dim + 1):
                a = (i - 1) * dim + k - 1
                b = (j - 1) * dim + k - 1
                mat[a][b] += 1
                mat[b][a] += 1
            targets[(i, j)] = _sym_vec_from_matrix(mat)
    return targets


def enumerate_relations(candidates, targets, max_terms=2,
                        max_relations_per_target=20):
    """For each target, exact rational combinations of small candidate
    subsets that reproduce it.

    Returns a list (aligned with ``targets``) of relation lists; each
    relation is (candidate index tuple, coefficient tuple).  Only
    combinations whose coefficients are all nonzero are reported, so every
    relation is support-minimal for its index set.
    """
    if not candidates:
        raise ValueError("no candidates")
    forms = [c.doubled_form() for c in candidates]
    out = []
    for tvec in targets:
        rels = []
        for k in range(1, max_terms + 1):
            for idxs in itertools.combinations(range(len(forms)), k):
                sol = xl.solve_combination([forms[i] for i in idxs], tvec)
                if sol is None or any(c == 0 for c in sol):
                    continue
                rels.append((idxs, tuple(sol)))
                if len(rels) >= max_relations_per_target:
                    break
            if len(rels) >= max_relations_per_target:
                break
        out.append(rels)
    return out


class InfeasibleCoverError(RuntimeError):
    """The candidate set does not span every target."""


@dataclass
class CoverResult:
    indices: tuple           # chosen candidate indices
    size: int
    combinations: list       # per target: tuple of Fractions over indices
    exact: bool              # True when minimality is proved
    infeasible_sizes: tuple  # sizes exhaustively ruled out


def _verify_cover(forms, tvecs, indices, combos):
    for tvec, combo in zip(tvecs, combos):
        dim = len(tvec)
        acc = [Fraction(0)] * dim
        for idx, coef in zip(indices, combo):
            if coef == 0:
                continue
            f = forms[idx]
            for p in range(dim):
                acc[p] += coef * f[p]
        if tuple(acc) != tuple(Fraction(v) for v in tvec):
            return False
    return True


def _certify(forms, tvecs, member_indices, k):
    """Try to pick k independent members whose span contains all targets."""
    sub = xl.independent_subset([forms[i] for i in member_indices], limit=k)
    if len(sub) < k:
        return None
    chosen = tuple(member_indices[i] for i in sub)
    combos = []
    for tvec in tvecs:
        sol = xl.solve_combination([forms[i] for i in chosen], tvec)
        if sol is None:
            return None
        combos.append(tuple(sol))
    if not _verify_cover(forms, tvecs, chosen, combos):
        return None
    return chosen, combos


def select_minimal_cover(candidates, targets):
    """Minimum-cardinality candidate subset whose span contains every
    target, with exact per-target combination certificates.

    Sizes t, t+1 and t+2 (t = number of targets) are scanned exhaustively
    via the residue-direction structure; if all fail, a constructive cover
    of size t + #targets-expressed-pairwise is taken and is provably
    minimal when its size is t+3.
    """
    tvecs = list(targets)
    forms = [c.doubled_form() for c in candidates]
    tbasis, tpivots = xl.rref(tvecs)
    t = len(tbasis)
    if t != len(tvecs):
        raise ValueError("targets are linearly dependent")

    residues = [xl.residue(tbasis, tpivots, f) for f in forms]
    dirs = [xl.primitive_int(r) for r in residues]

    # size t: all chosen candidates must lie inside the target span
    inside = [i for i, d in enumerate(dirs) if d is None]
    ruled_out = []
    cert = _certify(forms, tvecs, inside, t) if len(inside) >= t else None
    if cert:
        return CoverResult(cert[0], t, cert[1], True, tuple(ruled_out))
    ruled_out.append(t)

    # size t+1: residues of the chosen set share a single direction
    buckets = {}
    for i, d in enumerate(dirs):
        if d is not None:
            buckets.setdefault(d, []).append(i)
    for d, members in buckets.items():
        cand_set = members + inside
        if len(cand_set) < t + 1:
            continue
        cert = _certify(forms, tvecs, cand_set, t + 1)
        if cert:
            return CoverResult(cert[0], t + 1, cert[1], True,
                               tuple(ruled_out))
    ruled_out.append(t + 1)

    # size t+2: residues lie in a plane spanned by two occupied directions
    dir_list = list(buckets)
    for a_i in range(len(dir_list)):
        for b_i in range(a_i + 1, len(dir_list)):
            u, w = dir_list[a_i], dir_list[b_i]
            members = list(inside)
            for d, mem in buckets.items():
                if d == u or d == w or _in_plane(u, w, d):
                    members.extend(mem)
            if len(members) < t + 2:
                continue
            cert = _certify(forms, tvecs, members, t + 2)
            if cert:
                return CoverResult(cert[0], t + 2, cert[1], True,
                                   tuple(ruled_out))
    ruled_out.append(t + 2)

    # constructive fallback: union of per-target covers
    chosen = list(inside)
    for tvec in tvecs:
        if xl.solve_combination([forms[i] for i in chosen], tvec) is not None:
            continue
        found = False
        for k in (1, 2, 3):
            for idxs in itertools.combinations(range(len(forms)), k):
                sol = xl.solve_combination([forms[i] for i in idxs], tvec)
                if sol is not None and all(c != 0 for c in sol):
                    chosen.extend(i for i in idxs if i not in chosen)
                    found = True
                    break
            if found:
                break
        if not found:
            raise InfeasibleCoverError(
                "a target is not spanned by the candidate set")
    cert = _certify(forms, tvecs, chosen, len(
        xl.independent_subset([forms[i] for i in chosen])))
    if cert is None:
        raise InfeasibleCoverError(
            "a target is not spanned by the candidate set")
    indices, combos = cert
    exact = len(indices) == t + 3  # sizes below were ruled out exhaustively
    return CoverResult(indices, len(indices), combos, exact,
                       tuple(ruled_out))


def _in_plane(u, w, d):
    """Is direction d in span{u, w}?  Exact integer 3-row rank test."""
    return xl.rank([list(u), list(w), list(d)]) <= 2


def cover_to_scheme(candidates, cover, dim=2):
    """Emit a covering subset as a grid-``dim`` bilinear scheme whose
    outputs are the X X^t entries (no recursive calls; scalar semantics,
    so verification should use commutative mode)."""
    chosen = [candidates[i] for i in cover.indices]
    products = tuple((c.alpha, c.beta) for c in chosen)
    outputs = {}
    positions = sorted(gram_targets(dim))
    for pos, combo in zip(positions, cover.combinations):
        outputs[pos] = (tuple(combo), ())
    return BilinearScheme(dim, products, (), outputs)
