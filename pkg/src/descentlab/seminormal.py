"""Young's seminormal representations of S_n over Q.

The algebra QS_n splits as a product of full matrix algebras, one per
partition, and x QS_n has dimension sum_lam f_lam * rank(rho_lam(x)).  This
turns an n! x n! rank into a handful of small exact ranks.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .combinat import enumerate_partitions
from .perms import all_perms, compose, identity, perm_index, transposition


@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """Standard tableaux of shape lam, each as a tuple of (row, col) for entries 1..n."""
    n = sum(lam)
    out = []

    def grow(shape, cells):
        k = len(cells)
        if k == n:
            out.append(tuple(cells))
            return
        for r in range(len(lam)):
            c = shape[r]
            if c < lam[r] and (r == 0 or shape[r - 1] > c):
                shape[r] += 1
                cells.append((r, c))
                grow(shape, cells)
                cells.pop()
                shape[r] -= 1

    grow([0] * len(lam), [])
    return tuple(out)


@lru_cache(maxsize=None)
def generator_matrices(lam):
    """Matrices of the adjacent transpositions s_1, ..., s_{n-1}.

    Column T holds the image of v_T.  For T with i and i+1 in different rows
    and columns, let a = content(i+1) - content(i); then
    s_i v_T = v_T / a + v_{T'} when i+1 lies in a lower row than i, and
    s_i v_T = (1 - 1/a^2) v_{T'} + v_T / a otherwise, where T' swaps i and i+1.
    """
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    n = sum(lam)
    f = len(tabs)
    mats = []
    for i in range(1, n):
        M = [[Fraction(0)] * f for _ in range(f)]
        for col, t in enumerate(tabs):
            (r1, c1), (r2, c2) = t[i - 1], t[i]
            if r1 == r2:
                M[col][col] = Fraction(1)
            elif c1 == c2:
                M[col][col] = Fraction(-1)
            else:
                a = Fraction((c2 - r2) - (c1 - r1))
                swapped = list(t)
                swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                other = index[tuple(swapped)]
                M[col][col] = 1 / a
                if r2 > r1:
                    M[other][col] = Fraction(1)
                else:
                    M[other][col] = 1 - 1 / (a * a)
        mats.append(M)
    return mats


def _scaled_generators(lam):
    """Integer matrices D_s * rho(s_i) with the common denominator D_s."""
    gens = generator_matrices(lam)
    den = 1
    for M in gens:
        for row in M:
            for v in row:
                den = lcm(den, v.denominator)
    return [np.array([[int(v * den) for v in row] for row in M], dtype=np.int64) for M in gens], den


@lru_cache(maxsize=None)
def representation(lam):
    """All of rho_lam as one integer array.

    Returns (R, D) where R[k] = D * rho_lam(g_k) for the k-th permutation g_k
    of S_n in lexicographic order.  Built breadth-first from
    rho(g s_i) = rho(g) rho(s_i), keeping each matrix as an integer array
    over its own reduced denominator.
    """
    n = sum(lam)
    gens, gden = _scaled_generators(lam)
    f = len(standard_tableaux(lam))
    index = perm_index(n)
    N = len(index)
    nums = [None] * N
    dens = [0] * N
    start = identity(n)
    nums[index[start]] = np.eye(f, dtype=np.int64)
    dens[index[start]] = 1
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            k = index[g]
            for i in range(1, n):
                h = compose(g, transposition(i, n))
                j = index[h]
                if dens[j]:
                    continue
                A = nums[k] @ gens[i - 1]
                d = dens[k] * gden
                common = int(np.gcd.reduce(A.ravel()))
                common = gcd(common, d)
                nums[j] = A // common
                dens[j] = d // common
                nxt.append(h)
        frontier = nxt
    D = 1
    for d in dens:
        D = lcm(D, d)
    R = np.stack([A * (D // d) for A, d in zip(nums, dens)])
    return R, D


def scaled_image(x, lam):
    """An integer matrix that is a nonzero rational multiple of rho_lam(x)."""
    R, _ = representation(lam)
    index = perm_index(x.n)
    den = 1
    for c in x.coeffs.values():
        den = lcm(den, Fraction(c).denominator)
    idx = []
    coef = []
    for g, c in x.coeffs.items():
        idx.append(index[g])
        coef.append(int(Fraction(c) * den))
    if not idx:
        f = R.shape[1]
        return [[0] * f for _ in range(f)]
    bound = sum(abs(c) for c in coef) * int(np.abs(R).max())
    if bound < 2 ** 62:
        acc = np.tensordot(np.array(coef, dtype=np.int64), R[idx], axes=1)
        return acc.tolist()
    acc = np.tensordot(np.array(coef, dtype=object), R[idx].astype(object), axes=1)
    return acc.tolist()


def image(x, lam):
    """rho_lam(x) as a matrix of Fractions."""
    R, D = representation(lam)
    index = perm_index(x.n)
    f = R.shape[1]
    acc = [[Fraction(0)] * f for _ in range(f)]
    for g, c in x.coeffs.items():
        A = R[index[g]]
        for r in range(f):
            for k in range(f):
                if A[r, k]:
                    acc[r][k] += Fraction(c) * int(A[r, k]) / D
    return acc


def matrix_rank(A):
    """Exact rank of a matrix with integer or Fraction entries."""
    M = [[Fraction(v) for v in row] for row in A]
    if all(v.denominator == 1 for row in M for v in row):
        return _int_rank([[int(v) for v in row] for row in M])
    rank = 0
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        for r in range(rank + 1, rows):
            if M[r][c]:
                factor = M[r][c] / pr[c]
                M[r] = [a - factor * b for a, b in zip(M[r], pr)]
        rank += 1
    return rank


def _int_rank(M):
    # fraction-free elimination; rows are divided by their content to keep
    # entries small
    rank = 0
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        pc = pr[c]
        for r in range(rank + 1, rows):
            mc = M[r][c]
            if mc:
                row = [a * pc - mc * b for a, b in zip(M[r], pr)]
                g = 0
                for v in row:
                    g = gcd(g, v)
                M[r] = [v // g for v in row] if g > 1 else row
        rank += 1
    return rank


def block_ranks(x):
    """Map lam -> rank of rho_lam(x)."""
    return {lam: matrix_rank(scaled_image(x, lam)) for lam in enumerate_partitions(x.n)}


def rational_ideal_rank(x):
    ranks = block_ranks(x)
    return sum(len(standard_tableaux(lam)) * r for lam, r in ranks.items())


def regular_check(n, step=7):
    """Check rho(g) rho(h) = rho(gh) on a spread of pairs from S_n."""
    perms = all_perms(n)
    index = perm_index(n)
    for lam in enumerate_partitions(n):
        R, D = representation(lam)
        for g in perms[::max(1, len(perms) // step)]:
            for h in perms[::max(1, len(perms) // 5)]:
                lhs = R[index[g]].astype(object) @ R[index[h]].astype(object)
                rhs = R[index[compose(g, h)]].astype(object) * D
                if not (lhs == rhs).all():
                    return False
    return True
