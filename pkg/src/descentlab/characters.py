"""Ordinary characters of S_n and characters of right ideals of QS_n."""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import AlgebraElement, echelon
from .combinat import conjugacy_class_size, enumerate_partitions
from .descent import ClassFunction
from .fields import QQ
from .perms import all_perms, from_cycles
from .seminormal import block_ranks, standard_tableaux


def _strip_removals(lam, k):
    """Partitions obtained from lam by removing a border strip of size k, with heights."""
    # work with the beta-set (first column hook lengths)
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    out = []
    bset = set(beta)
    for b in beta:
        if b - k >= 0 and (b - k) not in bset:
            height = sum(1 for c in beta if b - k < c < b)
            new = sorted([c for c in beta if c != b] + [b - k], reverse=True)
            parts = [new[i] - (L - 1 - i) for i in range(L)]
            out.append((tuple(x for x in parts if x > 0), height))
    return out


@lru_cache(maxsize=None)
def irreducible_character(lam, mu):
    """chi^lam(mu) by the border-strip recursion."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for smaller, height in _strip_removals(lam, k):
        total += (-1) ** height * irreducible_character(smaller, rest)
    return total


@lru_cache(maxsize=None)
def character_table(n):
    """(partitions, table) with table[i][j] = chi^{lam_i}(mu_j)."""
    parts = enumerate_partitions(n)
    return parts, tuple(tuple(irreducible_character(lam, mu) for mu in parts) for lam in parts)


def irreducible_class_function(lam):
    n = sum(lam)
    return ClassFunction(n, QQ, {mu: irreducible_character(lam, mu) for mu in enumerate_partitions(n)})


def inner_product(psi, chi):
    n = psi.n
    total = Fraction(0)
    for mu in enumerate_partitions(n):
        total += conjugacy_class_size(mu) * Fraction(psi[mu]) * Fraction(chi[mu])
    return total / factorial(n)


def multiplicity(psi, lam):
    """Multiplicity of chi^lam in the class function psi (rational in general)."""
    n = psi.n
    total = Fraction(0)
    for mu in enumerate_partitions(n):
        total += conjugacy_class_size(mu) * Fraction(psi[mu]) * irreducible_character(lam, mu)
    return total / factorial(n)


def ideal_character(x):
    """Character of the right ideal x QS_n.

    Under the split Wedderburn decomposition, x QS_n contains the simple
    module for lam with multiplicity rank rho_lam(x).
    """
    if x.field.p != 0:
        raise ValueError("ideal_character needs an element over Q")
    ranks = block_ranks(x)
    n = x.n
    values = {}
    for mu in enumerate_partitions(n):
        values[mu] = sum(r * irreducible_character(lam, mu) for lam, r in ranks.items())
    return ClassFunction(n, QQ, values)


def ideal_decomposition(x):
    """Map lam -> multiplicity of the simple module lam in x QS_n."""
    return {lam: r for lam, r in block_ranks(x).items() if r}


def class_representative(mu):
    n = sum(mu)
    cycs, start = [], 1
    for part in mu:
        cycs.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(cycs, n)


def ideal_character_by_trace(x):
    """Same character, computed as traces of right multiplication on an echelon basis.

    Costs an n! x n! elimination; intended as an independent check for small n.
    """
    if x.field.p != 0:
        raise ValueError("ideal_character needs an element over Q")
    n = x.n
    rows = [(x * AlgebraElement.basis_element(s, QQ)).coeffs for s in all_perms(n)]
    basis = echelon(rows, QQ)
    values = {}
    for mu in enumerate_partitions(n):
        g = AlgebraElement.basis_element(class_representative(mu), QQ)
        trace = Fraction(0)
        for piv, row in basis:
            image = (AlgebraElement(n, QQ, row) * g).coeffs
            # in a reduced echelon basis, the coordinate on basis vector b is
            # the coefficient at b's pivot
            trace += image.get(piv, 0)
        values[mu] = trace
    return ClassFunction(n, QQ, values)


def dimension(lam):
    return len(standard_tableaux(tuple(lam)))


def hook_length_dimension(lam):
    lam = tuple(lam)
    n = sum(lam)
    conj = [sum(1 for part in lam if part > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, part in enumerate(lam):
        for j in range(part):
            hooks *= part - j + conj[j] - i - 1
    return factorial(n) // hooks
