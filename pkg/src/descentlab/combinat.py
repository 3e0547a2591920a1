"""Compositions, partitions, refinements and p-equivalence.

Compositions and partitions are plain tuples of positive integers.  A
partition is a weakly decreasing composition.
"""

from collections import Counter
from functools import lru_cache
from itertools import accumulate
from math import factorial, gcd, prod


def check_prime_or_zero(p):
    if p == 0:
        return
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"p must be 0 or a prime, got {p}")


@lru_cache(maxsize=None)
def _compositions(n):
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_compositions(n):
    """All compositions of n in lexicographic order (2^(n-1) of them)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_compositions(n))


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def is_p_regular(lam, p):
    if p == 0:
        return True
    return all(m < p for m in Counter(lam).values())


def enumerate_partitions(n, p=0):
    """Partitions of n in reverse lexicographic order, (n) first.

    With p > 0 only the p-regular ones (no part repeated p times) are kept.
    """
    check_prime_or_zero(p)
    return [lam for lam in _partitions(n, n) if is_p_regular(lam, p)]


def sort_to_partition(q):
    return tuple(sorted(q, reverse=True))


def is_partition(q):
    return all(a >= b for a, b in zip(q, q[1:]))


def partial_sums(q):
    return list(accumulate(q))


def concat(*qs):
    return tuple(x for q in qs for x in q)


def _check_sizes(r, q):
    if sum(r) != sum(q):
        raise ValueError(f"size mismatch: |{r}| = {sum(r)} but |{q}| = {sum(q)}")


def refinement_blocks(r, q):
    """Split r into consecutive blocks summing to q_1, q_2, ...

    Returns the list of blocks, or None if r is not a strong refinement of q.
    """
    _check_sizes(r, q)
    blocks, i = [], 0
    for target in q:
        block, total = [], 0
        while total < target and i < len(r):
            block.append(r[i])
            total += r[i]
            i += 1
        if total != target:
            return None
        blocks.append(tuple(block))
    return blocks


def is_strong_refinement(r, q):
    return refinement_blocks(r, q) is not None


@lru_cache(maxsize=None)
def _weak(parts, targets):
    # parts: sorted multiset of r, targets: sorted multiset of q
    if not targets:
        return not parts
    t, rest = targets[0], targets[1:]
    seen = set()

    def pick(start, remaining, chosen):
        if remaining == 0:
            left = list(parts)
            for idx in sorted(chosen, reverse=True):
                del left[idx]
            key = tuple(left)
            if key in seen:
                return False
            seen.add(key)
            return _weak(key, rest)
        for idx in range(start, len(parts)):
            if parts[idx] <= remaining:
                if pick(idx + 1, remaining - parts[idx], chosen + [idx]):
                    return True
        return False

    return pick(0, t, [])


def is_weak_refinement(r, q):
    """True when some rearrangement of r strongly refines q."""
    _check_sizes(r, q)
    return _weak(tuple(sorted(r)), tuple(sorted(q, reverse=True)))


def is_equivalent(r, q):
    """r and q are rearrangements of each other."""
    return sorted(r) == sorted(q)


def refinement_statistics(r, q):
    """Return (l(r,q), l!(r,q), F_q(r)) for a strong refinement r of q.

    Over the blocks r^(j) of r, these are the products of the block lengths,
    of the factorials of block lengths, and of the last part of each block.
    """
    blocks = refinement_blocks(r, q)
    if blocks is None:
        raise ValueError(f"{r} is not a strong refinement of {q}")
    length = prod(len(b) for b in blocks)
    length_fact = prod(factorial(len(b)) for b in blocks)
    last = prod(b[-1] for b in blocks)
    return length, length_fact, last


def multiplicities(q):
    """Map i -> m_i(q) for the part sizes that occur."""
    return dict(sorted(Counter(q).items()))


def facmulti(q):
    return prod(factorial(m) for m in Counter(q).values())


def qquestion(q):
    return facmulti(q) * prod(q)


def multiplicity_stats(q):
    return multiplicities(q), facmulti(q), qquestion(q)


def conjugacy_class_size(lam):
    n = sum(lam)
    return factorial(n) // qquestion(lam)


def p_prime_type(lam, p):
    """Replace each part k*p^a (p not dividing k) by p^a copies of k."""
    if p == 0:
        return sort_to_partition(lam)
    out = []
    for part in lam:
        copies = 1
        while part % p == 0:
            part //= p
            copies *= p
        out.extend([part] * copies)
    return sort_to_partition(out)


def p_equivalent(lam, mu, p):
    return p_prime_type(lam, p) == p_prime_type(mu, p)


def regular_representative(lam, p):
    """The unique p-regular partition p-equivalent to lam."""
    if p == 0:
        return sort_to_partition(lam)
    base = p_prime_type(lam, p)
    out = []
    for k, m in Counter(base).items():
        # write m in base p: m = sum a_j p^j, giving a_j parts k p^j
        j = 0
        while m:
            out.extend([k * p ** j] * (m % p))
            m //= p
            j += 1
    return sort_to_partition(out)


def p_class_size(lam, p):
    """Number of permutations whose cycle type is p-equivalent to lam."""
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    n = sum(lam)
    return sum(conjugacy_class_size(mu) for mu in enumerate_partitions(n)
               if p_equivalent(mu, lam, p))


def is_coprime(q, p):
    """(q, p) = 1: p divides no part of q.  Always true for p = 0."""
    return p == 0 or all(part % p for part in q)


def canonical_key(lam):
    """Sort key of the fixed total order on partitions.

    Longer partitions come first; equal lengths are ordered lexicographically
    ascending.  For n = 4 this gives (1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4).
    A strict weak refinement is strictly longer, so the order refines the
    weak refinement preorder.
    """
    return (-len(lam), tuple(lam))


ORDER_ID = "length-desc/lex-asc"


def canonical_order(partitions):
    return sorted(partitions, key=canonical_key)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n):
    if n == 1:
        return 1
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    if n > 1:
        result = -result
    return result


def lcm_list(values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
