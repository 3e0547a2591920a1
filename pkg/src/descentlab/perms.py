"""Permutations as one-line words, composed left to right.

A word w = w_1...w_n is identified with the permutation i -> w_i.  The
product st means "first s, then t", so (i)(st) = ((i)s)t.  The same product
is the place-permutation action of s on the word t.
"""

from functools import lru_cache
from itertools import permutations
from math import factorial


def identity(n):
    return tuple(range(1, n + 1))


def check_perm(w):
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation word")
    return tuple(w)


def compose(s, t):
    """The product st, read left to right."""
    if len(s) != len(t):
        raise ValueError(f"degree mismatch: {len(s)} vs {len(t)}")
    return tuple(t[i - 1] for i in s)


def act(tau, word):
    """Place action of tau on an arbitrary word: letter in slot (i)tau moves to slot i."""
    return tuple(word[i - 1] for i in tau)


def inverse(s):
    out = [0] * len(s)
    for i, v in enumerate(s, 1):
        out[v - 1] = i
    return tuple(out)


def shift(s, r, N):
    """Embed s into S_N acting on [r+1, r+deg s]."""
    k = len(s)
    if r < 0 or r + k > N:
        raise ValueError(f"cannot shift degree {k} by {r} inside degree {N}")
    return tuple(range(1, r + 1)) + tuple(v + r for v in s) + tuple(range(r + k + 1, N + 1))


def tau_block(tau, r):
    """Block permutation moving the blocks of r into the order given by tau.

    Read as a word it is B_{(1)tau} B_{(2)tau} ... where B_j is the j-th
    consecutive block of [1, n] of size r_j.
    """
    if len(tau) != len(r):
        raise ValueError("tau must have degree equal to the number of parts")
    starts = [0]
    for part in r:
        starts.append(starts[-1] + part)
    word = []
    for j in tau:
        word.extend(range(starts[j - 1] + 1, starts[j] + 1))
    return tuple(word)


def descents(w):
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def cycles(s):
    seen, out = set(), []
    for start in range(1, len(s) + 1):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = s[x - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(s):
    return tuple(sorted((len(c) for c in cycles(s)), reverse=True))


def from_cycles(cycs, n):
    w = list(range(1, n + 1))
    for c in cycs:
        for a, b in zip(c, c[1:] + c[:1]):
            w[a - 1] = b
    return tuple(w)


def rco_key(w):
    """Sort key for reverse colexicographic order.

    w < v when, at the rightmost position where they differ, w has the larger
    letter.  In S_3: 123 < 213 < 132 < 312 < 231 < 321.
    """
    return tuple(-x for x in reversed(w))


@lru_cache(maxsize=None)
def all_perms(n):
    """S_n in lexicographic one-line order."""
    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def perm_index(n):
    return {w: i for i, w in enumerate(all_perms(n))}


def lex_rank(w):
    n = len(w)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if w[j] < w[i])
        rank += smaller * factorial(n - 1 - i)
    return rank


def sign(s):
    return -1 if sum(len(c) - 1 for c in cycles(s)) % 2 else 1


def reduced_word(s):
    """Adjacent transpositions i (meaning (i,i+1)) whose product, left to right, is s."""
    w = list(s)
    out = []
    # bubble sort the word to the identity; each swap of slots i,i+1 is a
    # left factor s_i, so s is the product of the recorded swaps in order
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                out.append(i + 1)
                changed = True
    return out


def transposition(i, n):
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)
