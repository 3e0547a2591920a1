"""Pivot combinatorics of words and the right ideal Xi^q R S_n.

A word splits at its successive minima into pivot words.  Cutting a word
into q-segments and reassembling all the segments' pivot words by increasing
pivot gives the map ``upsilon``; its image is the set ``b_set(q)`` of words
whose pivot cycle type weakly refines q, and its fibers partition S_n.  The
elements Xi^q w for w in that set form a basis of Xi^q R S_n over any field.
"""

import csv
import io
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from .algebra import AlgebraElement, SpanSolver, q_of_words, right_ideal_rank
from .combinat import (
    conjugacy_class_size,
    enumerate_partitions,
    is_coprime,
    is_p_regular,
    is_weak_refinement,
    p_class_size,
    p_equivalent,
    partial_sums,
    sort_to_partition,
)
from .descent import DescentVector, young_character
from .fields import field_of
from .perms import all_perms, check_perm, cycles, from_cycles, rco_key


@dataclass(frozen=True)
class PivotDecomposition:
    word: tuple
    positions: tuple   # 1-based positions of the pivots
    words: tuple       # the pivot words, left to right
    cycle_type: tuple  # lengths of the pivot words

    @property
    def pivots(self):
        return tuple(self.word[i - 1] for i in self.positions)


def pivot_words(w):
    """Cut w after each successive minimum of the letters not yet used."""
    w = tuple(w)
    out, start = [], 0
    while start < len(w):
        rest = w[start:]
        stop = start + rest.index(min(rest)) + 1
        out.append(w[start:stop])
        start = stop
    return tuple(out)


def pivot_decompose(w):
    w = tuple(w)
    check_perm(w)
    words = pivot_words(w)
    lengths = tuple(len(x) for x in words)
    return PivotDecomposition(w, tuple(partial_sums(lengths)), words, lengths)


def pivot_type(w):
    return tuple(len(x) for x in pivot_words(w))


def phi_map(sigma):
    """Write the cycles of sigma with minima last, sort by minima, drop brackets."""
    cs = []
    for c in cycles(tuple(sigma)):
        k = c.index(min(c))
        cs.append(c[k + 1:] + c[:k + 1])
    cs.sort(key=lambda c: c[-1])
    return tuple(x for c in cs for x in c)


def phi_inverse(w):
    """Product of the pivot cycles of w."""
    w = tuple(w)
    return from_cycles(pivot_words(w), len(w))


def segments(q, w):
    bounds = [0] + partial_sums(q)
    return [tuple(w[a:b]) for a, b in zip(bounds, bounds[1:])]


def upsilon(q, w):
    """Reassemble the pivot words of the q-segments of w in increasing pivot order."""
    w = tuple(w)
    if sum(q) != len(w):
        raise ValueError(f"{tuple(q)} is not a composition of {len(w)}")
    pieces = [x for seg in segments(q, w) for x in pivot_words(seg)]
    pieces.sort(key=lambda x: x[-1])
    return tuple(v for x in pieces for v in x)


def rco_sorted(words):
    return sorted(words, key=rco_key)


@lru_cache(maxsize=None)
def b_set(q):
    """Words whose pivot cycle type weakly refines q, in reverse colex order."""
    q = tuple(q)
    n = sum(q)
    return tuple(rco_sorted(w for w in all_perms(n) if is_weak_refinement(pivot_type(w), q)))


def b_set_size(q):
    """sum over partitions lam weakly refining q of n!/lam?."""
    n = sum(q)
    return sum(conjugacy_class_size(lam) for lam in enumerate_partitions(n)
               if is_weak_refinement(lam, q))


def compatible_rearrangements(q, v):
    """Orders t of the pivot words of v that cut into consecutive groups of total
    lengths q_1, q_2, ..., with increasing indices inside each group."""
    words = pivot_words(v)
    lengths = [len(x) for x in words]
    out = []

    def fill(i, remaining, acc):
        if i == len(q):
            if not remaining:
                out.append(tuple(acc))
            return
        for k in range(1, len(remaining) + 1):
            for group in combinations(remaining, k):
                if sum(lengths[j] for j in group) == q[i]:
                    rest = tuple(j for j in remaining if j not in group)
                    fill(i + 1, rest, acc + list(group))

    fill(0, tuple(range(len(words))), [])
    return out


def fiber(q, v, verify=None):
    """The preimage of v under upsilon(q, -), built from compatible rearrangements.

    For n <= 6 (or when ``verify`` is true) the result is compared with a
    brute-force preimage enumeration.
    """
    q, v = tuple(q), tuple(v)
    if not is_weak_refinement(pivot_type(v), q):
        raise ValueError(f"{v} is not in the basis set for {q}")
    words = pivot_words(v)
    found = {tuple(x for j in t for x in words[j]) for t in compatible_rearrangements(q, v)}
    out = rco_sorted(found)
    if verify if verify is not None else len(v) <= 6:
        brute = rco_sorted(w for w in all_perms(len(v)) if upsilon(q, w) == v)
        if brute != out:
            raise AssertionError(f"fiber of {v} under {q}: {out} != preimage {brute}")
    return out


def leading_term(w):
    """Reverse-colex largest word of Q_{S_1}...Q_{S_l}, S_i the reversed pivot words.

    Returns (word, coefficient, expected sign).
    """
    words = pivot_words(w)
    prodsum = q_of_words([x[::-1] for x in words])
    top = max(prodsum, key=rco_key)
    sign = (-1) ** (len(words) + sum(len(x) for x in words))
    return top, prodsum[top], sign


# ---------------------------------------------------------------------------
# the basis of Xi^q R S_n


def xi_element(q, field=0):
    return DescentVector.xi(tuple(q), field_of(field)).expand()


@dataclass
class XiBasis:
    q: tuple
    field: object
    words: tuple
    elements: list = dc_field(repr=False)

    def index(self, w):
        return self.words.index(tuple(w))


def xi_basis(q, field=0, check=True):
    q = tuple(q)
    F = field_of(field)
    words = b_set(q)
    x = xi_element(q, F)
    elements = [x * AlgebraElement.basis_element(w, F) for w in words]
    if check:
        r = right_ideal_rank(x)
        if r != len(words):
            raise AssertionError(f"rank of Xi^{q} over p={F.p} is {r}, basis set has {len(words)}")
    return XiBasis(q, F, words, elements)


def rewrite_step(q, w):
    """Xi^q w = Xi^q (w - s Q) with Q built from the reversed pivot words of w.

    Valid when the pivot type of w does not weakly refine q, since then
    Xi^q Q = 0.  Returns {u: c} with every u strictly below w in reverse
    colex order.
    """
    words = pivot_words(w)
    prodsum = q_of_words([x[::-1] for x in words])
    s = prodsum[w]  # +1 or -1
    out = {}
    for u, c in prodsum.items():
        if u != w:
            out[u] = -s * c
    return out


def express_in_basis(q, sigma, field=0, cross_check=True):
    """Coordinates of Xi^q sigma over the words of b_set(q), as {word: coefficient}.

    Computed by the descending rewriting; with ``cross_check`` the result is
    compared with an exact linear solve.
    """
    q, sigma = tuple(q), tuple(sigma)
    F = field_of(field)
    coords = _rewrite(q, sigma, F)
    if cross_check:
        words, solver = _solver(q, F.p)
        target = (xi_element(q, F) * AlgebraElement.basis_element(sigma, F)).coeffs
        solved = solver.solve(target)
        if solved is None:
            raise AssertionError(f"Xi^{q} {sigma} is not in the span of the basis")
        other = {w: c for w, c in zip(words, solved) if c}
        if other != coords:
            raise AssertionError(f"rewriting {coords} disagrees with the solve {other}")
    return coords


@lru_cache(maxsize=64)
def _solver(q, p):
    basis = xi_basis(q, p, check=False)
    return basis.words, SpanSolver([e.coeffs for e in basis.elements], basis.field)


def coordinate_vector(q, sigma, field=0):
    coords = express_in_basis(q, sigma, field)
    F = field_of(field)
    return [coords.get(w, F.zero) for w in b_set(tuple(q))]


def _rewrite(q, sigma, F):
    memo = {}
    members = set(b_set(q))
    p = F.p

    def go(w):
        if w in memo:
            return memo[w]
        if w in members:
            res = {w: F.one}
        else:
            res = {}
            key = rco_key(w)
            for u, c in rewrite_step(q, w).items():
                if not rco_key(u) < key:
                    raise RuntimeError(f"rewriting did not descend: {u} from {w}")
                for b, d in go(u).items():
                    val = res.get(b, 0) + F(c) * d
                    res[b] = val % p if p else val
            res = {b: c for b, c in res.items() if c}
        memo[w] = res
        return res

    return go(sigma)


# ---------------------------------------------------------------------------
# characteristic-zero decomposition and the dimension census


@dataclass
class DecompositionReport:
    q: tuple
    dimension: int
    predicted_dimension: int
    parts: tuple
    character_match: bool

    @property
    def ok(self):
        return self.character_match and self.dimension == self.predicted_dimension


def ordinary_decomposition_check(q):
    """Compare Xi^q QS_n with the sum of omega_lam QS_n over partitions lam refining q."""
    from .characters import ideal_character
    from .descent import omega_q
    q = tuple(q)
    n = sum(q)
    x = xi_element(q, 0)
    dim = right_ideal_rank(x)
    parts = tuple(lam for lam in enumerate_partitions(n) if is_weak_refinement(lam, q))
    predicted = sum(conjugacy_class_size(lam) for lam in parts)
    lhs = ideal_character(x)
    rhs = None
    for lam in parts:
        chi = ideal_character(omega_q(lam).expand())
        rhs = chi if rhs is None else rhs + chi
    return DecompositionReport(q, dim, predicted, parts, lhs == rhs)


def census(q, mu, p):
    """Number of permutations with cycle type weakly refining q and p-equivalent to mu."""
    n = sum(q)
    return sum(conjugacy_class_size(lam) for lam in enumerate_partitions(n)
               if is_weak_refinement(lam, q) and p_equivalent(lam, mu, p))


@dataclass(frozen=True)
class ConjectureRow:
    p: int
    n: int
    q: tuple
    mu: tuple
    rank: int
    predicted: int
    verdict: str


def conjecture_checker(q, mu, p, idempotents=None):
    """rank of Xi^q e_mu F S_n against the census prediction."""
    from .modidem import modular_idempotents
    q, mu = tuple(q), tuple(mu)
    n = sum(q)
    if not is_p_regular(mu, p):
        raise ValueError(f"{mu} is not {p}-regular")
    idem = idempotents or modular_idempotents(n, p)
    F = field_of(p)
    x = DescentVector.xi(q, F) * idem[mu]
    rank = right_ideal_rank(x.expand())
    predicted = census(q, mu, p)
    if young_character(q)[mu] % p:
        full = p_class_size(mu, p)
        if rank != full:
            raise AssertionError(f"rank {rank} != class size {full} although the Young value is nonzero")
    if is_coprime(q, p) and sort_to_partition(q) == mu:
        if rank != conjugacy_class_size(mu):
            raise AssertionError(f"rank {rank} != |C_mu| for coprime q")
    verdict = "match" if rank == predicted else "mismatch"
    return ConjectureRow(p, n, q, mu, rank, predicted, verdict)


def xi_table(n, p, rows=None):
    """Ranks of Xi^lam e_mu F S_n for partitions lam (rows) and p-regular mu (columns)."""
    from .modidem import modular_idempotents
    idem = modular_idempotents(n, p)
    rows = rows or enumerate_partitions(n)
    return [conjecture_checker(lam, mu, p, idem) for lam in rows for mu in idem.order[::-1]]


def _fmt(parts):
    return "(" + ",".join(map(str, parts)) + ")"


def conjecture_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "n", "q", "mu", "rank", "predicted", "verdict"])
    for r in rows:
        writer.writerow([r.p, r.n, _fmt(r.q), _fmt(r.mu), r.rank, r.predicted, r.verdict])
    return buf.getvalue()
