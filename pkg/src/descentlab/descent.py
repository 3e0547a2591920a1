"""The descent algebra D(S_n) in the basis of descent sums Xi^q.

Xi^q is the sum of all permutations whose descents lie among the partial
sums of q.  Products are computed from the matrix-counting structure
constants, never through the group algebra (that is the test oracle).
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .algebra import AlgebraElement
from .combinat import (
    canonical_order,
    enumerate_compositions,
    enumerate_partitions,
    is_equivalent,
    multiplicities,
    p_equivalent,
    qquestion,
    refinement_statistics,
    sort_to_partition,
)
from .fields import QQ, field_of


class DescentVector:
    """Sparse vector sum_q c_q Xi^q over a field."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, n, field=QQ, coeffs=None):
        self.n = n
        self.field = field_of(field)
        clean = {}
        for q, c in (coeffs or {}).items():
            q = tuple(q)
            if sum(q) != n or any(part < 1 for part in q):
                raise ValueError(f"{q} is not a composition of {n}")
            c = self.field(c)
            if c:
                clean[q] = c
        self.coeffs = clean

    @classmethod
    def xi(cls, q, field=QQ):
        q = tuple(q)
        return cls(sum(q), field, {q: 1})

    @classmethod
    def one(cls, n, field=QQ):
        return cls(n, field, {(n,): 1})

    @classmethod
    def zero(cls, n, field=QQ):
        return cls(n, field, {})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _new(self, coeffs):
        p = self.field.p
        if p:
            coeffs = {q: c % p for q, c in coeffs.items() if c % p}
        else:
            coeffs = {q: c for q, c in coeffs.items() if c}
        obj = DescentVector.__new__(DescentVector)
        obj.n, obj.field, obj.coeffs = self.n, self.field, coeffs
        return obj

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for q, c in other.coeffs.items():
            out[q] = out.get(q, 0) + c
        return self._new(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = self.field(k)
        return self._new({q: c * k for q, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, DescentVector):
            return descent_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, k):
        return self.scale(k)

    def __pow__(self, k):
        result = DescentVector.one(self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, DescentVector):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.field.p, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*Xi{q}" for q, c in self.items())

    def items(self):
        """Terms ordered by composition length, then lexicographically descending."""
        return sorted(self.coeffs.items(), key=lambda t: (len(t[0]), tuple(-x for x in t[0])))

    def coefficient(self, q):
        return self.coeffs.get(tuple(q), self.field.zero)

    def support(self):
        return [q for q, _ in self.items()]

    def is_zero(self):
        return not self.coeffs

    def reduce(self, field):
        return DescentVector(self.n, field_of(field), self.coeffs)

    def expand(self):
        """The element of the group algebra represented by this vector."""
        out = {}
        for q, c in self.coeffs.items():
            for w in descent_class(q):
                out[w] = out.get(w, 0) + c
        return AlgebraElement(self.n, self.field, out)


# ---------------------------------------------------------------------------
# descent sums


@lru_cache(maxsize=None)
def descent_class(q):
    """Permutations (as words) increasing on each block of q."""
    n = sum(q)
    out = []

    def fill(remaining, blocks):
        if not blocks:
            out.append(())
            return
        size = blocks[0]
        for chosen in combinations(remaining, size):
            rest = tuple(v for v in remaining if v not in chosen)
            start = len(out)
            fill(rest, blocks[1:])
            for k in range(start, len(out)):
                out[k] = chosen + out[k]

    fill(tuple(range(1, n + 1)), tuple(q))
    return tuple(out)


def xi_expand(q, field=QQ):
    q = tuple(q)
    return AlgebraElement(sum(q), field, {w: 1 for w in descent_class(q)})


# ---------------------------------------------------------------------------
# structure constants


def _matrices(r, q, barred=False):
    """Nonnegative integer matrices with row sums r and column sums q."""
    k = len(q)

    def rows(i, caps):
        if i == len(r):
            if not any(caps):
                yield ()
            return
        for row in _row_fillings(r[i], caps, barred):
            new_caps = tuple(c - x for c, x in zip(caps, row))
            for rest in rows(i + 1, new_caps):
                yield (row,) + rest

    if barred:
        # exactly one nonzero per column: each column is filled by one row
        for m in rows(0, tuple(q)):
            cols_ok = all(sum(1 for row in m if row[j]) == 1 for j in range(k))
            if cols_ok:
                yield m
    else:
        yield from rows(0, tuple(q))


def _row_fillings(total, caps, barred):
    k = len(caps)
    out = []

    def go(j, left, acc):
        if j == k:
            if left == 0:
                out.append(tuple(acc))
            return
        hi = min(left, caps[j])
        choices = ((0, caps[j]) if caps[j] else (0,)) if barred else range(hi + 1)
        for x in choices:
            if x <= hi:
                acc.append(x)
                go(j + 1, left - x, acc)
                acc.pop()

    go(0, total, [])
    return out


def _reading(m):
    return tuple(x for row in m for x in row if x)


@lru_cache(maxsize=None)
def product_table(r, q):
    """Counter s -> |N^s_{r,q}|."""
    return Counter(_reading(m) for m in _matrices(tuple(r), tuple(q)))


@lru_cache(maxsize=None)
def barred_table(r, q):
    return Counter(_reading(m) for m in _matrices(tuple(r), tuple(q), barred=True))


def structure_constant(s, r, q):
    """Number of matrices with row sums r, column sums q and row reading s."""
    return product_table(tuple(r), tuple(q)).get(tuple(s), 0)


def barred_constant(s, r, q):
    """As structure_constant, with exactly one nonzero entry in each column."""
    return barred_table(tuple(r), tuple(q)).get(tuple(s), 0)


def descent_multiply(u, v):
    """Product in D(S_n): Xi^r Xi^q = sum_s |N^s_{r,q}| Xi^s."""
    u._check(v)
    out = {}
    for r, a in u.coeffs.items():
        for q, b in v.coeffs.items():
            ab = a * b
            for s, count in product_table(r, q).items():
                out[s] = out.get(s, 0) + ab * count
    return u._new(out)


# ---------------------------------------------------------------------------
# refinements


@lru_cache(maxsize=None)
def strong_refinements(q):
    """All r with r <= q (strong refinement), q itself included."""
    pieces = [enumerate_compositions(part) for part in q]
    out = [()]
    for options in pieces:
        out = [a + b for a in out for b in options]
    return tuple(out)


def omega_q(q, field=QQ):
    """omega_q = sum over s <= q of (-1)^(l(s)-l(q)) F_q(s) Xi^s."""
    q = tuple(q)
    coeffs = {}
    for s in strong_refinements(q):
        _, _, last = refinement_statistics(s, q)
        coeffs[s] = (-1) ** (len(s) - len(q)) * last
    return DescentVector(sum(q), field, coeffs)


# ---------------------------------------------------------------------------
# class functions and the Solomon map


class ClassFunction:
    """A function on the partitions of n (conjugacy classes of S_n)."""

    __slots__ = ("n", "field", "values")

    def __init__(self, n, field, values):
        self.n = n
        self.field = field_of(field)
        self.values = {tuple(mu): self.field(values.get(tuple(mu), 0))
                       for mu in enumerate_partitions(n)}

    def __getitem__(self, mu):
        return self.values[tuple(mu)]

    def __add__(self, other):
        return ClassFunction(self.n, self.field,
                             {mu: self.values[mu] + other.values[mu] for mu in self.values})

    def __sub__(self, other):
        return ClassFunction(self.n, self.field,
                             {mu: self.values[mu] - other.values[mu] for mu in self.values})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return ClassFunction(self.n, self.field,
                                 {mu: self.values[mu] * other.values[mu] for mu in self.values})
        return ClassFunction(self.n, self.field,
                             {mu: self.values[mu] * other for mu in self.values})

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.n == other.n
                and self.field == other.field and self.values == other.values)

    def __repr__(self):
        return f"ClassFunction({self.values})"


@lru_cache(maxsize=None)
def young_character(q):
    """phi^q as a dict mu -> integer, for every partition mu of n.

    phi^q(mu) counts the q-tabloids fixed by a permutation of cycle type mu:
    the cycles must be distributed among the rows, so we count matrices c
    with row i spreading the m_i(mu) cycles of length i over the parts of q,
    weighted by the multinomials m_i!/prod_j c_ij!.
    """
    q = tuple(q)
    n = sum(q)
    out = {}
    for mu in enumerate_partitions(n):
        mult = sorted(multiplicities(mu).items())
        out[mu] = _spread(tuple(mult), q)
    return out


def _spread(mult, caps):
    if not mult:
        return 1 if not any(caps) else 0
    (length, m), rest = mult[0], mult[1:]
    total = 0
    k = len(caps)

    def go(j, left, caps_now, weight):
        nonlocal total
        if j == k:
            if left == 0:
                total += weight * _spread(rest, tuple(caps_now))
            return
        most = min(left, caps_now[j] // length)
        for c in range(most + 1):
            caps_now[j] -= c * length
            go(j + 1, left - c, caps_now, weight // factorial(c) if c else weight)
            caps_now[j] += c * length

    go(0, m, list(caps), factorial(m))
    return total


def young_character_function(q, field=QQ):
    return ClassFunction(sum(q), field, young_character(tuple(q)))


def solomon_epimorphism(v):
    """Xi^q -> phi^q, extended linearly."""
    out = {mu: v.field.zero for mu in enumerate_partitions(v.n)}
    for q, c in v.coeffs.items():
        for mu, val in young_character(q).items():
            out[mu] = out[mu] + c * val
    return ClassFunction(v.n, v.field, out)


def class_indicator(lam, field=QQ):
    """Indicator of the p-equivalence class of lam (the conjugacy class when p = 0)."""
    field = field_of(field)
    n = sum(lam)
    return ClassFunction(n, field, {mu: int(p_equivalent(mu, lam, field.p)) if field.p
                                    else int(tuple(mu) == tuple(lam))
                                    for mu in enumerate_partitions(n)})


# ---------------------------------------------------------------------------
# Garsia-Reutenauer elements (characteristic zero)


def _require_ordinary(field):
    if field_of(field).p != 0:
        raise ValueError("ordinary-only: this element needs characteristic 0")


def gr_I(q, field=QQ):
    """I_q = sum over r <= q of (-1)^(l(r)-l(q)) / l(r,q) Xi^r."""
    _require_ordinary(field)
    q = tuple(q)
    coeffs = {}
    for r in strong_refinements(q):
        length, _, _ = refinement_statistics(r, q)
        coeffs[r] = Fraction((-1) ** (len(r) - len(q)), length)
    return DescentVector(sum(q), QQ, coeffs)


def gr_E(lam, field=QQ):
    """E_lam = (1/l(lam)!) sum of I_q over the rearrangements q of lam."""
    _require_ordinary(field)
    lam = sort_to_partition(lam)
    n = sum(lam)
    out = DescentVector.zero(n)
    for q in enumerate_compositions(n):
        if is_equivalent(q, lam):
            out = out + gr_I(q)
    return out.scale(Fraction(1, factorial(len(lam))))


def xi_in_I_basis(q, field=QQ):
    """Coordinates of Xi^q in the basis {I_r}: Xi^q = sum_{r <= q} I_r / l!(r,q).

    The returned vector is indexed by r and means sum_r c_r I_r.
    """
    _require_ordinary(field)
    q = tuple(q)
    coeffs = {}
    for r in strong_refinements(q):
        _, length_fact, _ = refinement_statistics(r, q)
        coeffs[r] = Fraction(1, length_fact)
    return DescentVector(sum(q), QQ, coeffs)


def from_I_coordinates(v):
    """Convert sum_r c_r I_r back to the Xi basis."""
    out = DescentVector.zero(v.n)
    for r, c in v.coeffs.items():
        out = out + gr_I(r).scale(c)
    return out


def ordinary_idempotents(n):
    """Orthogonal idempotents e_lam built from nu_lam = omega_lam / lam?.

    With the partitions in the canonical order, nu_i nu_j = 0 for i < j, so
    e_i = nu_i (1 - nu_{i-1}) ... (1 - nu_1) gives a complete orthogonal set.
    """
    order = canonical_order(enumerate_partitions(n))
    nus = [omega_q(lam).scale(Fraction(1, qquestion(lam))) for lam in order]
    one = DescentVector.one(n)
    out = {}
    for i, lam in enumerate(order):
        e = nus[i]
        for nu in reversed(nus[:i]):
            e = e * (one - nu)
        out[lam] = e
    return out
