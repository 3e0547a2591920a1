"""Sparse elements of the group algebra RS_n over Q or F_p, and right ideal ranks."""

from fractions import Fraction

import numpy as np

from .fields import QQ, field_of
from .perms import all_perms, identity, rco_key, shift


class AlgebraElement:
    """A finite sum of permutations of degree n with coefficients in a field."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, n, field=QQ, coeffs=None):
        self.n = n
        self.field = field_of(field)
        clean = {}
        for w, c in (coeffs or {}).items():
            if len(w) != n:
                raise ValueError(f"word {w} does not have degree {n}")
            c = self.field(c)
            if c:
                clean[tuple(w)] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, n, field, coeffs):
        obj = cls.__new__(cls)
        obj.n, obj.field, obj.coeffs = n, field, coeffs
        return obj

    @classmethod
    def one(cls, n, field=QQ):
        return cls(n, field, {identity(n): 1})

    @classmethod
    def basis_element(cls, w, field=QQ):
        return cls(len(w), field, {tuple(w): 1})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        p = self.field.p
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if p:
                v %= p
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return AlgebraElement._raw(self.n, self.field, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = self.field(k)
        if not k:
            return AlgebraElement._raw(self.n, self.field, {})
        p = self.field.p
        if p:
            out = {w: c * k % p for w, c in self.coeffs.items()}
        else:
            out = {w: c * k for w, c in self.coeffs.items()}
        return AlgebraElement._raw(self.n, self.field, out)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        out = {}
        for s, a in self.coeffs.items():
            for t, b in other.coeffs.items():
                w = tuple(t[i - 1] for i in s)
                out[w] = out.get(w, 0) + a * b
        p = self.field.p
        if p:
            out = {w: c % p for w, c in out.items() if c % p}
        else:
            out = {w: c for w, c in out.items() if c}
        return AlgebraElement._raw(self.n, self.field, out)

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.field.p, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for w in self.support():
            terms.append(f"{self.coeffs[w]}*{''.join(map(str, w))}")
        return " + ".join(terms)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __len__(self):
        return len(self.coeffs)

    def coefficient(self, w):
        return self.coeffs.get(tuple(w), self.field.zero)

    def support(self):
        """Supporting words in reverse colexicographic order."""
        return sorted(self.coeffs, key=rco_key)

    def is_zero(self):
        return not self.coeffs

    def reduce(self, field):
        """Image under Q -> F_p (or a change of representation)."""
        field = field_of(field)
        return AlgebraElement(self.n, field, self.coeffs)

    def embed(self, r, N):
        """Shift every word by r into degree N."""
        return AlgebraElement._raw(N, self.field,
                                   {shift(w, r, N): c for w, c in self.coeffs.items()})


def add(a, b):
    return a + b


def scale(a, k):
    return a.scale(k)


def algebra_multiply(a, b):
    return a * b


def dynkin(n, field=QQ):
    """omega_n = (1 - c_n)(1 - c_{n-1})...(1 - c_2), c_i the cycle i -> i-1 -> ... -> 1 -> i."""
    field = field_of(field)
    out = AlgebraElement.one(n, field)
    for i in range(n, 1, -1):
        c = (i,) + tuple(range(1, i)) + tuple(range(i + 1, n + 1))
        out = out * (AlgebraElement.one(n, field) - AlgebraElement.basis_element(c, field))
    return out


def omega_upper(q, field=QQ):
    """Product of the Dynkin elements of the parts of q, each shifted onto its block."""
    field = field_of(field)
    n = sum(q)
    out = AlgebraElement.one(n, field)
    start = 0
    for part in q:
        out = out * dynkin(part, field).embed(start, n)
        start += part
    return out


# ---------------------------------------------------------------------------
# formal sums of words over arbitrary alphabets


def word_sum_concat(a, b):
    """Concatenation product of two formal sums {word: coeff}."""
    out = {}
    for u, x in a.items():
        for v, y in b.items():
            w = u + v
            out[w] = out.get(w, 0) + x * y
    return {w: c for w, c in out.items() if c}


def q_of_word(S):
    """omega_k applied to the word S under the place action (k = len S)."""
    S = tuple(S)
    if len(set(S)) != len(S):
        raise ValueError(f"repeated letters in {S}")
    k = len(S)
    out = {}
    for tau, c in dynkin(k, QQ).coeffs.items():
        w = tuple(S[i - 1] for i in tau)
        out[w] = out.get(w, 0) + int(c)
    return {w: c for w, c in out.items() if c}


def q_of_words(seqs):
    """Concatenation product of q_of_word over several sequences."""
    out = {(): 1}
    for S in seqs:
        out = word_sum_concat(out, q_of_word(S))
    return out


def word_sum_to_element(ws, field=QQ):
    n = len(next(iter(ws)))
    return AlgebraElement(n, field, ws)


# ---------------------------------------------------------------------------
# ranks of right ideals xRS_n


def _lehmer_rank(words):
    """Lexicographic indices of an (N, n) array of 1-based permutation words."""
    N, n = words.shape
    rank = np.zeros(N, dtype=np.int64)
    fact = 1
    for i in range(n - 1, -1, -1):
        smaller = (words[:, i + 1:] < words[:, i:i + 1]).sum(axis=1)
        rank += smaller * fact
        fact *= n - i
    return rank


_PERM_ARRAYS = {}


def perm_array(n):
    if n not in _PERM_ARRAYS:
        _PERM_ARRAYS[n] = np.array(all_perms(n), dtype=np.int64).reshape(-1, n)
    return _PERM_ARRAYS[n]


def right_multiplication_matrix(x):
    """Integer matrix whose row sigma holds the coefficients of x*sigma.

    Columns follow the lexicographic order of S_n.  Coefficients must be
    integers (F_p residues or integral rationals).
    """
    n = x.n
    P = perm_array(n)
    N = P.shape[0]
    M = np.zeros((N, N), dtype=np.int64)
    rows = np.arange(N)
    for g, c in x.coeffs.items():
        # (g sigma)_i = sigma_{g_i}
        cols = _lehmer_rank(P[:, [v - 1 for v in g]])
        M[rows, cols] += int(c)
    return M


def rank_mod_p(M, p):
    """Rank of an integer matrix over F_p by dense elimination."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = r + 1 + np.nonzero(A[r + 1:, c])[0]
        if below.size:
            f = A[below, c][:, None]
            A[np.ix_(below, np.arange(c, cols))] = (A[below, c:] - f * A[r, c:]) % p
        r += 1
    return r


def right_ideal_rank(x):
    """dim of the right ideal x R S_n over the field of x."""
    if x.is_zero():
        return 0
    if x.field.p:
        return rank_mod_p(right_multiplication_matrix(x), x.field.p)
    from .seminormal import rational_ideal_rank
    return rational_ideal_rank(x)


def echelon(vectors, field):
    """Reduced row echelon form of a list of {key: scalar} dicts.

    Keys are compared through their position in the first-seen order.
    Returns list of (pivot_key, row) with rows fully reduced.
    """
    p = field.p
    basis = []  # list of (pivot, row dict)
    for v in vectors:
        row = {k: field(c) for k, c in v.items() if c}
        for piv, b in basis:
            c = row.get(piv)
            if c:
                for k, bc in b.items():
                    val = row.get(k, 0) - c * bc
                    if p:
                        val %= p
                    if val:
                        row[k] = val
                    else:
                        row.pop(k, None)
        if not row:
            continue
        piv = min(row, key=_key_order)
        inv = field.inv(row[piv])
        row = {k: (c * inv) % p if p else c * inv for k, c in row.items()}
        for j, (opiv, b) in enumerate(basis):
            c = b.get(piv)
            if c:
                for k, rc in row.items():
                    val = b.get(k, 0) - c * rc
                    if p:
                        val %= p
                    if val:
                        b[k] = val
                    else:
                        b.pop(k, None)
        basis.append((piv, row))
    basis.sort(key=lambda t: _key_order(t[0]))
    return basis


def _key_order(w):
    return w


def right_ideal_basis(x):
    """Reduced echelon basis of x R S_n; pivots in lexicographic word order."""
    rows = [(x * AlgebraElement.basis_element(s, x.field)).coeffs for s in all_perms(x.n)]
    return [AlgebraElement(x.n, x.field, row) for _, row in echelon(rows, x.field)]


def solve_in_span(target, spanning, field):
    """Coordinates c with sum c_i spanning[i] = target, or None if impossible.

    All vectors are {key: scalar} dicts; exact elimination.
    """
    return SpanSolver(spanning, field).solve(target)


class SpanSolver:
    """Eliminate a spanning list once, then solve for many targets."""

    def __init__(self, spanning, field):
        self.field = field
        self.k = len(spanning)
        p = field.p
        # each row carries tag coordinates recording which combination it is
        self.basis = []
        for i, v in enumerate(spanning):
            row = {("v", key): field(c) for key, c in v.items() if c}
            row[("t", i)] = field(1)
            for piv, b in self.basis:
                c = row.get(piv)
                if c:
                    _axpy(row, b, -c, p)
            vec_keys = [key for key in row if key[0] == "v"]
            if not vec_keys:
                continue
            piv = min(vec_keys)
            inv = field.inv(row[piv])
            for key in list(row):
                row[key] = row[key] * inv % p if p else row[key] * inv
            self.basis.append((piv, row))

    def solve(self, target):
        field, p = self.field, self.field.p
        rest = {("v", key): field(c) for key, c in target.items() if c}
        for piv, b in self.basis:
            c = rest.get(piv)
            if c:
                _axpy(rest, b, -c, p)
        if any(key[0] == "v" for key in rest):
            return None
        # rest = target - combination; the tags hold minus the coefficients
        out = [field(0)] * self.k
        for key, c in rest.items():
            if key[0] == "t":
                out[key[1]] = field(-c)
        return out


def _axpy(row, b, c, p):
    for key, bc in b.items():
        val = row.get(key, 0) + c * bc
        if p:
            val %= p
        if val:
            row[key] = val
        else:
            row.pop(key, None)


def to_fraction(c):
    return c if isinstance(c, Fraction) else Fraction(c)
