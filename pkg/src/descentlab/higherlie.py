"""Higher Lie modules omega_q RS_n and higher Lie powers L^q(V).

Bases from tableaux Gamma(lam), dimensions, the Witt and Brandt formulas,
formal characters in power sums, tilting and projective multiplicities from
Brauer tables, and the complexity/period arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial, prod

import numpy as np

from .algebra import AlgebraElement, q_of_words, rank_mod_p, right_ideal_rank
from .brauer import load_brauer_table, pairing, projective_dimensions
from .combinat import (
    divisors,
    enumerate_partitions,
    is_coprime,
    is_p_regular,
    mobius,
    multiplicities,
    qquestion,
    sort_to_partition,
)
from .descent import omega_q
from .fields import Field, field_of
from .perms import all_perms, perm_index

LARGE_PRIME = 2147483647


# ---------------------------------------------------------------------------
# power-sum symmetric functions


class PowerSum:
    """Sparse sum of power sums p_lam with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = sort_to_partition(lam)
            clean[lam] = clean.get(lam, 0) + Fraction(c)
        self.coeffs = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def p(cls, lam):
        return cls({tuple(lam): 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return PowerSum(out)

    def __mul__(self, other):
        if not isinstance(other, PowerSum):
            return PowerSum({lam: c * other for lam, c in self.coeffs.items()})
        out = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                lam = sort_to_partition(a + b)
                out[lam] = out.get(lam, 0) + x * y
        return PowerSum(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PowerSum) and self.coeffs == other.coeffs

    def __repr__(self):
        return " + ".join(f"{c}*p{lam}" for lam, c in sorted(self.coeffs.items())) or "0"

    def adams(self, k):
        """p_k plethysm: p_lam -> p_{k lam}."""
        return PowerSum({tuple(k * x for x in lam): c for lam, c in self.coeffs.items()})

    def evaluate(self, m):
        """Substitute p_k -> m for every k (the dimension over an m-dimensional space)."""
        return sum(c * Fraction(m) ** len(lam) for lam, c in self.coeffs.items())


def complete_homogeneous(m):
    """h_m = sum over lam |- m of p_lam / lam?."""
    if m == 0:
        return PowerSum({(): 1})
    return PowerSum({lam: Fraction(1, qquestion(lam)) for lam in enumerate_partitions(m)})


def plethysm_h(m, f):
    """h_m composed with f, using p_k[f] = f with every p_j replaced by p_{jk}."""
    if m == 0:
        return PowerSum({(): 1})
    out = PowerSum()
    for lam in enumerate_partitions(m):
        term = PowerSum({(): Fraction(1, qquestion(lam))})
        for part in lam:
            term = term * f.adams(part)
        out = out + term
    return out


# ---------------------------------------------------------------------------
# Witt and Brandt


def witt_dimension(n, m):
    """Dimension of the degree-n part of the free Lie algebra on m generators."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    total = sum(mobius(d) * m ** (n // d) for d in divisors(n))
    return total // n


def brandt_character(n):
    """(1/n) sum_{d | n} mu(d) p_d^{n/d}."""
    return PowerSum({tuple([d] * (n // d)): Fraction(mobius(d), n) for d in divisors(n)})


# ---------------------------------------------------------------------------
# tableaux Gamma(lam) and bases


@dataclass(frozen=True)
class GammaTableau:
    shape: tuple
    rows: tuple  # the sequences T_{i,j}, largest length first

    def word_sequences(self):
        return self.rows


def enumerate_gamma(lam):
    """Sequences T_{i,j} (i = largest part down to 1, j = 1..m_i).

    Each T_{i,j} has length i and starts with its minimum; within a fixed i
    the minima increase with j; all entries together are 1..n.
    """
    lam = sort_to_partition(lam)
    n = sum(lam)
    sizes = sorted(multiplicities(lam).items(), reverse=True)
    out = []

    def assign(k, remaining, acc):
        if k == len(sizes):
            out.append(GammaTableau(lam, tuple(acc)))
            return
        i, m = sizes[k]
        for chosen in combinations(remaining, i * m):
            rest = tuple(v for v in remaining if v not in chosen)
            for blocks in _ordered_blocks(chosen, i, m):
                assign(k + 1, rest, acc + list(blocks))

    assign(0, tuple(range(1, n + 1)), [])
    return out


def _ordered_blocks(values, size, count):
    """Split values into count sequences of given size, min first, minima increasing."""
    if count == 0:
        yield ()
        return
    first = values[0]
    others = values[1:]
    for mates in combinations(others, size - 1):
        rest = tuple(v for v in others if v not in mates)
        for arrangement in permutations(mates):
            block = (first,) + arrangement
            for tail in _ordered_blocks(rest, size, count - 1):
                yield (block,) + tail


def q_of_tableau(T, field=Field(0)):
    """Q_T: concatenation product of omega applied to each sequence of T."""
    ws = q_of_words(T.rows)
    return AlgebraElement(sum(T.shape), field, ws)


def lie_basis(q, p=0, check=True):
    """The elements omega_q Q_T for T in Gamma(lam(q)); requires (q, p) = 1."""
    q = tuple(q)
    if not is_coprime(q, p):
        raise ValueError("tableau basis requires (q,p)=1")
    F = field_of(p)
    w = omega_q(q, F).expand()
    basis = [w * q_of_tableau(T, F) for T in enumerate_gamma(q)]
    if check:
        r = vectors_rank(basis)
        if r != len(basis):
            raise AssertionError(f"basis elements are dependent: rank {r} < {len(basis)}")
    return basis


def vectors_rank(elements):
    """Rank of a list of group-algebra elements as vectors.

    Over F_p this is exact.  Over Q the elements are scaled to integers and
    reduced modulo a large prime, which can only lower the rank, so a full
    rank result certifies independence over Q.
    """
    if not elements:
        return 0
    n = elements[0].n
    p = elements[0].field.p
    index = perm_index(n)
    modulus = p or LARGE_PRIME
    M = np.zeros((len(elements), len(index)), dtype=np.int64)
    for r, x in enumerate(elements):
        for w, c in x.coeffs.items():
            c = Fraction(c)
            M[r, index[w]] = c.numerator * pow(c.denominator, -1, modulus) % modulus
    return rank_mod_p(M, modulus)


def lie_span_check(n, p=0):
    """The elements omega_n sigma with (1)sigma = 1 span a space of dimension (n-1)!."""
    F = field_of(p)
    w = omega_q((n,), F).expand()
    elems = [w * AlgebraElement.basis_element(s, F) for s in all_perms(n) if s[0] == 1]
    return vectors_rank(elems)


def lie_dimension(q, p=0):
    """dim omega_q F S_n by exact elimination (no coprimality needed)."""
    return right_ideal_rank(omega_q(tuple(q), field_of(p)).expand())


def induced_dimension(lam):
    """n! / prod (i!)^{m_i} m_i! times prod ((i-1)!)^{m_i}."""
    lam = sort_to_partition(lam)
    n = sum(lam)
    m = multiplicities(lam)
    index = prod(factorial(i) ** k * factorial(k) for i, k in m.items())
    return Fraction(factorial(n), index) * prod(factorial(i - 1) ** k for i, k in m.items())


# ---------------------------------------------------------------------------
# higher Lie powers L^q(V)


def _check_hypotheses(q, p):
    if not is_coprime(q, p):
        raise ValueError(f"hypothesis violated: {tuple(q)} is not coprime to p={p}")
    if not is_p_regular(sort_to_partition(q), p):
        raise ValueError(f"hypothesis violated: {sort_to_partition(q)} is not {p}-regular")


def stirling_cycle_numbers(m):
    """Coefficients of x(x+1)...(x+m-1): list c with c[j] = number of perms of m with j cycles."""
    poly = [1]
    for i in range(m):
        nxt = [0] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j + 1] += c
            nxt[j] += c * i
        poly = nxt
    return poly


def dimension_product_form(q, m):
    mult = multiplicities(q)
    return prod(comb(k + witt_dimension(i, m) - 1, k) for i, k in mult.items())


def dimension_sum_form(q, m):
    """The same dimension as a signed sum over eta in R(q) and divisor sequences."""
    mult = multiplicities(q)
    sizes = sorted(mult)
    total = Fraction(0)
    for eta in product(*[range(1, mult[i] + 1) for i in sizes]):
        weight = 1
        for i, e in zip(sizes, eta):
            weight *= i ** (mult[i] - e) * stirling_cycle_numbers(mult[i])[e]
        # gamma: the partition with m_i(gamma) = eta_i; delta runs over
        # divisor sequences delta_j | gamma_j
        gamma = [i for i, e in zip(sizes, eta) for _ in range(e)]
        inner = 0
        for delta in product(*[divisors(g) for g in gamma]):
            mu = prod(mobius(d) for d in delta)
            if mu:
                inner += mu * m ** sum(g // d for g, d in zip(gamma, delta))
        total += weight * inner
    return total / qquestion(q)


def higher_power_dimension(q, p, m):
    """dim L^q(V) for dim V = m, from both formulas, which must agree."""
    q = tuple(q)
    _check_hypotheses(q, p)
    a = dimension_product_form(q, m)
    b = dimension_sum_form(q, m)
    if a != b:
        raise AssertionError(f"dimension formulas disagree for {q}, m={m}: {a} vs {b}")
    return a


@dataclass(frozen=True)
class CharacterTerm:
    lam: tuple      # one partition of m_i(q) for each part size i
    delta: tuple    # one divisor sequence for each part size
    sharp: tuple    # the composition built from lam and delta
    weight: Fraction


def character_terms(q):
    """Terms (lam, delta, lam#delta, weight) of the formal character of L^q(V).

    lam picks a partition of m_i for each part size i; delta picks, for each
    entry of lam_i, a divisor of i.  The composition lam#delta concatenates,
    over i and j, the value lam_ij * delta_ij repeated i / delta_ij times.
    The weight is mu(delta) / (prod lam_i? * prod i^{l(lam_i)}).
    """
    q = tuple(q)
    mult = multiplicities(q)
    sizes = sorted(mult)
    terms = []
    for lams in product(*[enumerate_partitions(mult[i]) for i in sizes]):
        denom = prod(qquestion(l) for l in lams) * prod(i ** len(l) for i, l in zip(sizes, lams))
        choices = [list(product(divisors(i), repeat=len(l))) for i, l in zip(sizes, lams)]
        for deltas in product(*choices):
            mu = prod(mobius(d) for ds in deltas for d in ds)
            if not mu:
                continue
            sharp = []
            for i, l, ds in zip(sizes, lams, deltas):
                for part, d in zip(l, ds):
                    sharp.extend([part * d] * (i // d))
            terms.append(CharacterTerm(tuple(lams), tuple(deltas), tuple(sharp), Fraction(mu, denom)))
    return terms


def formal_character_Lq(q, p=0):
    """Formal character of L^q(V) in power sums."""
    q = tuple(q)
    _check_hypotheses(q, p)
    out = PowerSum()
    for t in character_terms(q):
        out = out + PowerSum({t.sharp: t.weight})
    return out


def formal_character_plethysm(q):
    """prod_i h_{m_i} composed with the Brandt character of degree i."""
    out = PowerSum({(): 1})
    for i, k in multiplicities(q).items():
        out = out * plethysm_h(k, brandt_character(i))
    return out


def tilting_multiplicities(q, p, table=None):
    """m_gamma = sum of weight * beta^gamma(lam#delta) over the character terms."""
    q = tuple(q)
    _check_hypotheses(q, p)
    n = sum(q)
    table = table or load_brauer_table(p, n)
    if (table.p, table.n) != (p, n):
        raise ValueError("Brauer table does not match (p, n)")
    out = {}
    terms = character_terms(q)
    for gamma in table.labels:
        total = Fraction(0)
        for t in terms:
            cls = sort_to_partition(t.sharp)
            if cls not in table.classes:
                raise ValueError(f"class {cls} is p-singular and missing from the Brauer table")
            total += t.weight * table.value(gamma, cls)
        if total.denominator != 1 or total < 0:
            raise AssertionError(f"multiplicity of {gamma} is {total}")
        out[gamma] = int(total)
    return out


def projective_multiplicities_by_character(q, p, table=None):
    """Pair the ordinary character of omega_q QS_n with the Brauer characters.

    Valid when the module is projective: its ordinary lift has this character,
    and pairing with beta^gamma over p-regular classes counts P^gamma.
    """
    from .characters import ideal_character
    q = tuple(q)
    n = sum(q)
    table = table or load_brauer_table(p, n)
    psi = ideal_character(omega_q(q).expand())
    return {g: v for g, v in pairing(table, psi).items()}


def de_sigma(n, d, convention="transposed"):
    """The class sigma_d: (d^{n/d}) in the transposed reading, ((n/d)^d) literally."""
    if convention == "transposed":
        return tuple([d] * (n // d))
    return tuple([n // d] * d)


@dataclass
class DEResult:
    multiplicities: dict
    convention: str
    rejected: dict


def de_multiplicities(n, p, table=None):
    """n_nu = (1/n) sum_{d | n} mu(d) beta^nu(sigma_d), with the class convention validated.

    The transposed class (d^{n/d}) is tried first; a convention is accepted
    when every n_nu is a nonnegative integer and sum n_nu dim P^nu equals
    dim omega_n F S_n.
    """
    if p and n % p == 0:
        raise ValueError("p must not divide n")
    table = table or load_brauer_table(p, n)
    target = lie_dimension((n,), p)
    if p and p <= n:
        pdims = projective_dimensions(table)
    else:
        pdims = {g: _ordinary_dim(g) for g in table.labels}
    rejected = {}
    for convention in ("transposed", "literal"):
        mults = {}
        for nu in table.labels:
            total = Fraction(0)
            for d in divisors(n):
                total += mobius(d) * table.value(nu, de_sigma(n, d, convention))
            mults[nu] = total / n
        bad = [nu for nu, v in mults.items() if v < 0 or v.denominator != 1]
        dim = sum(mults[nu] * pdims[nu] for nu in mults)
        if not bad and dim == target:
            return DEResult({nu: int(v) for nu, v in mults.items()}, convention, rejected)
        rejected[convention] = {"multiplicities": {nu: str(v) for nu, v in mults.items()},
                                "dimension": str(dim)}
    raise AssertionError(f"no class convention gives valid multiplicities: {rejected}")


def _ordinary_dim(lam):
    from .characters import dimension
    return dimension(lam)


# ---------------------------------------------------------------------------
# complexity and period


def complexity(q, p):
    if not is_coprime(q, p):
        raise ValueError("formula requires coprimality")
    if p == 0:
        return 0
    return sum(k // p for k in multiplicities(q).values())


def is_projective(q, p):
    return complexity(q, p) == 0


def is_periodic(q, p):
    return complexity(q, p) == 1


def satisfies_periodic_hypothesis(q, p):
    """(q,p) = 1 and exactly one part size has multiplicity in [p, 2p-1], the rest below p."""
    if not is_coprime(q, p) or p == 0:
        return False
    mult = multiplicities(q).values()
    big = [k for k in mult if k >= p]
    return len(big) == 1 and big[0] <= 2 * p - 1


def period(q, p):
    if not is_periodic(q, p) or not satisfies_periodic_hypothesis(q, p):
        return None
    return 1 if p == 2 else 2 * p - 2
