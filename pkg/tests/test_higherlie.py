from fractions import Fraction
from math import factorial

import pytest
from hypothesis import assume, given, strategies as st

from descentlab.brauer import load_brauer_table, projective_dimensions
from descentlab.combinat import (
    conjugacy_class_size,
    divisors,
    enumerate_compositions,
    enumerate_partitions,
    is_coprime,
    is_p_regular,
    mobius,
    p_class_size,
    qquestion,
    sort_to_partition,
)
from descentlab.algebra import right_ideal_rank
from descentlab.golden import reference_lie_dimensions
from descentlab.higherlie import (
    PowerSum,
    brandt_character,
    character_terms,
    complexity,
    de_multiplicities,
    de_sigma,
    dimension_product_form,
    dimension_sum_form,
    enumerate_gamma,
    formal_character_Lq,
    formal_character_plethysm,
    higher_power_dimension,
    induced_dimension,
    is_periodic,
    is_projective,
    lie_basis,
    lie_dimension,
    lie_span_check,
    period,
    projective_multiplicities_by_character,
    satisfies_periodic_hypothesis,
    stirling_cycle_numbers,
    tilting_multiplicities,
    witt_dimension,
)
from descentlab.modidem import modular_idempotents

from strategies import compositions

F = Fraction


def admissible(q, p):
    return is_coprime(q, p) and is_p_regular(sort_to_partition(q), p)


# ---------------------------------------------------------------------------
# power sums, Witt and Brandt


def test_witt_values():
    assert [witt_dimension(n, 2) for n in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert witt_dimension(2, 2) == 1
    assert witt_dimension(6, 2) == 9
    assert witt_dimension(4, 3) == 18


@given(st.integers(1, 10), st.integers(1, 5))
def test_brandt_evaluates_to_witt(n, m):
    assert brandt_character(n).evaluate(m) == witt_dimension(n, m)


@given(st.integers(1, 12), st.integers(1, 4))
def test_witt_by_necklaces(n, m):
    # sum over d | n of d * L_d(m) = m^n
    assert sum(d * witt_dimension(d, m) for d in divisors(n)) == m ** n


def test_power_sum_arithmetic():
    a = PowerSum.p((2, 1))
    b = PowerSum.p((1,))
    assert (a * b) == PowerSum.p((2, 1, 1))
    assert a.adams(3) == PowerSum.p((6, 3))
    assert (a + a).evaluate(3) == 2 * 3 * 3


def test_stirling_numbers():
    assert stirling_cycle_numbers(4) == [0, 6, 11, 6, 1]
    assert sum(stirling_cycle_numbers(6)) == factorial(6)


# ---------------------------------------------------------------------------
# formal characters and multiplicities for q = (2,2,1), p = 3


def test_character_terms_221():
    rows = {(t.lam, t.delta, t.sharp, t.weight) for t in character_terms((2, 2, 1))}
    expected = {
        (((1,), (2,)), ((1,), (1,)), (1, 2, 2), F(1, 4)),
        (((1,), (2,)), ((1,), (2,)), (1, 4), F(-1, 4)),
        (((1,), (1, 1)), ((1,), (2, 2)), (1, 2, 2), F(1, 8)),
        (((1,), (1, 1)), ((1,), (1, 2)), (1, 1, 1, 2), F(-1, 8)),
        (((1,), (1, 1)), ((1,), (2, 1)), (1, 2, 1, 1), F(-1, 8)),
        (((1,), (1, 1)), ((1,), (1, 1)), (1, 1, 1, 1, 1), F(1, 8)),
    }
    assert rows == expected
    assert len(character_terms((2, 2, 1))) == 6


def test_tilting_multiplicities_221():
    m = tilting_multiplicities((2, 2, 1), 3)
    order = [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1)]
    assert [m[g] for g in order] == [0, 0, 1, 0, 1]
    dims = projective_dimensions(load_brauer_table(3, 5))
    assert dims[(3, 2)] + dims[(2, 2, 1)] == factorial(5) // qquestion((2, 2, 1))


def test_tilting_small_cases():
    assert tilting_multiplicities((2, 1), 3) == {(3,): 0, (2, 1): 1}
    assert tilting_multiplicities((2, 1), 5) == {(3,): 0, (2, 1): 1, (1, 1, 1): 1}


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", range(2, 6))
def test_projective_decomposition_dimension(p, n):
    table = load_brauer_table(p, n)
    dims = projective_dimensions(table)
    for q in enumerate_compositions(n):
        if not admissible(q, p):
            continue
        m = tilting_multiplicities(q, p, table)
        assert sum(m[g] * dims[g] for g in m) == factorial(n) // qquestion(q) == lie_dimension(q, p)
        assert m == projective_multiplicities_by_character(q, p, table)


@given(compositions(1, 7), st.sampled_from([0, 2, 3, 5]))
def test_plethysm_matches_term_sum(q, p):
    assume(admissible(q, p))
    assert formal_character_Lq(q, p) == formal_character_plethysm(q)


@given(compositions(1, 7), st.integers(1, 4))
def test_character_evaluates_to_dimension(q, m):
    assert formal_character_plethysm(q).evaluate(m) == dimension_product_form(q, m)


def test_hypothesis_violations():
    with pytest.raises(ValueError, match="hypothesis violated"):
        formal_character_Lq((2, 1), 2)
    with pytest.raises(ValueError, match="hypothesis violated"):
        tilting_multiplicities((1, 1, 1), 3)
    with pytest.raises(ValueError, match="hypothesis violated"):
        higher_power_dimension((2, 2), 2, 3)


def test_table_mismatch():
    with pytest.raises(ValueError, match="does not match"):
        tilting_multiplicities((2, 1), 3, load_brauer_table(3, 4))


# ---------------------------------------------------------------------------
# dimension formulas


@pytest.mark.parametrize("n", range(1, 7))
def test_dimension_forms_agree(n):
    for q in enumerate_compositions(n):
        for m in range(1, 5):
            assert dimension_product_form(q, m) == dimension_sum_form(q, m)


@pytest.mark.parametrize("ell", range(1, 7))
def test_closed_form_2211(ell):
    closed = F(ell ** 2 * (ell + 1) * (ell - 1) * (ell ** 2 - ell + 2), 16)
    assert higher_power_dimension((2, 2, 1, 1), 0, ell) == closed


# ---------------------------------------------------------------------------
# bases and dimensions of higher Lie modules


@pytest.mark.parametrize("lam", [(1,), (2, 1), (2, 2), (3, 1, 1), (2, 2, 1), (3, 2, 1), (2, 1, 1, 1)])
def test_gamma_size(lam):
    assert len(enumerate_gamma(lam)) == conjugacy_class_size(lam)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(1, 6))
def test_lie_basis_size(p, n):
    for q in enumerate_compositions(n):
        if is_coprime(q, p):
            assert len(lie_basis(q, p)) == factorial(n) // qquestion(q)


def test_lie_basis_requires_coprime():
    with pytest.raises(ValueError, match="requires"):
        lie_basis((2, 2), 2)


@pytest.mark.parametrize("p", [0, 2, 3])
@pytest.mark.parametrize("n", range(2, 7))
def test_lie_span(p, n):
    assert lie_span_check(n, p) == factorial(n - 1)


def test_lie_dimension_values():
    assert lie_dimension((3, 2, 1), 3) == 60
    assert lie_dimension((4, 2), 2) == 41
    assert lie_dimension((2, 2, 1), 2) == 1
    assert lie_dimension((2, 1), 2) == 1


@pytest.mark.parametrize("n", range(2, 6))
def test_lie_dimensions_against_reference(n):
    ref = reference_lie_dimensions()
    for lam in enumerate_partitions(n):
        for p in (0, 2, 3):
            assert lie_dimension(lam, p) == ref[(lam, p)]


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", range(2, 6))
def test_coprime_lie_module_is_projective_summand(p, n):
    idem = modular_idempotents(n, p)
    for q in enumerate_compositions(n):
        lam = sort_to_partition(q)
        if is_coprime(q, p) and is_p_regular(lam, p):
            d = lie_dimension(q, p)
            assert d == p_class_size(lam, p) == conjugacy_class_size(lam)
            assert d == right_ideal_rank(idem[lam].expand())


@given(st.sampled_from([lam for n in range(1, 8) for lam in enumerate_partitions(n)]))
def test_induced_dimension(lam):
    assert induced_dimension(lam) == conjugacy_class_size(lam)


# ---------------------------------------------------------------------------
# projective Lie modules by the class-sum formula


def test_de_sigma_conventions():
    assert de_sigma(6, 2) == (2, 2, 2)
    assert de_sigma(6, 2, "literal") == (3, 3)


@pytest.mark.parametrize("n,p,expected", [
    (2, 3, {(1, 1): 1}),
    (4, 3, {(3, 1): 1, (2, 1, 1): 1}),
    (5, 3, {(4, 1): 1, (2, 2, 1): 1, (3, 1, 1): 1}),
    (5, 2, {(4, 1): 1, (3, 2): 1}),
])
def test_de_multiplicities(n, p, expected):
    res = de_multiplicities(n, p)
    assert res.convention == "transposed"
    assert {g: v for g, v in res.multiplicities.items() if v} == expected


@pytest.mark.parametrize("n,p", [(3, 2), (4, 3), (5, 2), (5, 3)])
def test_de_matches_tilting(n, p):
    res = de_multiplicities(n, p)
    assert res.multiplicities == tilting_multiplicities((n,), p)


def test_de_rejects_divisible():
    with pytest.raises(ValueError):
        de_multiplicities(4, 2)


# ---------------------------------------------------------------------------
# complexity and period


def test_complexity_values():
    assert complexity((2, 2, 1), 3) == 0
    assert complexity((1, 1, 1), 3) == 1
    assert complexity((1,) * 6, 3) == 2
    assert complexity((1,) * 4, 0) == 0
    with pytest.raises(ValueError, match="coprimality"):
        complexity((3,), 3)


def test_period_values():
    assert period((1, 1, 1), 3) == 4
    assert period((1, 1), 2) == 1
    assert period((2, 1), 3) is None
    assert period((1,) * 6, 3) is None


@given(compositions(1, 9), st.sampled_from([2, 3, 5]))
def test_projective_iff_all_multiplicities_small(q, p):
    assume(is_coprime(q, p))
    from descentlab.combinat import multiplicities
    mult = multiplicities(q).values()
    assert is_projective(q, p) == all(k < p for k in mult)
    if satisfies_periodic_hypothesis(q, p):
        assert is_periodic(q, p)
        assert period(q, p) == (1 if p == 2 else 2 * p - 2)


def test_mobius_sanity():
    assert [mobius(k) for k in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
