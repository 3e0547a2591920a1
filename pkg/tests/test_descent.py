from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from descentlab.algebra import AlgebraElement, algebra_multiply
from descentlab.combinat import (
    enumerate_compositions,
    enumerate_partitions,
    facmulti,
    is_equivalent,
    is_strong_refinement,
    is_weak_refinement,
    qquestion,
    sort_to_partition,
)
from descentlab.descent import (
    DescentVector,
    barred_constant,
    class_indicator,
    from_I_coordinates,
    gr_E,
    gr_I,
    omega_q,
    ordinary_idempotents,
    solomon_epimorphism,
    structure_constant,
    xi_expand,
    xi_in_I_basis,
    young_character,
)
from descentlab.fields import QQ, Field
from descentlab.perms import all_perms, tau_block

from strategies import composition_pairs

X = DescentVector.xi


def test_xi_expand_examples():
    assert xi_expand((3,)) == AlgebraElement.one(3)
    assert xi_expand((1, 1, 1)) == AlgebraElement(3, QQ, {s: 1 for s in all_perms(3)})
    words = [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3), (3, 4, 1, 2)]
    assert xi_expand((2, 2)) == AlgebraElement(4, QQ, {w: 1 for w in words})


def test_structure_constant_example():
    assert structure_constant((1, 1, 1), (1, 2), (2, 1)) == 1
    assert (X((2, 1)) * X((1, 2))).coefficient((1, 1, 1)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_barred_diagonal(n):
    for q in enumerate_compositions(n):
        for r in enumerate_compositions(n):
            if is_equivalent(r, q):
                assert barred_constant(r, r, q) == facmulti(r)
        if list(q) == sorted(q, reverse=True):
            assert (X(q) * X(q)).coefficient(q) >= facmulti(q)


@pytest.mark.parametrize("n", range(1, 6))
def test_structure_constants_against_group_algebra(n):
    for r in enumerate_compositions(n):
        for q in enumerate_compositions(n):
            assert (X(r) * X(q)).expand() == algebra_multiply(xi_expand(r), xi_expand(q))


def test_unit():
    v = X((2, 1)) + X((1, 1, 1)).scale(3)
    assert DescentVector.one(3) * v == v


def test_omega_examples():
    assert omega_q((2, 1)) == X((2, 1)).scale(2) - X((1, 1, 1))
    F = Field(2)
    assert omega_q((2, 1), F) == X((1, 1, 1), F)
    assert omega_q((3,), F) == X((3,), F) + X((2, 1), F) + X((1, 1, 1), F)


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_expansion_matches_product(n):
    from descentlab.algebra import omega_upper
    for q in enumerate_compositions(n):
        assert omega_q(q).expand() == omega_upper(q) * xi_expand(q)


def _tabloid_count(q, mu):
    """phi^q(mu) by testing which row assignments a permutation of type mu fixes."""
    n = sum(q)
    from descentlab.characters import class_representative
    g = class_representative(mu)
    rows = []
    for i, part in enumerate(q):
        rows += [i] * part
    count = 0
    for assignment in set(permutations(rows)):
        if all(assignment[g[k] - 1] == assignment[k] for k in range(n)):
            count += 1
    return count


@pytest.mark.parametrize("n", range(1, 6))
def test_young_character_by_tabloids(n):
    for q in enumerate_compositions(n):
        for mu in enumerate_partitions(n):
            assert young_character(q)[mu] == _tabloid_count(q, mu)


def test_young_character_examples():
    assert young_character((1, 1, 1, 1))[(1, 1, 1, 1)] == 24
    order = [(2, 1, 1), (2, 2), (3, 1), (4,)]
    Phi = [[young_character(lam)[mu] % 3 for mu in order] for lam in order]
    assert Phi == [[2, 0, 0, 0], [2, 2, 0, 0], [2, 0, 1, 0], [1, 1, 1, 1]]


def test_solomon_examples():
    c = solomon_epimorphism(X((4,)))
    assert all(v == 1 for v in c.values.values())
    assert solomon_epimorphism(X((2, 1)) - X((1, 2))) == solomon_epimorphism(DescentVector.zero(3))
    for lam in enumerate_partitions(4):
        nu = omega_q(lam).scale(Fraction(1, qquestion(lam)))
        assert solomon_epimorphism(nu) == class_indicator(lam)


def test_gr_examples():
    assert gr_I((2, 1, 1)) == X((2, 1, 1)) - X((1, 1, 1, 1)).scale(Fraction(1, 2))
    assert X((3, 1)) * gr_I((1, 1, 2)) == gr_I((1, 2, 1)).scale(2)
    expected = (X((2, 1, 1)) + X((1, 2, 1)) + X((1, 1, 2))
                - X((1, 1, 1, 1)).scale(Fraction(3, 2))).scale(Fraction(1, 6))
    assert gr_E((2, 1, 1)) == expected


def test_gr_rejects_positive_characteristic():
    with pytest.raises(ValueError, match="ordinary-only"):
        gr_I((2, 1), Field(2))
    with pytest.raises(ValueError, match="ordinary-only"):
        gr_E((2, 1), Field(3))
    with pytest.raises(ValueError, match="ordinary-only"):
        xi_in_I_basis((2, 1), Field(3))


@pytest.mark.parametrize("n", range(1, 6))
def test_xi_in_I_coordinates(n):
    for q in enumerate_compositions(n):
        assert from_I_coordinates(xi_in_I_basis(q)) == X(q)


@pytest.mark.parametrize("n", range(1, 6))
def test_gr_identities(n):
    comps = enumerate_compositions(n)
    for q in comps:
        for r in comps:
            if not is_weak_refinement(r, q):
                assert (gr_I(q) * gr_I(r)).is_zero()
            if is_equivalent(q, r):
                lam = sort_to_partition(q)
                assert X(q) * gr_I(r) == gr_I(q).scale(facmulti(lam))
                assert gr_E(lam) * gr_I(q) == gr_E(lam).scale(facmulti(lam))


def test_ordinary_idempotents_n3():
    e = ordinary_idempotents(3)
    # nu_21 nu_3 = 0, and e_21 = nu_21 (1 - nu_111)
    assert e[(2, 1)] == X((2, 1)) - X((1, 1, 1)).scale(Fraction(1, 2))
    assert e[(1, 1, 1)] == X((1, 1, 1)).scale(Fraction(1, 6))


@pytest.mark.parametrize("n", range(1, 7))
def test_ordinary_idempotents_complete(n):
    e = ordinary_idempotents(n)
    total = DescentVector.zero(n)
    for lam, x in e.items():
        assert x * x == x
        for mu, y in e.items():
            if mu != lam:
                assert (x * y).is_zero()
        total = total + x
    assert total == DescentVector.one(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_tau_block_moves_xi(n):
    for r in enumerate_compositions(n):
        for tau in all_perms(len(r)):
            q = tuple(r[i - 1] for i in tau)
            t = AlgebraElement.basis_element(tau_block(tau, r))
            assert t * xi_expand(r) == xi_expand(q)


@pytest.mark.parametrize("n", range(1, 6))
def test_xi_times_omega(n):
    comps = enumerate_compositions(n)
    for q in comps:
        w = omega_q(q)
        for r in comps:
            expected = DescentVector.zero(n)
            for s in comps:
                if is_equivalent(s, q) and is_strong_refinement(s, r):
                    expected = expected + omega_q(s).scale(barred_constant(s, r, q))
            assert X(r) * w == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_products(n):
    comps = enumerate_compositions(n)
    for q in comps:
        for r in comps:
            prod = omega_q(q) * omega_q(r)
            if is_equivalent(q, r):
                assert prod == omega_q(q).scale(qquestion(q))
            elif not is_weak_refinement(r, q):
                assert prod.is_zero()


def test_omega_products_vanish_on_one_side_only():
    # omega_q is supported on Xi^s with s <= q, and Xi^s omega_r needs r below s
    a, b = omega_q((3,)), omega_q((2, 1))
    assert (b * a).is_zero()
    assert not (a * b).is_zero()


@pytest.mark.parametrize("n", range(2, 7))
def test_higher_lie_dimension_bound(n):
    from math import factorial
    from descentlab.algebra import right_ideal_rank
    for q in enumerate_compositions(n):
        for p in (2, 3, 5):
            x = omega_q(q, Field(p)).expand()
            assert right_ideal_rank(x) <= factorial(n) // qquestion(q)


@given(composition_pairs(max_n=5), st.sampled_from([0, 2, 3]),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_solomon_multiplicative(pair, p, cs):
    r, q = pair
    F = Field(p)
    u = X(r, F).scale(cs[0]) + X(q, F).scale(cs[1])
    v = X(q, F).scale(cs[2]) + DescentVector.one(sum(q), F).scale(cs[3])
    assert solomon_epimorphism(u * v) == solomon_epimorphism(u) * solomon_epimorphism(v)


@given(st.integers(1, 6), st.data())
def test_descent_multiplication_associative(n, data):
    comps = enumerate_compositions(n)
    a, b, c = (X(data.draw(st.sampled_from(comps))) for _ in range(3))
    assert (a * b) * c == a * (b * c)
