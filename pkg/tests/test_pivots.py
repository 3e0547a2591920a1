from math import factorial

import pytest
from hypothesis import given, strategies as st

from descentlab.algebra import AlgebraElement, right_ideal_rank
from descentlab.combinat import enumerate_compositions, facmulti, is_equivalent, is_weak_refinement
from descentlab.fields import Field
from descentlab.perms import all_perms, cycle_type, from_cycles, rco_key
from descentlab.pivots import (
    b_set,
    b_set_size,
    census,
    conjecture_csv,
    coordinate_vector,
    express_in_basis,
    fiber,
    leading_term,
    ordinary_decomposition_check,
    phi_inverse,
    phi_map,
    pivot_decompose,
    pivot_type,
    pivot_words,
    rewrite_step,
    upsilon,
    xi_basis,
    xi_element,
    xi_table,
)

from strategies import compositions, perms


def word(s):
    return tuple(int(c) for c in str(s))


def test_pivot_words_s7():
    w = word(5613427)
    assert pivot_words(w) == (word(561), word(342), word(7))
    d = pivot_decompose(w)
    assert d.pivots == (1, 2, 7)
    assert d.positions == (3, 6, 7)
    assert d.cycle_type == (3, 3, 1)


def test_phi_map_s7():
    sigma = from_cycles([(5, 6, 1), (3, 4, 2), (7,)], 7)
    w = phi_map(sigma)
    assert w == word(5613427)
    assert cycle_type(w) == (4, 2, 1)
    assert phi_inverse(w) == sigma


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_is_a_bijection(n):
    for s in all_perms(n):
        assert phi_inverse(phi_map(s)) == s
        assert phi_map(phi_inverse(s)) == s
        # the pivot cycle type of phi(s) is the cycle type of s, in order of minima
        assert sorted(pivot_type(phi_map(s)), reverse=True) == list(cycle_type(s))


def test_upsilon_examples():
    assert upsilon((4, 3), word(5613427)) == word(5614237)
    assert upsilon((2, 2), word(1342)) == word(1423)
    assert upsilon((2, 2), word(2431)) == word(3124)
    assert upsilon((2, 2), word(4231)) == word(3142)
    assert upsilon((2, 2), word(2314)) == word(1234)


@given(perms(1, 7))
def test_upsilon_trivial_cases(w):
    n = len(w)
    assert upsilon((1,) * n, w) == tuple(range(1, n + 1))
    for q in [(n,), (1,) * n]:
        assert upsilon(q, tuple(range(1, n + 1))) == tuple(range(1, n + 1))
    # the pivots of a word increase from left to right
    assert upsilon((n,), w) == w


def test_b_set_22():
    bold = {word(x) for x in (1234, 1243, 1324, 1423, 2134, 2143, 3124, 3142, 4123, 4132)}
    assert set(b_set((2, 2))) == bold
    assert {upsilon((2, 2), w) for w in all_perms(4)} == bold
    assert b_set_size((2, 2)) == 10


def test_fiber_examples():
    assert set(fiber((3, 2, 1), word(416235))) == {word(x) for x in (413625, 623415, 415623, 625413)}
    assert set(fiber((2, 2), word(1324))) == {word(1432), word(3214)}


def test_fiber_rejects_non_member():
    with pytest.raises(ValueError):
        fiber((2, 2), word(1342))


@pytest.mark.parametrize("n", range(1, 6))
def test_fibers_partition(n):
    for q in enumerate_compositions(n):
        seen = []
        for v in b_set(q):
            f = fiber(q, v)
            assert len(f) >= facmulti(q)
            if is_equivalent(pivot_type(v), q):
                assert len(f) == facmulti(q)
            seen.extend(f)
        assert sorted(seen) == sorted(all_perms(n))


@given(compositions(1, 6))
def test_b_set_is_image_and_counted(q):
    assert len(b_set(q)) == b_set_size(q)
    assert all(is_weak_refinement(pivot_type(v), q) for v in b_set(q))


@pytest.mark.parametrize("n", range(1, 6))
def test_leading_term(n):
    for w in all_perms(n):
        top, coeff, sign = leading_term(w)
        assert top == w and coeff == sign


def test_rewrite_231():
    assert rewrite_step((2, 1), word(231)) == {word(312): 1, word(213): 1, word(132): -1}
    x = xi_element((2, 1))
    lhs = x * AlgebraElement.basis_element(word(231))
    rhs = x * (AlgebraElement.basis_element(word(312)) + AlgebraElement.basis_element(word(213))
               - AlgebraElement.basis_element(word(132)))
    assert lhs == rhs


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.sampled_from(enumerate_compositions(n)),
                                                      st.sampled_from(all_perms(n)))))
def test_support_bound(pair):
    q, v = pair
    x = xi_element(q) * AlgebraElement.basis_element(v)
    for w in x.support():
        assert rco_key(upsilon(q, w)) <= rco_key(v)


@pytest.mark.parametrize("p", [0, 2, 3])
@pytest.mark.parametrize("n", range(1, 6))
def test_xi_basis_rank(p, n):
    for q in enumerate_compositions(n):
        basis = xi_basis(q, p)
        assert right_ideal_rank(xi_element(q, p)) == len(basis.words) == b_set_size(q)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.sampled_from(enumerate_compositions(n)),
                                                      st.sampled_from(all_perms(n)))),
       st.sampled_from([0, 2, 3]))
def test_express_reconstructs(pair, p):
    q, sigma = pair
    F = Field(p)
    coords = express_in_basis(q, sigma, p)
    x = xi_element(q, F)
    total = AlgebraElement(len(sigma), F)
    for w, c in coords.items():
        total = total + (x * AlgebraElement.basis_element(w, F)).scale(c)
    assert total == x * AlgebraElement.basis_element(sigma, F)
    assert len(coordinate_vector(q, sigma, p)) == len(b_set(q))


@given(compositions(1, 5))
def test_basis_words_express_as_themselves(q):
    for v in b_set(q)[:10]:
        assert express_in_basis(q, v, 0, cross_check=False) == {v: 1}


@pytest.mark.parametrize("n", range(1, 5))
def test_ordinary_decomposition(n):
    for q in enumerate_compositions(n):
        report = ordinary_decomposition_check(q)
        assert report.ok, report


def test_dim_table_p2_n4():
    rows = xi_table(4, 2)
    assert all(r.verdict == "match" for r in rows)
    for lam in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
        assert sum(r.rank for r in rows if r.q == lam) == b_set_size(lam)


def test_census_counts():
    assert census((5,), (5,), 2) == 24
    assert census((4, 1), (4, 1), 2) == 56
    assert sum(census((3, 2), mu, 2) for mu in [(5,), (4, 1), (3, 2)]) == 66
    assert sum(census((4,), mu, 3) for mu in [(4,), (3, 1), (2, 2), (2, 1, 1)]) == factorial(4)


def test_csv_output():
    text = conjecture_csv(xi_table(3, 2))
    lines = text.strip().split("\n")
    assert lines[0] == "p,n,q,mu,rank,predicted,verdict"
    assert len(lines) == 1 + 3 * 2
    assert lines[1].startswith("2,3,")
