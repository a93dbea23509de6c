import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncsf.compositions import (
    DomainError,
    binomial,
    bracket_form,
    breakpoints,
    coarsenings,
    composition,
    compositions_of,
    conjugate,
    descent_mask,
    descent_set,
    dot_form,
    from_descents,
    from_mask,
    is_coarsening,
    is_refinement,
    lp_rel,
    multiset_permutations,
    near_concat,
    partitions_of,
    pi_u,
    pi_u_rel,
    refinements,
    reverse,
    sort_key,
    split,
    u,
)

from strategies import compositions


def test_conjugate_of_worked_example():
    assert conjugate((3, 1, 1, 4, 2)) == (1, 2, 1, 1, 4, 1, 1)


def test_canonical_order_degree_three():
    assert compositions_of(3) == ((3,), (1, 2), (2, 1), (1, 1, 1))


def test_counts():
    assert [len(compositions_of(n)) for n in range(1, 9)] == [2 ** (n - 1) for n in range(1, 9)]
    assert [len(partitions_of(n)) for n in range(0, 10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_descents():
    assert descent_set((2, 1, 3)) == {2, 3}
    assert from_descents(6, {2, 3}) == (2, 1, 3)
    assert descent_mask((2, 1, 3)) == 0b110
    with pytest.raises(DomainError):
        from_descents(4, {4})


def test_refinement_order():
    assert is_coarsening((3, 3), (2, 1, 3))
    assert not is_coarsening((2, 4), (3, 3))
    assert coarsenings((1, 2)) == ((3,), (1, 2))
    assert refinements((2, 1)) == ((2, 1), (1, 1, 1))
    assert breakpoints((3, 3), (2, 1, 3)) == (2, 3)
    assert split((1, 1, 2, 2), (2, 4)) == ((1, 1), (2, 2))


def test_statistics():
    assert pi_u((2, 1, 3)) == 2 * 3 * 6
    assert pi_u_rel((1, 1, 2, 2), (2, 4)) == Fraction(1 * 2 * 2 * 4)
    assert lp_rel((1, 1, 2, 2), (2, 4)) == 2
    assert near_concat((1, 2), (3, 1)) == (1, 5, 1)
    assert u((2, 2, 1)) == 2
    assert u((3, 3, 3, 1, 1)) == 12


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    assert binomial(-2, 1) == 0
    assert binomial(0, 0) == 1


def test_multiset_permutations():
    assert multiset_permutations((2, 1, 1)) == ((1, 1, 2), (1, 2, 1), (2, 1, 1))
    assert multiset_permutations(()) == ((),)


def test_text_forms():
    assert bracket_form((3, 1, 2)) == "[3,1,2]"
    assert dot_form((3, 1, 2)) == "3.1.2"


def test_validation():
    with pytest.raises(DomainError):
        composition((2, 0))
    with pytest.raises(DomainError):
        compositions_of(0)
    with pytest.raises(DomainError):
        near_concat((), (1,))
    with pytest.raises(DomainError):
        breakpoints((2, 4), (3, 3))


@given(compositions(max_weight=10))
def test_conjugate_is_involution(I):
    J = conjugate(I)
    assert sum(J) == sum(I)
    assert len(I) + len(J) == sum(I) + 1
    assert conjugate(J) == I


@given(compositions(max_weight=10))
def test_mask_round_trip(I):
    assert from_mask(sum(I), descent_mask(I)) == I
    assert from_descents(sum(I), descent_set(I)) == I


@given(compositions(max_weight=8))
def test_orders_are_dual(I):
    ups = coarsenings(I)
    downs = refinements(I)
    assert len(ups) == 2 ** (len(I) - 1)
    assert len(downs) == 2 ** (sum(I) - len(I))
    assert all(is_coarsening(J, I) for J in ups)
    assert all(is_refinement(J, I) for J in downs)
    assert list(ups) == sorted(ups, key=sort_key)
    # order reversal swaps the orders consistently
    assert {reverse(J) for J in ups} == set(coarsenings(reverse(I)))


@given(compositions(max_weight=8))
def test_breakpoints_and_split(I):
    for J in coarsenings(I):
        p = breakpoints(J, I)
        assert p[-1] == len(I)
        assert [sum(I[a:b]) for a, b in zip((0,) + p, p)] == list(J)
        assert split(I, J) and sum(map(len, split(I, J))) == len(I)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_multiset_permutation_count(parts):
    mu = tuple(sorted(parts, reverse=True))
    assert len(multiset_permutations(mu)) * u(mu) == math.factorial(len(mu))
