from fractions import Fraction as Fr

import pytest
from hypothesis import given

from ncsf.algebra import BASES, F, L, LAMBDA, M, PSI, R, S, Element
from ncsf.bases import (
    convert,
    f_to_m,
    f_to_psi,
    l_to_m,
    lambda_to_psi,
    m_to_f_expand,
    m_to_l_expand,
    m_to_psi,
    psi_to_m_expand,
    psi_to_s_expand,
    psr,
    r_to_s,
    s_to_psi,
    s_to_r_expand,
    transition_matrix,
)
from ncsf.compositions import DomainError, compositions_of, compositions_up_to, is_coarsening

from strategies import compositions


def E(basis, *I, c=1):
    return Element.basis_element(basis, I, c)




def test_m_to_psi_worked_example():
    want = Element(PSI, {(6,): Fr(1, 3), (4, 2): Fr(-1, 3), (3, 3): Fr(-1, 6), (3, 1, 2): Fr(1, 6)})
    assert m_to_psi((3, 1, 2)) == want
    assert m_to_psi((5,)) == E(PSI, 5)
    assert m_to_psi((1, 1)) == Element(PSI, {(1, 1): Fr(1, 2), (2,): Fr(-1, 2)})


def test_f_to_psi_worked_example():
    want = Element(PSI, {(6,): Fr(1, 3), (3, 3): Fr(1, 6), (2, 4): Fr(1, 3), (2, 1, 3): Fr(1, 6)})
    assert f_to_psi((2, 1, 3)) == want
    assert f_to_psi((1, 1)) == Element(PSI, {(2,): Fr(1, 2), (1, 1): Fr(1, 2)})


def test_multiplicative_bases_in_psi():
    half = Element(PSI, {(2,): Fr(1, 2), (1, 1): Fr(1, 2)})
    assert s_to_psi((2,)) == half
    assert s_to_psi((1, 1)) == E(PSI, 1, 1)
    assert lambda_to_psi((2,)) == Element(PSI, {(1, 1): Fr(1, 2), (2,): Fr(-1, 2)})


def test_psi_out_to_m_and_s():
    assert psi_to_m_expand((2,)) == E(M, 2)
    assert psi_to_m_expand((2, 3)) == E(M, 2, 3, c=2) + E(M, 5)
    assert psi_to_s_expand((2,)) == E(S, 2, c=2) - E(S, 1, 1)


def test_alternating_transitions():
    assert r_to_s((1, 1)) == E(S, 1, 1) - E(S, 2)
    assert r_to_s((3,)) == E(S, 3)
    assert s_to_r_expand((2, 1)) == E(R, 2, 1) + E(R, 3)
    assert l_to_m((2,)) == E(M, 2) + E(M, 1, 1)
    assert l_to_m((1, 1)) == E(M, 1, 1)
    assert m_to_l_expand((2,)) == E(L, 2) - E(L, 1, 1)
    assert f_to_m((3,)) == E(M, 3)
    assert m_to_f_expand((1, 1)) == E(F, 1, 1) - E(F, 2)


def test_f_to_m_worked_example():
    expected = [(2, 2, 1, 3), (2, 2, 4), (2, 3, 3), (4, 1, 3), (2, 6), (4, 4), (5, 3), (8,)]
    assert f_to_m((2, 2, 1, 3)) == Element(M, {K: 1 for K in expected})
    assert convert(E(F, 2, 2, 1, 3), M) == f_to_m((2, 2, 1, 3))


def test_router_small_cases():
    assert convert(E(S, 2), M) == E(M, 2) + E(M, 1, 1)
    assert convert(E(S, 2), L) == E(L, 2)
    assert convert(E(PSI, 3), R) == E(R, 3) - E(R, 1, 2) + E(R, 1, 1, 1)
    assert convert(E(R, 2, 1), M) == E(M, 2, 1, c=2) + E(M, 1, 1, 1, c=2)
    with pytest.raises(DomainError):
        convert(E(M, 1), "Q")


def test_psr_is_the_ribbon_coordinate():
    assert psr((3,), (3,)) == 1
    assert psr((1, 2), (3,)) == -1
    assert psr((2, 1), (3,)) == 0


def test_transition_matrix_degree_two():
    tm = transition_matrix(M, PSI, 2)
    assert tm.index == ((2,), (1, 1))
    assert tm.dense() == [[1, 0], [Fr(-1, 2), Fr(1, 2)]]
    assert tm.to_csv() == "M\\Psi,2,1.1\n2,1,0\n1.1,-1/2,1/2\n"
    assert tm.to_json() == {
        "degree": 2,
        "from": "M",
        "to": "Psi",
        "index": [[2], [1, 1]],
        "entries": [["1", "0"], ["-1/2", "1/2"]],
    }


def test_f_to_m_is_the_coarsening_indicator():
    for n in range(1, 7):
        tm = transition_matrix(F, M, n)
        for I in tm.index:
            for J in tm.index:
                assert tm.entry(I, J) == (1 if is_coarsening(J, I) else 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_transition_matrices_are_mutually_inverse(n):
    mats = {(x, y): transition_matrix(x, y, n) for x in BASES for y in BASES if x != y}
    for (x, y), tm in mats.items():
        assert (tm @ mats[y, x]).is_identity(), (x, y)


def test_all_pairs_round_trip_to_degree_five():
    for x in BASES:
        for y in BASES:
            for I in compositions_up_to(5):
                e = E(x, *I)
                assert convert(convert(e, y), x) == e, (x, y, I)


@given(compositions(max_weight=7))
def test_s_and_m_are_triangular_in_psi(I):
    # S^I only involves refinements, M^I only coarsenings
    assert all(is_coarsening(I, J) for J in s_to_psi(I).terms)
    assert all(is_coarsening(J, I) for J in m_to_psi(I).terms)
    assert m_to_psi(I)[I] != 0


def test_ribbon_of_a_row_is_complete():
    for n in range(1, 6):
        assert convert(E(R, n), M) == Element(M, {J: 1 for J in compositions_of(n)})
        assert convert(E(R, n), L) == E(L, n)
