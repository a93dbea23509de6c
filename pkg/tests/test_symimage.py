from fractions import Fraction as Fr

import pytest

from ncsf.algebra import M, PSI, Element
from ncsf.compositions import DomainError, partitions_of
from ncsf.symimage import (
    PolyOracle,
    SymPElement,
    augmented_sum,
    check_augmented_sum,
    check_classical_pieri,
    check_fixed_part,
    comm_image,
    distinct_sum,
    fixed_part_sum,
    oracle_augmented,
    oracle_monomial,
    oracle_p,
    pieri_shapes,
    realize,
)


def test_comm_image_sorts_indices():
    assert comm_image(Element.basis_element(PSI, (1, 3, 1))) == SymPElement({(3, 1, 1): 1})
    half = Fr(1, 2)
    assert comm_image(Element.basis_element(M, (2, 1))) == SymPElement({(2, 1): half, (3,): -half})
    assert distinct_sum((2, 1)) == SymPElement({(2, 1): 1, (3,): -1})


def test_oracle_polynomials():
    assert oracle_p((2,), 2) == PolyOracle(2, {(2, 0): 1, (0, 2): 1})
    assert oracle_monomial((2, 1), 2) == PolyOracle(2, {(2, 1): 1, (1, 2): 1})
    assert oracle_augmented((1, 1), 2) == PolyOracle(2, {(1, 1): 2})
    assert oracle_monomial((1, 1, 1), 2) == PolyOracle(2)
    with pytest.raises(DomainError):
        PolyOracle(0)


def test_realize_m21():
    # p_2 p_1 - p_3 is the monomial function m_(2,1)
    assert realize(SymPElement({(2, 1): 1, (3,): -1}), 3) == oracle_monomial((2, 1), 3)


def test_augmented_examples():
    assert check_augmented_sum((2, 1))
    assert check_augmented_sum((1, 1))
    assert check_augmented_sum((4,))
    assert augmented_sum((1, 1)) == SymPElement({(1, 1): 1, (2,): -1})


def test_fixed_part_examples():
    assert fixed_part_sum((2, 1), 1) == SymPElement({(2, 1): 1, (3,): -1})
    assert check_fixed_part((2, 1), 1)
    assert check_fixed_part((1, 1), 2)
    assert check_fixed_part((3,), 1)
    with pytest.raises(DomainError):
        fixed_part_sum((2, 1), 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_theorem_for_small_partitions(n):
    for mu in partitions_of(n):
        assert check_augmented_sum(mu)
        for j in range(1, len(mu) + 1):
            assert check_fixed_part(mu, j)


def test_classical_pieri():
    assert pieri_shapes(1, (1,)) == [(2,), (1, 1)]
    assert pieri_shapes(2, (2,)) == [(4,), (2, 2)]
    assert pieri_shapes(3, ()) == [(3,)]
    assert check_classical_pieri(1, (1,))
    assert check_classical_pieri(2, (2,))
    assert check_classical_pieri(3, ())
    assert check_classical_pieri(1, (2, 1, 1), nvars=3)
    with pytest.raises(DomainError):
        check_classical_pieri(0, (1,))
