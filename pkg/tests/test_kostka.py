import pytest

from ncsf.algebra import M, R, Element
from ncsf.bases import convert
from ncsf.compositions import compositions_of
from ncsf.kostka import hook_row, kostka_gessel_matrix, kostka_matrix, lower_hook_row, positivity_report


def test_row_of_a_single_part_is_all_ones():
    rep = kostka_matrix(4)
    assert rep.matrix.row((4,)) == {J: 1 for J in compositions_of(4)}


def test_hook_row_example():
    assert kostka_matrix(3).matrix.row((2, 1)) == {(2, 1): 2, (1, 1, 1): 2}
    assert hook_row(2, 1) == Element(M, {(2, 1): 2, (1, 1, 1): 2})


def test_gessel_row_of_a_single_part():
    assert kostka_gessel_matrix(3).matrix.row((3,)) == {(3,): 1}


def test_degree_one():
    rep = kostka_matrix(1)
    assert rep.matrix.dense() == [[1]]
    assert rep.flags()["min_entry"] == "1"


def test_kostka_csv_degree_three():
    assert kostka_matrix(3).matrix.to_csv() == (
        "R\\M,3,1.2,2.1,1.1.1\n3,1,1,1,1\n1.2,0,1,1,2\n2.1,0,0,2,2\n1.1.1,0,0,0,1\n"
    )


@pytest.mark.parametrize("n", range(1, 8))
def test_positivity(n):
    for which in ("kostka", "gessel"):
        rep = positivity_report(n, which)
        assert rep["ok"], rep["violations"][:3]
        assert rep["all_integer"] and rep["all_nonnegative"]


def test_hooks_match_matrix_rows():
    for k in range(1, 7):
        for r in range(0, 7 - k):
            assert hook_row(k, r) == convert(Element.basis_element(R, (k,) + (1,) * r), M)
            assert lower_hook_row(r, k) == convert(Element.basis_element(R, (1,) * r + (k,)), M)


def test_report_json_carries_flags():
    data = kostka_gessel_matrix(2).to_json()
    assert data["flags"]["kind"] == "gessel"
    assert data["index"] == [[2], [1, 1]]
