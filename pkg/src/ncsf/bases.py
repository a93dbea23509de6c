"""Expansions of every basis in and out of Psi coordinates, and the router.

Per-composition expansions are cached as ``(den, ((J, num), ...))`` with one
common integer denominator, so linear extension runs on Python ints and
only builds fractions at the end.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .algebra import (
    BASES,
    F,
    L,
    LAMBDA,
    M,
    PSI,
    R,
    S,
    Element,
    check_basis,
    format_rational,
    mul_psi,
)
from .compositions import (
    coarsenings,
    composition,
    compositions_of,
    dot_form,
    from_mask,
    refinements,
    reverse,
)

_UNIT = (1, (((), 1),))


def _from_kernel(n, triples):
    den = 1
    for _, _, d in triples:
        den = den * d // math.gcd(den, d)
    return den, tuple((from_mask(n, m), num * (den // d)) for m, num, d in triples)


def _from_element(e: Element):
    den = 1
    for c in e.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return den, tuple((I, c.numerator * (den // c.denominator)) for I, c in e.items())


def _to_element(basis, expansion) -> Element:
    den, pairs = expansion
    return Element._trusted(basis, {J: Fraction(v, den) for J, v in pairs})


def _apply(terms, expand, basis) -> Element:
    """Linear extension of ``expand`` (I -> expansion) over ``terms``."""
    if not terms:
        return Element._trusted(basis, {})
    cden = 1
    for c in terms.values():
        cden = cden * c.denominator // math.gcd(cden, c.denominator)
    expansions = {I: expand(I) for I in terms}
    eden = 1
    for d, _ in expansions.values():
        eden = eden * d // math.gcd(eden, d)
    acc: dict = {}
    get = acc.get
    for I, c in terms.items():
        d, pairs = expansions[I]
        k = c.numerator * (cden // c.denominator) * (eden // d)
        for J, v in pairs:
            acc[J] = get(J, 0) + k * v
    total = cden * eden
    return Element._trusted(basis, {J: Fraction(v, total) for J, v in acc.items() if v})


# -- primitive expansions --------------------------------------------------------

@lru_cache(maxsize=None)
def _m_psi(I):
    if not I:
        return _UNIT
    return _from_kernel(sum(I), kernels.coarsening_terms(kernels.M_TO_PSI, I))


@lru_cache(maxsize=None)
def _f_psi(I):
    if not I:
        return _UNIT
    return _from_kernel(sum(I), kernels.coarsening_terms(kernels.F_TO_PSI, I))


@lru_cache(maxsize=None)
def _psi_m(I):
    if not I:
        return _UNIT
    return _from_kernel(sum(I), kernels.coarsening_terms(kernels.PSI_TO_M, I))


@lru_cache(maxsize=None)
def _s_psi(I):
    if not I:
        return _UNIT
    return _from_kernel(sum(I), kernels.refinement_terms(kernels.S_TO_PSI, I))


@lru_cache(maxsize=None)
def _psi_s(I):
    if not I:
        return _UNIT
    return _from_kernel(sum(I), kernels.refinement_terms(kernels.PSI_TO_S, I))


@lru_cache(maxsize=None)
def _lambda_psi(I):
    out = Element.unit(PSI)
    for part in I:
        out = mul_psi(out, _to_element(PSI, _m_psi((1,) * part)))
    return _from_element(out)


@lru_cache(maxsize=None)
def _psi_lambda(I):
    # Lambda^K = omega(S^{reverse K}) and omega is an involutive anti-automorphism
    sign = -1 if (sum(I) - len(I)) & 1 else 1
    den, pairs = _psi_s(reverse(I))
    return den, tuple(sorted(((reverse(K), sign * v) for K, v in pairs), key=lambda kv: kv[0]))


def _alternating(I, family, sign_of):
    if not I:
        return _UNIT
    return 1, tuple((J, sign_of(J)) for J in family(I))


@lru_cache(maxsize=None)
def _r_s(I):
    return _alternating(I, coarsenings, lambda J: -1 if (len(I) - len(J)) & 1 else 1)


@lru_cache(maxsize=None)
def _s_r(I):
    return _alternating(I, coarsenings, lambda J: 1)


@lru_cache(maxsize=None)
def _l_m(I):
    return _alternating(I, refinements, lambda J: 1)


@lru_cache(maxsize=None)
def _m_l(I):
    return _alternating(I, refinements, lambda J: -1 if (len(J) - len(I)) & 1 else 1)


@lru_cache(maxsize=None)
def _f_m(I):
    return _alternating(I, coarsenings, lambda J: 1)


@lru_cache(maxsize=None)
def _m_f(I):
    return _alternating(I, coarsenings, lambda J: -1 if (len(I) - len(J)) & 1 else 1)


# Each route is a chain of stages applied to the whole element in turn, so
# intermediate coordinates merge before the next stage expands them.
TO_PSI = {
    PSI: (),
    M: ((_m_psi, PSI),),
    F: ((_f_psi, PSI),),
    S: ((_s_psi, PSI),),
    LAMBDA: ((_lambda_psi, PSI),),
    L: ((_l_m, M), (_m_psi, PSI)),
    R: ((_r_s, S), (_s_psi, PSI)),
}
FROM_PSI = {
    PSI: (),
    M: ((_psi_m, M),),
    F: ((_psi_m, M), (_m_f, F)),
    S: ((_psi_s, S),),
    LAMBDA: ((_psi_lambda, LAMBDA),),
    L: ((_psi_m, M), (_m_l, L)),
    R: ((_psi_s, S), (_s_r, R)),
}


def _run(terms, stages, basis):
    out = Element._trusted(basis, dict(terms))
    for expand, tag in stages:
        out = _apply(out.terms, expand, tag)
    return out


# -- public per-composition expansions -----------------------------------------

def m_to_psi(I) -> Element:
    return _to_element(PSI, _m_psi(composition(I)))


def f_to_psi(I) -> Element:
    return _to_element(PSI, _f_psi(composition(I)))


def s_to_psi(I) -> Element:
    return _to_element(PSI, _s_psi(composition(I)))


def lambda_to_psi(I) -> Element:
    return _to_element(PSI, _lambda_psi(composition(I)))


def psi_to_m_expand(I) -> Element:
    return _to_element(M, _psi_m(composition(I)))


def psi_to_s_expand(I) -> Element:
    return _to_element(S, _psi_s(composition(I)))


def r_to_s(I) -> Element:
    return _to_element(S, _r_s(composition(I)))


def s_to_r_expand(K) -> Element:
    return _to_element(R, _s_r(composition(K)))


def l_to_m(I) -> Element:
    return _to_element(M, _l_m(composition(I)))


def m_to_l_expand(I) -> Element:
    return _to_element(L, _m_l(composition(I)))


def f_to_m(I) -> Element:
    return _to_element(M, _f_m(composition(I)))


def m_to_f_expand(I) -> Element:
    return _to_element(F, _m_f(composition(I)))


# -- router ----------------------------------------------------------------------

def to_psi(a: Element) -> Element:
    if a.basis == PSI:
        return a
    return _run(a.terms, TO_PSI[a.basis], PSI)


def convert(a: Element, to: str) -> Element:
    """Re-express ``a`` in basis ``to`` by way of Psi coordinates."""
    check_basis(to)
    if a.basis == to:
        return a
    return _run(to_psi(a).terms, FROM_PSI[to], to)


def basis_element(basis: str, I) -> Element:
    return Element.basis_element(basis, I)


def psr(J, I) -> Fraction:
    """Coefficient of ``R^J`` in ``Psi^I``."""
    return convert(Element.basis_element(PSI, I), R)[composition(J)]


# -- transition matrices -----------------------------------------------------------

@dataclass(frozen=True)
class TransitionMatrix:
    """Row ``I`` holds the coordinates of ``from^I`` in the ``to`` basis.

    Rows are stored sparsely; both axes follow canonical composition order.
    """

    degree: int
    from_basis: str
    to_basis: str
    index: tuple
    rows: tuple

    def __len__(self):
        return len(self.index)

    def entry(self, I, J) -> Fraction:
        return self.rows[self._pos()[tuple(I)]].get(tuple(J), Fraction(0))

    def _pos(self):
        return {I: k for k, I in enumerate(self.index)}

    def dense(self) -> list:
        return [[row.get(J, Fraction(0)) for J in self.index] for row in self.rows]

    def row(self, I) -> dict:
        return self.rows[self._pos()[tuple(I)]]

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.degree != other.degree or self.to_basis != other.from_basis:
            raise ValueError("incompatible transition matrices")
        pos = other._pos()
        rows = []
        for row in self.rows:
            acc: dict = {}
            for K, c in row.items():
                for J, d in other.rows[pos[K]].items():
                    acc[J] = acc.get(J, 0) + c * d
            rows.append({J: v for J, v in acc.items() if v})
        return TransitionMatrix(self.degree, self.from_basis, other.to_basis, self.index, tuple(rows))

    def is_identity(self) -> bool:
        return all(row == {I: 1} for I, row in zip(self.index, self.rows))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"{self.from_basis}\\{self.to_basis}", *map(dot_form, self.index)])
        for I, row in zip(self.index, self.rows):
            w.writerow([dot_form(I), *(format_rational(row.get(J, 0)) for J in self.index)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "from": self.from_basis,
            "to": self.to_basis,
            "index": [list(I) for I in self.index],
            "entries": [[format_rational(row.get(J, 0)) for J in self.index] for row in self.rows],
        }


def transition_matrix(from_basis: str, to_basis: str, n: int) -> TransitionMatrix:
    check_basis(from_basis)
    check_basis(to_basis)
    index = compositions_of(n)
    rows = tuple(dict(convert(Element.basis_element(from_basis, I), to_basis).terms) for I in index)
    return TransitionMatrix(n, from_basis, to_basis, index, rows)


__all__ = [
    "BASES",
    "TransitionMatrix",
    "basis_element",
    "convert",
    "f_to_m",
    "f_to_psi",
    "l_to_m",
    "lambda_to_psi",
    "m_to_f_expand",
    "m_to_l_expand",
    "m_to_psi",
    "psi_to_m_expand",
    "psi_to_s_expand",
    "psr",
    "r_to_s",
    "s_to_psi",
    "s_to_r_expand",
    "to_psi",
    "transition_matrix",
]
