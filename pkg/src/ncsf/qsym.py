"""Quasi-symmetric analogs of the multiplicative and ribbon bases, as tables.

A table lists the coordinates of a quasi-symmetric function in the monomial
quasi-symmetric basis ``M_J``.  No QSym product is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import L, LAMBDA, M, PSI, R, S, Element, format_rational
from .bases import convert
from .compositions import DomainError, composition, refinements, sort_key

FAMILIES = ("psi", "s", "lambda", "ribbon", "fundamental")
_NSYM = {"psi": PSI, "s": S, "lambda": LAMBDA}


@dataclass(frozen=True)
class QsymTable:
    family: str
    index: tuple
    terms: dict

    @property
    def degree(self) -> int:
        return sum(self.index)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "index": list(self.index),
            "degree": self.degree,
            "terms": [{"composition": list(J), "coefficient": format_rational(c)} for J, c in self.items()],
        }


def _fundamental(I) -> dict:
    return {J: Fraction(1) for J in refinements(I)}


def qsym_table(family: str, I) -> QsymTable:
    I = composition(I)
    if not I:
        raise DomainError("index must be a nonempty composition")
    if family in _NSYM:
        # the NSym element's M coordinates, read on M_J
        terms = dict(convert(Element.basis_element(_NSYM[family], I), M).terms)
    elif family == "fundamental":
        terms = _fundamental(I)
    elif family == "ribbon":
        gessel = convert(Element.basis_element(R, I), L)
        terms = {}
        for J, g in gessel.terms.items():
            for K, c in _fundamental(J).items():
                terms[K] = terms.get(K, 0) + g * c
        terms = {K: v for K, v in terms.items() if v}
    else:
        raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return QsymTable(family, I, terms)


def pair_with_complete(table: QsymTable, K) -> Fraction:
    """Pair a table with ``S^K`` under ``<M_J, S^K> = delta``."""
    return table.terms.get(composition(K), Fraction(0))
