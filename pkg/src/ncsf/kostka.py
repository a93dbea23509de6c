"""Noncommutative Kostka and Kostka-Gessel matrices.

Row ``I`` of the Kostka matrix is ``R^I`` in the M basis; the Kostka-Gessel
matrix uses the L basis instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import L, M, R, Element
from .bases import TransitionMatrix, transition_matrix
from .compositions import binomial, compositions_of, concat, near_concat


@dataclass(frozen=True)
class KostkaReport:
    matrix: TransitionMatrix
    kind: str
    all_integer: bool = field(init=False)
    all_nonnegative: bool = field(init=False)
    min_entry: Fraction = field(init=False)
    max_entry: Fraction = field(init=False)

    def __post_init__(self):
        values = [v for row in self.matrix.rows for v in row.values()]
        object.__setattr__(self, "all_integer", all(v.denominator == 1 for v in values))
        object.__setattr__(self, "all_nonnegative", all(v >= 0 for v in values))
        object.__setattr__(self, "min_entry", min(values))
        object.__setattr__(self, "max_entry", max(values))

    @property
    def degree(self) -> int:
        return self.matrix.degree

    def violations(self) -> list:
        """Stored (nonzero) entries that are not positive integers."""
        return [
            (I, J, v)
            for I, row in zip(self.matrix.index, self.matrix.rows)
            for J, v in row.items()
            if v.denominator != 1 or v < 0
        ]

    def support(self) -> dict:
        return {I: sorted(row) for I, row in zip(self.matrix.index, self.matrix.rows)}

    def flags(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "all_integer": self.all_integer,
            "all_nonnegative": self.all_nonnegative,
            "min_entry": str(self.min_entry),
            "max_entry": str(self.max_entry),
        }

    def to_json(self) -> dict:
        return {**self.matrix.to_json(), "flags": self.flags()}


def kostka_matrix(n: int) -> KostkaReport:
    return KostkaReport(transition_matrix(R, M, n), "kostka")


def kostka_gessel_matrix(n: int) -> KostkaReport:
    return KostkaReport(transition_matrix(R, L, n), "gessel")


def positivity_report(n: int, which: str = "kostka") -> dict:
    report = {"kostka": kostka_matrix, "gessel": kostka_gessel_matrix}[which](n)
    bad = report.violations()
    return {
        **report.flags(),
        "ok": not bad and report.all_integer and report.all_nonnegative,
        "violations": bad,
    }


def hook_row(k: int, r: int) -> Element:
    """``R^(k, 1^r)`` from its closed form in the M basis."""
    c = binomial(k + r - 1, r)
    return Element(M, {concat(I, (1,) * r): c for I in compositions_of(k)})


def lower_hook_row(r: int, k: int) -> Element:
    """``R^(1^r, k)`` from its closed form in the M basis."""
    out: dict = {}
    tails = compositions_of(r) if r else ((),)
    for J in tails:
        for I in compositions_of(k):
            li, lj = len(I), len(J)
            K = concat(J, I)
            out[K] = out.get(K, 0) + binomial(li + lj - 1, r)
            if J:
                K = near_concat(J, I)
                out[K] = out.get(K, 0) + binomial(li + lj - 2, r)
    return Element(M, out)
