"""Commutative image of NSym and an explicit polynomial oracle.

``comm_image`` sends ``Psi^I`` to the classical power sum ``p_sort(I)``.
The oracle writes classical symmetric functions out as polynomials in
``N`` commuting variables, independently of any transition formula.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .algebra import M, Element
from .bases import to_psi
from .compositions import (
    DomainError,
    multiset_permutations,
    partitions_of,
    sort_to_partition,
    u,
)


class SymPElement:
    """Classical symmetric function in power-sum coordinates ``{partition: coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(k): Fraction(v) for k, v in (terms or {}).items() if v != 0}

    def __eq__(self, other):
        if not isinstance(other, SymPElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymPElement(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = sort_to_partition(a + b)
                out[k] = out.get(k, 0) + x * y
        return SymPElement(out)

    __rmul__ = __mul__

    def scaled(self, c):
        c = Fraction(c)
        return SymPElement({k: c * v for k, v in self.terms.items()})

    def __repr__(self):
        return f"SymPElement({self.terms})"


def comm_image(a: Element) -> SymPElement:
    out: dict = {}
    for I, c in to_psi(a).terms.items():
        k = sort_to_partition(I)
        out[k] = out.get(k, 0) + c
    return SymPElement(out)


# -- polynomial oracle ----------------------------------------------------------

class PolyOracle:
    """Polynomial in ``nvars`` commuting variables: ``{exponent tuple: coeff}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise DomainError(f"need at least one variable, got {nvars}")
        self.nvars = nvars
        # values are ints or Fractions; both compare exactly
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    def _check(self, other):
        if other.nvars != self.nvars:
            raise DomainError("oracle polynomials in different variable counts")

    def __eq__(self, other):
        if not isinstance(other, PolyOracle):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PolyOracle(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return PolyOracle(self.nvars, {k: c * v for k, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(i + j for i, j in zip(a, b))
                out[k] = out.get(k, 0) + x * y
        return PolyOracle(self.nvars, out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"PolyOracle({self.nvars}, {len(self.terms)} terms)"


@lru_cache(maxsize=None)
def _power_sum(r: int, nvars: int) -> PolyOracle:
    return PolyOracle(nvars, {tuple(r if i == k else 0 for i in range(nvars)): 1 for k in range(nvars)})


@lru_cache(maxsize=None)
def oracle_p(lam: tuple, nvars: int) -> PolyOracle:
    out = PolyOracle.constant(nvars)
    for r in lam:
        out = out * _power_sum(r, nvars)
    return out


def oracle_monomial(mu: tuple, nvars: int) -> PolyOracle:
    """``m_mu``: every distinct monomial whose exponent multiset is ``mu``."""
    if nvars < 1:
        raise DomainError(f"need at least one variable, got {nvars}")
    mu = tuple(mu)
    if len(mu) > nvars:
        return PolyOracle(nvars)
    padded = mu + (0,) * (nvars - len(mu))
    return PolyOracle(nvars, {e: 1 for e in set(itertools.permutations(padded))})


def oracle_augmented(mu: tuple, nvars: int) -> PolyOracle:
    return oracle_monomial(mu, nvars) * u(mu)


def realize(e: SymPElement, nvars: int) -> PolyOracle:
    den = math.lcm(*(c.denominator for c in e.terms.values())) if e.terms else 1
    acc: dict = {}
    for lam, c in e.terms.items():
        k = c.numerator * (den // c.denominator)
        for mono, v in oracle_p(lam, nvars).terms.items():
            acc[mono] = acc.get(mono, 0) + k * v
    return PolyOracle(nvars, {mono: Fraction(v, den) for mono, v in acc.items()})


# -- checks of the augmented-monomial theorem -------------------------------------

@lru_cache(maxsize=None)
def _image_m(I) -> SymPElement:
    return comm_image(Element.basis_element(M, I))


def augmented_sum(mu) -> SymPElement:
    """Sum of ``comm_image(M^I)`` over all ``l(mu)!`` orderings of ``mu``."""
    mu = sort_to_partition(mu)
    total = SymPElement()
    for I in multiset_permutations(mu):
        total = total + _image_m(I).scaled(u(mu))
    return total


def distinct_sum(mu) -> SymPElement:
    """Sum of ``comm_image(M^I)`` over the distinct rearrangements of ``mu``."""
    total = SymPElement()
    for I in multiset_permutations(sort_to_partition(mu)):
        total = total + _image_m(I)
    return total


def check_augmented_sum(mu) -> bool:
    mu = sort_to_partition(mu)
    if sum(mu) < 1:
        raise DomainError("partition must be nonempty")
    n = sum(mu)
    ok_all = realize(augmented_sum(mu), n) == oracle_augmented(mu, n)
    ok_distinct = realize(distinct_sum(mu), n) == oracle_monomial(mu, n)
    return ok_all and ok_distinct


def fixed_part_sum(mu, j: int) -> SymPElement:
    """``l(mu)`` times the sum of ``comm_image(M^I)`` over orderings ``I`` that
    start with part ``j`` and permute the remaining parts freely.

    The ``(l-1)!`` orderings are counted with multiplicity.
    """
    mu = sort_to_partition(mu)
    n = len(mu)
    if not 1 <= j <= n:
        raise DomainError(f"part index {j} out of range 1..{n}")
    head = mu[j - 1]
    rest = mu[: j - 1] + mu[j:]
    total = SymPElement()
    for perm in multiset_permutations(rest):
        total = total + _image_m((head,) + perm)
    return total.scaled(n * u(rest))


def check_fixed_part(mu, j: int) -> bool:
    mu = sort_to_partition(mu)
    n = sum(mu)
    target = oracle_augmented(mu, n)
    if realize(fixed_part_sum(mu, j), n) != target:
        return False
    # averaging over every fixed part gives back the full permutation sum
    avg = SymPElement()
    for k in range(1, len(mu) + 1):
        avg = avg + fixed_part_sum(mu, k)
    return realize(avg.scaled(Fraction(1, len(mu))), n) == target


def pieri_shapes(r: int, kappa) -> list:
    """Partitions from adding ``r`` to each part of ``kappa`` in turn, or appending ``r``.

    One entry per part, so repeated parts give repeated shapes.
    """
    kappa = sort_to_partition(kappa)
    shapes = [sort_to_partition(kappa[:j] + (kappa[j] + r,) + kappa[j + 1 :]) for j in range(len(kappa))]
    shapes.append(sort_to_partition(kappa + (r,)))
    return shapes


def check_classical_pieri(r: int, kappa, nvars: int | None = None) -> bool:
    if r < 1:
        raise DomainError("row length must be positive")
    kappa = sort_to_partition(kappa)
    nvars = nvars or (sum(kappa) + r)
    lhs = _power_sum(r, nvars) * oracle_augmented(kappa, nvars)
    rhs = PolyOracle(nvars)
    for lam in pieri_shapes(r, kappa):
        rhs = rhs + oracle_augmented(lam, nvars)
    return lhs == rhs
