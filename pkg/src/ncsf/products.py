"""Products, the involution omega, and the scalar product.

The generic paths (``multiply``, ``pair``) work in Psi coordinates and do not
depend on any closed-form formula; the closed forms are kept beside them so
the two can be compared.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import F, L, M, PSI, S, Element, mul_psi
from .bases import convert, to_psi
from .compositions import (
    binomial,
    breakpoints,
    coarsenings,
    composition,
    concat,
    is_coarsening,
    is_refinement,
    lp_rel,
    near_concat,
    refinements,
    reverse,
)


def multiply(a: Element, b: Element) -> Element:
    """Noncommutative product; the result is in the Psi basis."""
    return mul_psi(to_psi(a), to_psi(b))


def omega(a: Element) -> Element:
    """The involution ``Psi^I -> (-1)^(|I|-l(I)) Psi^rev(I)``, in Psi coordinates."""
    out = {}
    for I, c in to_psi(a).terms.items():
        out[reverse(I)] = -c if (sum(I) - len(I)) & 1 else c
    return Element._trusted(PSI, out)


# -- closed-form products ---------------------------------------------------------

def pieri_left_psi(r: int, I) -> Element:
    """``Psi_r * M^I`` in the M basis."""
    I = composition(I)
    n = len(I)
    return Element(M, {concat((r,), I): n + 1, near_concat((r,), I): n})


def pieri_right_f(I, r: int) -> Element:
    """``F^I * Psi_r`` in the F basis."""
    I = composition(I)
    n = len(I)
    return Element(F, {concat(I, (r,)): n + 1, near_concat(I, (r,)): -n})


def _collect(basis, pairs) -> Element:
    out: dict = {}
    for K, c in pairs:
        if c:
            out[K] = out.get(K, 0) + c
    return Element(basis, out)


def product_mm(I, J) -> Element:
    """``M^I * M^J`` in the M basis, summing over coarsenings K of I."""
    I, J = composition(I), composition(J)
    li, lj = len(I), len(J)

    def terms():
        for K in coarsenings(I):
            lk = len(K)
            yield concat(K, J), binomial(lk + lj, li)
            yield near_concat(K, J), binomial(lk + lj - 1, li)

    return _collect(M, terms())


def product_ff(I, J) -> Element:
    """``F^I * F^J`` in the F basis, summing over coarsenings K of J.

    Signs are those obtained by applying omega to :func:`product_mm`.
    """
    I, J = composition(I), composition(J)
    li, lj = len(I), len(J)

    def terms():
        for K in coarsenings(J):
            lk = len(K)
            sign = -1 if (lj - lk) & 1 else 1
            yield concat(I, K), sign * binomial(li + lk, lj)
            yield near_concat(I, K), -sign * binomial(li + lk - 1, lj)

    return _collect(F, terms())


def product_ll(I, J) -> Element:
    """``L^I * L^J`` in the L basis; all coefficients are nonnegative."""
    I, J = composition(I), composition(J)
    li, lj = len(I), len(J)
    top = sum(I) + lj - li

    def terms():
        for K in coarsenings(I):
            for N in refinements(J):
                low = len(K) + len(N) - li
                yield concat(K, N), binomial(top, low)
                yield near_concat(K, N), binomial(top, low - 1)

    return _collect(L, terms())


# -- scalar product -----------------------------------------------------------------

def pair(a: Element, b: Element) -> Fraction:
    """``<a | b>`` with ``<M^I | S^J> = delta``; zero across degrees."""
    am = convert(a, M).terms
    bs = convert(b, S).terms
    if len(bs) < len(am):
        return sum((c * am[I] for I, c in bs.items() if I in am), Fraction(0))
    return sum((c * bs[I] for I, c in am.items() if I in bs), Fraction(0))


def _psi_m_weight(Mc, I):
    p = breakpoints(Mc, I)
    s = len(Mc)
    out = 1
    prev = 0
    for k, pk in enumerate(p, 1):
        out *= (s - k + 1) ** (pk - prev)
        prev = pk
    return out


def pair_psi_psi(I, J) -> Fraction:
    I, J = composition(I), composition(J)
    if sum(I) != sum(J):
        return Fraction(0)
    total = 0
    for Mc in coarsenings(I):
        if is_coarsening(J, Mc):
            sign = -1 if (len(Mc) - len(J)) & 1 else 1
            total += sign * lp_rel(Mc, J) * _psi_m_weight(Mc, I)
    return Fraction(total)


def pair_m_psi(I, J) -> Fraction:
    I, J = composition(I), composition(J)
    if not is_refinement(I, J):
        return Fraction(0)
    sign = -1 if (len(I) - len(J)) & 1 else 1
    return Fraction(sign * lp_rel(I, J))


def pair_m_r(I, K) -> Fraction:
    I, K = composition(I), composition(K)
    if not is_refinement(K, I):
        return Fraction(0)
    return Fraction(-1 if (len(K) - len(I)) & 1 else 1)


def pair_l_s(J, K) -> Fraction:
    return Fraction(int(is_refinement(composition(K), composition(J))))


def pair_l_r(I, J) -> Fraction:
    return Fraction(int(composition(I) == composition(J)))
