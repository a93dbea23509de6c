"""Finite verification of the identities of the theory at configurable bounds.

Every ``verify_*`` function returns a :class:`VerificationResult`; a failing
result carries the first counterexample found, in canonical order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import kostka as _kostka
from . import quasidet as _qd
from . import symimage as _sym
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
    TensorElement,
    format_element,
    mul_psi,
    t_accumulate,
)
from .bases import convert, f_to_psi, m_to_psi, to_psi
from .compositions import (
    binomial,
    breakpoints,
    coarsenings,
    compositions_of,
    compositions_up_to,
    conjugate,
    is_coarsening,
    partitions_of,
    pi_u_rel,
    refinements,
    reverse,
)
from .products import (
    multiply,
    omega,
    pair_l_s,
    pair_m_psi,
    pair_m_r,
    pair_psi_psi,
    pieri_left_psi,
    pieri_right_f,
    product_ff,
    product_ll,
    product_mm,
)


@dataclass
class VerificationResult:
    name: str
    bound: int
    passed: bool = True
    checks: int = 0
    counterexample: dict | None = None
    seconds: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, ok: bool, **detail) -> bool:
        """Record one comparison; keep the first failure."""
        self.checks += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = {k: _show(v) for k, v in detail.items()}
        return ok

    def done(self) -> "VerificationResult":
        self.seconds = time.perf_counter() - self._start
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "bound": self.bound,
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
        }


def _show(v):
    if isinstance(v, Element):
        return format_element(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return [_show(x) for x in v]
    if isinstance(v, TensorElement):
        return f"<tensor with {len(v)} terms>"
    return v


def _E(basis, I):
    return Element.basis_element(basis, I)


_UNIT = Element.unit(PSI)


# -- Newton-type relations -------------------------------------------------------

def newton_m_rhs(I) -> Element:
    """Alternating sum ``sum_s (-1)^(s-1) Psi_(i_1+..+i_s) M^(i_(s+1),..)`` in Psi."""
    out = Element(PSI)
    for s in range(1, len(I) + 1):
        head = _E(PSI, (sum(I[:s]),))
        tail = m_to_psi(I[s:]) if I[s:] else _UNIT
        term = mul_psi(head, tail)
        out = out + (term if s % 2 else -term)
    return out


def newton_f_rhs(I) -> Element:
    """``sum_s F^(i_1..i_s) Psi_(i_(s+1)+..+i_n)`` in Psi, ``s = 0..n-1``."""
    out = Element(PSI)
    for s in range(len(I)):
        head = f_to_psi(I[:s]) if s else _UNIT
        out = out + mul_psi(head, _E(PSI, (sum(I[s:]),)))
    return out


def verify_newton(n: int) -> VerificationResult:
    res = VerificationResult("newton", n)
    for I in compositions_up_to(n):
        lhs = m_to_psi(I) * len(I)
        rhs = newton_m_rhs(I)
        res.check(lhs == rhs, relation="M", index=I, lhs=lhs, rhs=rhs)
        lhs = f_to_psi(I) * len(I)
        rhs = newton_f_rhs(I)
        res.check(lhs == rhs, relation="F", index=I, lhs=lhs, rhs=rhs)
    return res.done()


# -- closed-form products --------------------------------------------------------

def verify_products(n: int) -> VerificationResult:
    """Pieri formulas and the M.M, F.F, L.L closed forms against the generic product."""
    res = VerificationResult("products", n)
    for a in range(1, n):
        for b in range(1, n - a + 1):
            for I in compositions_of(a):
                g = convert(multiply(_E(PSI, (b,)), _E(M, I)), M)
                res.check(g == pieri_left_psi(b, I), formula="pieri_left", r=b, index=I)
                g = convert(multiply(_E(F, I), _E(PSI, (b,))), F)
                res.check(g == pieri_right_f(I, b), formula="pieri_right", r=b, index=I)
                for J in compositions_of(b):
                    for basis, closed in ((M, product_mm), (F, product_ff), (L, product_ll)):
                        g = convert(multiply(_E(basis, I), _E(basis, J)), basis)
                        c = closed(I, J)
                        res.check(g == c, formula=f"{basis}.{basis}", left=I, right=J, generic=g, closed=c)
    return res.done()


# -- Cauchy identity ---------------------------------------------------------------

def cauchy_double_psi(m: int) -> TensorElement:
    """The Cauchy kernel of degree ``m`` written directly in Psi (x) Psi."""
    acc: dict = {}
    for I in compositions_of(m):
        li = len(I)
        for J in coarsenings(I):
            p = (0,) + breakpoints(J, I)
            den = 1
            for k in range(len(J)):
                den *= li - p[k]
            base = Fraction(-1 if (li - len(J)) & 1 else 1, den)
            for K in refinements(I):
                key = (J, K)
                acc[key] = acc.get(key, 0) + base / pi_u_rel(K, I)
    return TensorElement((PSI, PSI), acc)


def verify_cauchy(n: int) -> VerificationResult:
    res = VerificationResult("cauchy", n)
    for m in range(1, n + 1):
        left: dict = {}
        right: dict = {}
        for I in compositions_of(m):
            t_accumulate(left, to_psi(_E(M, I)), to_psi(_E(S, I)))
            t_accumulate(right, to_psi(_E(L, I)), to_psi(_E(R, I)))
        lhs = TensorElement((PSI, PSI), left)
        rhs = TensorElement((PSI, PSI), right)
        res.check(lhs == rhs, degree=m, form="M(x)S vs L(x)R", lhs=lhs, rhs=rhs)
        res.check(lhs == cauchy_double_psi(m), degree=m, form="double Psi expansion")
    return res.done()


# -- hook-sum identity ---------------------------------------------------------------

def hook(k: int, m: int) -> tuple:
    """The composition ``(1^k, m-k)``."""
    return (1,) * k + (m - k,)


def hook_sum_lhs(m: int, x) -> Element:
    return sum_in_psi((Fraction(x) ** (len(I) - 1), _E(M, I)) for I in compositions_of(m))


def hook_sum_rhs(m: int, x) -> Element:
    return sum_in_psi(((Fraction(x) - 1) ** k, _E(R, hook(k, m))) for k in range(m))


def sum_in_psi(pieces) -> Element:
    out: dict = {}
    for c, e in pieces:
        if not c:
            continue
        for K, v in to_psi(e).terms.items():
            out[K] = out.get(K, 0) + c * v
    return Element(PSI, out)


def verify_hook_sum_identity(n: int) -> VerificationResult:
    res = VerificationResult("hook-sum", n)
    for m in range(1, n + 1):
        # both sides have degree <= m-1 in the central X: m+1 points decide it
        for x in range(m + 1):
            lhs, rhs = hook_sum_lhs(m, x), hook_sum_rhs(m, x)
            res.check(lhs == rhs, degree=m, X=x, lhs=lhs, rhs=rhs)
        alt = sum_in_psi(((-1) ** k, _E(R, hook(k, m))) for k in range(m))
        res.check(_E(PSI, (m,)) == alt, degree=m, specialization="X=0")
        fund = sum_in_psi((1, _E(L, I)) for I in compositions_of(m))
        hooks = sum_in_psi((1, _E(R, hook(k, m))) for k in range(m))
        res.check(fund == hooks, degree=m, specialization="X=2")
    return res.done()


def polynomial_coefficients(values) -> list:
    """Coefficients ``c_j`` of the polynomial of degree < len(values) through
    ``(x, values[x])`` for ``x = 0, 1, ...``, via Newton forward differences.

    Works for any additive values supporting scalar multiplication.
    """
    n = len(values)
    diffs = [values[0]]
    row = list(values)
    for _ in range(1, n):
        row = [b - a for a, b in zip(row, row[1:])]
        diffs.append(row[0])
    # falling factorial x(x-1)...(x-k+1)/k! expanded in powers of x
    coeffs = [None] * n
    for k, d in enumerate(diffs):
        poly = [Fraction(1)]
        for t in range(k):
            poly = [Fraction(0)] + poly
            for i in range(len(poly) - 1):
                poly[i] -= t * poly[i + 1]
        fact = Fraction(1, _factorial(k))
        for j, c in enumerate(poly):
            if c:
                term = d * (c * fact)
                coeffs[j] = term if coeffs[j] is None else coeffs[j] + term
    return coeffs


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# -- binomial lemmas -----------------------------------------------------------------

def identity1_sides(I, x, y):
    lhs = sum(binomial(x, y + len(J)) for J in refinements(I))
    rhs = binomial(x + sum(I) - len(I), y + sum(I))
    return lhs, rhs


def identity2_sides(top, J, x, y):
    lhs = sum(
        (-1) ** (len(top) - len(Mc)) * binomial(x + len(Mc), y)
        for Mc in coarsenings(top)
        if is_coarsening(J, Mc)
    )
    rhs = binomial(x + len(J), y - len(top) + len(J))
    return lhs, rhs


def verify_binomial_lemmas(max_n: int) -> VerificationResult:
    res = VerificationResult("binomial", max_n)
    window = range(0, 2 * max_n + 1)
    for I in compositions_up_to(max_n):
        for x, y in itertools.product(window, window):
            lhs, rhs = identity1_sides(I, x, y)
            res.check(lhs == rhs, identity=1, index=I, X=x, Y=y, lhs=lhs, rhs=rhs)
    for J in compositions_up_to(max_n):
        for top in refinements(J):
            for x, y in itertools.product(window, window):
                lhs, rhs = identity2_sides(top, J, x, y)
                res.check(lhs == rhs, identity=2, upper=top, lower=J, X=x, Y=y, lhs=lhs, rhs=rhs)
    return res.done()


# -- duality and the scalar product -------------------------------------------------

def gram(left: dict, right: dict) -> dict:
    """``{(I, J): <left[I] | right[J]>}`` with each side converted once."""
    lm = {I: convert(a, M).terms for I, a in left.items()}
    rs = {J: convert(b, S).terms for J, b in right.items()}
    out = {}
    for I, a in lm.items():
        for J, b in rs.items():
            small, big = (a, b) if len(a) <= len(b) else (b, a)
            out[(I, J)] = sum((v * big[K] for K, v in small.items() if K in big), Fraction(0))
    return out


def verify_duality_suite(n: int) -> VerificationResult:
    res = VerificationResult("duality", n)
    for m in range(1, n + 1):
        comps = compositions_of(m)
        basis = {b: {I: _E(b, I) for I in comps} for b in (PSI, M, S, L, R)}
        g_ms = gram(basis[M], basis[S])
        g_lr = gram(basis[L], basis[R])
        g_mr = gram(basis[M], basis[R])
        g_ls = gram(basis[L], basis[S])
        g_mp = gram(basis[M], basis[PSI])
        g_pp = gram(basis[PSI], basis[PSI])
        om = gram({I: omega(e) for I, e in basis[M].items()}, {J: omega(e) for J, e in basis[S].items()})
        op = gram({I: omega(e) for I, e in basis[PSI].items()}, {J: omega(e) for J, e in basis[PSI].items()})
        for I, J in itertools.product(comps, comps):
            delta = Fraction(int(I == J))
            res.check(g_ms[I, J] == delta, pairing="<M|S>", left=I, right=J, value=g_ms[I, J])
            res.check(g_lr[I, J] == delta, pairing="<L|R>", left=I, right=J, value=g_lr[I, J])
            res.check(om[I, J] == delta, pairing="<wM|wS>", left=I, right=J, value=om[I, J])
            res.check(g_mr[I, J] == pair_m_r(I, J), pairing="<M|R>", left=I, right=J, value=g_mr[I, J])
            res.check(g_ls[I, J] == pair_l_s(I, J), pairing="<L|S>", left=I, right=J, value=g_ls[I, J])
            res.check(g_mp[I, J] == pair_m_psi(I, J), pairing="<M|Psi>", left=I, right=J, value=g_mp[I, J])
            res.check(g_pp[I, J] == pair_psi_psi(I, J), pairing="<Psi|Psi>", left=I, right=J, value=g_pp[I, J])
            res.check(op[I, J] == g_pp[I, J], pairing="<wPsi|wPsi>", left=I, right=J, value=op[I, J])
            sign = -1 if (len(I) - len(J)) & 1 else 1
            res.check(
                g_pp[reverse(I), reverse(J)] == sign * g_pp[I, J],
                pairing="reversal corollary",
                left=I,
                right=J,
            )
        for I in comps:
            diag = Fraction(_prod(I) * _factorial(len(I)))
            res.check(g_pp[I, I] == diag, pairing="<Psi^I|Psi^I>", index=I, value=g_pp[I, I], expected=diag)
            w = convert(omega(_E(L, I)), L)
            res.check(w == _E(L, conjugate(I)), identity="omega(L^I) = L^conj(I)", index=I, value=w)
    return res.done()


def _prod(I):
    out = 1
    for x in I:
        out *= x
    return out


# -- checks delegated to other modules ------------------------------------------------

PAPER_FIXTURES = {
    "M[3,1,2]": (M, (3, 1, 2), PSI, {(6,): Fraction(1, 3), (4, 2): Fraction(-1, 3), (3, 3): Fraction(-1, 6), (3, 1, 2): Fraction(1, 6)}),
    "F[2,1,3]": (F, (2, 1, 3), PSI, {(6,): Fraction(1, 3), (3, 3): Fraction(1, 6), (2, 4): Fraction(1, 3), (2, 1, 3): Fraction(1, 6)}),
    "F[2,2,1,3]": (
        F,
        (2, 2, 1, 3),
        M,
        {K: Fraction(1) for K in [(2, 2, 1, 3), (2, 2, 4), (2, 3, 3), (4, 1, 3), (2, 6), (4, 4), (5, 3), (8,)]},
    ),
}


def verify_fixtures(n: int = 0) -> VerificationResult:
    res = VerificationResult("fixtures", n)
    for name, (src, I, dst, terms) in PAPER_FIXTURES.items():
        got = convert(_E(src, I), dst)
        want = Element(dst, terms)
        res.check(got == want, fixture=name, got=got, expected=want)
    got = conjugate((3, 1, 1, 4, 2))
    res.check(got == (1, 2, 1, 1, 4, 1, 1), fixture="conjugate(3,1,1,4,2)", got=got)
    return res.done()


ROUND_TRIPS = tuple((b, PSI) for b in BASES) + tuple((PSI, b) for b in BASES if b != PSI)


def verify_roundtrip(n: int) -> VerificationResult:
    """``X -> Y -> X`` for the 13 routes through Psi (6 in, 6 out, Psi itself)."""
    res = VerificationResult("roundtrip", n)
    for start, via in ROUND_TRIPS:
        for I in compositions_up_to(n):
            e = _E(start, I)
            back = convert(convert(e, via), start)
            res.check(back == e, route=f"{start}->{via}->{start}", index=I, got=back)
    return res.done()


def verify_quasidet(n: int) -> VerificationResult:
    """Matrix definitions against the closed-form expansions."""
    res = VerificationResult("quasidet", n)
    for I in compositions_up_to(min(n, 7)):
        if len(I) > 6:
            continue
        res.check(_qd.build_m_def(I) == m_to_psi(I), family="M", index=I)
        res.check(_qd.build_f_def(I) == f_to_psi(I), family="F", index=I)
    for k in range(1, min(n, 7) + 1):
        res.check(_qd.build_lambda_def(k) == to_psi(_E(LAMBDA, (k,))), family="Lambda", degree=k)
        res.check(_qd.build_s_def(k) == to_psi(_E(S, (k,))), family="S", degree=k)
    for I in compositions_up_to(min(n, 6)):
        res.check(_qd.build_r_def(I) == to_psi(_E(R, I)), family="R", index=I)
    return res.done()


def verify_kaleidoscope(n: int) -> VerificationResult:
    res = VerificationResult("kaleidoscope", n)
    for k in range(2, min(n, 6) + 1):
        lhs, rhs = _qd.kaleidoscope_sides(k)
        res.check(lhs == rhs, size=k, lhs=repr(lhs), rhs=repr(rhs))
    return res.done()


def verify_kostka(n: int, hook_bound: int | None = None, induction_bound: int | None = None) -> VerificationResult:
    """Positivity up to ``n``, hook rows for ``k + r <= hook_bound`` and the
    induction identities for ``k + r <= induction_bound`` (both default to ``n``)."""
    res = VerificationResult("kostka", n)
    hb = n if hook_bound is None else hook_bound
    ib = n if induction_bound is None else induction_bound
    for m in range(1, n + 1):
        for which in ("kostka", "gessel"):
            rep = _kostka.positivity_report(m, which)
            res.check(rep["ok"], degree=m, matrix=which, violations=[str(v) for v in rep["violations"][:3]])
    for k in range(1, hb + 1):
        for r in range(0, hb - k + 1):
            want = convert(_E(R, (k,) + (1,) * r), M)
            res.check(_kostka.hook_row(k, r) == want, formula="hook", k=k, r=r)
            want = convert(_E(R, (1,) * r + (k,)), M)
            res.check(_kostka.lower_hook_row(r, k) == want, formula="lower hook", k=k, r=r)
    for k in range(1, ib):
        for r in range(1, ib - k + 1):
            sl = multiply(_E(S, (k,)), _E(LAMBDA, (r,)))
            want = sum_in_psi([(1, _E(R, (k,) + (1,) * r)), (1, _E(R, (k + 1,) + (1,) * (r - 1)))])
            res.check(sl == want, identity="S_k Lambda_r", k=k, r=r)
            ls = multiply(_E(LAMBDA, (r,)), _E(S, (k,)))
            want = sum_in_psi([(1, _E(R, (1,) * r + (k,))), (1, _E(R, (1,) * (r - 1) + (k + 1,)))])
            res.check(ls == want, identity="Lambda_r S_k", k=k, r=r)
    return res.done()


def verify_augmented(n: int, fixed_bound: int | None = None) -> VerificationResult:
    res = VerificationResult("augmented", n)
    fb = n if fixed_bound is None else fixed_bound
    for m in range(1, n + 1):
        for mu in partitions_of(m):
            res.check(_sym.check_augmented_sum(mu), statement="augmented sum", partition=mu)
            if m > fb:
                continue
            for j in range(1, len(mu) + 1):
                res.check(_sym.check_fixed_part(mu, j), statement="fixed part", partition=mu, part=j)
    for m in range(0, n):
        for kappa in partitions_of(m):
            for r in range(1, n - m + 1):
                res.check(_sym.check_classical_pieri(r, kappa), statement="classical pieri", r=r, partition=kappa)
    return res.done()


VERIFIERS: dict[str, Callable[[int], VerificationResult]] = {
    "fixtures": verify_fixtures,
    "roundtrip": verify_roundtrip,
    "quasidet": verify_quasidet,
    "kaleidoscope": verify_kaleidoscope,
    "newton": verify_newton,
    "products": verify_products,
    "cauchy": verify_cauchy,
    "duality": verify_duality_suite,
    "kostka": verify_kostka,
    "hook-sum": verify_hook_sum_identity,
    "augmented": verify_augmented,
    "binomial": verify_binomial_lemmas,
}


def run(names, degree: int) -> list:
    if names == "all" or names == ["all"]:
        names = list(VERIFIERS)
    return [VERIFIERS[name](degree) for name in names]
