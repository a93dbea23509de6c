"""Quasideterminants of almost-triangular matrices.

Only the lower-left quasideterminant of an ``n x n`` matrix with free entries
on and below the diagonal, central rational superdiagonal ``b_1..b_{n-1}``
and zeros above it is supported.  It expands as a sum over decreasing chains
``n >= j_1 > ... > j_k > 1`` of
``(-1)^k a[n,j_1] b[j_1-1]^-1 a[j_1-1,j_2] ... b[j_k-1]^-1 a[j_k-1,1]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PSI, Element, SymElement, substitute
from .bases import s_to_psi
from .compositions import DomainError, composition


@dataclass(frozen=True)
class QMatrix:
    """Almost-triangular matrix; ``entries[i][j]`` (0-based, ``j <= i``) are symbol labels."""

    entries: tuple
    b: tuple

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise DomainError("empty matrix")
        for i, row in enumerate(self.entries):
            if len(row) != i + 1:
                raise DomainError(f"row {i + 1} must have {i + 1} entries on or below the diagonal")
        if len(self.b) != n - 1:
            raise DomainError(f"need {n - 1} superdiagonal entries, got {len(self.b)}")
        if any(Fraction(x) == 0 for x in self.b):
            raise DomainError("superdiagonal entries must be invertible")

    @property
    def n(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int):
        """Entry label at 1-based row ``i``, column ``j <= i``."""
        return self.entries[i - 1][j - 1]

    @classmethod
    def generic(cls, n: int, b, name: str = "a") -> "QMatrix":
        return cls(tuple(tuple((name, i, j) for j in range(1, i + 1)) for i in range(1, n + 1)), tuple(b))


def qdet(m: QMatrix) -> SymElement:
    n = m.n
    inv = [None] + [1 / Fraction(x) for x in m.b]
    terms = {}
    for k in range(n):
        for chain in itertools.combinations(range(n, 1, -1), k):
            word = []
            coeff = Fraction(-1 if k & 1 else 1)
            row = n
            for j in chain:
                word.append(m.a(row, j))
                coeff *= inv[j - 1]
                row = j - 1
            word.append(m.a(row, 1))
            w = tuple(word)
            terms[w] = terms.get(w, 0) + coeff
    return SymElement(terms)


def _natural(size):
    return tuple(Fraction(k) for k in range(1, size))


def t_reduce(m: QMatrix, j: int) -> QMatrix:
    """Delete row ``j`` and column ``j+1``; the superdiagonal becomes ``1..n-2``."""
    n = m.n
    if not 1 <= j <= n - 1:
        raise DomainError(f"T_{j} undefined on a {n}x{n} matrix")
    return t_reduce_set(m, (j,))


def t_reduce_set(m: QMatrix, js) -> QMatrix:
    """Apply ``T_j`` for every ``j`` in ``js``, all indices relative to ``m``."""
    n = m.n
    js = set(js)
    if any(not 1 <= j <= n - 1 for j in js):
        raise DomainError(f"reduction indices {sorted(js)} out of range for n={n}")
    rows = [i for i in range(1, n + 1) if i not in js]
    cols = [c for c in range(1, n + 1) if c - 1 not in js]
    entries = tuple(tuple(m.a(r, cols[c]) for c in range(k + 1)) for k, r in enumerate(rows))
    return QMatrix(entries, _natural(len(rows)))


def kaleidoscope_sides(n: int):
    """Both sides of the kaleidoscopic expansion on a generic ``n x n`` matrix."""
    if n < 1:
        raise DomainError("n must be positive")
    lhs = qdet(QMatrix.generic(n, tuple(Fraction(-(n - k)) for k in range(1, n)))).scaled(Fraction(1, n))
    base = QMatrix.generic(n, _natural(n))
    rhs = SymElement()
    for k in range(n):
        coeff = Fraction(-1 if (n - k - 1) & 1 else 1, n - k)
        for J in itertools.combinations(range(1, n), k):
            rhs = rhs + qdet(t_reduce_set(base, J)).scaled(coeff)
    return lhs, rhs


def kaleidoscope_check(n: int) -> bool:
    lhs, rhs = kaleidoscope_sides(n)
    return lhs == rhs


# -- definitional constructions -------------------------------------------------

def _psi(k):
    return Element.basis_element(PSI, (k,))


def _suffix_matrix(I, b):
    # a[k][j] labels the block sum i_{n-k+1} + ... + i_{n-j+1}
    n = len(I)
    entries = tuple(
        tuple(sum(I[n - k : n - j + 1]) for j in range(1, k + 1)) for k in range(1, n + 1)
    )
    return QMatrix(entries, tuple(b))


def _expand(m: QMatrix, atom) -> Element:
    q = qdet(m)
    return substitute(q, {s: atom(s) for s in q.symbols()})


def build_m_def(I) -> Element:
    I = composition(I)
    n = len(I)
    e = _expand(_suffix_matrix(I, _natural(n)), _psi)
    return e * Fraction(-1 if (n - 1) & 1 else 1, n)


def build_f_def(I) -> Element:
    I = composition(I)
    n = len(I)
    e = _expand(_suffix_matrix(I, tuple(Fraction(-(n - k)) for k in range(1, n))), _psi)
    return e * Fraction(1, n)


def build_lambda_def(n: int) -> Element:
    m = QMatrix(tuple(tuple(k - j + 1 for j in range(1, k + 1)) for k in range(1, n + 1)), _natural(n))
    return _expand(m, _psi) * Fraction(-1 if (n - 1) & 1 else 1, n)


def build_s_def(n: int) -> Element:
    m = QMatrix(
        tuple(tuple(k - j + 1 for j in range(1, k + 1)) for k in range(1, n + 1)),
        tuple(Fraction(-(n - k)) for k in range(1, n)),
    )
    return _expand(m, _psi) * Fraction(1, n)


def build_r_def(I) -> Element:
    I = composition(I)
    k = len(I)
    e = _expand(_suffix_matrix(I, (Fraction(1),) * (k - 1)), lambda s: s_to_psi((s,)))
    return e * (-1 if (k - 1) & 1 else 1)
