"""Sparse exact linear combinations: NSym elements, tensors, free words.

Scalars are :class:`fractions.Fraction`.  No container ever stores a zero
coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .compositions import DomainError, bracket_form, composition, sort_key

PSI = "Psi"
S = "S"
LAMBDA = "Lambda"
M = "M"
F = "F"
L = "L"
R = "R"
BASES = (PSI, S, LAMBDA, M, F, L, R)


def check_basis(tag: str) -> str:
    if tag not in BASES:
        raise DomainError(f"unknown basis {tag!r}; expected one of {', '.join(BASES)}")
    return tag


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _pruned(terms) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


class Element:
    """An element of NSym in one basis: ``{composition: coefficient}``.

    Instances are immutable; the coefficient map must not be mutated.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping | None = None):
        self.basis = check_basis(basis)
        self.terms = _pruned(terms or {})

    @classmethod
    def basis_element(cls, basis: str, I, coeff=1) -> "Element":
        return cls(basis, {composition(I): coeff})

    @classmethod
    def unit(cls, basis: str = PSI) -> "Element":
        return cls(basis, {(): 1})

    @classmethod
    def _trusted(cls, basis, terms):
        # caller guarantees Fraction values and no zeros
        e = object.__new__(cls)
        e.basis = basis
        e.terms = terms
        return e

    def __getitem__(self, I) -> Fraction:
        return self.terms.get(tuple(I), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """Terms in canonical order (weight, then descent bitmask)."""
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(I) for I in self.terms}

    def homogeneous_part(self, n: int) -> "Element":
        return Element._trusted(self.basis, {I: c for I, c in self.terms.items() if sum(I) == n})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return scale(c, self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        if isinstance(other, Element):
            from .products import multiply

            return multiply(self, other)
        return NotImplemented

    def __repr__(self):
        return f"Element({self.basis!r}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def add(a: Element, b: Element) -> Element:
    if a.basis != b.basis:
        raise DomainError(f"cannot add {a.basis} and {b.basis} elements; convert first")
    out = dict(a.terms)
    for k, v in b.terms.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return Element._trusted(a.basis, out)


def scale(c, a: Element) -> Element:
    c = Fraction(c)
    if not c:
        return Element._trusted(a.basis, {})
    return Element._trusted(a.basis, {k: c * v for k, v in a.terms.items()})


def equals(a: Element, b: Element) -> bool:
    return a == b


def linear_sum(basis: str, pieces) -> Element:
    """Sum of ``(coefficient, Element)`` pairs, all in ``basis``."""
    out: dict = {}
    for c, e in pieces:
        if e.basis != basis:
            raise DomainError(f"expected {basis} element, got {e.basis}")
        for k, v in e.terms.items():
            out[k] = out.get(k, 0) + c * v
    return Element(basis, out)


def mul_psi(a: Element, b: Element) -> Element:
    """Product in the Psi basis, where it is concatenation of indices."""
    if a.basis != PSI or b.basis != PSI:
        raise DomainError("mul_psi needs two Psi-basis elements")
    out: dict = {}
    for I, x in a.terms.items():
        for J, y in b.terms.items():
            K = I + J
            out[K] = out.get(K, 0) + x * y
    return Element(PSI, out)


def format_element(e: Element, name: str | None = None) -> str:
    """Parseable text form, e.g. ``1/3*Psi[6] - 1/3*Psi[4,2]``."""
    name = name or e.basis
    if e.is_zero():
        return "0"
    chunks = []
    for I, c in e.items():
        atom = f"{name}{bracket_form(I)}" if I else None
        mag = abs(c)
        if atom is None:
            body = format_rational(mag)
        elif mag == 1:
            body = atom
        else:
            body = f"{format_rational(mag)}*{atom}"
        if not chunks:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(("- " if c < 0 else "+ ") + body)
    return " ".join(chunks)


def element_to_json(e: Element) -> dict:
    return {
        "basis": e.basis,
        "terms": [{"composition": list(I), "coefficient": format_rational(c)} for I, c in e.items()],
    }


def element_from_json(data: Mapping) -> Element:
    return Element(
        data["basis"],
        {tuple(t["composition"]): parse_rational(str(t["coefficient"])) for t in data["terms"]},
    )


# -- tensors -------------------------------------------------------------------

class TensorElement:
    """Element of NSym (x) NSym: ``{(I, J): coefficient}`` with a basis per factor."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases=(PSI, PSI), terms: Mapping | None = None):
        self.bases = (check_basis(bases[0]), check_basis(bases[1]))
        self.terms = _pruned(terms or {})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.bases == other.bases and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        return t_add(self, other)

    def __repr__(self):
        return f"TensorElement({self.bases!r}, {len(self.terms)} terms)"


def t_from_pair(a: Element, b: Element) -> TensorElement:
    terms = {}
    for I, x in a.terms.items():
        for J, y in b.terms.items():
            terms[(I, J)] = x * y
    return TensorElement((a.basis, b.basis), terms)


def t_add(a: TensorElement, b: TensorElement) -> TensorElement:
    if a.bases != b.bases:
        raise DomainError(f"tensor bases differ: {a.bases} vs {b.bases}")
    out = dict(a.terms)
    for k, v in b.terms.items():
        out[k] = out.get(k, 0) + v
    return TensorElement(a.bases, out)


def t_scale(c, a: TensorElement) -> TensorElement:
    c = Fraction(c)
    return TensorElement(a.bases, {k: c * v for k, v in a.terms.items()})


def t_equals(a: TensorElement, b: TensorElement) -> bool:
    return a == b


def t_accumulate(acc: dict, a: Element, b: Element, c=1) -> None:
    """In-place ``acc += c * a (x) b``; used for large tensor sums."""
    for I, x in a.terms.items():
        cx = c * x
        for J, y in b.terms.items():
            k = (I, J)
            acc[k] = acc.get(k, 0) + cx * y


# -- free algebra on abstract symbols ----------------------------------------

class SymElement:
    """Linear combination of words over noncommuting symbols.

    A word is a tuple of hashable symbol identifiers; rationals are central.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = _pruned(terms or {})

    @classmethod
    def word(cls, *symbols, coeff=1) -> "SymElement":
        return cls({tuple(symbols): coeff})

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymElement(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, SymElement):
            return sym_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    def scaled(self, c) -> "SymElement":
        c = Fraction(c)
        return SymElement({k: c * v for k, v in self.terms.items()})

    def symbols(self) -> set:
        return {s for w in self.terms for s in w}

    def __repr__(self):
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), repr(kv[0]))):
            parts.append(f"{format_rational(c)}*{'.'.join(map(str, w)) or '1'}")
        return "SymElement(" + " + ".join(parts) + ")"


def sym_mul(a: SymElement, b: SymElement) -> SymElement:
    out: dict = {}
    for u, x in a.terms.items():
        for v, y in b.terms.items():
            w = u + v
            out[w] = out.get(w, 0) + x * y
    return SymElement(out)


def substitute(a: SymElement, env: Mapping) -> Element:
    """Replace each symbol by a Psi-basis element and multiply out in order."""
    for sym, val in env.items():
        if not isinstance(val, Element) or val.basis != PSI:
            raise DomainError(f"binding for {sym!r} must be a Psi-basis Element")
    missing = a.symbols() - set(env)
    if missing:
        raise DomainError(f"unbound symbols: {sorted(map(repr, missing))}")
    total: dict = {}
    for word, c in a.terms.items():
        prod = Element.unit(PSI)
        for sym in word:
            prod = mul_psi(prod, env[sym])
        for k, v in prod.terms.items():
            total[k] = total.get(k, 0) + c * v
    return Element(PSI, total)
