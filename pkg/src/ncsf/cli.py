"""Command line interface: an expression language over NSym plus table exports.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | rational | atom | 'omega' '(' expr ')' | '(' expr ')'
    atom   := name '[' int (',' int)* ']'

Basis names are ``Psi S E M F L R``; ``Lam`` and ``Lambda`` are aliases of ``E``.
Products are noncommutative and keep their written order.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import identities
from .algebra import (
    LAMBDA,
    PSI,
    Element,
    element_to_json,
    format_element,
    format_rational,
)
from .bases import convert, to_psi, transition_matrix
from .compositions import DomainError, bracket_form, composition
from .kostka import kostka_gessel_matrix, kostka_matrix
from .products import multiply, omega, pair
from .qsym import FAMILIES, qsym_table

NAMES = {"Psi": PSI, "S": "S", "E": LAMBDA, "Lam": LAMBDA, "Lambda": LAMBDA, "M": "M", "F": "F", "L": "L", "R": "R"}
# how each basis is spelled when printed back
SPELLING = {PSI: "Psi", "S": "S", LAMBDA: "E", "M": "M", "F": "F", "L": "L", "R": "R"}

DEFAULT_MAX_DEGREE = 12


class ParseError(DomainError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


# -- syntax tree -----------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    basis: str
    parts: tuple


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Omega:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        kind = ("num", "name", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {value!r}, found {found!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] == "*":
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.take()
            return Neg(self.factor())
        if kind == "num":
            self.take()
            if "/" in value and int(value.split("/")[1]) == 0:
                raise ParseError("zero denominator", pos)
            return Num(Fraction(value))
        if kind == "op" and value == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "name":
            self.take()
            if value == "omega":
                self.take("(")
                node = self.expr()
                self.take(")")
                return Omega(node)
            if value not in NAMES:
                raise ParseError(f"unknown basis name {value!r}", pos)
            return Atom(NAMES[value], self.parts())
        found = value or "end of input"
        raise ParseError(f"unexpected {found!r}", pos)

    def parts(self):
        self.take("[")
        parts = [self.integer()]
        while self.peek()[1] == ",":
            self.take()
            parts.append(self.integer())
        self.take("]")
        return tuple(parts)

    def integer(self):
        neg = self.peek()[1] == "-"
        if neg:
            self.take()
        kind, value, pos = self.take()
        if kind != "num" or "/" in value:
            raise ParseError(f"expected a part, found {value or 'end of input'!r}", pos)
        n = -int(value) if neg else int(value)
        if n < 1:
            raise ParseError(f"parts must be positive, got {n}", pos)
        return n


def parse(text: str):
    p = _Parser(text)
    node = p.expr()
    kind, value, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return node


_PREC = {"+": 1, "-": 1, "*": 2}


def to_text(node, prec: int = 0) -> str:
    """Print a tree so that ``parse(to_text(t)) == t``."""
    if isinstance(node, Num):
        return format_rational(node.value) if node.value >= 0 else f"({format_rational(node.value)})"
    if isinstance(node, Atom):
        return SPELLING[node.basis] + bracket_form(node.parts)
    if isinstance(node, Omega):
        return f"omega({to_text(node.arg)})"
    if isinstance(node, Neg):
        return "-" + to_text(node.arg, 3)
    mine = _PREC[node.op]
    # left associative: the right operand needs brackets at equal precedence
    text = f"{to_text(node.left, mine)} {node.op} {to_text(node.right, mine + 1)}"
    return f"({text})" if mine < prec else text


def atoms(node) -> list:
    if isinstance(node, Atom):
        return [node]
    if isinstance(node, (Neg, Omega)):
        return atoms(node.arg)
    if isinstance(node, BinOp):
        return atoms(node.left) + atoms(node.right)
    return []


def evaluate(node) -> Element:
    """Value of an expression as a Psi-basis element."""
    if isinstance(node, Num):
        return Element.unit(PSI) * node.value
    if isinstance(node, Atom):
        return to_psi(Element.basis_element(node.basis, node.parts))
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Omega):
        return omega(evaluate(node.arg))
    left, right = evaluate(node.left), evaluate(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return multiply(left, right)


def default_basis(node) -> str:
    found = {a.basis for a in atoms(node)}
    return found.pop() if len(found) == 1 else PSI


# -- commands ----------------------------------------------------------------------

def max_degree() -> int:
    raw = os.environ.get("NCSF_MAX_DEGREE", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_DEGREE
    except ValueError:
        raise DomainError(f"NCSF_MAX_DEGREE must be an integer, got {raw!r}") from None


def _check_degree(n: int) -> None:
    cap = max_degree()
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if n > cap:
        raise DomainError(f"degree {n} exceeds NCSF_MAX_DEGREE={cap}")


def _parse_checked(text: str):
    node = parse(text)
    for a in atoms(node):
        _check_degree(sum(a.parts))
    return node


def _basis_arg(name: str) -> str:
    if name in NAMES:
        return NAMES[name]
    raise DomainError(f"unknown basis {name!r}; expected one of {', '.join(SPELLING.values())}")


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def _element_text(e: Element) -> str:
    return format_element(e, SPELLING[e.basis])


def cmd_expand(args) -> str:
    node = _parse_checked(args.expr)
    target = _basis_arg(args.to) if args.to else default_basis(node)
    value = convert(evaluate(node), target)
    if args.format == "json":
        return _dump(element_to_json(value))
    return _element_text(value)


def cmd_pair(args) -> str:
    a = evaluate(_parse_checked(args.expr))
    b = evaluate(_parse_checked(args.other))
    return format_rational(pair(a, b))


def cmd_matrix(args) -> str:
    _check_degree(args.degree)
    tm = transition_matrix(_basis_arg(args.source), _basis_arg(args.to), args.degree)
    return tm.to_csv().rstrip("\n") if args.format == "csv" else _dump(tm.to_json())


def cmd_kostka(args) -> str:
    _check_degree(args.degree)
    report = (kostka_gessel_matrix if args.gessel else kostka_matrix)(args.degree)
    return report.matrix.to_csv().rstrip("\n") if args.format == "csv" else _dump(report.to_json())


def _index(text: str) -> tuple:
    body = text.strip().strip("[]()")
    try:
        parts = tuple(int(x) for x in re.split(r"[,.\s]+", body) if x)
    except ValueError:
        raise DomainError(f"malformed composition {text!r}") from None
    return composition(parts)


def cmd_qsym(args) -> str:
    I = _index(args.index)
    _check_degree(sum(I))
    table = qsym_table(args.family, I)
    if args.format == "json":
        return _dump(table.to_json())
    return "\n".join(f"{bracket_form(J)}\t{format_rational(c)}" for J, c in table.items())


def render_results(results, timings: bool = False) -> str:
    """Plain table; wall times only on request so the output stays reproducible."""
    width = max(len("identity"), *(len(r.name) for r in results))
    head = f"{'identity':<{width}}  bound  status  checks"
    lines = [head + ("  seconds" if timings else "")]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        row = f"{r.name:<{width}}  {r.bound:>5}  {status:<6}  {r.checks:>6}"
        lines.append(row + (f"  {r.seconds:>7.2f}" if timings else ""))
        if not r.passed:
            lines.append(f"  counterexample: {json.dumps(r.counterexample)}")
    return "\n".join(lines)


def cmd_verify(args):
    _check_degree(args.degree)
    if args.name != "all" and args.name not in identities.VERIFIERS:
        raise DomainError(f"unknown identity {args.name!r}; expected all or one of {', '.join(identities.VERIFIERS)}")
    results = identities.run([args.name] if args.name != "all" else "all", args.degree)
    if args.format == "json":
        rows = [r.to_json() for r in results]
        if not args.timings:
            for row in rows:
                del row["seconds"]
        text = _dump({"degree": args.degree, "results": rows})
    else:
        text = render_results(results, args.timings)
    return text, 0 if all(r.passed for r in results) else 1


class _Parser2(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser2(prog="ncsf", description="Noncommutative symmetric functions with exact arithmetic.")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser2)
    basis_help = "one of " + ", ".join(SPELLING.values())

    p = sub.add_parser("expand", help="expand an expression in a basis")
    p.add_argument("expr")
    p.add_argument("--to", help=basis_help)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("pair", help="scalar product of two expressions")
    p.add_argument("expr")
    p.add_argument("--with", dest="other", required=True)
    p.set_defaults(run=cmd_pair)

    p = sub.add_parser("matrix", help="transition matrix between two bases")
    p.add_argument("--from", dest="source", required=True, help=basis_help)
    p.add_argument("--to", required=True, help=basis_help)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(run=cmd_matrix)

    p = sub.add_parser("kostka", help="Kostka (R to M) or Kostka-Gessel (R to L) matrix")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--gessel", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(run=cmd_kostka)

    p = sub.add_parser("qsym", help="quasi-symmetric coefficient table")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--index", required=True, help="composition such as 3,1,2")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=cmd_qsym)

    p = sub.add_parser("verify", help="run identity checks up to a degree")
    p.add_argument("name", help="all, or one of " + ", ".join(identities.VERIFIERS))
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds")
    p.set_defaults(run=cmd_verify)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.run(args)
    except DomainError as exc:
        print(f"ncsf: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
