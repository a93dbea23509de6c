"""Combinatorics of integer compositions.

Compositions are plain tuples of positive ints; the empty tuple is the
degree-0 composition that indexes the unit.  A composition ``I`` of ``n``
is encoded by its descent set ``{i_1, i_1+i_2, ...}`` and, equivalently, by
a bitmask with bit ``k-1`` set for a descent at ``k``.  Under that encoding
the reverse refinement order ``J <= I`` is subset inclusion of descents.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

Composition = tuple
Partition = tuple


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` and return them as a tuple."""
    I = tuple(int(p) for p in parts)
    for p in I:
        if p < 1:
            raise DomainError(f"composition parts must be positive, got {I}")
    return I


def weight(I: Sequence[int]) -> int:
    return sum(I)


def length(I: Sequence[int]) -> int:
    return len(I)


def _nonempty(I, op):
    if not I:
        raise DomainError(f"{op} needs a nonempty composition")


# -- descent encoding --------------------------------------------------------

def descent_set(I: Composition) -> frozenset:
    _nonempty(I, "descent_set")
    return frozenset(itertools.accumulate(I[:-1]))


def from_descents(n: int, descents: Iterable[int]) -> Composition:
    """Inverse of :func:`descent_set` for compositions of ``n``."""
    if n < 1:
        raise DomainError(f"weight must be positive, got {n}")
    cuts = sorted(set(descents))
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise DomainError(f"descents {cuts} not inside 1..{n - 1}")
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


@lru_cache(maxsize=None)
def descent_mask(I: Composition) -> int:
    mask = 0
    s = 0
    for p in I[:-1]:
        s += p
        mask |= 1 << (s - 1)
    return mask


@lru_cache(maxsize=None)
def from_mask(n: int, mask: int) -> Composition:
    parts = []
    last = 0
    for k in range(1, n):
        if mask >> (k - 1) & 1:
            parts.append(k - last)
            last = k
    parts.append(n - last)
    return tuple(parts)


def sort_key(I: Composition):
    """Canonical order: by weight, then by ascending descent bitmask."""
    return (sum(I), descent_mask(I))


# -- diagram operations ------------------------------------------------------

def reverse(I: Composition) -> Composition:
    return tuple(reversed(I))


def conjugate(I: Composition) -> Composition:
    """Ribbon conjugate: descents are the complement of those of the reverse."""
    _nonempty(I, "conjugate")
    n = sum(I)
    full = (1 << (n - 1)) - 1
    return from_mask(n, full & ~descent_mask(reverse(I)))


def concat(I: Composition, J: Composition) -> Composition:
    return tuple(I) + tuple(J)


def near_concat(I: Composition, J: Composition) -> Composition:
    """``I |> J``: glue the last part of ``I`` to the first part of ``J``."""
    if not I or not J:
        raise DomainError("near_concat needs two nonempty compositions")
    return tuple(I[:-1]) + (I[-1] + J[0],) + tuple(J[1:])


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    """All ``2**(n-1)`` compositions of ``n`` in canonical order."""
    if n < 1:
        raise DomainError(f"compositions_of needs n >= 1, got {n}")
    return tuple(from_mask(n, m) for m in range(1 << (n - 1)))


def compositions_up_to(n: int):
    for m in range(1, n + 1):
        yield from compositions_of(m)


# -- refinement order --------------------------------------------------------

def is_coarsening(J: Composition, I: Composition) -> bool:
    """True iff ``J <= I``, i.e. every part of J sums consecutive parts of I."""
    if sum(J) != sum(I):
        return False
    if not I:
        return not J
    dj, di = descent_mask(J), descent_mask(I)
    return dj & di == dj


def is_refinement(J: Composition, I: Composition) -> bool:
    """True iff ``J >= I``."""
    return is_coarsening(I, J)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=None)
def coarsenings(I: Composition) -> tuple:
    """All ``J <= I`` in canonical order."""
    _nonempty(I, "coarsenings")
    n = sum(I)
    return tuple(from_mask(n, m) for m in sorted(_submasks(descent_mask(I))))


@lru_cache(maxsize=None)
def refinements(I: Composition) -> tuple:
    """All ``J >= I`` in canonical order."""
    _nonempty(I, "refinements")
    n = sum(I)
    d = descent_mask(I)
    free = ((1 << (n - 1)) - 1) & ~d
    return tuple(from_mask(n, d | m) for m in sorted(_submasks(free)))


def breakpoints(J: Composition, I: Composition) -> tuple:
    """Indices ``(p_1, ..., p_s)`` into I where the parts of J end."""
    if not is_coarsening(J, I) or not I:
        raise DomainError(f"{J} is not a coarsening of {I}")
    out = []
    target = itertools.accumulate(J)
    goal = next(target)
    s = 0
    for k, part in enumerate(I, 1):
        s += part
        if s == goal:
            out.append(k)
            goal = next(target, None)
    return tuple(out)


def split(J: Composition, I: Composition) -> tuple:
    """Cut a refinement J of I into consecutive blocks of weights ``i_p``."""
    if not is_refinement(J, I) or not I:
        raise DomainError(f"{J} is not a refinement of {I}")
    blocks = []
    pos = 0
    for target in I:
        block = []
        s = 0
        while s < target:
            block.append(J[pos])
            s += J[pos]
            pos += 1
        blocks.append(tuple(block))
    return tuple(blocks)


# -- scalar statistics -------------------------------------------------------

def pi_u(I: Composition) -> Fraction:
    """Product of successive partial sums ``i_1 (i_1+i_2) ... |I|``."""
    return Fraction(math.prod(itertools.accumulate(I)))


def pi_u_rel(J: Composition, I: Composition) -> Fraction:
    return math.prod((pi_u(B) for B in split(J, I)), start=Fraction(1))


def lp(I: Composition) -> int:
    _nonempty(I, "lp")
    return I[-1]


def lp_rel(J: Composition, I: Composition) -> int:
    return math.prod(B[-1] for B in split(J, I))


def binomial(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


# -- partitions ----------------------------------------------------------------

def sort_to_partition(I: Composition) -> Partition:
    return tuple(sorted(I, reverse=True))


def multiset_permutations(mu: Sequence[int]) -> tuple:
    """Distinct rearrangements of ``mu``, in canonical composition order."""
    if not mu:
        return ((),)
    perms = set(itertools.permutations(mu))
    return tuple(sorted(perms, key=sort_key))


def u(mu: Sequence[int]) -> int:
    """Product of factorials of part multiplicities."""
    return math.prod(math.factorial(m) for m in Counter(mu).values())


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n == 0:
        return ((),)

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


# -- text forms ------------------------------------------------------------------

def bracket_form(I: Composition) -> str:
    return "[" + ",".join(map(str, I)) + "]"


def dot_form(I: Composition) -> str:
    return ".".join(map(str, I))
