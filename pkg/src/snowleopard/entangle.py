"""Layered threads, 3412-avoiding involutions, and the partner-count checker.

The even threads entangled with an up-layered odd thread, and the odd
threads entangled with a down-layered even thread, are built explicitly from
3412-avoiding involutions.  Every partner count observed at desk scale is a
product of Motzkin numbers; :func:`conjecture_check` scans one bipartite
level exhaustively and reports any count outside that monoid.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .motzkin import motzkin_number
from .perm import ANTI, EMPTY, ONE, Perm, complement, direct_sum, length, skew_sum
from .threads import entangled_partners, even_threads, odd_threads


@lru_cache(maxsize=None)
def involutions_avoiding_3412(n: int) -> frozenset[tuple[int, ...]]:
    """All 3412-avoiding involutions of length n, built recursively.

    Every such permutation is EMPTY, 1 (+) p1, or (1 (-) p1 (-) 1) (+) p2
    for unique smaller 3412-avoiding involutions; there are M_n of them.

    >>> sorted(involutions_avoiding_3412(3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    """
    if n < 0:
        raise ValueError(f"need n >= 0: {n}")
    if n == 0:
        return frozenset({EMPTY})
    out = set()
    for p1 in involutions_avoiding_3412(n - 1):
        out.add(direct_sum(ONE, p1))
    for a in range(0, n - 1):
        for p1 in involutions_avoiding_3412(a):
            head = skew_sum(skew_sum(ONE, p1), ONE)
            for p2 in involutions_avoiding_3412(n - a - 2):
                out.add(direct_sum(head, p2))
    return frozenset(out)


def _check_layers(layers: Sequence[int]) -> tuple[int, ...]:
    ls = tuple(layers)
    if not ls or any(l < 1 for l in ls):
        raise ValueError(f"layers must be a nonempty sequence of positive integers: {layers}")
    return ls


def up_layered(layers: Sequence[int]) -> tuple[int, ...]:
    """The skew sum of increasing runs of the given sizes.

    >>> up_layered((2, 2))
    (3, 4, 1, 2)
    """
    out: Perm = EMPTY
    for l in _check_layers(layers):
        out = skew_sum(out, tuple(range(1, l + 1)))
    return out


def down_layered(layers: Sequence[int]) -> tuple[int, ...]:
    """The direct sum of decreasing runs of the given sizes.

    >>> down_layered((2, 1))
    (2, 1, 3)
    """
    out: Perm = EMPTY
    for l in _check_layers(layers):
        out = direct_sum(out, tuple(range(l, 0, -1)))
    return out


def layered_odd_partners(layers: Sequence[int]) -> frozenset[Perm]:
    """The even threads entangled with the up-layered odd thread: all
    p1 (-) 1 (-) p2 (-) 1 (-) ... (-) pm over 3412-avoiding involutions pj of
    length lj - 1.  There are M_{l1-1} * ... * M_{lm-1} of them.

    >>> layered_odd_partners((2, 2))
    frozenset({(3, 2, 1)})
    """
    ls = _check_layers(layers)
    out: set[Perm] = set()
    for choice in itertools.product(*(involutions_avoiding_3412(l - 1) for l in ls)):
        acc: Perm = choice[0]
        for part in choice[1:]:
            acc = skew_sum(skew_sum(acc, ONE), part)
        out.add(acc)
    return frozenset(out)


def layered_even_partners(layers: Sequence[int]) -> frozenset[Perm]:
    """The odd threads entangled with the down-layered even thread.

    For two or more layers these are 1 (+) p1 (+) 1 (+) ... (+) pm (+) 1
    over complements pj of 3412-avoiding involutions of length lj - 1,
    giving M_{l1-1} * ... * M_{lm-1} partners.  A single layer of size n is
    special: its partners are the complements of all 3412-avoiding
    involutions of length n+1 (count M_{n+1}); the chain form covers only
    those that start with 1.

    >>> layered_even_partners((2, 1))
    frozenset({(1, 2, 3, 4)})
    """
    ls = _check_layers(layers)
    if len(ls) == 1:
        return frozenset(complement(p) for p in involutions_avoiding_3412(ls[0] + 1))
    out: set[Perm] = set()
    for choice in itertools.product(*(involutions_avoiding_3412(l - 1) for l in ls)):
        acc: Perm = ONE
        for part in choice:
            acc = direct_sum(direct_sum(acc, complement(part)), ONE)
        out.add(acc)
    return frozenset(out)


@lru_cache(maxsize=None)
def is_motzkin_product(count: int) -> bool:
    """True iff count is a product of Motzkin numbers M_k with k >= 2
    (the empty product 1 included).

    >>> is_motzkin_product(1), is_motzkin_product(4), is_motzkin_product(5)
    (True, True, False)
    """
    if count < 1:
        return False
    if count == 1:
        return True
    k = 2
    while True:
        m = motzkin_number(k)
        if m > count:
            return False
        if count % m == 0 and is_motzkin_product(count // m):
            return True
        k += 1


@dataclass(frozen=True)
class ConjectureReport:
    """Result of scanning all partner counts at one bipartite level."""

    n: int
    even_checked: int
    odd_checked: int
    failures: tuple[tuple[str, Perm, int], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures


def conjecture_check(n: int) -> ConjectureReport:
    """Check that every partner count at level n is a Motzkin product.

    Scans every even thread of length n and every odd thread of length n+1;
    failures carry the side, the thread, and the offending count.
    """
    if n < 0:
        raise ValueError(f"need n >= 0: {n}")
    failures = []
    evens = even_threads(n)
    for a in evens:
        c = len(entangled_partners(a, side="even"))
        if not is_motzkin_product(c):
            failures.append(("even", a, c))
    odds = odd_threads(n + 1)
    for b in odds:
        c = len(entangled_partners(b, side="odd"))
        if not is_motzkin_product(c):
            failures.append(("odd", b, c))
    return ConjectureReport(
        n=n,
        even_checked=len(evens),
        odd_checked=len(odds),
        failures=tuple(failures),
    )
