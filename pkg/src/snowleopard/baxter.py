"""Complete Baxter permutations, compatibility, and snow leopard permutations.

A complete Baxter permutation has odd length 2n+1, preserves parity, and
satisfies the betweenness condition: whenever z lies strictly between the
positions of the values i and i+1, the value at z is below i when i is odd
and above i+1 when i is even.  It is determined by the reduced Baxter
permutation it induces on its odd entries; the permutation induced on its
even entries is anti-Baxter.

A snow leopard permutation (SLP) is an anti-Baxter permutation compatible
with a doubly alternating Baxter permutation.  Two routes to the SLPs live
here: the definitional brute-force oracle (:func:`is_slp_oracle`,
:func:`snow_leopard_oracle_set`) and the fast recursive generator
(:func:`enumerate_slp`) based on the unique decomposition
``p = (1 (+) c(p1) (+) 1) (-) 1 (-) p2`` over SLP pairs of odd length.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import (
    LengthMismatch,
    NotAntiBaxter,
    NotBaxter,
    NotCompleteBaxter,
    NotSnowLeopard,
)
from .patterns import is_anti_baxter, is_reduced_baxter
from .perm import (
    ANTI,
    EMPTY,
    ONE,
    Perm,
    complement,
    direct_sum,
    induced_even,
    induced_odd,
    inverse,
    is_alternating,
    length,
    preserves_parity,
    skew_sum,
    standardize,
)

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012)


def catalan_number(n: int) -> int:
    """The n-th Catalan number, exact."""
    import math

    return math.comb(2 * n, n) // (n + 1)


def is_complete_baxter(w: Perm) -> bool:
    """True iff w is a complete Baxter permutation.

    The empty permutation counts as complete Baxter, and the antipermutation
    is admitted as the length -1 case so that the empty reduced Baxter
    permutation has a compatible partner.

    >>> is_complete_baxter((9, 8, 1, 2, 5, 4, 3, 6, 7))
    True
    >>> is_complete_baxter((1,)), is_complete_baxter((3, 2, 1))
    (True, True)
    """
    if w is ANTI or w == EMPTY:
        return True
    n = len(w)
    if n % 2 == 0:
        return False
    if not preserves_parity(w):
        return False
    pos = [0] * (n + 2)
    for i, v in enumerate(w):
        pos[v] = i
    for i in range(1, n):
        x, y = pos[i], pos[i + 1]
        if x > y:
            x, y = y, x
        if i % 2:
            for z in range(x + 1, y):
                if w[z] > i:
                    return False
        else:
            for z in range(x + 1, y):
                if w[z] < i + 1:
                    return False
    return True


def reduce(w: Perm) -> Perm:
    """The reduced Baxter permutation a complete Baxter permutation induces
    on its odd entries.

    >>> reduce((9, 8, 1, 2, 5, 4, 3, 6, 7))
    (5, 1, 3, 2, 4)
    """
    if not is_complete_baxter(w):
        raise NotCompleteBaxter(f"not a complete Baxter permutation: {w}")
    return induced_odd(w)


def anti_of(w: Perm) -> Perm:
    """The anti-Baxter permutation induced on the even entries.

    >>> anti_of((9, 8, 1, 2, 5, 4, 3, 6, 7))
    (4, 1, 2, 3)
    """
    if not is_complete_baxter(w):
        raise NotCompleteBaxter(f"not a complete Baxter permutation: {w}")
    return induced_even(w)


def interleave(odd: Perm, even: Perm) -> Perm:
    """The unique parity-preserving word with the given odd/even projections.

    Requires |odd| = |even| + 1.  Inverse of the reduce/anti_of projections.

    >>> interleave((5, 1, 3, 2, 4), (4, 1, 2, 3))
    (9, 8, 1, 2, 5, 4, 3, 6, 7)
    >>> interleave(EMPTY, ANTI) is ANTI
    True
    """
    if length(odd) != length(even) + 1:
        raise LengthMismatch(f"need |odd| = |even| + 1, got {length(odd)} and {length(even)}")
    if even is ANTI:
        return ANTI
    w = [0] * (2 * len(even) + 1)
    for i, v in enumerate(odd):
        w[2 * i] = 2 * v - 1
    for i, v in enumerate(even):
        w[2 * i + 1] = 2 * v
    return tuple(w)


def compatible(baxter: Perm, anti: Perm) -> bool:
    """True iff the two permutations arise as the odd/even projections of one
    complete Baxter permutation.

    Since the interleaving is forced by parity, this reduces to one
    completeness check.  Preconditions are reported distinctly.

    >>> compatible((5, 1, 3, 2, 4), (4, 1, 2, 3))
    True
    """
    if length(baxter) != length(anti) + 1:
        raise LengthMismatch(
            f"need |baxter| = |anti| + 1, got {length(baxter)} and {length(anti)}"
        )
    if not is_reduced_baxter(baxter):
        raise NotBaxter(f"not a reduced Baxter permutation: {baxter}")
    if not is_anti_baxter(anti):
        raise NotAntiBaxter(f"not an anti-Baxter permutation: {anti}")
    return is_complete_baxter(interleave(baxter, anti))


def alternating_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """Generate the alternating (up-down) permutations of 1..n by backtracking."""
    if n == 0:
        yield EMPTY
        return
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if i > 0 and (prefix[-1] < v) != (i % 2 == 1):
                continue
            used[v] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[v] = False

    yield from rec()


@lru_cache(maxsize=None)
def doubly_alternating_baxter(n: int) -> tuple[tuple[int, ...], ...]:
    """All doubly alternating Baxter permutations of length n, sorted.

    There are C_k of them for n = 2k and for n = 2k+1.
    """
    out = [
        p
        for p in alternating_permutations(n)
        if is_alternating(inverse(p)) and is_reduced_baxter(p)
    ]
    return tuple(sorted(out))


def is_slp_oracle(p: Perm) -> bool:
    """Definitional test: p is anti-Baxter and compatible with some doubly
    alternating Baxter permutation of length |p| + 1.

    This route never consults the recursive generator, so the two can be
    played against each other as independent checks.

    >>> is_slp_oracle((1, 4, 3, 2, 5)), is_slp_oracle((2, 1, 3, 4, 5))
    (True, False)
    >>> is_slp_oracle(ANTI)
    True
    """
    if p is ANTI:
        return compatible(EMPTY, ANTI)
    if not is_anti_baxter(p):
        return False
    for s in doubly_alternating_baxter(len(p) + 1):
        if is_complete_baxter(interleave(s, p)):
            return True
    return False


def snow_leopard_oracle_set(n: int) -> frozenset[tuple[int, ...]]:
    """All snow leopard permutations of length n >= 0 by exhaustive scan.

    Tight inline version of :func:`is_slp_oracle` applied to every
    permutation of S_n; used to cross-check the recursive generator.
    """
    dabs = doubly_alternating_baxter(n + 1)
    out = set()
    m = 2 * n + 1
    w = [0] * m
    pos = [0] * (m + 2)
    for p in itertools.permutations(range(1, n + 1)):
        if not is_anti_baxter(p):
            continue
        for i, v in enumerate(p):
            w[2 * i + 1] = 2 * v
        for s in dabs:
            for i, v in enumerate(s):
                w[2 * i] = 2 * v - 1
            for i, v in enumerate(w):
                pos[v] = i
            ok = True
            for i in range(1, m):
                x, y = pos[i], pos[i + 1]
                if x > y:
                    x, y = y, x
                if i % 2:
                    for z in range(x + 1, y):
                        if w[z] > i:
                            ok = False
                            break
                else:
                    for z in range(x + 1, y):
                        if w[z] < i + 1:
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                out.add(p)
                break
    return frozenset(out)


@lru_cache(maxsize=None)
def enumerate_slp(n: int) -> frozenset[Perm]:
    """All snow leopard permutations of length n >= -1, recursively.

    Odd positive lengths use the unique decomposition
    ``(1 (+) c(p1) (+) 1) (-) 1 (-) p2`` over SLP pairs of odd length; even
    lengths use ``1 (+) c(s1)`` over SLPs s1 of length n - 1.  There are
    C_k snow leopard permutations of length 2k - 1.

    >>> sorted(enumerate_slp(3))
    [(1, 2, 3), (3, 2, 1)]
    """
    if n < -1:
        raise ValueError(f"length must be >= -1: {n}")
    if n == -1:
        return frozenset({ANTI})
    if n == 0:
        return frozenset({EMPTY})
    if n % 2 == 0:
        return frozenset(direct_sum(ONE, complement(s)) for s in enumerate_slp(n - 1))
    out = set()
    for la in range(-1, n - 1, 2):
        lb = n - 3 - la
        for p1 in enumerate_slp(la):
            head = skew_sum(direct_sum(direct_sum(ONE, complement(p1)), ONE), ONE)
            for p2 in enumerate_slp(lb):
                out.add(skew_sum(head, p2))
    return frozenset(out)


def is_slp(p: Perm) -> bool:
    """Membership in the recursively enumerated snow leopard permutations."""
    return p in enumerate_slp(length(p))


@dataclass(frozen=True)
class SlpDecomposition:
    """The unique splitting p = (1 (+) c(left) (+) 1) (-) 1 (-) right.

    ``connector_position`` is the 1-based position in p of the entry
    corresponding to the final 1, or None when p begins with 1 (then
    right is the antipermutation and there is no connector).
    """

    left: Perm
    right: Perm
    connector_position: Optional[int]

    @property
    def connector(self) -> Optional[int]:
        return None if self.connector_position is None else length(self.right) + 1


def slp_decompose(p: Perm) -> SlpDecomposition:
    """Split a snow leopard permutation of odd positive length.

    >>> d = slp_decompose((5, 8, 7, 6, 9, 4, 3, 2, 1))
    >>> d.left, d.right, d.connector_position, d.connector
    ((1, 2, 3), (3, 2, 1), 6, 4)
    >>> slp_decompose((1, 2, 3))
    SlpDecomposition(left=(1,), right=@, connector_position=None)
    """
    n = length(p)
    if n < 1 or n % 2 == 0 or not is_slp(p):
        raise NotSnowLeopard(f"not a snow leopard permutation of odd positive length: {p}")
    if p[0] == 1:
        right: Perm = ANTI
        block = p
        conn = None
    else:
        m2 = p[0] - 2
        t = n - m2 - 1
        block = standardize(p[:t])
        right = p[t + 1 :]
        conn = t + 1
    left = ANTI if len(block) == 1 else complement(tuple(v - 1 for v in block[1:-1]))
    return SlpDecomposition(left=left, right=right, connector_position=conn)


def block_decompose(p: Perm) -> list[Perm]:
    """The unique block sequence p1, ..., pk with
    p = (1 (+) c(p1) (+) 1) (-) 1 (-) ... (-) 1 (-) (1 (+) c(pk) (+) 1).

    >>> block_decompose((5, 8, 7, 6, 9, 4, 3, 2, 1))
    [(1, 2, 3), @, @]
    """
    blocks = []
    while True:
        d = slp_decompose(p)
        blocks.append(d.left)
        if d.right is ANTI:
            return blocks
        p = d.right


def reassemble_blocks(blocks: list[Perm]) -> Perm:
    """Inverse of :func:`block_decompose`."""
    out: Perm = ANTI
    for b in reversed(blocks):
        head = direct_sum(direct_sum(ONE, complement(b)), ONE)
        out = skew_sum(skew_sum(head, ONE), out)
    return out
