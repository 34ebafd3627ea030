"""Catalan paths, the two restricted classes, and the thread bijections.

A Catalan path of length n is a word over {N, E} with n of each letter in
which every prefix has at least as many Ns as Es.  Two subclasses matter
here:

- ENNE_n: no ascent (maximal run of Ns) of length exactly two;
- NEEN_n: no four consecutive steps NEEN.

Splitting a path at its last return to the diagonal mirrors the thread
decompositions, which yields mutually inverse bijections

    enne_to_even_thread : ENNE_{n+1} -> ET_n   (with inverse even_thread_to_enne)
    neen_to_odd_thread  : NEEN_n    -> OT_n   (with inverse odd_thread_to_neen)

where the inverse on the even side walks the leftmost decomposition.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .errors import NotEvenThread, NotInClass, NotOddThread
from .perm import ANTI, EMPTY, ONE, Perm, complement, direct_sum, skew_sum
from .threads import (
    even_threads,
    is_even_thread,
    is_odd_thread,
    leftmost_decomposition,
    odd_decompose,
    odd_threads,
)

_SWAP_NE = str.maketrans("NE", "EN")


def is_catalan_word(w: str) -> bool:
    """Check the prefix condition and letter balance.

    >>> is_catalan_word("NENNEE"), is_catalan_word("NEEN")
    (True, False)
    """
    h = 0
    for ch in w:
        if ch == "N":
            h += 1
        elif ch == "E":
            h -= 1
        else:
            return False
        if h < 0:
            return False
    return h == 0


def reverse_path(w: str) -> str:
    """Reflect over the anti-diagonal: reverse the word and swap N with E.

    >>> reverse_path("NENNEE")
    'NNEENE'
    """
    return w[::-1].translate(_SWAP_NE)


def _has_double_ascent(w: str) -> bool:
    run = 0
    for ch in w:
        if ch == "N":
            run += 1
        else:
            if run == 2:
                return True
            run = 0
    return run == 2


def is_enne(w: str) -> bool:
    """Catalan path with no ascent of length exactly two.

    >>> is_enne("NNEENE")
    False
    """
    return is_catalan_word(w) and not _has_double_ascent(w)


def is_neen(w: str) -> bool:
    """Catalan path with no NEEN factor."""
    return is_catalan_word(w) and "NEEN" not in w


@lru_cache(maxsize=None)
def enumerate_catalan(n: int) -> frozenset[str]:
    """All Catalan paths of length n."""
    return _enumerate(n, forbid=None)


@lru_cache(maxsize=None)
def enumerate_enne(n: int) -> frozenset[str]:
    """ENNE_n, by prefix-pruned backtracking."""
    return _enumerate(n, forbid="ENNE")


@lru_cache(maxsize=None)
def enumerate_neen(n: int) -> frozenset[str]:
    """NEEN_n, by prefix-pruned backtracking."""
    return _enumerate(n, forbid="NEEN")


def _enumerate(n: int, forbid: str | None) -> frozenset[str]:
    if n < 0:
        raise ValueError(f"semantic length must be >= 0: {n}")
    out: list[str] = []

    def rec(w: str, ups: int, downs: int, run: int) -> None:
        if ups == n and downs == n:
            out.append(w)
            return
        if ups < n and not (forbid == "NEEN" and w[-3:] == "NEE"):
            rec(w + "N", ups + 1, downs, run + 1)
        if downs < ups and not (forbid == "ENNE" and run == 2):
            rec(w + "E", ups, downs + 1, 0)

    rec("", 0, 0, 0)
    return frozenset(out)


def last_return_split(w: str) -> tuple[str, str]:
    """Split a nonempty Catalan path at its last return to the diagonal
    before the endpoint, as (prefix, middle) with w = prefix + N + middle + E.
    """
    h = 0
    last = 0
    for i, ch in enumerate(w[:-1]):
        h += 1 if ch == "N" else -1
        if h == 0:
            last = i + 1
    return w[:last], w[last + 1 : -1]


def decompose_enne(w: str) -> tuple[str, str]:
    """The unique (a, b) with w = a N b^r E, a in ENNE, b in NEEN not ending
    in NE.

    >>> decompose_enne("NENNNEEE")
    ('NE', 'NNEE')
    """
    if not w or not is_enne(w):
        raise NotInClass(f"not a nonempty path avoiding two-step ascents: {w!r}")
    a, mid = last_return_split(w)
    return a, reverse_path(mid)


def decompose_neen(w: str) -> tuple[str, str]:
    """The unique (a, b) with w = a^r N b E, a in ENNE, b in NEEN.

    >>> decompose_neen("NENNEE")
    ('NE', 'NE')
    """
    if not w or not is_neen(w):
        raise NotInClass(f"not a nonempty path avoiding NEEN: {w!r}")
    pre, b = last_return_split(w)
    return reverse_path(pre), b


@lru_cache(maxsize=None)
def enne_to_even_thread(w: str) -> Perm:
    """The bijection ENNE_{n+1} -> ET_n.

    >>> enne_to_even_thread("NNNEEENE")
    (3, 1, 2)
    """
    if not w:
        return ANTI
    a, b = decompose_enne(w)
    return skew_sum(
        skew_sum(complement(neen_to_odd_thread(b)), ONE), enne_to_even_thread(a)
    )


@lru_cache(maxsize=None)
def neen_to_odd_thread(w: str) -> Perm:
    """The bijection NEEN_n -> OT_n.

    >>> neen_to_odd_thread("NENNEE")
    (2, 3, 1)
    """
    if not w:
        return EMPTY
    a, b = decompose_neen(w)
    return skew_sum(
        direct_sum(direct_sum(ONE, complement(enne_to_even_thread(a))), ONE),
        neen_to_odd_thread(b),
    )


@lru_cache(maxsize=None)
def even_thread_to_enne(a: Perm) -> str:
    """Inverse of enne_to_even_thread, via the leftmost decomposition.

    >>> even_thread_to_enne((1, 2))
    'NNNEEE'
    """
    if a is ANTI:
        return ""
    if not is_even_thread(a):
        raise NotEvenThread(f"not an even thread: {a}")
    b1, a1 = leftmost_decomposition(a)
    return even_thread_to_enne(a1) + "N" + reverse_path(odd_thread_to_neen(b1)) + "E"


@lru_cache(maxsize=None)
def odd_thread_to_neen(b: Perm) -> str:
    """Inverse of neen_to_odd_thread, via the unique odd decomposition.

    >>> odd_thread_to_neen((3, 1, 2))
    'NNENEE'
    """
    if b == EMPTY:
        return ""
    if not is_odd_thread(b):
        raise NotOddThread(f"not an odd thread: {b}")
    a2, b2 = odd_decompose(b)
    return reverse_path(even_thread_to_enne(a2)) + "N" + odd_thread_to_neen(b2) + "E"


def count_neen_factors(w: str) -> int:
    """Occurrences of NEEN in consecutive entries (overlaps counted)."""
    return sum(1 for i in range(len(w) - 3) if w[i : i + 4] == "NEEN")


def count_neen_formula(n: int, k: int) -> int:
    """Number of Catalan paths of length n with exactly k NEEN factors.

    Evaluates the closed-form alternating sum in exact integer arithmetic;
    the leading division by n is asserted to be exact.

    >>> [count_neen_formula(n, 0) for n in range(1, 6)]
    [1, 2, 4, 9, 23]
    """
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    if k < 0:
        raise ValueError(f"need k >= 0: {k}")

    def comb(m: int, r: int) -> int:
        return math.comb(m, r) if 0 <= r <= m else 0

    total = 0
    for j in range(k, (n - 1) // 2 + 1):
        sign = -1 if (j - k) % 2 else 1
        total += sign * comb(n - k, j - k) * comb(2 * n - 3 * j, n - j + 1)
    total *= comb(n, k)
    if total % n:
        raise AssertionError(f"count formula not divisible by n at n={n}, k={k}")
    return total // n
