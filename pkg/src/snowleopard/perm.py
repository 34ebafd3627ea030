"""Permutations in one-line notation, extended by two degenerate values.

A permutation of length n >= 1 is a tuple containing each of 1..n exactly
once.  Two extra values complete the algebra used by the recursive
decompositions in this package:

- ``EMPTY``, the empty permutation of length 0, written ``e`` in text form;
- ``ANTI``, the antipermutation of length -1, written ``@`` in text form.

``ANTI`` absorbs one adjacent element under the direct sum and skew sum:
``1 (+) @ = @ (+) 1 = 1 (-) @ = @ (-) 1 = EMPTY``.  The general absorption
rules implemented here extend this so that chains such as
``skew_sum(skew_sum(x, (1,)), ANTI) == x`` evaluate the same way under every
bracketing; see :func:`direct_sum` and :func:`skew_sum`.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Union

from .errors import IllegalAnti, MalformedPermutation, NotParityPreserving


class Antipermutation:
    """The unique permutation of length -1.  Use the module constant ANTI."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "@"


ANTI = Antipermutation()
EMPTY: tuple[int, ...] = ()
ONE: tuple[int, ...] = (1,)

Perm = Union[tuple[int, ...], Antipermutation]


def length(p: Perm) -> int:
    """Length of a permutation; the antipermutation has length -1."""
    return -1 if p is ANTI else len(p)


def is_perm(entries: Sequence[int]) -> bool:
    """Check that entries form a permutation of 1..n.

    >>> [is_perm(w) for w in [(), (1,), (2, 1), (1, 1), (0, 1), (1, 3)]]
    [True, True, True, False, False, False]
    """
    n = len(entries)
    return sorted(entries) == list(range(1, n + 1))


def check_perm(p: Perm) -> Perm:
    """Validate and return p, raising MalformedPermutation otherwise."""
    if p is ANTI:
        return p
    if not isinstance(p, tuple) or not is_perm(p):
        raise MalformedPermutation(f"not a permutation of 1..n: {p!r}")
    return p


def standardize(values: Sequence[int]) -> tuple[int, ...]:
    """The permutation order-isomorphic to the given distinct values.

    >>> standardize((5, 8, 7, 6))
    (1, 4, 3, 2)
    """
    ranks = {v: i for i, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


def complement(p: Perm) -> Perm:
    """The complement j -> n+1-p(j); an involution fixing both degenerates.

    >>> complement((1, 4, 2, 3, 5))
    (5, 2, 4, 3, 1)
    >>> complement(ANTI)
    @
    """
    if p is ANTI:
        return ANTI
    n1 = len(p) + 1
    return tuple(n1 - v for v in p)


def direct_sum(p: Perm, q: Perm) -> Perm:
    """The direct sum: q's entries shifted up by |p| and appended to p.

    With an antipermutation operand the neighbor loses one element:
    ``q (+) ANTI`` requires q to end with its maximum (which is removed), and
    ``ANTI (+) q`` requires q to begin with 1 (which is removed).

    >>> direct_sum((1, 4, 2, 3, 5), (3, 1, 2))
    (1, 4, 2, 3, 5, 8, 6, 7)
    >>> direct_sum((1,), ANTI)
    ()
    >>> direct_sum(ANTI, (1, 2))
    (1,)
    """
    if p is ANTI:
        if q is ANTI:
            raise IllegalAnti("cannot combine two antipermutations")
        if q == EMPTY:
            return ANTI
        if q[0] != 1:
            raise IllegalAnti(f"ANTI (+) q needs q to begin with 1: {q}")
        return tuple(v - 1 for v in q[1:])
    if q is ANTI:
        if p == EMPTY:
            return ANTI
        if p[-1] != len(p):
            raise IllegalAnti(f"p (+) ANTI needs p to end with its maximum: {p}")
        return p[:-1]
    n = len(p)
    return p + tuple(v + n for v in q)


def skew_sum(p: Perm, q: Perm) -> Perm:
    """The skew sum: p's entries shifted up by |q|, then q appended.

    With an antipermutation operand: ``q (-) ANTI`` requires q to end with 1
    (removed), and ``ANTI (-) q`` requires q to begin with its maximum
    (removed).

    >>> skew_sum((1, 4, 2, 3, 5), (3, 1, 2))
    (4, 7, 5, 6, 8, 3, 1, 2)
    >>> skew_sum(ANTI, (1,))
    ()
    >>> skew_sum((2, 3, 1), ANTI)
    (1, 2)
    """
    if p is ANTI:
        if q is ANTI:
            raise IllegalAnti("cannot combine two antipermutations")
        if q == EMPTY:
            return ANTI
        if q[0] != len(q):
            raise IllegalAnti(f"ANTI (-) q needs q to begin with its maximum: {q}")
        return q[1:]
    if q is ANTI:
        if p == EMPTY:
            return ANTI
        if p[-1] != 1:
            raise IllegalAnti(f"p (-) ANTI needs p to end with 1: {p}")
        return tuple(v - 1 for v in p[:-1])
    m = len(q)
    return tuple(v + m for v in p) + q


def inverse(p: Perm) -> Perm:
    """The inverse permutation; both degenerate values are self-inverse.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    if p is ANTI:
        return ANTI
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def is_involution(p: Perm) -> bool:
    """True iff p equals its own inverse.

    >>> is_involution((1, 3, 2)), is_involution((3, 1, 2))
    (True, False)
    """
    return p == inverse(p)


def is_alternating(p: Perm) -> bool:
    """True iff p begins with an ascent and ascents/descents alternate.

    Lengths -1, 0 and 1 are vacuously alternating.

    >>> is_alternating((1, 3, 2, 4)), is_alternating((2, 1, 4, 3))
    (True, False)
    """
    if p is ANTI:
        return True
    for i in range(len(p) - 1):
        if (p[i] < p[i + 1]) != (i % 2 == 0):
            return False
    return True


def is_doubly_alternating(p: Perm) -> bool:
    """True iff both p and its inverse are alternating."""
    return is_alternating(p) and is_alternating(inverse(p))


def preserves_parity(p: Perm) -> bool:
    """True iff p(j) is even exactly when j is even.

    >>> preserves_parity((5, 8, 7, 6, 9, 4, 3, 2, 1))
    True
    >>> preserves_parity((2, 1))
    False
    """
    if p is ANTI:
        return True
    return all((j % 2) == (v % 2) for j, v in enumerate(p, start=1))


def _require_parity(p: Perm) -> None:
    if not preserves_parity(p):
        raise NotParityPreserving(f"does not preserve parity: {p}")


def induced_odd(p: Perm) -> Perm:
    """The permutation p induces on its odd entries (at the odd positions).

    For the antipermutation this is EMPTY.

    >>> induced_odd((5, 8, 7, 6, 9, 4, 3, 2, 1))
    (3, 4, 5, 2, 1)
    """
    if p is ANTI:
        return EMPTY
    _require_parity(p)
    return tuple((v + 1) // 2 for v in p[0::2])


def induced_even(p: Perm) -> Perm:
    """The permutation p induces on its even entries (at the even positions).

    For the antipermutation this is ANTI again.

    >>> induced_even((5, 8, 7, 6, 9, 4, 3, 2, 1))
    (4, 3, 2, 1)
    """
    if p is ANTI:
        return ANTI
    _require_parity(p)
    return tuple(v // 2 for v in p[1::2])


def parse_perm(text: str) -> Perm:
    """Parse the textual permutation grammar.

    ``@`` is the antipermutation, ``e`` the empty permutation; otherwise
    whitespace-separated positive integers.  A compact digit string such as
    ``51324`` is accepted when it is unambiguous (forces n <= 9).

    >>> parse_perm("5 8 7 6 9 4 3 2 1")[:3]
    (5, 8, 7)
    >>> parse_perm("@") is ANTI, parse_perm("e")
    (True, ())
    >>> parse_perm("51324")
    (5, 1, 3, 2, 4)
    """
    s = text.strip()
    if s == "@":
        return ANTI
    if s == "e":
        return EMPTY
    tokens = s.split()
    if not tokens:
        raise MalformedPermutation(f"empty permutation text: {text!r}")
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        entries = tuple(int(ch) for ch in tokens[0])
    else:
        try:
            entries = tuple(int(t) for t in tokens)
        except ValueError:
            raise MalformedPermutation(f"cannot parse permutation: {text!r}") from None
    if not is_perm(entries):
        raise MalformedPermutation(f"not a permutation of 1..n: {text!r}")
    return entries


def format_perm(p: Perm) -> str:
    """Inverse of parse_perm: space-separated entries, ``e``, or ``@``.

    >>> format_perm((5, 1, 3, 2, 4)), format_perm(EMPTY), format_perm(ANTI)
    ('5 1 3 2 4', 'e', '@')
    """
    if p is ANTI:
        return "@"
    if not p:
        return "e"
    return " ".join(map(str, p))


def all_perms(n: int) -> Iterable[tuple[int, ...]]:
    """Iterate over all permutations of 1..n in lexicographic order."""
    import itertools

    return itertools.permutations(range(1, n + 1))
