"""Even and odd threads of snow leopard permutations, and their entanglement.

An even (resp. odd) thread is the permutation a snow leopard permutation of
odd length induces on its even (resp. odd) entries.  The sets ET_n and OT_n
are built bottom-up from the mutual recursion

    even:  a = c(b1) (-) 1 (-) a1      (b1 an odd thread, a1 an even thread)
    odd:   b = (1 (+) c(a2) (+) 1) (-) b2

whose base cases are ET_{-1} = {ANTI}, OT_{-1} = {} and OT_0 = {EMPTY}.
The projection from the snow leopard permutations themselves is kept as an
independent oracle for tests.

An even thread of length n and an odd thread of length n+1 are entangled
when one snow leopard permutation of length 2n+1 induces both.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .baxter import enumerate_slp
from .errors import LengthMismatch, NotEvenThread, NotOddThread
from .perm import (
    ANTI,
    EMPTY,
    ONE,
    Perm,
    complement,
    direct_sum,
    induced_even,
    induced_odd,
    length,
    skew_sum,
    standardize,
)


@lru_cache(maxsize=None)
def even_threads(n: int) -> frozenset[Perm]:
    """ET_n, the even threads of length n >= -1."""
    if n < -1:
        raise ValueError(f"length must be >= -1: {n}")
    if n == -1:
        return frozenset({ANTI})
    out = set()
    for k in range(0, n + 1):
        for b1 in odd_threads(k):
            head = skew_sum(complement(b1), ONE)
            for a1 in even_threads(n - k - 1):
                out.add(skew_sum(head, a1))
    return frozenset(out)


@lru_cache(maxsize=None)
def odd_threads(n: int) -> frozenset[Perm]:
    """OT_n, the odd threads of length n >= -1.  OT_{-1} is empty."""
    if n < -1:
        raise ValueError(f"length must be >= -1: {n}")
    if n == -1:
        return frozenset()
    if n == 0:
        return frozenset({EMPTY})
    out = set()
    for b2 in odd_threads(n - 1):
        out.add(skew_sum(ONE, b2))
    for k in range(0, n - 1):
        for a2 in even_threads(k):
            head = direct_sum(direct_sum(ONE, complement(a2)), ONE)
            for b2 in odd_threads(n - k - 2):
                out.add(skew_sum(head, b2))
    return frozenset(out)


@dataclass(frozen=True)
class ThreadSets:
    """The even and odd threads of one length."""

    n: int
    even_threads: frozenset[Perm]
    odd_threads: frozenset[Perm]


def thread_sets(n: int) -> ThreadSets:
    return ThreadSets(n=n, even_threads=even_threads(n), odd_threads=odd_threads(n))


def even_threads_from_slp(n: int) -> frozenset[Perm]:
    """Oracle route: project every snow leopard permutation of length 2n+1."""
    return frozenset(induced_even(p) for p in enumerate_slp(2 * n + 1))


def odd_threads_from_slp(n: int) -> frozenset[Perm]:
    """Oracle route: project every snow leopard permutation of length 2n-1."""
    if n == -1:
        return frozenset()
    return frozenset(induced_odd(p) for p in enumerate_slp(2 * n - 1))


def is_even_thread(p: Perm) -> bool:
    return p in even_threads(length(p))


def is_odd_thread(p: Perm) -> bool:
    return p in odd_threads(length(p))


def odd_decompose(b: Perm) -> tuple[Perm, Perm]:
    """The unique pair (a2, b2) with b = (1 (+) c(a2) (+) 1) (-) b2.

    The first entry of b corresponds to the first 1 and the largest entry to
    the second 1, which forces the split.

    >>> odd_decompose((4, 6, 5, 7, 3, 1, 2))
    ((1, 2), (3, 1, 2))
    >>> odd_decompose((7, 2, 4, 3, 5, 6, 1))
    (@, (2, 4, 3, 5, 6, 1))
    """
    m = length(b)
    if m < 1 or not is_odd_thread(b):
        raise NotOddThread(f"not an odd thread of positive length: {b}")
    if b[0] == m:
        return ANTI, b[1:]
    t = b.index(m) + 1
    block = standardize(b[:t])
    a2 = complement(tuple(v - 1 for v in block[1:-1]))
    return a2, b[t:]


def eligible_connectors(a: Perm) -> list[int]:
    """Positions j where c(a)(j) is both a fixed point and a left-to-right
    maximum of c(a); these are the only places the separating 1 of a
    decomposition of an even thread can sit.

    >>> eligible_connectors((3, 5, 4, 6, 2, 1))
    [5, 6]
    >>> eligible_connectors((6, 5, 3, 4, 2, 1))
    [1, 2, 5, 6]
    """
    if a is ANTI:
        return []
    c = complement(a)
    out = []
    top = 0
    for j, v in enumerate(c, start=1):
        if v > top:
            top = v
            if v == j:
                out.append(j)
    return out


def _split_even_at(a: tuple[int, ...], k: int) -> tuple[Perm, Perm] | None:
    """Candidate (b1, a1) with a = c(b1) (-) 1 (-) a1 and |b1| = k, by shape
    alone; None when the value layout rules the split out."""
    n = len(a)
    if k == n:
        return complement(a), ANTI
    if a[k] != n - k:
        return None
    if k and min(a[:k]) <= n - k:
        return None
    b1 = complement(tuple(v - (n - k) for v in a[:k]))
    return b1, a[k + 1 :]


def even_decompositions(a: Perm) -> list[tuple[Perm, Perm]]:
    """All decompositions a = c(b1) (-) 1 (-) a1 whose separating 1 sits at an
    eligible connector, ordered by |b1| ascending.

    When a has no eligible connectors the connectorless form (c(a), ANTI) is
    the unique decomposition (the witnessing snow leopard permutation starts
    with 1 and the separating 1 is absorbed).

    >>> even_decompositions((6, 5, 3, 4, 2, 1))
    [((), (5, 3, 4, 2, 1)), ((1,), (3, 4, 2, 1)), ((1, 2, 4, 3, 5), ())]
    >>> even_decompositions(EMPTY)
    [((), @)]
    """
    n = length(a)
    if n < 0 or not is_even_thread(a):
        raise NotEvenThread(f"not an even thread of nonnegative length: {a}")
    out = []
    for pos in eligible_connectors(a):
        parts = _split_even_at(a, pos - 1)
        if parts is None:
            continue
        b1, a1 = parts
        if b1 in odd_threads(pos - 1) and a1 in even_threads(n - pos):
            out.append((b1, a1))
    if not out:
        b1 = complement(a)
        if b1 in odd_threads(n):
            out.append((b1, ANTI))
    return out


def leftmost_decomposition(a: Perm) -> tuple[Perm, Perm]:
    """The decomposition whose separating 1 sits at the leftmost eligible
    connector; always exists for an even thread.

    >>> leftmost_decomposition((6, 5, 3, 4, 2, 1))
    ((), (5, 3, 4, 2, 1))
    >>> leftmost_decomposition((1, 2))
    ((2, 1), @)
    """
    decs = even_decompositions(a)
    if not decs:
        raise NotEvenThread(f"no decomposition found (not an even thread?): {a}")
    return decs[0]


@dataclass(frozen=True)
class EntanglementGraph:
    """Bipartite graph on ET_n x OT_{n+1} with edges from shared parents."""

    n: int
    edges: tuple[tuple[Perm, Perm], ...]


@lru_cache(maxsize=None)
def _graph_maps(n: int) -> tuple[dict[Perm, frozenset[Perm]], dict[Perm, frozenset[Perm]]]:
    by_even: dict[Perm, set[Perm]] = {}
    by_odd: dict[Perm, set[Perm]] = {}
    for p in enumerate_slp(2 * n + 1):
        a, b = induced_even(p), induced_odd(p)
        by_even.setdefault(a, set()).add(b)
        by_odd.setdefault(b, set()).add(a)
    return (
        {a: frozenset(bs) for a, bs in by_even.items()},
        {b: frozenset(as_) for b, as_ in by_odd.items()},
    )


def entanglement_graph(n: int) -> EntanglementGraph:
    """The full entanglement graph at level n >= -1, edges sorted."""
    by_even, _ = _graph_maps(n)
    edges = sorted(
        ((a, b) for a, bs in by_even.items() for b in bs),
        key=lambda e: (_sort_key(e[0]), _sort_key(e[1])),
    )
    return EntanglementGraph(n=n, edges=tuple(edges))


def _sort_key(p: Perm) -> tuple:
    return (-1,) if p is ANTI else p


def entangled(a: Perm, b: Perm) -> bool:
    """True iff some snow leopard permutation induces even thread a and odd
    thread b.  Requires |b| = |a| + 1.

    >>> entangled((4, 3, 2, 1), (3, 4, 5, 2, 1))
    True
    """
    if length(b) != length(a) + 1:
        raise LengthMismatch(f"need |odd| = |even| + 1, got {length(b)} and {length(a)}")
    by_even, _ = _graph_maps(length(a))
    return b in by_even.get(a, frozenset())


def entangled_partners(p: Perm, side: str) -> frozenset[Perm]:
    """Partners of p in the entanglement graph.

    side='even' treats p as an even thread and returns its odd partners;
    side='odd' treats p as an odd thread and returns its even partners.

    >>> sorted(entangled_partners((2, 1), side='even'))
    [(1, 2, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    if side == "even":
        by_even, _ = _graph_maps(length(p))
        return by_even.get(p, frozenset())
    if side == "odd":
        _, by_odd = _graph_maps(length(p) - 1)
        return by_odd.get(p, frozenset())
    raise ValueError(f"side must be 'even' or 'odd': {side!r}")
