"""Pattern containment tests behind the Baxter-family characterizations.

The four vincular patterns used here all have length 4 with the middle two
positions bonded (required adjacent in the host).  A permutation is a reduced
Baxter permutation iff it avoids 3-14-2 and 2-41-3, and anti-Baxter iff it
avoids 3-41-2 and 2-14-3.  The index condition for an occurrence of, say,
3-14-2 in p is: positions i < j < j+1 < k <= n with
p(j) < p(k) < p(i) < p(j+1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm import ANTI, Perm


@dataclass(frozen=True)
class VincularPattern:
    """A length-4 pattern whose positions 2 and 3 must appear adjacently."""

    pattern: tuple[int, int, int, int]
    bonded: tuple[int, int] = (2, 3)

    def __post_init__(self) -> None:
        if sorted(self.pattern) != [1, 2, 3, 4]:
            raise ValueError(f"pattern must be a permutation of 1..4: {self.pattern}")
        if self.bonded != (2, 3):
            raise ValueError("only the middle pair (2, 3) may be bonded")


PATTERN_3_14_2 = VincularPattern((3, 1, 4, 2))
PATTERN_2_41_3 = VincularPattern((2, 4, 1, 3))
PATTERN_3_41_2 = VincularPattern((3, 4, 1, 2))
PATTERN_2_14_3 = VincularPattern((2, 1, 4, 3))

VINCULAR_BY_NAME = {
    "3-14-2": PATTERN_3_14_2,
    "2-41-3": PATTERN_2_41_3,
    "3-41-2": PATTERN_3_41_2,
    "2-14-3": PATTERN_2_14_3,
}


def contains_vincular(p: Perm, pat: VincularPattern | tuple[int, int, int, int]) -> bool:
    """True iff p contains the pattern with its middle pair adjacent.

    For each adjacent host pair (j, j+1) matching the bonded pair's ascent or
    descent, a left witness i < j and right witness k > j+1 exist iff the
    extremal qualifying left value can be beaten by some qualifying right
    value, so each j costs one scan left and one scan right.

    >>> contains_vincular((4, 6, 1, 3, 7, 5, 2), PATTERN_3_14_2)
    True
    >>> contains_vincular((2, 1, 7, 4, 6, 5, 3), PATTERN_3_14_2)
    False
    """
    a, b, c, d = pat.pattern if isinstance(pat, VincularPattern) else pat
    if p is ANTI:
        return False
    n = len(p)
    if n < 4:
        return False
    bond_ascent = b < c
    i_below_j, i_below_j1 = a < b, a < c
    k_below_j, k_below_j1 = d < b, d < c
    i_below_k = a < d
    for j in range(1, n - 2):
        vj, vj1 = p[j], p[j + 1]
        if (vj < vj1) != bond_ascent:
            continue
        best = None
        for i in range(j):
            v = p[i]
            if (v < vj) == i_below_j and (v < vj1) == i_below_j1:
                if best is None or (v < best if i_below_k else v > best):
                    best = v
        if best is None:
            continue
        for k in range(j + 2, n):
            v = p[k]
            if (v < vj) == k_below_j and (v < vj1) == k_below_j1:
                if (best < v) if i_below_k else (v < best):
                    return True
    return False


def is_reduced_baxter(p: Perm) -> bool:
    """True iff p avoids the vincular patterns 3-14-2 and 2-41-3.

    >>> is_reduced_baxter((5, 1, 3, 2, 4))
    True
    >>> is_reduced_baxter((4, 6, 1, 3, 7, 5, 2))
    False
    """
    return not (contains_vincular(p, PATTERN_3_14_2) or contains_vincular(p, PATTERN_2_41_3))


def is_anti_baxter(p: Perm) -> bool:
    """True iff p avoids the vincular patterns 3-41-2 and 2-14-3.

    >>> is_anti_baxter((4, 1, 2, 3))
    True
    """
    return not (contains_vincular(p, PATTERN_3_41_2) or contains_vincular(p, PATTERN_2_14_3))


def avoids_3412(p: Perm) -> bool:
    """True iff p has no (not necessarily adjacent) occurrence of 3412.

    For each candidate position j of the pattern's 4, the best 3 is the
    largest earlier value below p(j); an occurrence then needs an ascent pair
    below that value somewhere to the right.

    >>> avoids_3412((3, 4, 1, 2)), avoids_3412((4, 3, 2, 1))
    (False, True)
    """
    if p is ANTI:
        return True
    n = len(p)
    for j in range(1, n - 2):
        vj = p[j]
        top = 0
        for i in range(j):
            v = p[i]
            if top < v < vj:
                top = v
        if top < 3:
            continue
        lowest = n + 1
        for k in range(j + 1, n):
            v = p[k]
            if v < top:
                if lowest < v:
                    return False
                if v < lowest:
                    lowest = v
    return True
