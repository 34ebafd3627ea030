"""Vincular and classical pattern tests against raw index-condition oracles."""

import itertools

import pytest
from hypothesis import given

from conftest import all_perms, perms
from snowleopard.patterns import (
    PATTERN_2_14_3,
    PATTERN_2_41_3,
    PATTERN_3_14_2,
    PATTERN_3_41_2,
    VincularPattern,
    avoids_3412,
    contains_vincular,
    is_anti_baxter,
    is_reduced_baxter,
)
from snowleopard.perm import ANTI, EMPTY, complement


def brute_vincular(p, pattern):
    """Definitional check: indices i < j < j+1 < k <= n realizing the
    pattern's order relations, by exhaustive search."""
    n = len(p)
    pat = pattern.pattern if isinstance(pattern, VincularPattern) else pattern
    for j in range(1, n - 2):
        for i in range(j):
            for k in range(j + 2, n):
                values = (p[i], p[j], p[j + 1], p[k])
                ranks = sorted(values)
                if tuple(ranks.index(v) + 1 for v in values) == pat:
                    return True
    return False


def brute_3412(p):
    for c in itertools.combinations(p, 4):
        r = sorted(c)
        if tuple(r.index(v) + 1 for v in c) == (3, 4, 1, 2):
            return True
    return False


def test_vincular_examples():
    assert contains_vincular((4, 6, 1, 3, 7, 5, 2), PATTERN_3_14_2)
    assert not contains_vincular((2, 1, 7, 4, 6, 5, 3), PATTERN_3_14_2)
    assert not contains_vincular((2, 1, 7, 4, 6, 5, 3), PATTERN_2_41_3)
    for pat in (PATTERN_3_14_2, PATTERN_2_41_3, PATTERN_3_41_2, PATTERN_2_14_3):
        assert not contains_vincular((1, 2, 3, 4), pat)


def test_occurrence_may_end_at_last_position():
    # the witness 6 3 7 5 in 4613752 uses k = n
    p = (4, 6, 1, 3, 7, 5, 2)
    assert brute_vincular(p, PATTERN_3_14_2)
    assert contains_vincular(p, PATTERN_3_14_2)


def test_baxter_examples():
    assert is_reduced_baxter((5, 1, 3, 2, 4))
    assert not is_reduced_baxter((4, 6, 1, 3, 7, 5, 2))
    assert is_anti_baxter((4, 1, 2, 3))
    assert is_reduced_baxter(EMPTY) and is_reduced_baxter(ANTI)
    assert is_anti_baxter(EMPTY) and is_anti_baxter(ANTI)


@pytest.mark.parametrize("n", range(0, 8))
def test_matcher_agrees_with_brute_force(n):
    pats = (PATTERN_3_14_2, PATTERN_2_41_3, PATTERN_3_41_2, PATTERN_2_14_3)
    for p in all_perms(n):
        for pat in pats:
            assert contains_vincular(p, pat) == brute_vincular(p, pat), (p, pat)


def test_anti_baxter_counts_against_raw_scan():
    # self-consistency between the generic matcher and the raw index checker
    for n in range(0, 9):
        fast = sum(1 for p in all_perms(n) if is_anti_baxter(p))
        raw = sum(
            1
            for p in all_perms(n)
            if not brute_vincular(p, PATTERN_3_41_2)
            and not brute_vincular(p, PATTERN_2_14_3)
        )
        assert fast == raw


def test_reduced_baxter_equals_projection_definition():
    # the vincular characterization agrees with the defining property: p of
    # length m is reduced Baxter iff some complete Baxter permutation of
    # length 2m-1 induces p on its odd entries
    import itertools

    from snowleopard.baxter import interleave, is_complete_baxter

    for m in range(1, 8):
        for p in all_perms(m):
            arises = any(
                is_complete_baxter(interleave(p, q))
                for q in itertools.permutations(range(1, m))
            )
            assert arises == is_reduced_baxter(p), p


@given(perms(7))
def test_closed_under_complement(p):
    assert is_reduced_baxter(p) == is_reduced_baxter(complement(p))
    assert is_anti_baxter(p) == is_anti_baxter(complement(p))


def test_avoids_3412_examples():
    assert not avoids_3412((3, 4, 1, 2))
    assert avoids_3412((4, 3, 2, 1))
    assert not avoids_3412((5, 6, 3, 4, 1, 2))
    assert avoids_3412(EMPTY) and avoids_3412(ANTI)


@pytest.mark.parametrize("n", range(0, 8))
def test_avoids_3412_against_brute_force(n):
    for p in all_perms(n):
        assert avoids_3412(p) == (not brute_3412(p)), p


def test_vincular_pattern_validation():
    with pytest.raises(ValueError):
        VincularPattern((1, 2, 3, 3))
    with pytest.raises(ValueError):
        VincularPattern((1, 2, 3, 4), bonded=(1, 2))
