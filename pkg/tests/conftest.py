import itertools

from hypothesis import strategies as st


def perms_of(n: int):
    return st.permutations(tuple(range(1, n + 1))).map(tuple)


def perms(max_n: int = 7, min_n: int = 0):
    return st.integers(min_n, max_n).flatmap(perms_of)


def all_perms(n: int):
    return itertools.permutations(range(1, n + 1))
