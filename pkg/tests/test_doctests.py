"""Run the usage examples embedded in the library docstrings."""

import doctest

import pytest

from snowleopard import aztec, baxter, catalan, entangle, motzkin, patterns, perm, threads

MODULES = [perm, patterns, baxter, threads, catalan, motzkin, entangle, aztec]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
