"""Janus threads, peakless Motzkin paths, and the two descriptions of the
bijection between them."""

import pytest

from snowleopard.errors import NotJanusThread, NotPeakless
from snowleopard.motzkin import (
    consecutive_step_word,
    decompose_peakless,
    enumerate_motzkin,
    enumerate_peakless,
    is_janus_thread,
    is_motzkin_word,
    is_peakless,
    janus_decompose,
    janus_threads,
    janus_to_peakless,
    janus_to_peakless_direct,
    motzkin_number,
    peakless_count,
)
from snowleopard.perm import ANTI, EMPTY
from snowleopard.threads import even_threads, odd_threads

TABLE_JT = [1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423]  # n = -1 .. 9
TABLE_UD = [1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423]  # n = 0 .. 10


def test_motzkin_numbers():
    assert motzkin_number(0) == 1
    assert motzkin_number(3) == 4
    assert [motzkin_number(n) for n in range(9)] == [1, 1, 2, 4, 9, 21, 51, 127, 323]
    for n in range(0, 11):
        assert motzkin_number(n) == len(enumerate_motzkin(n))


def test_peakless_counts_and_recurrence():
    assert peakless_count(2) == 1  # empty sum, a_2 = a_1
    assert peakless_count(4) == 4
    assert peakless_count(10) == 423
    for n, c in enumerate(TABLE_UD):
        assert len(enumerate_peakless(n)) == c
        assert peakless_count(n) == c
    for n in range(0, 15):
        assert peakless_count(n) == len(enumerate_peakless(n))
    for n in range(0, 12):
        assert peakless_count(n) == sum(1 for w in enumerate_motzkin(n) if is_peakless(w))


def test_peakless_listing_length_five():
    expected = {"LLLLL", "LLULD", "LULDL", "ULDLL", "LULLD", "ULLDL", "ULLLD", "UULDD"}
    assert enumerate_peakless(5) == frozenset(expected)


def test_motzkin_word_predicates():
    assert is_motzkin_word("ULDLL") and is_motzkin_word("")
    assert not is_motzkin_word("UL") and not is_motzkin_word("DU")
    assert not is_motzkin_word("UXD")
    assert is_peakless("ULLD") and not is_peakless("LUDL")


def test_decompose_peakless_examples():
    assert decompose_peakless("LLULD") == ("level", ("LULD",))
    assert decompose_peakless("ULLDL") == ("arch", ("LL", "L"))
    assert decompose_peakless("L") == ("level", ("",))
    with pytest.raises(NotPeakless):
        decompose_peakless("")
    with pytest.raises(NotPeakless):
        decompose_peakless("UDL")


def test_decompose_peakless_reassembles():
    for n in range(1, 10):
        for w in enumerate_peakless(n):
            form, parts = decompose_peakless(w)
            if form == "level":
                assert "L" + parts[0] == w
                assert parts[0] in enumerate_peakless(n - 1)
            else:
                a, b = parts
                assert a and "U" + a + "D" + b == w
                assert a in enumerate_peakless(len(a))
                assert b in enumerate_peakless(len(b))


def test_janus_counts():
    for n in range(-1, 10):
        assert len(janus_threads(n)) == TABLE_JT[n + 1], n


def test_janus_membership():
    assert is_janus_thread(ANTI)
    assert is_janus_thread((1,))
    # the smallest odd thread that is not an even thread
    p = (3, 4, 1, 2)
    assert p in odd_threads(4)
    assert p not in even_threads(4)
    assert not is_janus_thread(p)


def test_janus_decompose_forms():
    assert janus_decompose((2, 1)) == ("largest-first", ((1,),))
    assert janus_decompose((2, 3, 1)) == ("split", (EMPTY, EMPTY))
    assert janus_decompose((1, 2, 3)) == ("split", ((1,), ANTI))
    with pytest.raises(NotJanusThread):
        janus_decompose((2, 1, 3))
    with pytest.raises(NotJanusThread):
        janus_decompose((3, 4, 1, 2))


def test_janus_decompose_closure():
    for n in range(1, 9):
        for g in janus_threads(n):
            form, parts = janus_decompose(g)
            for part in parts:
                assert is_janus_thread(part), (g, part)
            if form == "largest-first":
                assert g[0] == n
            else:
                assert g[0] != n


def test_map_bases_and_small_values():
    assert janus_to_peakless(ANTI) == ""
    assert janus_to_peakless(EMPTY) == "L"
    assert janus_to_peakless((1,)) == "LL"
    assert janus_to_peakless_direct(ANTI) == ""
    assert janus_to_peakless_direct(EMPTY) == "L"
    assert janus_to_peakless_direct((1,)) == "LL"


def test_direct_map_worked_example():
    g = (5, 7, 6, 8, 9, 4, 3, 1, 2)
    assert consecutive_step_word(g) == "DULULDLDLD"
    assert janus_to_peakless_direct(g) == "UULDLDLULD"
    assert janus_to_peakless(g) == "UULDLDLULD"


def test_maps_agree_and_are_bijective():
    for n in range(-1, 10):
        images = set()
        for g in janus_threads(n):
            w = janus_to_peakless(g)
            assert w == janus_to_peakless_direct(g), g
            assert is_motzkin_word(w) and is_peakless(w)
            images.add(w)
        assert images == set(enumerate_peakless(n + 1)), n
        assert len(images) == len(janus_threads(n))


def test_direct_map_rejects_non_janus():
    with pytest.raises(NotJanusThread):
        janus_to_peakless_direct((3, 4, 1, 2))
