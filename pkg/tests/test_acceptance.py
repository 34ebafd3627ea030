"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every check is exact (set equality or integer equality); the stated
wall-clock budgets are asserted as well.  Run with ``pytest -v -s`` to see
the per-criterion lines.
"""

import itertools
import time
from collections import Counter

from snowleopard import aztec, baxter, catalan, entangle, motzkin, patterns, perm, threads

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


class budget:
    """Context manager asserting a wall-clock budget and printing a line."""

    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"{status} {self.name} ({elapsed:.2f}s of {self.seconds}s budget)")
        if exc_type is None:
            assert elapsed < self.seconds, f"{self.name}: {elapsed:.2f}s over budget"
        return False


def test_criterion_01_small_snow_leopard_tables():
    with budget("criterion 1: snow leopard permutations of lengths 1, 3, 5", 1.0):
        assert baxter.enumerate_slp(1) == {(1,)}
        assert baxter.enumerate_slp(3) == {(1, 2, 3), (3, 2, 1)}
        assert baxter.enumerate_slp(5) == {
            (1, 2, 3, 4, 5),
            (1, 4, 3, 2, 5),
            (3, 4, 5, 2, 1),
            (5, 4, 1, 2, 3),
            (5, 4, 3, 2, 1),
        }


def test_criterion_02_catalan_counts_to_length_19():
    with budget("criterion 2: |SL_(2n-1)| = C_n for n <= 10", 10.0):
        for n in range(0, 11):
            assert len(baxter.enumerate_slp(2 * n - 1)) == CATALAN[n], n


def test_criterion_03_oracle_equals_recursion():
    with budget("criterion 3: brute-force oracle = recursion, odd lengths <= 9", 60.0):
        for n in (1, 3, 5, 7, 9):
            assert baxter.snow_leopard_oracle_set(n) == baxter.enumerate_slp(n), n


def test_criterion_04_thread_count_table():
    with budget("criterion 4: thread counts for n = -1..6", 5.0):
        expected_even = [1, 1, 1, 2, 6, 17, 46, 128]
        expected_odd = [0, 1, 1, 2, 4, 9, 23, 63]
        for i, n in enumerate(range(-1, 7)):
            assert len(threads.even_threads(n)) == expected_even[i], n
            assert len(threads.odd_threads(n)) == expected_odd[i], n


def test_criterion_05_small_bijection_values():
    with budget("criterion 5: the 11 + 8 small path-to-thread values", 1.0):
        even_values = {
            "": perm.ANTI, "NE": (), "NENE": (1,), "NENENE": (2, 1),
            "NNNEEE": (1, 2), "NNNNEEEE": (1, 2, 3), "NNNENEEE": (1, 3, 2),
            "NNNEENEE": (2, 1, 3), "NNNEEENE": (3, 1, 2), "NENNNEEE": (2, 3, 1),
            "NENENENE": (3, 2, 1),
        }
        odd_values = {
            "": (), "NE": (1,), "NENE": (1, 2), "NNEE": (2, 1),
            "NNNEEE": (3, 2, 1), "NNENEE": (3, 1, 2), "NENNEE": (2, 3, 1),
            "NENENE": (1, 2, 3),
        }
        assert len(even_values) == 11 and len(odd_values) == 8
        for w, v in even_values.items():
            assert catalan.enne_to_even_thread(w) == v, w
        for w, v in odd_values.items():
            assert catalan.neen_to_odd_thread(w) == v, w


def test_criterion_06_round_trips():
    with budget("criterion 6: bijection round trips for n <= 8", 30.0):
        for n in range(0, 9):
            for w in catalan.enumerate_enne(n + 1):
                assert catalan.even_thread_to_enne(catalan.enne_to_even_thread(w)) == w
            for a in threads.even_threads(n):
                assert catalan.enne_to_even_thread(catalan.even_thread_to_enne(a)) == a
            for w in catalan.enumerate_neen(n):
                assert catalan.odd_thread_to_neen(catalan.neen_to_odd_thread(w)) == w
            for b in threads.odd_threads(n):
                assert catalan.neen_to_odd_thread(catalan.odd_thread_to_neen(b)) == b


def test_criterion_07_count_formula():
    with budget("criterion 7: closed-form path counts", 10.0):
        for n in range(1, 13):
            assert catalan.count_neen_formula(n, 0) == len(catalan.enumerate_neen(n)), n
        for n in range(1, 11):
            by_k = Counter(
                catalan.count_neen_factors(w) for w in catalan.enumerate_catalan(n)
            )
            for k, c in by_k.items():
                assert catalan.count_neen_formula(n, k) == c, (n, k)
            assert sum(catalan.count_neen_formula(n, k) for k in range(n)) == CATALAN[n]


def test_criterion_08_janus_tables_and_maps():
    with budget("criterion 8: Janus/peakless tables, bijectivity, map equality", 60.0):
        expected = [1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423]
        for i, n in enumerate(range(-1, 10)):
            jt = motzkin.janus_threads(n)
            ud = motzkin.enumerate_peakless(n + 1)
            assert len(jt) == expected[i] and len(ud) == expected[i], n
            images = set()
            for g in jt:
                w = motzkin.janus_to_peakless(g)
                assert w == motzkin.janus_to_peakless_direct(g), g
                images.add(w)
            assert images == set(ud), n
        assert motzkin.janus_to_peakless_direct((5, 7, 6, 8, 9, 4, 3, 1, 2)) == "UULDLDLULD"


def test_criterion_09_layered_partner_theorems():
    with budget("criterion 9: layered-thread partner sets and counts", 60.0):
        for n in range(1, 9):
            ident = tuple(range(1, n + 1))
            assert threads.entangled_partners(ident, side="odd") == \
                entangle.involutions_avoiding_3412(n - 1), n
        for n in range(0, 8):
            dec = tuple(range(n, 0, -1))
            want = frozenset(
                perm.complement(p) for p in entangle.involutions_avoiding_3412(n + 1)
            )
            assert threads.entangled_partners(dec, side="even") == want, n
        for total in range(1, 9):
            for m in range(1, total + 1):
                for spec in itertools.product(range(1, total + 1), repeat=m):
                    if sum(spec) != total:
                        continue
                    product = 1
                    for l in spec:
                        product *= motzkin.motzkin_number(l - 1)
                    odd = entangle.layered_odd_partners(spec)
                    assert len(odd) == product, spec
                    assert odd == threads.entangled_partners(
                        entangle.up_layered(spec), side="odd"
                    ), spec
                    even = entangle.layered_even_partners(spec)
                    assert even == threads.entangled_partners(
                        entangle.down_layered(spec), side="even"
                    ), spec
                    if m >= 2:
                        assert len(even) == product, spec
                    else:
                        assert len(even) == motzkin.motzkin_number(spec[0] + 1), spec


def test_criterion_10_partner_counts_are_motzkin_products():
    with budget("criterion 10: partner counts at thread lengths <= 9", 300.0):
        for n in range(0, 10):
            report = entangle.conjecture_check(n)
            assert report.ok, (n, report.failures[:3])


def test_criterion_11_aztec():
    with budget("criterion 11: tiling matrices, equivalence, assembly", 60.0):
        reference_lasm = ((0, 0, 0, 1), (1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0))
        reference_sasm = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
        hits = [
            t
            for t in aztec.enumerate_tilings(3)
            if aztec.lasm(t) == reference_lasm and aztec.sasm(t) == reference_sasm
        ]
        assert len(hits) == 1
        assert baxter.is_complete_baxter(aztec.assemble_complete_baxter(hits[0]))
        for order in (1, 2, 3, 4):
            for t in aztec.enumerate_tilings(order):
                large, small = aztec.lasm(t), aztec.sasm(t)
                assert aztec.is_asm(large) and aztec.is_asm(small)
                if not aztec.is_permutation_matrix(large):
                    continue
                p = aztec.matrix_permutation(large)
                # the equivalence: the small matrix is a permutation matrix
                # exactly when the large one carries a Baxter permutation,
                # and exactly then the assembly is a complete Baxter word
                assert aztec.is_permutation_matrix(small) == patterns.is_reduced_baxter(p)
                if aztec.is_permutation_matrix(small):
                    w = aztec.assemble_complete_baxter(t)
                    assert baxter.is_complete_baxter(w)
                    assert baxter.reduce(w) == p
                    assert baxter.anti_of(w) == aztec.matrix_permutation(small)


def test_criterion_12_counting_properties():
    with budget("criterion 12: alternating-family counts and compatibility", 120.0):
        # doubly alternating Baxter permutations: C_k of length 2k and 2k+1
        for m in range(0, 10):
            count = sum(
                1
                for p in itertools.permutations(range(1, m + 1))
                if perm.is_alternating(p)
                and perm.is_alternating(perm.inverse(p))
                and patterns.is_reduced_baxter(p)
            )
            assert count == CATALAN[m // 2], m
        # alternating Baxter permutations: C_k^2 at 2k, C_k C_(k+1) at 2k+1
        for m in range(0, 9):
            count = sum(
                1
                for p in itertools.permutations(range(1, m + 1))
                if perm.is_alternating(p) and patterns.is_reduced_baxter(p)
            )
            k = m // 2
            want = CATALAN[k] ** 2 if m % 2 == 0 else CATALAN[k] * CATALAN[k + 1]
            assert count == want, m
        # compatibility is a bijection onto the snow leopard permutations
        for n in range(1, 9):
            image = set()
            for s in baxter.doubly_alternating_baxter(n):
                partners = [
                    p
                    for p in itertools.permutations(range(1, n))
                    if baxter.is_complete_baxter(baxter.interleave(s, p))
                ]
                assert len(partners) == 1, (n, s)
                image.add(partners[0])
            assert image == set(baxter.enumerate_slp(n - 1)), n
