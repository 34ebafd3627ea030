"""Janus threads and peakless Motzkin paths.

A Motzkin path of length n is a word over {U, D, L} with matched U/D letters
and no prefix dipping below the axis; it is peakless when no U is
immediately followed by a D.  A Janus thread is a permutation that is both
an even thread and an odd thread (with the antipermutation adjoined at
length -1).  Janus threads of length n biject with peakless Motzkin paths
of length n+1, by a recursion mirroring the two Janus decompositions and
equally by a direct three-step rewriting procedure; both maps live here and
agree everywhere.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import NotJanusThread, NotPeakless
from .perm import ANTI, EMPTY, Perm, complement, length, standardize
from .threads import even_threads, odd_threads


@lru_cache(maxsize=None)
def motzkin_number(n: int) -> int:
    """M_n via M_0 = 1, M_n = M_{n-1} + sum_{k=2}^{n} M_{k-2} M_{n-k}.

    >>> [motzkin_number(n) for n in range(6)]
    [1, 1, 2, 4, 9, 21]
    """
    if n < 0:
        raise ValueError(f"need n >= 0: {n}")
    if n == 0:
        return 1
    return motzkin_number(n - 1) + sum(
        motzkin_number(k - 2) * motzkin_number(n - k) for k in range(2, n + 1)
    )


@lru_cache(maxsize=None)
def peakless_count(n: int) -> int:
    """|UD_n| via a_0 = a_1 = 1, a_n = a_{n-1} + sum_{k=1}^{n-2} a_k a_{n-2-k}.

    >>> [peakless_count(n) for n in range(11)]
    [1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423]
    """
    if n < 0:
        raise ValueError(f"need n >= 0: {n}")
    if n <= 1:
        return 1
    return peakless_count(n - 1) + sum(
        peakless_count(k) * peakless_count(n - 2 - k) for k in range(1, n - 1)
    )


def is_motzkin_word(w: str) -> bool:
    """Check letters, the prefix condition, and the final return to 0.

    >>> is_motzkin_word("ULDLL"), is_motzkin_word("UDL"), is_motzkin_word("UL")
    (True, True, False)
    """
    h = 0
    for ch in w:
        if ch == "U":
            h += 1
        elif ch == "D":
            h -= 1
        elif ch != "L":
            return False
        if h < 0:
            return False
    return h == 0


def is_peakless(w: str) -> bool:
    """True iff the word has no adjacent UD factor."""
    return "UD" not in w


@lru_cache(maxsize=None)
def enumerate_motzkin(n: int) -> frozenset[str]:
    """All Motzkin paths of length n."""
    return _enumerate(n, peakless=False)


@lru_cache(maxsize=None)
def enumerate_peakless(n: int) -> frozenset[str]:
    """UD_n, the peakless Motzkin paths of length n."""
    return _enumerate(n, peakless=True)


def _enumerate(n: int, peakless: bool) -> frozenset[str]:
    if n < 0:
        raise ValueError(f"need n >= 0: {n}")
    out: list[str] = []

    def rec(w: str, h: int) -> None:
        rest = n - len(w)
        if rest == 0:
            if h == 0:
                out.append(w)
            return
        if rest >= h + 1:
            rec(w + "L", h)
        if rest >= h + 2:
            rec(w + "U", h + 1)
        if h and not (peakless and w[-1:] == "U"):
            rec(w + "D", h - 1)

    rec("", 0)
    return frozenset(out)


def decompose_peakless(w: str) -> tuple[str, tuple[str, ...]]:
    """Split a nonempty peakless Motzkin path.

    Returns ('level', (a,)) when w = L a, else ('arch', (a, b)) when
    w = U a D b with the D closing the initial U; peaklessness forces the
    arch interior a to be nonempty.

    >>> decompose_peakless("LLULD")
    ('level', ('LULD',))
    >>> decompose_peakless("ULLDL")
    ('arch', ('LL', 'L'))
    """
    if not w or not is_motzkin_word(w):
        raise NotPeakless(f"not a nonempty Motzkin path: {w!r}")
    if not is_peakless(w):
        raise NotPeakless(f"path has a peak: {w!r}")
    if w[0] == "L":
        return "level", (w[1:],)
    h = 0
    for i, ch in enumerate(w):
        h += 1 if ch == "U" else -1 if ch == "D" else 0
        if h == 0:
            return "arch", (w[1:i], w[i + 1 :])
    raise NotPeakless(f"unbalanced path: {w!r}")


@lru_cache(maxsize=None)
def janus_threads(n: int) -> frozenset[Perm]:
    """JT_n = ET_n intersected with OT_n, with JT_{-1} = {ANTI}.

    >>> sorted(len(janus_threads(n)) for n in range(-1, 5))
    [1, 1, 1, 2, 4, 8]
    """
    if n == -1:
        return frozenset({ANTI})
    return even_threads(n) & odd_threads(n)


def is_janus_thread(p: Perm) -> bool:
    return p in janus_threads(length(p))


def janus_decompose(g: Perm) -> tuple[str, tuple[Perm, ...]]:
    """Split a Janus thread of positive length.

    When g begins with its largest entry: ('largest-first', (g1,)) with
    g = 1 (-) g1.  Otherwise ('split', (g1, g2)) with
    g = (1 (+) c(g1) (+) 1) (-) 1 (-) g2, where g1 has nonnegative length
    and g2 may be the antipermutation.  All parts are Janus threads.

    >>> janus_decompose((2, 1))
    ('largest-first', ((1,),))
    >>> janus_decompose((2, 3, 1))
    ('split', ((), ()))
    """
    m = length(g)
    if m < 1 or not is_janus_thread(g):
        raise NotJanusThread(f"not a Janus thread of positive length: {g}")
    if g[0] == m:
        return "largest-first", (g[1:],)
    t = g.index(m) + 1
    block = standardize(g[:t])
    g1 = complement(tuple(v - 1 for v in block[1:-1]))
    if t == m:
        return "split", (g1, ANTI)
    return "split", (g1, g[t + 1 :])


@lru_cache(maxsize=None)
def janus_to_peakless(g: Perm) -> str:
    """The recursive bijection JT_n -> UD_{n+1}.

    Bases: ANTI -> empty path, EMPTY -> L; then L k(g1) for the
    largest-first form and U k(g1) D k(g2) for the split form.

    >>> janus_to_peakless((1,))
    'LL'
    """
    if g is ANTI:
        return ""
    if g == EMPTY:
        return "L"
    form, parts = janus_decompose(g)
    if form == "largest-first":
        return "L" + janus_to_peakless(parts[0])
    g1, g2 = parts
    return "U" + janus_to_peakless(g1) + "D" + janus_to_peakless(g2)


def consecutive_step_word(g: tuple[int, ...]) -> str:
    """Steps 1 and 2 of the direct map: write n+1, g, 0 and compare each
    adjacent pair, writing L for consecutive integers (either order), else U
    for an ascent and D for a descent.

    >>> consecutive_step_word((5, 7, 6, 8, 9, 4, 3, 1, 2))
    'DULULDLDLD'
    """
    seq = (len(g) + 1,) + g + (0,)
    letters = []
    for x, y in zip(seq, seq[1:]):
        if abs(x - y) == 1:
            letters.append("L")
        elif x < y:
            letters.append("U")
        else:
            letters.append("D")
    return "".join(letters)


def janus_to_peakless_direct(g: Perm) -> str:
    """The direct three-step description of the same bijection: build the
    comparison word, then flip every odd-numbered letter of its U/D
    subsequence (counting from 1).

    >>> janus_to_peakless_direct((5, 7, 6, 8, 9, 4, 3, 1, 2))
    'UULDLDLULD'
    """
    if g is ANTI:
        return ""
    if g == EMPTY:
        return "L"
    if not is_janus_thread(g):
        raise NotJanusThread(f"not a Janus thread: {g}")
    letters = list(consecutive_step_word(g))
    seen = 0
    for i, ch in enumerate(letters):
        if ch in "UD":
            seen += 1
            if seen % 2:
                letters[i] = "D" if ch == "U" else "U"
    return "".join(letters)
