"""Aztec diamond tilings and their pair of alternating-sign matrices.

The order-n Aztec diamond is modeled on cell coordinates (row, col) with
rows 1..2n, row r holding the 2*min(r, 2n+1-r) centered cells.  Lattice
vertices carry two matrices: the retained vertices split into a black
(n+1) x (n+1) grid and a white n x n grid along the two diagonal
sublattices.  A vertex has degree 4 minus the number of domino waists
(shared inner edges) ending at it; degree 4/3/2 maps to 1/0/-1 on the black
grid (the large ASM) and to -1/0/1 on the white grid (the small ASM).

When both matrices are permutation matrices, the large one is the matrix of
a reduced Baxter permutation, the small one its compatible anti-Baxter
partner, and placing the black entries on the odd-odd positions and the
white entries on the even-even positions of a (2n+1) x (2n+1) matrix (zeros
at the gray domino centers) yields a complete Baxter permutation.  A large
permutation matrix alone does not suffice: orders >= 3 admit tilings whose
large matrix is the permutation matrix of a non-Baxter permutation, and
exactly then the small matrix has a -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .baxter import is_complete_baxter
from .errors import NotPermutationLASM, OrderTooLarge, SnowLeopardError
from .patterns import is_reduced_baxter
from .perm import Perm

Cell = tuple[int, int]
Domino = tuple[Cell, Cell]
Matrix = tuple[tuple[int, ...], ...]

MAX_ORDER = 5


@dataclass(frozen=True)
class DominoTiling:
    """A full tiling of the order-n Aztec diamond by dominoes.

    Each domino is a pair of adjacent cells, the lexicographically smaller
    cell first.
    """

    order: int
    dominoes: frozenset[Domino]


def diamond_cells(order: int) -> list[Cell]:
    """The cells of the order-n diamond in row-major scan order."""
    n = order
    return [
        (r, c)
        for r in range(1, 2 * n + 1)
        for c in range(n - min(r, 2 * n + 1 - r) + 1, n + min(r, 2 * n + 1 - r) + 1)
    ]


@lru_cache(maxsize=None)
def enumerate_tilings(order: int) -> tuple[DominoTiling, ...]:
    """All 2^(n(n+1)/2) tilings, by backtracking over cells in scan order,
    sorted by their serialized form.
    """
    if not 1 <= order <= MAX_ORDER:
        raise OrderTooLarge(f"order must be between 1 and {MAX_ORDER}: {order}")
    out: list[DominoTiling] = []
    uncovered = set(diamond_cells(order))
    dominoes: list[Domino] = []

    def rec() -> None:
        if not uncovered:
            out.append(DominoTiling(order=order, dominoes=frozenset(dominoes)))
            return
        cell = min(uncovered)
        r, c = cell
        for other in ((r, c + 1), (r + 1, c)):
            if other in uncovered:
                uncovered.difference_update((cell, other))
                dominoes.append((cell, other))
                rec()
                dominoes.pop()
                uncovered.update((cell, other))

    rec()
    return tuple(sorted(out, key=format_tiling))


def _degree_map(t: DominoTiling) -> dict[tuple[int, int], int]:
    """Waist-endpoint counts per lattice vertex; degree is 4 minus this."""
    ends: dict[tuple[int, int], int] = {}
    for (r1, c1), (r2, c2) in t.dominoes:
        if r1 == r2:
            edge = ((r1 - 1, c1), (r1, c1))
        else:
            edge = ((r1, c1 - 1), (r1, c1))
        for v in edge:
            ends[v] = ends.get(v, 0) + 1
    return ends


_LARGE_LABEL = {0: 1, 1: 0, 2: -1}
_SMALL_LABEL = {0: -1, 1: 0, 2: 1}


def lasm(t: DominoTiling) -> Matrix:
    """The (n+1) x (n+1) alternating-sign matrix on the black vertices."""
    n = t.order
    ends = _degree_map(t)
    return tuple(
        tuple(_LARGE_LABEL[ends.get((u - v + n, u + v), 0)] for v in range(n + 1))
        for u in range(n + 1)
    )


def sasm(t: DominoTiling) -> Matrix:
    """The n x n alternating-sign matrix on the white vertices."""
    n = t.order
    ends = _degree_map(t)
    return tuple(
        tuple(_SMALL_LABEL[ends.get((u - v + n, u + v + 1), 0)] for v in range(n))
        for u in range(n)
    )


def is_asm(m: Matrix) -> bool:
    """Entries in {-1, 0, 1}; nonzero entries of every row and column
    alternate in sign and sum to one.
    """
    if any(x not in (-1, 0, 1) for row in m for x in row):
        return False
    for line in list(m) + list(zip(*m)):
        nonzero = [x for x in line if x]
        if sum(nonzero) != 1:
            return False
        if any(a + b != 0 for a, b in zip(nonzero, nonzero[1:])):
            return False
    return True


def is_permutation_matrix(m: Matrix) -> bool:
    return all(x in (0, 1) for row in m for x in row) and is_asm(m)


def matrix_permutation(m: Matrix) -> tuple[int, ...]:
    """Read a permutation matrix row by row: row i has its 1 in column p(i)."""
    if not is_permutation_matrix(m):
        raise NotPermutationLASM(f"not a permutation matrix: {m}")
    return tuple(row.index(1) + 1 for row in m)


def permutation_matrix(p: tuple[int, ...]) -> Matrix:
    n = len(p)
    return tuple(tuple(1 if p[i] == j + 1 else 0 for j in range(n)) for i in range(n))


def canary_check(t: DominoTiling) -> tuple[bool, bool | None]:
    """Evaluate (large matrix is a permutation matrix, its permutation is
    reduced Baxter); the second component is None when the first is False.
    Both sides are computed independently of each other.
    """
    m = lasm(t)
    if not is_permutation_matrix(m):
        return False, None
    return True, is_reduced_baxter(matrix_permutation(m))


def assemble_complete_baxter(t: DominoTiling) -> Perm:
    """Fill the (2n+1) x (2n+1) matrix with the large ASM at odd-odd and the
    small ASM at even-even positions, zeros at the gray dots, and read off
    the permutation.  Requires both matrices to be permutation matrices; the
    result always passes is_complete_baxter.

    >>> t = enumerate_tilings(1)[0]
    >>> assemble_complete_baxter(t)
    (1, 2, 3)
    """
    large = lasm(t)
    if not is_permutation_matrix(large):
        raise NotPermutationLASM(f"large ASM is not a permutation matrix: {large}")
    small = sasm(t)
    if not is_permutation_matrix(small):
        raise SnowLeopardError(
            "large ASM is a permutation matrix but the small one is not "
            f"(its permutation is not Baxter): {small}"
        )
    pl = matrix_permutation(large)
    ps = matrix_permutation(small)
    w = [0] * (2 * t.order + 1)
    for i, v in enumerate(pl, start=1):
        w[2 * i - 2] = 2 * v - 1
    for i, v in enumerate(ps, start=1):
        w[2 * i - 1] = 2 * v
    out = tuple(w)
    if not is_complete_baxter(out):
        raise AssertionError(f"assembled word is not complete Baxter: {out}")
    return out


def format_tiling(t: DominoTiling) -> str:
    """Serialize as one 'r1 c1 r2 c2' line per domino, in scan order."""
    return "\n".join(
        f"{r1} {c1} {r2} {c2}" for (r1, c1), (r2, c2) in sorted(t.dominoes)
    )


def parse_tiling(order: int, text: str) -> DominoTiling:
    """Inverse of format_tiling; validates exact cover of the diamond."""
    dominoes = set()
    covered = []
    for line in text.strip().splitlines():
        r1, c1, r2, c2 = map(int, line.split())
        a, b = sorted(((r1, c1), (r2, c2)))
        if (b[0] - a[0], b[1] - a[1]) not in ((0, 1), (1, 0)):
            raise SnowLeopardError(f"cells are not adjacent: {line!r}")
        dominoes.add((a, b))
        covered += [a, b]
    if sorted(covered) != diamond_cells(order):
        raise SnowLeopardError("dominoes do not tile the diamond exactly")
    return DominoTiling(order=order, dominoes=frozenset(dominoes))
