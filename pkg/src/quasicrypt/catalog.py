"""Named quasigroups and small table generators used by tests and scripts.

The first three worked examples are written below with labels 1..n and
converted to 0-based tables on load.
"""
from __future__ import annotations

import random
from itertools import permutations

from .quasigroup import QTable, isotope, relabel

_EXAMPLE_1 = """
2 1 4 3 5 6 7 8
1 3 2 4 6 7 8 5
4 2 3 1 7 8 5 6
3 4 1 2 8 5 6 7
5 6 7 8 1 2 3 4
6 7 8 5 2 3 4 1
7 8 5 6 3 4 1 2
8 5 6 7 4 1 2 3
"""

# The commonly quoted row 2, "4 5 3 2 1", repeats entries in columns 4
# and 5.  Swapping those two cells gives the unique nearest Latin square; it
# keeps the whole diagonal and the products 2*2=5, 5*2=4, 1*2=3.
_EXAMPLE_2 = """
2 3 1 4 5
4 5 3 1 2
5 1 4 2 3
1 2 5 3 4
3 4 2 5 1
"""

_EXAMPLE_3 = """
2 5 8 3 7 6 4 1
3 1 6 2 4 8 7 5
4 6 1 7 3 5 2 8
8 7 2 6 5 3 1 4
6 4 3 8 1 2 5 7
5 2 7 1 8 4 6 3
7 8 5 4 2 1 3 6
1 3 4 5 6 7 8 2
"""

# Finite-field constructions over GF(8), tags 0..7
_EXAMPLE_4 = """
1 3 5 7 2 0 6 4
2 0 6 4 1 3 5 7
4 6 0 2 7 5 3 1
6 4 2 0 5 7 1 3
5 7 1 3 6 4 2 0
0 2 4 6 3 1 7 5
3 1 7 5 0 2 4 6
7 5 3 1 4 6 0 2
"""

_EXAMPLE_5 = """
4 6 0 2 7 5 3 1
7 5 3 1 4 6 0 2
6 4 2 0 5 7 1 3
2 0 6 4 1 3 5 7
1 3 5 7 2 0 6 4
3 1 7 5 0 2 4 6
0 2 4 6 3 1 7 5
5 7 1 3 6 4 2 0
"""


def _rows(block, offset):
    return [[int(v) - offset for v in line.split()] for line in block.strip().splitlines()]


def example_table(k: int) -> QTable:
    """Worked example k (1-5), always 0-based."""
    blocks = {1: (_EXAMPLE_1, 1), 2: (_EXAMPLE_2, 1), 3: (_EXAMPLE_3, 1),
              4: (_EXAMPLE_4, 0), 5: (_EXAMPLE_5, 0)}
    block, offset = blocks[k]
    return QTable(_rows(block, offset))


def cyclic_group(n: int) -> QTable:
    return QTable([[(i + j) % n for j in range(n)] for i in range(n)])


def klein_group() -> QTable:
    return QTable([[i ^ j for j in range(4)] for i in range(4)])


def linear_quasigroup(n: int, a: int, b: int, c: int = 0) -> QTable:
    """x*y = a x + b y + c (mod n); a, b must be units mod n."""
    return QTable([[(a * x + b * y + c) % n for y in range(n)] for x in range(n)])


def direct_product(A: QTable, B: QTable) -> QTable:
    """Pairs (a, b) encoded as a * B.n + b."""
    m = B.n
    n = A.n * m
    cells = [[0] * n for _ in range(n)]
    for x in range(n):
        xa, xb = divmod(x, m)
        for y in range(n):
            ya, yb = divmod(y, m)
            cells[x][y] = A.cells[xa][ya] * m + B.cells[xb][yb]
    return QTable(cells)


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_isotope(Q: QTable, rng: random.Random) -> QTable:
    n = Q.n
    return isotope(Q, random_permutation(n, rng), random_permutation(n, rng),
                   random_permutation(n, rng))


def random_relabel(Q: QTable, rng: random.Random) -> QTable:
    return relabel(Q, random_permutation(Q.n, rng))


def latin_squares(n: int):
    """Every Latin square of order n by backtracking over rows (n <= 5)."""
    perms = list(permutations(range(n)))
    rows: list[tuple[int, ...]] = []
    used = [set() for _ in range(n)]

    def extend():
        if len(rows) == n:
            yield QTable(rows)
            return
        for perm in perms:
            if all(perm[j] not in used[j] for j in range(n)):
                rows.append(perm)
                for j in range(n):
                    used[j].add(perm[j])
                yield from extend()
                rows.pop()
                for j in range(n):
                    used[j].discard(perm[j])

    yield from extend()
