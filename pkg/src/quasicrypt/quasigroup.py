"""Finite quasigroups as validated Latin squares over 0..n-1."""
from __future__ import annotations

import json
from collections import deque

from .errors import (
    BadShapeError,
    ColNotPermutationError,
    NotPermutationError,
    ParseError,
    RowNotPermutationError,
)


class QTable:
    """Multiplication table of a finite quasigroup.

    ``cells[i][j]`` is the product i*j.  Construction validates both Latin
    conditions and precomputes the inverse row and column permutations, so
    both divisions are O(1) lookups.
    """

    __slots__ = ("n", "cells", "_ldiv", "_rdiv")

    def __init__(self, cells):
        try:
            rows = [tuple(int(v) for v in row) for row in cells]
        except (TypeError, ValueError) as exc:
            raise BadShapeError(f"table is not a 2-d array of integers: {exc}") from None
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise BadShapeError("table is not square")
        for i, row in enumerate(rows):
            if any(not 0 <= v < n for v in row):
                raise BadShapeError(f"row {i} has entries outside [0, {n - 1}]")
        full = set(range(n))
        # columns are reported first: a repeated row is a column defect
        for j in range(n):
            if {rows[i][j] for i in range(n)} != full:
                raise ColNotPermutationError(j)
        for i, row in enumerate(rows):
            if set(row) != full:
                raise RowNotPermutationError(i)

        ldiv = [[0] * n for _ in range(n)]
        rdiv = [[0] * n for _ in range(n)]
        for a in range(n):
            for x in range(n):
                ldiv[a][rows[a][x]] = x
                rdiv[a][rows[x][a]] = x
        self.n = n
        self.cells = tuple(rows)
        self._ldiv = tuple(tuple(r) for r in ldiv)
        self._rdiv = tuple(tuple(r) for r in rdiv)

    def mul(self, a: int, b: int) -> int:
        return self.cells[a][b]

    def ldiv(self, a: int, b: int) -> int:
        """The unique x with a*x = b."""
        return self._ldiv[a][b]

    def rdiv(self, b: int, a: int) -> int:
        """The unique y with y*a = b."""
        return self._rdiv[a][b]

    def row_perm(self, i: int) -> tuple[int, ...]:
        """Left translation by i."""
        return self.cells[i]

    def col_perm(self, j: int) -> tuple[int, ...]:
        """Right translation by j."""
        return tuple(row[j] for row in self.cells)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.cells[i][i] for i in range(self.n))

    def __eq__(self, other):
        return isinstance(other, QTable) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"QTable(n={self.n})"

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.cells]


def validate(cells) -> QTable:
    return QTable(cells)


def _check_perm(perm, n, name="permutation"):
    perm = tuple(int(v) for v in perm)
    if len(perm) != n or set(perm) != set(range(n)):
        raise NotPermutationError(f"{name} is not a permutation of 0..{n - 1}")
    return perm


def invert_perm(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


def compose(f, g) -> tuple[int, ...]:
    """f after g."""
    return tuple(f[g[i]] for i in range(len(g)))


def cycle_decomposition(perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``perm``.

    Each cycle starts at its smallest point and follows the permutation, so
    ``perm`` maps every entry to its successor (cyclically).  Cycles are
    ordered by their smallest point; fixed points appear as 1-cycles.
    """
    perm = _check_perm(perm, len(perm))
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        cycles.append(tuple(cyc))
    return cycles


def isotope(Q: QTable, pi, pi1, pi2) -> QTable:
    """The isotope x*y = pi(pi1^-1(x) . pi2^-1(y))."""
    n = Q.n
    pi = _check_perm(pi, n, "pi")
    inv1 = invert_perm(_check_perm(pi1, n, "pi1"))
    inv2 = invert_perm(_check_perm(pi2, n, "pi2"))
    return QTable([[pi[Q.cells[inv1[x]][inv2[y]]] for y in range(n)] for x in range(n)])


def relabel(Q: QTable, pi) -> QTable:
    """Isomorphic copy of Q under the bijection pi."""
    return isotope(Q, pi, pi, pi)


def mult_group_orbit_pairs(Q: QTable, start=(0, 1)) -> int:
    """Size of the orbit of an ordered pair of distinct points under Mult(Q).

    Mult(Q) is doubly transitive exactly when this equals n(n-1).
    """
    n = Q.n
    if n < 2:
        return 0
    gens = [Q.row_perm(i) for i in range(n)]
    gens += [Q.col_perm(j) for j in range(n)]
    gens = list(dict.fromkeys(gens))
    seen = {tuple(start)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        for g in gens:
            nxt = (g[x], g[y])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen)


# -- text / JSON formats ------------------------------------------------------

def to_text(Q: QTable, offset: int = 0) -> str:
    width = len(str(Q.n - 1 + offset))
    lines = [str(Q.n)]
    for row in Q.cells:
        lines.append(" ".join(str(v + offset).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


def to_json(Q: QTable) -> str:
    return json.dumps({"n": Q.n, "cells": Q.to_lists()})


def parse_text(text: str) -> QTable:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty table file")
    try:
        n = int(lines[0])
        cells = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if len(cells) != n:
        raise BadShapeError(f"header says {n} rows, found {len(cells)}")
    return QTable(cells)


def parse_json(text: str) -> QTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "cells" not in obj:
        raise ParseError('JSON table must be an object with a "cells" key')
    cells = obj["cells"]
    if "n" in obj and obj["n"] != len(cells):
        raise BadShapeError(f'"n" is {obj["n"]} but there are {len(cells)} rows')
    return QTable(cells)


def parse_table(text: str) -> QTable:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load_table(path) -> QTable:
    with open(path) as fh:
        return parse_table(fh.read())
