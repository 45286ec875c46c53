"""Proper subquasigroups: full enumeration, generation by one element,
and the diagonal-set test.

A nonempty subset of a finite quasigroup that is closed under
multiplication is already closed under both divisions (left translations
restricted to it are injective maps of a finite set), so every test here
is a plain closure test.  A proper subquasigroup never has more than n/2
elements, which bounds all candidate searches.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CrossCheckMismatch, EmptySetError, WrongOrderError
from .quasigroup import QTable, cycle_decomposition


def is_closed(Q: QTable, W) -> bool:
    W = set(W)
    if not W:
        raise EmptySetError("closure test needs a nonempty set")
    cells = Q.cells
    return all(cells[a][b] in W for a in W for b in W)


@dataclass
class SearchStep:
    row: int
    phase: str  # "outer", "inner" or "sweep"
    candidates: int
    found: list[tuple[int, ...]] = field(default_factory=list)


@dataclass
class SubqReport:
    subquasigroups: list[tuple[int, ...]]
    restart_rows: list[int]
    steps: list[SearchStep]

    @property
    def has_proper(self) -> bool:
        return bool(self.subquasigroups)


def _orbit_unions(own, others, limit):
    """Yield own | (any union of ``others``) with total size <= limit.

    Subsets come out in lexicographic order of the chosen cycle indices.
    """
    base = len(own)

    def rec(start, chosen, size):
        yield chosen
        for k in range(start, len(others)):
            if size + len(others[k]) <= limit:
                yield from rec(k + 1, chosen + [k], size + len(others[k]))

    for chosen in rec(0, [], base):
        W = set(own)
        for k in chosen:
            W.update(others[k])
        yield W


def _scan_row(Q, row, allowed, found, seen, phase):
    """Test every orbit union of sigma_row through ``row`` inside ``allowed``."""
    n = Q.n
    cycles = cycle_decomposition(Q.row_perm(row))
    own = next(c for c in cycles if row in c)
    step = SearchStep(row, phase, 0)
    if 2 * len(own) > n or not allowed.issuperset(own):
        return step
    limit = n // 2
    others = [c for c in cycles
              if c is not own and allowed.issuperset(c) and len(c) + len(own) <= limit]
    for W in _orbit_unions(own, others, limit):
        step.candidates += 1
        if is_closed(Q, W):
            key = tuple(sorted(W))
            step.found.append(key)
            if key not in seen:
                seen.add(key)
                found.append(key)
    return step


def find_all_subquasigroups(Q: QTable, sweep: bool = True) -> SubqReport:
    """Every proper subquasigroup of Q, idempotent singletons included.

    Row by row, a subquasigroup containing ``i`` is a union of cycles of the
    left translation by ``i``, one of which passes through ``i``; only those
    unions are closure-tested.  After a row yields subquasigroups, their
    not-yet-visited members are scanned restricted to that pool.  Rows that
    started a pass are excluded from later candidates, since anything
    containing them has been seen already.

    Rows visited only inside a pool have not been searched exhaustively: a
    subquasigroup made entirely of such rows can be missed.  With ``sweep``
    (the default) each of them is rescanned afterwards against every row not
    yet resolved, which makes the result complete.  ``sweep=False`` gives
    the bare row/pool procedure.

    The result is sorted by (size, members).
    """
    n = Q.n
    found: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    visited: set[int] = set()
    restarts: list[int] = []
    steps = []
    everything = set(range(n))

    i = 0 if n else None
    while i is not None:
        visited.add(i)
        allowed = everything.difference(restarts)
        steps.append(_scan_row(Q, i, allowed, found, seen, "outer"))

        pool = set().union(*found) - visited if found else set()
        while pool:
            j = min(pool)
            visited.add(j)
            steps.append(_scan_row(Q, j, pool, found, seen, "inner"))
            pool.discard(j)

        restarts.append(i)
        rest = everything - visited
        i = min(rest) if rest else None

    if sweep:
        resolved = set(restarts)
        for j in sorted(everything - resolved):
            steps.append(_scan_row(Q, j, everything - resolved, found, seen, "sweep"))
            resolved.add(j)

    found.sort(key=lambda W: (len(W), W))
    return SubqReport(found, restarts, steps)


@dataclass
class GenerationTrace:
    chain: list[frozenset[int]]

    @property
    def result(self) -> frozenset[int]:
        return self.chain[-1]


def generated_by(Q: QTable, a: int) -> GenerationTrace:
    """Subquasigroup generated by ``a``.

    Grows A_{k+1} = A_k A_k | A_k, multiplying only pairs that involve at
    least one element new in A_k.  Once a set exceeds n/2 elements the
    answer is all of Q.
    """
    return _close(Q, [a])


def generated_by_set(Q: QTable, seeds) -> GenerationTrace:
    """Closure of an arbitrary nonempty seed set."""
    seeds = list(seeds)
    if not seeds:
        raise EmptySetError("need at least one generator")
    return _close(Q, seeds)


def _close(Q, seeds):
    n = Q.n
    cells = Q.cells
    current = frozenset(seeds)
    chain = [current]
    old: set[int] = set()
    new = set(current)
    while True:
        grown = set(current)
        for x in new:
            row = cells[x]
            for y in new:
                grown.add(row[y])
            for y in old:
                grown.add(row[y])
                grown.add(cells[y][x])
        if len(grown) == len(current):
            return GenerationTrace(chain)
        if 2 * len(grown) > n:
            chain.append(frozenset(range(n)))
            return GenerationTrace(chain)
        old = set(current)
        new = grown - old
        current = frozenset(grown)
        chain.append(current)


def diagonal_core(Q: QTable) -> frozenset[int]:
    """Fixpoint of D_1 = {x*x}, D_{k+1} = {x*x : x in D_k}."""
    D = frozenset(Q.diagonal())
    while True:
        nxt = frozenset(Q.cells[x][x] for x in D)
        if nxt == D:
            return D
        D = nxt


def no_proper_subq_via_diagonal(Q: QTable) -> bool:
    full = Q.n
    return all(len(generated_by(Q, a).result) == full for a in sorted(diagonal_core(Q)))


def order4_simplicity(Q: QTable) -> bool:
    """Simplicity verdict for an order-4 quasigroup.

    Decided twice: by looking for a 2-element subquasigroup and by
    principal congruences.  The two must agree.
    """
    from .properties import is_simple

    if Q.n != 4:
        raise WrongOrderError(f"expected order 4, got {Q.n}")
    has_pair = any(len(W) == 2 for W in find_all_subquasigroups(Q).subquasigroups)
    simple = is_simple(Q)
    if simple == has_pair:
        raise CrossCheckMismatch("order-4 subquasigroup and congruence verdicts differ")
    return simple
