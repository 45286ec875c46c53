import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasicrypt.catalog import cyclic_group, klein_group, random_isotope
from quasicrypt.errors import (
    BadShapeError,
    ColNotPermutationError,
    NotPermutationError,
    ParseError,
    RowNotPermutationError,
)
from quasicrypt.quasigroup import (
    QTable,
    cycle_decomposition,
    invert_perm,
    isotope,
    mult_group_orbit_pairs,
    parse_json,
    parse_table,
    parse_text,
    to_json,
    to_text,
)


def one_based(cycles):
    return [tuple(v + 1 for v in c) for c in cycles]


def test_validate_examples(ex):
    assert ex(1).n == 8
    assert QTable([[0, 1], [1, 0]]).n == 2


def test_validation_errors():
    with pytest.raises(ColNotPermutationError) as info:
        QTable([[0, 1], [0, 1]])
    assert info.value.col == 0
    with pytest.raises(RowNotPermutationError) as info:
        QTable([[0, 0], [1, 1]])
    assert info.value.row == 0
    with pytest.raises(BadShapeError):
        QTable([[0, 1], [1]])
    with pytest.raises(BadShapeError):
        QTable([[0, 2], [2, 0]])
    with pytest.raises(BadShapeError):
        QTable([[0, "x"], [1, 0]])


def test_products_in_example_2(ex):
    Q = ex(2)
    # 2*2 = 5 and (2*2)*2 = 5*2 = 4, labels 1..5
    assert Q.mul(1, 1) == 4
    assert Q.mul(4, 1) == 3
    assert ex(1).mul(0, 0) == 1  # 1*1 = 2


def test_divisions_by_definition(ex):
    Q = ex(3)
    for a in range(Q.n):
        for b in range(Q.n):
            x = Q.ldiv(a, b)
            y = Q.rdiv(b, a)
            assert Q.mul(a, x) == b
            assert Q.mul(y, a) == b


def test_division_identities_on_corpus(small_corpus):
    for Q in small_corpus:
        for x in range(Q.n):
            for y in range(Q.n):
                xy = Q.mul(x, y)
                assert Q.rdiv(xy, y) == x
                assert Q.mul(Q.rdiv(x, y), y) == x
                assert Q.ldiv(x, xy) == y
                assert Q.mul(x, Q.ldiv(x, y)) == y


def test_row_and_column_permutations(ex):
    Q = ex(1)
    sigma1 = one_based(cycle_decomposition(Q.row_perm(0)))
    assert sigma1 == [(1, 2), (3, 4), (5,), (6,), (7,), (8,)]
    sigma6 = one_based(cycle_decomposition(Q.row_perm(5)))
    assert [set(c) for c in sigma6] == [{1, 3, 6, 8}, {2, 4, 5, 7}]
    assert Q.col_perm(0) == tuple(row[0] for row in Q.cells)
    ident = QTable([[(i + j) % 3 for j in range(3)] for i in range(3)])
    assert ident.row_perm(0) == (0, 1, 2)


def test_cycle_decompositions_from_example_1(ex):
    Q = ex(1)
    assert one_based(cycle_decomposition(Q.row_perm(4))) == [(1, 5), (2, 6), (3, 7), (4, 8)]
    assert one_based(cycle_decomposition(Q.row_perm(1))) == [(1,), (2, 3), (4,), (5, 6, 7, 8)]
    assert cycle_decomposition((0, 1, 2)) == [(0,), (1,), (2,)]


def test_cycles_follow_the_permutation(ex):
    # sigma_6 as listed is the orbit set; the cycle itself runs 1 -> 6 -> 3 -> 8
    assert one_based(cycle_decomposition(ex(1).row_perm(5)))[0] == (1, 6, 3, 8)


@given(st.permutations(list(range(9))))
def test_cycle_decomposition_properties(perm):
    cycles = cycle_decomposition(perm)
    flat = [v for c in cycles for v in c]
    assert sorted(flat) == list(range(9))
    assert [c[0] for c in cycles] == sorted(c[0] for c in cycles)
    for c in cycles:
        assert c[0] == min(c)
        for k, v in enumerate(c):
            assert perm[v] == c[(k + 1) % len(c)]


def test_bad_permutation():
    with pytest.raises(NotPermutationError):
        cycle_decomposition((0, 0, 1))
    with pytest.raises(NotPermutationError):
        isotope(cyclic_group(3), (0, 1, 2), (0, 1, 1), (0, 1, 2))


def test_isotope_identity(ex):
    Q = ex(1)
    ident = list(range(8))
    assert isotope(Q, ident, ident, ident) == Q


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([4, 5, 8]), st.randoms(use_true_random=False))
def test_isotope_roundtrip(n, rnd):
    Q = random_isotope(cyclic_group(n), rnd)
    perms = [list(range(n)) for _ in range(3)]
    for p in perms:
        rnd.shuffle(p)
    pi, pi1, pi2 = perms
    R = isotope(Q, pi, pi1, pi2)
    back = isotope(R, invert_perm(pi), invert_perm(pi1), invert_perm(pi2))
    assert back == Q


def test_example_4_and_5_rows_are_a_rearrangement(ex):
    assert sorted(ex(4).cells) == sorted(ex(5).cells)
    assert ex(4) != ex(5)


def test_mult_group_orbit(ex):
    assert mult_group_orbit_pairs(ex(4)) == 56
    assert mult_group_orbit_pairs(cyclic_group(4)) == 4
    assert mult_group_orbit_pairs(cyclic_group(2)) == 2
    assert mult_group_orbit_pairs(QTable([[0]])) == 0


def _group_closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = tuple(h[g[i]] for i in range(n))
                if gh not in elems:
                    elems.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return elems


@pytest.mark.parametrize("Q", [cyclic_group(4), klein_group(), cyclic_group(5),
                               QTable([[1, 0, 2], [0, 2, 1], [2, 1, 0]])])
def test_orbit_matches_full_group_enumeration(Q):
    n = Q.n
    gens = [Q.row_perm(i) for i in range(n)] + [Q.col_perm(j) for j in range(n)]
    group = _group_closure(gens)
    orbit = {(g[0], g[1]) for g in group}
    assert mult_group_orbit_pairs(Q) == len(orbit)


def test_text_roundtrip(small_corpus):
    for Q in small_corpus[:60]:
        assert parse_text(to_text(Q)) == Q
        assert parse_json(to_json(Q)) == Q
        assert parse_table(to_json(Q)) == Q


def test_text_format_layout():
    assert to_text(QTable([[0, 1], [1, 0]])) == "2\n0 1\n1 0\n"
    assert to_json(QTable([[0]])) == '{"n": 1, "cells": [[0]]}'


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_text("")
    with pytest.raises(ParseError):
        parse_text("2\n0 a\n1 0\n")
    with pytest.raises(BadShapeError):
        parse_text("3\n0 1\n1 0\n")
    with pytest.raises(ParseError):
        parse_json("{not json")
    with pytest.raises(ParseError):
        parse_json("[1, 2]")
    with pytest.raises(RowNotPermutationError):
        parse_json('{"n": 2, "cells": [[0, 0], [1, 1]]}')


def test_random_isotopes_stay_latin():
    rng = random.Random(3)
    for n in range(1, 10):
        for _ in range(5):
            R = random_isotope(cyclic_group(n), rng)
            assert all(sorted(row) == list(range(n)) for row in R.cells)
