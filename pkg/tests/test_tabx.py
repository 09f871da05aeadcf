import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from schubcalc.bruhat import chain_word, interval
from schubcalc.perm import grassmannian
from schubcalc.poly import expand_in_schubert, schur
from schubcalc.tabx import (
    SkewShape, Tableau, conjugate, contains, diagonal_word, lr_coefficient, partition,
    partitions, partitions_in_box, reading_word, schensted, semistandard_tableaux,
    standard_tableaux, syt_count,
)
from conftest import P

T_STAR = Tableau(((1, 2, 2, 5, 8), (3, 4, 6, 6), (5, 7, 8), (7, 8, 9)))


def lr_by_tableaux(mu, lam, nu):
    """Count skew tableaux of shape nu/mu and content lam whose reverse
    reading word is a lattice word."""
    if not contains(nu, mu) or sum(nu) != sum(mu) + sum(lam):
        return 0
    shape = SkewShape(nu, mu)
    cells = shape.cells()
    rows = sorted({i for i, _ in cells})
    count = 0
    for values in itertools.product(range(1, len(lam) + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if Counter(values) != Counter({i + 1: p for i, p in enumerate(lam)}):
            continue
        if any((i, j + 1) in t and t[(i, j)] > t[(i, j + 1)] for i, j in cells):
            continue
        if any((i + 1, j) in t and t[(i, j)] >= t[(i + 1, j)] for i, j in cells):
            continue
        word = [t[(i, j)] for i in rows for j in sorted((j for r, j in cells if r == i), reverse=True)]
        seen = Counter()
        ok = True
        for v in word:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                ok = False
                break
        count += ok
    return count


def test_partitions():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_in_box(2, 2)) == 6
    assert conjugate((3, 1)) == (2, 1, 1)
    assert partition([2, 0, 1]) == (2, 1)
    with pytest.raises(ValueError):
        partition([1, 2])


def test_schensted_basics():
    P_, Q = schensted(())
    assert P_.rows == () and Q.rows == ()
    P_, Q = schensted((1, 3, 4, 7))
    assert P_.rows == ((1, 3, 4, 7),) and Q.rows == ((1, 2, 3, 4),)
    P_, Q = schensted((3, 2, 1))
    assert P_.rows == ((1,), (2,), (3,))


@given(st.lists(st.integers(1, 6), max_size=12))
def test_schensted_shape_and_content(word):
    P_, Q = schensted(word)
    assert P_.shape == Q.shape
    assert P_.is_semistandard() and Q.is_standard()
    assert sorted(P_.entries()) == sorted(word)
    assert Q.size() == len(word)


def test_recording_tableaux_of_six_chains():
    iv = interval(P("312645"), P("561234"), 2)
    qs = Counter(schensted(chain_word(c, 2))[1].rows for c in iv.maximal_chains())
    assert sum(qs.values()) == 6
    assert ((1, 2), (3, 4)) not in qs
    assert sorted(qs.values()) == [1, 1, 1, 1, 2]
    assert qs[((1, 2, 4), (3,))] == 2


def test_syt_count():
    assert syt_count((5,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((4,)) + syt_count((3, 1)) + syt_count((2, 2)) == 6
    assert all(T.is_standard() for T in standard_tableaux((3, 2)))
    assert syt_count((3, 2, 1)) == 16


def test_lr_examples():
    assert lr_coefficient((2, 1), (), (2, 1), 2) == 1
    assert lr_coefficient((1,), (1, 1), (2, 1), 2) == 1
    assert lr_coefficient((1,), (1,), (2,), 3) == 1
    assert lr_coefficient((1,), (1,), (1, 1), 3) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1), 3) == 2
    with pytest.raises(ValueError):
        lr_coefficient((1, 1, 1), (1,), (2, 1, 1), 2)


def test_lr_matches_tableau_rule():
    for n in range(1, 6):
        for nu in partitions(n):
            if len(nu) > 3:
                continue
            for m in range(n + 1):
                for mu in partitions(m):
                    for lam in partitions(n - m):
                        if len(mu) > 3 or len(lam) > 3:
                            continue
                        assert lr_coefficient(mu, lam, nu, 3) == lr_by_tableaux(mu, lam, nu)


def test_lr_symmetry_and_vanishing():
    box = partitions_in_box(3, 2)
    for mu, lam, nu in itertools.product(box, repeat=3):
        c = lr_coefficient(mu, lam, nu, 3)
        assert c == lr_coefficient(lam, mu, nu, 3)
        if c:
            assert sum(nu) == sum(mu) + sum(lam) and contains(nu, mu) and contains(nu, lam)


def test_lr_equals_schur_product():
    for mu, lam in itertools.product(partitions_in_box(2, 2), repeat=2):
        e = expand_in_schubert(schur(mu, 2) * schur(lam, 2))
        for nu in partitions_in_box(2, 4):
            assert lr_coefficient(mu, lam, nu, 2) == e[grassmannian(nu, 2)]


def test_skew_shape_independence():
    box = partitions_in_box(3, 3)
    by_shape = {}
    for nu in box:
        for mu in box:
            if contains(nu, mu) and nu != mu:
                by_shape.setdefault(SkewShape(nu, mu).normalized(), []).append((mu, nu))
    checked = 0
    for pairs in by_shape.values():
        if len(pairs) < 2:
            continue
        size = sum(pairs[0][1]) - sum(pairs[0][0])
        for lam in partitions(size):
            if len(lam) > 3:
                continue
            values = {lr_coefficient(mu, lam, nu, 6) for mu, nu in pairs}
            assert len(values) == 1
            checked += 1
    assert checked > 20


def _components(cells):
    cells, comps = set(cells), []
    while cells:
        todo = [cells.pop()]
        comp = set(todo)
        while todo:
            i, j = todo.pop()
            for c in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if c in cells:
                    cells.remove(c)
                    comp.add(c)
                    todo.append(c)
        comps.append(comp)
    return comps


def _straight(comp):
    r0 = min(i for i, _ in comp)
    c0 = min(j for _, j in comp)
    rows = Counter(i - r0 for i, _ in comp)
    lam = tuple(rows[i] for i in range(len(rows)))
    if {(i, j) for i, row in enumerate(lam) for j in range(row)} == {(i - r0, j - c0) for i, j in comp}:
        return lam
    return None


def test_disjoint_union_convolution():
    checked = 0
    box = partitions_in_box(3, 3)
    for kappa in box:
        for tau in box:
            if not contains(kappa, tau) or sum(kappa) - sum(tau) > 5:
                continue
            comps = _components(SkewShape(kappa, tau).cells())
            if len(comps) != 2:
                continue
            a, b = (_straight(c) for c in comps)
            if a is None or b is None:
                continue
            for lam in partitions(sum(kappa) - sum(tau)):
                if len(lam) <= 3:
                    assert lr_coefficient(tau, lam, kappa, 6) == lr_coefficient(a, b, lam, 6)
                    checked += 1
    assert checked > 10


def test_diagonal_and_reading_words_of_t_star():
    assert T_STAR.is_semistandard()
    assert diagonal_word(T_STAR) == (7, 5, 8, 3, 7, 9, 1, 4, 8, 2, 6, 2, 6, 5, 8)
    assert reading_word(T_STAR) == (7, 8, 9, 5, 7, 8, 3, 4, 6, 6, 1, 2, 2, 5, 8)
    assert schensted(diagonal_word(T_STAR))[0] == T_STAR
    assert schensted(reading_word(T_STAR))[0] == T_STAR


def test_word_edge_cases():
    row = Tableau(((1, 2, 3, 4),))
    assert diagonal_word(row) == (1, 2, 3, 4)
    col = Tableau(((1,), (2,), (3,)))
    assert reading_word(col) == (3, 2, 1)
    assert schensted(reading_word(col))[0] == col
    assert reading_word(Tableau(())) == ()


def test_words_insert_back_small_tableaux():
    for n in range(9):
        for lam in partitions(n):
            if len(lam) > 4:
                continue
            for T in semistandard_tableaux(lam, 4):
                assert schensted(diagonal_word(T))[0] == T
                assert schensted(reading_word(T))[0] == T


def test_tableau_text_and_json():
    assert str(T_STAR) == "1,2,2,5,8/3,4,6,6/5,7,8/7,8,9"
    assert Tableau.parse(str(T_STAR)) == T_STAR
    assert Tableau.from_json(T_STAR.to_json()) == T_STAR
    assert not Tableau(((2, 1),)).is_semistandard()
    with pytest.raises(ValueError):
        Tableau(((1,), (2, 3)))


def test_skew_shape():
    s = SkewShape((3, 2), (1,))
    assert s.size() == 4
    assert s.normalized() == SkewShape((4, 3), (2, 1)).normalized()
    with pytest.raises(ValueError):
        SkewShape((1,), (2,))
