import itertools
import json

import pytest
from hypothesis import given, strategies as st

from schubcalc.perm import (
    Permutation, Transposition, all_perms, compress, conj_cycle, conj_w0, cycle,
    delete_at, from_code, grassmannian, identity, insert_at, is_grassmannian, phi_P,
)
from schubcalc.qorder import shape_equivalent
from conftest import P, perms


def inversions(w):
    win = w.window
    return sum(1 for i, j in itertools.combinations(range(len(win)), 2) if win[i] > win[j])


def test_trailing_fixed_points_are_trimmed():
    assert Permutation([2, 1, 3, 4]) == Permutation([2, 1])
    assert Permutation([2, 1, 3, 4]).window == (2, 1)
    assert Permutation([1, 2, 3]).window == ()
    assert hash(Permutation([1, 2])) == hash(identity())


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([0, 1])


def test_composition_applies_right_factor_first():
    zeta = P("(2,4)(1,5,3)")
    assert zeta.window == (5, 4, 1, 2, 3)
    assert (zeta * P("21345")).oneline() == "45123"
    assert P("213") * P("213") == identity()
    assert identity() * P("413652") == P("413652")


def test_cycles_compose_right_to_left():
    assert P("(1,2)(2,3)").oneline() == "231"
    assert P("(1243)") == cycle(1, 2, 4, 3)


def test_length_and_code():
    w = P("413652")
    assert w.length() == 7
    assert w.code() == (3, 0, 1, 2, 1)
    assert P("45123").length() == 6
    assert identity().code() == ()
    assert P("2413").code() == (1, 2)


@pytest.mark.parametrize("lam,k,expected", [((), 3, "e"), ((2, 1), 2, "2413"), ((4,), 2, "162345")])
def test_grassmannian(lam, k, expected):
    assert grassmannian(lam, k).oneline() == expected


def test_grassmannian_rejects_long_partition():
    with pytest.raises(ValueError):
        grassmannian((1, 1, 1), 2)


def test_is_grassmannian():
    assert is_grassmannian(P("2413")) == ((2, 1), 2)
    assert is_grassmannian(P("2431")) is None
    assert is_grassmannian(identity(), 3) == ((), 3)


def test_grassmannian_round_trip_in_box():
    for k in range(1, 5):
        for parts in itertools.product(range(5), repeat=k):
            lam = tuple(p for p in sorted(parts, reverse=True) if p)
            w = grassmannian(lam, k)
            assert w.length() == sum(lam)
            assert is_grassmannian(w, k) == (lam, k)


def test_delete_and_insert_examples():
    assert delete_at(P("631452"), 3) == P("52341")
    assert delete_at(P("531642"), 3) == P("42531")
    assert insert_at(P("52341"), 3, 1) == P("631452")
    assert insert_at(P("42531"), 3, 1) == P("531642")
    assert delete_at(identity(), 4) == identity()
    assert insert_at(identity(), 1, 1) == identity()


def test_delete_inverts_insert_on_s5():
    for y in all_perms(5):
        for p in range(1, 7):
            for q in range(1, 7):
                x = insert_at(y, p, q)
                assert x(p) == q
                assert delete_at(x, p) == y


def test_phi_P():
    assert phi_P(P("(2,4)(1,5,3)"), (1, 3, 4, 5, 7)) == P("(3,5)(1,7,4)")
    assert phi_P(P("21"), (4, 9)) == Transposition(4, 9).perm()
    assert phi_P(identity(), (2, 5)) == identity()
    with pytest.raises(ValueError):
        phi_P(P("321"), (1, 2))


@given(perms(4), st.sets(st.integers(1, 12), min_size=4, max_size=4))
def test_phi_P_is_shape_equivalent(zeta, P_):
    eta = phi_P(zeta, sorted(P_))
    assert shape_equivalent(zeta, eta)
    assert compress(eta) == compress(zeta)


def test_conjugations():
    s1, s2 = P("21"), P("132")
    assert conj_w0(s1, 3) == s2
    assert conj_w0(identity(), 5) == identity()
    # w0 (1243) w0 in S_4 is (1243) again
    assert conj_w0(P("(1243)"), 4) == P("(1243)")
    assert conj_cycle(P("(1243)"), 4) == P("(1423)")
    assert conj_cycle(P("(1423)"), 4) == P("(1342)")
    assert conj_cycle(identity(), 4) == identity()
    with pytest.raises(ValueError):
        conj_w0(P("321"), 2)


def test_conj_w0_matches_formula():
    for z in all_perms(4):
        c = conj_w0(z, 4)
        assert all(c(i) == 5 - z(5 - i) for i in range(1, 5))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_conj_cycle_has_order_n(n):
    for z in all_perms(n):
        x = z
        for _ in range(n):
            x = conj_cycle(x, n)
        assert x == z


@given(perms(), perms())
def test_length_properties(s, t):
    assert s.length() == inversions(s)
    assert s.length() == s.inverse().length()
    assert (s * t).length() <= s.length() + t.length()
    assert sum(s.code()) == s.length()
    assert from_code(s.code()) == s
    assert s * s.inverse() == identity()


@given(perms(), perms(), perms())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(11))
def test_text_and_json_round_trip(w):
    assert Permutation.parse(w.oneline()) == w
    assert Permutation.parse(w.cycle_notation()) == w
    assert Permutation.from_json(json.loads(json.dumps(w.to_json()))) == w


def test_parse_formats():
    assert P("21345") == P("21")
    w = P("[10,1,2,3,4,5,6,7,8,9]")
    assert w(1) == 10 and w(10) == 9 and len(w.cycles()) == 1
    for bad in ["12a", "(1,2", "(1,1)", "112", "[1,2"]:
        with pytest.raises(ValueError):
            P(bad)


def test_swap_conventions():
    u = P("312645")
    assert u.swap_positions(1, 2) == u * Transposition(1, 2).perm()
    assert u.swap_values(1, 2) == Transposition(1, 2).perm() * u


def test_transposition_requires_order():
    with pytest.raises(ValueError):
        Transposition(3, 2)
