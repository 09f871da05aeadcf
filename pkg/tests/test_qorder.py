import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from schubcalc.bruhat import interval, is_isomorphic, leq_k
from schubcalc.perm import all_perms, compress, grassmannian, identity, phi_P
from schubcalc.poly import structure_constant
from schubcalc.qorder import (
    is_disjoint_product, profile, q_interval, q_leq, q_leq_witness, rank,
    shape_equivalent, skew_coefficient, skew_coefficients, witness_rank,
)
from schubcalc.tabx import contains, partitions, partitions_in_box
from conftest import P, perms

ZETA = P("(2,4)(1,5,3)")


def test_profile():
    prof = profile(ZETA)
    assert prof.up == {1, 2} and prof.down == {3, 4, 5}
    assert not prof.up & prof.down


def test_shape_equivalent():
    assert shape_equivalent(ZETA, ZETA)
    assert shape_equivalent(ZETA, P("(3,5)(1,7,4)"))
    assert shape_equivalent(P("21"), P("(1,3)"))
    assert not shape_equivalent(P("21"), P("231"))


def test_q_leq_examples():
    assert all(q_leq(identity(), z) for z in all_perms(4))
    assert q_leq(P("(1,2)"), ZETA) == q_leq_witness(P("(1,2)"), ZETA, 6)
    assert q_leq(grassmannian((1,), 2), grassmannian((2, 1), 2))


def test_q_leq_matches_witness_definition():
    # brute force over u in S_6 and k <= 5
    s4 = list(all_perms(4))
    s6 = list(all_perms(6))
    for zeta in s4:
        wits = [(u, k) for u in s6 for k in range(1, 6) if leq_k(u, zeta * u, k)]
        for eta in s4:
            by_witness = any(leq_k(u, eta * u, k) and leq_k(eta * u, zeta * u, k) for u, k in wits)
            assert q_leq(eta, zeta) == by_witness, (eta, zeta)


def test_lower_elements_move_only_support_points():
    for zeta in all_perms(4):
        supp = profile(zeta).support
        for eta in all_perms(6):
            if q_leq(eta, zeta):
                assert profile(eta).support <= supp


def test_rank_examples():
    assert rank(identity()) == 0
    assert rank(ZETA) == 5 == P("45123").length() - P("21345").length()
    assert rank(P("(1,2)")) == 1


def test_rank_equals_witness_rank():
    for zeta in all_perms(5):
        assert rank(zeta) == witness_rank(zeta)
    for zeta in all_perms(4):
        for u in all_perms(5):
            for k in range(1, 5):
                if leq_k(u, zeta * u, k):
                    assert rank(zeta) == witness_rank(zeta, u, k)


@given(perms(5), st.sets(st.integers(1, 15), min_size=5, max_size=5))
def test_rank_is_shape_invariant(zeta, P_):
    assert rank(phi_P(zeta, sorted(P_))) == rank(zeta)


def test_q_interval_examples():
    assert q_interval(identity()).nodes == {identity()}
    big = q_interval(ZETA)
    assert len(big.nodes) == 12 and big.count_maximal_chains() == 5
    assert is_isomorphic(big, interval(P("21345"), P("45123"), 2))
    square = q_interval(P("(1,2)") * P("(3,4)"))
    chain2 = nx.path_graph(2, create_using=nx.DiGraph)
    assert nx.is_isomorphic(square.graph(), nx.cartesian_product(chain2, chain2))


def test_q_interval_graded():
    for zeta in all_perms(4):
        iv = q_interval(zeta)
        for lo, hi, _ in iv.covers:
            assert rank(hi) == rank(lo) + 1
        assert iv.rank[zeta] == rank(zeta)


def test_disjoint_product():
    assert is_disjoint_product(identity(), ZETA)
    assert is_disjoint_product(P("(1,2)"), P("(3,4)"))
    assert not is_disjoint_product(P("(1,2)"), P("(2,3)"))


def test_grassmannians_form_youngs_lattice():
    for k in range(1, 4):
        box = partitions_in_box(k, 4 - k)
        for lam, mu in itertools.product(box, repeat=2):
            assert q_leq(grassmannian(mu, k), grassmannian(lam, k)) == contains(lam, mu)


def _order_graph(elems, leq):
    g = nx.DiGraph()
    g.add_nodes_from(range(len(elems)))
    for i, j in itertools.permutations(range(len(elems)), 2):
        if leq(elems[i], elems[j]):
            g.add_edge(i, j)
    return g


def test_compressed_grassmannians_are_not_youngs_lattice():
    # compressing v(lam, k) to its support loses the order for k = 2, 3
    expected = {1: True, 2: False, 3: False}
    for k, iso in expected.items():
        box = partitions_in_box(k, 4 - k)
        young = _order_graph(box, lambda a, b: contains(b, a))
        comp = sorted({compress(grassmannian(lam, k)) for lam in box})
        g = _order_graph(comp, q_leq)
        assert nx.is_isomorphic(g, young) == iso
    assert not q_leq(compress(grassmannian((1,), 2)), compress(grassmannian((2, 1), 2)))


def test_skew_coefficient_examples():
    assert skew_coefficient(identity(), ()) == 1
    z = P("(1243)")
    assert skew_coefficient(z, (2, 1)) == 1
    assert skew_coefficient(z, (3,)) == 0
    assert skew_coefficient(z, (1, 1, 1)) == 0
    u, w = P("21345"), P("45123")
    for lam in partitions(5):
        expected = structure_constant(u, grassmannian(lam, 2), w) if len(lam) <= 2 else 0
        assert skew_coefficient(ZETA, lam) == expected
        assert skew_coefficient(ZETA, lam, u, 2) == expected
    assert skew_coefficient(ZETA, (2, 1)) == 0
    with pytest.raises(ValueError):
        skew_coefficient(ZETA, (3, 2), P("12345"), 2)


def test_skew_coefficients_are_witness_independent():
    for zeta in all_perms(4):
        base = skew_coefficients(zeta)
        for u in all_perms(5):
            for k in range(1, 5):
                if leq_k(u, zeta * u, k):
                    assert skew_coefficients(zeta, u, k) == base


def test_skew_coefficients_of_shape_equivalent_pair():
    assert skew_coefficients(ZETA) == skew_coefficients(P("(3,5)(1,7,4)")) == {(3, 2): 1}
