from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import connected_graphs
from edgeflip import gf2
from edgeflip.corpus import complete, cycle, path, small_connected_graphs
from edgeflip.edgespace import (EdgeSet, VertexSet, coset_representative, delta_decompose,
                                edge_cut, format_edge_set, in_bond, parse_edge_set,
                                simple_basis, simple_weight, sym_diff, vertex_cut)
from edgeflip.errors import DimensionMismatch, NotInBond, VertexOutOfRange
from edgeflip.graph import build_graph, spanning_tree


def E(m, *idx):
    return EdgeSet.from_indices(m, idx)


def test_sym_diff_examples():
    assert sym_diff(E(3, 0), E(3, 0)) == E(3)
    assert sym_diff(E(3, 0), E(3)) == E(3, 0)
    assert sym_diff(E(3, 0, 1), E(3, 1, 2)) == E(3, 0, 2)
    with pytest.raises(DimensionMismatch):
        sym_diff(E(3, 0), E(4, 0))


def test_vertex_cut_examples(K3, P3, K13):
    assert vertex_cut(K3, 0).pairs(K3) == [(0, 1), (0, 2)]
    assert vertex_cut(P3, 1).pairs(P3) == [(0, 1), (1, 2)]
    assert len(vertex_cut(K13, 0)) == 3
    with pytest.raises(VertexOutOfRange):
        vertex_cut(K3, 3)


def test_edge_cut_examples(K3):
    assert edge_cut(K3, VertexSet.from_indices(3, [0, 1, 2])) == E(3)
    assert edge_cut(K3, [0, 1]).pairs(K3) == [(0, 2), (1, 2)]
    assert edge_cut(K3, []) == E(3)


@given(connected_graphs(max_n=8), st.data())
def test_edge_cut_is_sum_of_vertex_cuts(g, data):
    U = data.draw(st.sets(st.integers(0, g.n - 1)))
    acc = E(g.m)
    for v in U:
        acc = acc + vertex_cut(g, v)
    assert edge_cut(g, U) == acc
    assert set(edge_cut(g, U).pairs(g)) == oracles.cut(g.edges, U)
    assert edge_cut(g, range(g.n)) == E(g.m)


@given(connected_graphs(max_n=8))
def test_each_edge_in_exactly_two_vertex_cuts(g):
    for i, (x, y) in enumerate(g.edges):
        assert {v for v in range(g.n) if i in vertex_cut(g, v)} == {x, y}


@given(connected_graphs(min_n=1, max_n=9))
def test_bond_dimension_and_anchor_identity(g):
    b = simple_basis(g)
    assert b.rank == g.n - 1
    assert gf2.rank([g.incidence_masks[v] for v in range(g.n)]) == g.n - 1
    acc = E(g.m)
    for v in range(1, g.n):
        acc = acc + vertex_cut(g, v)
    assert acc == vertex_cut(g, 0)


def test_simple_basis_examples(K3, P3):
    b = simple_basis(K3)
    assert b.basis() == [E(3, 0, 2), E(3, 1, 2)] and b.rank == 2
    b = simple_basis(P3)
    assert b.rank == 2 == P3.m
    two = build_graph(2, [(0, 1)])
    assert simple_basis(two).basis() == [E(1, 0)]


def test_delta_decompose_examples(K3):
    b = simple_basis(K3)
    assert delta_decompose(b, E(3)) == frozenset()
    assert delta_decompose(b, vertex_cut(K3, 0)) == {1, 2}
    with pytest.raises(NotInBond):
        delta_decompose(b, E(3, 0))
    assert not in_bond(b, E(3, 0))


@pytest.mark.parametrize("g", small_connected_graphs(5, 10, min_n=2))
def test_delta_round_trip_and_oracle(g):
    b = simple_basis(g)
    for r in range(g.n):
        for S in combinations(range(1, g.n), r):
            G = edge_cut(g, S)
            assert delta_decompose(b, G) == frozenset(S)
    for G in oracles.bond_space(g.n, g.edges):
        bits = EdgeSet.from_indices(g.m, [g.index[e] for e in G])
        assert delta_decompose(b, bits) == oracles.decompose(g.n, g.edges, G)


def test_delta_round_trip_n10():
    g = cycle(10)
    b = simple_basis(g)
    for mask in range(2 ** 9):
        S = {v + 1 for v in gf2.bits_of(mask)}
        assert delta_decompose(b, edge_cut(g, S)) == S


def test_simple_weight_examples(K3):
    b = simple_basis(K3)
    assert simple_weight(b, E(3)) == 0
    assert simple_weight(b, vertex_cut(K3, 0)) == 2
    assert simple_weight(b, vertex_cut(K3, 1)) == 1
    g = complete(5)
    assert simple_weight(simple_basis(g), vertex_cut(g, 0)) == 4


def test_vertex_cuts_distinct_iff_n_at_least_3():
    two = build_graph(2, [(0, 1)])
    assert vertex_cut(two, 0) == vertex_cut(two, 1)
    for g in small_connected_graphs(5, 10):
        assert len({vertex_cut(g, v) for v in range(g.n)}) == g.n


def test_coset_representative_examples(K3):
    T = spanning_tree(K3)
    assert coset_representative(K3, T, E(3, 0)) == E(3, 2)
    for G in oracles.bond_space(3, K3.edges):
        assert not coset_representative(K3, T, EdgeSet.from_indices(3, [K3.index[e] for e in G]))
    P = path(5)
    TP = spanning_tree(P)
    for mask in range(2 ** P.m):
        assert not coset_representative(P, TP, EdgeSet(mask, P.m))


@given(connected_graphs(max_n=5))
def test_coset_representative_matches_brute_force(g):
    T = spanning_tree(g)
    tree = {g.edges[i] for i in T.tree_edges}
    for mask in range(0, 2 ** g.m, max(1, 2 ** g.m // 16)):
        G = EdgeSet(mask, g.m)
        F = coset_representative(g, T, G)
        assert set(F.pairs(g)) == oracles.coset_rep(g.n, g.edges, tree, set(G.pairs(g)))


def test_cotree_subsets_hit_distinct_cosets():
    for g in [complete(4), complete(5), cycle(6)]:
        T = spanning_tree(g)
        b = simple_basis(g)
        cotree = [i for i in range(g.m) if i not in T.tree_edges]
        assert len(cotree) <= 6
        reps = [gf2.from_indices(s) for r in range(len(cotree) + 1) for s in combinations(cotree, r)]
        for F, F2 in combinations(reps, 2):
            assert not b.contains_bits(F ^ F2)


def test_text_forms(K3):
    assert parse_edge_set(K3, "0-1,1-2") == E(3, 0, 2)
    assert parse_edge_set(K3, "-") == E(3)
    assert parse_edge_set(K3, "2-1") == E(3, 2)
    assert format_edge_set(K3, E(3, 0, 2)) == "0-1,1-2"
    assert format_edge_set(K3, E(3)) == "-"
