import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import connected_graphs
from edgeflip.cayley import GroupElement, closure_keys
from edgeflip.corpus import complete, cycle, paw, path, star
from edgeflip.edgespace import simple_basis, vertex_cut
from edgeflip.errors import DegreeTooSmall, DimensionMismatch, NotInBond
from edgeflip.flips import Permutation, _gen_pairs, alpha, element_of_word, generator
from edgeflip.graph import build_graph, spanning_tree
from edgeflip.structure import (SemidirectElement, cotree_edges, gamma, groups_isomorphic,
                                semidirect_mul, structure, theta_apply, theta_bits,
                                verify_structure)


def test_theta_relabels_vertex_cuts(K3):
    basis = simple_basis(K3)
    swap = Permutation.transposition(3, 1, 2)
    (img,) = theta_apply(basis, swap, (vertex_cut(K3, 1),))
    assert img == vertex_cut(K3, 2)
    # E(0) = E(1) + E(2) is fixed by (1 2)
    assert theta_apply(basis, swap, (vertex_cut(K3, 0),))[0] == vertex_cut(K3, 0)
    with pytest.raises(NotInBond):
        theta_bits(basis, swap, 0b001)
    with pytest.raises(DimensionMismatch):
        theta_apply(basis, Permutation.identity(4), (0,))


@given(connected_graphs(max_n=6), st.data())
@settings(max_examples=40, deadline=None)
def test_theta_is_linear_action(g, data):
    basis = simple_basis(g)
    perms = st.permutations(range(g.n)).map(lambda p: Permutation(tuple(p)))
    s, t = data.draw(perms), data.draw(perms)
    U = data.draw(st.integers(0, 2 ** g.n - 1))
    W = data.draw(st.integers(0, 2 ** g.n - 1))
    G = H = 0
    for v in range(g.n):
        if U >> v & 1:
            G ^= g.incidence_masks[v]
        if W >> v & 1:
            H ^= g.incidence_masks[v]
    assert theta_bits(basis, s, G ^ H) == theta_bits(basis, s, G) ^ theta_bits(basis, s, H)
    assert theta_bits(basis, s * t, G) == theta_bits(basis, s, theta_bits(basis, t, G))
    for v in range(g.n):
        assert theta_bits(basis, s, g.incidence_masks[v]) == g.incidence_masks[s(v)]


@pytest.mark.parametrize("g", [complete(3), cycle(4), paw(), complete(4)])
def test_group_acts_on_cuts_through_alpha(g):
    basis = simple_basis(g)
    keys = closure_keys(g.m, _gen_pairs(g, range(g.m)))
    for k in keys[:: max(1, len(keys) // 300)]:
        h = GroupElement(int(k), g.m)
        sigma = alpha(g, h)
        for v in range(g.n):
            cut = g.incidence_masks[v]
            assert h.apply(cut) == theta_bits(basis, sigma, cut)


def test_semidirect_identity_and_associativity():
    g = cycle(5)
    basis = simple_basis(g)
    tree = spanning_tree(g)
    slots = len(cotree_edges(g, tree))
    rng = random.Random(1)
    keys = closure_keys(g.m, _gen_pairs(g, range(g.m)))
    elems = [gamma(g, tree, GroupElement(int(keys[rng.randrange(len(keys))]), g.m)) for _ in range(30)]
    one = SemidirectElement.identity(slots, g.n)
    assert one.is_identity()
    for a in elems:
        assert semidirect_mul(basis, one, a) == a == semidirect_mul(basis, a, one)
    for a, b, c in zip(elems, elems[1:], elems[2:]):
        left = semidirect_mul(basis, semidirect_mul(basis, a, b), c)
        right = semidirect_mul(basis, a, semidirect_mul(basis, b, c))
        assert left == right


def test_semidirect_shape_mismatch():
    basis = simple_basis(complete(3))
    with pytest.raises(DimensionMismatch):
        semidirect_mul(basis, SemidirectElement.identity(1, 3), SemidirectElement.identity(2, 3))


def test_gamma_example(K3):
    tree = spanning_tree(K3)
    assert cotree_edges(K3, tree) == [2]
    img = gamma(K3, tree, generator(K3, 2))
    assert img.translations == (vertex_cut(K3, 1).bits ^ vertex_cut(K3, 2).bits,)
    assert img.perm == Permutation((0, 2, 1))
    assert gamma(K3, tree, GroupElement.identity(3)).is_identity()


def test_gamma_homomorphism_on_words():
    g = paw()
    basis = simple_basis(g)
    tree = spanning_tree(g)
    rng = random.Random(7)
    for _ in range(100):
        w1 = [rng.randrange(g.m) for _ in range(rng.randrange(6))]
        w2 = [rng.randrange(g.m) for _ in range(rng.randrange(6))]
        # words apply left to right, so w1 then w2 is element(w2) o element(w1)
        both = element_of_word(g, w1 + w2)
        assert gamma(g, tree, both) == semidirect_mul(
            basis, gamma(g, tree, element_of_word(g, w2)), gamma(g, tree, element_of_word(g, w1)))


@pytest.mark.parametrize("g,branch,k,order", [
    (complete(3), "odd", 2, 24),
    (cycle(5), "odd", 4, 1920),
    (star(4), "odd", 0, 120),
    (path(4), "even", 0, 24),
    (cycle(4), "even", 2, 96),
    (complete(4), "even", 6, 1536),
])
def test_structure_examples(g, branch, k, order):
    d = structure(g)
    assert (d.branch, d.k, d.order) == (branch, k, order)
    assert d.order == 2 ** d.k * factorial(g.n)
    assert d.to_json()["order"] == str(order)


def test_structure_needs_three_vertices():
    with pytest.raises(DegreeTooSmall):
        structure(build_graph(2, [(0, 1)]))


@pytest.mark.parametrize("g", [complete(3), cycle(4), path(4), paw(), star(3)])
def test_order_matches_independent_oracle(g):
    assert oracles.edge_flip_order(g.edges) == structure(g).order


@pytest.mark.parametrize("g", [complete(3), cycle(4), path(4), paw(), complete(4)])
def test_verify_structure(g):
    report = verify_structure(g)
    assert report.ok, report.checks
    assert report.bfs_order == report.expected_order == report.image_size
    assert report.to_json()["ok"] is True


def test_groups_isomorphic():
    assert groups_isomorphic(cycle(4), paw())
    assert not groups_isomorphic(cycle(4), cycle(5))
    assert not groups_isomorphic(path(4), cycle(4))
    with pytest.raises(DegreeTooSmall):
        groups_isomorphic(build_graph(2, [(0, 1)]), complete(3))
