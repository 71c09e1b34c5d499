"""The flipping group as a subgroup of a semidirect product.

Elements of the model are pairs ``(translations, perm)``: one bond-space
vector per cotree edge (ascending edge index) and a permutation of the
vertex cuts. ``theta(sigma)`` relabels vertex cuts inside each translation.
``gamma`` sends a group element g to ``(({e_i} + g{e_i})_i, alpha(g))``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Sequence, Tuple

from . import gf2
from .cayley import DEFAULT_CAP, GroupElement, closure_keys
from .edgespace import EdgeSet, SimpleBasis, cut_bits, simple_basis
from .errors import DegreeTooSmall, DimensionMismatch
from .flips import Permutation, _gen_pairs, alpha
from .graph import Graph, SpanningTree, spanning_tree


@dataclass(frozen=True)
class SemidirectElement:
    translations: Tuple[int, ...]  # bond-space vectors as edge bitsets
    perm: Permutation

    @classmethod
    def identity(cls, slots: int, n: int) -> "SemidirectElement":
        return cls((0,) * slots, Permutation.identity(n))

    def is_identity(self) -> bool:
        return not any(self.translations) and self.perm.is_identity()


@dataclass(frozen=True)
class StructureDescriptor:
    n: int
    m: int
    branch: str  # "odd" or "even", the parity of n
    k: int
    order: int

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "k": self.k,
                "order": str(self.order), "branch": self.branch}


def cotree_edges(g: Graph, tree: SpanningTree) -> List[int]:
    return [e for e in range(g.m) if e not in tree.tree_edges]


def theta_bits(basis: SimpleBasis, sigma: Permutation, G: int) -> int:
    """Image of one bond vector: decompose over the cuts, relabel, re-sum."""
    S = basis.decompose_bits(G)
    image = 0
    for v in gf2.bits_of(S):
        image |= 1 << sigma(v)
    # sum of E(sigma v) over v in S is the edge cut of sigma(S)
    return cut_bits(basis.graph, image)


def theta_apply(basis: SimpleBasis, sigma: Permutation, tup: Sequence) -> tuple:
    """Componentwise ``theta(sigma)``; accepts EdgeSets or raw bitsets."""
    if sigma.n != basis.graph.n:
        raise DimensionMismatch(f"permutation of degree {sigma.n} on n={basis.graph.n}")
    out = []
    for G in tup:
        if isinstance(G, EdgeSet):
            out.append(EdgeSet(theta_bits(basis, sigma, G.bits), G.size))
        else:
            out.append(theta_bits(basis, sigma, G))
    return tuple(out)


def semidirect_mul(basis: SimpleBasis, a: SemidirectElement, c: SemidirectElement) -> SemidirectElement:
    """``(G, s)(H, t) = (G + theta(s) H, s t)``."""
    if len(a.translations) != len(c.translations) or a.perm.n != c.perm.n:
        raise DimensionMismatch("semidirect elements of different shapes")
    twisted = theta_apply(basis, a.perm, c.translations)
    return SemidirectElement(tuple(x ^ y for x, y in zip(a.translations, twisted)),
                             a.perm * c.perm)


def gamma(g: Graph, tree: SpanningTree, elem: GroupElement) -> SemidirectElement:
    trans = tuple((1 << e) ^ elem.apply(1 << e) for e in cotree_edges(g, tree))
    return SemidirectElement(trans, alpha(g, elem))


def structure(g: Graph) -> StructureDescriptor:
    """Closed-form exponent and order ``2^k n!`` of the flipping group."""
    n, m = g.n, g.m
    if n < 3:
        raise DegreeTooSmall(f"the structure formula needs n >= 3, got n={n}")
    if n % 2:
        branch, k = "odd", (n - 1) * (m - n + 1)
    else:
        branch, k = "even", (n - 2) * (m - n + 1)
    return StructureDescriptor(n, m, branch, k, 2 ** k * factorial(n))


def groups_isomorphic(g1: Graph, g2: Graph) -> bool:
    for g in (g1, g2):
        if g.n < 3:
            raise DegreeTooSmall(f"isomorphism criterion needs n >= 3, got n={g.n}")
    return g1.n == g2.n and g1.m == g2.m


@dataclass
class StructureReport:
    expected_order: int
    bfs_order: int
    image_size: int
    hom_pairs_checked: int
    hom_failures: int
    closure_failures: int
    component_failures: int
    checks: Dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "expected_order": str(self.expected_order),
            "bfs_order": str(self.bfs_order),
            "image_size": str(self.image_size),
            "hom_pairs_checked": self.hom_pairs_checked,
            "checks": dict(sorted(self.checks.items())),
            "ok": self.ok,
        }


def verify_structure(g: Graph, cap: int = DEFAULT_CAP, exhaustive_limit: int = 200,
                     samples: int = 2000, seed: int = 0) -> StructureReport:
    """Brute-force check of the semidirect-product structure on one graph.

    Pairs are checked exhaustively for groups of order at most
    ``exhaustive_limit`` and by seeded sampling above that.
    """
    desc = structure(g)
    tree = spanning_tree(g)
    basis = simple_basis(g)
    keys = closure_keys(g.m, _gen_pairs(g, range(g.m)), cap)
    elems = [GroupElement(int(k), g.m) for k in keys]
    images = [gamma(g, tree, x) for x in elems]
    image_set = set(images)

    n_even = g.n % 2 == 0
    comp_fail = 0
    for img in images:
        for G in img.translations:
            if not basis.contains_bits(G) or (n_even and basis.weight_bits(G) % 2):
                comp_fail += 1

    if len(elems) <= exhaustive_limit:
        pairs = [(i, j) for i in range(len(elems)) for j in range(len(elems))]
    else:
        rng = random.Random(seed)
        pairs = [(rng.randrange(len(elems)), rng.randrange(len(elems))) for _ in range(samples)]
    hom_fail = 0
    closure_fail = 0
    for i, j in pairs:
        prod = semidirect_mul(basis, images[i], images[j])
        if prod != gamma(g, tree, elems[i] * elems[j]):
            hom_fail += 1
        if prod not in image_set:
            closure_fail += 1
    # closed under left multiplication by every generator image
    for e in range(g.m):
        ge = gamma(g, tree, GroupElement.lit_only(g.m, e, g.edge_cut_masks[e]))
        closure_fail += sum(semidirect_mul(basis, ge, img) not in image_set for img in images)

    checks = {
        "order_matches_formula": len(elems) == desc.order,
        "gamma_homomorphism": hom_fail == 0,
        "gamma_injective": len(image_set) == len(elems),
        "image_closed": closure_fail == 0,
        "translations_in_bond_space": comp_fail == 0,
        "image_size_matches_model": len(image_set) == desc.order,
    }
    return StructureReport(desc.order, len(elems), len(image_set), len(pairs),
                           hom_fail, closure_fail, comp_fail, checks)
