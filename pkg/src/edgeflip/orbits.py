"""Orbits of the edge space under the full flipping group.

Closed form: write a configuration as ``F + G`` with ``F`` a subset of the
cotree ``E - T`` and ``G`` in the bond space. On the zero coset the orbits
are indexed by the simple weight up to ``i <-> n - i``. A nonzero coset is a
single orbit when n is odd and splits by the parity of ``sw(G)`` when n is
even. BFS routines here are oracles for tests and the self-check only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import gf2
from .cayley import DEFAULT_CAP
from .edgespace import CosetSolver, EdgeSet, SimpleBasis, coset_solver, simple_basis
from .errors import CapExceeded, DegreeTooSmall, InvalidDescriptor
from .flips import flip_bits
from .graph import Graph, SpanningTree, spanning_tree

FULL, EVEN, ODD = "full", "even", "odd"


@dataclass(frozen=True)
class OrbitDescriptor:
    coset_rep: EdgeSet
    kind: str  # "SW", FULL, EVEN or ODD
    weight: Optional[int] = None  # only for kind "SW"

    @property
    def label(self) -> str:
        return f"SW({self.weight})" if self.kind == "SW" else self.kind


def _require_n3(g: Graph) -> None:
    if g.n < 3:
        raise DegreeTooSmall(f"orbit classification needs n >= 3, got n={g.n}")


def max_weight_index(n: int) -> int:
    return n // 2  # == ceil((n - 1) / 2)


def class_key(cs: CosetSolver, n: int, x: int) -> Tuple[int, str, Optional[int]]:
    """Plain-tuple form of the descriptor: ``(F bits, kind, weight)``."""
    F, S = cs.split_bits(x)
    sw = gf2.popcount(S)
    if not F:
        return F, "SW", min(sw, n - sw)
    if n % 2:
        return F, FULL, None
    return F, (ODD if sw % 2 else EVEN), None


def descriptor_of_key(g: Graph, key) -> OrbitDescriptor:
    F, kind, weight = key
    return OrbitDescriptor(EdgeSet(F, g.m), kind, weight)


def classify_bits(g: Graph, x: int, tree: SpanningTree, basis: SimpleBasis = None) -> OrbitDescriptor:
    return descriptor_of_key(g, class_key(coset_solver(g, tree), g.n, x))


def classify(g: Graph, config: EdgeSet, tree: SpanningTree = None,
             basis: SimpleBasis = None) -> OrbitDescriptor:
    _require_n3(g)
    tree = tree or spanning_tree(g)
    basis = basis or simple_basis(g)
    return classify_bits(g, config.bits, tree, basis)


def same_orbit(g: Graph, a: EdgeSet, b: EdgeSet, tree: SpanningTree = None) -> bool:
    return classify(g, a, tree) == classify(g, b, tree)


def orbit_size(g: Graph, desc: OrbitDescriptor) -> int:
    _require_n3(g)
    n = g.n
    if desc.coset_rep.size != g.m:
        raise InvalidDescriptor("descriptor belongs to a different graph")
    if desc.kind == "SW":
        i = desc.weight
        if desc.coset_rep or i is None or not 0 <= i <= max_weight_index(n):
            raise InvalidDescriptor(f"bad simple-weight descriptor {desc}")
        if i == n - i:
            return comb(n - 1, i)
        return comb(n - 1, i) + comb(n - 1, n - i)
    if not desc.coset_rep:
        raise InvalidDescriptor("the zero coset has only SW(i) orbits")
    if desc.kind == FULL and n % 2:
        return 2 ** (n - 1)
    if desc.kind in (EVEN, ODD) and n % 2 == 0:
        return 2 ** (n - 2)
    raise InvalidDescriptor(f"kind {desc.kind!r} does not occur for n={n}")


def orbit_count(g: Graph) -> int:
    _require_n3(g)
    cosets = 2 ** (g.m - g.n + 1)
    return max_weight_index(g.n) + 1 + (cosets - 1) * (1 if g.n % 2 else 2)


def all_descriptors(g: Graph, tree: SpanningTree = None) -> List[OrbitDescriptor]:
    """One descriptor per orbit."""
    _require_n3(g)
    tree = tree or spanning_tree(g)
    cotree = [e for e in range(g.m) if e not in tree.tree_edges]
    zero = EdgeSet.empty(g.m)
    out = [OrbitDescriptor(zero, "SW", i) for i in range(max_weight_index(g.n) + 1)]
    for mask in range(1, 2 ** len(cotree)):
        F = EdgeSet(sum(1 << cotree[j] for j in range(len(cotree)) if mask >> j & 1), g.m)
        if g.n % 2:
            out.append(OrbitDescriptor(F, FULL))
        else:
            out.extend([OrbitDescriptor(F, EVEN), OrbitDescriptor(F, ODD)])
    return out


def closed_form_partition(g: Graph, tree: SpanningTree = None) -> Dict[OrbitDescriptor, FrozenSet[int]]:
    """All 2^m configurations grouped by descriptor (as raw bitsets)."""
    _require_n3(g)
    tree = tree or spanning_tree(g)
    basis = simple_basis(g)
    groups: Dict[OrbitDescriptor, set] = {}
    for x in range(2 ** g.m):
        groups.setdefault(classify_bits(g, x, tree, basis), set()).add(x)
    return {k: frozenset(v) for k, v in groups.items()}


# --- BFS oracles ---------------------------------------------------------------

def orbit_bits(g: Graph, x: int, moves: Sequence[int] = None, cap: int = DEFAULT_CAP) -> FrozenSet[int]:
    moves = range(g.m) if moves is None else moves
    masks = [(e, g.edge_cut_masks[e]) for e in moves]
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for e, mask in masks:
            if y >> e & 1:
                z = y ^ mask
                if z not in seen:
                    seen.add(z)
                    if len(seen) > cap:
                        raise CapExceeded(f"orbit exceeded cap {cap}")
                    queue.append(z)
    return frozenset(seen)


def enumerate_orbit(g: Graph, config: EdgeSet, cap: int = DEFAULT_CAP,
                    moves: Sequence[int] = None) -> FrozenSet[EdgeSet]:
    """BFS closure of ``config`` under the moves (all edges by default)."""
    return frozenset(EdgeSet(b, g.m) for b in orbit_bits(g, config.bits, moves, cap))


def bfs_partition(g: Graph, moves: Sequence[int] = None,
                  configs: Iterable[int] = None) -> FrozenSet[FrozenSet[int]]:
    """Orbit partition of the given configurations (default: all of them)."""
    todo = set(range(2 ** g.m) if configs is None else configs)
    parts = set()
    while todo:
        x = todo.pop()
        orb = orbit_bits(g, x, moves)
        todo -= orb
        parts.add(orb)
    return frozenset(parts)


# --- simple-weight update ------------------------------------------------------

def sw_update_predict(basis: SimpleBasis, g: Graph, G: EdgeSet, e: int) -> int:
    """Predicted ``sw(E(e) + rho_e G)`` from the overlap of the two decompositions."""
    n = g.n
    dG = basis.decompose_bits(G.bits)
    dE = basis.decompose_bits(g.edge_cut_masks[e])
    i = gf2.popcount(dG)
    overlap = gf2.popcount(dG & dE)
    if basis.anchor not in g.edges[e]:
        if overlap == 0:
            return i + 2
        if overlap == 1:
            return i
        return i - 2
    if overlap == i - 1:
        return i
    return n - i - 2


def sw_update_direct(basis: SimpleBasis, g: Graph, G: EdgeSet, e: int) -> int:
    y = g.edge_cut_masks[e] ^ flip_bits(g, G.bits, e)
    return basis.weight_bits(y)
