"""Edge space, vertex space and bond space of a graph over GF(2).

An :class:`EdgeSet` is a subset of the edges (a GF(2) vector of length m),
a :class:`VertexSet` a subset of the vertices. The bond space is the span of
the vertex cuts ``E(v)``; the simple basis fixes vertex 0 as the anchor and
uses ``E(1), ..., E(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, Tuple

from . import gf2
from .errors import DimensionMismatch, NotInBond, ParseError, VertexOutOfRange
from .graph import Graph, SpanningTree


@dataclass(frozen=True)
class _Bits:
    bits: int
    size: int

    def _check(self, other):
        if type(other) is not type(self) or other.size != self.size:
            raise DimensionMismatch(f"cannot add {other!r} to {self!r}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.bits ^ other.bits, self.size)

    __xor__ = __add__

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(gf2.bits_of(self.bits))

    def __len__(self) -> int:
        return gf2.popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]):
        idx = list(indices)
        if any(not 0 <= i < size for i in idx):
            raise DimensionMismatch(f"index outside 0..{size - 1}: {idx}")
        return cls(gf2.from_indices(idx), size)

    @classmethod
    def empty(cls, size: int):
        return cls(0, size)


class EdgeSet(_Bits):
    """Subset of E, indexed by canonical edge index."""

    @property
    def m(self) -> int:
        return self.size

    def pairs(self, g: Graph):
        return [g.edges[i] for i in self]

    def __repr__(self):
        return f"EdgeSet({sorted(self)}, m={self.size})"


class VertexSet(_Bits):
    """Subset of V."""

    @property
    def n(self) -> int:
        return self.size

    def __repr__(self):
        return f"VertexSet({sorted(self)}, n={self.size})"


def sym_diff(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    return a + b


def vertex_cut(g: Graph, v: int) -> EdgeSet:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return EdgeSet(g.incidence_masks[v], g.m)


def edge_cut(g: Graph, U) -> EdgeSet:
    """Edges with exactly one endpoint in U (a VertexSet or an iterable of vertices)."""
    ubits = U.bits if isinstance(U, VertexSet) else gf2.from_indices(U)
    if ubits >> g.n:
        raise VertexOutOfRange(f"vertex set {U!r} outside 0..{g.n - 1}")
    return EdgeSet(cut_bits(g, ubits), g.m)


def cut_bits(g: Graph, ubits: int) -> int:
    out = 0
    for i, (x, y) in enumerate(g.edges):
        if (ubits >> x ^ ubits >> y) & 1:
            out |= 1 << i
    return out


def edge_cut_of_edge(g: Graph, e: int) -> EdgeSet:
    """E(e) := E({x, y}) for the edge e = {x, y}."""
    return EdgeSet(g.edge_cut_masks[e], g.m)


class SimpleBasis:
    """Basis ``E(v), v = 1..n-1`` of the bond space, anchored at vertex 0.

    The echelon form is computed once here and reused by every membership
    and decomposition query.
    """

    anchor = 0

    def __init__(self, g: Graph):
        self.graph = g
        self.vertices: Tuple[int, ...] = tuple(range(1, g.n))
        self.vectors: Tuple[int, ...] = tuple(g.incidence_masks[v] for v in self.vertices)
        self._solver = gf2.Solver(self.vectors)
        self.rank = self._solver.rank
        assert self.rank == g.n - 1, "vertex cuts E(v), v != 0, must be independent"

    def basis(self):
        return [EdgeSet(b, self.graph.m) for b in self.vectors]

    def decompose_bits(self, G: int) -> int:
        """Vertex bitset S (anchor never set) with sum of E(v), v in S, equal to G."""
        coeffs = self._solver.solve(G)
        if coeffs is None:
            raise NotInBond(f"{gf2.bits_of(G)} is not in the bond space")
        # coefficient j belongs to vertex j + 1
        return coeffs << 1

    def contains_bits(self, G: int) -> bool:
        return self._solver.in_span(G)

    def weight_bits(self, G: int) -> int:
        return gf2.popcount(self.decompose_bits(G))


@lru_cache(maxsize=256)
def simple_basis(g: Graph) -> SimpleBasis:
    return SimpleBasis(g)


def _as_bits(b: SimpleBasis, G) -> int:
    if isinstance(G, EdgeSet):
        if G.size != b.graph.m:
            raise DimensionMismatch(f"{G!r} does not live on a graph with m={b.graph.m}")
        return G.bits
    return int(G)


def delta_decompose(b: SimpleBasis, G) -> FrozenSet[int]:
    """The unique basis vertices S with G equal to the sum of E(v) over S.

    Raises :class:`NotInBond` when G is outside the bond space.
    """
    return frozenset(gf2.bits_of(b.decompose_bits(_as_bits(b, G))))


def in_bond(b: SimpleBasis, G) -> bool:
    return b.contains_bits(_as_bits(b, G))


def simple_weight(b: SimpleBasis, G) -> int:
    return b.weight_bits(_as_bits(b, G))


class CosetSolver:
    """Coset representatives ``F`` drawn from subsets of ``E - T``.

    Every G splits uniquely as ``sum_v c_v E(v) + sum_{e not in T} d_e {e}``;
    the d-part is the representative. The split is linear, so it is
    tabulated per byte of G once and each query is a few lookups.
    """

    def __init__(self, g: Graph, tree: SpanningTree):
        self.graph = g
        self.tree = tree
        self.cotree: Tuple[int, ...] = tuple(i for i in range(g.m) if i not in tree.tree_edges)
        gens = [g.incidence_masks[v] for v in range(1, g.n)] + [1 << e for e in self.cotree]
        solver = gf2.Solver(gens)
        assert solver.rank == g.m
        # packed image of edge e: representative bits | vertex bits << m
        split = g.n - 1
        unit = []
        for e in range(g.m):
            coeffs = solver.solve(1 << e)
            F = 0
            for j, c in enumerate(self.cotree):
                if coeffs >> (split + j) & 1:
                    F |= 1 << c
            S = (coeffs & ((1 << split) - 1)) << 1
            unit.append(F | S << g.m)
        self._tables = []
        for lo in range(0, g.m, 8):
            chunk = unit[lo:lo + 8]
            table = [0] * (1 << len(chunk))
            for x in range(1, len(table)):
                low = x & -x
                table[x] = table[x ^ low] ^ chunk[low.bit_length() - 1]
            self._tables.append(table)

    def split_bits(self, G: int) -> Tuple[int, int]:
        """``(F, S)``: representative and vertex bitset with G = F + sum of E(v), v in S."""
        packed = 0
        for table in self._tables:
            packed ^= table[G & 0xFF]
            G >>= 8
        m = self.graph.m
        return packed & ((1 << m) - 1), packed >> m

    def representative_bits(self, G: int) -> int:
        return self.split_bits(G)[0]


@lru_cache(maxsize=256)
def coset_solver(g: Graph, tree: SpanningTree) -> CosetSolver:
    return CosetSolver(g, tree)


def coset_representative(g: Graph, tree: SpanningTree, G) -> EdgeSet:
    bits = G.bits if isinstance(G, EdgeSet) else int(G)
    return EdgeSet(coset_solver(g, tree).representative_bits(bits), g.m)


# --- textual forms ------------------------------------------------------------

def parse_edge_set(g: Graph, text: str) -> EdgeSet:
    """``"0-1,1-2"``; the literal ``"-"`` (or an empty string) is the empty set."""
    text = text.strip()
    if text in ("", "-"):
        return EdgeSet.empty(g.m)
    bits = 0
    for tok in text.split(","):
        try:
            a, b = (int(x) for x in tok.strip().split("-"))
        except ValueError:
            raise ParseError(f"bad edge token {tok!r}") from None
        bits ^= 1 << g.edge_index(a, b)
    return EdgeSet(bits, g.m)


def format_edge_set(g: Graph, F: EdgeSet) -> str:
    if not F:
        return "-"
    return ",".join(f"{u}-{v}" for u, v in F.pairs(g))


def edge_set_json(g: Graph, F: EdgeSet):
    return [list(p) for p in F.pairs(g)]


def edge_set_from_json(g: Graph, data) -> EdgeSet:
    bits = 0
    for a, b in data:
        bits ^= 1 << g.edge_index(int(a), int(b))
    return EdgeSet(bits, g.m)
