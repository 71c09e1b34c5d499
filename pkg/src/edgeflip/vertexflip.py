"""Vertex flipping (the lit-only sigma game) and the one-apex family Y.

Y has vertices ``0..m-1``: a path ``1-2-...-(m-1)`` plus an apex 0 joined
to each attachment point. Its invariant pi1 is an alternating sum of the
attachment points, and for four of its values the vertex-flipping group is
known in closed form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import FrozenSet, List, Tuple

from .cayley import DEFAULT_CAP, closure_keys
from .edgespace import VertexSet
from .errors import CapExceeded, DimensionMismatch, InvalidSpec, VertexOutOfRange
from .graph import Graph, build_graph, line_graph


def vertex_move(g: Graph, U: VertexSet, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    if U.size != g.n:
        raise DimensionMismatch(f"{U!r} does not fit n={g.n}")
    if v in U:
        return VertexSet(U.bits ^ g.neighbor_masks[v], g.n)
    return U


def vertex_group_order_bruteforce(g: Graph, cap: int = DEFAULT_CAP) -> int:
    gens = [(v, g.neighbor_masks[v]) for v in range(g.n)]
    return len(closure_keys(g.n, gens, cap))


def vertex_orbit_bits(g: Graph, x: int, cap: int = DEFAULT_CAP) -> FrozenSet[int]:
    seen = {x}
    queue = deque([x])
    nbm = g.neighbor_masks
    while queue:
        y = queue.popleft()
        for v in range(g.n):
            if y >> v & 1:
                z = y ^ nbm[v]
                if z not in seen:
                    seen.add(z)
                    if len(seen) > cap:
                        raise CapExceeded(f"orbit exceeded cap {cap}")
                    queue.append(z)
    return frozenset(seen)


def vertex_bfs_partition(g: Graph) -> FrozenSet[FrozenSet[int]]:
    todo = set(range(2 ** g.n))
    parts = set()
    while todo:
        orb = vertex_orbit_bits(g, todo.pop())
        todo -= orb
        parts.add(orb)
    return frozenset(parts)


@dataclass(frozen=True)
class LineGraphTransport:
    """Edge i of ``source`` is vertex i of ``line``; bitsets carry over unchanged."""

    source: Graph
    line: Graph

    @property
    def mapping(self) -> Tuple[int, ...]:
        return tuple(range(self.source.m))

    def to_vertex_set(self, F) -> VertexSet:
        return VertexSet(F.bits, self.line.n)

    def to_edge_set(self, U: VertexSet):
        from .edgespace import EdgeSet
        return EdgeSet(U.bits, self.source.m)


def line_graph_transport(X: Graph) -> LineGraphTransport:
    return LineGraphTransport(X, line_graph(X))


# --- the family Y ---------------------------------------------------------------

@dataclass(frozen=True)
class YGraphSpec:
    m: int
    attachments: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(self.attachments)
        object.__setattr__(self, "attachments", a)
        if self.m < 2:
            raise InvalidSpec(f"m must be at least 2, got {self.m}")
        if not a:
            raise InvalidSpec("need at least one attachment point")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise InvalidSpec(f"attachments must increase strictly: {a}")
        if a[0] < 1 or a[-1] > self.m - 1:
            raise InvalidSpec(f"attachments must lie in 1..{self.m - 1}: {a}")


def build_Y(spec: YGraphSpec) -> Graph:
    pairs = [(i, i + 1) for i in range(1, spec.m - 1)]
    pairs += [(0, i) for i in spec.attachments]
    return build_graph(spec.m, pairs)


def pi1(spec: YGraphSpec) -> int:
    total = sum((-1) ** t * i for t, i in enumerate(spec.attachments, start=1))
    if len(spec.attachments) % 2:
        total += spec.m
    assert 1 <= total <= spec.m - 1, f"pi1={total} out of range for {spec}"
    return total


def all_Y_specs(m: int) -> List[YGraphSpec]:
    out = []
    for size in range(1, m):
        for att in combinations(range(1, m), size):
            out.append(YGraphSpec(m, att))
    return out


@dataclass(frozen=True)
class VertexGroupDescriptor:
    kind: str  # "symmetric", "semidirect" or "unclassified"
    degree: int = 0
    exponent: int = 0
    pi1: int = 0

    @property
    def order(self):
        if self.kind == "symmetric":
            return factorial(self.degree)
        if self.kind == "semidirect":
            return 2 ** self.exponent * factorial(self.degree)
        return None

    def describe(self) -> str:
        if self.kind == "symmetric":
            return f"S_{self.degree}"
        if self.kind == "semidirect":
            return f"(Z/2Z)^{self.exponent} x| S_{self.degree}"
        return f"unclassified (pi1={self.pi1})"


def classify_Y(spec: YGraphSpec) -> VertexGroupDescriptor:
    m = spec.m
    if m < 3:
        raise InvalidSpec(f"classification needs m >= 3, got m={m}")
    p = pi1(spec)
    # for m == 3 both rules fire and predict groups of the same order 24;
    # the symmetric reading is reported
    if p in (1, m - 1):
        return VertexGroupDescriptor("symmetric", degree=m + 1, pi1=p)
    if p in (2, m - 2):
        return VertexGroupDescriptor("semidirect", degree=m,
                                     exponent=m - 1 if m % 2 else m - 2, pi1=p)
    return VertexGroupDescriptor("unclassified", pi1=p)


def path_plus_edge_family(m: int) -> List[Graph]:
    """Every graph made of a path with m-1 edges plus one further edge.

    The path is ``0-1-...-(m-1)``; the extra edge is either a chord of the
    path or a pendant edge to a new vertex m. Graphs are returned as built,
    not up to isomorphism.
    """
    path = [(i, i + 1) for i in range(m - 1)]
    out = []
    for u in range(m):
        for v in range(u + 2, m):
            out.append(build_graph(m, path + [(u, v)]))
    for u in range(m):
        out.append(build_graph(m + 1, path + [(u, m)]))
    return out


def match_Y_specs(G: Graph) -> List[YGraphSpec]:
    """Y-specs realized by ``G``, read off from its induced paths.

    If vertices ``p1..p_(m-1)`` induce a path and ``z`` is the remaining
    vertex, ``G`` is the Y-graph whose attachments are the positions t with
    ``z`` adjacent to ``p_t``. Every induced path on ``n-1`` vertices is tried.
    """
    n = G.n
    if n < 2:
        return []
    nbm = G.neighbor_masks
    found = set()

    def extend(path: List[int], on_path: int):
        if len(path) == n - 1:
            z = next(v for v in range(n) if not on_path >> v & 1)
            att = tuple(t + 1 for t, p in enumerate(path) if nbm[z] >> p & 1)
            if att:
                found.add(YGraphSpec(n, att))
            return
        x = path[-1]
        for y in G.neighbors[x]:
            if not on_path >> y & 1 and nbm[y] & on_path == 1 << x:
                extend(path + [y], on_path | 1 << y)

    for s in range(n):
        extend([s], 1 << s)
    return sorted(found, key=lambda sp: sp.attachments)
