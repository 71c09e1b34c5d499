"""Canonical finite simple connected graphs.

Vertices are ``0..n-1``. Edges are stored as sorted ``(u, v)`` pairs with
``u < v``, listed in lexicographic order; the position of a pair in that list
is its edge index, and every bitset over edges uses that indexing.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from .errors import (EmptyVertexSet, NotConnected, NotSimple, ParseError,
                     SizeLimit, VertexOutOfRange)

Edge = Tuple[int, int]

# exhaustive path searches refuse anything larger
SEARCH_LIMIT = 20


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Edge, ...]

    @cached_property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.edges))

    def __hash__(self) -> int:
        # graphs key several caches; hashing the edge tuple each time adds up
        return self._hash

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """N(v) as a vertex bitset."""
        return tuple(sum(1 << w for w in nb) for nb in self.neighbors)

    @cached_property
    def incidence_masks(self) -> Tuple[int, ...]:
        """E(v), the edges at v, as an edge bitset."""
        masks = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            masks[u] |= 1 << i
            masks[v] |= 1 << i
        return tuple(masks)

    @cached_property
    def edge_cut_masks(self) -> Tuple[int, ...]:
        """E({x,y}) for each edge: the edges sharing exactly one endpoint with it."""
        inc = self.incidence_masks
        return tuple(inc[u] ^ inc[v] for u, v in self.edges)

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.index[key]
        except KeyError:
            raise ParseError(f"{u}-{v} is not an edge") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize. Raises on loops, repeats, or disconnection."""
    if n < 1:
        raise EmptyVertexSet("graph needs at least one vertex")
    seen = set()
    for p in pairs:
        if len(p) != 2:
            raise ParseError(f"edge {p!r} is not a pair")
        u, v = int(p[0]), int(p[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotSimple(f"duplicate edge {key}")
        seen.add(key)
    g = Graph(n, tuple(sorted(seen)))
    if len(_component(g, 0)) != n:
        raise NotConnected(f"graph on {n} vertices is not connected")
    return g


def _component(g: Graph, start: int) -> List[int]:
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


@dataclass(frozen=True)
class SpanningTree:
    tree_edges: frozenset

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.tree_edges)


@lru_cache(maxsize=256)
def spanning_tree(g: Graph) -> SpanningTree:
    """BFS tree from vertex 0, neighbors taken in ascending order."""
    tree = set()
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if y not in seen:
                seen.add(y)
                tree.add(g.edge_index(x, y))
                queue.append(y)
    return SpanningTree(frozenset(tree))


def tree_path(g: Graph, tree: SpanningTree, u: int, v: int) -> List[int]:
    """Vertices of the unique tree path u -> v, endpoints included."""
    adj: List[List[int]] = [[] for _ in range(g.n)]
    for i in tree.tree_edges:
        a, b = g.edges[i]
        adj[a].append(b)
        adj[b].append(a)
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def line_graph(g: Graph) -> Graph:
    """Vertex i of the result is edge i of ``g``; adjacency is sharing one endpoint."""
    pairs = []
    for i, a in enumerate(g.edges):
        for j in range(i + 1, g.m):
            if len(set(a) & set(g.edges[j])) == 1:
                pairs.append((i, j))
    return build_graph(g.m, pairs)


def has_path_of_k_edges(g: Graph, k: int) -> bool:
    """Whether ``g`` has a simple path with exactly k edges (exhaustive DFS)."""
    if g.m > SEARCH_LIMIT:
        raise SizeLimit(f"m={g.m} exceeds exhaustive search limit {SEARCH_LIMIT}")
    if k < 0:
        return False
    if k == 0:
        return True

    def extend(x: int, used: int, length: int) -> bool:
        if length == k:
            return True
        for y in g.neighbors[x]:
            if not used >> y & 1 and extend(y, used | 1 << y, length + 1):
                return True
        return False

    return any(extend(s, 1 << s, 0) for s in range(g.n))


def has_induced_path_of_k_vertices(g: Graph, k: int) -> bool:
    """Whether some k vertices induce a path.

    Grows induced paths vertex by vertex: a new endpoint must be adjacent to
    the current end and to nothing else already on the path.
    """
    if g.n > SEARCH_LIMIT:
        raise SizeLimit(f"n={g.n} exceeds exhaustive search limit {SEARCH_LIMIT}")
    if k <= 0:
        return k == 0
    nbm = g.neighbor_masks

    def extend(x: int, on_path: int, count: int) -> bool:
        if count == k:
            return True
        for y in g.neighbors[x]:
            if on_path >> y & 1:
                continue
            # y may touch only x among path vertices
            if nbm[y] & on_path == 1 << x and extend(y, on_path | 1 << y, count + 1):
                return True
        return False

    return any(extend(s, 1 << s, 1) for s in range(g.n))


# --- file formats -----------------------------------------------------------

def graph_from_json(data) -> Graph:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    try:
        return build_graph(int(data["n"]), data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None


def graph_from_text(text: str) -> Graph:
    """First line ``n m``, then m lines ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b in lines[1:1 + m]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad graph text: {exc}") from None
    if len(pairs) != m:
        raise ParseError(f"header says {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def load_graph(path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return graph_from_text(text)
