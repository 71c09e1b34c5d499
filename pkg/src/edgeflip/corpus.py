"""Named test graphs and exhaustive enumeration of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Tuple

import networkx as nx
from networkx.algorithms.graph_hashing import weisfeiler_lehman_graph_hash

from .graph import Graph, build_graph, line_graph
from .vertexflip import YGraphSpec, all_Y_specs, build_Y, path_plus_edge_family, pi1


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with hub 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def paw() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 on 0."""
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


# five vertices, apex on path vertices 2 and 4; pi1 = 2
Y524 = YGraphSpec(5, (2, 4))


def canonical_form(g: Graph) -> Tuple[int, Tuple]:
    """Isomorphism-invariant key by minimizing over all relabelings (small n only)."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return g.n, best


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return nx.is_isomorphic(to_networkx(a), to_networkx(b))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> Tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class."""
    all_pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(2 ** len(all_pairs)):
        pairs = [p for j, p in enumerate(all_pairs) if mask >> j & 1]
        if len(pairs) < n - 1:
            continue
        try:
            g = build_graph(n, pairs)
        except Exception:
            continue
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return tuple(sorted(seen.values(), key=lambda g: (g.m, g.edges)))


def small_connected_graphs(max_n: int = 5, max_m: int = 8, min_n: int = 3) -> List[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(g for g in connected_graphs(n) if g.m <= max_m)
    return out


@lru_cache(maxsize=None)
def connected_graphs_by_edges(max_m: int) -> Tuple[Graph, ...]:
    """All connected graphs with 1..max_m edges, any n, one per isomorphism class.

    Grown one edge at a time: every connected graph with at least two edges
    loses an edge on a cycle, or a leaf, and stays connected, so adding a
    chord or a pendant vertex to each class of the previous size reaches all.
    """
    level = [build_graph(2, [(0, 1)])]
    out = list(level)
    for _ in range(2, max_m + 1):
        buckets: Dict[tuple, List[Tuple[Graph, nx.Graph]]] = {}
        for g in level:
            n = g.n
            grow = [(u, v, n) for u in range(n) for v in range(u + 1, n) if (u, v) not in g.index]
            grow += [(u, n, n + 1) for u in range(n)]
            for u, v, size in grow:
                h = build_graph(size, g.edges + ((u, v),))
                H = to_networkx(h)
                bucket = buckets.setdefault((h.n, weisfeiler_lehman_graph_hash(H)), [])
                if not any(nx.is_isomorphic(H, K) for _, K in bucket):
                    bucket.append((h, H))
        level = sorted((h for b in buckets.values() for h, _ in b), key=lambda h: (h.n, h.edges))
        out += level
    return tuple(out)


def non_line_graph_Y(m: int) -> List[YGraphSpec]:
    """Y-specs with pi1 in {1, 2, m-2, m-1} not isomorphic to any line graph.

    Line graphs are those of the path-plus-one-edge family, which covers every
    Y that is a line graph. One spec per isomorphism class is returned.
    """
    lines = [line_graph(X) for X in path_plus_edge_family(m)]
    line_keys = {canonical_form(L) for L in lines if L.n == m}
    out = {}
    for spec in all_Y_specs(m):
        if pi1(spec) not in (1, 2, m - 2, m - 1):
            continue
        key = canonical_form(build_Y(spec))
        if key not in line_keys and key not in out:
            out[key] = spec
    return list(out.values())


def builtin_corpus() -> Dict[str, Graph]:
    """Every named graph the acceptance checks touch."""
    named = {
        "K3": complete(3),
        "P3": path(3),
        "P4": path(4),
        "K1,3": star(3),
        "K1,4": star(4),
        "C4": cycle(4),
        "C5": cycle(5),
        "K4": complete(4),
        "paw": paw(),
        "Y(5;2,4)": build_Y(Y524),
    }
    for spec in non_line_graph_Y(6):
        named["Y(6;" + ",".join(map(str, spec.attachments)) + ")"] = build_Y(spec)
    return named
