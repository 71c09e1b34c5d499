"""Brute-force reference implementations on plain Python sets.

Nothing here touches the bitset or echelon code in the package, so agreement
with it is real evidence.
"""

from itertools import chain, combinations


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def cut(edges, U):
    U = set(U)
    return frozenset(e for e in edges if len(U & set(e)) == 1)


def move(edges, config, eps):
    """Toggle every edge meeting eps in exactly one vertex, if eps is black."""
    if eps not in config:
        return config
    return frozenset(config) ^ frozenset(e for e in edges if len(set(e) & set(eps)) == 1)


def vertex_move(nbrs, U, v):
    if v not in U:
        return U
    return frozenset(U) ^ frozenset(nbrs[v])


def bond_space(n, edges):
    return {cut(edges, U) for U in subsets(range(n))}


def decompose(n, edges, G):
    """The S in 1..n-1 with the sum of E(v), v in S, equal to G; None if none."""
    hits = []
    for S in subsets(range(1, n)):
        acc = frozenset()
        for v in S:
            acc = acc ^ cut(edges, [v])
        if acc == frozenset(G):
            hits.append(frozenset(S))
    assert len(hits) <= 1
    return hits[0] if hits else None


def coset_rep(n, edges, tree, G):
    bond = bond_space(n, edges)
    cotree = [e for e in edges if e not in tree]
    hits = [frozenset(F) for F in subsets(cotree) if frozenset(G) ^ frozenset(F) in bond]
    assert len(hits) == 1
    return hits[0]


def all_configs(edges):
    return [frozenset(s) for s in subsets(edges)]


def orbit(edges, config, moves=None):
    moves = list(edges) if moves is None else moves
    seen = {frozenset(config)}
    todo = [frozenset(config)]
    while todo:
        x = todo.pop()
        for e in moves:
            y = move(edges, x, e)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def partition(edges, moves=None, configs=None):
    todo = set(all_configs(edges) if configs is None else configs)
    parts = set()
    while todo:
        o = orbit(edges, next(iter(todo)), moves)
        todo -= o
        parts.add(o)
    return frozenset(parts)


def group_order_by_permutations(points, generators):
    """Order of the group generated by maps on a finite point list.

    Each generator is a function point -> point; elements are stored as image
    tuples, so the result is the order of the permutation group they induce.
    """
    index = {p: i for i, p in enumerate(points)}
    gens = [tuple(index[f(p)] for p in points) for f in generators]
    ident = tuple(range(len(points)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = tuple(s[i] for i in a)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(seen)


def edge_flip_order(edges):
    configs = all_configs(edges)
    return group_order_by_permutations(configs, [lambda c, e=e: move(edges, c, e) for e in edges])


def vertex_flip_order(n, nbrs):
    points = [frozenset(s) for s in subsets(range(n))]
    return group_order_by_permutations(points, [lambda U, v=v: vertex_move(nbrs, U, v) for v in range(n)])


def shortest_distances(edges, source):
    """BFS distances from source over configurations (unidirectional)."""
    dist = {frozenset(source): 0}
    layer = [frozenset(source)]
    while layer:
        nxt = []
        for x in layer:
            for e in edges:
                y = move(edges, x, e)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        layer = nxt
    return dist
