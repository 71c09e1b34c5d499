"""Closed form vs. brute force, for ``edgeflip selfcheck``."""

from __future__ import annotations

from typing import Dict, List

from . import gf2
from .corpus import Y524, builtin_corpus
from .flips import subgroup_order
from .graph import Graph, line_graph, spanning_tree
from .orbits import bfs_partition, closed_form_partition, orbit_count, orbit_size
from .structure import structure, verify_structure
from .vertexflip import (build_Y, classify_Y, vertex_bfs_partition,
                         vertex_group_order_bruteforce)


def partitions_agree(g: Graph, moves=None) -> bool:
    closed = closed_form_partition(g)
    return frozenset(closed.values()) == bfs_partition(g, moves)


def restricted_partitions_agree(g: Graph, every_eps: bool = False) -> bool:
    """Tree moves alone split the bond space into the SW orbits; tree plus
    one cotree edge of F already gives the full orbits of F + B.

    With ``every_eps`` each edge of F is tried, otherwise only the smallest.
    """
    tree = spanning_tree(g)
    closed = closed_form_partition(g, tree)
    t_moves = sorted(tree.tree_edges)
    cosets: Dict[int, List[frozenset]] = {}
    for desc, members in closed.items():
        cosets.setdefault(desc.coset_rep.bits, []).append(members)
    for F, parts in cosets.items():
        members = frozenset().union(*parts)
        eps = list(gf2.bits_of(F)) if every_eps else [min(gf2.bits_of(F))] if F else []
        for moves in ([t_moves] if not F else [t_moves + [e] for e in eps]):
            if bfs_partition(g, moves, members) != frozenset(parts):
                return False
    return True


def check_graph(g: Graph, max_m_partition: int = 8) -> Dict[str, bool]:
    out = {}
    desc = structure(g)
    out["order"] = subgroup_order(g) == desc.order
    if g.m <= max_m_partition:
        closed = closed_form_partition(g)
        out["orbit_partition"] = frozenset(closed.values()) == bfs_partition(g)
        out["restricted_generators"] = restricted_partitions_agree(g)
        out["orbit_count"] = len(closed) == orbit_count(g)
        out["orbit_sizes"] = all(orbit_size(g, d) == len(s) for d, s in closed.items())
        L = line_graph(g)
        out["line_graph_transport"] = (
            vertex_bfs_partition(L) == bfs_partition(g)
            and vertex_group_order_bruteforce(L) == desc.order
        )
    if desc.order <= 5000:
        out["structure"] = verify_structure(g).ok
    return out


def selfcheck() -> Dict[str, object]:
    results: Dict[str, Dict[str, bool]] = {}
    for name, g in builtin_corpus().items():
        if g.n >= 3:
            results[name] = check_graph(g)
    y524 = classify_Y(Y524)
    results["Y(5;2,4)"] = {
        "classification": y524.kind == "semidirect" and y524.exponent == 4 and y524.degree == 5,
        "bfs_order": vertex_group_order_bruteforce(build_Y(Y524)) == y524.order,
    }
    failures: List[str] = [f"{g}:{c}" for g, cs in results.items() for c, ok in cs.items() if not ok]
    return {"ok": not failures, "failures": failures, "results": results}
