"""Orbit counts and sizes: closed form against exhaustive BFS."""

from dataclasses import dataclass

from common import emit, parse_config

from edgeflip.corpus import connected_graphs_by_edges
from edgeflip.orbits import bfs_partition, closed_form_partition, orbit_count, orbit_size


@dataclass
class Config:
    """Census of orbits over all 2^m configurations."""
    max_m: int = 6
    json: bool = False


def main(cfg: Config):
    rows = []
    for g in connected_graphs_by_edges(cfg.max_m):
        if g.n < 3:
            continue
        closed = closed_form_partition(g)
        sizes = sorted(orbit_size(g, d) for d in closed)
        bfs = sorted(map(len, bfs_partition(g)))
        rows.append({"n": g.n, "m": g.m, "orbits": orbit_count(g), "sizes": ",".join(map(str, sizes)),
                     "agree": sizes == bfs and len(closed) == orbit_count(g),
                     "edges": " ".join(f"{u}-{v}" for u, v in g.edges)})
    emit(rows, cfg.json, ["n", "m", "orbits", "agree", "sizes", "edges"])
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main(parse_config(Config)))
