"""Vertex-flipping orders of the Y graphs, grouped by pi1."""

from dataclasses import dataclass

from common import emit, parse_config

from edgeflip.corpus import non_line_graph_Y
from edgeflip.vertexflip import (all_Y_specs, build_Y, classify_Y, pi1,
                                 vertex_group_order_bruteforce)


@dataclass
class Config:
    """BFS order per (m, pi1) class with the predicted structure, if any."""
    max_m: int = 6
    json: bool = False


def main(cfg: Config):
    rows = []
    ok = True
    for m in range(3, cfg.max_m + 1):
        classes = {}
        for spec in all_Y_specs(m):
            classes.setdefault(pi1(spec), []).append(spec)
        odd_ones = {s.attachments for s in non_line_graph_Y(m)}
        for p, specs in sorted(classes.items()):
            orders = {vertex_group_order_bruteforce(build_Y(s)) for s in specs}
            d = classify_Y(specs[0])
            ok &= len(orders) == 1 and (d.order is None or orders == {d.order})
            rows.append({"m": m, "pi1": p, "specs": len(specs), "bfs_orders": ",".join(map(str, sorted(orders))),
                         "predicted": d.describe(),
                         "non_line_reps": ";".join(",".join(map(str, s.attachments))
                                                     for s in specs if s.attachments in odd_ones) or "-"})
    emit(rows, cfg.json, ["m", "pi1", "specs", "bfs_orders", "predicted", "non_line_reps"])
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main(parse_config(Config)))
