"""Move sequences between configurations.

Solvability is decided by orbit classification, so an impossibility verdict
never needs search. Solvable pairs get a shortest sequence from a
layer-synchronous bidirectional BFS. Every move is an involution, so the
state graph is undirected and the backward search uses the same moves.
Among shortest sequences the lexicographically smallest list of edge
indices is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .edgespace import EdgeSet, coset_solver
from .errors import CapExceeded, DimensionMismatch
from .flips import MoveSequence, apply_move
from .graph import Graph, spanning_tree
from .orbits import OrbitDescriptor, _require_n3, class_key, descriptor_of_key

DEFAULT_STATE_CAP = 4_000_000


@dataclass
class Solution:
    solvable: bool
    moves: Optional[MoveSequence] = None
    certificate: Optional[tuple] = None  # (initial descriptor, final descriptor)
    explored: int = 0

    @property
    def length(self) -> Optional[int]:
        return None if self.moves is None else len(self.moves)


class Unsolvable(Exception):
    """Raised by :func:`solve_or_raise`; carries both orbit descriptors."""

    kind = "Unsolvable"

    def __init__(self, initial: OrbitDescriptor, final: OrbitDescriptor):
        super().__init__(f"{initial.label} vs {final.label}")
        self.initial = initial
        self.final = final


def solve(g: Graph, initial: EdgeSet, final: EdgeSet,
          state_cap: int = DEFAULT_STATE_CAP) -> Solution:
    """Shortest move sequence from ``initial`` to ``final``.

    Returns ``Solution(solvable=False, certificate=...)`` when the two lie in
    different orbits. Raises :class:`CapExceeded` when the pair is solvable
    but the search budget runs out.
    """
    _require_n3(g)
    for c in (initial, final):
        if c.size != g.m:
            raise DimensionMismatch(f"{c!r} does not fit m={g.m}")
    cs = coset_solver(g, spanning_tree(g))
    ka, kb = class_key(cs, g.n, initial.bits), class_key(cs, g.n, final.bits)
    if ka != kb:
        return Solution(False, certificate=(descriptor_of_key(g, ka), descriptor_of_key(g, kb)))
    moves, explored = _bidirectional(g, initial.bits, final.bits, state_cap)
    return Solution(True, moves=moves, explored=explored)


def solve_or_raise(g: Graph, initial: EdgeSet, final: EdgeSet,
                   state_cap: int = DEFAULT_STATE_CAP) -> MoveSequence:
    sol = solve(g, initial, final, state_cap)
    if not sol.solvable:
        raise Unsolvable(*sol.certificate)
    return sol.moves


def verify_sequence(g: Graph, initial: EdgeSet, word: Sequence[int]) -> EdgeSet:
    config = initial
    for e in word:
        config = apply_move(g, config, e)
    return config


def _neighbors(g: Graph, x: int):
    masks = g.edge_cut_masks
    for e in range(g.m):
        if x >> e & 1:
            yield e, x ^ masks[e]


def _expand(g: Graph, layer: set, seen: dict, depth: int) -> set:
    nxt = set()
    for x in layer:
        for _, y in _neighbors(g, x):
            if y not in seen:
                seen[y] = depth
                nxt.add(y)
    return nxt


def _bidirectional(g: Graph, s: int, t: int, cap: int):
    if s == t:
        return [], 1
    fwd, bwd = {s: 0}, {t: 0}
    f_layers, b_layers = [{s}], [{t}]
    meet = set()
    while True:
        # grow the smaller frontier by one full layer
        grow_fwd = len(f_layers[-1]) <= len(b_layers[-1])
        if grow_fwd:
            new = _expand(g, f_layers[-1], fwd, len(f_layers))
            f_layers.append(new)
            meet = {x for x in new if x in bwd}
        else:
            new = _expand(g, b_layers[-1], bwd, len(b_layers))
            b_layers.append(new)
            meet = {x for x in new if x in fwd}
        if len(fwd) + len(bwd) > cap:
            raise CapExceeded(f"search exceeded {cap} states")
        if meet:
            break
        if not new:
            raise AssertionError("classified solvable but no path exists")
    a, b = len(f_layers) - 1, len(b_layers) - 1
    # a shortest path crosses forward layer a exactly in `meet`; mark which
    # forward states lie on such a path, layer by layer from the meeting side
    good = [set() for _ in range(a + 1)]
    good[a] = meet
    for i in range(a - 1, -1, -1):
        good[i] = {x for x in f_layers[i] if any(y in good[i + 1] for _, y in _neighbors(g, x))}
    path: List[int] = []
    x = s
    for i in range(a):
        e, x = next((e, y) for e, y in _neighbors(g, x) if y in good[i + 1])
        path.append(e)
    for j in range(b, 0, -1):
        e, x = next((e, y) for e, y in _neighbors(g, x) if bwd.get(y) == j - 1)
        path.append(e)
    assert x == t
    return path, len(fwd) + len(bwd)
