"""The edge-flipping action.

A move on edge e toggles every edge sharing exactly one endpoint with e, but
only when e itself is black (in the configuration). Move sequences apply
left to right: the first listed move acts first, so the group element of a
word ``[w1, ..., wk]`` is the matrix product ``rho_wk ... rho_w1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .cayley import DEFAULT_CAP, GroupElement, closure_elements, closure_keys
from .edgespace import EdgeSet
from .errors import (DegreeTooSmall, DimensionMismatch, EdgeOutOfRange,
                     NotAVertexCutImage, ParseError, SameVertex, VertexOutOfRange)
from .graph import Graph, SpanningTree, tree_path

MoveSequence = List[int]


def _check_edge(g: Graph, e: int) -> None:
    if not 0 <= e < g.m:
        raise EdgeOutOfRange(f"edge index {e} outside 0..{g.m - 1}")


def flip_bits(g: Graph, x: int, e: int) -> int:
    """The move on raw bitsets, no validation."""
    return x ^ g.edge_cut_masks[e] if x >> e & 1 else x


def apply_move(g: Graph, config: EdgeSet, e: int) -> EdgeSet:
    _check_edge(g, e)
    if config.size != g.m:
        raise DimensionMismatch(f"{config!r} does not fit m={g.m}")
    return EdgeSet(flip_bits(g, config.bits, e), g.m)


def apply_word(g: Graph, config: EdgeSet, word: Iterable[int]) -> EdgeSet:
    for e in word:
        config = apply_move(g, config, e)
    return config


def generator(g: Graph, e: int) -> GroupElement:
    _check_edge(g, e)
    return GroupElement.lit_only(g.m, e, g.edge_cut_masks[e])


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """``a o b`` (b acts first)."""
    return a.compose(b)


def element_of_word(g: Graph, word: Sequence[int]) -> GroupElement:
    elem = GroupElement.identity(g.m)
    for e in word:
        elem = generator(g, e).compose(elem)
    return elem


def generate_subgroup(g: Graph, gens: Iterable[int], cap: int = DEFAULT_CAP) -> List[GroupElement]:
    """Every matrix reachable from products of the chosen generators, sorted by packed value."""
    pairs = _gen_pairs(g, gens)
    return closure_elements(g.m, pairs, cap)


def subgroup_order(g: Graph, gens: Iterable[int] = None, cap: int = DEFAULT_CAP) -> int:
    gens = range(g.m) if gens is None else gens
    return len(closure_keys(g.m, _gen_pairs(g, gens), cap))


def _gen_pairs(g: Graph, gens: Iterable[int]) -> List[Tuple[int, int]]:
    out = []
    for e in sorted(set(gens)):
        _check_edge(g, e)
        out.append((e, g.edge_cut_masks[e]))
    return out


# --- permutations of the vertex cuts -------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1; ``images[v]`` is the w with sigma(E(v)) = E(w)."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) < 3:
            raise DegreeTooSmall("vertex cuts are distinct only for n >= 3")
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(n))
        img[a], img[b] = b, a
        return cls(tuple(img))

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Functional composition: ``(self * other)(v) == self(other(v))``."""
        return Permutation(tuple(self.images[w] for w in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def order(self) -> int:
        from math import lcm
        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for v in range(self.n):
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = self.images[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self.images[w]
            out.append(tuple(cyc))
        return out


def alpha(g: Graph, elem: GroupElement) -> Permutation:
    """Permutation induced on the vertex cuts: v -> w where elem E(v) = E(w)."""
    if g.n < 3:
        raise DegreeTooSmall("vertex cuts are distinct only for n >= 3")
    if elem.dim != g.m:
        raise DimensionMismatch(f"element of dim {elem.dim} on graph with m={g.m}")
    where = {mask: v for v, mask in enumerate(g.incidence_masks)}
    images = []
    for v in range(g.n):
        w = where.get(elem.apply(g.incidence_masks[v]))
        if w is None:
            raise NotAVertexCutImage(f"image of E({v}) is not a vertex cut")
        images.append(w)
    if len(set(images)) != g.n:
        raise NotAVertexCutImage("element does not permute the vertex cuts")
    return Permutation(tuple(images))


def word_for_transposition(g: Graph, tree: SpanningTree, u: int, v: int) -> MoveSequence:
    """Tree-edge word whose image under alpha is the transposition (E(u), E(v)).

    With tree path ``u = u0, u1, ..., uk = v`` and ``e_j = {u_j, u_(j+1)}`` the
    word is ``e_(k-1) ... e_1 e_0 e_1 ... e_(k-1)``, length ``2k - 1``.
    """
    if g.n < 3:
        raise DegreeTooSmall("transpositions of vertex cuts need n >= 3")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise VertexOutOfRange(f"vertex {x} outside 0..{g.n - 1}")
    if u == v:
        raise SameVertex(f"transposition needs two distinct vertices, got {u}")
    path = tree_path(g, tree, u, v)
    steps = [g.edge_index(path[j], path[j + 1]) for j in range(len(path) - 1)]
    return steps[:0:-1] + steps


# --- move-sequence text ------------------------------------------------------

def parse_moves(g: Graph, text: str) -> MoveSequence:
    text = text.strip()
    if text in ("", "-"):
        return []
    out = []
    for tok in text.split(","):
        try:
            a, b = (int(x) for x in tok.strip().split("-"))
        except ValueError:
            raise ParseError(f"bad move token {tok!r}") from None
        out.append(g.edge_index(a, b))
    return out


def format_moves(g: Graph, word: Sequence[int]) -> str:
    return ",".join("{}-{}".format(*g.edges[e]) for e in word)
