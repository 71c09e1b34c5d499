"""Packed GF(2) matrices and Cayley-graph closure for flip generators.

A d x d matrix is packed column-major into one int: column j occupies bits
``j*d .. j*d+d-1``. Every generator used in this package has the "lit-only"
form ``x -> x + mask if x has bit pivot else x``; left-multiplying a packed
matrix by such a generator is a shift, an AND, one multiply and an XOR, which
vectorizes over a numpy frontier whenever ``d*d <= 64``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import CapExceeded, DimensionMismatch

DEFAULT_CAP = 2_000_000


def _rep(dim: int) -> int:
    return sum(1 << (j * dim) for j in range(dim))


def identity_key(dim: int) -> int:
    return sum(1 << (j * dim + j) for j in range(dim))


@dataclass(frozen=True, order=True)
class GroupElement:
    """An invertible GF(2) matrix acting on column vectors (int bitsets)."""

    key: int
    dim: int

    @classmethod
    def identity(cls, dim: int) -> "GroupElement":
        return cls(identity_key(dim), dim)

    @classmethod
    def from_columns(cls, cols: Sequence[int]) -> "GroupElement":
        d = len(cols)
        return cls(sum(c << (j * d) for j, c in enumerate(cols)), d)

    @classmethod
    def lit_only(cls, dim: int, pivot: int, mask: int) -> "GroupElement":
        """Matrix of ``x -> x + mask`` if bit ``pivot`` of x is set, else ``x``."""
        cols = [1 << j for j in range(dim)]
        cols[pivot] ^= mask
        return cls.from_columns(cols)

    def columns(self) -> List[int]:
        d = self.dim
        full = (1 << d) - 1
        return [(self.key >> (j * d)) & full for j in range(d)]

    def rows(self) -> List[List[int]]:
        cols = self.columns()
        return [[c >> i & 1 for c in cols] for i in range(self.dim)]

    def apply(self, x: int) -> int:
        d = self.dim
        full = (1 << d) - 1
        out = 0
        j = 0
        while x:
            if x & 1:
                out ^= (self.key >> (j * d)) & full
            x >>= 1
            j += 1
        return out

    def compose(self, other: "GroupElement") -> "GroupElement":
        """``self o other``: apply ``other`` first."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim}")
        return GroupElement.from_columns([self.apply(c) for c in other.columns()])

    __mul__ = compose

    def is_identity(self) -> bool:
        return self.key == identity_key(self.dim)

    def to_bytes(self) -> bytes:
        return self.key.to_bytes((self.dim * self.dim + 7) // 8, "big")


def lit_only_left(key: int, dim: int, pivot: int, mask: int) -> int:
    """Left-multiply the packed matrix ``key`` by the lit-only generator."""
    return key ^ (((key >> pivot) & _rep(dim)) * mask)


def closure_keys(dim: int, gens: Sequence[Tuple[int, int]], cap: int = DEFAULT_CAP):
    """All packed matrices generated by the lit-only ``(pivot, mask)`` generators.

    BFS over the Cayley graph from the identity. Returns a sorted numpy
    uint64 array when the matrix fits one word, otherwise a sorted list of
    ints. Raises :class:`CapExceeded` once more than ``cap`` elements appear.
    """
    if dim * dim <= 64:
        return _closure_numpy(dim, gens, cap)
    return _closure_python(dim, gens, cap)


def _closure_numpy(dim, gens, cap):
    # generators are involutions, so the Cayley graph is undirected and a
    # layer's neighbours lie in the previous, current or next layer only
    rep = np.uint64(_rep(dim))
    shifts = [(np.uint64(p), np.uint64(mask)) for p, mask in gens]
    prev = np.empty(0, dtype=np.uint64)
    layer = np.array([identity_key(dim)], dtype=np.uint64)
    layers = [layer]
    total = 1
    while layer.size and shifts:
        cand = np.unique(np.concatenate([layer ^ (((layer >> p) & rep) * mk) for p, mk in shifts]))
        for old in (prev, layer):
            if old.size:
                pos = np.searchsorted(old, cand)
                pos[pos == old.size] = 0
                cand = cand[old[pos] != cand]
        total += cand.size
        if total > cap:
            raise CapExceeded(f"group closure exceeded cap {cap}")
        prev, layer = layer, cand
        layers.append(cand)
    return np.sort(np.concatenate(layers))


def _closure_python(dim, gens, cap):
    rep = _rep(dim)
    start = identity_key(dim)
    visited = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for k in frontier:
            for p, mask in gens:
                y = k ^ (((k >> p) & rep) * mask)
                if y not in visited:
                    visited.add(y)
                    nxt.append(y)
                    if len(visited) > cap:
                        raise CapExceeded(f"group closure exceeded cap {cap}")
        frontier = nxt
    return sorted(visited)


def closure_elements(dim: int, gens: Sequence[Tuple[int, int]], cap: int = DEFAULT_CAP) -> List[GroupElement]:
    """Same as :func:`closure_keys` but wrapped, sorted by packed value."""
    return [GroupElement(int(k), dim) for k in closure_keys(dim, gens, cap)]


def closure_order(dim: int, gens: Sequence[Tuple[int, int]], cap: int = DEFAULT_CAP) -> int:
    return len(closure_keys(dim, gens, cap))


def generic_closure(gens: Iterable[GroupElement], cap: int = DEFAULT_CAP) -> List[GroupElement]:
    """Closure under ``compose`` for arbitrary matrices; slow reference path."""
    gens = list(gens)
    if not gens:
        return []
    start = GroupElement.identity(gens[0].dim)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = s * a
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > cap:
                        raise CapExceeded(f"group closure exceeded cap {cap}")
        frontier = nxt
    return sorted(seen)
