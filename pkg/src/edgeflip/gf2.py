"""GF(2) linear algebra on int bitsets.

A vector of length ``k`` is a Python int whose bit ``i`` is coordinate ``i``.
Python ints are arbitrary precision, so there is no word-size limit here;
the numpy fast path for group closure lives in :mod:`edgeflip.cayley`.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple


popcount = int.bit_count


def bits_of(x: int) -> List[int]:
    """Indices of set bits, ascending."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def from_indices(indices: Iterable[int]) -> int:
    x = 0
    for i in indices:
        x |= 1 << i
    return x


def rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of a list of int row vectors."""
    basis: dict[int, int] = {}
    r = 0
    for row in rows:
        row = _reduce(row, basis)
        if row:
            basis[row.bit_length() - 1] = row
            r += 1
    return r


def _reduce(x: int, basis: dict) -> int:
    while x:
        top = x.bit_length() - 1
        piv = basis.get(top)
        if piv is None:
            return x
        x ^= piv
    return 0


class Solver:
    """Express vectors as combinations of a fixed list of generators.

    Elimination is done once at construction; each pivot row carries a tag
    recording which generators were summed to produce it, so ``solve``
    returns the coefficient mask directly.
    """

    def __init__(self, generators: Sequence[int]):
        self.generators = tuple(generators)
        self._pivots: dict[int, Tuple[int, int]] = {}
        for j, g in enumerate(self.generators):
            vec, tag = g, 1 << j
            while vec:
                top = vec.bit_length() - 1
                if top not in self._pivots:
                    self._pivots[top] = (vec, tag)
                    break
                pv, pt = self._pivots[top]
                vec ^= pv
                tag ^= pt
        self.rank = len(self._pivots)

    def solve(self, target: int) -> Optional[int]:
        """Coefficient mask ``c`` with XOR of generators[j] over bits j of c equal to target.

        Returns None when the target is outside the span. Unique when the
        generators are independent.
        """
        vec, tag = target, 0
        while vec:
            top = vec.bit_length() - 1
            piv = self._pivots.get(top)
            if piv is None:
                return None
            vec ^= piv[0]
            tag ^= piv[1]
        return tag

    def in_span(self, target: int) -> bool:
        return self.solve(target) is not None


def combine(generators: Sequence[int], coeffs: int) -> int:
    x = 0
    for j in bits_of(coeffs):
        x ^= generators[j]
    return x
