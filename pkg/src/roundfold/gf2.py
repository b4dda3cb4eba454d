"""Tiny GF(2) linear algebra on int bitmasks.

Vectors live in GF(2)^m encoded as Python ints; coordinate j of a vector of
width m sits at bit (m - 1 - j), so the integer order coincides with the
lexicographic order on coordinate strings (coordinate 0 is most significant).
All subspaces here have m <= ~20, so plain ints beat any array library.
"""

from __future__ import annotations

from typing import Iterable


def rref(vectors: Iterable[int]) -> dict[int, int]:
    """Reduced row echelon form of the span of ``vectors``.

    Returns a map ``pivot_bit -> row`` where each row has leading bit
    ``pivot_bit`` and every other row is zero at that bit.
    """
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            if p in pivots:
                v ^= pivots[p]
            else:
                pivots[p] = v
                break
    # clear pivot columns from the other rows
    for p in sorted(pivots):
        row = pivots[p]
        for q in pivots:
            if q != p and (pivots[q] >> p) & 1:
                pivots[q] ^= row
    return pivots


def coset_representative(v: int, pivots: dict[int, int]) -> int:
    """Unique element of v + span that vanishes on every pivot coordinate.

    With the MSB-first coordinate convention this is also the lexicographic
    minimum of the coset, so equality of representatives decides coset
    equality.
    """
    for p in sorted(pivots, reverse=True):
        if (v >> p) & 1:
            v ^= pivots[p]
    return v


def in_span(v: int, pivots: dict[int, int]) -> bool:
    return coset_representative(v, pivots) == 0


def complement_bits(pivots: dict[int, int], width: int) -> list[int]:
    """Non-pivot bit positions, descending (i.e. in coordinate order)."""
    return [b for b in range(width - 1, -1, -1) if b not in pivots]


def subspace_elements(generators: Iterable[int]) -> frozenset[int]:
    """Every XOR combination of ``generators`` (exhaustive, for oracles)."""
    elems = {0}
    for g in generators:
        elems |= {x ^ g for x in elems}
    return frozenset(elems)
