"""
Utilities for binary numpy matrices and GF(2) bit-mask vectors.
"""

from __future__ import annotations

from typing import Iterable, List, Tuple

import numpy as np


def reduced_row_echelon_form(mat: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """
    Return a reduced row echelon copy of a binary matrix and its pivot columns.
    """
    mat = np.array(mat, dtype=np.uint8) & 1
    rows, cols = mat.shape
    pivots: List[int] = []

    r = 0
    for c in range(cols):
        if r == rows:
            break
        # Find a row at or after r with a 1 in column c.
        hits = np.nonzero(mat[r:, c])[0]
        if hits.size == 0:
            continue
        row = r + int(hits[0])
        if row != r:
            mat[[r, row]] = mat[[row, r]]

        # Clear column c everywhere else.
        others = np.nonzero(mat[:, c])[0]
        others = others[others != r]
        if others.size:
            mat[others] ^= mat[r]

        pivots.append(c)
        r += 1

    return mat, pivots


def rank(mat: np.ndarray) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    return len(reduced_row_echelon_form(mat)[1])


def bitmask_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of integers read as bit vectors (xor basis insertion)."""
    basis: List[int] = []
    for v in vectors:
        v = int(v)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def bitmask_independent(vectors: Iterable[int]) -> bool:
    vectors = [int(v) for v in vectors]
    return bitmask_rank(vectors) == len(vectors)
