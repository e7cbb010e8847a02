"""Exact dense linear algebra over F_q: RREF, rank, span membership.

Matrices are numpy int64 arrays of canonical residues. Pivoting is
deterministic (scan columns left to right, take the topmost unprocessed row
with a nonzero entry), so the reduced form is a canonical representative of
the row space and row spaces can be compared by array equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch
from .gf import FieldSpec


def _as_array(rows, q: int) -> np.ndarray:
    arr = np.array(rows, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got shape {arr.shape}")
    return arr % q


def rref_array(mat: np.ndarray, q: int):
    """RREF of an int64 array mod q: returns (reduced copy, rank, pivot columns).

    Elimination is vectorized per pivot; entries stay below q so the int64
    intermediates (entry * pivot_row) cannot overflow for q < 2**31.
    """
    M = mat % q
    rows, cols = M.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, q)) % q
        other = M[:, c] != 0
        other[r] = False
        if other.any():
            M[other] = (M[other] - np.outer(M[other, c], M[r])) % q
        pivots.append(c)
        r += 1
    return M, r, pivots


@dataclass(frozen=True)
class MatrixFq:
    """A rows x cols matrix over F_q (immutable: the backing array is locked)."""

    array: np.ndarray
    field: FieldSpec

    def __post_init__(self):
        arr = _as_array(self.array, self.field.q)
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], field: FieldSpec) -> "MatrixFq":
        return cls(np.array(rows, dtype=np.int64), field)

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash((self.field, self.array.shape, self.array.tobytes()))

    def __repr__(self):
        return f"MatrixFq({self.array.tolist()}, q={self.field.q})"


def rref(m: MatrixFq):
    """Reduced row-echelon form with deterministic pivoting.

    Returns ``(reduced, rank, pivot_columns)``; zero rows sort to the bottom
    and every pivot is normalized to 1.
    """
    reduced, rank, pivots = rref_array(m.array, m.field.q)
    return MatrixFq(reduced, m.field), rank, pivots


def _reduce_vector(basis: np.ndarray, pivots: Sequence[int], v: np.ndarray, q: int):
    """Residual of v after elimination against rows of an RREF basis."""
    v = v % q
    for row, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * basis[row]) % q
    return v


def in_row_space(m: MatrixFq, v: Sequence[int]) -> bool:
    """Membership test: is v an F_q-linear combination of the rows of m?"""
    vec = np.asarray(v, dtype=np.int64)
    if vec.ndim != 1 or vec.shape[0] != m.cols:
        raise DimensionMismatch(
            f"vector of length {vec.shape} against {m.cols} columns"
        )
    reduced, rank, pivots = rref_array(m.array, m.field.q)
    residual = _reduce_vector(reduced[:rank], pivots, vec, m.field.q)
    return not residual.any()


def row_spaces_equal(m1: MatrixFq, m2: MatrixFq) -> bool:
    """Compare row spaces via their canonical RREF representatives."""
    if m1.field != m2.field:
        raise FieldMismatch("matrices over different fields")
    if m1.cols != m2.cols:
        raise DimensionMismatch(f"{m1.cols} columns vs {m2.cols}")
    r1, rank1, _ = rref_array(m1.array, m1.field.q)
    r2, rank2, _ = rref_array(m2.array, m2.field.q)
    if rank1 != rank2:
        return False
    return np.array_equal(r1[:rank1], r2[:rank2])
