"""Quasi-twisted codes: block shifts, stride projections, and the reduction
of a quasi-twisted code to t constacyclic codes of length m = n/t."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, ProjectionNotConstacyclic
from .gf import FieldSpec
from .code import is_constacyclic
from .linalg import MatrixFq, rref_array
from .polyring import RingSpec
from .schur import SpanCode


def block_shift(c, t: int, a: int, q: int) -> np.ndarray:
    """Move the last t entries, scaled by a, to the front.

    (c_0,...,c_{n-1}) -> (a*c_{n-t}, ..., a*c_{n-1}, c_0, ..., c_{n-t-1});
    t = 1 is the plain constacyclic shift, and n/t applications scale by a.
    """
    vec = np.asarray(c, dtype=np.int64) % q
    n = vec.shape[0]
    if t < 1 or n % t:
        raise DimensionMismatch(f"block size t = {t} must divide the length {n}")
    return np.concatenate([(vec[n - t :] * a) % q, vec[: n - t]])


def project(c, i: int, t: int, m: int) -> np.ndarray:
    """Stride-t subsample starting at index i: (c_i, c_{t+i}, ..., c_{(m-1)t+i})."""
    vec = np.asarray(c, dtype=np.int64)
    if not 0 <= i < t:
        raise IndexError(f"block index {i} out of range [0, {t})")
    if vec.shape[0] != m * t:
        raise DimensionMismatch(f"length {vec.shape[0]} != m*t = {m * t}")
    return vec[i::t]


class QuasiTwistedCode:
    """A code closed under the t-block shift with constant a.

    The basis is canonicalized to RREF at construction and closure under the
    block shift is verified; t must divide n.
    """

    __slots__ = ("field", "n", "t", "m", "a", "basis")

    def __init__(self, field: FieldSpec, n: int, t: int, a: int, rows):
        a = int(a) % field.q
        if a == 0:
            raise ValueError("the twist constant a must be nonzero")
        if t < 1 or n % t:
            raise DimensionMismatch(f"t = {t} must divide n = {n}")
        arr = np.array(rows, dtype=np.int64) % field.q
        if arr.ndim != 2 or arr.shape[1] != n:
            raise DimensionMismatch(f"basis rows must have length n = {n}")
        reduced, rank, _ = rref_array(arr, field.q)
        base = reduced[:rank]
        shifted = np.array(
            [block_shift(row, t, a, field.q) for row in base], dtype=np.int64
        ).reshape(rank, n)
        if rank:
            _, joint, _ = rref_array(np.vstack([base, shifted]), field.q)
            if joint != rank:
                raise ValueError("row space is not closed under the block shift")
        self.field = field
        self.n = n
        self.t = t
        self.m = n // t
        self.a = a
        self.basis = MatrixFq(base, field)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def to_json(self) -> dict:
        return {
            "q": self.field.q,
            "n": self.n,
            "t": self.t,
            "a": self.a,
            "basis": self.basis.array.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuasiTwistedCode":
        return cls(
            FieldSpec(int(data["q"])),
            int(data["n"]),
            int(data["t"]),
            int(data["a"]),
            data["basis"],
        )

    def __repr__(self):
        return (
            f"QuasiTwistedCode(q={self.field.q}, n={self.n}, t={self.t}, "
            f"a={self.a}, dim={self.dim})"
        )


def decompose(code: QuasiTwistedCode) -> list[SpanCode]:
    """Project onto each block residue, giving t constacyclic codes of length m.

    Every projection is verified to be shift-closed in F_q[x]/(x^m - a); a
    failure would mean the input was not really quasi-twisted and raises
    :class:`ProjectionNotConstacyclic`.
    """
    ring = RingSpec(code.field, code.m, code.a)
    out = []
    for i in range(code.t):
        rows = code.basis.array[:, i :: code.t]
        span = SpanCode(ring, MatrixFq(rows, code.field))
        if not is_constacyclic(span.basis, ring):
            raise ProjectionNotConstacyclic(
                f"projection {i} is not closed under the length-{code.m} shift"
            )
        out.append(span)
    return out


def interleave(blocks: list[np.ndarray]) -> np.ndarray:
    """Inverse of the projections: merge t length-m vectors into one of length n."""
    t = len(blocks)
    m = len(blocks[0])
    out = np.zeros(m * t, dtype=np.int64)
    for i, b in enumerate(blocks):
        out[i::t] = b
    return out
