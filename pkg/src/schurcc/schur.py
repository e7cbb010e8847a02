"""Schur (component-wise) products: vectors, codes, code powers, polynomial powers.

Powers of a constacyclic code need not be constacyclic, so they are
materialized as :class:`SpanCode` (a plain linear code with a canonical RREF
basis) and shift closure is always a checked property, never an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .code import ConstacyclicCode
from .errors import DimensionMismatch, RingMismatch
from .linalg import MatrixFq, rref_array
from .polyring import Poly, RingSpec


@dataclass(frozen=True)
class SpanCode:
    """A linear (not necessarily constacyclic) code, stored as its RREF basis."""

    ring: RingSpec
    basis: MatrixFq

    def __post_init__(self):
        reduced, rank, _ = rref_array(self.basis.array, self.ring.q)
        object.__setattr__(
            self, "basis", MatrixFq(reduced[:rank], self.ring.field)
        )

    @classmethod
    def from_rows(cls, ring: RingSpec, rows) -> "SpanCode":
        return cls(ring, MatrixFq(np.array(rows, dtype=np.int64), ring.field))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other):
        if not isinstance(other, SpanCode):
            return NotImplemented
        return self.ring == other.ring and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring, self.basis))

    def __repr__(self):
        return f"SpanCode(q={self.ring.q}, n={self.ring.n}, a={self.ring.a}, dim={self.dim})"


AnyCode = Union[ConstacyclicCode, SpanCode]


def as_span(code: AnyCode) -> SpanCode:
    """View any code as a plain linear span."""
    if isinstance(code, SpanCode):
        return code
    return SpanCode(code.ring, code.basis)


def schur_vec(c: Sequence[int], d: Sequence[int], q: int | None = None) -> np.ndarray:
    """Component-wise product of two equal-length vectors (mod q when given)."""
    cv = np.asarray(c, dtype=np.int64)
    dv = np.asarray(d, dtype=np.int64)
    if cv.shape != dv.shape:
        raise DimensionMismatch(f"lengths {cv.shape} vs {dv.shape}")
    out = cv * dv
    return out % q if q is not None else out


def _pairwise_products(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    prods = (a[:, None, :] * b[None, :, :]).reshape(-1, a.shape[1]) % q
    # pairwise products of shift bases repeat heavily; dedup before the RREF
    return np.unique(prods, axis=0)


def code_product(A: AnyCode, B: AnyCode) -> SpanCode:
    """Span of all pairwise Schur products of basis rows of A and B."""
    A, B = as_span(A), as_span(B)
    if A.ring != B.ring:
        raise RingMismatch(f"codes over {A.ring} and {B.ring}")
    if A.dim == 0 or B.dim == 0:
        return SpanCode(A.ring, MatrixFq(np.zeros((0, A.ring.n), dtype=np.int64), A.ring.field))
    rows = _pairwise_products(A.basis.array, B.basis.array, A.ring.q)
    return SpanCode(A.ring, MatrixFq(rows, A.ring.field))


def code_power(C: AnyCode, e: int) -> SpanCode:
    """The e-th Schur power via the binary decomposition of e.

    Uses C^(a) * C^(b) = C^(a+b), so only O(log e) products are formed.
    """
    if e < 1:
        raise ValueError(f"power must be >= 1, got {e}")
    base = as_span(C)
    result: SpanCode | None = None
    square = base
    while e:
        if e & 1:
            result = square if result is None else code_product(result, square)
        e >>= 1
        if e:
            square = code_product(square, square)
    assert result is not None
    return result


def power_sequence(C: AnyCode, count: int) -> list[SpanCode]:
    """[C^(1), ..., C^(count)] by iterated products with the base code."""
    base = as_span(C)
    out = [base]
    for _ in range(count - 1):
        out.append(code_product(out[-1], base))
    return out


def poly_schur_power(p: Poly, ring: RingSpec, e: int) -> Poly:
    """Coefficient-wise e-th power of the length-n embedding of p."""
    if e < 1:
        raise ValueError(f"power must be >= 1, got {e}")
    vec = ring.coeff_vector(p)
    out = np.array([pow(int(c), e, ring.q) for c in vec], dtype=np.int64)
    return ring.poly_from_vector(out)
