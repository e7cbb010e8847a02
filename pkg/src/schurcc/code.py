"""Constacyclic code objects and their basic operations.

A code is identified by (ring, generator g | x^n - a). Generators are
normalized to g(0) = 1 at construction, which is always possible because
g(0) divides the nonzero constant a; with that convention, "equal up to a
unit" statements become exact equalities throughout the toolkit.

Codewords are plain length-n integer vectors (numpy arrays or sequences);
no wrapper class is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    NotADivisor,
    NotConstacyclic,
    RingMismatch,
    ZeroCode,
    ZeroGenerator,
)
from .linalg import MatrixFq, in_row_space, rref_array, row_spaces_equal
from .polyring import Poly, RingSpec

DEFAULT_DISTANCE_BUDGET = 10**6


class ConstacyclicCode:
    """The ideal generated by g in F_q[x]/(x^n - a), as a length-n code.

    Attributes:
        ring: the ambient quotient ring.
        g: the generator, normalized so g(0) = 1.
        k: dimension, n - deg(g).
        gen_matrix: the k x n shift matrix G (row i = coeff(x^i * g)).
        basis: cached canonical RREF of G (the standard form G').
    """

    __slots__ = ("ring", "g", "k", "gen_matrix", "basis")

    def __init__(self, ring: RingSpec, g: Poly):
        if g.is_zero():
            raise ZeroGenerator("the zero polynomial does not generate a code")
        if g.field != ring.field:
            raise RingMismatch("generator is over a different field")
        if g.degree > ring.n:
            raise NotADivisor(
                f"deg g = {g.degree} exceeds the ring degree n = {ring.n}"
            )
        if not (ring.modulus() % g).is_zero():
            raise NotADivisor(
                f"{g.text()} does not divide x^{ring.n}-{ring.a} over F_{ring.q}"
            )
        # g | x^n - a and a != 0 force g(0) != 0, so this scaling always works
        g = g.scale(ring.field.inv(g.constant))
        self.ring = ring
        self.g = g
        self.k = ring.n - g.degree
        rows = np.zeros((max(self.k, 1), ring.n), dtype=np.int64)
        for i in range(self.k):
            rows[i, i : i + len(g.coeffs)] = g.coeffs
        if self.k == 0:
            rows = rows[:0]
        self.gen_matrix = MatrixFq(rows, ring.field)
        reduced, rank, _ = rref_array(rows, ring.q)
        self.basis = MatrixFq(reduced[:rank], ring.field)

    @property
    def n(self) -> int:
        return self.ring.n

    def contains(self, v: Sequence[int]) -> bool:
        if self.k == 0:
            return not np.asarray(v, dtype=np.int64).any()
        return in_row_space(self.basis, v)

    def codewords(self):
        """Iterate all q**k codewords (use only at small scale)."""
        q = self.ring.q
        basis = self.basis.array
        for idx in np.ndindex(*([q] * self.k)):
            yield (np.asarray(idx, dtype=np.int64) @ basis) % q

    def to_json(self) -> dict:
        return {
            "q": self.ring.q,
            "n": self.ring.n,
            "a": self.ring.a,
            "g": self.g.coeff_list(),
            "k": self.k,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConstacyclicCode":
        from .gf import FieldSpec

        ring = RingSpec(FieldSpec(int(data["q"])), int(data["n"]), int(data["a"]))
        return cls(ring, Poly(tuple(int(c) for c in data["g"]), ring.field))

    def __eq__(self, other):
        if not isinstance(other, ConstacyclicCode):
            return NotImplemented
        return self.ring == other.ring and self.g == other.g

    def __hash__(self):
        return hash((self.ring, self.g))

    def __repr__(self):
        return f"ConstacyclicCode(q={self.ring.q}, n={self.n}, a={self.ring.a}, g={self.g.text()!r}, k={self.k})"


def code_from_generator(ring: RingSpec, g: Poly) -> ConstacyclicCode:
    """Build the code generated by g, verifying g | x^n - a.

    Raises :class:`NotADivisor` when g does not divide the modulus and
    :class:`ZeroGenerator` for g = 0. The zero code (g = x^n - a, k = 0)
    is representable.
    """
    return ConstacyclicCode(ring, g)


def shift(c: Sequence[int], ring: RingSpec, i: int = 1) -> np.ndarray:
    """Apply the constacyclic shift (c_1,...,c_n) -> (a*c_n, c_1,...,c_{n-1}) i times.

    Equals coeff(x^i * poly(c) mod x^n - a); whole trips around the block
    multiply by a.
    """
    vec = np.asarray(c, dtype=np.int64) % ring.q
    if vec.shape != (ring.n,):
        raise DimensionMismatch(f"codeword length {vec.shape} != n = {ring.n}")
    if i < 0:
        raise ValueError("shift count must be non-negative")
    whole, i = divmod(i, ring.n)
    scale = pow(ring.a, whole, ring.q)
    out = np.concatenate([vec[ring.n - i :] * ring.a, vec[: ring.n - i]])
    return (out * scale) % ring.q


def _shift_rows(mat: np.ndarray, ring: RingSpec) -> np.ndarray:
    if mat.shape[0] == 0:
        return mat
    return np.hstack([(mat[:, -1:] * ring.a) % ring.q, mat[:, :-1]])


def is_constacyclic(basis: MatrixFq, ring: RingSpec) -> bool:
    """True iff the row space of ``basis`` is closed under the shift operator."""
    if basis.cols != ring.n:
        raise DimensionMismatch(f"{basis.cols} columns != n = {ring.n}")
    reduced, rank, _ = rref_array(basis.array, ring.q)
    base = reduced[:rank]
    if rank == 0:
        return True
    shifted = _shift_rows(base, ring)
    _, joint_rank, _ = rref_array(np.vstack([base, shifted]), ring.q)
    return joint_rank == rank


def generator_from_basis(rows: MatrixFq, ring: RingSpec) -> Poly:
    """Recover the minimal generator (g(0) = 1) of a constacyclic span.

    Takes the RREF of the given spanning rows; for a constacyclic code of
    dimension k the pivots are exactly the first k columns and the last
    nonzero row is coeff(x^(k-1) * g), so g is read off by dropping the k-1
    leading zeros. The candidate is then re-verified (divides x^n - a and
    regenerates the same row space); failing that the span was not
    constacyclic and :class:`NotConstacyclic` is raised.
    """
    if rows.cols != ring.n:
        raise DimensionMismatch(f"{rows.cols} columns != n = {ring.n}")
    reduced, rank, pivots = rref_array(rows.array, ring.q)
    if rank == 0:
        raise ZeroCode("cannot recover a generator for the zero code")
    if pivots != list(range(rank)):
        raise NotConstacyclic(
            "row space has no upper-triangular shift basis (pivots not 0..k-1)"
        )
    k = rank
    g = Poly(tuple(int(v) for v in reduced[k - 1][k - 1 :]), ring.field)
    try:
        candidate = ConstacyclicCode(ring, g)
    except NotADivisor as exc:
        raise NotConstacyclic(f"recovered candidate fails re-verification: {exc}")
    if not row_spaces_equal(candidate.basis, MatrixFq(reduced[:rank], ring.field)):
        raise NotConstacyclic("recovered candidate spans a different row space")
    return candidate.g


@dataclass(frozen=True)
class MinDistanceResult:
    """Outcome of a minimum-distance computation.

    ``method`` is "exact" when all q**k nonzero codewords were enumerated and
    "lower_bound" when only the ceil(n/k) bound is reported. When an exact
    weight-(n/k) word exists, ``support_start`` is the first nonzero position
    (0-indexed) of one such word, whose support is then {p + z*k}.
    """

    value: int
    method: str
    support_start: int | None = None


def _enumerate_weights(basis: np.ndarray, q: int):
    """Yield (message index block, weights) over all nonzero combinations."""
    k, n = basis.shape
    total = q**k
    radices = q ** np.arange(k, dtype=np.int64)
    block = 1 << 13
    for start in range(1, total, block):
        stop = min(start + block, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = (idx[:, None] // radices[None, :]) % q
        words = np.zeros((len(idx), n), dtype=np.int64)
        for j in range(k):  # per-term reduction keeps intermediates < q**2
            words = (words + digits[:, j : j + 1] * basis[j]) % q
        yield words


def min_distance(
    code: ConstacyclicCode, budget: int = DEFAULT_DISTANCE_BUDGET
) -> MinDistanceResult:
    """Exact minimum weight by exhaustion when q**k <= budget, else ceil(n/k).

    For an exact computation that attains weight n/k (only possible when
    k | n), the support of a witness word is verified to be the arithmetic
    progression {p + z*k : 0 <= z < n/k} and p is reported.
    """
    if code.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    q, n, k = code.ring.q, code.n, code.k
    if q**k > budget:
        return MinDistanceResult(math.ceil(n / k), "lower_bound")
    best = n + 1
    witness = None
    for words in _enumerate_weights(code.basis.array, q):
        weights = np.count_nonzero(words, axis=1)
        i = int(np.argmin(weights))
        if weights[i] < best:
            best = int(weights[i])
            witness = words[i].copy()
    support_start = None
    if k and n % k == 0 and best == n // k and witness is not None:
        supp = np.nonzero(witness)[0]
        p = int(supp[0])
        expected = p + k * np.arange(n // k)
        if not np.array_equal(supp, expected):
            raise AssertionError(
                f"weight-{best} word has irregular support {supp.tolist()}"
            )
        support_start = p
    return MinDistanceResult(best, "exact", support_start)


def exact_min_weight(basis: MatrixFq, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Exhaustive minimum weight of an arbitrary span (raises when over budget)."""
    reduced, rank, _ = rref_array(basis.array, basis.field.q)
    if rank == 0:
        raise ZeroCode("the zero span has no minimum weight")
    q = basis.field.q
    if q**rank > budget:
        raise ValueError(f"q**k = {q**rank} exceeds the enumeration budget {budget}")
    best = basis.cols + 1
    for words in _enumerate_weights(reduced[:rank], q):
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best
