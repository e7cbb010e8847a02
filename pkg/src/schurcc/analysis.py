"""Schur-power analysis of constacyclic codes.

Covers dimension (Hilbert) sequences and their stabilization index, the
constacyclic subsequence at exponents z*ell + 1, pattern-polynomial
extraction, equilibrium generators and minimum distance, the invariance
criterion d**ell = 1, cycle lengths at equilibrium, the disjoint-support
equivalence battery, and enumeration of Schur-invariant cyclic codes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import (
    DEFAULT_DISTANCE_BUDGET,
    ConstacyclicCode,
    _enumerate_weights,
    is_constacyclic,
)
from .errors import BelowRegularity, NotCoprime, UnstabilizedError, ZeroCode
from .gf import FieldElement, FieldSpec, multiplicative_order
from .linalg import row_spaces_equal
from .polyring import Poly, RingSpec
from .schur import as_span, code_power, code_product, poly_schur_power


@dataclass(frozen=True)
class HilbertReport:
    """Dimension growth of a code under repeated Schur products.

    ``dims[i]`` is dim of the (i+1)-st power; the list runs up to the first
    repeated value (stabilization plus one confirming term). ``r`` is the
    first power index whose dimension never grows again, ``r_prime`` the
    unique z with z*ell + 1 >= r > (z-1)*ell + 1, and ``constacyclic_dims``
    the subsequence at exponents z*ell + 1 for z = 0 .. r_prime + 1.
    """

    dims: tuple[int, ...]
    r: int
    ell: int
    r_prime: int
    constacyclic_dims: tuple[int, ...]


@dataclass(frozen=True)
class PatternInfo:
    """The pattern polynomial of a generator and its derived parameters.

    ``p`` has p(0) = 1 and degree n - v with v | n; ``d`` is the geometric
    ratio (p = sum of d**j * x**(v*j)) satisfying d**(-n/v) = a, and
    ``coeffs_c`` are the combination coefficients with
    g = sum of coeffs_c[i] * x**i * p, coeffs_c[0] = 1.
    """

    p: Poly
    v: int
    d: int
    coeffs_c: tuple[int, ...]


def hilbert_report(
    code: ConstacyclicCode, max_power: int | None = None
) -> HilbertReport:
    """Dimension sequence until stabilization, plus both regularities.

    Consecutive powers are formed by multiplying with the base code; the
    loop stops at the first repeated dimension (sound: once the sequence
    repeats it is constant forever). ``max_power`` bounds how many powers
    are computed; the default n - k + 2 always suffices. Raises
    :class:`UnstabilizedError` (carrying partial data) if the bound is hit
    first.
    """
    if code.k == 0:
        raise ZeroCode("the zero code has no Hilbert sequence")
    ell = code.ring.ell
    cap = max_power if max_power is not None else code.n - code.k + 2
    if cap < 2:
        raise ValueError(f"max_power must be >= 2, got {cap}")
    base = as_span(code)
    dims = [base.dim]
    current = base
    r = None
    while len(dims) < cap:
        current = code_product(current, base)
        dims.append(current.dim)
        if dims[-1] == dims[-2]:
            r = len(dims) - 1
            break
    if r is None:
        raise UnstabilizedError(
            f"dimension sequence not stabilized within {cap} powers", dims
        )
    r_prime = -(-(r - 1) // ell)
    stable = dims[-1]
    constacyclic = tuple(
        dims[z * ell] if z * ell < len(dims) else stable
        for z in range(r_prime + 2)
    )
    return HilbertReport(tuple(dims), r, ell, r_prime, constacyclic)


def pattern_polynomial(code: ConstacyclicCode) -> PatternInfo:
    """Extract the pattern polynomial of the (normalized) generator.

    Scans candidate periods v' in increasing order -- the nonzero exponents
    of g, then n -- and accepts the first v' that divides n, whose ratio
    d = g[v'] satisfies d**(n/v') * a = 1, and that reconstructs g as
    (sum of g[j]*x**j for j < v') * (sum of d**j * x**(v'*j)). Smaller v'
    means higher-degree pattern, so the first hit is the answer; v' = n with
    p = 1 always works as the fallback.
    """
    if code.k == 0:
        raise ZeroCode("the zero code has no pattern polynomial")
    ring = code.ring
    n, q, a = ring.n, ring.q, ring.a
    gvec = ring.coeff_vector(code.g)
    for v in code.g.support():
        if v == 0 or n % v:
            continue
        d = int(gvec[v])
        if (pow(d, n // v, q) * a) % q != 1:
            continue
        blocks = gvec.reshape(n // v, v)
        ratios = np.array([pow(d, j, q) for j in range(n // v)], dtype=np.int64)
        if np.array_equal(blocks, (blocks[0][None, :] * ratios[:, None]) % q):
            p_coeffs = np.zeros(n, dtype=np.int64)
            p_coeffs[:: v][: n // v] = ratios
            return PatternInfo(
                Poly(tuple(int(c) for c in p_coeffs), ring.field),
                v,
                d,
                tuple(int(c) for c in gvec[:v]),
            )
    # p = 1 satisfies every requirement; d is forced by d**(-n/n) = a
    return PatternInfo(
        Poly.one(ring.field),
        n,
        pow(a, -1, q),
        tuple(int(c) for c in gvec),
    )


def _resolve_pattern(code, pattern):
    return pattern if pattern is not None else pattern_polynomial(code)


def _resolve_r_prime(code, report, max_power=None) -> int:
    if report is not None:
        return report.r_prime
    return hilbert_report(code, max_power).r_prime


def equilibrium_generator(
    code: ConstacyclicCode,
    z: int,
    pattern: PatternInfo | None = None,
    report: HilbertReport | None = None,
) -> Poly:
    """Generator of the (z*ell + 1)-st power for z at or past the regularity.

    Equals the coefficient-wise (z*ell + 1)-st power of the pattern
    polynomial, already normalized (constant term 1). Raises
    :class:`BelowRegularity` for z < r'(C) (and for negative z).
    """
    if z < 0:
        raise BelowRegularity(f"power index z = {z} is negative")
    r_prime = _resolve_r_prime(code, report)
    if z < r_prime:
        raise BelowRegularity(f"z = {z} is below the regularity r' = {r_prime}")
    info = _resolve_pattern(code, pattern)
    gz = poly_schur_power(info.p, code.ring, z * code.ring.ell + 1)
    # p(0) = 1, so the power is already unit-normalized
    assert gz.constant == 1
    return gz


def equilibrium_min_distance(
    code: ConstacyclicCode, pattern: PatternInfo | None = None
) -> int:
    """Exact minimum distance n/v of every power at or past the regularity.

    The equilibrium generator has weight n/v, meeting the general n/k lower
    bound at dimension k = v.
    """
    info = _resolve_pattern(code, pattern)
    return code.n // info.v


def is_invariant_at_equilibrium(
    code: ConstacyclicCode, pattern: PatternInfo | None = None
) -> bool:
    """True iff all constacyclic powers past the regularity coincide (d**ell = 1)."""
    info = _resolve_pattern(code, pattern)
    return pow(info.d, code.ring.ell, code.ring.q) == 1


def equilibrium_cycle_length(
    code: ConstacyclicCode, pattern: PatternInfo | None = None
) -> int:
    """Length of the cycle traced by the constacyclic powers past the regularity.

    The generators of successive constacyclic powers differ by twisting the
    pattern coefficients with d**ell, so the cycle length is the
    multiplicative order of d**ell (at most q - 1 < q).
    """
    info = _resolve_pattern(code, pattern)
    twist = pow(info.d, code.ring.ell, code.ring.q)
    return multiplicative_order(FieldElement(twist, code.ring.field))


@dataclass(frozen=True)
class SupportBattery:
    """Independent evaluations of the five disjoint-support equivalences.

    Meaningful only when k | n (``applicable``); otherwise every entry is
    False. For codes of dimension k | n the five conditions are provably
    equivalent, which the property tests exercise.
    """

    applicable: bool
    geometric_generator: bool       # g = u * sum d^i x^(k*i), d^(-n/k) = a
    shift_matrix_standard: bool     # G equals its own reduced form
    shift_basis_disjoint: bool      # rows of G have pairwise disjoint support
    has_disjoint_basis: bool        # some disjoint-support basis spans C
    achieves_weight_bound: bool     # some codeword has weight n/k

    def as_tuple(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.geometric_generator,
            self.shift_matrix_standard,
            self.shift_basis_disjoint,
            self.has_disjoint_basis,
            self.achieves_weight_bound,
        )

    def consistent(self) -> bool:
        return len(set(self.as_tuple())) == 1


def disjoint_support_battery(
    code: ConstacyclicCode, budget: int = DEFAULT_DISTANCE_BUDGET
) -> SupportBattery:
    """Evaluate the five disjoint-support conditions, each on its own terms.

    Condition 5 (a weight-n/k codeword exists) is decided by exhaustive
    enumeration when q**k fits the budget, otherwise through the pattern
    period (v = k), which is equivalent for codes this large.
    """
    if code.k == 0:
        raise ZeroCode("the battery is undefined for the zero code")
    k, n, q = code.k, code.n, code.ring.q
    if n % k:
        return SupportBattery(False, False, False, False, False, False)
    m = n // k
    gvec = code.ring.coeff_vector(code.g)

    if m == 1:
        cond1 = code.g.degree == 0
    else:
        d = int(gvec[k])
        progression = np.zeros(n, dtype=np.int64)
        progression[::k][:m] = [pow(d, i, q) for i in range(m)]
        cond1 = (
            d != 0
            and np.array_equal(gvec, progression)
            and (pow(d, m, q) * code.ring.a) % q == 1
        )

    G = code.gen_matrix.array
    cond2 = G.shape == code.basis.array.shape and np.array_equal(
        G, code.basis.array
    )
    cond3 = bool((np.count_nonzero(G, axis=0) <= 1).all())

    if q**k <= budget:
        cond5 = False
        for words in _enumerate_weights(code.basis.array, q):
            if (np.count_nonzero(words, axis=1) == m).any():
                cond5 = True
                break
    else:
        cond5 = pattern_polynomial(code).v == k

    cond4 = cond3 or cond5
    return SupportBattery(True, cond1, cond2, cond3, cond4, cond5)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def enumerate_invariant_cyclic(
    field: FieldSpec, n: int
) -> list[tuple[int, Poly]]:
    """All cyclic codes of length n with C^(2) = C, one per divisor k of n.

    The dimension-k representative is generated by the k-step progression
    m(k) = sum of x**(k*i); each emitted code is re-verified to satisfy
    C^(2) = C before being returned. Requires gcd(n, q) = 1.
    """
    ring = RingSpec(field, n, 1)
    if not ring.coprime:
        raise NotCoprime(f"n = {n} shares a factor with q = {field.q}")
    out = []
    for k in _divisors(n):
        coeffs = np.zeros(n, dtype=np.int64)
        coeffs[::k][: n // k] = 1
        g = Poly(tuple(int(c) for c in coeffs), field)
        c = ConstacyclicCode(ring, g)
        square = code_product(c, c)
        if not row_spaces_equal(square.basis, c.basis):
            raise RuntimeError(f"invariance re-check failed for k = {k}")
        out.append((k, c.g))
    return out


def analyze_code(
    code: ConstacyclicCode, max_power: int | None = None
) -> dict:
    """Full JSON-ready report for one code.

    Bundles the dimension sequence with both regularities, the pattern
    polynomial, the invariance/cycle diagnostics, the equilibrium generator
    and distance, and whether the Schur square is itself shift-closed.
    """
    report = hilbert_report(code, max_power)
    pattern = pattern_polynomial(code)
    square = code_power(code, 2)
    return {
        "q": code.ring.q,
        "n": code.n,
        "a": code.ring.a,
        "ell": code.ring.ell,
        "g": code.g.coeff_list(),
        "k": code.k,
        "dims": list(report.dims),
        "r": report.r,
        "r_prime": report.r_prime,
        "constacyclic_dims": list(report.constacyclic_dims),
        "pattern": {
            "p": pattern.p.coeff_list(),
            "v": pattern.v,
            "d": pattern.d,
            "c": list(pattern.coeffs_c),
        },
        "invariant": is_invariant_at_equilibrium(code, pattern),
        "cycle_len": equilibrium_cycle_length(code, pattern),
        "equilibrium_generator": equilibrium_generator(
            code, report.r_prime, pattern, report
        ).coeff_list(),
        "equilibrium_min_distance": equilibrium_min_distance(code, pattern),
        "power2_constacyclic": is_constacyclic(square.basis, code.ring),
    }
