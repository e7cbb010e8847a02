"""Shared fixtures and brute-force oracles for the test suite."""

import random

import numpy as np
import pytest

from schurcc import (
    ConstacyclicCode,
    FieldSpec,
    Poly,
    RingSpec,
    code_from_generator,
    enumerate_divisors,
    parse_poly,
)

# rings whose divisor codes form the shared verification corpus
CORPUS_RINGS = [(3, 4, 1), (5, 4, 1), (7, 6, 5), (7, 6, 2), (5, 8, 1), (3, 8, 2)]


def make_ring(q, n, a) -> RingSpec:
    return RingSpec(FieldSpec(q), n, a)


def make_code(q, n, a, g) -> ConstacyclicCode:
    ring = make_ring(q, n, a)
    return code_from_generator(ring, parse_poly(g, ring.field))


def divisor_codes(ring: RingSpec) -> list[ConstacyclicCode]:
    """Every nonzero code of the ring (the zero code is excluded)."""
    return [ConstacyclicCode(ring, g) for g in enumerate_divisors(ring)]


@pytest.fixture(scope="session")
def f5_code():
    return make_code(5, 4, 1, "x^3+2*x^2+4*x+3")


@pytest.fixture(scope="session")
def f3_code():
    return make_code(3, 6, 1, "x^4+2*x^3+x+2")


@pytest.fixture(scope="session")
def f7_code():
    # x^3+4 divides x^6-2 (not x^6+2): the shift constant is a = 2
    return make_code(7, 6, 2, "x^3+4")


@pytest.fixture(scope="session")
def corpus():
    """All divisor codes over the corpus rings (134 codes)."""
    out = []
    for q, n, a in CORPUS_RINGS:
        out.extend(divisor_codes(make_ring(q, n, a)))
    return out


def random_divisor_codes(count, seed, max_n=12, primes=(3, 5, 7, 11, 13)):
    """Seeded sample of nonzero divisor codes with q <= 13, n <= max_n."""
    rng = random.Random(seed)
    codes = []
    while len(codes) < count:
        q = rng.choice(primes)
        n = rng.randint(2, max_n)
        if n % q == 0:
            continue
        a = rng.randint(1, q - 1)
        ring = make_ring(q, n, a)
        divisors = enumerate_divisors(ring, seed=seed)
        g = divisors[rng.randrange(len(divisors))]
        codes.append(ConstacyclicCode(ring, g))
    return codes


# ---------------------------------------------------------------------------
# independent oracles


def oracle_schur_span(rows_a, rows_b, q):
    """Row space of all pairwise component products, via membership set.

    Materializes the full row space (q**rank vectors), so only for tiny cases.
    """
    prods = []
    for ra in rows_a:
        for rb in rows_b:
            prods.append((np.asarray(ra) * np.asarray(rb)) % q)
    return span_vectors(prods, q)


def span_vectors(rows, q):
    """The set of all linear combinations of the given rows (brute force)."""
    rows = [np.asarray(r, dtype=np.int64) % q for r in rows]
    vectors = {tuple(np.zeros(len(rows[0]), dtype=np.int64))}
    for r in rows:
        vectors = {
            tuple((np.asarray(v) + c * r) % q) for v in vectors for c in range(q)
        }
    return vectors


def oracle_pattern(code: ConstacyclicCode):
    """Pattern polynomial straight from its definition, by divisor enumeration.

    Tries every divisor p of x^n - a that also divides g, normalized to
    p(0) = 1, with period v = n - deg p satisfying v | n, and keeps those
    whose first v shifts have pairwise disjoint supports. Returns the
    highest-degree winner (smallest v); the identity polynomial always
    qualifies.
    """
    ring = code.ring
    n, q = ring.n, ring.q
    best = None  # (v, p)
    candidates = list(enumerate_divisors(ring)) + [Poly.one(ring.field)]
    for p in candidates:
        v = n - p.degree
        if v < 1 or n % v:
            continue
        if p.is_zero() or not p.divides(code.g):
            continue
        p = p.scale(ring.field.inv(p.constant))
        shifts = np.zeros((v, n), dtype=np.int64)
        for i in range(v):
            shifts[i, i : i + len(p.coeffs)] = p.coeffs
        if ((shifts != 0).sum(axis=0) > 1).any():
            continue
        if best is None or v < best[0]:
            best = (v, p)
        elif v == best[0]:
            assert p == best[1], "pattern of a given period must be unique"
    assert best is not None
    return best[1], best[0]
