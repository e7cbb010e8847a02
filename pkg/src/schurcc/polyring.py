"""Dense univariate polynomials over F_q and the quotient ring F_q[x]/(x^n - a).

Coefficients are stored constant-term first: ``coeffs[i]`` is the coefficient
of ``x**i``. The zero polynomial is the empty coefficient tuple and reports
degree -1 (sentinel for "minus infinity"). All values are canonical residues
in [0, q).

Internal helpers (prefixed ``_gf``) operate on plain tuples/lists of ints so
the factorization code stays allocation-light; :class:`Poly` is the public
immutable wrapper.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotCoprime,
    ZeroElement,
)
from .gf import FieldElement, FieldSpec, multiplicative_order

# Beyond this many irreducible factors the divisor lattice (2**m subsets)
# is too large to materialize.
MAX_DIVISOR_FACTORS = 22


# ---------------------------------------------------------------------------
# low-level dense arithmetic on constant-first int lists


def _strip(c: Sequence[int]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _deg(c: Sequence[int]) -> int:
    return len(c) - 1


def _add(a, b, q):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % q
    return _strip(out)


def _sub(a, b, q):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % q
    return _strip(out)


def _scale(a, c, q):
    c %= q
    if c == 0:
        return ()
    return _strip([(v * c) % q for v in a])


def _mul(a, b, q):
    """Schoolbook product; vectorized through np.convolve when it cannot overflow."""
    if not a or not b:
        return ()
    if min(len(a), len(b)) * (q - 1) ** 2 < 2**62:
        conv = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return _strip((conv % q).tolist())
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _strip(out)


def _divmod(num, den, q):
    if not den:
        raise DivisionByZero("polynomial division by zero")
    num = list(num)
    dn, dd = _deg(num), _deg(den)
    if dn < dd:
        return (), _strip(num)
    inv_lead = pow(den[-1], -1, q)
    quot = [0] * (dn - dd + 1)
    for shift in range(dn - dd, -1, -1):
        coef = (num[dd + shift] * inv_lead) % q
        if coef:
            quot[shift] = coef
            for i, dv in enumerate(den):
                num[shift + i] = (num[shift + i] - coef * dv) % q
    return _strip(quot), _strip(num[:dd])


def _mod(a, m, q):
    return _divmod(a, m, q)[1]


def _monic(a, q):
    if not a:
        return ()
    if a[-1] == 1:
        return _strip(a)
    return _scale(a, pow(a[-1], -1, q), q)


def _gcd(a, b, q):
    while b:
        a, b = b, _mod(a, b, q)
    return _monic(a, q)


def _powmod(base, exponent: int, modulus, q):
    """base**exponent reduced mod ``modulus``, by square-and-multiply."""
    result = (1,)
    base = _mod(base, modulus, q)
    while exponent > 0:
        if exponent & 1:
            result = _mod(_mul(result, base, q), modulus, q)
        base = _mod(_mul(base, base, q), modulus, q)
        exponent >>= 1
    return result


# ---------------------------------------------------------------------------
# public polynomial type


@dataclass(frozen=True)
class Poly:
    """An immutable dense polynomial over a prime field.

    ``coeffs[i]`` holds the coefficient of ``x**i``; no trailing zeros are
    kept, so equal polynomials compare equal structurally.
    """

    coeffs: tuple[int, ...]
    field: FieldSpec

    def __post_init__(self):
        q = self.field.q
        canon = _strip(tuple(int(c) % q for c in self.coeffs))
        object.__setattr__(self, "coeffs", canon)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], field: FieldSpec) -> "Poly":
        return cls(tuple(coeffs), field)

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls((), field)

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls((1,), field)

    @classmethod
    def x(cls, field: FieldSpec, power: int = 1) -> "Poly":
        return cls((0,) * power + (1,), field)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def constant(self) -> int:
        return self.coeff(0)

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroElement("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, ascending."""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch(
                f"polynomials over F_{self.field.q} and F_{other.field.q}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(_add(self.coeffs, other.coeffs, self.field.q), self.field)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(_sub(self.coeffs, other.coeffs, self.field.q), self.field)

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def scale(self, c: int) -> "Poly":
        return Poly(_scale(self.coeffs, int(c), self.field.q), self.field)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, FieldElement):
            return self.scale(other.value)
        self._check(other)
        return Poly(_mul(self.coeffs, other.coeffs, self.field.q), self.field)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        self._check(other)
        quo, rem = _divmod(self.coeffs, other.coeffs, self.field.q)
        return Poly(quo, self.field), Poly(rem, self.field)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when self divides other exactly (self must be nonzero)."""
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        return Poly(_monic(self.coeffs, self.field.q), self.field)

    def shift_up(self, i: int) -> "Poly":
        """Multiply by x**i."""
        if self.is_zero():
            return self
        return Poly((0,) * i + self.coeffs, self.field)

    def __call__(self, point: int) -> int:
        """Evaluate at an integer residue (Horner)."""
        q = self.field.q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % q
        return acc

    # -- presentation --------------------------------------------------------

    def text(self) -> str:
        """ASCII form like ``x^4+2*x^3+x+2`` (descending powers)."""
        if self.is_zero():
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeff(e)
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{e}" if c == 1 else f"{c}*x^{e}")
        return "+".join(terms)

    def coeff_list(self, length: int | None = None) -> list[int]:
        """Constant-first coefficient list, zero-padded to ``length`` if given."""
        out = list(self.coeffs)
        if length is not None:
            if len(out) > length:
                raise ValueError(f"degree {self.degree} exceeds length {length}")
            out += [0] * (length - len(out))
        return out

    def __repr__(self):
        return f"Poly({self.text()!r}, q={self.field.q})"


_TERM_RE = re.compile(
    r"^\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?P<var>x)\s*(?:\^\s*(?P<exp>\d+))?\s*$|^\s*(?P<const>\d+)\s*$"
)


def parse_poly(source, field: FieldSpec) -> Poly:
    """Parse a polynomial from text (``"x^4+2*x^3+x+2"``) or a coefficient list.

    The list form is constant-term first. Integers are reduced mod q; both
    ``2*x^3`` and ``2x^3`` are accepted in the text form.
    """
    if isinstance(source, Poly):
        if source.field != field:
            raise FieldMismatch("polynomial parsed for a different field")
        return source
    if isinstance(source, (list, tuple)):
        return Poly(tuple(int(c) for c in source), field)
    text = str(source).strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text.startswith("["):
        import json

        return Poly(tuple(int(c) for c in json.loads(text)), field)
    # split into signed terms
    text = text.replace("-", "+-")
    if text.startswith("+"):
        text = text[1:]
    coeffs: dict[int, int] = {}
    for raw in text.split("+"):
        if not raw.strip():
            raise ValueError(f"malformed polynomial text: {source!r}")
        sign = 1
        term = raw.strip()
        if term.startswith("-"):
            sign = -1
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"malformed polynomial term: {raw!r}")
        if m.group("const") is not None:
            e, c = 0, int(m.group("const"))
        else:
            c = int(m.group("coef")) if m.group("coef") else 1
            e = int(m.group("exp")) if m.group("exp") else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c % field.q
    return Poly(tuple(out), field)


# ---------------------------------------------------------------------------
# quotient ring


@dataclass(frozen=True)
class RingSpec:
    """The quotient ring F_q[x]/(x^n - a), with ell = ord(a).

    Requires a != 0. Codes and Schur powers are well defined for any block
    length, so construction tolerates gcd(n, q) != 1; only the operations
    that rely on a squarefree modulus (factoring, divisor enumeration)
    insist on coprimality and raise :class:`NotCoprime`.
    """

    field: FieldSpec
    n: int
    a: int
    ell: int = dc_field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", int(self.a) % self.field.q)
        if self.n < 1:
            raise ValueError(f"block length must be positive, got {self.n}")
        if self.a == 0:
            raise ZeroElement("constacyclic constant a must be nonzero")
        ell = multiplicative_order(FieldElement(self.a, self.field))
        object.__setattr__(self, "ell", ell)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def coprime(self) -> bool:
        return math.gcd(self.n, self.field.q) == 1

    def modulus(self) -> Poly:
        """The defining polynomial x^n - a."""
        coeffs = [(-self.a) % self.q] + [0] * (self.n - 1) + [1]
        return Poly(tuple(coeffs), self.field)

    def reduce(self, p: Poly) -> Poly:
        return ring_reduce(p, self)

    def mulmod(self, p: Poly, r: Poly) -> Poly:
        return ring_reduce(p * r, self)

    def coeff_vector(self, p: Poly) -> np.ndarray:
        """Length-n embedding of a reduced representative."""
        p = ring_reduce(p, self)
        vec = np.zeros(self.n, dtype=np.int64)
        vec[: len(p.coeffs)] = p.coeffs
        return vec

    def poly_from_vector(self, vec: Sequence[int]) -> Poly:
        if len(vec) != self.n:
            raise ValueError(f"vector length {len(vec)} != n = {self.n}")
        return Poly(tuple(int(v) for v in vec), self.field)

    def __repr__(self):
        return f"RingSpec(q={self.q}, n={self.n}, a={self.a})"


def ring_reduce(p: Poly, ring: RingSpec) -> Poly:
    """Reduce mod x^n - a by folding coefficient blocks: x^(n+j) -> a * x^j."""
    if p.field != ring.field:
        raise FieldMismatch("polynomial is over a different field")
    q, n, a = ring.q, ring.n, ring.a
    coeffs = list(p.coeffs)
    while len(coeffs) > n:
        high = coeffs[n:]
        coeffs = coeffs[:n]
        if len(high) > n:  # degree >= 2n: the folded part needs another pass
            coeffs += [0] * (len(high) - n)
        for j, c in enumerate(high):
            coeffs[j] = (coeffs[j] + a * c) % q
    return Poly(tuple(coeffs), p.field)


# ---------------------------------------------------------------------------
# factoring x^n - a


def _frobenius_powers(f, q):
    """Iterator of x^(q^i) mod f for i = 1, 2, ... (f the shrinking modulus)."""
    h = (0, 1)
    while True:
        h = _powmod(h, q, f, q)
        yield h


def _ddf(f, q):
    """Distinct-degree split of a monic squarefree f: list of (product, degree)."""
    out = []
    h = (0, 1)
    i = 1
    while 2 * i <= _deg(f):
        h = _powmod(h, q, f, q)
        g = _gcd(f, _sub(h, (0, 1), q), q)
        if _deg(g) > 0:
            out.append((g, i))
            f = _divmod(f, g, q)[0]
            h = _mod(h, f, q)
        i += 1
    if _deg(f) > 0:
        out.append((f, _deg(f)))
    return out


def _random_poly(max_deg, q, rng):
    while True:
        c = _strip([rng.randrange(q) for _ in range(max_deg + 1)])
        if _deg(c) >= 1:
            return c


def _edf(f, d, q, rng):
    """Cantor-Zassenhaus equal-degree split of f into irreducibles of degree d."""
    if _deg(f) == d:
        return [f]
    while True:
        r = _random_poly(_deg(f) - 1, q, rng)
        if q == 2:
            # additive trace map splits in characteristic 2
            h = r
            acc = r
            for _ in range(d - 1):
                acc = _mod(_mul(acc, acc, q), f, q)
                h = _add(h, acc, q)
            g = _gcd(f, h, q)
        else:
            h = _powmod(r, (q**d - 1) // 2, f, q)
            g = _gcd(f, _sub(h, (1,), q), q)
        if 0 < _deg(g) < _deg(f):
            cof = _divmod(f, g, q)[0]
            return _edf(g, d, q, rng) + _edf(cof, d, q, rng)


def factor_modulus(ring: RingSpec, seed: int = 0) -> list[Poly]:
    """Monic irreducible factors of x^n - a, canonically sorted.

    Distinct-degree factorization followed by seeded equal-degree splitting.
    Requires gcd(n, q) = 1, which makes x^n - a squarefree (its derivative
    n*x^(n-1) is then coprime to it), so the factors are pairwise distinct.
    The output order is (degree, then constant-first coefficient tuple),
    independent of the seed.
    """
    if not ring.coprime:
        raise NotCoprime(
            f"cannot factor x^{ring.n}-{ring.a}: n = {ring.n} shares a factor "
            f"with q = {ring.q}"
        )
    q = ring.q
    f = tuple(ring.modulus().coeffs)
    rng = random.Random(seed)
    factors = []
    for prod, d in _ddf(f, q):
        factors.extend(_edf(prod, d, q, rng))
    factors.sort(key=lambda c: (_deg(c), c))
    return [Poly(c, ring.field) for c in factors]


def divisor_count_by_degree(factor_degrees: Sequence[int], n: int) -> list[int]:
    """Subset-sum table: entry d = number of monic divisors of degree d.

    Counts subset products of distinct irreducible factors directly from their
    degrees, without materializing any divisor. Used as the independent check
    against the materialized enumeration.
    """
    table = [0] * (n + 1)
    table[0] = 1
    for d in factor_degrees:
        for s in range(n, d - 1, -1):
            table[s] += table[s - d]
    return table


def enumerate_divisors(
    ring: RingSpec,
    max_count: int | None = None,
    rate_bound: Fraction | None = None,
    seed: int = 0,
) -> list[Poly]:
    """Monic divisors of x^n - a as subset products of its irreducible factors.

    The modulus itself (the zero code) is excluded; g = 1 (the full code)
    survives only when the rate filter permits. With ``rate_bound`` set, only
    divisors whose code dimension k = n - deg g satisfies k/n < rate_bound
    (strict, exact rational comparison) are kept. Results come back in
    canonical order (degree, then coefficient tuple) and are truncated to
    ``max_count`` after filtering.
    """
    factors = factor_modulus(ring, seed=seed)
    if len(factors) > MAX_DIVISOR_FACTORS:
        raise ValueError(
            f"modulus has {len(factors)} irreducible factors; "
            f"2**{len(factors)} divisors is beyond the supported desk scale"
        )
    q, n = ring.q, ring.n
    raw = [(1,)]
    for f in factors:
        fc = f.coeffs
        raw += [_mul(d, fc, q) for d in raw]
    divisors = []
    for c in raw:
        k = n - _deg(c)
        if k == 0:
            continue  # the modulus itself generates the zero code
        if rate_bound is not None and not Fraction(k, n) < rate_bound:
            continue
        divisors.append(c)
    divisors.sort(key=lambda c: (_deg(c), c))
    if max_count is not None:
        divisors = divisors[:max_count]
    return [Poly(c, ring.field) for c in divisors]
