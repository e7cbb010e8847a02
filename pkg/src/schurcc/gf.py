"""Exact arithmetic in prime fields F_q.

Field elements are immutable values; every operation is pure, so they are
safe to share across threads. The modulus is restricted to primes below
2**31 so that products of two residues always fit in 64-bit intermediates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, FieldMismatch, NotPrime, ZeroElement

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division.

    Adequate for the supported modulus range (n < 2**31 means at most
    ~46k trial divisors).
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division, as {prime: exponent}."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_q.

    Primality is verified at construction; arithmetic helpers work on plain
    integer residues so that bulk code (matrices, polynomials) can stay in
    numpy, while :class:`FieldElement` offers an operator-based view.
    """

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int):
            raise NotPrime(f"modulus must be an integer, got {self.q!r}")
        if self.q >= MAX_MODULUS:
            raise NotPrime(f"modulus {self.q} exceeds supported bound 2**31")
        if not is_prime(self.q):
            raise NotPrime(f"modulus {self.q} is not prime")

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1 % self.q, self)

    def elements(self):
        """Iterate over all q field elements."""
        for v in range(self.q):
            yield FieldElement(v, self)

    def inv(self, value: int) -> int:
        """Inverse of an integer residue, as an integer residue."""
        value %= self.q
        if value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.q}")
        return pow(value, -1, self.q)

    def __repr__(self):
        return f"FieldSpec(q={self.q})"


@dataclass(frozen=True)
class FieldElement:
    """A residue in [0, q) together with its field."""

    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            object.__setattr__(self, "value", self.value % self.field.q)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"operands from F_{self.field.q} and F_{other.field.q}"
                )
            return other
        if isinstance(other, int):
            return FieldElement(other % self.field.q, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + other.value) % self.field.q, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - other.value) % self.field.q, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value * other.value) % self.field.q, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement((-self.value) % self.field.q, self.field)

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.field.q}")
        return FieldElement(pow(self.value, -1, self.field.q), self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        """Square-and-multiply power; negative exponents go through the inverse."""
        if exponent < 0:
            if self.value == 0:
                raise DivisionByZero(f"0 has no inverse in F_{self.field.q}")
            return FieldElement(pow(self.value, exponent, self.field.q), self.field)
        return FieldElement(pow(self.value, exponent, self.field.q), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.field.q}({self.value})"


def multiplicative_order(a: FieldElement) -> int:
    """Smallest ell >= 1 with a**ell = 1.

    Factors q-1 by trial division, then removes prime factors from the
    exponent while the power stays 1. Raises :class:`ZeroElement` for a = 0.
    """
    if a.value == 0:
        raise ZeroElement("the zero element has no multiplicative order")
    q = a.field.q
    order = q - 1
    for p in factor_int(q - 1):
        while order % p == 0 and pow(a.value, order // p, q) == 1:
            order //= p
    return order
