"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements are plain Python values: `fractions.Fraction` for the
rationals, `int` in the range [0, p) for GF(p).  All arithmetic is exact;
GF(p) is restricted to machine-word primes (products must not overflow
an int64 in optimized back ends, so p < 2**31).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic 0 means the rationals; a prime p means GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if not is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")
        if p >= 1 << 31:
            raise ValueError(f"prime too large for exact word arithmetic: {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def element(self, n):
        """Coerce an integer (or Fraction, over the rationals) into the field."""
        if self.characteristic == 0:
            return Fraction(n)
        if isinstance(n, Fraction):
            if n.denominator % self.characteristic == 0:
                raise ZeroDivisionError(f"denominator of {n} vanishes mod {self.characteristic}")
            return n.numerator * pow(n.denominator, -1, self.characteristic) % self.characteristic
        return n % self.characteristic

    def divides(self, n: int) -> bool:
        """True when the characteristic is a prime dividing n."""
        p = self.characteristic
        return p != 0 and n % p == 0

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF5 = FieldSpec(5)
GF7 = FieldSpec(7)

#: Default field battery: covers every prime divisor of n-1 for cycle orders n <= 8.
DEFAULT_FIELDS = (GF2, GF3, GF5, GF7, QQ)
