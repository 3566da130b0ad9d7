"""Exact scalar arithmetic: the rationals and prime fields F_p.

Scalars are either `fractions.Fraction` (rationals) or `Fp` residues.
Both support +, -, *, /, == 0 tests, and hashing, so the linear algebra
in `laga.linalg` is generic over the field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedField

_MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
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


class Fp:
    """A residue modulo a prime p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return Fp(self.v + other.v, self.p)

    def __sub__(self, other):
        return Fp(self.v - other.v, self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * other.v, self.p)

    def __truediv__(self, other):
        if other.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Fp(self.v * pow(other.v, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == other % self.p
        return isinstance(other, Fp) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}~{self.p}"


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (p is None) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p) or self.p > _MAX_PRIME:
                raise UnsupportedField(f"not a supported prime: {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __call__(self, x) -> Fraction | Fp:
        """Coerce an int / Fraction / Fp into this field."""
        if self.p is None:
            if isinstance(x, Fp):
                raise UnsupportedField("cannot coerce F_p residue into Q")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise UnsupportedField("residue from a different prime field")
            return x
        return Fp(int(x), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def describe(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
