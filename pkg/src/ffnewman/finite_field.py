"""Exact arithmetic in the prime field F_p (p an odd prime) and the scalar Legendre symbol."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; inputs in scope are far below 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@lru_cache(maxsize=None)
def check_odd_prime(p: int) -> None:
    """Raise ValueError unless p is an odd prime (the only legal moduli here)."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError("modulus must be an odd prime, got %r" % (p,))


@dataclass(frozen=True)
class FpElement:
    """A residue in [0, p). Immutable; all arithmetic stays reduced mod p.

    Supports +, -, *, unary -, ** (any integer exponent, negative via inverse),
    and .inv(). Mixed arithmetic with plain ints reduces them mod p first.
    """

    value: int
    modulus: int

    def __post_init__(self):
        check_odd_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError(
                    "modulus mismatch: %d vs %d" % (self.modulus, other.modulus)
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement((self.value + v) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement((self.value - v) % self.modulus, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement((v - self.value) % self.modulus, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement((self.value * v) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value % self.modulus, self.modulus)

    def inv(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("inversion of zero in F_%d" % self.modulus)
        return FpElement(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        return FpElement(pow(self.value, e, self.modulus), self.modulus)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "FpElement(%d, mod %d)" % (self.value, self.modulus)


def legendre_int(a: int, p: int) -> int:
    """Legendre symbol of the integer a mod the odd prime p, by Euler's criterion.

    Returns 0 iff p | a, +1 for nonzero squares, -1 otherwise.
    """
    check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    if r <= 1:
        return r
    return -1  # Euler gives p - 1 here


def legendre_scalar(a: FpElement) -> int:
    """Legendre symbol of a residue (Euler's criterion on its value)."""
    return legendre_int(a.value, a.modulus)


@lru_cache(maxsize=None)
def legendre_table(p: int) -> tuple:
    """Lookup table t with t[a] = Legendre symbol of a, built by marking squares.

    Independent of the Euler-criterion route; the two are cross-checked in tests.
    """
    check_odd_prime(p)
    t = [-1] * p
    t[0] = 0
    for a in range(1, p):
        t[a * a % p] = 1
    return tuple(t)
