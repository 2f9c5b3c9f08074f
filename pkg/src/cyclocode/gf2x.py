"""Polynomials over GF(2), represented as nonnegative ints.

The polynomial b_d x^d + ... + b_1 x + b_0 corresponds to the int
b_d 2^d + ... + b_1 2 + b_0.  Addition is xor.  The private module
functions work on raw ints and are used by the performance-sensitive
paths; :class:`BinPoly` is a thin immutable wrapper providing operator
overloading, the two textual forms, and the contract-level operations.

The zero polynomial has degree -1, standing in for "minus infinity".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


def _deg(a: int) -> int:
    return a.bit_length() - 1


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    m, n = _deg(a), _deg(b)
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for i in range(m - n + 1):
        q <<= 1
        if (a >> (m - i)) & 1:
            a ^= b
            q |= 1
        b >>= 1
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _powmod(base: int, e: int, mod: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _mod(_mul(r, base), mod)
        base = _mod(_mul(base, base), mod)
        e >>= 1
    return r


def _reciprocal(a: int) -> int:
    """x^deg(a) * a(1/x); reverses the coefficient bit string."""
    if a == 0:
        return 0
    return int(bin(a)[2:][::-1], 2)


_TERM_RE = re.compile(r"^(1|x|x\^(\d+))$")


@dataclass(frozen=True, order=True)
class BinPoly:
    """Immutable polynomial over GF(2).

    Comparison order is the order of the underlying ints, with the zero
    polynomial smallest; nonzero polynomials over GF(2) are always monic.
    """

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("polynomial mask must be nonnegative")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "BinPoly":
        return cls(0)

    @classmethod
    def one(cls) -> "BinPoly":
        return cls(1)

    @classmethod
    def x(cls) -> "BinPoly":
        return cls(2)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BinPoly":
        """Build from exponents with coefficient 1; repeats cancel mod 2."""
        mask = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            mask ^= 1 << e
        return cls(mask)

    @classmethod
    def x_pow_n_plus_1(cls, n: int) -> "BinPoly":
        """x^n - 1, which over GF(2) is x^n + 1."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls((1 << n) | 1)

    @classmethod
    def parse(cls, text: str) -> "BinPoly":
        """Parse either textual form.

        Exponent-list form: terms joined by '+', each '1', 'x' or 'x^k',
        in any order (e.g. "1+x^3+x^4").  Compact form: hexadecimal with
        '0x' prefix, least-significant bit = constant term.
        """
        s = text.strip().replace(" ", "").lower()
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls(0)
        if s.startswith("0x"):
            return cls(int(s, 16))
        mask = 0
        for term in s.split("+"):
            mt = _TERM_RE.match(term)
            if not mt:
                raise ValueError(f"bad polynomial term {term!r} in {text!r}")
            if term == "1":
                e = 0
            elif term == "x":
                e = 1
            else:
                e = int(mt.group(2))
            if mask >> e & 1:
                raise ValueError(f"repeated term {term!r} in {text!r}")
            mask |= 1 << e
        return cls(mask)

    # -- basic queries -----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 marks the zero polynomial (minus infinity)."""
        return _deg(self.mask)

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return self.mask.bit_count()

    def is_zero(self) -> bool:
        return self.mask == 0

    def coefficient(self, i: int) -> int:
        return (self.mask >> i) & 1

    def exponents(self) -> tuple[int, ...]:
        """Ascending exponents of the nonzero terms."""
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(self.mask ^ other.mask)

    __sub__ = __add__

    def __mul__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_mul(self.mask, other.mask))

    def __divmod__(self, other: "BinPoly") -> tuple["BinPoly", "BinPoly"]:
        q, r = _divmod(self.mask, other.mask)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_divmod(self.mask, other.mask)[0])

    def __mod__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_mod(self.mask, other.mask))

    def __pow__(self, e: int) -> "BinPoly":
        if e < 0:
            raise ValueError("negative power")
        r = BinPoly(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def divides(self, other: "BinPoly") -> bool:
        if self.mask == 0:
            return other.mask == 0
        return _mod(other.mask, self.mask) == 0

    def reciprocal(self) -> "BinPoly":
        return BinPoly(_reciprocal(self.mask))

    def eval_at_one(self) -> int:
        return self.mask.bit_count() & 1

    # -- textual forms -----------------------------------------------

    def to_terms(self) -> str:
        """Exponent-list form, ascending: '1+x^3+x^4'."""
        if self.mask == 0:
            return "0"
        parts = []
        for e in self.exponents():
            parts.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return "+".join(parts)

    def to_hex(self) -> str:
        """Compact form: hex of the coefficient bits, LSB = constant term."""
        return f"{self.mask:#x}"

    def __str__(self) -> str:
        return self.to_terms()

    def __repr__(self) -> str:
        return f"BinPoly({self.to_hex()})"


def poly_gcd(a: BinPoly, b: BinPoly) -> BinPoly:
    """Monic gcd by Euclidean division; rejects gcd(0, 0)."""
    if a.mask == 0 and b.mask == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return BinPoly(_gcd(a.mask, b.mask))


def poly_divexact(num: BinPoly, den: BinPoly) -> BinPoly:
    """Exact quotient num/den; a nonzero remainder signals an upstream bug."""
    if den.mask == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q, r = _divmod(num.mask, den.mask)
    if r:
        raise ValueError(
            f"inexact division: remainder {BinPoly(r).to_terms()} "
            f"dividing {num.to_terms()} by {den.to_terms()}"
        )
    return BinPoly(q)
