"""Defining sequences s_i = Tr(f(alpha^i + 1)) and their minimal polynomials.

Three independent routes to the minimal polynomial / linear span:

  * gcd method: M_s = (x^n - 1) / gcd(x^n - 1, S^n(x)) on one period;
  * expansion method: inverse DFT over GF(2^m) locating the nonzero
    spectral coefficients, evaluated only at coset leaders (the support
    is a union of cosets because the sequence is binary);
  * Berlekamp-Massey on two periods, as an outside check.

All three return the same polynomial, normalized monic with constant
term 1 (both normalizations hold automatically for divisors of x^n - 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cosets import build_coset_table
from .field import FieldContext
from .gf2x import BinPoly, poly_gcd, poly_divexact


@dataclass(frozen=True)
class ExponentPoly:
    """A polynomial over GF(2^m) given by its exponent set (coefficients 1).

    Repeated exponents cancel in characteristic 2 and are rejected to
    surface caller bugs.  Exponent 0 is the constant 1.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.exponents)) != len(self.exponents):
            raise ValueError(f"repeated exponents in {self.exponents}")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def monomial(cls, e: int) -> "ExponentPoly":
        return cls((e,))

    @classmethod
    def trinomial(cls, r: int, h: int) -> "ExponentPoly":
        """x + x^r + x^(2^h - 1), with equal terms cancelling mod 2.

        h = 0 degenerates the third term to the constant 1; h = 1 makes
        it x, cancelling the first term and leaving the monomial x^r.
        """
        parity: dict[int, int] = {}
        for e in (1, r, (1 << h) - 1):
            parity[e] = parity.get(e, 0) ^ 1
        return cls(tuple(e for e, p in parity.items() if p))

    @classmethod
    def zero(cls) -> "ExponentPoly":
        return cls(())

    def evaluate(self, ctx: FieldContext, x: int) -> int:
        acc = 0
        for e in self.exponents:
            acc ^= ctx.power(x, e)
        return acc

    def describe(self) -> str:
        if not self.exponents:
            return "0"
        parts = []
        for e in sorted(self.exponents):
            parts.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return "+".join(parts)


@dataclass
class DefiningSequence:
    """One period of s_i = Tr(f(alpha^i + 1)), optionally complemented.

    bits is a uint8 array of length n; the complement flag records that
    every bit was xored with 1 after the trace (used by the family whose
    sequence is defined with a constant offset).
    """

    bits: np.ndarray
    ctx: FieldContext | None = None
    f: ExponentPoly | None = None
    complement: bool = False
    _mask_cache: int | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_bits(cls, bits, ctx: FieldContext | None = None) -> "DefiningSequence":
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 1 or len(arr) == 0:
            raise ValueError("bits must be a nonempty 1-d vector")
        if not np.all(arr <= 1):
            raise ValueError("bits must be 0/1")
        return cls(bits=arr, ctx=ctx)

    def bit_mask(self) -> int:
        """The period as an int with bit i = s_i."""
        if self._mask_cache is None:
            packed = np.packbits(self.bits, bitorder="little").tobytes()
            self._mask_cache = int.from_bytes(packed, "little")
        return self._mask_cache

    def to_hex(self) -> str:
        """Hex of the LSB-first bit-packed period."""
        return np.packbits(self.bits, bitorder="little").tobytes().hex()

    def two_periods(self) -> np.ndarray:
        return np.concatenate([self.bits, self.bits])


def defining_sequence(
    ctx: FieldContext, f: ExponentPoly, complement: bool = False
) -> DefiningSequence:
    """Evaluate one period of Tr(f(alpha^i + 1)) for i = 0..n-1."""
    n = ctx.n
    if ctx.exp is None:
        raise ValueError("sequence generation needs a table-backed field (m <= 20)")
    exp = np.asarray(ctx.exp[:n], dtype=np.int64)
    log = np.asarray(ctx.log, dtype=np.int64)
    tr = np.frombuffer(bytes(ctx._trace_table), dtype=np.uint8)
    y = exp ^ 1  # alpha^i + 1; zero exactly at i = 0
    acc = np.zeros(n, dtype=np.int64)
    ly = log[y[1:]]
    for e in f.exponents:
        if e % n == 0 and e > 0:
            raise ValueError(f"exponent {e} is a multiple of n = {n}")
        if e == 0:
            acc ^= 1
        else:
            acc[1:] ^= exp[(ly * e) % n]
    # i = 0: y = 0, so x^e = 0 for e > 0 and 1 for e = 0
    acc[0] = 1 if 0 in f.exponents else 0
    bits = tr[acc]
    if complement:
        bits = bits ^ 1
    return DefiningSequence(bits=bits.astype(np.uint8), ctx=ctx, f=f,
                            complement=complement)


@dataclass(frozen=True)
class SpanResult:
    minimal_poly: BinPoly
    linear_span: int
    method: str

    def __post_init__(self):
        if self.minimal_poly.degree != self.linear_span and self.linear_span != 0:
            raise ValueError("span must equal the minimal polynomial degree")


def minimal_poly_gcd(seq: DefiningSequence) -> SpanResult:
    """M_s = (x^n - 1)/gcd(x^n - 1, S^n(x)); the all-zero period yields 1."""
    n = seq.n
    s_mask = seq.bit_mask()
    if s_mask == 0:
        return SpanResult(BinPoly.one(), 0, "gcd")
    xn1 = BinPoly.x_pow_n_plus_1(n)
    g = poly_gcd(xn1, BinPoly(s_mask))
    ms = poly_divexact(xn1, g)
    return SpanResult(ms, ms.degree, "gcd")


def expansion_support(seq: DefiningSequence) -> list[int]:
    """Exponents i with nonzero coefficient c_i in s_t = sum c_i alpha^(i t).

    Computes c_i = sum_t s_t alpha^(-i t) at coset leaders only; the
    support of a binary sequence is closed under doubling, so each
    leader's verdict covers its whole coset.
    """
    ctx = seq.ctx
    if ctx is None:
        raise ValueError("expansion method needs the field context")
    n = ctx.n
    if seq.n != n:
        raise ValueError(f"sequence length {seq.n} != n = {n}")
    table = build_coset_table(ctx.m)
    ones = np.nonzero(seq.bits)[0].astype(np.int64)
    support: list[int] = []
    if len(ones) == 0:
        return support
    exp = np.asarray(ctx.exp[:n], dtype=np.int64)
    for leader in table.leaders:
        idx = (-leader * ones) % n
        c = int(np.bitwise_xor.reduce(exp[idx]))
        if c:
            support.extend(table[leader].members)
    return sorted(support)


def minimal_poly_expansion(seq: DefiningSequence) -> SpanResult:
    """Minimal polynomial as the product over the spectral support.

    The product of (1 - alpha^i x) over a doubling-closed support equals
    the product of the minimal polynomials of the alpha^(-leader), already
    monic with constant term 1, matching the gcd-method normalization.
    """
    ctx = seq.ctx
    support = expansion_support(seq)
    table = build_coset_table(ctx.m)
    ms = BinPoly.one()
    for leader in sorted({table.leader_of(i) for i in support}):
        ms = ms * ctx.minimal_poly_of_power(-leader)
    return SpanResult(ms, len(support), "expansion")


def berlekamp_massey(bits) -> SpanResult:
    """Shortest LFSR for a bit stream; exact when fed >= 2x the true span.

    The returned characteristic polynomial has constant term 1.  The
    discrepancy is read off incrementally maintained carry-less products
    C(x) S(x) and B(x) S(x), so each step is a couple of big-int ops.
    """
    if isinstance(bits, DefiningSequence):
        bits = bits.two_periods()
    arr = np.asarray(bits, dtype=np.uint8)
    nbits = len(arr)
    s = int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")
    c, b = 1, 1
    pc, pb = s, s
    span, gap = 0, 1
    for i in range(nbits):
        if (pc >> i) & 1:
            if 2 * span <= i:
                c, b = c ^ (b << gap), c
                pc, pb = pc ^ (pb << gap), pc
                span = i + 1 - span
                gap = 1
            else:
                c ^= b << gap
                pc ^= pb << gap
                gap += 1
        else:
            gap += 1
    return SpanResult(BinPoly(c), span, "bm")


def autocorrelation(seq: DefiningSequence, shift: int) -> int:
    """Sum over one period of (-1)^(s_t + s_(t+shift)); shift 0 gives n."""
    n = seq.n
    if not 0 <= shift < n:
        raise ValueError(f"shift must be in [0, {n})")
    s = seq.bit_mask()
    full = (1 << n) - 1
    rot = ((s >> shift) | (s << (n - shift))) & full
    disagree = (s ^ rot).bit_count()
    return n - 2 * disagree


def autocorrelation_profile(seq: DefiningSequence) -> np.ndarray:
    """Autocorrelation at every shift 0..n-1."""
    n = seq.n
    s = seq.bit_mask()
    full = (1 << n) - 1
    out = np.empty(n, dtype=np.int64)
    for shift in range(n):
        rot = ((s >> shift) | (s << (n - shift))) & full
        out[shift] = n - 2 * (s ^ rot).bit_count()
    return out
