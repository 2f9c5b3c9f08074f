"""Closed-form predictions for the five code families, plus realization.

Each predictor turns its trace-expansion term list into a generator
polynomial by folding term exponents into 2-cyclotomic cosets modulo
parity: terms landing in the same coset pairwise cancel in characteristic
2, and exponent 0 contributes Tr(1) = m mod 2 to the constant, i.e. the
(x - 1) factor.  The parity fold reproduces the per-family product
formulas wherever their hypotheses hold and remains correct in the
degenerate small-parameter cases the formulas exclude (where coset
collisions cancel factors).

realize() drives the generic pipeline - sequence, gcd-method minimal
polynomial, code - and cross-checks it against a prediction, raising a
structured discrepancy on mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .codes import CyclicCode, from_generator
from .cosets import build_coset_table, build_epsilon_table, weight2
from .field import FieldContext, make_field
from .gf2x import BinPoly
from .seqgen import DefiningSequence, ExponentPoly, defining_sequence, minimal_poly_gcd

APN_MAX_M = 13


@dataclass(frozen=True)
class CodePrediction:
    """A family's closed-form claim about the realized cyclic code.

    predicted_generator is None when the family's hypotheses reject the
    parameters outright (currently only the Kasami-type h window); the
    warning then explains why and realize() runs generic-only.
    """

    family: str
    m: int
    n: int
    params: dict
    predicted_generator: BinPoly | None
    predicted_span: int | None
    distance_lower_bound: int
    bound_source: str  # theorem | bch | none
    warnings: tuple[str, ...]
    f: ExponentPoly
    sequence_complement: bool = False

    @property
    def has_prediction(self) -> bool:
        return self.predicted_generator is not None

    @property
    def predicted_dimension(self) -> int | None:
        if self.predicted_span is None:
            return None
        return self.n - self.predicted_span

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "n": self.n,
            "k": self.predicted_dimension,
            "span": self.predicted_span,
            "generator": (self.predicted_generator.to_terms()
                          if self.predicted_generator is not None else None),
            "d_lower": self.distance_lower_bound,
            "bound_source": self.bound_source,
            "warnings": list(self.warnings),
        }


def _fold_generator(
    ctx: FieldContext, term_exponents, extra_const: int = 0
) -> BinPoly:
    """Generator from trace-term exponents folded per coset parity.

    Tr(x^e) sums the coset of e exactly m/size times, so a term only
    registers when that multiplicity is odd; terms sharing a coset then
    cancel pairwise.  Exponent 0 contributes Tr(1) = m mod 2.
    """
    n = ctx.n
    table = build_coset_table(ctx.m)
    const = extra_const & 1
    parity: dict[int, int] = {}
    for e in term_exponents:
        e %= n
        if e == 0:
            const ^= ctx.m & 1  # Tr(1)
            continue
        ld = table.leader_of(e)
        if (ctx.m // table[ld].size) & 1:
            parity[ld] = parity.get(ld, 0) ^ 1
    g = BinPoly(0b11) if const else BinPoly.one()
    for ld in sorted(parity):
        if parity[ld]:
            g = g * ctx.minimal_poly_of_power(-ld)
    return g


def _formula_check(g: BinPoly, formula_span: int, in_hypothesis: bool,
                   label: str) -> None:
    if in_hypothesis and g.degree != formula_span:
        raise AssertionError(
            f"{label}: closed-form span {formula_span} != generator degree "
            f"{g.degree}; the parity fold and the formula disagree"
        )


def predict_welch(m: int, ctx: FieldContext | None = None) -> CodePrediction:
    """Family f = x^(2^t + 3) over GF(2^(2t+1)): span 5m + 1, d >= 8."""
    if m % 2 == 0:
        raise ValueError(f"this family needs odd m, got {m}")
    if m < 5:
        raise ValueError("m must be >= 5")
    t = (m - 1) // 2
    e = (1 << t) + 3
    ctx = ctx or make_field(m)
    warnings = []
    if m < 7:
        warnings.append(
            "m=5 is below the span lemma hypothesis (m >= 7): the coset of "
            "3 collides with the coset of 2^(t-1)+1 and those factors cancel"
        )
    terms = [0, 1, 3, (1 << (t - 1)) + 1, (1 << t) + 1, e]
    g = _fold_generator(ctx, terms)
    _formula_check(g, 5 * m + 1, m >= 7, "welch")
    return CodePrediction(
        family="welch", m=m, n=ctx.n, params={"m": m, "t": t, "e": e},
        predicted_generator=g, predicted_span=g.degree,
        distance_lower_bound=8, bound_source="theorem",
        warnings=tuple(warnings), f=ExponentPoly.monomial(e),
    )


def predict_power2h(m: int, h: int, ctx: FieldContext | None = None) -> CodePrediction:
    """Family f = x^(2^h - 1): span m(2^h + (-1)^(h-1))/3, +1 for odd m."""
    if not 2 <= h <= math.ceil(m / 2):
        raise ValueError(f"h must be in [2, ceil(m/2)] = [2, {math.ceil(m/2)}], got {h}")
    e = (1 << h) - 1
    ctx = ctx or make_field(m)
    warnings = []
    if math.gcd(h, m) != 1:
        warnings.append(
            f"gcd(h, m) = {math.gcd(h, m)} != 1: x^{e} is not a permutation "
            "and the realized code may be bad"
        )
    g = _fold_generator(ctx, range(1 << h))
    span = m * ((1 << h) + (-1) ** (h - 1)) // 3 + (m & 1)
    _formula_check(g, span, True, "power2h")
    if m % 2 == 1 and h > 2:
        dlow = (1 << (h - 2)) + 2
    else:
        dlow = (1 << (h - 2)) + 1
    return CodePrediction(
        family="power2h", m=m, n=ctx.n, params={"m": m, "h": h, "e": e},
        predicted_generator=g, predicted_span=g.degree,
        distance_lower_bound=dlow, bound_source="theorem",
        warnings=tuple(warnings), f=ExponentPoly.monomial(e),
    )


def predict_niho(m: int, ctx: FieldContext | None = None) -> CodePrediction:
    """Family e = 2^((m-1)/2) + 2^((m-1)/4) - 1 for m = 1 mod 4."""
    if m % 4 != 1:
        raise ValueError(f"this family needs m = 1 (mod 4), got {m}")
    if m < 5:
        raise ValueError("m must be >= 5")
    h = (m - 1) // 4
    e = (1 << (2 * h)) + (1 << h) - 1
    ctx = ctx or make_field(m)
    warnings = []
    if m < 9:
        warnings.append("m=5 is below the span lemma hypothesis (m >= 9)")
    terms = list(range(1 << (2 * h), (1 << (2 * h)) + (1 << h)))
    terms += list(range(0, 1 << h))
    g = _fold_generator(ctx, terms)
    sign = (-1) ** ((m - 5) // 4)
    if m % 8 == 1:
        span = (m * ((1 << (h + 2)) + sign) + 3) // 3
        dlow = (1 << h) + 2
    else:
        span = (m * ((1 << (h + 2)) + sign - 6) + 3) // 3
        dlow = 1 << h
    _formula_check(g, span, True, "niho")
    return CodePrediction(
        family="niho", m=m, n=ctx.n, params={"m": m, "h": h, "e": e},
        predicted_generator=g, predicted_span=g.degree,
        distance_lower_bound=dlow, bound_source="theorem",
        warnings=tuple(warnings), f=ExponentPoly.monomial(e),
    )


def kasami_h_window(m: int) -> int:
    """Largest h admitted by the family's h-restriction for this m."""
    return {1: (m - 1) // 4, 2: (m - 2) // 4, 3: (m - 3) // 4, 0: (m - 4) // 4}[m % 4]


def predict_kasami(m: int, h: int, ctx: FieldContext | None = None) -> CodePrediction:
    """Family e = 2^(2h) - 2^h + 1 with gcd(m, h) = 1.

    The defining sequence of this family carries a constant +1 on top of
    the trace, which complements the raw sequence when m is even; the
    realization honors that via sequence_complement.
    """
    if math.gcd(m, h) != 1:
        raise ValueError(f"gcd(m, h) = {math.gcd(m, h)} != 1")
    if h < 1:
        raise ValueError("h must be >= 1")
    e = (1 << (2 * h)) - (1 << h) + 1
    ctx = ctx or make_field(m)
    complement = m % 2 == 0
    hmax = kasami_h_window(m)
    if h > hmax:
        return CodePrediction(
            family="kasami", m=m, n=ctx.n, params={"m": m, "h": h, "e": e},
            predicted_generator=None, predicted_span=None,
            distance_lower_bound=0, bound_source="none",
            warnings=(
                f"h = {h} is outside the admitted window [1, {hmax}] for "
                f"m = {m}: no closed-form prediction; realizing generically",
            ),
            f=ExponentPoly.monomial(e), sequence_complement=complement,
        )
    terms = list(range(1 << (m - h), (1 << (m - h)) + (1 << h)))
    terms += list(range(1, 1 << h))
    g = _fold_generator(ctx, terms, extra_const=1)
    if h % 2 == 0:
        span = (m * ((1 << (h + 2)) + (-1) ** (h - 1)) + 3) // 3
        dlow = (1 << h) + 2
    else:
        span = (m * ((1 << (h + 2)) + (-1) ** (h - 1) - 6) + 3) // 3
        dlow = 1 << h
    _formula_check(g, span, True, "kasami")
    return CodePrediction(
        family="kasami", m=m, n=ctx.n, params={"m": m, "h": h, "e": e},
        predicted_generator=g, predicted_span=g.degree,
        distance_lower_bound=dlow, bound_source="theorem",
        warnings=(), f=ExponentPoly.monomial(e), sequence_complement=complement,
    )


def predict_trinomial(
    m: int, r: int, h: int, ctx: FieldContext | None = None
) -> CodePrediction:
    """Family f = x + x^r + x^(2^h - 1) with wt(r) = m - 1.

    The generator is read off the per-coset parity bits v_j, adjusted on
    the odd leaders below 2^h by the doubling-count parities kappa.
    """
    if m < 4:
        raise ValueError("m must be >= 4")
    if not 1 <= r <= (1 << m) - 2 or weight2(r) != m - 1:
        raise ValueError(f"r must satisfy wt(r) = m - 1 = {m - 1}, got r = {r}")
    if not 0 <= h <= math.ceil(m / 2):
        raise ValueError(f"h must be in [0, ceil(m/2)], got {h}")
    ctx = ctx or make_field(m)
    table = build_coset_table(m)
    u = {ld: table[ld].v for ld in table.leaders}
    if h == 0:
        u[1] = 1 if m % 2 == 1 else 0
    else:
        eps = build_epsilon_table(h)
        u[1] = (table[1].v + eps.kappa(1) + 1) & 1
        for a in range(3, 1 << h, 2):
            u[a] = (table[a].v + eps.kappa(a)) & 1
    g = BinPoly.one()
    for ld in table.leaders:
        if u[ld]:
            g = g * ctx.minimal_poly_of_power(-ld)
    if h == 0:
        span = (1 << (m - 1)) + (m if m % 2 == 1 else -m)
        dlow, source = (8, "theorem") if m % 2 == 1 else (3, "theorem")
    else:
        span = 1 << (m - 1)
        dlow, source = 0, "none"
    _formula_check(g, span, True, "trinomial")
    return CodePrediction(
        family="trinomial", m=m, n=ctx.n, params={"m": m, "r": r, "h": h},
        predicted_generator=g, predicted_span=g.degree,
        distance_lower_bound=dlow, bound_source=source,
        warnings=(), f=ExponentPoly.trinomial(r, h),
    )


PREDICTORS = {
    "welch": predict_welch,
    "power2h": predict_power2h,
    "niho": predict_niho,
    "kasami": predict_kasami,
    "trinomial": predict_trinomial,
}


@dataclass(frozen=True)
class RealizationRecord:
    """Outcome of comparing a prediction against the realized code.

    match is None when the family declined to predict (out-of-window
    parameters) and the code was realized generically.
    """

    family: str
    params: dict
    predicted_span: int | None
    realized_span: int
    match: bool | None
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class DiscrepancyReport:
    expected: BinPoly
    computed: BinPoly
    missing_cosets: tuple[int, ...]  # predicted zero cosets absent from the code
    extra_cosets: tuple[int, ...]    # realized zero cosets absent from the prediction

    def describe(self) -> str:
        return (
            f"expected generator {self.expected.to_terms()}; "
            f"computed {self.computed.to_terms()}; "
            f"cosets only in prediction: {list(self.missing_cosets)}; "
            f"cosets only in realization: {list(self.extra_cosets)}"
        )


class PredictionMismatch(Exception):
    """Raised when the realized generator contradicts the prediction."""

    def __init__(self, report: DiscrepancyReport):
        super().__init__(report.describe())
        self.report = report


def _zero_cosets(ctx: FieldContext, g: BinPoly) -> set[int]:
    table = build_coset_table(ctx.m)
    code = CyclicCode(n=ctx.n, generator=g,
                      parity_poly=BinPoly.x_pow_n_plus_1(ctx.n) // g, ctx=ctx)
    return {table.leader_of(z) for z in code.zero_exponents()}


def realize(
    ctx: FieldContext,
    f: ExponentPoly,
    prediction: CodePrediction | None = None,
) -> CyclicCode:
    """Run the generic pipeline and cross-check it against a prediction.

    The sequence's gcd-method minimal polynomial becomes the generator.
    With a prediction attached, polynomial and span equality are asserted
    and the outcome is recorded in the code's provenance; a mismatch
    raises PredictionMismatch with the differing coset factors.
    """
    if prediction is not None and prediction.m != ctx.m:
        raise ValueError(f"prediction is for m = {prediction.m}, context has {ctx.m}")
    complement = prediction.sequence_complement if prediction is not None else False
    seq = defining_sequence(ctx, f, complement=complement)
    span = minimal_poly_gcd(seq)
    if span.linear_span == 0:
        generator = BinPoly.x_pow_n_plus_1(ctx.n)  # zero code
    else:
        generator = span.minimal_poly
    code = from_generator(ctx.n, generator, ctx=ctx)
    if prediction is not None and prediction.has_prediction:
        if generator != prediction.predicted_generator:
            want = _zero_cosets(ctx, prediction.predicted_generator)
            got = _zero_cosets(ctx, generator)
            raise PredictionMismatch(DiscrepancyReport(
                expected=prediction.predicted_generator,
                computed=generator,
                missing_cosets=tuple(sorted(want - got)),
                extra_cosets=tuple(sorted(got - want)),
            ))
        code.provenance = RealizationRecord(
            family=prediction.family, params=dict(prediction.params),
            predicted_span=prediction.predicted_span,
            realized_span=span.linear_span, match=True,
            warnings=prediction.warnings,
        )
    elif prediction is not None:
        code.provenance = RealizationRecord(
            family=prediction.family, params=dict(prediction.params),
            predicted_span=None, realized_span=span.linear_span,
            match=None, warnings=prediction.warnings,
        )
    return code


def apn_profile(ctx: FieldContext, f: ExponentPoly) -> int:
    """max over a != 0, b of #{x : f(x+a) + f(x) = b}, exhaustively.

    2 means almost perfect nonlinear.  A profile of 1 (planar) cannot
    occur in characteristic 2 and is reported as an internal error.
    """
    if ctx.m > APN_MAX_M:
        raise ValueError(f"exhaustive profile needs m <= {APN_MAX_M}, got {ctx.m}")
    size = 1 << ctx.m
    n = ctx.n
    exp = np.asarray(ctx.exp[:n], dtype=np.int64)
    log = np.asarray(ctx.log, dtype=np.int64)
    f_table = np.zeros(size, dtype=np.int64)
    lx = log[np.arange(1, size)]
    for e in f.exponents:
        if e == 0:
            f_table ^= 1
        else:
            f_table[1:] ^= exp[(lx * e) % n]
    if 0 in f.exponents:
        f_table[0] = 1
    else:
        f_table[0] = 0
    idx = np.arange(size)
    worst = 0
    for a in range(1, size):
        diff = f_table[idx ^ a] ^ f_table
        worst = max(worst, int(np.bincount(diff, minlength=size).max()))
    if worst == 1:
        raise AssertionError("planar difference profile is impossible over GF(2^m)")
    return worst
