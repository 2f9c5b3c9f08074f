"""Binary cyclic codes: encoding, duals, bounds, and minimum distance.

The distance engine is tiered:

  1. exhaustive - all 2^k codewords, block-vectorized over packed uint64
     words; exact, for k <= 28;
  2. column_search - meet-in-the-middle collisions between syndrome
     column subsets (redundancy packed in a single uint64, so n - k <= 63);
     exact whenever d <= w_max, with sound partial results on budget;
  3. bz_partial - information-set enumeration: disjoint fully-enumerated
     information sets grow a certified lower bound, extra shuffled sets
     improve the upper bound.

Every result is intersected with the BCH run bound and, for even-weight
codes, lifted to even values.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .field import FieldContext
from .gf2x import BinPoly, poly_divexact

_POP8 = np.array([bin(v).count("1") for v in range(256)], dtype=np.uint8)


def _popcount_rows(arr: np.ndarray) -> np.ndarray:
    """Per-row popcount of a 2-d uint64 array."""
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr).sum(axis=1, dtype=np.int64)
    by = arr.view(np.uint8)
    return _POP8[by].sum(axis=1, dtype=np.int64)


def _int_to_words(v: int, words: int) -> np.ndarray:
    out = np.empty(words, dtype=np.uint64)
    mask = (1 << 64) - 1
    for w in range(words):
        out[w] = (v >> (64 * w)) & mask
    return out


@dataclass
class CyclicCode:
    """A length-n binary cyclic code with generator g | x^n - 1."""

    n: int
    generator: BinPoly
    parity_poly: BinPoly
    ctx: FieldContext | None = None
    provenance: object | None = None

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    def __repr__(self) -> str:
        return f"CyclicCode(n={self.n}, k={self.k}, g={self.generator.to_terms()})"

    def zero_exponents(self, ctx: FieldContext | None = None) -> frozenset[int]:
        """Exponents i with g(alpha^i) = 0; a union of 2-cyclotomic cosets."""
        ctx = ctx or self.ctx
        if ctx is None:
            raise ValueError("zero exponents need an attached field context")
        if ctx.n != self.n:
            raise ValueError(f"context n = {ctx.n} does not match code length {self.n}")
        n = self.n
        exp = np.asarray(ctx.exp[:n], dtype=np.int64)
        i_arr = np.arange(n, dtype=np.int64)
        acc = np.zeros(n, dtype=np.int64)
        for e in self.generator.exponents():
            acc ^= exp[(i_arr * e) % n]
        return frozenset(int(i) for i in np.nonzero(acc == 0)[0])


def from_generator(
    n: int, g: BinPoly, ctx: FieldContext | None = None
) -> CyclicCode:
    """Build the code generated by g; g must divide x^n - 1 exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    if g.is_zero():
        raise ValueError("generator must be nonzero")
    xn1 = BinPoly.x_pow_n_plus_1(n)
    r = xn1 % g
    if not r.is_zero():
        raise ValueError(
            f"generator {g.to_terms()} does not divide x^{n}-1: "
            f"remainder {r.to_terms()}"
        )
    return CyclicCode(n=n, generator=g, parity_poly=xn1 // g, ctx=ctx)


def encode(code: CyclicCode, message) -> np.ndarray:
    """Codeword bits of message(x) * g(x) mod (x^n - 1)."""
    msg = np.asarray(message, dtype=np.uint8)
    if msg.ndim != 1 or len(msg) != code.k:
        raise ValueError(f"message must have length k = {code.k}")
    m_int = int.from_bytes(np.packbits(msg, bitorder="little").tobytes(), "little")
    cw = (BinPoly(m_int) * code.generator) % BinPoly.x_pow_n_plus_1(code.n)
    out = np.zeros(code.n, dtype=np.uint8)
    for e in cw.exponents():
        out[e] = 1
    return out


def is_even_weight(code: CyclicCode) -> bool:
    """True iff (x + 1) divides g, iff every codeword has even weight."""
    return code.generator.eval_at_one() == 0


def dual(code: CyclicCode) -> CyclicCode:
    """The dual code: generator is the (monic) reciprocal of h(x)."""
    g_dual = code.parity_poly.reciprocal()
    return from_generator(code.n, g_dual, ctx=code.ctx)


def _longest_cyclic_run(zeros: frozenset[int], n: int) -> int:
    if not zeros:
        return 0
    if len(zeros) == n:
        return n
    # rotate so the scan does not straddle the wrap point
    start = 0
    while start in zeros:
        start += 1
    best = cur = 0
    for off in range(n):
        if (start + off) % n in zeros:
            cur += 1
            best = max(best, cur)
        else:
            cur = 0
    return best


def bch_bound(
    code: CyclicCode,
    ctx: FieldContext | None = None,
    hartmann_tzeng: bool = False,
    c_max: int = 8,
) -> int:
    """Lower bound on d from runs of consecutive zeros of g and its reciprocal.

    Returns 1 + the longest cyclic run over both zero sets; an odd run
    bound is lifted by one for even-weight codes.  The optional
    Hartmann-Tzeng mode additionally sweeps arithmetic zero patterns
    {b + i + j*c} for small c coprime to n.
    """
    zeros = code.zero_exponents(ctx)
    n = code.n
    recip = frozenset((-z) % n for z in zeros)
    bound = 1 + max(_longest_cyclic_run(zeros, n), _longest_cyclic_run(recip, n))
    if hartmann_tzeng:
        for zset in (zeros, recip):
            bound = max(bound, _hartmann_tzeng_bound(zset, n, c_max))
    if is_even_weight(code) and bound % 2 == 1:
        bound += 1
    return bound


def _hartmann_tzeng_bound(zeros: frozenset[int], n: int, c_max: int) -> int:
    """Best A + s with {b + i + j*c : i <= A-2, j <= s} inside the zero set."""
    best = 0
    for c in range(1, c_max + 1):
        if math.gcd(c, n) != 1:
            continue
        for b in range(n):
            if b not in zeros:
                continue
            # longest consecutive run starting at b
            a_len = 0
            while (b + a_len) % n in zeros and a_len < n:
                a_len += 1
            for A in range(2, a_len + 2):
                s = 0
                while all(
                    (b + i + (s + 1) * c) % n in zeros for i in range(A - 1)
                ) and s < n:
                    s += 1
                best = max(best, A + s)
    return best


@dataclass
class DistanceBudget:
    """Effort limits for the minimum-distance engine."""

    time_limit: float = 10.0
    w_max: int = 8
    max_exhaustive_log2: int = 28
    max_table_entries: int = 60_000_000
    bz_info_sets: int = 8
    bz_seed: int = 0
    bz_message_weight: int = 3
    threads: int = 1


@dataclass
class DistanceResult:
    lower: int
    upper: int
    exact: bool
    method: str
    witness: BinPoly | None = None
    effort: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "method": self.method,
            "witness": self.witness.to_hex() if self.witness is not None else None,
            "enumerated": self.effort,
        }


def _check_witness(code: CyclicCode, mask: int, weight: int) -> BinPoly:
    w = BinPoly(mask)
    if w.weight != weight:
        raise AssertionError("witness weight mismatch")
    if not (w % code.generator).is_zero():
        raise AssertionError("witness is not a codeword")
    return w


def _exhaustive_min_weight(code: CyclicCode, deadline: float) -> tuple[int, int, int]:
    """(min nonzero weight, witness mask, codewords enumerated); exact."""
    n, k = code.n, code.k
    g = code.generator.mask
    words = (n + 63) // 64
    low = min(k, 18)
    tbl = np.zeros((1, words), dtype=np.uint64)
    for i in range(low):
        row = _int_to_words(g << i, words)
        tbl = np.concatenate([tbl, tbl ^ row])
    hi_images = [g << i for i in range(low, k)]
    best = n + 1
    best_mask = 0
    total = 0
    for hi in range(1 << (k - low)):
        prefix = 0
        h = hi
        while h:
            prefix ^= hi_images[(h & -h).bit_length() - 1]
            h &= h - 1
        arr = tbl ^ _int_to_words(prefix, words) if prefix else tbl
        wts = _popcount_rows(arr)
        if hi == 0:
            wts[0] = n + 1  # exclude the zero codeword
        idx = int(np.argmin(wts))
        total += len(wts)
        if wts[idx] < best:
            best = int(wts[idx])
            row = arr[idx]
            best_mask = 0
            for w in range(words - 1, -1, -1):
                best_mask = (best_mask << 64) | int(row[w])
        if time.monotonic() > deadline and hi + 1 < 1 << (k - low):
            raise TimeoutError("exhaustive enumeration exceeded the time budget")
    return best, best_mask, total


class _SubsetTables:
    """Values (and packed indices) of all c-subsets of positions 1..n-1.

    Entries are ordered by largest position, so the first comb(t, c)
    entries are exactly the c-subsets of the first t positions; that
    prefix property is what lets the search stream by max index.
    Indices are packed 14 bits each into a uint64 (so c <= 4).  Tables
    are grown lazily, one subset size at a time.
    """

    def __init__(self, n: int, cols: np.ndarray, limit: int):
        self.n = n
        self.cols = cols
        self.limit = limit
        self.vals: list[np.ndarray] = [np.zeros(1, dtype=np.uint64)]
        self.idxp: list[np.ndarray] = [np.zeros(1, dtype=np.uint64)]

    def ensure(self, c_top: int) -> None:
        """Materialize tables up to subset size c_top; MemoryError if over budget."""
        if c_top > 4:
            raise MemoryError("index packing supports subset size <= 4")
        npos = self.n - 1
        for c in range(len(self.vals), c_top + 1):
            size = math.comb(npos, c)
            if size > self.limit:
                raise MemoryError(f"subset table of size C({npos},{c}) over budget")
            v = np.empty(size, dtype=np.uint64)
            ix = np.empty(size, dtype=np.uint64)
            pv, pi = self.vals[c - 1], self.idxp[c - 1]
            at = 0
            for t in range(c - 1, npos):
                pos = t + 1
                cnt = math.comb(t, c - 1)
                if cnt == 0:
                    continue
                v[at : at + cnt] = pv[:cnt] ^ self.cols[pos]
                ix[at : at + cnt] = (pi[:cnt] << np.uint64(14)) | np.uint64(pos)
                at += cnt
            assert at == size
            self.vals.append(v)
            self.idxp.append(ix)

    @staticmethod
    def unpack(packed: int, c: int) -> tuple[int, ...]:
        out = []
        for _ in range(c):
            out.append(packed & 0x3FFF)
            packed >>= 14
        return tuple(out)

    def prefix(self, c: int, max_pos_exclusive: int) -> int:
        """Number of c-subsets with all positions < max_pos_exclusive."""
        return math.comb(max_pos_exclusive - 1, c)


def _syndrome_columns(code: CyclicCode) -> np.ndarray:
    """Column i is x^i mod g, packed in a uint64 (needs deg g <= 63)."""
    g = code.generator.mask
    dg = code.generator.degree
    cols = np.empty(code.n, dtype=np.uint64)
    cur = 1
    for i in range(code.n):
        cols[i] = cur
        cur <<= 1
        if (cur >> dg) & 1:
            cur ^= g
    return cols


def _find_weight_w(
    code: CyclicCode,
    cols: np.ndarray,
    tables: _SubsetTables,
    w: int,
    deadline: float,
    effort: dict,
) -> tuple[str, int]:
    """Search for a weight-w codeword whose support contains position 0.

    Cyclic shifts cover every codeword, so absence here is absence
    everywhere.  Returns ('found', mask) | ('none', 0) | ('budget', 0).
    """
    n = code.n
    target = int(cols[0])
    a = (w - 1) // 2
    b = w - 1 - a
    if b == 0:
        return ("found", 1) if target == 0 else ("none", 0)
    try:
        tables.ensure(max(a, b - 1))
    except MemoryError:
        return "budget", 0
    left = tables.vals[a] ^ np.uint64(target)
    order = np.argsort(left, kind="stable")
    left_sorted = left[order]
    left_idx = tables.idxp[a][order]
    probe_vals = tables.vals[b - 1]
    for j in range(b, n):
        cnt = tables.prefix(b - 1, j)
        if cnt == 0 and b > 1:
            continue
        cand = probe_vals[:cnt] ^ cols[j] if b > 1 else np.array([cols[j]], dtype=np.uint64)
        effort["syndrome_probes"] = effort.get("syndrome_probes", 0) + len(cand)
        pos = np.searchsorted(left_sorted, cand)
        pos_c = np.minimum(pos, len(left_sorted) - 1)
        hits = np.nonzero(left_sorted[pos_c] == cand)[0]
        for hi in hits:
            # walk every left entry sharing the matched value
            v = cand[hi]
            p0 = int(np.searchsorted(left_sorted, v, side="left"))
            p1 = int(np.searchsorted(left_sorted, v, side="right"))
            right = ((j,) + tables.unpack(int(tables.idxp[b - 1][hi]), b - 1)
                     if b > 1 else (j,))
            if len(set(right)) != b:
                continue
            for p in range(p0, p1):
                lidx = tables.unpack(int(left_idx[p]), a)
                support = (0,) + lidx + right
                if len(set(support)) == w:
                    mask = 0
                    for i in support:
                        mask |= 1 << i
                    return "found", mask
        if time.monotonic() > deadline:
            return "budget", 0
    return "none", 0


def _column_search(
    code: CyclicCode, budget: DistanceBudget, lower: int, deadline: float
) -> DistanceResult:
    n = code.n
    even = is_even_weight(code)
    upper = code.generator.weight
    effort: dict = {}
    cols = _syndrome_columns(code)
    w0 = max(lower, 2 if even else 1)
    if even and w0 % 2 == 1:
        w0 += 1
    step = 2 if even else 1
    # index packing caps the searchable weight at 10 (subsets of size <= 4)
    w_cap = min(budget.w_max, upper, 10)
    tables = _SubsetTables(n, cols, budget.max_table_entries)
    w = w0
    while w <= w_cap:
        status, mask = _find_weight_w(code, cols, tables, w, deadline, effort)
        if status == "found":
            witness = _check_witness(code, mask, w)
            return DistanceResult(w, w, True, "column_search", witness, effort)
        if status == "budget":
            return DistanceResult(lower, upper, lower == upper, "column_search",
                                  effort=effort)
        lower = w + 1
        if even and lower % 2 == 1:
            lower += 1
        w += step
    witness = _check_witness(code, code.generator.mask, upper)
    if lower > upper:
        raise AssertionError("search certified absence below an actual codeword")
    return DistanceResult(lower, upper, lower == upper, "column_search",
                          witness, effort)


def _pack_rows(rows: np.ndarray) -> np.ndarray:
    """Pack a (r, n) uint8 bit matrix into (r, ceil(n/64)) uint64 words."""
    r, n = rows.shape
    words = (n + 63) // 64
    padded = np.zeros((r, words * 64), dtype=np.uint8)
    padded[:, :n] = rows
    by = np.packbits(padded, axis=1, bitorder="little")
    return by.view(np.uint64)


def _systematic_basis(
    gen_rows: np.ndarray, col_order: np.ndarray
) -> tuple[np.ndarray, list[int]] | None:
    """Row-reduce over the given column order.

    Returns (reduced basis, pivot columns) or None on rank deficiency.
    """
    mat = gen_rows.copy()
    k, _ = mat.shape
    row = 0
    pivot_cols: list[int] = []
    for col in col_order:
        if row == k:
            break
        pivots = np.nonzero(mat[row:, col])[0]
        if len(pivots) == 0:
            continue
        p = row + pivots[0]
        if p != row:
            mat[[row, p]] = mat[[p, row]]
        others = np.nonzero(mat[:, col])[0]
        for o in others:
            if o != row:
                mat[o] ^= mat[row]
        pivot_cols.append(int(col))
        row += 1
    return (mat, pivot_cols) if row == k else None


def _bz_partial(
    code: CyclicCode, budget: DistanceBudget, lower: int, deadline: float
) -> DistanceResult:
    n, k = code.n, code.k
    g = code.generator.mask
    rows = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        for e in BinPoly(g << i).exponents():
            rows[i, e] = 1
    upper = code.generator.weight
    best_mask = g
    even = is_even_weight(code)
    rng = np.random.default_rng(budget.bz_seed)
    effort = {"info_sets": 0, "codewords_enumerated": 0}
    w_enum = budget.bz_message_weight
    disjoint_contrib = 0
    used_cols: set[int] = set()
    for s in range(budget.bz_info_sets):
        if s == 0:
            col_order = np.arange(n)
        else:
            col_order = rng.permutation(n)
        reduced = _systematic_basis(rows, col_order)
        if reduced is None:
            continue
        basis, pivot_cols = reduced
        packed = _pack_rows(basis)
        effort["info_sets"] += 1
        fully_enumerated = True
        for w in range(1, w_enum + 1):
            n_combos = math.comb(k, w)
            if n_combos > budget.max_table_entries:
                fully_enumerated = False
                break
            if w == 1:
                wts = _popcount_rows(packed)
                idx = int(np.argmin(wts))
                effort["codewords_enumerated"] += k
                if wts[idx] < upper:
                    upper = int(wts[idx])
                    best_mask = _words_to_int(packed[idx])
            else:
                for combo_head in combinations(range(k), w - 1):
                    base = packed[combo_head[0]].copy()
                    for c in combo_head[1:]:
                        base ^= packed[c]
                    tail_start = combo_head[-1] + 1
                    if tail_start >= k:
                        continue
                    arr = packed[tail_start:] ^ base
                    wts = _popcount_rows(arr)
                    effort["codewords_enumerated"] += len(wts)
                    idx = int(np.argmin(wts))
                    if wts[idx] < upper:
                        upper = int(wts[idx])
                        best_mask = _words_to_int(arr[idx])
                    if time.monotonic() > deadline:
                        fully_enumerated = False
                        break
                if not fully_enumerated:
                    break
            if time.monotonic() > deadline:
                fully_enumerated = w >= w_enum
                break
        if fully_enumerated and not (set(pivot_cols) & used_cols):
            disjoint_contrib += w_enum + 1
            used_cols.update(pivot_cols)
        if time.monotonic() > deadline:
            break
    if disjoint_contrib:
        lower = max(lower, disjoint_contrib)
    if even and lower % 2 == 1:
        lower += 1
    lower = min(lower, upper)
    witness = _check_witness(code, best_mask, upper)
    return DistanceResult(lower, upper, lower == upper, "bz_partial",
                          witness, effort)


def _words_to_int(row: np.ndarray) -> int:
    v = 0
    for w in range(len(row) - 1, -1, -1):
        v = (v << 64) | int(row[w])
    return v


def min_distance(code: CyclicCode, budget: DistanceBudget | None = None) -> DistanceResult:
    """Tiered minimum-distance computation; never raises on budget exhaustion."""
    budget = budget or DistanceBudget()
    n, k = code.n, code.k
    if k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    deadline = time.monotonic() + budget.time_limit
    lower = 1
    if code.ctx is not None:
        lower = bch_bound(code)
    even = is_even_weight(code)
    if even and lower % 2 == 1:
        lower += 1
    if k <= min(28, budget.max_exhaustive_log2):
        try:
            best, mask, total = _exhaustive_min_weight(code, deadline)
            witness = _check_witness(code, mask, best)
            if best < lower:
                raise AssertionError("enumeration found a codeword below the BCH bound")
            return DistanceResult(best, best, True, "exhaustive", witness,
                                  {"codewords_enumerated": total})
        except TimeoutError:
            pass  # fall through to the cheaper tiers
    if n - k <= 63:
        return _column_search(code, budget, lower, deadline)
    return _bz_partial(code, budget, lower, deadline)


@dataclass(frozen=True)
class SpherePackingResult:
    holds: bool
    tight: bool
    ball_volume: int
    space: int

    def __bool__(self) -> bool:
        return self.holds


def sphere_packing_check(n: int, k: int, d: int) -> SpherePackingResult:
    """Sphere packing bound: sum_{i<=t} C(n,i) <= 2^(n-k), t = (d-1)//2.

    tight means equality, i.e. a perfect code.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    t = (d - 1) // 2
    ball = sum(math.comb(n, i) for i in range(t + 1))
    space = 1 << (n - k)
    return SpherePackingResult(ball <= space, ball == space, ball, space)
