"""Brute-force reference implementations, used only by the test suite.

These favor clarity over speed and deliberately share no code with the
fast paths they validate: cosets by literal doubling, linear span by
solving the recurrence with Gaussian elimination, minimum distance by
plain message enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import CyclicCode


@dataclass(frozen=True)
class OracleReport:
    subject: str
    instance: dict
    agree: bool
    detail: str = ""


def naive_coset(m: int, j: int) -> set[int]:
    """The 2-cyclotomic coset of j mod 2^m - 1, by doubling until repeat."""
    if m > 16:
        raise ValueError("oracle is capped at m <= 16")
    n = (1 << m) - 1
    out = set()
    c = j % n
    while c not in out:
        out.add(c)
        c = (2 * c) % n
    return out


def naive_span(bits) -> int:
    """Smallest L such that a degree-L recurrence generates the periodic
    stream, found by solving s_i = sum c_j s_(i-j) with Gaussian elimination.

    Indices wrap around the period, so the recurrence is required on the
    bi-infinite periodic extension, not just one window.
    """
    seq = [int(b) for b in bits]
    if len(seq) > 1 << 14:
        raise ValueError("oracle is capped at length 2^14")
    if not any(seq):
        return 0
    n = len(seq)
    for L in range(1, n + 1):
        # unknowns c_1..c_L; one equation per phase i
        rows = []
        rhs = []
        for i in range(n):
            rows.append([seq[(i - j) % n] for j in range(1, L + 1)])
            rhs.append(seq[i % n])
        if _solvable_gf2(np.array(rows, dtype=np.uint8),
                        np.array(rhs, dtype=np.uint8)):
            return L
    return n


def _solvable_gf2(a: np.ndarray, b: np.ndarray) -> bool:
    rows, cols = a.shape
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if aug[i, c]:
                piv = i
                break
        if piv is None:
            continue
        aug[[r, piv]] = aug[[piv, r]]
        for i in range(rows):
            if i != r and aug[i, c]:
                aug[i] ^= aug[r]
        r += 1
    # inconsistent iff some row reads 0 = 1
    return not any(row[-1] and not row[:-1].any() for row in aug[r:])


def naive_min_distance(code: CyclicCode) -> int:
    """Minimum weight by plain enumeration of all nonzero messages."""
    if code.k > 20:
        raise ValueError("oracle is capped at k <= 20")
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    g = code.generator.mask
    best = code.n + 1
    for msg in range(1, 1 << code.k):
        cw = 0
        mm = msg
        shift = 0
        while mm:
            if mm & 1:
                cw ^= g << shift
            mm >>= 1
            shift += 1
        best = min(best, cw.bit_count())
    return best
