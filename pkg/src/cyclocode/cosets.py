"""2-cyclotomic cosets modulo 2^m - 1 and the doubling-count tables.

A coset C_j is the orbit of j under doubling mod n = 2^m - 1.  The table
records, per coset, the leader (smallest member), the members in doubling
order from the leader, the size, the count rho of even members, and the
parity bit v = (m * rho / size) mod 2 that drives the trinomial-family
generator polynomial.

The epsilon table covers the companion combinatorics on {1..2^t-1}: for
odd a, epsilon counts the doublings of a that stay <= 2^t - 1, kappa is
its parity, and the doubling chains B_a partition {1..2^t-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_COSET_M = 24
MAX_EPSILON_T = 24


def weight2(j: int) -> int:
    """Number of ones in the binary expansion of j (the 2-weight)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return j.bit_count()


@dataclass(frozen=True)
class Coset:
    leader: int
    members: tuple[int, ...]
    size: int
    rho: int  # number of even members
    v: int    # (m * rho / size) mod 2


class CosetTable:
    """All 2-cyclotomic cosets mod 2^m - 1, keyed by leader."""

    def __init__(self, m: int):
        if not 2 <= m <= MAX_COSET_M:
            raise ValueError(f"m must be in [2, {MAX_COSET_M}], got {m}")
        self.m = m
        self.n = (1 << m) - 1
        n = self.n
        leader_of = np.full(n, -1, dtype=np.int64)
        cosets: dict[int, Coset] = {}
        for j in range(n):
            if leader_of[j] >= 0:
                continue
            members = [j]
            c = (2 * j) % n
            while c != j:
                members.append(c)
                c = (2 * c) % n
            size = len(members)
            rho = sum(1 for x in members if x % 2 == 0)
            assert m % size == 0
            v = ((m // size) * rho) & 1
            cosets[j] = Coset(j, tuple(members), size, rho, v)
            for x in members:
                leader_of[x] = j
        self.cosets = cosets
        self.leaders = sorted(cosets)
        self._leader_of = leader_of

    def leader_of(self, j: int) -> int:
        return int(self._leader_of[j % self.n])

    def coset_of(self, j: int) -> Coset:
        return self.cosets[self.leader_of(j)]

    def __getitem__(self, leader: int) -> Coset:
        return self.cosets[leader]

    def __iter__(self):
        return iter(self.leaders)

    def __len__(self) -> int:
        return len(self.leaders)

    def to_json(self) -> list[dict]:
        """CLI-facing dump: one record per coset, ascending leaders."""
        return [
            {
                "leader": c.leader,
                "size": c.size,
                "members": list(c.members),
                "rho": c.rho,
                "v": c.v,
            }
            for c in (self.cosets[ld] for ld in self.leaders)
        ]


@lru_cache(maxsize=32)
def build_coset_table(m: int) -> CosetTable:
    """Materialize the full coset partition for 2 <= m <= 24."""
    return CosetTable(m)


def odd_even_split(m: int, j: int) -> tuple[int, int]:
    """(odd count, even count) of the coset of a full-size leader j.

    Valid only for nonzero leaders whose coset has size m; the counts are
    then wt(j) and m - wt(j).
    """
    table = build_coset_table(m)
    if j not in table.cosets or j == 0:
        raise ValueError(f"{j} is not a nonzero coset leader mod 2^{m}-1")
    coset = table.cosets[j]
    if coset.size != m:
        raise ValueError(
            f"coset of {j} has size {coset.size} != m = {m}; split undefined"
        )
    w = weight2(j)
    return w, m - w


def epsilon_count(t: int, a: int) -> int:
    """Number of i >= 0 with 2^i * a <= 2^t - 1, for odd a in range."""
    T = (1 << t) - 1
    if not (1 <= a <= T) or a % 2 == 0:
        raise ValueError(f"a must be odd in [1, {T}], got {a}")
    count = 0
    x = a
    while x <= T:
        count += 1
        x <<= 1
    return count


class EpsilonTable:
    """epsilon/kappa/B records for all odd a in {1..2^t-1}.

    Stored columnar (epsilon as a uint8 array over a = 1, 3, 5, ...);
    B chains are derived on demand.
    """

    def __init__(self, t: int):
        if not 1 <= t <= MAX_EPSILON_T:
            raise ValueError(f"t must be in [1, {MAX_EPSILON_T}], got {t}")
        self.t = t
        self.T = (1 << t) - 1
        # epsilon for odd a equals t + 1 - bit_length(a); the doubling-count
        # definition is asserted against this form in the test suite.
        odd = np.arange(1, self.T + 1, 2, dtype=np.int64)
        bitlen = np.frexp(odd.astype(np.float64))[1]  # exact for t <= 24
        self.epsilon = (t + 1 - bitlen).astype(np.uint8)

    def odd_values(self) -> np.ndarray:
        return np.arange(1, self.T + 1, 2, dtype=np.int64)

    def eps(self, a: int) -> int:
        if a % 2 == 0 or not 1 <= a <= self.T:
            raise ValueError(f"a must be odd in [1, {self.T}]")
        return int(self.epsilon[(a - 1) // 2])

    def kappa(self, a: int) -> int:
        return self.eps(a) & 1

    def B(self, a: int) -> tuple[int, ...]:
        """The doubling chain {a, 2a, ..., 2^(eps-1) a}."""
        return tuple(a << i for i in range(self.eps(a)))

    def records(self):
        """Iterate (a, epsilon, kappa, B) over odd a ascending."""
        for idx, e in enumerate(self.epsilon):
            a = 2 * idx + 1
            e = int(e)
            yield a, e, e & 1, tuple(a << i for i in range(e))


@lru_cache(maxsize=32)
def build_epsilon_table(t: int) -> EpsilonTable:
    return EpsilonTable(t)


def count_odd_epsilon(t: int) -> int:
    """Direct count of odd a <= 2^t - 1 whose doubling count is odd."""
    if t < 1:
        raise ValueError("t must be >= 1")
    T = (1 << t) - 1
    total = 0
    for a in range(1, T + 1, 2):
        count = 0
        x = a
        while x <= T:
            count += 1
            x <<= 1
        total += count & 1
    return total
