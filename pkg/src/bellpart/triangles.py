"""Exact computation of the classical, type-B and type-D Stirling triangles
of the second kind, the matching Bell sequences, and an identity checker.

Number families:

* ``stirling2(n, k)``  -- classical second-kind Stirling numbers
* ``stirling_b(n, k)`` -- type-B analogue, recurrence
  ``S_B(n,k) = S_B(n-1,k-1) + (2k+1) S_B(n-1,k)``
* ``stirling_d(n, k)`` -- type-D analogue, computed through
  ``S_D(n,k) = S_B(n,k) - n 2^(n-1-k) S(n-1,k)``
* ``bell_a / bell_b / bell_d`` -- the corresponding row sums.

Everything is exact big-integer arithmetic; out-of-range (k > n, k < 0)
arguments return 0 so identity sums can run over uniform index ranges.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from bellpart.kernels import WEIGHT_CLASSICAL, WEIGHT_ODD, extend_weighted_rows


class Family(Enum):
    CLASSICAL = "classical"
    TYPE_B = "b"
    TYPE_D = "d"


# Row caches, extended bottom-up on demand.  Compute-then-publish under a
# lock so concurrent readers never observe a half-built row.
_lock = threading.Lock()
_rows_classical: list[list[int]] = []
_rows_b: list[list[int]] = []


def _classical_rows(n: int) -> list[list[int]]:
    if len(_rows_classical) <= n:
        with _lock:
            extend_weighted_rows(_rows_classical, WEIGHT_CLASSICAL, n)
    return _rows_classical


def _b_rows(n: int) -> list[list[int]]:
    if len(_rows_b) <= n:
        with _lock:
            extend_weighted_rows(_rows_b, WEIGHT_ODD, n)
    return _rows_b


def binomial(n: int, k: int) -> int:
    """C(n, k); 0 outside the triangle."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def stirling2(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return _classical_rows(n)[n][k]


def stirling_b(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return _b_rows(n)[n][k]


def stirling_d(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    # The subtracted term vanishes when S(n-1,k) = 0, in particular at
    # k = n where the exponent n-1-k would be negative.
    s = stirling2(n - 1, k)
    value = stirling_b(n, k) if s == 0 else stirling_b(n, k) - n * (1 << (n - 1 - k)) * s
    if value < 0:
        raise AssertionError(f"stirling_d underflow at (n={n}, k={k})")
    return value


def bell_a(n: int) -> int:
    return sum(_classical_rows(n)[n])


def bell_b(n: int) -> int:
    return sum(_b_rows(n)[n])


def bell_d(n: int) -> int:
    return sum(stirling_d(n, k) for k in range(n + 1))


_STIRLING_FN = {
    Family.CLASSICAL: stirling2,
    Family.TYPE_B: stirling_b,
    Family.TYPE_D: stirling_d,
}

_BELL_FN = {
    Family.CLASSICAL: bell_a,
    Family.TYPE_B: bell_b,
    Family.TYPE_D: bell_d,
}


def stirling(family: Family, n: int, k: int) -> int:
    return _STIRLING_FN[family](n, k)


def bell(family: Family, n: int) -> int:
    return _BELL_FN[family](n)


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular table of one Stirling family, rows 0..max_row."""

    family: Family
    max_row: int
    entries: dict[tuple[int, int], int]

    @classmethod
    def build(cls, family: Family, max_row: int) -> "Triangle":
        fn = _STIRLING_FN[family]
        entries = {(r, k): fn(r, k) for r in range(max_row + 1) for k in range(r + 1)}
        return cls(family, max_row, entries)

    def row(self, r: int) -> list[int]:
        return [self.entries[r, k] for k in range(r + 1)]

    def row_sum(self, r: int) -> int:
        return sum(self.row(r))


# ---------------------------------------------------------------------------
# Identity verification


IDENTITY_IDS = (
    "B_FROM_CLASSICAL",
    "D_FROM_B",
    "B_BELL_REC",
    "ODD_WEIGHT_SUM",
    "D_BELL_REC",
    "ZERO_BLOCK_DEFECT",
    "THM_4_7",
)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    n_max: int
    status: bool
    first_failure: Optional[tuple[int, Optional[int], int, int]] = None
    # per-n (n, common value) pairs for scalar identities; None for the
    # per-(n,k) ones
    values: Optional[tuple[tuple[int, int], ...]] = None


def _weighted_classical_sum(n: int) -> int:
    """sum_k 2^(n-k) S(n,k)."""
    return sum((1 << (n - k)) * stirling2(n, k) for k in range(n + 1))


def single_positive_zero_block_formula(n: int) -> int:
    """Closed formula n * sum_k 2^(n-1-k) S(n-1,k) for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * sum((1 << (n - 1 - k)) * stirling2(n - 1, k) for k in range(n))


def d_recurrence_terms(n: int) -> tuple[list[int], list[int]]:
    """The two summand groups whose total is bell_d(n + 1).

    Returns (unsigned_groups, bell_groups) where
    unsigned_groups[i-1] = C(n,i) * sum_k 2^(n-i-k) S(n-i,k) for i = 1..n and
    bell_groups[k]       = 2^k C(n,k) D(n-k)                 for k = 0..n.
    """
    unsigned = [
        binomial(n, i)
        * sum((1 << (n - i - k)) * stirling2(n - i, k) for k in range(n - i + 1))
        for i in range(1, n + 1)
    ]
    bells = [(1 << k) * binomial(n, k) * bell_d(n - k) for k in range(n + 1)]
    return unsigned, bells


def verify_identity(identity_id: str, n_max: int) -> IdentityReport:
    """Check one identity exactly for every n (and k where applicable) up to n_max."""
    if identity_id not in IDENTITY_IDS:
        raise ValueError(f"unknown identity: {identity_id}")

    failure: Optional[tuple[int, Optional[int], int, int]] = None
    values: list[tuple[int, int]] = []
    scalar = True

    if identity_id == "B_FROM_CLASSICAL":
        scalar = False
        for n in range(n_max + 1):
            for k in range(n + 1):
                lhs = stirling_b(n, k)
                rhs = sum(
                    (1 << (i - k)) * binomial(n, i) * stirling2(i, k)
                    for i in range(k, n + 1)
                )
                if lhs != rhs:
                    failure = (n, k, lhs, rhs)
                    break
            if failure:
                break
    elif identity_id == "D_FROM_B":
        scalar = False
        for n in range(n_max + 1):
            for k in range(n + 1):
                lhs = stirling_d(n, k)
                sub = 0 if n == 0 else n * (1 << (n - 1 - k)) * stirling2(n - 1, k) if k < n else 0
                rhs = stirling_b(n, k) - sub
                if lhs != rhs or lhs < 0:
                    failure = (n, k, lhs, rhs)
                    break
            if failure:
                break
    elif identity_id == "B_BELL_REC":
        for n in range(n_max):
            lhs = bell_b(n + 1)
            rhs = bell_b(n) + sum(
                (1 << k) * binomial(n, k) * bell_b(n - k) for k in range(n + 1)
            )
            values.append((n + 1, rhs))
            if lhs != rhs:
                failure = (n, None, lhs, rhs)
                break
    elif identity_id == "ODD_WEIGHT_SUM":
        for n in range(n_max + 1):
            lhs = sum((2 * k + 1) * stirling_b(n, k) for k in range(n + 1))
            rhs = sum((1 << k) * binomial(n, k) * bell_b(n - k) for k in range(n + 1))
            values.append((n, rhs))
            if lhs != rhs:
                failure = (n, None, lhs, rhs)
                break
    elif identity_id == "D_BELL_REC":
        for n in range(n_max):
            lhs = bell_d(n + 1)
            unsigned, bells = d_recurrence_terms(n)
            rhs = sum(unsigned) + sum(bells)
            values.append((n + 1, rhs))
            if lhs != rhs:
                failure = (n, None, lhs, rhs)
                break
    elif identity_id == "ZERO_BLOCK_DEFECT":
        for n in range(1, n_max + 1):
            lhs = bell_b(n) - bell_d(n)
            rhs = single_positive_zero_block_formula(n)
            values.append((n, rhs))
            if lhs != rhs or lhs < 0:
                failure = (n, None, lhs, rhs)
                break
    else:  # THM_4_7
        for n in range(n_max + 1):
            lhs = sum(
                binomial(n, i)
                * sum((1 << (n - i - k)) * stirling2(n - i, k) for k in range(n - i + 1))
                for i in range(1, n + 1)
            )
            rhs = bell_b(n) - _weighted_classical_sum(n)
            values.append((n, rhs))
            if lhs != rhs:
                failure = (n, None, lhs, rhs)
                break

    return IdentityReport(
        identity_id=identity_id,
        n_max=n_max,
        status=failure is None,
        first_failure=failure,
        values=tuple(values) if scalar else None,
    )
