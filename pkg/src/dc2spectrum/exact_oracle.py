"""Exact counting of dc2-balanced codewords.

The bivariate generating function ``prod_{i=1..n} (1 + z*y**i)`` counts
binary words of length ``n`` by weight ``c`` (power of ``z``) and index sum
``p`` (power of ``y``). Each row ``c`` of the coefficient grid is a
polynomial in ``y`` with non-negative integer coefficients below ``2**n``,
so it is stored packed into a single Python integer, one fixed-width slot
per power of ``y``. Multiplying by ``1 + z*y**k`` is then one shift and one
add per row, and exact long division by the same factor is one shift and
one subtract per row. No borrows occur because every intermediate quotient
is itself a counting polynomial.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .model import (
    Autocorrelation,
    Codeword,
    DomainError,
    Method,
    ResourceGuardError,
    bipolar_autocorrelation_sums,
    make_autocorrelation,
)

__all__ = [
    "CountTable",
    "PairCount",
    "MEMORY_BUDGET_ENV",
    "ENUMERATION_LIMIT",
    "DEFAULT_EXACT_LIMIT",
    "memory_budget",
    "enumerate_s2",
    "build_count_table",
    "count_dc2",
    "pair_count",
    "pair_count_skip",
    "exact_pair_correlation",
    "exact_lag_sums",
    "exact_autocorrelation_fractions",
    "exact_autocorrelation",
    "enumerated_autocorrelation_fractions",
]

MEMORY_BUDGET_ENV = "DC2SPECTRUM_MEMORY_BUDGET"
DEFAULT_MEMORY_BUDGET = 4 * 1024**3
ENUMERATION_LIMIT = 28
DEFAULT_EXACT_LIMIT = 128


def memory_budget() -> int:
    raw = os.environ.get(MEMORY_BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MEMORY_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ResourceGuardError(f"{MEMORY_BUDGET_ENV}={raw!r} is not an integer byte count")
    if value <= 0:
        raise ResourceGuardError(f"{MEMORY_BUDGET_ENV} must be positive")
    return value


def _slot_bytes(n: int) -> int:
    # coefficients are < 2**n; keep one spare bit and byte alignment
    return (n + 2 + 7) // 8


def _check_budget(n_rows: int, n_cols: int, slot: int, copies: int = 1):
    need = n_rows * n_cols * slot * copies
    budget = memory_budget()
    if need > budget:
        raise ResourceGuardError(
            f"count table for these parameters needs ~{need} bytes, budget is {budget} "
            f"(set {MEMORY_BUDGET_ENV} to raise it)"
        )


class _PackedGrid:
    """Coefficient rows ``0..cmax`` truncated to powers ``y**0 .. y**pmax``."""

    def __init__(self, n: int, cmax: int, pmax: int, rows: list[int] | None = None):
        self.n = n
        self.cmax = cmax
        self.pmax = pmax
        self.slot = _slot_bytes(n)
        self.bits = 8 * self.slot
        self.mask = (1 << ((pmax + 1) * self.bits)) - 1
        self.rows = rows if rows is not None else [1] + [0] * cmax

    @classmethod
    def product(cls, n: int, cmax: int, pmax: int, skip: Iterable[int] = ()) -> "_PackedGrid":
        grid = cls(n, cmax, pmax)
        skipped = set(skip)
        rows, bits, mask = grid.rows, grid.bits, grid.mask
        used = 0
        for k in range(1, n + 1):
            if k in skipped:
                continue
            used += 1
            shift = k * bits
            if shift > (pmax + 1) * bits:
                continue
            for c in range(min(used, cmax), 0, -1):
                if rows[c - 1]:
                    rows[c] = (rows[c] + (rows[c - 1] << shift)) & mask
        return grid

    def divide(self, k: int) -> "_PackedGrid":
        """Exact quotient by ``1 + z*y**k``."""
        shift = k * self.bits
        out = [self.rows[0]]
        for c in range(1, self.cmax + 1):
            q = self.rows[c] - ((out[c - 1] << shift) & self.mask)
            if q < 0:
                raise ArithmeticError(f"factor (1 + z y^{k}) does not divide the table")
            out.append(q)
        return _PackedGrid(self.n, self.cmax, self.pmax, out)

    def coeff(self, c: int, p: int) -> int:
        if not (0 <= c <= self.cmax and 0 <= p <= self.pmax):
            return 0
        return (self.rows[c] >> (p * self.bits)) & ((1 << self.bits) - 1)

    def row_bytes(self, c: int) -> bytes:
        return self.rows[c].to_bytes((self.pmax + 1) * self.slot, "little")

    def unpack_row(self, c: int) -> list[int]:
        buf = self.row_bytes(c)
        s = self.slot
        return [int.from_bytes(buf[j * s:(j + 1) * s], "little") for j in range(self.pmax + 1)]


@dataclass(frozen=True)
class CountTable:
    """Number of length-``n`` binary words per (weight, index sum).

    ``coeff(c, p)`` is defined for ``0 <= c <= n`` and
    ``0 <= p <= n(n+1)/2``; values outside that range are zero.
    """

    n: int
    _grid: _PackedGrid

    @property
    def max_index_sum(self) -> int:
        return self.n * (self.n + 1) // 2

    def coeff(self, c: int, p: int) -> int:
        return self._grid.coeff(c, p)

    def row(self, c: int) -> list[int]:
        return self._grid.unpack_row(c)

    def to_lists(self) -> list[list[int]]:
        return [self.row(c) for c in range(self.n + 1)]

    def total(self) -> int:
        return sum(sum(self.row(c)) for c in range(self.n + 1))

    def divide(self, k: int) -> "CountTable":
        """Table of words with position ``k`` removed (quotient by ``1 + z*y**k``).

        The result is indexed like the input; it counts words over the
        remaining ``n - 1`` positions, which keep their original indices.
        """
        if not 1 <= k <= self.n:
            raise DomainError(f"position {k} outside 1..{self.n}")
        return CountTable(self.n, self._grid.divide(k))


@dataclass(frozen=True)
class PairCount:
    n: int
    i0: int
    i1: int
    count: int


def _require_dc2_length(n: int):
    if n < 4 or n % 4:
        raise DomainError(f"dc2-balanced codes need n >= 4 with n mod 4 = 0, got n={n}")


def enumerate_s2(n: int) -> list[Codeword]:
    """All dc2-balanced words of length ``n`` in lexicographic order."""
    _require_dc2_length(n)
    if n > ENUMERATION_LIMIT:
        raise DomainError(f"enumeration is limited to n <= {ENUMERATION_LIMIT}, got n={n}")
    half = n // 2
    target = n * (n + 1) // 4
    out: list[Codeword] = []
    bits = [0] * n

    def feasible(k: int, need: int, rem: int) -> bool:
        # choose `need` positions from k..n summing to `rem`
        if need == 0:
            return rem == 0
        if need > n - k + 1:
            return False
        lo = need * (2 * k + need - 1) // 2
        hi = need * (2 * n - need + 1) // 2
        return lo <= rem <= hi

    def walk(k: int, need: int, rem: int):
        if k > n:
            out.append(Codeword(tuple(bits)))
            return
        if feasible(k + 1, need, rem):
            bits[k - 1] = 0
            walk(k + 1, need, rem)
        if need and feasible(k + 1, need - 1, rem - k):
            bits[k - 1] = 1
            walk(k + 1, need - 1, rem - k)
        bits[k - 1] = 0

    if feasible(1, half, target):
        walk(1, half, target)
    return out


def build_count_table(n: int) -> CountTable:
    """Full coefficient table of ``prod_{i=1..n} (1 + z*y**i)``."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    pmax = n * (n + 1) // 2
    _check_budget(n + 1, pmax + 1, _slot_bytes(n))
    return CountTable(n, _PackedGrid.product(n, n, pmax))


def _targets(n: int) -> tuple[int, int] | None:
    if n % 2 or (n * (n + 1)) % 4:
        return None
    return n // 2, n * (n + 1) // 4


def _truncated_product(n: int) -> _PackedGrid:
    half, target = _targets(n)
    _check_budget(half + 1, target + 1, _slot_bytes(n), copies=2)
    return _PackedGrid.product(n, half, target)


def count_dc2(n: int) -> int:
    """Number of dc2-balanced codewords of length ``n`` (0 if none exist)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    t = _targets(n)
    if t is None:
        return 0
    half, target = t
    return _truncated_product(n).coeff(half, target)


def _check_pair(n: int, i0: int, i1: int):
    _require_dc2_length(n)
    if not (1 <= i0 < i1 <= n):
        raise DomainError(f"need 1 <= i0 < i1 <= n, got i0={i0}, i1={i1}, n={n}")


def pair_count(n: int, i0: int, i1: int) -> PairCount:
    """dc2-balanced words with ones at positions ``i0`` and ``i1``, via exact division."""
    _check_pair(n, i0, i1)
    half, target = _targets(n)
    grid = _truncated_product(n).divide(i0).divide(i1)
    return PairCount(n, i0, i1, grid.coeff(half - 2, target - i0 - i1))


def pair_count_skip(n: int, i0: int, i1: int) -> int:
    """Same count as :func:`pair_count`, recomputed by a product that skips both positions."""
    _check_pair(n, i0, i1)
    half, target = _targets(n)
    grid = _PackedGrid.product(n, half, target, skip=(i0, i1))
    return grid.coeff(half - 2, target - i0 - i1)


def exact_pair_correlation(n: int, i0: int, i1: int) -> float:
    if i0 > i1:
        i0, i1 = i1, i0
    _check_pair(n, i0, i1)
    total = count_dc2(n)
    if total == 0:
        raise DomainError(f"no dc2-balanced codewords for n={n}")
    return float(Fraction(4 * pair_count(n, i0, i1).count, total) - 1)


def _iter_quotient_rows(base: _PackedGrid, a: int, rows_needed: int) -> Iterator[bytes]:
    shift = a * base.bits
    prev = None
    for c in range(rows_needed):
        q = base.rows[c] if prev is None else base.rows[c] - ((prev << shift) & base.mask)
        prev = q
        yield q.to_bytes((base.pmax + 1) * base.slot, "little")


@functools.lru_cache(maxsize=8)
def exact_lag_sums(n: int) -> tuple[int, tuple[int, ...]]:
    """Return ``(N, S)`` with ``S[i-1] = sum_j count(j, j+i)`` for lags ``i = 1..n-1``.

    ``count(j, j+i)`` is the number of dc2-balanced words with ones at both
    positions. Reversal symmetry ``count(a, b) = count(n+1-b, n+1-a)`` is used
    so only pairs with ``a + b <= n + 1`` are evaluated.
    """
    _require_dc2_length(n)
    half, target = _targets(n)
    base = _truncated_product(n)
    total = base.coeff(half, target)
    c0 = half - 2
    slot = base.slot
    sums = [0] * (n - 1)
    for a in range(1, half + 1):
        rows = list(_iter_quotient_rows(base, a, c0 + 1))
        for b in range(a + 1, n + 2 - a):
            # coefficient of z^c0 y^p0 in Q_a / (1 + z*y^b)
            p0 = target - a - b
            acc = 0
            sign = 1
            for l in range(c0 + 1):
                p = p0 - b * l
                if p < 0:
                    break
                acc += sign * int.from_bytes(rows[c0 - l][p * slot:(p + 1) * slot], "little")
                sign = -sign
            weight = 1 if a + b == n + 1 else 2
            sums[b - a - 1] += weight * acc
    return total, tuple(sums)


def _check_exact_limit(n: int, expensive: bool):
    if n > DEFAULT_EXACT_LIMIT and not expensive:
        raise ResourceGuardError(
            f"exact autocorrelation for n={n} > {DEFAULT_EXACT_LIMIT} requires the expensive flag"
        )


def exact_autocorrelation_fractions(n: int, expensive: bool = False) -> list[Fraction]:
    """Exact rational autocorrelation of the full dc2-balanced set, lags ``1..n-1``."""
    _require_dc2_length(n)
    _check_exact_limit(n, expensive)
    total, sums = exact_lag_sums(n)
    if total == 0:
        raise DomainError(f"no dc2-balanced codewords for n={n}")
    return [Fraction(4 * s - (n - i) * total, n * total) for i, s in enumerate(sums, start=1)]


def exact_autocorrelation(n: int, expensive: bool = False) -> Autocorrelation:
    fr = exact_autocorrelation_fractions(n, expensive=expensive)
    return make_autocorrelation(n, (float(v) for v in fr), Method.EXACT)


def enumerated_autocorrelation_fractions(n: int) -> list[Fraction]:
    """Autocorrelation by direct averaging over :func:`enumerate_s2` (brute force)."""
    words = enumerate_s2(n)
    if not words:
        raise DomainError(f"no dc2-balanced codewords for n={n}")
    sums = bipolar_autocorrelation_sums(words)
    return [Fraction(s, n * len(words)) for s in sums]
