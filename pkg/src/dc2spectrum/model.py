"""Shared domain types and codeword predicates.

Positions are 1-based everywhere in the public API: ``bits[0]`` of a
:class:`Codeword` is position 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DomainError",
    "ResourceGuardError",
    "Order",
    "Method",
    "Codeword",
    "CodeParams",
    "Autocorrelation",
    "is_dc2_balanced",
    "complement",
    "reverse",
    "make_autocorrelation",
]


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ResourceGuardError(RuntimeError):
    """Computation refused because it would exceed a configured budget."""


class Order(enum.Enum):
    FIRST = 1
    SECOND = 2


class Method(str, enum.Enum):
    EXACT = "exact"
    CLT = "clt"
    CLT_CORRECTED = "clt-corrected"
    CUBIC = "cubic"
    CUBIC_CORRECTED = "cubic-corrected"
    PRIOR_ART = "prior-art"
    DC1 = "dc1"


@dataclass(frozen=True)
class Codeword:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise DomainError("codeword must have positive length")
        if any(b not in (0, 1) for b in bits):
            raise DomainError("codeword symbols must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, s: str) -> "Codeword":
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise DomainError(f"not a binary string: {s!r}")
        return cls(tuple(int(ch) for ch in s))

    @property
    def n(self) -> int:
        return len(self.bits)

    def bipolar(self) -> tuple[int, ...]:
        return tuple(2 * b - 1 for b in self.bits)

    def weight(self) -> int:
        return sum(self.bits)

    def index_sum(self) -> int:
        return sum(i * b for i, b in enumerate(self.bits, start=1))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class CodeParams:
    n: int
    order: Order

    @property
    def is_valid(self) -> bool:
        """True when a full-set code of this length and order is non-empty."""
        if self.n < 1:
            return False
        if self.order is Order.SECOND:
            return self.n % 4 == 0
        return self.n % 2 == 0


def is_dc2_balanced(w: Codeword) -> bool:
    n = w.n
    # both targets n/2 and n(n+1)/4 must be integers
    if n % 2 or (n * (n + 1)) % 4:
        return False
    return w.weight() == n // 2 and w.index_sum() == n * (n + 1) // 4


def complement(w: Codeword) -> Codeword:
    return Codeword(tuple(1 - b for b in w.bits))


def reverse(w: Codeword) -> Codeword:
    return Codeword(w.bits[::-1])


@dataclass(frozen=True)
class Autocorrelation:
    """Autocorrelation values for lags ``i = 1 .. n-1``.

    ``values[i - 1]`` holds the value at lag ``i``. Use :meth:`at` for
    1-based access.
    """

    n: int
    values: tuple[float, ...]
    method: Method

    def at(self, i: int) -> float:
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"lag {i} outside 1..{self.n - 1}")
        return self.values[i - 1]

    @property
    def lags(self) -> range:
        return range(1, self.n)

    def __len__(self) -> int:
        return len(self.values)


def make_autocorrelation(n: int, values: Iterable[float], method: Method | str) -> Autocorrelation:
    method = Method(method)
    vals = tuple(float(v) for v in values)
    if n < 2:
        raise DomainError(f"length n={n} too small for an autocorrelation")
    if len(vals) != n - 1:
        raise DomainError(f"expected {n - 1} values for n={n}, got {len(vals)}")
    bad = [i for i, v in enumerate(vals, start=1) if not math.isfinite(v)]
    if bad:
        raise DomainError(f"non-finite autocorrelation value at lag {bad[0]}")
    if method is Method.EXACT and any(abs(v) > 1.0 for v in vals):
        raise DomainError("exact autocorrelation values must lie in [-1, 1]")
    return Autocorrelation(n, vals, method)


def bipolar_autocorrelation_sums(words: Sequence[Codeword]) -> list[int]:
    """Integer sums ``sum_w sum_j x'_j x'_{j+i}`` for lags ``i = 1..n-1``."""
    if not words:
        return []
    n = words[0].n
    sums = [0] * (n - 1)
    for w in words:
        x = w.bipolar()
        for i in range(1, n):
            sums[i - 1] += sum(x[j] * x[j + i] for j in range(n - i))
    return sums
