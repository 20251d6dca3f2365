"""Fibonacci and Lucas numbers, golden-ratio powers and ratio limits."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import QuadRat, SQRT5

__all__ = [
    "SequenceIndexError",
    "SeqCache",
    "default_cache",
    "fib",
    "lucas",
    "fib_naive",
    "phi_pow",
    "sqrt5_pow",
    "LimitRow",
    "LimitReport",
    "check_limits",
]


class SequenceIndexError(ValueError):
    """Negative (or otherwise unusable) sequence index."""


class SeqCache:
    """Memo of fast-doubling pairs ``n -> (F_n, F_{n+1})``.

    Safe to share between threads: a lookup either sees a complete pair or
    nothing, and the statistics are updated under the same lock.
    """

    def __init__(self):
        self._pairs: dict[int, tuple[int, int]] = {0: (0, 1)}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._pairs)

    def __contains__(self, n):
        return n in self._pairs

    def clear(self):
        with self._lock:
            self._pairs = {0: (0, 1)}
            self.hits = self.misses = 0

    def pair(self, n: int) -> tuple[int, int]:
        if n < 0:
            raise SequenceIndexError(f"negative index {n}")
        with self._lock:
            found = self._pairs.get(n)
            if found is not None:
                self.hits += 1
                return found
            self.misses += 1
        f, g = self.pair(n >> 1)
        # F_2k = F_k (2 F_{k+1} - F_k),  F_{2k+1} = F_k^2 + F_{k+1}^2
        even = f * (2 * g - f)
        odd = f * f + g * g
        result = (odd, even + odd) if n & 1 else (even, odd)
        with self._lock:
            self._pairs[n] = result
        return result


default_cache = SeqCache()


def _index(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise SequenceIndexError(f"index must be an int, got {n!r}")
    if n < 0:
        raise SequenceIndexError(f"negative index {n} (only n >= 0 is supported)")
    return n


def fib(n: int, cache: SeqCache | None = None) -> int:
    return (cache or default_cache).pair(_index(n))[0]


def lucas(n: int, cache: SeqCache | None = None) -> int:
    f, g = (cache or default_cache).pair(_index(n))
    return 2 * g - f


def fib_naive(n: int) -> int:
    a, b = 0, 1
    for _ in range(_index(n)):
        a, b = b, a + b
    return a


def phi_pow(n: int) -> QuadRat:
    """phi**n as (L_n + F_n sqrt5)/2."""
    n = _index(n)
    f, g = default_cache.pair(n)
    return QuadRat(2 * g - f, f, 2)


def sqrt5_pow(m: int) -> QuadRat:
    m = _index(m)
    half, odd = divmod(m, 2)
    return QuadRat(0, 5 ** half, 1) if odd else QuadRat(5 ** half, 0, 1)


def _phi_power_signed(e: int) -> QuadRat:
    return phi_pow(e) if e >= 0 else phi_pow(-e).inverse()


@dataclass(frozen=True)
class LimitRow:
    N: int
    kind: str          # "F/F", "L/L" or "F/L"
    ratio: Fraction
    limit: QuadRat
    error: QuadRat     # |ratio - limit|, exact


@dataclass
class LimitReport:
    m: int
    n: int
    rows: list[LimitRow] = field(default_factory=list)

    def errors(self, kind: str) -> list[QuadRat]:
        return [r.error for r in self.rows if r.kind == kind]

    @property
    def monotone(self) -> bool:
        for kind in ("F/F", "L/L", "F/L"):
            errs = self.errors(kind)
            if all(not e for e in errs):
                continue
            if any(later >= earlier for earlier, later in zip(errs, errs[1:])):
                return False
        return True


def check_limits(m: int, n: int, N_list) -> LimitReport:
    """Exact distances of F/F, L/L and F/L index-shifted ratios from their limits.

    ``N_list`` must be strictly increasing; F-denominators need ``N + n >= 1``.
    """
    N_list = list(N_list)
    if any(b <= a for a, b in zip(N_list, N_list[1:])):
        raise ValueError(f"N_list must be strictly increasing: {N_list}")
    target = _phi_power_signed(m - n)
    report = LimitReport(m, n)
    for N in N_list:
        top, bottom = N + m, N + n
        if top < 0 or bottom < 1:
            raise SequenceIndexError(f"indices N+m={top}, N+n={bottom} out of range")
        for kind, num, den, lim in (
            ("F/F", fib(top), fib(bottom), target),
            ("L/L", lucas(top), lucas(bottom), target),
            ("F/L", fib(top), lucas(bottom), target / SQRT5),
        ):
            ratio = Fraction(num, den)
            err = abs(QuadRat.coerce(ratio) - lim)
            report.rows.append(LimitRow(N, kind, ratio, lim, err))
    return report
