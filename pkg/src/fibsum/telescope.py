"""Generic telescoping identities over Q(sqrt5)-valued sequences.

All functions return both sides of an identity so callers can compare
them; nothing here assumes the identity holds.  Summation always runs in
ascending k.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .exact import QuadRat

__all__ = [
    "SeqFn",
    "Variant",
    "TelescopeCase",
    "LemmaMode",
    "PreconditionError",
    "telescope_finite",
    "telescope_finite_alt",
    "telescope",
    "lemma_product_finite",
    "lemma_product_infinite",
    "InfiniteLemmaResult",
]


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SeqFn:
    """A sequence k -> QuadRat with a human-readable label."""

    evaluator: Callable[[int], object]
    description: str = "f"

    def __call__(self, k: int) -> QuadRat:
        return QuadRat.coerce(self.evaluator(k))


class Variant(enum.Enum):
    PLAIN = "plain"
    ALTERNATING = "alternating"
    INFINITE_PLAIN = "infinite-plain"
    INFINITE_ALTERNATING = "infinite-alternating"


@dataclass(frozen=True)
class TelescopeCase:
    variant: Variant
    q: int
    N: int | None = None      # None stands for the infinite forms

    def __post_init__(self):
        if self.q < 1:
            raise PreconditionError("q must be a positive integer")
        infinite = self.variant in (Variant.INFINITE_PLAIN, Variant.INFINITE_ALTERNATING)
        if infinite != (self.N is None):
            raise PreconditionError(f"{self.variant.value} case with N={self.N}")
        if self.variant is Variant.PLAIN and self.N < self.q:
            raise PreconditionError(f"plain telescoping needs N >= q (N={self.N}, q={self.q})")

    @property
    def shift_sign(self) -> int:
        """Sign in front of f(k+q): -1 for q even, +1 for q odd (alternating forms)."""
        return -1 if self.q % 2 == 0 else 1


def _qsum(values) -> QuadRat:
    total = QuadRat(0)
    for v in values:
        total = total + v
    return total


def _alt(k: int) -> int:
    """(-1)^(k-1)"""
    return 1 if k % 2 else -1


def telescope_finite(f: SeqFn, q: int, N: int) -> tuple[QuadRat, QuadRat]:
    """sum_{k<=N} [f(k) - f(k+q)]  versus  sum_{k<=q} f(k) - sum_{k<=q} f(k+N)."""
    TelescopeCase(Variant.PLAIN, q, N)
    lhs = _qsum(f(k) - f(k + q) for k in range(1, N + 1))
    rhs = _qsum(f(k) for k in range(1, q + 1)) - _qsum(f(k + N) for k in range(1, q + 1))
    return lhs, rhs


def telescope_finite_alt(f: SeqFn, q: int, N: int) -> tuple[QuadRat, QuadRat]:
    """Alternating form: sum (-1)^(k-1) [f(k) + (-1)^(q-1) f(k+q)]."""
    if q < 1 or N < 1:
        raise PreconditionError("q and N must be positive")
    shift = _alt(q)
    lhs = _qsum(_alt(k) * (f(k) + shift * f(k + q)) for k in range(1, N + 1))
    head = _qsum(_alt(k) * f(k) for k in range(1, q + 1))
    tail = _qsum(_alt(k) * f(k + N) for k in range(1, q + 1))
    return lhs, head + _alt(N) * tail


def telescope(case: TelescopeCase, f: SeqFn, f_limit=None):
    """Dispatch on a :class:`TelescopeCase`.

    Finite variants return ``(lhs, rhs)``; infinite variants return the
    closed-form value, which needs ``f_limit`` for the plain form.
    """
    if case.variant is Variant.PLAIN:
        return telescope_finite(f, case.q, case.N)
    if case.variant is Variant.ALTERNATING:
        return telescope_finite_alt(f, case.q, case.N)
    head = range(1, case.q + 1)
    if case.variant is Variant.INFINITE_PLAIN:
        if f_limit is None:
            raise PreconditionError("the plain infinite form needs the limit of f")
        return _qsum(f(k) for k in head) - case.q * QuadRat.coerce(f_limit)
    return _qsum(_alt(k) * f(k) for k in head)


class LemmaMode(enum.Enum):
    PLAIN = "plain"
    ALT_Q_EVEN = "alt-q-even"
    ALT_Q_ODD = "alt-q-odd"
    ALTERNATING = "alternating"   # infinite form only; sign follows q


def _block(f: SeqFn, base: int, step: int, lo: int, hi: int) -> QuadRat:
    """prod_{j=lo}^{hi} f(base + j*step); empty product is 1."""
    out = QuadRat(1)
    for j in range(lo, hi + 1):
        out = out * f(base + j * step)
    return out


def _lemma_terms(f: SeqFn, m: int, n: int, q: int, k: int, sign: int) -> QuadRat:
    step = n * q
    inner = _block(f, n * k, step, 1, m - 1)
    return (f(n * k) + sign * f(n * k + m * step)) * inner


def _check_positive(**values):
    for name, value in values.items():
        if not isinstance(value, int) or value < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {value!r}")


def lemma_product_finite(f: SeqFn, m: int, n: int, q: int, N: int,
                         mode: LemmaMode | str = LemmaMode.PLAIN) -> tuple[QuadRat, QuadRat]:
    """Both sides of the finite product-telescoping lemma in the given mode."""
    mode = LemmaMode(mode)
    _check_positive(m=m, n=n, q=q, N=N)
    if mode is LemmaMode.ALT_Q_EVEN and q % 2:
        raise PreconditionError(f"mode alt-q-even needs q even, got q={q}")
    if mode is LemmaMode.ALT_Q_ODD and q % 2 == 0:
        raise PreconditionError(f"mode alt-q-odd needs q odd, got q={q}")
    if mode is LemmaMode.ALTERNATING:
        raise PreconditionError("finite lemma needs an explicit parity mode")
    step = n * q
    sign = 1 if mode is LemmaMode.ALT_Q_ODD else -1
    ks = range(1, q + 1)
    head_terms = [_block(f, n * k, step, 0, m - 1) for k in ks]
    tail_terms = [_block(f, n * k + n * N, step, 0, m - 1) for k in ks]
    if mode is LemmaMode.PLAIN:
        lhs = _qsum(_lemma_terms(f, m, n, q, k, sign) for k in range(1, N + 1))
        return lhs, _qsum(head_terms) - _qsum(tail_terms)
    lhs = _qsum(_alt(k) * _lemma_terms(f, m, n, q, k, sign) for k in range(1, N + 1))
    head = _qsum(_alt(k) * t for k, t in zip(ks, head_terms))
    tail = _qsum(_alt(k) * t for k, t in zip(ks, tail_terms))
    return lhs, head + _alt(N) * tail


@dataclass(frozen=True)
class InfiniteLemmaResult:
    series_partial: QuadRat
    closed_form: QuadRat
    tail_bound: QuadRat

    def __iter__(self):
        return iter((self.series_partial, self.closed_form, self.tail_bound))


def lemma_product_infinite(f: SeqFn, f_limit, m: int, n: int, q: int,
                           mode: LemmaMode | str, N_probe: int) -> InfiniteLemmaResult:
    """Partial sum, closed form and exact gap for the infinite lemma.

    In plain mode the closed form subtracts ``q * f_limit**m``.  The
    alternating form takes the minus sign for even q and the plus sign for
    odd q; with odd q the partial sums only settle when ``f_limit`` is 0.
    """
    mode = LemmaMode(mode)
    _check_positive(m=m, n=n, q=q, N_probe=N_probe)
    if N_probe < q:
        raise PreconditionError(f"N_probe must be >= q (N_probe={N_probe}, q={q})")
    step = n * q
    ks = range(1, q + 1)
    if mode is LemmaMode.PLAIN:
        partial = _qsum(_lemma_terms(f, m, n, q, k, -1) for k in range(1, N_probe + 1))
        closed = _qsum(_block(f, n * k, step, 0, m - 1) for k in ks) \
            - q * QuadRat.coerce(f_limit) ** m
    else:
        if mode is LemmaMode.ALT_Q_EVEN and q % 2:
            raise PreconditionError(f"mode alt-q-even needs q even, got q={q}")
        if mode is LemmaMode.ALT_Q_ODD and q % 2 == 0:
            raise PreconditionError(f"mode alt-q-odd needs q odd, got q={q}")
        sign = 1 if q % 2 else -1
        partial = _qsum(_alt(k) * _lemma_terms(f, m, n, q, k, sign)
                        for k in range(1, N_probe + 1))
        closed = _qsum(_alt(k) * _block(f, n * k, step, 0, m - 1) for k in ks)
    return InfiniteLemmaResult(partial, closed, abs(partial - closed))
