"""Catalog of Fibonacci/Lucas reciprocal-sum theorems and their evaluation.

The public functions take an entry (or its id) and the parameters
``m, n, q, p``.  Summands and partial sums are exact fractions; closed
forms live in Q(sqrt5).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..exact import QuadRat
from ..sequences import phi_pow, sqrt5_pow
from .dsl import DSLError, FactorBlock, blocks_product, parse_block, parse_expr
from .entries import ENTRIES
from .model import CatalogEntry, ClosedFormSpec, SumSpec

__all__ = [
    "CatalogEntry",
    "ClosedFormSpec",
    "SumSpec",
    "FactorBlock",
    "DSLError",
    "ParamError",
    "parse_block",
    "parse_expr",
    "catalog_list",
    "get_entry",
    "validate_params",
    "check_params",
    "term_at",
    "partial_sums",
    "partial_sum",
    "inner_sum",
    "closed_form",
    "finite_rhs",
    "decay_degree",
    "tail_constant",
    "parent_params",
]


class ParamError(ValueError):
    """Parameters violate an entry's hypothesis."""


_BY_ID = {e.id: e for e in ENTRIES}
assert len(_BY_ID) == len(ENTRIES), "duplicate catalog ids"


def catalog_list(prefix: str | None = None) -> list[CatalogEntry]:
    """All entries in catalog order, optionally those whose id starts with ``prefix``."""
    if not prefix or prefix == "all":
        return list(ENTRIES)
    return [e for e in ENTRIES if e.id.startswith(prefix)]


def get_entry(entry) -> CatalogEntry:
    if isinstance(entry, CatalogEntry):
        return entry
    try:
        return _BY_ID[entry]
    except KeyError:
        raise KeyError(f"unknown catalog entry {entry!r}") from None


def _problem(entry: CatalogEntry, m, n, q, p) -> str | None:
    if entry.fixed:
        return None
    for name, value in (("m", m), ("n", n), ("q", q)):
        if not isinstance(value, int) or value < 1:
            return f"{name} must be a positive integer (got {value!r})"
    if entry.uses_p:
        if not isinstance(p, int) or p < entry.p_min:
            kind = "positive" if entry.p_min >= 1 else "non-negative"
            return f"p must be a {kind} integer (got {p!r})"
    if not entry.predicate(m, n, q, p):
        return f"hypothesis not satisfied: {entry.hypothesis} (m={m}, n={n}, q={q})"
    return None


def validate_params(entry, m, n, q, p=0) -> bool:
    return _problem(get_entry(entry), m, n, q, p) is None


def check_params(entry, m, n, q, p=0) -> CatalogEntry:
    entry = get_entry(entry)
    problem = _problem(entry, m, n, q, p)
    if problem:
        raise ParamError(f"{entry.id}: {problem}")
    return entry


def _env(entry: CatalogEntry, m, n, q, p) -> dict:
    if entry.fixed:
        return {"m": 1, "n": 1, "q": 1, "p": 0}
    return {"m": m, "n": n, "q": q, "p": p if entry.uses_p else 0}


def _summand(entry: CatalogEntry, env: dict, k: int) -> Fraction:
    env["k"] = k
    spec = entry.lhs
    value = Fraction(blocks_product(spec.numerator, env), blocks_product(spec.denominator, env))
    if spec.sign == "alt-k" and k % 2 == 0:
        value = -value
    elif spec.sign == "alt-nk" and (env["n"] * k) % 2 == 0:
        value = -value
    return value


def term_at(entry, m, n, q, p=0, k=1) -> Fraction:
    """The k-th summand, sign included."""
    entry = check_params(entry, m, n, q, p)
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _summand(entry, _env(entry, m, n, q, p), k)


def partial_sums(entry, m, n, q, p=0, at: Iterable[int] = ()) -> dict[int, Fraction]:
    """Exact partial sums S_N for every N in ``at``, from a single pass over k."""
    entry = check_params(entry, m, n, q, p)
    wanted = sorted(set(at))
    if wanted and wanted[0] < 0:
        raise ValueError("partial sum lengths must be non-negative")
    env = _env(entry, m, n, q, p)
    out = {}
    total = Fraction(0)
    k = 0
    for N in wanted:
        while k < N:
            k += 1
            total += _summand(entry, env, k)
        out[N] = total
    return out


def partial_sum(entry, m, n, q, p=0, N=1) -> Fraction:
    return partial_sums(entry, m, n, q, p, [N])[N]


def _scale(entry: CatalogEntry, env: dict) -> Fraction:
    spec = entry.rhs
    return spec.coefficient / blocks_product(spec.scale_den, env)


def inner_sum(entry, m, n, q, p=0, shift=0) -> Fraction:
    """sum_{k=1}^{upper} s(k) P(k + shift): the finite sum of the closed form.

    The sign s is taken at the unshifted k; shifting k by N gives the
    boundary term of the telescoped partial sum.
    """
    entry = check_params(entry, m, n, q, p)
    env = _env(entry, m, n, q, p)
    spec = entry.rhs
    total = Fraction(0)
    for k in range(1, spec.upper(env) + 1):
        env["k"] = k + shift
        term = Fraction(blocks_product(spec.inner_num, env), blocks_product(spec.inner_den, env))
        if spec.inner_sign == "alt-k" and k % 2 == 0:
            term = -term
        elif spec.inner_sign == "neg-k" and k % 2 == 1:
            term = -term
        total += term
    return total


def tail_constant(entry, m, n, q, p=0) -> QuadRat:
    """The limit f_inf^m subtracted q times in the closed form."""
    entry = get_entry(entry)
    env = _env(entry, m, n, q, p)
    m = env["m"]
    kind = entry.rhs.tail
    if kind == "0":
        return QuadRat(0)
    if kind == "1":
        return QuadRat(1)
    if kind == "sqrt5^m":
        return sqrt5_pow(m)
    if kind == "sqrt5^-m":
        return sqrt5_pow(m).inverse()
    if kind == "phi^mnp":
        return phi_pow(m * env["n"] * env["p"])
    if kind == "5^m":
        return QuadRat(5 ** m)
    if kind == "5^-m":
        return QuadRat(1, 0, 5 ** m)
    raise ValueError(f"unknown tail constant {kind!r}")


def closed_form(entry, m, n, q, p=0) -> QuadRat:
    """Exact right-hand side of the infinite sum."""
    entry = check_params(entry, m, n, q, p)
    env = _env(entry, m, n, q, p)
    value = QuadRat.coerce(inner_sum(entry, m, n, q, p))
    if entry.rhs.tail != "0":
        value = value - env["q"] * tail_constant(entry, m, n, q, p)
    return value * QuadRat.coerce(_scale(entry, env))


def finite_rhs(entry, m, n, q, p=0, N=1) -> Fraction:
    """Telescoped value of S_N from the product lemma (plain or alternating)."""
    entry = check_params(entry, m, n, q, p)
    if N < 1:
        raise ValueError("N must be a positive integer")
    env = _env(entry, m, n, q, p)
    head = inner_sum(entry, m, n, q, p)
    boundary = inner_sum(entry, m, n, q, p, shift=N)
    if entry.lemma == "plain":
        body = head - boundary
    else:
        body = head + (boundary if N % 2 else -boundary)
    return _scale(entry, env) * body


def decay_degree(entry, m, n, q, p=0) -> int:
    """Growth in k of denominator minus numerator, in powers of phi per unit k.

    Summands shrink roughly like phi^(-degree * k); zero means they do not
    shrink at all.
    """
    entry = get_entry(entry)
    env = _env(entry, m, n, q, p)
    den = sum(b.k_degree(env) for b in entry.lhs.denominator)
    num = sum(b.k_degree(env) for b in entry.lhs.numerator)
    return den - num


def parent_params(entry, m, n, q, p=0):
    """(parent entry, its parameters) for corollaries, else None."""
    entry = get_entry(entry)
    if entry.parent is None:
        return None
    parent_id, factor = entry.parent
    return get_entry(parent_id), (factor * m, n, q, p)


def probe_factor(entry, m, n, q, p=0) -> int:
    """How many times longer than nominal a partial sum must run for slow families."""
    degree = decay_degree(entry, m, n, q, p)
    if degree <= 0:
        return 1
    return max(1, math.ceil(2 / degree))
