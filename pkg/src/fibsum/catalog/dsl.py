"""Factor-list mini-format for summands and closed forms.

A factor block is written as text, for example::

    F[nk+jnq]^2 for j=0..2m except m
    L[2nk+mnq+np]
    F[mnq]

The bracketed index is a linear combination of monomials over the letters
``k j m n q p`` (``2jnq`` means 2*j*n*q).  The optional ``for`` clause runs
``j`` over an inclusive range whose bounds are again linear expressions; an
empty range contributes the empty product 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Mapping

from ..sequences import fib, lucas

__all__ = [
    "DSLError",
    "LinearExpr",
    "FactorBlock",
    "parse_expr",
    "parse_block",
    "block_product",
    "blocks_product",
]

VARIABLES = "kjmnqp"


class DSLError(ValueError):
    pass


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)([a-z]*)")


@dataclass(frozen=True)
class LinearExpr:
    """Sum of integer-weighted monomials, e.g. ((1, 'nk'), (2, 'jnq'), (3, ''))."""

    terms: tuple[tuple[int, str], ...]
    text: str = ""

    def __call__(self, env: Mapping[str, int]) -> int:
        total = 0
        for coeff, letters in self.terms:
            value = coeff
            for ch in letters:
                value *= env[ch]
            total += value
        return total

    def __str__(self):
        return self.text or "0"

    def k_coefficient(self, env: Mapping[str, int]) -> int:
        """Coefficient of k once every other letter is bound."""
        total = 0
        for coeff, letters in self.terms:
            if "k" not in letters:
                continue
            value = coeff
            for ch in letters.replace("k", "", 1):
                value *= env[ch]
            total += value
        return total


def parse_expr(text: str) -> LinearExpr:
    source = text.replace(" ", "")
    if not source:
        raise DSLError("empty index expression")
    terms = []
    pos = 0
    while pos < len(source):
        match = _TERM_RE.match(source, pos)
        sign, digits, letters = match.groups()
        if match.end() == pos or not (digits or letters):
            raise DSLError(f"cannot parse index expression {text!r} at position {pos}")
        if pos > 0 and not sign:
            raise DSLError(f"missing operator in {text!r} at position {pos}")
        bad = set(letters) - set(VARIABLES)
        if bad:
            raise DSLError(f"unknown symbol(s) {''.join(sorted(bad))} in {text!r}")
        coeff = int(digits) if digits else 1
        terms.append((-coeff if sign == "-" else coeff, letters))
        pos = match.end()
    return LinearExpr(tuple(terms), source)


_BLOCK_RE = re.compile(
    r"^\s*(?P<kind>[FL])\[(?P<index>[^\]]+)\]"
    r"(?:\^(?P<power>\d+))?"
    r"(?:\s+for\s+j\s*=\s*(?P<lo>[^.\s]+)\s*\.\.\s*(?P<hi>\S+)"
    r"(?:\s+except\s+(?P<skip>\S+))?)?\s*$"
)


@dataclass(frozen=True)
class FactorBlock:
    kind: str                       # "F" or "L"
    index: LinearExpr
    power: int = 1
    lo: LinearExpr | None = None    # None means a single factor (no j loop)
    hi: LinearExpr | None = None
    skip: LinearExpr | None = None
    text: str = ""

    def __str__(self):
        return self.text

    def j_values(self, env: Mapping[str, int]) -> list[int]:
        if self.lo is None:
            return [0]
        skip = self.skip(env) if self.skip is not None else None
        return [j for j in range(self.lo(env), self.hi(env) + 1) if j != skip]

    def indices(self, env: Mapping[str, int]) -> list[int]:
        scope = dict(env)
        out = []
        for j in self.j_values(env):
            scope["j"] = j
            out.append(self.index(scope))
        return out

    def k_degree(self, env: Mapping[str, int]) -> int:
        """Total growth rate in k, counted in powers of phi per unit k."""
        scope = dict(env)
        total = 0
        for j in self.j_values(env):
            scope["j"] = j
            total += self.index.k_coefficient(scope) * self.power
        return total


def parse_block(text: str) -> FactorBlock:
    match = _BLOCK_RE.match(text)
    if not match:
        raise DSLError(f"cannot parse factor block {text!r}")
    power = int(match.group("power") or 1)
    if power < 1:
        raise DSLError(f"power must be positive in {text!r}")
    lo = hi = skip = None
    if match.group("lo") is not None:
        lo, hi = parse_expr(match.group("lo")), parse_expr(match.group("hi"))
        if match.group("skip") is not None:
            skip = parse_expr(match.group("skip"))
    return FactorBlock(match.group("kind"), parse_expr(match.group("index")),
                       power, lo, hi, skip, text.strip())


def _seq(kind: str):
    return fib if kind == "F" else lucas


def block_product(block: FactorBlock, env: Mapping[str, int]) -> int:
    seq = _seq(block.kind)
    out = 1
    for idx in block.indices(env):
        out *= seq(idx) ** block.power
    return out


def blocks_product(blocks, env: Mapping[str, int]) -> int:
    return reduce(lambda acc, b: acc * block_product(b, env), blocks, 1)
