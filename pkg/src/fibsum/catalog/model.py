"""Data types for catalog entries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .dsl import FactorBlock, LinearExpr, parse_block, parse_expr

SIGN_MODES = ("none", "alt-k", "alt-nk")
INNER_SIGNS = ("none", "alt-k", "neg-k")
TAILS = ("0", "1", "sqrt5^m", "sqrt5^-m", "phi^mnp", "5^m", "5^-m")


@dataclass(frozen=True)
class SumSpec:
    """One summand family: sign * prod(numerator) / prod(denominator)."""

    sign: str
    numerator: tuple[FactorBlock, ...]
    denominator: tuple[FactorBlock, ...]
    params: tuple[str, ...]

    def __post_init__(self):
        if self.sign not in SIGN_MODES:
            raise ValueError(f"unknown sign mode {self.sign!r}")
        if not self.denominator:
            raise ValueError("a summand needs at least one denominator factor")

    def describe(self) -> str:
        sign = {"none": "", "alt-k": "(-1)^(k-1) ", "alt-nk": "(-1)^(nk-1) "}[self.sign]
        num = " * ".join(map(str, self.numerator)) or "1"
        den = " * ".join(map(str, self.denominator))
        return f"{sign}[{num}] / [{den}]"


@dataclass(frozen=True)
class ClosedFormSpec:
    """coefficient / prod(scale_den) * (sum_{k=1}^{upper} s(k) * P(k)  -  q * tail).

    ``P(k)`` is ``prod(inner_num) / prod(inner_den)``; ``s(k)`` is 1,
    (-1)^(k-1) or (-1)^k.
    """

    coefficient: Fraction
    scale_den: tuple[FactorBlock, ...]
    inner_sign: str
    upper: LinearExpr
    inner_num: tuple[FactorBlock, ...]
    inner_den: tuple[FactorBlock, ...]
    tail: str = "0"

    def __post_init__(self):
        if self.inner_sign not in INNER_SIGNS:
            raise ValueError(f"unknown inner sign {self.inner_sign!r}")
        if self.tail not in TAILS:
            raise ValueError(f"unknown tail constant {self.tail!r}")

    def describe(self) -> str:
        scale = f"{self.coefficient}"
        if self.scale_den:
            scale += " / (" + " * ".join(map(str, self.scale_den)) + ")"
        sign = {"none": "", "alt-k": "(-1)^(k-1) ", "neg-k": "(-1)^k "}[self.inner_sign]
        num = " * ".join(map(str, self.inner_num)) or "1"
        den = " * ".join(map(str, self.inner_den)) or "1"
        text = f"{scale} * ( sum_{{k=1}}^{{{self.upper}}} {sign}[{num}] / [{den}]"
        if self.tail != "0":
            text += f" - q * {self.tail}"
        return text + " )"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    label: str
    hypothesis: str
    predicate: Callable[[int, int, int, int], bool]
    lhs: SumSpec
    rhs: ClosedFormSpec
    lemma: str = "plain"                 # "plain" or "alternating"
    p_min: int | None = None             # None: p is not a parameter
    parent: tuple[str, int] | None = None  # (parent id, multiplier applied to m)
    convergence: str = "geometric"       # or "mean" (Cesaro-type)
    fixed: bool = False                  # no free parameters
    notes: str = ""

    @property
    def family(self) -> str:
        return self.id[0]

    @property
    def uses_p(self) -> bool:
        return self.p_min is not None


def make_entry(id, label, hypothesis, predicate, *, sign="none", num=(), den=(),
               coeff=Fraction(1), scale=(), inner_sign="none", upper="q",
               inner_num=(), inner_den=(), tail="0", lemma="plain", p_min=None,
               parent=None, convergence="geometric", fixed=False, notes="") -> CatalogEntry:
    params = () if fixed else (("m", "n", "q", "p") if p_min is not None else ("m", "n", "q"))
    lhs = SumSpec(sign, tuple(map(parse_block, num)), tuple(map(parse_block, den)), params)
    rhs = ClosedFormSpec(Fraction(coeff), tuple(map(parse_block, scale)), inner_sign,
                         parse_expr(upper), tuple(map(parse_block, inner_num)),
                         tuple(map(parse_block, inner_den)), tail)
    if lemma not in ("plain", "alternating"):
        raise ValueError(f"unknown lemma kind {lemma!r}")
    return CatalogEntry(id, label, hypothesis, predicate, lhs, rhs, lemma, p_min,
                        parent, convergence, fixed, notes)
