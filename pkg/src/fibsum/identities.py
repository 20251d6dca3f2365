"""Auxiliary Fibonacci/Lucas product identities as executable data.

Each identity is a pair of side evaluators over a small parameter vector,
plus the index expressions that must stay non-negative.  The sweep draws
seeded random parameter tuples and checks both sides for exact equality.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable

from .sequences import fib as F, lucas as L

__all__ = [
    "IdentityId",
    "Identity",
    "IdentityParameterError",
    "IDENTITIES",
    "check_identity",
    "evaluate_identity",
    "sample_params",
    "SweepResult",
    "sweep_identities",
]


class IdentityParameterError(ValueError):
    """A derived index would be negative."""


class IdentityId(enum.Enum):
    FL_PRODUCT_PLUS = "8a"
    FL_PRODUCT_MINUS = "8b"
    DOUBLE_F_SUM = "9a"
    DOUBLE_F_DIFF = "9b"
    LL_PRODUCT = "10a"
    FF_PRODUCT = "10b"
    CROSS_SQUARES = "11"
    SHIFTED_FF = "12a"
    SHIFTED_LL = "12b"
    F_SQUARES = "13a"
    L_SQUARES = "13b"
    OFFSET_FF = "14a"
    OFFSET_FL = "14b"

    @classmethod
    def lookup(cls, label: str) -> "IdentityId":
        for member in cls:
            if member.value == label or member.name == label:
                return member
        raise KeyError(f"unknown identity {label!r}")


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class Identity:
    id: IdentityId
    params: tuple[str, ...]
    text: str
    lhs: Callable[..., int]
    rhs: Callable[..., int]
    # (expression, evaluator) pairs that must be >= 0
    indices: tuple[tuple[str, Callable[..., int]], ...] = field(default=())

    @property
    def arity(self) -> int:
        return len(self.params)


IDENTITIES: dict[IdentityId, Identity] = {
    ident.id: ident
    for ident in (
        Identity(IdentityId.FL_PRODUCT_PLUS, ("u", "v"),
                 "L_v F_u = F_{u+v} + (-1)^v F_{u-v}",
                 lambda u, v: L(v) * F(u),
                 lambda u, v: F(u + v) + _sgn(v) * F(u - v),
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.FL_PRODUCT_MINUS, ("u", "v"),
                 "F_v L_u = F_{u+v} - (-1)^v F_{u-v}",
                 lambda u, v: F(v) * L(u),
                 lambda u, v: F(u + v) - _sgn(v) * F(u - v),
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.DOUBLE_F_SUM, ("u", "v"),
                 "2 F_{u+v} = L_v F_u + L_u F_v",
                 lambda u, v: 2 * F(u + v),
                 lambda u, v: L(v) * F(u) + L(u) * F(v)),
        Identity(IdentityId.DOUBLE_F_DIFF, ("u", "v"),
                 "(-1)^v 2 F_{u-v} = F_u L_v - L_u F_v",
                 lambda u, v: _sgn(v) * 2 * F(u - v),
                 lambda u, v: F(u) * L(v) - L(u) * F(v),
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.LL_PRODUCT, ("u", "v"),
                 "L_v L_u = L_{u+v} + (-1)^v L_{u-v}",
                 lambda u, v: L(v) * L(u),
                 lambda u, v: L(u + v) + _sgn(v) * L(u - v),
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.FF_PRODUCT, ("u", "v"),
                 "5 F_v F_u = L_{u+v} - (-1)^v L_{u-v}",
                 lambda u, v: 5 * F(v) * F(u),
                 lambda u, v: L(u + v) - _sgn(v) * L(u - v),
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.CROSS_SQUARES, ("u", "v"),
                 "(-1)^(u-1) F_{v+u} F_{v-u} = F_u^2 F_{v+1} F_{v-1} - F_v^2 F_{u+1} F_{u-1}",
                 lambda u, v: _sgn(u - 1) * F(v + u) * F(v - u),
                 lambda u, v: F(u) ** 2 * F(v + 1) * F(v - 1) - F(v) ** 2 * F(u + 1) * F(u - 1),
                 (("v-u", lambda u, v: v - u), ("u-1", lambda u, v: u - 1))),
        Identity(IdentityId.SHIFTED_FF, ("t", "u", "v"),
                 "(-1)^t F_u F_v = F_{t+u} F_{t+v} - F_t F_{t+u+v}",
                 lambda t, u, v: _sgn(t) * F(u) * F(v),
                 lambda t, u, v: F(t + u) * F(t + v) - F(t) * F(t + u + v)),
        Identity(IdentityId.SHIFTED_LL, ("t", "u", "v"),
                 "(-1)^(t+1) 5 F_u F_v = L_{t+u} L_{t+v} - L_t L_{t+u+v}",
                 lambda t, u, v: _sgn(t + 1) * 5 * F(u) * F(v),
                 lambda t, u, v: L(t + u) * L(t + v) - L(t) * L(t + u + v)),
        Identity(IdentityId.F_SQUARES, ("u", "v"),
                 "F_{u-v} F_{u+v} = F_u^2 + (-1)^(u+v-1) F_v^2",
                 lambda u, v: F(u - v) * F(u + v),
                 lambda u, v: F(u) ** 2 + _sgn(u + v - 1) * F(v) ** 2,
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.L_SQUARES, ("u", "v"),
                 "5 F_{u-v} F_{u+v} = L_u^2 + (-1)^(u+v-1) L_v^2",
                 lambda u, v: 5 * F(u - v) * F(u + v),
                 lambda u, v: L(u) ** 2 + _sgn(u + v - 1) * L(v) ** 2,
                 (("u-v", lambda u, v: u - v),)),
        Identity(IdentityId.OFFSET_FF, ("u", "v", "p"),
                 "F_v F_{2u+v+p} = F_{u+v+p} F_{u+v} + (-1)^(v+1) F_{u+p} F_u",
                 lambda u, v, p: F(v) * F(2 * u + v + p),
                 lambda u, v, p: F(u + v + p) * F(u + v) + _sgn(v + 1) * F(u + p) * F(u)),
        Identity(IdentityId.OFFSET_FL, ("u", "v", "p"),
                 "F_v L_{2u+v+p} = L_{u+v+p} F_{u+v} + (-1)^(v+1) L_{u+p} F_u",
                 lambda u, v, p: F(v) * L(2 * u + v + p),
                 lambda u, v, p: L(u + v + p) * F(u + v) + _sgn(v + 1) * L(u + p) * F(u)),
    )
}


def _resolve(ident) -> Identity:
    if isinstance(ident, Identity):
        return ident
    if isinstance(ident, str):
        ident = IdentityId.lookup(ident)
    return IDENTITIES[ident]


def _validate(identity: Identity, params) -> tuple[int, ...]:
    params = tuple(params)
    if len(params) != identity.arity:
        raise IdentityParameterError(
            f"identity {identity.id.value} takes {identity.arity} parameters "
            f"({', '.join(identity.params)}), got {len(params)}")
    named = ", ".join(f"{k}={v}" for k, v in zip(identity.params, params))
    for name, value in zip(identity.params, params):
        if value < 0:
            raise IdentityParameterError(f"index {name} = {value} is negative ({named})")
    for expr, fn in identity.indices:
        value = fn(*params)
        if value < 0:
            raise IdentityParameterError(f"index {expr} = {value} is negative ({named})")
    return params


def evaluate_identity(ident, params) -> tuple[int, int]:
    """Both sides of the identity at ``params`` as exact integers."""
    identity = _resolve(ident)
    params = _validate(identity, params)
    return identity.lhs(*params), identity.rhs(*params)


def check_identity(ident, params) -> bool:
    lhs, rhs = evaluate_identity(ident, params)
    return lhs == rhs


def sample_params(identity: Identity, rng: random.Random, max_index: int) -> tuple[int, ...]:
    """Uniform draw from [0, max_index]^arity, rejecting tuples that underflow."""
    while True:
        params = tuple(rng.randint(0, max_index) for _ in identity.params)
        if all(fn(*params) >= 0 for _, fn in identity.indices):
            return params


@dataclass
class SweepResult:
    max_index: int
    trials: int
    seed: int
    # identity label -> number of trials run
    counts: dict[str, int] = field(default_factory=dict)
    # (label, params, lhs, rhs) for every disagreement
    failures: list[tuple[str, tuple[int, ...], int, int]] = field(default_factory=list)
    # last parameter tuple and sides checked per identity, for reporting
    last: dict[str, tuple[tuple[int, ...], int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "max_index": self.max_index,
            "trials": self.trials,
            "seed": self.seed,
            "counts": dict(self.counts),
            "failures": [
                {"identity": label, "params": list(params), "lhs": str(lhs), "rhs": str(rhs)}
                for label, params, lhs, rhs in self.failures
            ],
        }


def sweep_identities(max_index: int, trials: int, seed: int, ids=None) -> SweepResult:
    """Check every identity on ``trials`` seeded random parameter tuples.

    Each identity draws from its own generator seeded by ``(seed, label)``,
    so results do not depend on which other identities are swept.
    """
    if max_index < 4:
        raise ValueError("max_index must be at least 4")
    result = SweepResult(max_index, trials, seed)
    selected = [_resolve(i) for i in ids] if ids else list(IDENTITIES.values())
    for identity in selected:
        label = identity.id.value
        rng = random.Random(f"{seed}:{label}")
        for _ in range(trials):
            params = sample_params(identity, rng, max_index)
            lhs, rhs = identity.lhs(*params), identity.rhs(*params)
            if lhs != rhs:
                result.failures.append((label, params, lhs, rhs))
            result.last[label] = (params, lhs, rhs)
        result.counts[label] = trials
    return result
