"""Suite configuration: a flat ``key = value`` file with ``#`` comments."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .exact import parse_rational


class ConfigError(ValueError):
    def __init__(self, message, line=None, key=None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"field {key!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class SuiteConfig:
    families: tuple[str, ...] = ("all",)
    max_m: int = 2
    max_n: int = 2
    max_q: int = 2
    max_p: int = 1
    n_probe: int = 48
    threshold: Fraction = Fraction(1, 10 ** 15)
    seed: int = 1
    output: str = "-"
    # finite-identity grid
    finite_max: int = 3
    finite_max_p: int = 2
    max_N: int = 10
    # auxiliary identity sweep
    sweep_range: int = 2000
    sweep_trials: int = 2000


_INT_LIMITS = {
    "max_m": 1, "max_n": 1, "max_q": 1, "max_p": 0, "n_probe": 8, "seed": 0,
    "finite_max": 1, "finite_max_p": 0, "max_N": 1, "sweep_range": 4, "sweep_trials": 1,
}


def _convert(key: str, raw: str, line: int):
    if key == "families":
        items = tuple(part.strip() for part in raw.split(",") if part.strip())
        if not items:
            raise ConfigError("expected 'all' or a comma-separated list of id prefixes", line, key)
        return items
    if key == "threshold":
        try:
            value = parse_rational(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(str(exc), line, key) from None
        if value <= 0:
            raise ConfigError("threshold must be positive", line, key)
        return value
    if key == "output":
        if not raw:
            raise ConfigError("empty output path", line, key)
        return raw
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"expected an integer, got {raw!r}", line, key) from None
    if value < _INT_LIMITS[key]:
        raise ConfigError(f"must be at least {_INT_LIMITS[key]}", line, key)
    return value


KEYS = tuple(f.name for f in fields(SuiteConfig))


def parse_config(text: str) -> SuiteConfig:
    values = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key = value, got {line!r}", number)
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in KEYS:
            raise ConfigError(f"unknown key (known: {', '.join(KEYS)})", number, key)
        if key in values:
            raise ConfigError("duplicate key", number, key)
        values[key] = _convert(key, raw, number)
    return replace(SuiteConfig(), **values)


def load_config(path) -> SuiteConfig:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return parse_config(text)
