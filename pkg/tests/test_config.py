from fractions import Fraction

import pytest

from fibsum.config import ConfigError, SuiteConfig, load_config, parse_config


def test_defaults_when_empty():
    assert parse_config("# nothing here\n\n") == SuiteConfig()


def test_parse_values():
    cfg = parse_config("""
        families = A, J1   # two prefixes
        max_m = 3
        threshold = 1/1000000
        seed = 42
        output = reports.jsonl
    """)
    assert cfg.families == ("A", "J1")
    assert cfg.max_m == 3
    assert cfg.threshold == Fraction(1, 10 ** 6)
    assert cfg.seed == 42
    assert cfg.output == "reports.jsonl"


@pytest.mark.parametrize("text, line, key", [
    ("max_m = two", 1, "max_m"),
    ("\nn_probe = 3", 2, "n_probe"),
    ("threshold = -1/2", 1, "threshold"),
    ("threshold = 1/0", 1, "threshold"),
    ("colour = red", 1, "colour"),
    ("seed = 1\nseed = 2", 2, "seed"),
    ("families = ,", 1, "families"),
])
def test_errors_carry_location(text, line, key):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == line and info.value.key == key
    assert f"line {line}" in str(info.value)


def test_missing_equals_sign():
    with pytest.raises(ConfigError) as info:
        parse_config("max_m 3")
    assert info.value.line == 1


def test_load_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.cfg")
