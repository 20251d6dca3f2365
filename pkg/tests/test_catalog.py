from fractions import Fraction
import math

import pytest
from hypothesis import given, settings, strategies as st

from fibsum import catalog
from fibsum.catalog import DSLError, ParamError, parse_block, parse_expr
from fibsum.exact import PHI, SQRT5, QuadRat

from oracles import naive_fib as F, naive_lucas as L


def prod(xs):
    return math.prod(xs)


def sgn(e):
    return -1 if e % 2 else 1


# Summands written out by hand, independent of the block language.
NAIVE_TERMS = {
    "A1": lambda m, n, q, p, k: sgn(n * k - 1) * Fraction(
        prod(L(n * k + j * n * q) for j in range(1, m)),
        prod(F(n * k + j * n * q) for j in range(m + 1))),
    "A3": lambda m, n, q, p, k: Fraction(
        1, prod(F(n * k + j * n * q) for j in range(2 * m + 1) if j != m)),
    "A6": lambda m, n, q, p, k: sgn(n * k - 1) * Fraction(
        prod(F(n * k + j * n * q + n * p) for j in range(1, m)),
        prod(F(n * k + j * n * q) for j in range(m + 1))),
    "B3": lambda m, n, q, p, k: Fraction(
        1, prod(L(n * k + j * n * q) for j in range(2 * m + 1) if j != m)),
    "C2": lambda m, n, q, p, k: sgn(k - 1) * Fraction(
        L(n * k + m * n * q), prod(F(n * k + j * n * q) for j in range(2 * m + 1))),
    "E1a": lambda m, n, q, p, k: sgn(k - 1) * Fraction(
        F(n * k + m * n * q), prod(F(n * k + 2 * j * n * q) for j in range(m + 1))),
    "H2": lambda m, n, q, p, k: sgn(k - 1) * Fraction(
        F(2 * n * k + m * n * q), prod(F(2 * n * k + 2 * j * n * q) for j in range(m + 1))),
    "J1": lambda m, n, q, p, k: Fraction(
        F(2 * n * k + m * n * q), prod(F(n * k + j * n * q) ** 2 for j in range(m + 1))),
    "K1c": lambda m, n, q, p, k: Fraction(
        F(n * k + m * n * q),
        L(n * k + m * n * q) * prod(L(n * k + j * n * q) ** 2
                                    for j in range(2 * m + 1) if j != m)),
    "L1": lambda m, n, q, p, k: Fraction(
        F(2 * n * k + m * n * q + n * p),
        prod(F(n * k + j * n * q) * F(n * k + j * n * q + n * p) for j in range(m + 1))),
    "N1": lambda m, n, q, p, k: sgn(n * k - 1) * Fraction(
        F(2 * n * k + m * n * q + 2) * prod(F(n * k + j * n * q + 1) ** 2 for j in range(1, m)),
        prod(F(n * k + j * n * q) * F(n * k + j * n * q + 2) for j in range(m + 1))),
    "N3": lambda m, n, q, p, k: Fraction(
        F(2 * k + 3), F(k) ** 4 * F(k + 1) ** 3 * F(k + 2) ** 3 * F(k + 3) ** 4),
    "N4L": lambda m, n, q, p, k: Fraction(
        L(3 * k + 1) * L(3 * k + 2) * F(6 * k + 3), L(3 * k) ** 4 * L(3 * k + 3) ** 4),
}

grid = [(m, n, q, p) for m in range(1, 4) for n in range(1, 4) for q in range(1, 4)
        for p in range(0, 3)]


def test_catalog_size_and_order():
    ids = [e.id for e in catalog.catalog_list()]
    assert len(ids) == 58 == len(set(ids))
    assert ids[0] == "A1" and ids[-1] == "N4L"
    assert [e.id for e in catalog.catalog_list("J1")] == ["J1", "J1c"]
    assert catalog.catalog_list("Z") == []


def test_unknown_entry():
    with pytest.raises(KeyError):
        catalog.get_entry("A99")


@pytest.mark.parametrize("entry_id", sorted(NAIVE_TERMS))
def test_summands_match_naive_oracle(entry_id):
    entry = catalog.get_entry(entry_id)
    naive = NAIVE_TERMS[entry_id]
    checked = 0
    for m, n, q, p in grid:
        if not catalog.validate_params(entry, m, n, q, p):
            continue
        for k in range(1, 6):
            assert catalog.term_at(entry, m, n, q, p, k) == naive(m, n, q, p, k)
        checked += 1
    assert checked


@pytest.mark.parametrize("entry", catalog.catalog_list(), ids=lambda e: e.id)
def test_finite_telescoping(entry):
    for m, n, q, p in grid[::5]:
        if not catalog.validate_params(entry, m, n, q, p):
            continue
        sums = catalog.partial_sums(entry, m, n, q, p, range(1, 8))
        for N, value in sums.items():
            assert value == catalog.finite_rhs(entry, m, n, q, p, N)


@pytest.mark.parametrize("entry", catalog.catalog_list(), ids=lambda e: e.id)
def test_rejects_invalid_parameters(entry):
    if entry.fixed:
        assert catalog.validate_params(entry, None, None, None)
        return
    with pytest.raises(ParamError) as info:
        catalog.closed_form(entry, 0, 1, 1, 1)
    assert "positive integer" in str(info.value)
    bad = [(m, n, q, p) for m, n, q, p in grid
           if p >= (entry.p_min or 0) and not catalog.validate_params(entry, m, n, q, p)]
    for m, n, q, p in bad[:3]:
        with pytest.raises(ParamError, match=entry.hypothesis.split(";")[0]):
            catalog.partial_sum(entry, m, n, q, p, 3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([e for e in catalog.catalog_list() if not e.fixed]),
       st.integers(1, 3), st.integers(1, 3), st.integers(1, 4), st.integers(0, 2),
       st.integers(1, 12))
def test_finite_telescoping_property(entry, m, n, q, p, N):
    if not catalog.validate_params(entry, m, n, q, p):
        return
    assert catalog.partial_sum(entry, m, n, q, p, N) == catalog.finite_rhs(entry, m, n, q, p, N)


CHILDREN = [e for e in catalog.catalog_list() if e.parent]


@pytest.mark.parametrize("child", CHILDREN, ids=lambda e: e.id)
def test_corollaries_are_parent_specializations(child):
    checked = 0
    for m, n, q, p in grid:
        if not catalog.validate_params(child, m, n, q, p):
            continue
        parent, args = catalog.parent_params(child, m, n, q, p)
        if not catalog.validate_params(parent, *args):
            continue
        assert catalog.closed_form(child, m, n, q, p) == catalog.closed_form(parent, *args)
        for k in range(1, 5):
            assert catalog.term_at(child, m, n, q, p, k) == catalog.term_at(parent, *args, k=k)
        checked += 1
    assert checked


def test_fixed_entries_values():
    assert catalog.closed_form("N3", None, None, None) == QuadRat(1, 0, 128)
    assert catalog.closed_form("N3L", None, None, None) == QuadRat(1, 0, 829440)
    assert catalog.closed_form("N4", None, None, None) == QuadRat(1, 0, 128)
    assert catalog.closed_form("N4L", None, None, None) == QuadRat(1, 0, 10240)


def test_closed_forms_with_irrational_tails():
    # m = n = q = 1: sum (-1)^(k-1)/(F_k F_{k+1}) = (sqrt5 - 1)/2
    assert catalog.closed_form("A1", 1, 1, 1) == (SQRT5 - 1) / 2
    assert catalog.closed_form("A6", 1, 1, 1, 1) == PHI - 1
    assert catalog.tail_constant("J3", 2, 1, 1) == 25


def test_a6_special_display():
    """The m,p display of the shifted-numerator theorem is A6 at (p, n, 1, m)."""
    def display_term(m, n, p, k):
        num = prod(F(n * k + j * n) for j in range(m + 1, p + m))
        den = prod(F(n * k + j * n) for j in range(p + 1))
        return sgn(n * k - 1) * Fraction(num, den)

    def display_rhs(m, n, p):
        scale = Fraction(1, F(m * n) * F(p * n))
        ratio = prod(Fraction(F(j * n + n * p + n), F(j * n + n)) for j in range(m))
        return PHI ** (m * n * p) * scale - QuadRat.coerce(scale * ratio)

    for m in range(1, 4):
        for n in range(1, 4):
            for p in range(1, 4):
                assert display_rhs(m, n, p) == catalog.closed_form("A6", p, n, 1, m)
                for k in range(1, 5):
                    assert display_term(m, n, p, k) == catalog.term_at("A6", p, n, 1, m, k)


def test_n2_sign_multiplies_whole_product():
    """Reading (-1)^k inside the j-product would give (-1)^(km), which fails for even m."""
    m, n, q = 2, 1, 2
    ks = range(1, q + 1)

    def inner(k):
        return prod(Fraction(F(n * k + j * n * q + 1) ** 2,
                             F(n * k + j * n * q) * F(n * k + j * n * q + 2)) for j in range(m))

    outside = sum(sgn(k) * inner(k) for k in ks) / F(m * n * q)
    literal = sum(sgn(k * m) * inner(k) for k in ks) / F(m * n * q)
    closed = catalog.closed_form("N2", m, n, q)
    assert closed == QuadRat.coerce(outside)
    assert closed != QuadRat.coerce(literal)
    gap = abs(QuadRat.coerce(catalog.partial_sum("N2", m, n, q, 0, 40)) - closed)
    assert gap < QuadRat(1, 0, 10 ** 15)


def test_decay_and_probe_factor():
    assert catalog.decay_degree("A3", 1, 1, 1) == 2
    assert catalog.probe_factor("A3", 1, 1, 1) == 1
    assert catalog.decay_degree("E1", 1, 1, 1) == 1
    assert catalog.probe_factor("E1", 1, 1, 1) == 2
    assert catalog.decay_degree("A5", 1, 1, 1) == 0


def test_dsl_parsing():
    expr = parse_expr("2nk+mnq-1")
    assert expr({"n": 3, "k": 2, "m": 1, "q": 4}) == 12 + 12 - 1
    block = parse_block("F[nk+jnq]^2 for j=0..2m except m")
    env = {"n": 1, "k": 1, "m": 2, "q": 1, "p": 0}
    assert block.indices(env) == [1, 2, 4, 5]
    assert block.power == 2
    for bad in ("X[k]", "F[k", "F[k] for j=0..", "F[2x]"):
        with pytest.raises(DSLError):
            parse_block(bad)


def test_empty_product_is_one():
    # m = 1 leaves the j=1..m-1 numerator empty
    assert catalog.term_at("A1", 1, 1, 1, 0, 1) == Fraction(1, F(1) * F(2))
