from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fibsum.exact import PHI, QuadRat
from fibsum.sequences import fib, lucas
from fibsum.telescope import (
    LemmaMode, PreconditionError, SeqFn, TelescopeCase, Variant, lemma_product_finite,
    lemma_product_infinite, telescope, telescope_finite, telescope_finite_alt,
)

from oracles import lemma_oracle, table_sequence

small = st.integers(1, 6)
tables = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=20),
                  min_size=1, max_size=30)


@given(tables, small, st.integers(1, 20))
def test_plain_telescope(values, q, N):
    f = SeqFn(table_sequence(values))
    if N < q:
        with pytest.raises(PreconditionError):
            telescope_finite(f, q, N)
        return
    lhs, rhs = telescope_finite(f, q, N)
    assert lhs == rhs


@given(tables, small, st.integers(1, 20))
def test_alternating_telescope(values, q, N):
    lhs, rhs = telescope_finite_alt(SeqFn(table_sequence(values)), q, N)
    assert lhs == rhs


def test_case_validation():
    with pytest.raises(PreconditionError):
        TelescopeCase(Variant.PLAIN, 0, 3)
    with pytest.raises(PreconditionError):
        TelescopeCase(Variant.INFINITE_PLAIN, 2, 5)
    with pytest.raises(PreconditionError):
        TelescopeCase(Variant.ALTERNATING, 2, None)
    assert TelescopeCase(Variant.ALTERNATING, 2, 3).shift_sign == -1


def test_infinite_plain_dispatch():
    # f(k) = 1/k -> 0:  sum_k [1/k - 1/(k+2)] = 1 + 1/2
    f = SeqFn(lambda k: Fraction(1, k))
    assert telescope(TelescopeCase(Variant.INFINITE_PLAIN, 2), f, 0) == QuadRat(3, 0, 2)
    with pytest.raises(PreconditionError):
        telescope(TelescopeCase(Variant.INFINITE_PLAIN, 2), f)
    assert telescope(TelescopeCase(Variant.INFINITE_ALTERNATING, 3), f) == \
        QuadRat.coerce(Fraction(1) - Fraction(1, 2) + Fraction(1, 3))


@pytest.mark.parametrize("mode", ["plain", "alt-q-even", "alt-q-odd"])
@settings(max_examples=60, deadline=None)
@given(tables, st.integers(1, 4), st.integers(1, 4), st.integers(1, 5), st.integers(1, 12))
def test_lemma_matches_oracle(mode, values, m, n, q, N):
    if mode == "alt-q-even":
        q = 2 * ((q + 1) // 2)
    elif mode == "alt-q-odd":
        q = 2 * (q // 2) + 1
    f = table_sequence(values)
    lhs, rhs = lemma_product_finite(SeqFn(f), m, n, q, N, mode)
    o_lhs, o_rhs = lemma_oracle(f, m, n, q, N, mode)
    assert lhs == o_lhs and rhs == o_rhs and lhs == rhs


def test_lemma_parity_and_mode_checks():
    f = SeqFn(fib)
    with pytest.raises(PreconditionError):
        lemma_product_finite(f, 1, 1, 3, 4, "alt-q-even")
    with pytest.raises(PreconditionError):
        lemma_product_finite(f, 1, 1, 2, 4, "alt-q-odd")
    with pytest.raises(PreconditionError):
        lemma_product_finite(f, 1, 1, 2, 4, LemmaMode.ALTERNATING)
    with pytest.raises(PreconditionError):
        lemma_product_finite(f, 0, 1, 2, 4)
    with pytest.raises(ValueError):
        lemma_product_finite(f, 1, 1, 2, 4, "sideways")


def test_lemma_infinite_with_ratio_sequence():
    # f(k) = F_{k+1}/F_k -> phi; the closed form subtracts q phi^m
    f = SeqFn(lambda k: Fraction(fib(k + 1), fib(k)))
    partial, closed, gap = lemma_product_infinite(f, PHI, 2, 1, 2, "plain", 60)
    expected = f(1) * f(3) + f(2) * f(4) - 2 * PHI ** 2
    assert closed == expected
    assert gap == abs(partial - closed)
    assert gap < QuadRat(1, 0, 10 ** 15)


def test_lemma_infinite_alternating_q_odd():
    # f(k) = 1/L_k -> 0, alternating form with the plus sign
    f = SeqFn(lambda k: Fraction(1, lucas(k)))
    result = lemma_product_infinite(f, 0, 2, 1, 3, LemmaMode.ALTERNATING, 40)
    head = sum(((-1) ** (k - 1) * f(k) * f(k + 3) for k in range(1, 4)), QuadRat(0))
    assert result.closed_form == head
    assert result.tail_bound < QuadRat(1, 0, 10 ** 12)
