"""Deliberately naive reference computations shared by the tests."""

from fractions import Fraction

from fibsum.sequences import fib_naive


def naive_fib(n):
    return fib_naive(n)


def naive_lucas(n):
    return 2 if n == 0 else fib_naive(n - 1) + fib_naive(n + 1)


def lemma_oracle(f, m, n, q, N, mode):
    """Both sides of the product lemma by explicit double loops.

    mode: "plain" (minus sign, no alternation), "alt-q-even" (minus sign,
    alternating) or "alt-q-odd" (plus sign, alternating).
    """
    sign = 1 if mode == "alt-q-odd" else -1
    lhs = 0
    for k in range(1, N + 1):
        bracket = f(n * k) + sign * f(n * k + m * n * q)
        inner = 1
        for j in range(1, m):
            inner *= f(n * k + j * n * q)
        term = bracket * inner
        if mode != "plain" and k % 2 == 0:
            term = -term
        lhs += term
    head = 0
    tail = 0
    for k in range(1, q + 1):
        a = 1
        b = 1
        for j in range(m):
            a *= f(n * k + j * n * q)
            b *= f(n * k + n * N + j * n * q)
        s = 1 if (mode == "plain" or k % 2 == 1) else -1
        head += s * a
        tail += s * b
    if mode == "plain":
        return lhs, head - tail
    return lhs, head + (tail if N % 2 == 1 else -tail)


def table_sequence(values):
    """A sequence backed by a list, extended by repetition for large k."""
    def f(k):
        return Fraction(values[k % len(values)])
    return f
