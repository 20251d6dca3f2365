"""The theorem table.

Each entry pairs a summand family with the exact right-hand side of its
infinite sum.  Families are grouped by the shape of the denominator:

A/B  products F (resp. L) over nk + jnq, j = 0..m, or with the middle
     factor removed
C/D  L (resp. F) numerator over 2m+1 consecutive F (resp. L) factors
E/G  step 2nq products, with the plain and the alternating variant
H/I  products over 2nk + 2jnq
J/K  squared F (resp. L) products
L/M  paired products F_{nk+jnq} F_{nk+jnq+np} (resp. L)
N    shifted-by-one squares and four parameter-free sums
"""

from __future__ import annotations

from fractions import Fraction

from .model import make_entry


def _odd(*xs):
    return all(x % 2 for x in xs)


def _even(x):
    return x % 2 == 0


ANY = "m, n and q are positive integers"
ALL_ODD = "m, n and q are positive odd integers"
N_ODD_Q_EVEN = "n is odd and q is even"
Q_ODD_MN_EVEN = "q is odd and mn is even"
Q_ODD = "q is odd"
MNQ_EVEN = "mnq is even"
Q_EVEN_OR_MNQ_ODD = "q is even or mnq is odd"
Q_EVEN = "q is a positive even integer"
P_POS = "; p is a positive integer"
P_NONNEG = "; p is a non-negative integer"


def _any(m, n, q, p):
    return True


def _all_odd(m, n, q, p):
    return _odd(m, n, q)


def _n_odd_q_even(m, n, q, p):
    return _odd(n) and _even(q)


def _q_odd_mn_even(m, n, q, p):
    return _odd(q) and _even(m * n)


def _q_odd(m, n, q, p):
    return _odd(q)


def _mnq_even(m, n, q, p):
    return _even(m * n * q)


def _q_even_or_mnq_odd(m, n, q, p):
    return _even(q) or _odd(m * n * q)


def _q_even(m, n, q, p):
    return _even(q)


FJ = "F[nk+jnq] for j=0..m"
LJ = "L[nk+jnq] for j=0..m"
FJ_M1 = "F[nk+jnq] for j=0..m-1"
LJ_M1 = "L[nk+jnq] for j=0..m-1"
F_GAP = "F[nk+jnq] for j=0..2m except m"
L_GAP = "L[nk+jnq] for j=0..2m except m"
F_2M1 = "F[nk+jnq] for j=0..2m-1"
L_2M1 = "L[nk+jnq] for j=0..2m-1"


def _build():
    E = make_entry
    half = Fraction(1, 2)
    entries = [
        # --- F products, Lucas numerators --------------------------------
        E("A1", "Lucas numerators over consecutive F products, sign (-1)^(nk-1)", ANY, _any,
          sign="alt-nk", num=["L[nk+jnq] for j=1..m-1"], den=[FJ],
          coeff=-half, scale=["F[mnq]"], inner_num=[LJ_M1], inner_den=[FJ_M1],
          tail="sqrt5^m"),
        E("A2", "Lucas numerators over consecutive F products, no sign", N_ODD_Q_EVEN, _n_odd_q_even,
          num=["L[nk+jnq] for j=1..m-1"], den=[FJ],
          coeff=half, scale=["F[mnq]"], inner_sign="neg-k", inner_num=[LJ_M1], inner_den=[FJ_M1],
          lemma="alternating"),
        E("A3", "reciprocal F product with the middle factor removed", ALL_ODD, _all_odd,
          den=[F_GAP], scale=["L[mnq]"], inner_den=[F_2M1]),
        E("A4", "alternating reciprocal F product with the middle factor removed",
          Q_ODD_MN_EVEN, _q_odd_mn_even,
          sign="alt-k", den=[F_GAP], scale=["L[mnq]"], inner_sign="alt-k", inner_den=[F_2M1],
          lemma="alternating"),
        E("A5", "alternating F[2nk+mnq] times Lucas numerators over F products", Q_ODD, _q_odd,
          sign="alt-k", num=["F[2nk+mnq]", "L[nk+jnq] for j=1..m-1"], den=[FJ],
          coeff=half, inner_sign="alt-k", inner_num=[LJ_M1], inner_den=[FJ_M1],
          lemma="alternating", convergence="mean"),
        E("A5c", "A5 at even order: squared middle Lucas factor", Q_ODD, _q_odd,
          sign="alt-k", num=["L[nk+mnq]^2", "L[nk+jnq] for j=1..2m-1 except m"], den=[F_GAP],
          coeff=half, inner_sign="alt-k", inner_num=[L_2M1], inner_den=[F_2M1],
          lemma="alternating", convergence="mean", parent=("A5", 2)),
        E("A6", "shifted F numerators F[nk+jnq+np] over F products, sign (-1)^(nk-1)",
          ANY + P_POS, _any,
          sign="alt-nk", num=["F[nk+jnq+np] for j=1..m-1"], den=[FJ],
          coeff=-1, scale=["F[mnq]", "F[np]"],
          inner_num=["F[nk+jnq+np] for j=0..m-1"], inner_den=[FJ_M1], tail="phi^mnp", p_min=1),
        E("A7", "shifted F numerators over F products, no sign", N_ODD_Q_EVEN + P_POS,
          _n_odd_q_even,
          num=["F[nk+jnq+np] for j=1..m-1"], den=[FJ],
          coeff=1, scale=["F[mnq]", "F[np]"], inner_sign="neg-k",
          inner_num=["F[nk+jnq+np] for j=0..m-1"], inner_den=[FJ_M1],
          lemma="alternating", p_min=1),
        # --- L products, Fibonacci numerators ----------------------------
        E("B1", "F numerators over consecutive L products, sign (-1)^(nk-1)", ANY, _any,
          sign="alt-nk", num=["F[nk+jnq] for j=1..m-1"], den=[LJ],
          coeff=half, scale=["F[mnq]"], inner_num=[FJ_M1], inner_den=[LJ_M1],
          tail="sqrt5^-m"),
        E("B2", "F numerators over consecutive L products, no sign", N_ODD_Q_EVEN, _n_odd_q_even,
          num=["F[nk+jnq] for j=1..m-1"], den=[LJ],
          coeff=half, scale=["F[mnq]"], inner_sign="alt-k", inner_num=[FJ_M1], inner_den=[LJ_M1],
          lemma="alternating"),
        E("B3", "reciprocal L product with the middle factor removed", ALL_ODD, _all_odd,
          den=[L_GAP], scale=["L[mnq]"], inner_den=[L_2M1]),
        E("B4", "alternating reciprocal L product with the middle factor removed",
          Q_ODD_MN_EVEN, _q_odd_mn_even,
          sign="alt-k", den=[L_GAP], scale=["L[mnq]"], inner_sign="alt-k", inner_den=[L_2M1],
          lemma="alternating"),
        E("B5", "alternating F[2nk+mnq] times F numerators over L products", Q_ODD, _q_odd,
          sign="alt-k", num=["F[2nk+mnq]", "F[nk+jnq] for j=1..m-1"], den=[LJ],
          coeff=half, inner_sign="alt-k", inner_num=[FJ_M1], inner_den=[LJ_M1],
          lemma="alternating", convergence="mean"),
        E("B5c", "B5 at even order: squared middle F factor", Q_ODD, _q_odd,
          sign="alt-k", num=["F[nk+mnq]^2", "F[nk+jnq] for j=1..2m-1 except m"], den=[L_GAP],
          coeff=half, inner_sign="alt-k", inner_num=[F_2M1], inner_den=[L_2M1],
          lemma="alternating", convergence="mean", parent=("B5", 2)),
        E("B6", "shifted L numerators over L products, sign (-1)^(nk-1)", ANY + P_POS, _any,
          sign="alt-nk", num=["L[nk+jnq+np] for j=1..m-1"], den=[LJ],
          coeff=Fraction(1, 5), scale=["F[mnq]", "F[np]"],
          inner_num=["L[nk+jnq+np] for j=0..m-1"], inner_den=[LJ_M1], tail="phi^mnp", p_min=1),
        E("B7", "shifted L numerators over L products, no sign", N_ODD_Q_EVEN + P_POS,
          _n_odd_q_even,
          num=["L[nk+jnq+np] for j=1..m-1"], den=[LJ],
          coeff=Fraction(1, 5), scale=["F[mnq]", "F[np]"], inner_sign="alt-k",
          inner_num=["L[nk+jnq+np] for j=0..m-1"], inner_den=[LJ_M1],
          lemma="alternating", p_min=1),
        # --- 2m+1 consecutive factors ---------------------------------
        E("C1", "L[nk+mnq] over 2m+1 consecutive F factors", ANY + "; " + MNQ_EVEN, _mnq_even,
          num=["L[nk+mnq]"], den=["F[nk+jnq] for j=0..2m"], scale=["F[mnq]"], inner_den=[F_2M1]),
        E("C2", "alternating L[nk+mnq] over 2m+1 consecutive F factors",
          ANY + "; " + Q_EVEN_OR_MNQ_ODD, _q_even_or_mnq_odd,
          sign="alt-k", num=["L[nk+mnq]"], den=["F[nk+jnq] for j=0..2m"], scale=["F[mnq]"],
          inner_sign="alt-k", inner_den=[F_2M1], lemma="alternating"),
        E("D1", "F[nk+mnq] over 2m+1 consecutive L factors", ANY + "; " + MNQ_EVEN, _mnq_even,
          num=["F[nk+mnq]"], den=["L[nk+jnq] for j=0..2m"], coeff=Fraction(1, 5),
          scale=["F[mnq]"], inner_den=[L_2M1]),
        E("D2", "alternating F[nk+mnq] over 2m+1 consecutive L factors",
          ANY + "; " + Q_EVEN_OR_MNQ_ODD, _q_even_or_mnq_odd,
          sign="alt-k", num=["F[nk+mnq]"], den=["L[nk+jnq] for j=0..2m"], coeff=Fraction(1, 5),
          scale=["F[mnq]"], inner_sign="alt-k", inner_den=[L_2M1], lemma="alternating"),
    ]

    # --- step-2nq products; each theorem comes with a + and a - sign mode ----
    step2 = {
        "E1": ("F[nk+mnq] over F[nk+2jnq], j=0..m", ALL_ODD, _all_odd, "F[nk+mnq]", "F",
               Fraction(1), "L[mnq]"),
        "E2": ("L[nk+mnq] over F[nk+2jnq], j=0..m", ANY + "; " + MNQ_EVEN, _mnq_even,
               "L[nk+mnq]", "F", Fraction(1), "F[mnq]"),
        "G1": ("L[nk+mnq] over L[nk+2jnq], j=0..m", ALL_ODD, _all_odd, "L[nk+mnq]", "L",
               Fraction(1), "L[mnq]"),
        "G2": ("F[nk+mnq] over L[nk+2jnq], j=0..m", ANY + "; " + MNQ_EVEN, _mnq_even,
               "F[nk+mnq]", "L", Fraction(1, 5), "F[mnq]"),
    }
    for eid, (label, hyp, pred, top, kind, coeff, scale) in step2.items():
        den = f"{kind}[nk+2jnq] for j=0..m"
        inner = f"{kind}[nk+2jnq] for j=0..m-1"
        entries.append(E(eid, label, hyp, pred, num=[top], den=[den], coeff=coeff,
                         scale=[scale], upper="2q", inner_den=[inner]))
        entries.append(E(eid + "a", "alternating " + label, hyp, pred, sign="alt-k", num=[top],
                         den=[den], coeff=coeff, scale=[scale], upper="2q", inner_sign="alt-k",
                         inner_den=[inner], lemma="alternating"))

    # --- products over 2nk + 2jnq --------------------------------------
    doubled = [
        ("H1", "F[2nk+mnq] over F[2nk+2jnq]", ALL_ODD, _all_odd, "F", "F", 1, "L[mnq]", False),
        ("H2", "alternating F[2nk+mnq] over F[2nk+2jnq]", ANY + "; " + Q_ODD_MN_EVEN,
         _q_odd_mn_even, "F", "F", 1, "L[mnq]", True),
        ("H3", "L[2nk+mnq] over F[2nk+2jnq]", ANY + "; " + MNQ_EVEN, _mnq_even,
         "L", "F", 1, "F[mnq]", False),
        ("H4", "alternating L[2nk+mnq] over F[2nk+2jnq]", ANY + "; " + Q_EVEN_OR_MNQ_ODD,
         _q_even_or_mnq_odd, "L", "F", 1, "F[mnq]", True),
        ("I1", "L[2nk+mnq] over L[2nk+2jnq]", ALL_ODD, _all_odd, "L", "L", 1, "L[mnq]", False),
        ("I2", "alternating L[2nk+mnq] over L[2nk+2jnq]", ANY + "; " + Q_ODD_MN_EVEN,
         _q_odd_mn_even, "L", "L", 1, "L[mnq]", True),
        ("I3", "F[2nk+mnq] over L[2nk+2jnq]", ANY + "; " + MNQ_EVEN, _mnq_even,
         "F", "L", Fraction(1, 5), "F[mnq]", False),
        ("I4", "alternating F[2nk+mnq] over L[2nk+2jnq]", ANY + "; " + Q_EVEN_OR_MNQ_ODD,
         _q_even_or_mnq_odd, "F", "L", Fraction(1, 5), "F[mnq]", True),
    ]
    for eid, label, hyp, pred, top, kind, coeff, scale, alt in doubled:
        entries.append(E(eid, label, hyp, pred, sign="alt-k" if alt else "none",
                         num=[f"{top}[2nk+mnq]"], den=[f"{kind}[2nk+2jnq] for j=0..m"],
                         coeff=coeff, scale=[scale], inner_sign="alt-k" if alt else "none",
                         inner_den=[f"{kind}[2nk+2jnq] for j=0..m-1"],
                         lemma="alternating" if alt else "plain"))

    # --- squared products -----------------------------------------------
    for fam, kind, other, coeff in (("J", "F", "L", Fraction(1)), ("K", "L", "F", Fraction(1, 5))):
        sq = f"{kind}[nk+jnq]^2 for j=0..m"
        sq_m1 = f"{kind}[nk+jnq]^2 for j=0..m-1"
        gap = f"{kind}[nk+jnq]^2 for j=0..2m except m"
        sq_2m1 = f"{kind}[nk+jnq]^2 for j=0..2m-1"
        mid = f"{kind}[nk+mnq]"
        top = f"{other}[nk+mnq]"
        entries += [
            E(f"{fam}1", f"F[2nk+mnq] over squared {kind} products", ANY + "; " + MNQ_EVEN,
              _mnq_even, num=["F[2nk+mnq]"], den=[sq], coeff=coeff, scale=["F[mnq]"],
              inner_den=[sq_m1]),
            E(f"{fam}1c", f"{top} over {mid} times squared {kind} products without the middle",
              ANY, _any, num=[top], den=[mid, gap], coeff=coeff, scale=["F[2mnq]"],
              inner_den=[sq_2m1], parent=(f"{fam}1", 2)),
            E(f"{fam}2", f"alternating F[2nk+mnq] over squared {kind} products",
              ANY + "; " + Q_EVEN_OR_MNQ_ODD, _q_even_or_mnq_odd, sign="alt-k",
              num=["F[2nk+mnq]"], den=[sq], coeff=coeff, scale=["F[mnq]"], inner_sign="alt-k",
              inner_den=[sq_m1], lemma="alternating"),
            E(f"{fam}2c", f"alternating {top} over {mid} times squared {kind} products "
              "without the middle", Q_EVEN, _q_even, sign="alt-k", num=[top], den=[mid, gap],
              coeff=coeff, scale=["F[2mnq]"], inner_sign="alt-k", inner_den=[sq_2m1],
              lemma="alternating", parent=(f"{fam}2", 2)),
        ]
    entries += [
        E("J3", "F[2nk+mnq] times squared Lucas numerators over squared F products, "
          "sign (-1)^(nk-1)", ANY, _any, sign="alt-nk",
          num=["F[2nk+mnq]", "L[nk+jnq]^2 for j=1..m-1"], den=["F[nk+jnq]^2 for j=0..m"],
          coeff=Fraction(-1, 4), scale=["F[mnq]"], inner_num=["L[nk+jnq]^2 for j=0..m-1"],
          inner_den=["F[nk+jnq]^2 for j=0..m-1"], tail="5^m"),
        E("J4", "F[2nk+mnq] times squared Lucas numerators over squared F products, no sign",
          N_ODD_Q_EVEN, _n_odd_q_even,
          num=["F[2nk+mnq]", "L[nk+jnq]^2 for j=1..m-1"], den=["F[nk+jnq]^2 for j=0..m"],
          coeff=Fraction(1, 4), scale=["F[mnq]"], inner_sign="neg-k",
          inner_num=["L[nk+jnq]^2 for j=0..m-1"], inner_den=["F[nk+jnq]^2 for j=0..m-1"],
          lemma="alternating"),
        E("K3", "F[2nk+mnq] times squared F numerators over squared L products, "
          "sign (-1)^(nk-1)", ANY, _any, sign="alt-nk",
          num=["F[2nk+mnq]", "F[nk+jnq]^2 for j=1..m-1"], den=["L[nk+jnq]^2 for j=0..m"],
          coeff=Fraction(1, 4), scale=["F[mnq]"], inner_num=["F[nk+jnq]^2 for j=0..m-1"],
          inner_den=["L[nk+jnq]^2 for j=0..m-1"], tail="5^-m"),
        E("K4", "F[2nk+mnq] times squared F numerators over squared L products, no sign",
          N_ODD_Q_EVEN, _n_odd_q_even,
          num=["F[2nk+mnq]", "F[nk+jnq]^2 for j=1..m-1"], den=["L[nk+jnq]^2 for j=0..m"],
          coeff=Fraction(1, 4), scale=["F[mnq]"], inner_sign="alt-k",
          inner_num=["F[nk+jnq]^2 for j=0..m-1"], inner_den=["L[nk+jnq]^2 for j=0..m-1"],
          lemma="alternating"),
    ]

    # --- paired products with offset np ---------------------------------
    for fam, kind, coeff in (("L", "F", Fraction(1)), ("M", "L", Fraction(1, 5))):
        den = [f"{kind}[nk+jnq] for j=0..m", f"{kind}[nk+jnq+np] for j=0..m"]
        inner = [f"{kind}[nk+jnq] for j=0..m-1", f"{kind}[nk+jnq+np] for j=0..m-1"]
        entries += [
            E(f"{fam}1", f"F[2nk+mnq+np] over paired {kind} products",
              ANY + "; " + MNQ_EVEN + P_NONNEG, _mnq_even, num=["F[2nk+mnq+np]"], den=den,
              coeff=coeff, scale=["F[mnq]"], inner_den=inner, p_min=0),
            E(f"{fam}2", f"alternating F[2nk+mnq+np] over paired {kind} products",
              ANY + "; " + Q_EVEN_OR_MNQ_ODD + P_NONNEG, _q_even_or_mnq_odd, sign="alt-k",
              num=["F[2nk+mnq+np]"], den=den, coeff=coeff, scale=["F[mnq]"],
              inner_sign="alt-k", inner_den=inner, lemma="alternating", p_min=0),
        ]

    # --- shifted-by-one squares and the parameter-free sums -------------
    n_num = ["F[2nk+mnq+2]", "F[nk+jnq+1]^2 for j=1..m-1"]
    n_den = ["F[nk+jnq] for j=0..m", "F[nk+jnq+2] for j=0..m"]
    n_inner_num = ["F[nk+jnq+1]^2 for j=0..m-1"]
    n_inner_den = ["F[nk+jnq] for j=0..m-1", "F[nk+jnq+2] for j=0..m-1"]
    entries += [
        E("N1", "F[2nk+mnq+2] and squared F[nk+jnq+1] over F[nk+jnq] F[nk+jnq+2], "
          "sign (-1)^(nk-1)", ANY, _any, sign="alt-nk", num=n_num, den=n_den, coeff=-1,
          scale=["F[mnq]"], inner_num=n_inner_num, inner_den=n_inner_den, tail="1"),
        E("N2", "F[2nk+mnq+2] and squared F[nk+jnq+1] over F[nk+jnq] F[nk+jnq+2], no sign",
          N_ODD_Q_EVEN, _n_odd_q_even, num=n_num, den=n_den, coeff=1, scale=["F[mnq]"],
          inner_sign="neg-k", inner_num=n_inner_num, inner_den=n_inner_den,
          lemma="alternating",
          notes="the sign (-1)^k multiplies the whole product, not each factor"),
        E("N3", "F[2k+3] / (F[k]^4 F[k+1]^3 F[k+2]^3 F[k+3]^4)", "no free parameters", _any,
          num=["F[2k+3]"], den=["F[k]^4", "F[k+1]^3", "F[k+2]^3", "F[k+3]^4"],
          coeff=Fraction(1, 8), upper="1", inner_den=["F[k]^4", "F[k+1]^4", "F[k+2]^4"],
          fixed=True, notes="expected value 1/128"),
        E("N3L", "F[2k+3] / (L[k]^4 L[k+1]^3 L[k+2]^3 L[k+3]^4)", "no free parameters", _any,
          num=["F[2k+3]"], den=["L[k]^4", "L[k+1]^3", "L[k+2]^3", "L[k+3]^4"],
          coeff=Fraction(1, 40), upper="1", inner_den=["L[k]^4", "L[k+1]^4", "L[k+2]^4"],
          fixed=True, notes="expected value 1/829440"),
        E("N4", "F[3k+1] F[3k+2] F[6k+3] / (F[3k]^4 F[3k+3]^4)", "no free parameters", _any,
          num=["F[3k+1]", "F[3k+2]", "F[6k+3]"], den=["F[3k]^4", "F[3k+3]^4"],
          coeff=Fraction(1, 8), upper="1", inner_den=["F[3k]^4"],
          fixed=True, notes="expected value 1/128"),
        E("N4L", "L[3k+1] L[3k+2] F[6k+3] / (L[3k]^4 L[3k+3]^4)", "no free parameters", _any,
          num=["L[3k+1]", "L[3k+2]", "F[6k+3]"], den=["L[3k]^4", "L[3k+3]^4"],
          coeff=Fraction(1, 40), upper="1", inner_den=["L[3k]^4"],
          fixed=True, notes="expected value 1/10240"),
    ]
    return entries


ENTRIES = tuple(_build())
