"""Fuss-Catalan numbers, the associated Riordan arrays, and Hankel transforms.

Closed forms take ``r >= 1`` (``fcr``/``fc`` also accept ``r = 0``); the
series-based constructors accept any integer ``r``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .production import production_matrix
from .report import Report
from .riordan import (
    Riordan,
    SquareGrid,
    check_downshift_inverse,
    check_downshift_product,
    downshift_product_theorem,
    inverse,
    multiply,
    rectify,
    to_matrix,
)
from .series import Series, compose, gr_series, revert, sqrt


def _integral(v: Fraction, what: str) -> Fraction:
    if v.denominator != 1:
        raise ArithmeticError(f"{what} = {v} should be an integer")
    return v


def fc_number(n: int, r: int) -> Fraction:
    """``C(rn+1, n) / (rn+1)``."""
    if r < 1:
        raise ValueError("use series path for r ≤ 0")
    if n < 0:
        raise ValueError("n must be non-negative")
    return _integral(Fraction(comb(r * n + 1, n), r * n + 1), f"C_{n}^{r}")


def tau(n: int, k: int, r: int) -> Fraction:
    """Entry ``(n, k)`` of ``(g_r, x g_r^r)``."""
    if r < 1:
        raise ValueError("closed form needs r ≥ 1")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 ≤ k ≤ n, got n={n}, k={k}")
    v = Fraction(r * k + 1, (r - 1) * n + k + 1) * comb(r * n, n - k)
    return _integral(v, f"tau({n},{k};{r})")


def fcr(n: int, k: int, r: int) -> Fraction:
    """Entry ``(n, k)`` of the Bell matrix ``(g_r, x g_r)``."""
    if r < 0:
        raise ValueError("closed form needs r ≥ 0")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 ≤ k ≤ n, got n={n}, k={k}")
    m = n - k
    top = r * m + k + 1
    return _integral(Fraction(k + 1, top) * comb(top, m), f"FCR({n},{k};{r})")


def fc(n: int, k: int, r: int) -> Fraction:
    """Entry ``(n, k)`` of the Fuss-Catalan square ``(g_r, g_r)``."""
    if r < 0:
        raise ValueError("closed form needs r ≥ 0")
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    top = r * n + k + 1
    return _integral(Fraction(k + 1, top) * comb(top, n), f"FC({n},{k};{r})")


def fc_param(n: int, k: int, r: int, s) -> Fraction:
    """The Fuss-Catalan square with each pre-array entry ``tau(n, j)`` weighted by ``s^(n-j)``."""
    if r < 1:
        raise ValueError("closed form needs r ≥ 1")
    s = Fraction(s)
    total = Fraction(0)
    for j in range(min(n, k) + 1):
        total += Fraction(r * j + 1, (r - 1) * n + j + 1) * s ** (n - j) * comb(r * n, n - j) * comb(k, j)
    return total


# series-side constructions

def pre_fcr_array(r: int, order: int) -> Riordan:
    """``(g_r, x g_r^r)``."""
    g = gr_series(r, order)
    return Riordan(g, (g ** r).shift_up())


def fcr_array(r: int, order: int) -> Riordan:
    """``(g_r, x g_r)``."""
    return Riordan.bell(gr_series(r, order))


def coefficient_array(r: int, order: int) -> Riordan:
    """``(1/(1+x), x/(1+x)^r)``, whose inverse is ``(g_r, x g_r^r)``."""
    x = Series.x(order)
    return Riordan(1 / (1 + x), x / (1 + x) ** r)


def fc_square(r: int, rows: int, cols: int | None = None) -> SquareGrid:
    cols = rows if cols is None else cols
    return SquareGrid([[fc(n, k, r) for k in range(cols)] for n in range(rows)])


def canonical_right_factor(r: int, order: int) -> Riordan:
    """``(1, x/(1+x)^(r-1))``."""
    x = Series.x(order)
    return Riordan(Series.const(1, order), x / (1 + x) ** (r - 1))


def verify_canonical_factorization(r: int, order: int, samples: Sequence = (2, 3, Fraction(1, 2))) -> bool:
    """``(g_r, x g_r) = (g_r, x g_r^r) · (1, x/(1+x)^(r-1))`` entrywise at ``order``.

    For ``r = 2`` the s-weighted square is also checked against the
    rectification of ``(g_2(sx), x g_2(sx)) · (1, x(1+(1-s)x))`` at each sample.
    """
    if r < 2:
        raise ValueError("factorization needs r ≥ 2")
    lhs = fcr_array(r, order)
    rhs = multiply(pre_fcr_array(r, order), canonical_right_factor(r, order))
    if to_matrix(lhs, order + 1) != to_matrix(rhs, order + 1):
        return False
    if r == 2:
        return all(parametric_factorization_holds(s, order) for s in samples)
    return True


def parametric_array(s, order: int) -> Riordan:
    """``(g_2(sx), x g_2(sx)) · (1, x(1 + (1-s)x))``."""
    s = Fraction(s)
    x = Series.x(order)
    g = compose(gr_series(2, order), x * s)
    return multiply(Riordan.bell(g), Riordan(Series.const(1, order), x + (1 - s) * x * x))


def parametric_closed_form(s, order: int) -> Riordan:
    """``((1-√(1-4sx))/(2sx), (1-2s(1-s)x-√(1-4sx))/(2s²))``; needs ``s != 0``."""
    s = Fraction(s)
    x = Series.x(order + 1)
    root = sqrt(1 - 4 * s * x)
    g = ((1 - root) / (2 * s)).divide_x()
    f = (1 - 2 * s * (1 - s) * x - root) / (2 * s * s)
    return Riordan(g, f.truncate(order))


def parametric_factorization_holds(s, order: int) -> bool:
    R = parametric_array(s, order)
    if Fraction(s) != 0 and not R.agrees_with(parametric_closed_form(s, order)):
        return False
    rows = order // 2 + 1
    grid = rectify(R, rows, rows)
    return all(grid[n, k] == fc_param(n, k, 2, s) for n in range(rows) for k in range(rows))


# Hankel transforms

def hankel_det(matrix: list[list]) -> Fraction:
    """Determinant by Bareiss elimination with row pivoting.

    Integer input stays integral throughout (each division is exact).
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    integral = all(Fraction(v).denominator == 1 for row in matrix for v in row)
    if integral:
        M = [[int(Fraction(v)) for v in row] for row in matrix]
    else:
        M = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num // prev if integral else num / prev
            M[i][k] = 0
        prev = M[k][k]
    return Fraction(sign * M[n - 1][n - 1])


def hankel_transform(seq: Sequence, terms: int) -> list[Fraction]:
    """``h_n = det[seq_{i+j}]_{0 <= i, j <= n}`` for ``n < terms``."""
    if len(seq) < 2 * terms - 1:
        raise ValueError(f"need {2 * terms - 1} terms of the sequence, got {len(seq)}")
    seq = [Fraction(v) for v in seq]
    return [hankel_det([[seq[i + j] for j in range(n + 1)] for i in range(n + 1)]) for n in range(terms)]


# worked examples: banded production matrices pushed through B^T and a downshift

EX1_G = [1, 0, 0, -1, 3, -9, 26, -75, 216, -623, 1800]
EX1_HANKEL = [1, 0, -1, 2, 0, -2, 3, 0, -3, 4, 0, -4, 5, 0, -5, 6, 0]
EX2_A = [1, -1, 1, -2, 3, -6, 10, -20, 35, -70, 126]
EX2_HANKEL_A = [1, 0, -1, 0, 1, 0, -1, 0]
EX2_HANKEL_ZERO_PREFIXED = [0, -1, 1, -2, 2, -3, 3, -4, 4, -5, 5]
EX2_G = [1, -1, 0, -1, 1, -3, 4, -10, 15, -35, 56]
EX2_BINOMIAL_TAIL = [0, 1, 1, 3, 4, 10, 15, 35, 56]
EX2_HANKEL_G = [1, -1, -2, 3, 0, -3, 4, -1, -5, 6, 0, -6, 7, -1, -8, 9]
EX3_PRODUCTION = [
    [2, 1],
    [2, 1, 1],
    [3, 1, 1, 1],
    [6, 2, 1, 1, 1],
    [13, 4, 2, 1, 1, 1],
    [30, 9, 4, 2, 1, 1, 1],
    [72, 21, 9, 4, 2, 1, 1],
]


def _band_rows(P, rows: int) -> list[list[Fraction]]:
    return [[P[i, j] for j in range(min(i + 2, P.size))] for i in range(rows)]


def _expected_band(diag: Sequence[int], z: Sequence[int], rows: int) -> list[list[int]]:
    """Rows of a production matrix with Z-column ``z`` and A-band ``diag`` (a_0 = 1 first)."""
    out = []
    for i in range(rows):
        row = [z[i] if i < len(z) else 0]
        for j in range(1, i + 2):
            idx = i - j + 1
            row.append(diag[idx] if idx < len(diag) else 0)
        out.append(row[: min(i + 2, rows)])
    return out


def _hankel_check(rep: Report, name: str, seq: Sequence, want: Sequence) -> None:
    terms = min(len(want), (len(seq) + 1) // 2)
    rep.expect_equal(name, hankel_transform(seq, terms), want[:terms])


def section9_examples(order: int = 32) -> Report:
    """Rebuild the three worked examples and compare with the printed data.

    Mismatches are reported, never raised.
    """
    if order < 12:
        raise ValueError("order must be at least 12")
    rep = Report("section9")
    N = order
    x = Series.x(N)
    one = Series.const(1, N)
    rows = min(8, N)

    # example 1: A-sequence 1 + x^3
    h = 1 + x ** 3
    R1 = inverse(Riordan(1 / h, x / h))
    P1 = production_matrix(to_matrix(R1, rows))
    rep.expect_equal("ex1 production matrix band", _band_rows(P1, rows - 1),
                     _expected_band([1, 0, 0, 1], [0, 0, 1], rows - 1))
    t3 = compose(gr_series(3, N), x ** 3)
    rep.add("ex1 array is (t(x^3), x t(x^3))", R1.agrees_with(Riordan.bell(t3)))
    rep.add("ex1 downshift of R·B^T is (g, x(1+f))", check_downshift_product(R1, rows))
    D1 = downshift_product_theorem(R1)
    rep.add("ex1 downshift equals R·(1, x/(1-x+x^2))",
            D1.agrees_with(multiply(R1, Riordan(one, x / (1 - x + x ** 2)))))
    D1i = inverse(D1)
    root = sqrt(1 + 2 * x - 3 * x ** 2)
    rep.add("ex1 inverse g closed form", D1i.g.agrees_with((1 + 3 * x + (1 + 2 * x) * root) / (2 * (1 + 3 * x))))
    rep.add("ex1 inverse f closed form (root of 1+2x-3x^2)",
            D1i.f.agrees_with(2 * x / (1 + 3 * x - root).divide_x()))
    rep.expect_equal("ex1 g expansion", D1i.g.coeffs[: len(EX1_G)], EX1_G)
    _hankel_check(rep, "ex1 Hankel transform", D1i.g.coeffs, EX1_HANKEL)

    # example 2: the Bell array of Rev{x/(1+x+x^2+x^3)}
    h = 1 + x + x ** 2 + x ** 3
    f = revert(x / h)
    R2 = Riordan.bell(f.divide_x().truncate(N - 1))
    P2 = production_matrix(to_matrix(R2, rows))
    rep.expect_equal("ex2 production matrix band", _band_rows(P2, rows - 1),
                     _expected_band([1, 1, 1, 1], [1, 1, 1], rows - 1))
    rep.add("ex2 downshift of R·B^T is (g, x(1+f))", check_downshift_product(R2, rows))
    D2 = downshift_product_theorem(R2)
    rep.add("ex2 downshift equals (1/h, x/h)^-1·(1, x/(1+x^2))",
            D2.agrees_with(multiply(inverse(Riordan(1 / h, x / h)), Riordan(one, x / (1 + x ** 2)))))
    D2i = inverse(D2)
    root = sqrt(1 - 4 * x ** 2)
    rep.add("ex2 inverse g closed form",
            D2i.g.agrees_with((1 + x - 2 * x ** 2 + (1 + x) * root) / (2 * (1 + 2 * x))))
    a = D2i.f.divide_x()
    rep.add("ex2 inverse f closed form", a.agrees_with((1 + 2 * x + root) / (2 * (1 + 2 * x))))
    rep.expect_equal("ex2 f/x expansion", a.coeffs[: len(EX2_A)], EX2_A)
    _hankel_check(rep, "ex2 Hankel of a_n", a.coeffs, EX2_HANKEL_A)
    m = (len(a) - 1) // 2
    rep.expect_equal("ex2 Hankel of a_(n+1) is -(-1)^n", hankel_transform(a.coeffs[1:], m),
                     [-(-1) ** n for n in range(m)])
    m = (len(a) - 2) // 2
    rep.expect_equal("ex2 Hankel of a_(n+2) is (-1)^C(n+1,2)", hankel_transform(a.coeffs[2:], m),
                     [(-1) ** comb(n + 1, 2) for n in range(m)])
    _hankel_check(rep, "ex2 Hankel of 0, a_0, a_1, ...", [0] + list(a.coeffs), EX2_HANKEL_ZERO_PREFIXED)
    rep.expect_equal("ex2 g expansion", D2i.g.coeffs[: len(EX2_G)], EX2_G)
    tail = [(-1) ** n * D2i.g[n + 2] for n in range(D2i.order - 1)]
    rep.expect_equal("ex2 g_(n+2) = (-1)^n C(n, floor((n-1)/2))", tail,
                     [comb(n, (n - 1) // 2) if n else 0 for n in range(D2i.order - 1)])
    rep.expect_equal("ex2 printed binomial tail", tail[: len(EX2_BINOMIAL_TAIL)], EX2_BINOMIAL_TAIL)
    hg_terms = min(len(EX2_HANKEL_G), (len(D2i.g.coeffs) + 1) // 2)
    hg = hankel_transform(D2i.g.coeffs, hg_terms)
    rep.expect_equal("ex2 Hankel of g", hg, EX2_HANKEL_G[:hg_terms])
    hgf = (1 - x ** 2) / ((1 - x + x ** 2) * (1 + x + x ** 2) ** 2)
    rep.expect_equal("ex2 Hankel of g generating function", hg, hgf.coeffs[:hg_terms])

    # example 3: h = 1 + 2x + 2x^2 + x^3
    h = 1 + 2 * x + 2 * x ** 2 + x ** 3
    R3 = inverse(Riordan(1 / h, x / h))
    P3 = production_matrix(to_matrix(R3, rows))
    rep.expect_equal("ex3 production matrix band", _band_rows(P3, rows - 1),
                     _expected_band([1, 2, 2, 1], [2, 2, 1], rows - 1))
    rep.add("ex3 downshift of R·B^T is (g, x(1+f))", check_downshift_product(R3, rows))
    D3 = downshift_product_theorem(R3)
    rep.add("ex3 downshift equals R·(1, x/(1+x+x^2))",
            D3.agrees_with(multiply(R3, Riordan(one, x / (1 + x + x ** 2)))))
    PD3 = production_matrix(to_matrix(D3, 8))
    rep.expect_equal("ex3 production matrix of result", _band_rows(PD3, 7), EX3_PRODUCTION)
    root = sqrt(1 - 2 * x - 3 * x ** 2)
    closed = Riordan((1 - x - 2 * x ** 2 + root) / (2 * (1 + x)), x * (1 + x + root) / (2 * (1 + x)))
    rep.add("ex3 inverse closed form", inverse(D3).agrees_with(closed))
    motzkin = ((1 - x - root) / 2).divide_x(2)
    PD3 = production_matrix(to_matrix(D3, min(N, 14)))
    A_col = [PD3[i, 1] for i in range(PD3.size)]
    Z_col = PD3.z_column()
    rep.expect_equal("ex3 A-sequence is 1 then Motzkin", A_col, [1] + list(motzkin.coeffs[: len(A_col) - 1]))
    rep.expect_equal("ex3 Z-sequence is consecutive Motzkin sums", Z_col[1:],
                     [motzkin[n - 1] + motzkin[n] for n in range(1, len(Z_col))])

    # the general a, b, c statement at sampled parameters
    for a_, b_, c_ in ((1, 3, 2), (Fraction(1, 2), -2, 5), (3, 0, 1)):
        h = 1 + a_ * x + b_ * x ** 2 + c_ * x ** 3
        R = inverse(Riordan(1 / h, x / h))
        D = downshift_product_theorem(R)
        tag = f"(a,b,c)=({a_},{b_},{c_})"
        rep.add(f"general {tag}: downshift equals R·(1, x(1+x)/h)",
                D.agrees_with(multiply(R, Riordan(one, x * (1 + x) / h))))
        rep.add(f"general {tag}: inverse-form downshift", check_downshift_inverse(Riordan(1 / h, x / h), rows))
        P = production_matrix(to_matrix(R, rows))
        rep.expect_equal(f"general {tag}: production band", _band_rows(P, rows - 1),
                         _expected_band([1, a_, b_, c_], [a_, b_, c_], rows - 1))
    return rep
