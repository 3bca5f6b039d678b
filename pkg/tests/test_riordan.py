from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

import printed
from _strategies import riordan, series
from riordan_fc.fusscatalan import fc, gr_series, pre_fcr_array
from riordan_fc.riordan import (
    AlmostRiordan,
    LTMatrix,
    Riordan,
    SquareGrid,
    apply,
    check_downshift_inverse,
    check_downshift_product,
    diagonal_sums,
    downshift,
    downshift_product_theorem,
    entry,
    inverse,
    multiply,
    rectify,
    right_binomial_transpose,
    row_sums,
    to_matrix,
)
from riordan_fc.series import Series, SeriesError

N = 12


def x(order=N):
    return Series.x(order)


def pascal_array(order=N):
    return Riordan(1 / (1 - x(order)), x(order) / (1 - x(order)))


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_invalid_pairs_rejected():
    with pytest.raises(SeriesError):
        Riordan(x(), x())
    with pytest.raises(SeriesError):
        Riordan(Series.const(1, N), x() ** 2)


def test_ltmatrix_shape_checked():
    with pytest.raises(ValueError):
        LTMatrix([[1], [1, 2, 3]])


def test_pre_array_r2_printed_rows():
    assert to_matrix(pre_fcr_array(2, 6), 7).ints() == printed.MOMENT[2]


def test_identity_and_pascal():
    assert to_matrix(Riordan.identity(6), 7) == LTMatrix.identity(7)
    P = to_matrix(pascal_array(), N + 1)
    for n in range(N + 1):
        for k in range(n + 1):
            want = 1 if k in (0, n) else P[n - 1, k - 1] + P[n - 1, k]
            assert P[n, k] == want


def test_entry_outside_order():
    with pytest.raises(IndexError):
        entry(pascal_array(4), 5, 0)
    with pytest.raises(IndexError):
        to_matrix(pascal_array(4), 6)


def test_multiply_by_inverse_is_identity():
    R = pre_fcr_array(3, N)
    assert multiply(R, inverse(R)) == Riordan.identity(N)


def test_inverse_of_coefficient_array_r3():
    R = inverse(Riordan(1 / (1 + x()), x() / (1 + x()) ** 3))
    assert to_matrix(R, 5).ints() == printed.MOMENT[3][:5]


def test_fundamental_theorem_partial_sums():
    got = apply(Riordan(1 / (1 - x()), x()), 1 / (1 - x()))
    M = to_matrix(Riordan(1 / (1 - x()), x()), N + 1)
    assert got.ints() == [sum(M[n, k] for k in range(n + 1)) for n in range(N + 1)] == list(range(1, N + 2))


def test_row_sums():
    assert row_sums(Riordan.identity(N)).ints() == [1] * (N + 1)
    R = pre_fcr_array(3, N)
    M = to_matrix(R, N + 1)
    assert row_sums(R).ints() == [sum(M[n, k] for k in range(n + 1)) for n in range(N + 1)]


def test_diagonal_sums_of_pascal_are_fibonacci():
    P = to_matrix(pascal_array(), N + 1)
    brute = [sum(P[n - k, k] for k in range(n // 2 + 1)) for n in range(N + 1)]
    assert diagonal_sums(pascal_array()).ints() == brute
    assert brute[:5] == [1, 1, 2, 3, 5]


def test_rectify_pascal_is_binomial_grid():
    S = rectify(pascal_array(), 6, 6)
    assert S.ints() == [[comb(n + k, k) for k in range(6)] for n in range(6)]


def test_rectify_ternary_row():
    t = gr_series(3, N)
    assert rectify(Riordan.bell(t), 4, 7).ints()[2] == printed.FC_SQUARE_3[2]


def test_downshift_inverts_rectify_for_bell():
    R = Riordan.bell(gr_series(4, N))
    assert downshift(rectify(R, 7, 7)) == to_matrix(R, 7)


def test_right_binomial_transpose_rows():
    assert right_binomial_transpose(pre_fcr_array(3, 8), 7).ints()[3] == printed.FC_SQUARE_3[3]
    assert right_binomial_transpose(pre_fcr_array(4, 8), 7).ints()[2] == printed.FC_SQUARE_4[2]


def test_right_binomial_transpose_identity():
    S = right_binomial_transpose(Riordan.identity(6), 6)
    assert S.ints() == [[comb(k, n) for k in range(6)] for n in range(6)]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_binomial_transpose_equals_rectification(r):
    R = pre_fcr_array(r, 16)
    assert right_binomial_transpose(R, 8) == rectify(Riordan.bell(gr_series(r, 16)), 8, 8)


def test_downshift_product_theorem_r3():
    D = downshift_product_theorem(pre_fcr_array(3, N))
    assert to_matrix(D, 4).ints() == printed.TERNARY[:4]


def test_downshift_of_identity():
    D = downshift(right_binomial_transpose(Riordan.identity(8), 8))
    assert D == to_matrix(Riordan(Series.const(1, 8), x(8) * (1 + x(8))), 8)


@pytest.mark.parametrize("r", [3, 4])
def test_bell_array_factors_through_coefficient_array(r):
    lhs = Riordan.bell(gr_series(r, N))
    rhs = multiply(inverse(Riordan(1 / (1 + x()), x() / (1 + x()) ** r)),
                   Riordan(Series.const(1, N), x() / (1 + x()) ** (r - 1)))
    assert lhs == rhs


def test_almost_riordan_rendering():
    core = pascal_array(6)
    A = AlmostRiordan((Series([7, 1, 2, 3, 4, 5, 6]),), core)
    M = A.to_matrix(5)
    assert [M[n, 0] for n in range(5)] == [7, 1, 2, 3, 4]
    assert all(M[n + 1, k + 1] == comb(n, k) for n in range(4) for k in range(n + 1))
    with pytest.raises(ValueError):
        AlmostRiordan((Series([1, 0]), Series([1, 0]), Series([0, 0])), core)


def test_square_grid_rejects_ragged():
    with pytest.raises(ValueError):
        SquareGrid([[1, 2], [3]])


@settings(max_examples=100, deadline=None)
@given(riordan(8), riordan(8), riordan(8))
def test_group_axioms(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, Riordan.identity(8)) == a == multiply(Riordan.identity(8), a)
    assert multiply(a, inverse(a)) == Riordan.identity(8)
    assert multiply(inverse(a), a) == Riordan.identity(8)


@settings(max_examples=50, deadline=None)
@given(riordan(8), riordan(8))
def test_matrix_of_product_is_product_of_matrices(a, b):
    got = to_matrix(multiply(a, b), 9).dense()
    assert got == matmul(to_matrix(a, 9).dense(), to_matrix(b, 9).dense())


@settings(max_examples=50, deadline=None)
@given(riordan(N), series(N))
def test_fundamental_theorem_is_matrix_vector(R, h):
    M = to_matrix(R, N + 1)
    want = [sum((M[n, k] * h[k] for k in range(n + 1)), Fraction(0)) for n in range(N + 1)]
    assert list(apply(R, h).coeffs) == want


@settings(max_examples=50, deadline=None)
@given(riordan(8))
def test_bivariate_coefficients(R):
    # [x^n y^k] g/(1 - y f): expand the geometric series in y term by term
    term = R.g
    for k in range(9):
        assert all(term[n] == entry(R, n, k) for n in range(9))
        term = term * R.f


@settings(max_examples=30, deadline=None)
@given(riordan(10))
def test_downshift_identities(R):
    assert check_downshift_product(R, 8)
    assert check_downshift_inverse(R, 8)


def test_fc_square_misprints_differ_only_where_recorded():
    S = right_binomial_transpose(pre_fcr_array(4, 8), 7).ints()
    for n in range(7):
        for k in range(7):
            assert S[n][k] == fc(n, k, 4)
            want = printed.FC_SQUARE_4_MISPRINTS.get((n, k), printed.FC_SQUARE_4[n][k])
            assert S[n][k] == want
