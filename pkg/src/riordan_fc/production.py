"""Production matrices and the A- and Z-sequences of Riordan arrays."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .riordan import LTMatrix, Riordan, inverse
from .series import Series, compose, div, revert


class ProdMatrix:
    """Finite lower-Hessenberg matrix ``P = M^-1 · M̄``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rs = tuple(tuple(Fraction(v) for v in r) for r in rows)
        m = len(rs)
        for i, r in enumerate(rs):
            if len(r) != m:
                raise ValueError("production matrix must be square")
            if any(r[i + 2:]):
                raise ValueError(f"row {i} is not lower-Hessenberg")
        self.rows = rs

    @classmethod
    def shift(cls, size: int) -> ProdMatrix:
        return cls([[1 if j == i + 1 else 0 for j in range(size)] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ProdMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __repr__(self) -> str:
        return f"ProdMatrix({[[str(v) for v in r] for r in self.rows]})"

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def head(self, size: int) -> ProdMatrix:
        return ProdMatrix([r[:size] for r in self.rows[:size]])

    def z_column(self) -> list[Fraction]:
        return [r[0] for r in self.rows]

    def a_column(self) -> list[Fraction]:
        """``a_0, a_1, ...`` read down column 1."""
        return [r[1] for r in self.rows]


def production_matrix(M: LTMatrix) -> ProdMatrix:
    """``M^-1 · M̄`` by forward substitution; the result has one row fewer than ``M``.

    Row ``i`` of the product only touches rows ``0..i+1`` of ``M``, so every
    returned entry is exact.
    """
    m = M.size
    if m < 2:
        raise ValueError("need at least 2 rows")
    size = m - 1
    P = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        d = M[i, i]
        if d == 0:
            raise ValueError("not invertible")
        for j in range(min(i + 2, size)):
            s = M[i + 1, j]
            for l in range(i):
                s -= M[i, l] * P[l][j]
            P[i][j] = s / d
    return ProdMatrix(P)


def is_banded(P: ProdMatrix, bandwidth: int) -> bool:
    """True iff every entry ``(i, j)`` with ``i - j >= bandwidth`` vanishes."""
    return all(P[i, j] == 0 for i in range(P.size) for j in range(P.size) if i - j >= bandwidth)


@dataclass(frozen=True)
class AZPair:
    A: Series
    Z: Series

    def __post_init__(self):
        if self.A[0] == 0:
            raise ValueError("A(0) must be nonzero")


def a_sequence(R: Riordan) -> Series:
    """``A = x / f̄``; order drops by one."""
    fbar = revert(R.f)
    return div(Series.const(1, R.order - 1), fbar.divide_x())


def z_sequence(R: Riordan) -> Series:
    """``Z = (1 - g_0 / g(f̄)) / f̄``; order drops by one."""
    fbar = revert(R.f)
    h = 1 - div(Series.const(R.g[0], R.order), compose(R.g, fbar))
    return div(h.divide_x(), fbar.divide_x())


def az_pair(R: Riordan) -> AZPair:
    return AZPair(a_sequence(R), z_sequence(R))


def from_az(az: AZPair, order: int) -> Riordan:
    """The array with ``g(0) = 1`` whose A- and Z-sequences are ``az``.

    Inverts ``((A - xZ)/A, x/A)``; ``A`` and ``Z`` must be known through ``order``.
    """
    if az.A.order < order or az.Z.order < order:
        raise ValueError(f"A and Z must be known through order {order}")
    A = az.A.truncate(order)
    Z = az.Z.truncate(order)
    g_inv = div(A - Z.shift_up(), A)
    f_inv = div(Series.const(1, order), A).shift_up()
    return inverse(Riordan(g_inv, f_inv))


def product_az(az1: AZPair, az2: AZPair) -> AZPair:
    """A- and Z-sequences of ``R1·R2`` from those of the factors."""
    A1, Z1, A2, Z2 = az1.A, az1.Z, az2.A, az2.Z
    m = min(A1.order, Z1.order, A2.order, Z2.order)
    A1, Z1, A2, Z2 = (s.truncate(m) for s in (A1, Z1, A2, Z2))
    x_over_a2 = div(Series.const(1, m), A2).shift_up()
    A3 = A2 * compose(A1, x_over_a2)
    Z3 = div(Z2 * A3, A2) + compose(Z1, x_over_a2) * (1 - div(Z2.shift_up(), A2))
    return AZPair(A3, Z3)
