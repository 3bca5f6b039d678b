"""Riordan arrays ``(g, f)`` and their finite matrix renderings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .series import Series, SeriesError, compose, div, revert


class LTMatrix:
    """Finite lower-triangular matrix; row ``n`` holds entries ``0..n``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence]):
        rs = []
        for n, row in enumerate(rows):
            row = [Fraction(v) for v in row]
            if len(row) < n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, need {n + 1}")
            if any(row[n + 1:]):
                raise ValueError(f"row {n} has nonzero entries above the diagonal")
            rs.append(tuple(row[: n + 1]))
        self.rows = tuple(rs)

    @classmethod
    def identity(cls, size: int) -> LTMatrix:
        return cls([[0] * n + [1] for n in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        n, k = idx
        if not 0 <= n < self.size:
            raise IndexError(f"row {n} outside 0..{self.size - 1}")
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LTMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __repr__(self) -> str:
        return f"LTMatrix({self.to_lists()})"

    def head(self, size: int) -> LTMatrix:
        if size > self.size:
            raise ValueError(f"matrix has only {self.size} rows")
        return LTMatrix(self.rows[:size])

    def dense(self) -> list[list[Fraction]]:
        m = self.size
        return [list(r) + [Fraction(0)] * (m - len(r)) for r in self.rows]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def ints(self) -> list[list[int]]:
        return [[_as_int(v, (n, k)) for k, v in enumerate(r)] for n, r in enumerate(self.rows)]

    def __matmul__(self, other: LTMatrix) -> LTMatrix:
        m = min(self.size, other.size)
        out = []
        for n in range(m):
            out.append([sum((self.rows[n][j] * other.rows[j][k] for j in range(k, n + 1)), Fraction(0))
                        for k in range(n + 1)])
        return LTMatrix(out)

    def inverse(self) -> LTMatrix:
        """Exact inverse by forward substitution."""
        m = self.size
        inv = [[Fraction(0)] * (n + 1) for n in range(m)]
        for k in range(m):
            for n in range(k, m):
                s = Fraction(1) if n == k else Fraction(0)
                for j in range(k, n):
                    s -= self.rows[n][j] * inv[j][k]
                d = self.rows[n][n]
                if d == 0:
                    raise ValueError("not invertible")
                inv[n][k] = s / d
        return LTMatrix(inv)


class SquareGrid:
    """Rectangular exact grid, used for rectifications and Fuss-Catalan squares."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Sequence]):
        es = tuple(tuple(Fraction(v) for v in row) for row in entries)
        if es and any(len(r) != len(es[0]) for r in es):
            raise ValueError("grid rows must have equal length")
        self.entries = es

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), (len(self.entries[0]) if self.entries else 0)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        n, k = idx
        return self.entries[n][k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SquareGrid):
            return self.entries == other.entries
        return NotImplemented

    def __repr__(self) -> str:
        return f"SquareGrid({self.to_lists()})"

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def ints(self) -> list[list[int]]:
        return [[_as_int(v, (n, k)) for k, v in enumerate(r)] for n, r in enumerate(self.entries)]


def _as_int(v: Fraction, where) -> int:
    if v.denominator != 1:
        raise ValueError(f"entry {where} = {v} is not an integer")
    return v.numerator


@dataclass(frozen=True)
class Riordan:
    g: Series
    f: Series

    def __post_init__(self):
        if self.g[0] == 0:
            raise SeriesError("g must have nonzero constant term")
        if self.f.order < 1 or self.f[0] != 0 or self.f[1] == 0:
            raise SeriesError("f must have f(0) = 0 and f'(0) != 0")
        m = min(self.g.order, self.f.order)
        if self.g.order != m:
            object.__setattr__(self, "g", self.g.truncate(m))
        if self.f.order != m:
            object.__setattr__(self, "f", self.f.truncate(m))

    @property
    def order(self) -> int:
        return self.g.order

    @classmethod
    def identity(cls, order: int) -> Riordan:
        return cls(Series.const(1, order), Series.x(order))

    @classmethod
    def bell(cls, g: Series) -> Riordan:
        """The Bell matrix ``(g, x g)``."""
        return cls(g, g.shift_up())

    def truncate(self, order: int) -> Riordan:
        return Riordan(self.g.truncate(order), self.f.truncate(order))

    def agrees_with(self, other: Riordan) -> bool:
        return self.g.agrees_with(other.g) and self.f.agrees_with(other.f)

    def columns(self, count: int) -> list[Series]:
        cols = [self.g]
        for _ in range(1, count):
            cols.append(cols[-1] * self.f)
        return cols

    def entry(self, n: int, k: int) -> Fraction:
        return entry(self, n, k)

    def to_matrix(self, rows: int) -> LTMatrix:
        return to_matrix(self, rows)

    def __mul__(self, other: Riordan) -> Riordan:
        return multiply(self, other)

    def inverse(self) -> Riordan:
        return inverse(self)

    def __call__(self, h: Series) -> Series:
        return apply(self, h)


def entry(R: Riordan, n: int, k: int) -> Fraction:
    if not 0 <= n <= R.order:
        raise IndexError(f"row {n} outside truncation order {R.order}")
    if k < 0 or k > n:
        return Fraction(0)
    return (R.g * R.f ** k)[n]


def to_matrix(R: Riordan, rows: int) -> LTMatrix:
    if rows - 1 > R.order:
        raise IndexError(f"{rows} rows need order ≥ {rows - 1}, have {R.order}")
    cols = R.columns(rows)
    return LTMatrix([[cols[k][n] for k in range(n + 1)] for n in range(rows)])


def multiply(R1: Riordan, R2: Riordan) -> Riordan:
    """``(g, f)·(u, v) = (g·u(f), v(f))``."""
    return Riordan(R1.g * compose(R2.g, R1.f), compose(R2.f, R1.f))


def inverse(R: Riordan) -> Riordan:
    fbar = revert(R.f)
    return Riordan(div(Series.const(1, R.order), compose(R.g, fbar)), fbar)


def apply(R: Riordan, h: Series) -> Series:
    """Fundamental theorem: ``(g, f)·h = g·h(f)``."""
    return R.g * compose(h, R.f)


def row_sums(R: Riordan) -> Series:
    return div(R.g, 1 - R.f)


def diagonal_sums(R: Riordan) -> Series:
    return div(R.g, 1 - R.f.shift_up())


def rectify(R: Riordan, rows: int, cols: int) -> SquareGrid:
    """Grid with entry ``(n, k) = [x^n] g (f/x)^k = t_{n+k,k}``."""
    h = R.f.divide_x()
    if rows > h.order + 1:
        raise IndexError(f"{rows} rectified rows need order ≥ {rows}, have {R.order}")
    g = R.g.truncate(h.order)
    colser = [g]
    for _ in range(1, cols):
        colser.append(colser[-1] * h)
    return SquareGrid([[colser[k][n] for k in range(cols)] for n in range(rows)])


def downshift(S: SquareGrid) -> LTMatrix:
    """Triangle with entry ``(n, k) = S[n-k][k]`` (the substitution ``y -> xy``)."""
    nr, nc = S.shape
    m = min(nr, nc)
    return LTMatrix([[S[n - k, k] for k in range(n + 1)] for n in range(m)])


def right_binomial_transpose(R: Riordan, rows: int, cols: int | None = None) -> SquareGrid:
    """``to_matrix(R) · B^T`` on finite matrices: entry ``sum_j t_{n,j} C(k, j)``."""
    cols = rows if cols is None else cols
    T = to_matrix(R, rows)
    return SquareGrid([[sum((T[n, j] * comb(k, j) for j in range(min(n, k) + 1)), Fraction(0))
                        for k in range(cols)] for n in range(rows)])


def downshift_product_theorem(R: Riordan) -> Riordan:
    """``(g, x(1+f))``, the downshift of ``(g, f)·B^T``."""
    return Riordan(R.g, (1 + R.f).shift_up())


def downshift_inverse_form(R: Riordan) -> Riordan:
    """``(g, f)^(-1) · (1, (1+x) f)``: the downshift of ``(g, f)^(-1)·B^T``."""
    x = Series.x(R.order)
    return multiply(inverse(R), Riordan(Series.const(1, R.order), (1 + x) * R.f))


def check_downshift_product(R: Riordan, rows: int) -> bool:
    lhs = downshift(right_binomial_transpose(R, rows))
    return lhs == to_matrix(downshift_product_theorem(R), rows)


def check_downshift_inverse(R: Riordan, rows: int) -> bool:
    lhs = downshift(right_binomial_transpose(inverse(R), rows))
    return lhs == to_matrix(downshift_inverse_form(R), rows)


@dataclass(frozen=True)
class AlmostRiordan:
    """Lower-triangular matrix whose first ``len(prefix_cols)`` columns are free
    and whose remaining block is the Riordan array ``core``."""

    prefix_cols: tuple[Series, ...]
    core: Riordan

    def __post_init__(self):
        if len(self.prefix_cols) > 2:
            raise ValueError("only almost-Riordan orders 0, 1 and 2 are supported")
        object.__setattr__(self, "prefix_cols", tuple(self.prefix_cols))
        for j, c in enumerate(self.prefix_cols):
            if any(c[i] for i in range(min(j, c.order + 1))):
                raise ValueError(f"prefix column {j} has entries above the diagonal")

    @property
    def width(self) -> int:
        return len(self.prefix_cols)

    def to_matrix(self, rows: int) -> LTMatrix:
        p = self.width
        core = to_matrix(self.core, max(rows - p, 0)) if rows > p else None
        out = []
        for n in range(rows):
            row = [self.prefix_cols[j][n] for j in range(min(p, n + 1))]
            if n >= p:
                row += [core[n - p, k] for k in range(n - p + 1)]
            out.append(row)
        return LTMatrix(out)
