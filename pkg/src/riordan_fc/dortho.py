"""Constant-coefficient d-orthogonal polynomial families (d = 1, 2, 3).

A family is fixed by its tail coefficients ``a, b[, c[, d]]`` and by the
initial polynomials

    P_0 = 1, P_1 = x - α, P_2 = x² - βx - γ, P_3 = x³ - ρx² - σx - τ,

after which ``P_n = (x - a)P_{n-1} - b P_{n-2} - c P_{n-3} - d P_{n-4}``.
Polynomials are stored as ascending coefficient rows of an ``LTMatrix``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .production import ProdMatrix, is_banded, production_matrix
from .riordan import AlmostRiordan, LTMatrix, Riordan, to_matrix
from .series import Series, div


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class Recurrence:
    tail: tuple[Fraction, ...]
    init: tuple[Fraction, ...]

    def __init__(self, tail: Sequence, init: Sequence):
        tail = tuple(Fraction(v) for v in tail)
        init = tuple(Fraction(v) for v in init)
        depth = len(tail) - 1
        if depth not in (1, 2, 3):
            raise ValueError("tail must hold 2, 3 or 4 coefficients (d = 1, 2, 3)")
        need = {1: 1, 2: 3, 3: 6}[depth]
        if len(init) != need:
            raise ValueError(f"d={depth} needs {need} initial parameters, got {len(init)}")
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "init", init)

    @property
    def depth(self) -> int:
        return len(self.tail) - 1

    def initial_polys(self) -> list[list[Fraction]]:
        p = self.init
        polys = [[Fraction(1)], [-p[0], Fraction(1)]]
        if self.depth >= 2:
            polys.append([-p[2], -p[1], Fraction(1)])
        if self.depth >= 3:
            polys.append([-p[5], -p[4], -p[3], Fraction(1)])
        return polys

    def denominator(self, order: int) -> Series:
        """``h = 1 + a x + b x² + ...``."""
        return Series([1, *self.tail], order)


@dataclass(frozen=True)
class PolyFamily:
    coeff_rows: LTMatrix

    def poly(self, n: int) -> list[Fraction]:
        return list(self.coeff_rows.rows[n])

    def moments(self) -> LTMatrix:
        return self.coeff_rows.inverse()


def generate_family(rec: Recurrence, n_max: int) -> PolyFamily:
    polys = rec.initial_polys()[: n_max + 1]
    for n in range(len(polys), n_max + 1):
        nxt = [Fraction(0)] + polys[n - 1]  # x P_{n-1}
        for i, coef in enumerate(rec.tail, start=1):
            for k, v in enumerate(polys[n - i]):
                nxt[k] -= coef * v
        polys.append(nxt)
    return PolyFamily(LTMatrix(polys))


def numerator_polys(rec: Recurrence) -> list[list[Fraction]]:
    """Coefficient of ``x^n`` in ``(h - xy) Σ P_n(y) x^n`` for ``n <= depth``, as polynomials in ``y``.

    The family is a Riordan array exactly when each of these is constant.
    """
    polys = rec.initial_polys()
    out = []
    for n in range(rec.depth + 1):
        acc = list(polys[n]) + [Fraction(0)] * (rec.depth + 1 - len(polys[n]))
        if n >= 1:
            for k, v in enumerate(polys[n - 1]):
                acc[k + 1] -= v
        for i, coef in enumerate(rec.tail, start=1):
            if n - i >= 0:
                for k, v in enumerate(polys[n - i]):
                    acc[k] += coef * v
        out.append(acc)
    return out


def conditions_hold(rec: Recurrence) -> bool:
    """The explicit parameter conditions under which the coefficient array is Riordan."""
    a, b = rec.tail[0], rec.tail[1]
    if rec.depth == 1:
        return True
    alpha, beta, gamma = rec.init[:3]
    if rec.depth == 2:
        return beta - alpha == a
    rho, sigma = rec.init[3], rec.init[4]
    return beta - alpha == a and rho - beta == a and beta * (rho - beta) - gamma + sigma == b


def coefficient_array_riordan(rec: Recurrence, order: int = 16) -> Riordan | AlmostRiordan:
    """The coefficient array as a Riordan array ``(N/h, x/h)`` when the structure allows,
    otherwise as an almost-Riordan array of order ``d - 1``."""
    family = generate_family(rec, order).coeff_rows
    nums = numerator_polys(rec)
    h = rec.denominator(order)
    if all(not any(p[1:]) for p in nums):
        R = Riordan(div(Series([p[0] for p in nums], order), h), div(Series.x(order), h))
        if to_matrix(R, order + 1) != family:
            raise StructureError("predicted Riordan array disagrees with the recurrence")
        return R
    for p in range(1, rec.depth):
        cand = _almost_riordan(family, p, order)
        if cand is not None:
            return cand
    raise StructureError("no (almost-)Riordan structure at this order")


def _almost_riordan(family: LTMatrix, p: int, order: int) -> AlmostRiordan | None:
    m = family.size - p
    if m < 3:
        return None
    col0 = Series([family[n + p, p] for n in range(m)])
    col1 = Series([family[n + p, p + 1] for n in range(m)])
    if col0[0] == 0 or col1[0] != 0 or col1[1] == 0:
        return None
    core = Riordan(col0, div(col1, col0))
    prefix = [Series([family[n, j] for n in range(order + 1)]) for j in range(p)]
    cand = AlmostRiordan(tuple(prefix), core)
    if cand.to_matrix(family.size) != family:
        return None
    return cand


def moment_production(rec: Recurrence, rows: int) -> ProdMatrix:
    """Production matrix of the moment array (inverse of the coefficient array)."""
    moments = generate_family(rec, rows).moments()
    P = production_matrix(moments)
    if not is_banded(P, rec.depth + 1):
        raise StructureError(f"production matrix is not {rec.depth + 2}-diagonal")
    return P


def band_pattern(rec: Recurrence, rows: int) -> ProdMatrix:
    """The production matrix written out symbolically from the parameters.

    The first ``d`` rows come from expanding ``x P_i`` in the basis
    ``P_0 .. P_{i+1}``; afterwards every row repeats ``(.., d, c, b, a, 1)``.
    """
    a = rec.tail[0]
    alpha = rec.init[0]
    P = [[Fraction(0)] * rows for _ in range(rows)]
    head: list[list[Fraction]] = [[alpha]]
    if rec.depth >= 2:
        beta, gamma = rec.init[1], rec.init[2]
        head.append([alpha * (beta - alpha) + gamma, beta - alpha])
    if rec.depth >= 3:
        rho, sigma, tau = rec.init[3:]
        head.append([
            -alpha * (beta * (beta - rho) + gamma - sigma) - gamma * (beta - rho) + tau,
            beta * (rho - beta) - gamma + sigma,
            rho - beta,
        ])
    for i in range(rows):
        if i + 1 < rows:
            P[i][i + 1] = Fraction(1)
        if i < len(head):
            for j, v in enumerate(head[i]):
                P[i][j] = v
        else:
            for off, coef in enumerate(rec.tail):
                if i - off >= 0:
                    P[i][i - off] = coef
    return ProdMatrix(P)


def special_recurrence(r: int) -> Recurrence:
    """The family whose moment array is ``(g_r, x g_r^r)``: ``A = (1+x)^r``, ``Z = (1+x)^(r-1)``."""
    if r not in (2, 3, 4):
        raise ValueError("special families exist here for r = 2, 3, 4 (d = r - 1)")

    def prod(i: int, j: int) -> int:
        return comb(r - 1, i) if j == 0 else comb(r, i - j + 1)

    polys = [[Fraction(1)]]
    for n in range(r - 1):
        nxt = [Fraction(0)] + polys[n]
        for j in range(n + 1):
            for k, v in enumerate(polys[j]):
                nxt[k] -= prod(n, j) * v
        polys.append(nxt)
    init = [-polys[1][0]]
    if r >= 3:
        init += [-polys[2][1], -polys[2][0]]
    if r >= 4:
        init += [-polys[3][2], -polys[3][1], -polys[3][0]]
    return Recurrence([comb(r, i) for i in range(1, r + 1)], init)
