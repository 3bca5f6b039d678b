"""Lattice-path counting: a memo-free DP, an exhaustive DFS, and the path triangles.

Paths start at ``(0, 0)``; with ``floor`` set every visited point has
``y >= 0``. Step colours multiply path weights.

Triangle indexing: in ``"x"`` mode entry ``(n, k)`` counts paths ending at the
point ``(n, k)``; in ``"y"`` mode it counts paths ending at ``(n - k, k)``,
i.e. the downshift of the grid of endpoint counts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .riordan import LTMatrix, SquareGrid
from .series import Series


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    dx: int
    dy: int
    colors: int = 1


@dataclass(frozen=True)
class StepSet:
    steps: tuple[Step, ...]

    def __init__(self, steps):
        steps = tuple(s if isinstance(s, Step) else Step(*s) for s in steps)
        if not steps:
            raise PathError("step set is empty")
        for s in steps:
            if s.colors < 1:
                raise PathError(f"step {s} needs at least one colour")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def parse(cls, text: str) -> StepSet:
        """Parse ``"dx,dy[:colors];dx,dy[:colors];..."``."""
        steps = []
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            coords, _, colors = part.partition(":")
            try:
                dx, dy = (int(v) for v in coords.split(","))
                steps.append(Step(dx, dy, int(colors) if colors else 1))
            except ValueError:
                raise PathError(f"bad step {part!r}; expected dx,dy[:colors]") from None
        return cls(steps)

    def __str__(self) -> str:
        return ";".join(f"{s.dx},{s.dy}" + (f":{s.colors}" if s.colors != 1 else "") for s in self.steps)


def raney_steps(r: int) -> StepSet:
    """Up steps ``(1, 1)`` and down steps ``(1, 1 - r)``."""
    return StepSet([(1, 1), (1, 1 - r)])


def progress_functional(ss: StepSet) -> tuple[int, int]:
    """Integer ``(λ, μ)`` with ``λ dx + μ dy >= 1`` for every step.

    Exists iff the origin is not in the convex hull of the steps; otherwise
    paths can wander forever and counting is undefined.
    """
    vecs = [(s.dx, s.dy) for s in ss.steps]
    cands = set(vecs)
    for dx, dy in vecs:
        cands.add((-dy, dx))
        cands.add((dy, -dx))
    weak = [c for c in cands if all(c[0] * dx + c[1] * dy >= 0 for dx, dy in vecs)]
    trials = list(weak) + [(p[0] + q[0], p[1] + q[1]) for p in weak for q in weak]
    for lam, mu in trials:
        if all(lam * dx + mu * dy > 0 for dx, dy in vecs):
            return lam, mu
    raise PathError("non-enumerable step set")


def count_paths(ss: StepSet, target: tuple[int, int], floor: bool = True) -> int:
    """Colour-weighted number of step sequences from the origin to ``target``."""
    lam, mu = progress_functional(ss)
    budget = lam * target[0] + mu * target[1]
    if budget < 0:
        return 0
    weights = [(s.dx, s.dy, s.colors, lam * s.dx + mu * s.dy) for s in ss.steps]
    levels: dict[int, dict[tuple[int, int], int]] = defaultdict(dict)
    levels[0][(0, 0)] = 1
    for level in range(budget + 1):
        layer = levels.pop(level, None)
        if not layer:
            continue
        if level == budget:
            return layer.get(tuple(target), 0)
        for (px, py), ways in layer.items():
            for dx, dy, colors, cost in weights:
                nxt = level + cost
                if nxt > budget:
                    continue
                q = (px + dx, py + dy)
                if floor and q[1] < 0:
                    continue
                bucket = levels[nxt]
                bucket[q] = bucket.get(q, 0) + ways * colors
    return 0


def enumerate_paths(ss: StepSet, target: tuple[int, int], floor: bool = True) -> Iterator[tuple[int, ...]]:
    """Every step-index sequence reaching ``target`` (colours not expanded)."""
    lam, mu = progress_functional(ss)
    budget = lam * target[0] + mu * target[1]
    steps = ss.steps

    def walk(x, y, spent, prefix):
        if (x, y) == tuple(target):
            yield tuple(prefix)
        for i, s in enumerate(steps):
            cost = lam * s.dx + mu * s.dy
            if spent + cost > budget or (floor and y + s.dy < 0):
                continue
            prefix.append(i)
            yield from walk(x + s.dx, y + s.dy, spent + cost, prefix)
            prefix.pop()

    if budget >= 0:
        yield from walk(0, 0, 0, [])


def count_paths_dfs(ss: StepSet, target: tuple[int, int], floor: bool = True) -> int:
    total = 0
    for seq in enumerate_paths(ss, target, floor):
        w = 1
        for i in seq:
            w *= ss.steps[i].colors
        total += w
    return total


def excursion_unit(ss: StepSet) -> tuple[int, int]:
    """Smallest horizontal displacement of a height-neutral step combination.

    ``(0, 0)`` when no non-empty combination returns to its starting height.
    """
    progress_functional(ss)
    xs = [s.dx for s in ss.steps if s.dy == 0]
    ups = [s for s in ss.steps if s.dy > 0]
    downs = [s for s in ss.steps if s.dy < 0]
    for u in ups:
        for d in downs:
            g = gcd(u.dy, -d.dy)
            xs.append((-d.dy // g) * u.dx + (u.dy // g) * d.dx)
    if not xs:
        return (0, 0)
    if any(v <= 0 for v in xs) and any(v >= 0 for v in xs):
        raise PathError("height-neutral combinations do not share a direction")
    unit = 0
    for v in xs:
        unit = gcd(unit, v)
    return (unit if xs[0] > 0 else -unit, 0)


def path_grid(ss: StepSet, rows: int, cols: int, floor: bool = True) -> SquareGrid:
    """Grid whose entry ``(n, k)`` counts paths ending at the point ``(n, k)``."""
    return SquareGrid([[count_paths(ss, (n, k), floor) for k in range(cols)] for n in range(rows)])


def left_factor_triangle(ss: StepSet, rows: int, mode: str = "x", floor: bool = True) -> LTMatrix:
    if mode == "x":
        return LTMatrix([[count_paths(ss, (n, k), floor) for k in range(n + 1)] for n in range(rows)])
    if mode == "y":
        return LTMatrix([[count_paths(ss, (n - k, k), floor) for k in range(n + 1)] for n in range(rows)])
    raise ValueError(f"unknown mode {mode!r}; use 'x' or 'y'")


@dataclass(frozen=True)
class RecurrenceCheck:
    ok: bool
    where: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_triangle_recurrence(T: LTMatrix, r: int, rows: int) -> RecurrenceCheck:
    """``t(n,k) = t(n-1,k-1) + t(n+r-2,k+r-1)``, the step set ``{(1,1), (2-r,1-r)}``.

    ``T`` must have at least ``rows + r - 2`` rows.
    """
    def t(n, k):
        if n < 0 or k < 0 or k > n:
            return 0
        return T[n, k]

    if t(0, 0) != 1:
        return RecurrenceCheck(False, ("triangle", 0, 0))
    for n in range(rows):
        for k in range(n + 1):
            if (n, k) == (0, 0):
                continue
            if t(n, k) != t(n - 1, k - 1) + t(n + r - 2, k + r - 1):
                return RecurrenceCheck(False, ("triangle", n, k))
    return RecurrenceCheck(True)


def check_square_recurrence(S: SquareGrid, r: int, rows: int) -> RecurrenceCheck:
    """``t(n,k) = t(n,k-1) + t(n-1,k+r-1)``, the step set ``{(0,1), (1,1-r)}``.

    ``S`` must have ``rows`` rows and at least ``rows + r - 1`` columns.
    """
    def t(n, k):
        if n < 0 or k < 0:
            return 0
        return S[n, k]

    if t(0, 0) != 1:
        return RecurrenceCheck(False, ("square", 0, 0))
    for n in range(rows):
        for k in range(rows):
            if (n, k) == (0, 0):
                continue
            if t(n, k) != t(n, k - 1) + t(n - 1, k + r - 1):
                return RecurrenceCheck(False, ("square", n, k))
    return RecurrenceCheck(True)


def triangle_recurrence_check(rows: int, r: int = 3) -> RecurrenceCheck:
    """Both path recurrences on the closed-form FCR triangle and FC square."""
    from .fusscatalan import fc, fcr

    if rows < 3:
        raise ValueError("rows must be at least 3")
    T = LTMatrix([[fcr(n, k, r) for k in range(n + 1)] for n in range(rows + r)])
    res = check_triangle_recurrence(T, r, rows)
    if not res:
        return res
    S = SquareGrid([[fc(n, k, r) for k in range(rows + r)] for n in range(rows)])
    return check_square_recurrence(S, r, rows)


def step_set_closed_form(alpha, beta, gamma, order: int) -> Series:
    """``u`` with ``u/x = 1 + αxu + βxu² + γu²/x``.

    Uses the quadratic-formula expansion when ``γ != 0``, fixed-point
    iteration otherwise; the defining relation is asserted either way.
    """
    from .series import sqrt

    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    x = Series.x(order)
    if gamma != 0:
        disc = 1 - 4 * gamma * x - 2 * alpha * x ** 2 - 4 * beta * x ** 3 + alpha ** 2 * x ** 4
        u = (1 - alpha * x ** 2 - sqrt(disc)) / (2 * (gamma + beta * x ** 2))
    else:
        u = Series.const(0, order)
        for _ in range(order):
            u = x + alpha * x * x * u + beta * x * x * u * u
    residual = u - x - alpha * x * x * u - beta * x * x * u * u - gamma * u * u
    if any(residual.coeffs):
        raise ArithmeticError("defining relation fails; series arithmetic is broken")
    return u


def step_set_for(alpha: int, beta: int, gamma: int) -> StepSet:
    """``{(1,1), α·(2,0), β·(2,-1), γ·(0,-1)}``; zero multiplicities are dropped."""
    steps = [Step(1, 1)]
    for (dx, dy), c in (((2, 0), alpha), ((2, -1), beta), ((0, -1), gamma)):
        if c < 0:
            raise PathError("colour counts must be non-negative integers")
        if c:
            steps.append(Step(dx, dy, int(c)))
    return StepSet(steps)
