"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the coefficients of ``x^0 .. x^order``. Binary
operations truncate to the smaller order; nothing is silently re-extended.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    pass


class Series:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = [Fraction(v) for v in coeffs]
        if order is None:
            if not c:
                raise SeriesError("a series needs at least one coefficient")
        else:
            if order < 0:
                raise SeriesError("order must be non-negative")
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        self._c = tuple(c)

    # constructors
    @classmethod
    def const(cls, value: Scalar, order: int) -> Series:
        return cls([value], order)

    @classmethod
    def x(cls, order: int) -> Series:
        return cls([0, 1], order)

    @classmethod
    def poly(cls, coeffs: Sequence[Scalar], order: int) -> Series:
        """Polynomial with ascending ``coeffs``, truncated or padded to ``order``."""
        return cls(coeffs, order)

    # basic access
    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def valuation(self) -> int | None:
        for i, v in enumerate(self._c):
            if v:
                return i
        return None

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self._c[: order + 1])

    def ints(self) -> list[int]:
        """Coefficients as Python ints; raises if any is fractional."""
        out = []
        for n, v in enumerate(self._c):
            if v.denominator != 1:
                raise SeriesError(f"coefficient {n} = {v} is not integral")
            out.append(v.numerator)
        return out

    def __repr__(self) -> str:
        return f"Series({[str(v) for v in self._c]}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def agrees_with(self, other: Series) -> bool:
        """Equality through the common truncation order."""
        m = min(self.order, other.order)
        return self._c[: m + 1] == other._c[: m + 1]

    # arithmetic
    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.const(other, self.order)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = min(self.order, o.order)
        return Series([self._c[i] + o._c[i] for i in range(m + 1)])

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-v for v in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([v * other for v in self._c])
        if not isinstance(other, Series):
            return NotImplemented
        m = min(self.order, other.order)
        a, b = self._c, other._c
        out = []
        for n in range(m + 1):
            s = Fraction(0)
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    s += a[i] * b[n - i]
            out.append(s)
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([v / other for v in self._c])
        if not isinstance(other, Series):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other):
        return div(Series.const(other, self.order), self)

    def __pow__(self, e: int) -> Series:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return div(Series.const(1, self.order), self ** (-e))
        result = Series.const(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift_up(self, k: int = 1) -> Series:
        """Multiply by ``x^k`` keeping the same order."""
        return Series([0] * k + list(self._c[: self.order + 1 - k]), self.order)

    def divide_x(self, k: int = 1) -> Series:
        """Exact division by ``x^k``; the order drops by ``k``."""
        if any(self._c[:k]):
            raise SeriesError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise SeriesError("nothing left after division")
        return Series(self._c[k:])

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    return a * b


def div(a: Series, b: Series) -> Series:
    """Quotient ``q`` with ``q*b = a`` through ``min(a.order, b.order)``."""
    if b._c[0] == 0:
        raise SeriesError("non-unit divisor")
    m = min(a.order, b.order)
    inv0 = 1 / b._c[0]
    q: list[Fraction] = []
    for n in range(m + 1):
        s = a._c[n]
        for i in range(1, n + 1):
            if b._c[i]:
                s -= b._c[i] * q[n - i]
        q.append(s * inv0)
    return Series(q)


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner)`` by Horner's rule; ``inner`` must have zero constant term."""
    if inner._c[0] != 0:
        raise SeriesError("inner series must have valuation ≥ 1")
    m = min(outer.order, inner.order)
    inner = inner.truncate(m)
    result = Series.const(outer._c[m], m)
    for i in range(m - 1, -1, -1):
        result = result * inner + outer._c[i]
    return result


def revert(f: Series) -> Series:
    """Compositional inverse by Lagrange inversion.

    ``[x^n] rev(f) = (1/n) [x^(n-1)] (x/f)^n``; the result has the order of ``f``.
    """
    if f.order < 1 or f._c[0] != 0 or f._c[1] == 0:
        raise SeriesError("not compositionally invertible")
    N = f.order
    phi = div(Series.const(1, N - 1), f.divide_x())  # x/f through order N-1
    out = [Fraction(0)]
    power = Series.const(1, N - 1)
    for n in range(1, N + 1):
        power = power * phi
        out.append(power._c[n - 1] / n)
    return Series(out)


def sqrt(a: Series) -> Series:
    """Principal square root of a series with constant term 1."""
    if a._c[0] != 1:
        raise SeriesError("sqrt requires unit constant term")
    s = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = a._c[n]
        for i in range(1, n):
            acc -= s[i] * s[n - i]
        s.append(acc / 2)
    return Series(s)


def gr_series(r: int, order: int) -> Series:
    """The solution of ``g = 1 + x g^r`` with ``g(0) = 1``.

    Runs exactly ``order`` fixed-point steps; each step fixes one more
    coefficient.
    """
    if order < 0:
        raise SeriesError("order must be non-negative")
    g = Series.const(1, order)
    for _ in range(order):
        g = 1 + (g ** r).shift_up()
    return g


def gr_series_product(r: int, order: int) -> Series:
    """Same series from the product formula ``prod_{j=0}^{n-2} (rn - j) / n!``."""
    out = []
    for n in range(order + 1):
        p = 1
        for j in range(n - 1):
            p *= r * n - j
        c = Fraction(p, factorial(n))
        if c.denominator != 1:
            raise SeriesError(f"non-integral coefficient {c} at n={n}, r={r}")
        out.append(c)
    return Series(out)
