"""Identity suites run by ``riordan-fc verify``; each returns a :class:`Report`."""

from __future__ import annotations

from typing import Callable

from . import dortho, paths
from .fusscatalan import (
    coefficient_array,
    fc,
    fc_number,
    fcr,
    fcr_array,
    pre_fcr_array,
    section9_examples,
    tau,
    verify_canonical_factorization,
)
from .production import az_pair, from_az, product_az, production_matrix
from .report import Report
from .riordan import Riordan, right_binomial_transpose, to_matrix
from .series import Series, div, gr_series, revert


def reversions(order: int) -> Report:
    rep = Report("reversions")
    x = Series.x(order)
    for r in range(0, 7):
        lhs = revert(gr_series(r, order).shift_up())
        rhs = div(Series.const(1, order), gr_series(r - 1, order)).shift_up()
        rep.add(f"Rev(x g_{r}) = x/g_{r - 1}", lhs.agrees_with(rhs))
    for r in range(1, 7):
        lhs = revert((gr_series(r, order) ** r).shift_up())
        rep.add(f"Rev(x g_{r}^{r}) = x/(1+x)^{r}", lhs.agrees_with(x / (1 + x) ** r))
    for r in range(1, 5):
        g = gr_series(r, order)
        rep.expect_equal(f"g_{r} coefficients are C(rn+1,n)/(rn+1)", g.coeffs,
                         [fc_number(n, r) for n in range(order + 1)])
    return rep


def _az_samples(order: int) -> list[tuple[str, Riordan]]:
    out = []
    for r in (2, 3, 4):
        out.append((f"(1/(1+x), x/(1+x)^{r})", coefficient_array(r, order)))
        out.append((f"(g_{r}, x g_{r}^{r})", pre_fcr_array(r, order)))
        out.append((f"(g_{r}, x g_{r})", fcr_array(r, order)))
    return out


def az(order: int) -> Report:
    """Production matrices against A/Z, ``from_az`` round trips, and the product rule."""
    rep = Report("az")
    rows = min(order, 10)
    samples = _az_samples(order)
    for name, R in samples:
        pair = az_pair(R)
        P = production_matrix(to_matrix(R, rows + 1))
        rep.expect_equal(f"{name}: Z column", P.z_column(), pair.Z.coeffs[:rows])
        band = [P[i, j] for i in range(rows) for j in range(1, min(i + 2, rows))]
        want = [pair.A[i - j + 1] for i in range(rows) for j in range(1, min(i + 2, rows))]
        rep.expect_equal(f"{name}: A band", band, want)
        rep.add(f"{name}: from_az round trip", from_az(pair, R.order - 1).agrees_with(R))
    for (n1, R1), (n2, R2) in zip(samples, samples[1:]):
        got = product_az(az_pair(R1), az_pair(R2))
        want = az_pair(R1 * R2)
        rep.add(f"A/Z of {n1}·{n2}", got.A.agrees_with(want.A) and got.Z.agrees_with(want.Z))
    return rep


def factorizations(order: int) -> Report:
    rep = Report("factorizations")
    rows = min(order, 12) + 1
    for r in (2, 3, 4):
        rep.add(f"canonical factorization r={r}", verify_canonical_factorization(r, order))
        M = to_matrix(pre_fcr_array(r, order), rows)
        rep.add(f"tau closed form r={r}",
                all(M[n, k] == tau(n, k, r) for n in range(rows) for k in range(n + 1)))
        B = to_matrix(fcr_array(r, order), rows)
        rep.add(f"FCR closed form r={r}",
                all(B[n, k] == fcr(n, k, r) for n in range(rows) for k in range(n + 1)))
        size = order // 2 + 1
        S = right_binomial_transpose(pre_fcr_array(r, order), size)
        rep.add(f"FC square is R·B^T r={r}",
                all(S[n, k] == fc(n, k, r) for n in range(size) for k in range(size)))
    return rep


def raney(order: int) -> Report:
    """Path counts against closed forms; ``order`` bounds ``n``."""
    rep = Report("raney")
    for r in (2, 3, 4):
        ss = paths.raney_steps(r)
        got = [paths.count_paths(ss, (r * n, 0)) for n in range(order + 1)]
        rep.expect_equal(f"Raney r={r}, n<={order}", got, [fc_number(n, r) for n in range(order + 1)])
    tern = paths.left_factor_triangle(paths.StepSet.parse("1,1;-1,-2"), 7)
    rep.add("ternary left factors are (t, x t)", tern == to_matrix(fcr_array(3, 8), 7))
    res = paths.triangle_recurrence_check(8, 3)
    rep.add("triangle and square recurrences, r=3", res.ok, str(res.where))
    return rep


def dortho_suite(order: int) -> Report:
    rep = Report("dortho")
    rows = min(order, 10)
    for r in (2, 3, 4):
        rec = dortho.special_recurrence(r)
        R = dortho.coefficient_array_riordan(rec, order)
        rep.add(f"r={r}: coefficient array is (1/(1+x), x/(1+x)^{r})",
                isinstance(R, Riordan) and R.agrees_with(coefficient_array(r, order)))
        P = dortho.moment_production(rec, rows)
        rep.add(f"r={r}: moment production is {r + 1}-diagonal and matches the pattern",
                P == dortho.band_pattern(rec, P.size))
    generic = [
        dortho.Recurrence([5, 7], [2]),
        dortho.Recurrence([1, 2, 3], [1, 4, -2]),
        dortho.Recurrence([2, -1, 3, 1], [1, 2, 3, 4, 5, 6]),
    ]
    for rec in generic:
        P = dortho.moment_production(rec, rows)
        rep.add(f"tail {[str(v) for v in rec.tail]}: production matches the pattern",
                P == dortho.band_pattern(rec, P.size))
        rep.add(f"tail {[str(v) for v in rec.tail]}: array structure found",
                dortho.coefficient_array_riordan(rec, order) is not None)
    return rep


def section9(order: int) -> Report:
    return section9_examples(max(order, 12))


SUITES: dict[str, Callable[[int], Report]] = {
    "reversions": reversions,
    "az": az,
    "factorizations": factorizations,
    "raney": raney,
    "dortho": dortho_suite,
    "section9": section9,
}


def _guarded(name: str, fn: Callable[[int], Report], order: int) -> Report:
    """A crashing suite becomes a single failed check instead of an exception."""
    try:
        return fn(order)
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        rep = Report(name)
        rep.add("suite completed", False, f"{type(exc).__name__}: {exc}")
        return rep


def run(name: str, order: int) -> list[Report]:
    if name == "all":
        return [_guarded(n, fn, order) for n, fn in SUITES.items()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return [_guarded(name, SUITES[name], order)]
