"""Family sweeps over discriminants.

Two families are swept: fixed q with D running over all monic squarefree
polynomials of odd degree (Newman constants should creep up to 0 as the genus
grows), and a fixed integer cubic reduced modulo every odd prime p, where the
genus-1 closed form ties Lambda to the Frobenius trace a_p and the angle
statistics follow the semicircle law.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from .finite_field import check_odd_prime
from .fp_poly import (
    FpPolynomial,
    is_squarefree,
    monic_by_index,
    reduce_int_poly,
)
from .lfunction import NumericalError, build_lfunction, good_pair_check
from .newman import (
    NewmanEstimate,
    double_zero_lower_bound,
    lambda_bisect,
)

__all__ = [
    "BadReduction",
    "SatoTateRecord",
    "SweepItem",
    "SweepReport",
    "F3_GENUS_SERIES",
    "cubic_discriminant",
    "good_pair_check",
    "ks_distance",
    "primes_up_to",
    "sato_tate_sweep",
    "semicircle_cdf",
    "sweep_fixed_q",
    "trace_of_frobenius",
]

# One discriminant per genus 1..7 over F_3, each with a notably small
# double-zero lower bound; drives the `table` subcommand and the trend demo.
F3_GENUS_SERIES = (
    (1, 2, 0, 1),
    (1, 1, 0, 1, 0, 1),
    (2, 2, 2, 1, 0, 2, 0, 1),
    (1, 1, 1, 1, 1, 0, 1, 0, 0, 1),
    (1, 2, 1, 0, 2, 2, 2, 2, 1, 2, 0, 1),
    (1, 2, 0, 1, 2, 0, 2, 2, 0, 0, 1, 2, 0, 1),
    (2, 1, 2, 1, 0, 0, 2, 0, 1, 2, 0, 0, 0, 0, 2, 1),
)


class BadReduction(ValueError):
    """The reduction of an integer polynomial mod p is not a good pair."""


@dataclass(frozen=True)
class SweepItem:
    """One discriminant's result inside a fixed-q sweep."""

    degree: int
    index: int
    d_coeffs: tuple
    c: tuple
    estimate: NewmanEstimate | None
    error: str | None = None


@dataclass(frozen=True)
class SatoTateRecord:
    """Per-prime record for a fixed integer cubic: trace a_p, the angle
    theta_p with cos theta_p = a_p / (2 sqrt p), and the genus-1 Newman
    constant log(|a_p| / (2 sqrt p)) (-inf exactly when a_p = 0)."""

    p: int
    a_p: int | None
    theta_p: float | None
    lambda_p: float | None
    skipped: str | None = None


@dataclass(frozen=True)
class SweepReport:
    """Outcome of a family sweep: ordered per-item results, counts, the
    running supremum after each item, per-key bests, and a statistics block."""

    family: str
    items: tuple
    processed: int
    skipped: int
    running_sup: tuple
    best_per_genus: dict
    best_overall: SweepItem | None
    statistics: dict


def primes_up_to(n: int) -> list:
    if n < 2:
        return []
    mark = bytearray(n + 1)
    out = []
    for v in range(2, n + 1):
        if not mark[v]:
            out.append(v)
            for w in range(v * v, n + 1, v):
                mark[w] = 1
    return out


def _estimate(q: int, D: FpPolynomial, method: str):
    L = build_lfunction(q, D, mode="half")
    if method == "double_zero":
        return L.c, double_zero_lower_bound(L)
    if method == "bisect":
        return L.c, lambda_bisect(L)
    raise ValueError("method must be 'double_zero' or 'bisect'")


def _sweep_task(args):
    q, degree, index, method = args
    D = monic_by_index(q, degree, index)
    if not is_squarefree(D):
        return (degree, index, "skip", None, None, None)
    try:
        c, est = _estimate(q, D, method)
        return (degree, index, "ok", D.coeffs, c, est)
    except Exception as e:  # recorded, never fatal to the sweep
        return (degree, index, "error", D.coeffs, None, "%s: %s" % (type(e).__name__, e))


def sweep_fixed_q(
    q: int,
    max_genus: int,
    method: str = "double_zero",
    workers: int = 1,
    start: tuple | None = None,
    on_item=None,
) -> SweepReport:
    """Estimate Lambda_D for every monic squarefree D of odd degree up to
    2*max_genus + 1 over F_q, in enumeration order.

    Deterministic regardless of worker count: tasks are indexed, results are
    consumed in index order, and integer/character arithmetic is exact.
    start=(degree, index) resumes mid-enumeration; on_item, when given, sees
    each SweepItem as soon as its turn in the canonical order arrives.
    """
    check_odd_prime(q)
    if max_genus < 1:
        raise ValueError("max_genus must be >= 1")
    if method not in ("double_zero", "bisect"):
        raise ValueError("method must be 'double_zero' or 'bisect'")
    tasks = []
    for degree in range(3, 2 * max_genus + 2, 2):
        for index in range(q**degree):
            if start is not None:
                if (degree, index) < tuple(start):
                    continue
            tasks.append((q, degree, index, method))
    items = []
    running_sup = []
    sup = None
    processed = 0
    skipped = 0
    if workers > 1:
        pool = multiprocessing.Pool(workers)
        results = pool.imap(_sweep_task, tasks, chunksize=64)
    else:
        pool = None
        results = map(_sweep_task, tasks)
    try:
        for degree, index, status, dco, c, payload in results:
            if status == "skip":
                skipped += 1
                continue
            processed += 1
            if status == "ok":
                item = SweepItem(degree, index, dco, c, payload, None)
                if payload.value is not None:
                    sup = payload.value if sup is None else max(sup, payload.value)
            else:
                item = SweepItem(degree, index, dco, None, None, payload)
            items.append(item)
            running_sup.append(sup)
            if on_item is not None:
                on_item(item)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    best_per_genus: dict = {}
    best_overall = None
    for item in items:
        if item.estimate is None or item.estimate.value is None:
            continue
        g = (item.degree - 1) // 2
        cur = best_per_genus.get(g)
        if cur is None or item.estimate.value > cur.estimate.value:
            best_per_genus[g] = item
        if best_overall is None or item.estimate.value > best_overall.estimate.value:
            best_overall = item
    return SweepReport(
        family="fixed_q(q=%d, max_genus=%d, method=%s)" % (q, max_genus, method),
        items=tuple(items),
        processed=processed,
        skipped=skipped,
        running_sup=tuple(running_sup),
        best_per_genus=best_per_genus,
        best_overall=best_overall,
        statistics={
            "processed": processed,
            "skipped": skipped,
            "sup": None if best_overall is None else best_overall.estimate.value,
        },
    )


def cubic_discriminant(dz: tuple) -> int:
    """Discriminant of an integer cubic a T^3 + b T^2 + c T + d; nonzero iff
    the cubic is squarefree over Q."""
    if len(dz) != 4 or dz[3] == 0:
        raise ValueError("expected a degree-3 integer polynomial")
    d, c, b, a = dz
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )


def trace_of_frobenius(dz, p: int) -> int:
    """a_p of y^2 = dz(T) by point counting: a_p = -sum_a legendre(dz(a)).

    Requires (p, dz mod p) to be a good pair; otherwise BadReduction. The
    Hasse bound |a_p| < 2 sqrt(p) is asserted on every output.
    """
    dz = tuple(int(v) for v in dz)
    Dp = reduce_int_poly(dz, p)
    ok, reason = good_pair_check(p, Dp)
    if not ok:
        raise BadReduction(reason)
    a = np.arange(p, dtype=np.int64)
    tab = np.full(p, -1, dtype=np.int64)
    tab[a * a % p] = 1
    tab[0] = 0
    vals = np.zeros(p, dtype=np.int64)
    for coef in reversed(Dp.coeffs):
        vals = (vals * a + coef) % p
    a_p = -int(tab[vals].sum())
    if a_p * a_p >= 4 * p:
        raise NumericalError("Hasse bound violated: a_p=%d at p=%d" % (a_p, p))
    return a_p


def _sato_record(dz: tuple, p: int) -> SatoTateRecord:
    try:
        a_p = trace_of_frobenius(dz, p)
    except BadReduction as e:
        return SatoTateRecord(p, None, None, None, str(e))
    ratio = a_p / (2.0 * math.sqrt(p))
    theta = math.acos(ratio)
    lam = float("-inf") if a_p == 0 else math.log(abs(ratio))
    return SatoTateRecord(p, a_p, theta, lam, None)


def _sato_task(args):
    return _sato_record(*args)


def sato_tate_sweep(dz, p_max: int, workers: int = 1) -> SweepReport:
    """Reduce a fixed squarefree integer cubic mod every odd prime p <= p_max
    and record (p, a_p, theta_p, lambda_p); bad-reduction primes are recorded
    as skips. The statistics block carries the running supremum of lambda_p
    and the Kolmogorov-Smirnov distance of the theta sample to the semicircle
    law (the distance statistic is this artifact's choice)."""
    dz = tuple(int(v) for v in dz)
    while dz and dz[-1] == 0:
        dz = dz[:-1]
    if len(dz) != 4:
        raise ValueError("dz must have degree 3")
    if cubic_discriminant(dz) == 0:
        raise ValueError("dz must be squarefree over Q")
    if p_max < 3:
        raise ValueError("p_max must be >= 3")
    ps = [p for p in primes_up_to(p_max) if p > 2]
    tasks = [(dz, p) for p in ps]
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            records = list(pool.imap(_sato_task, tasks, chunksize=64))
    else:
        records = [_sato_record(dz, p) for p in ps]
    sup = None
    argmax_p = None
    running_sup = []
    processed = 0
    skipped = 0
    thetas = []
    for r in records:
        if r.skipped is not None:
            skipped += 1
        else:
            processed += 1
            thetas.append(r.theta_p)
            if sup is None or r.lambda_p > sup:
                sup = r.lambda_p
                argmax_p = r.p
        running_sup.append(sup)
    ks = ks_distance(thetas) if thetas else None
    return SweepReport(
        family="sato_tate(dz=%s, p_max=%d)" % (",".join(map(str, dz)), p_max),
        items=tuple(records),
        processed=processed,
        skipped=skipped,
        running_sup=tuple(running_sup),
        best_per_genus={},
        best_overall=None,
        statistics={
            "sup_lambda": sup,
            "argmax_p": argmax_p,
            "ks_distance": ks,
            "processed": processed,
            "skipped": skipped,
        },
    )


def semicircle_cdf(theta):
    """CDF of the semicircle angle law (2/pi) sin^2 theta on [0, pi]:
    F(theta) = (theta - sin theta cos theta) / pi."""
    arr = np.asarray(theta, dtype=float)
    if np.any(arr < 0) or np.any(arr > math.pi):
        raise ValueError("theta out of range [0, pi]")
    out = (arr - np.sin(arr) * np.cos(arr)) / math.pi
    return float(out) if np.isscalar(theta) or arr.ndim == 0 else out


def ks_distance(sample) -> float:
    """One-sample Kolmogorov-Smirnov sup-distance of the angles to the
    semicircle CDF."""
    xs = np.sort(np.asarray(sample, dtype=float))
    n = len(xs)
    if n == 0:
        raise ValueError("empty sample")
    F = semicircle_cdf(xs)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - F), np.max(F - (i - 1) / n)))
