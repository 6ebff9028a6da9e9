"""Quadratic Dirichlet L-functions over F_q(T) and their heat-flow deformation.

L(s, chi_D) is a polynomial of degree 2g in q^(-s) with integer coefficients
c_n (sums of chi_D over monic polynomials of fixed degree). On the critical
line it becomes the real trigonometric polynomial

    Xi_t(x) = Phi_0 + sum_{n=1}^{g} Phi_n e^(t n^2) (e^(inx) + e^(-inx)),

with Phi_n = c_(g-n) q^(n/2); t is the deformation time. This module computes
the coefficients (with an exact functional-equation fill or by full
enumeration), evaluates Xi_t, and extracts its 2g zeros per period.
"""

from __future__ import annotations

import cmath
import math
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .finite_field import is_prime, legendre_table
from .fp_poly import (
    FpPolynomial,
    _monic_tuple_by_index,
    is_squarefree,
    poly_to_text,
)
from .quad_character import _chi_ladder, _validate_modulus, chi_table

# enumeration sizes at or above this use the multiplicative character table
_TABLE_THRESHOLD = 2000

GRID_POINTS = 4096


class NumericalError(RuntimeError):
    """A numerical routine failed loudly (root count mismatch, overflow)."""


def good_pair_check(q: int, D: FpPolynomial):
    """Is (q, D) an admissible discriminant pair? Returns (bool, reason)."""
    if not isinstance(q, int) or q < 3 or q % 2 == 0 or not is_prime(q):
        return False, "q must be an odd prime"
    if D.p != q:
        return False, "D is over F_%d, not F_%d" % (D.p, q)
    if D.is_zero or not D.is_monic:
        return False, "D must be monic"
    if D.degree % 2 == 0 or D.degree < 3:
        return False, "degree must be odd and >= 3"
    if not is_squarefree(D):
        return False, "D must be squarefree"
    return True, "good pair"


def require_good_pair(q: int, D: FpPolynomial) -> None:
    ok, reason = good_pair_check(q, D)
    if not ok:
        raise ValueError("not a good pair: %s" % reason)


@dataclass(frozen=True)
class LFunctionData:
    """A good pair with its L-function data.

    c is the full integer coefficient vector c_0..c_2g; phi holds the Fourier
    coefficients Phi_0..Phi_g as floats; phi_exact holds the same values as
    exact pairs (c_(g-n), n) meaning c_(g-n) * q^(n/2), so integer-exact
    checks never route through floating point.
    """

    q: int
    D: FpPolynomial
    g: int
    c: tuple
    phi: tuple
    phi_exact: tuple


def _sum_chi_over_degree(p: int, d_coeffs: tuple, n: int, k0: int, k1: int) -> int:
    leg = legendre_table(p)
    tot = 0
    for k in range(k0, k1):
        tot += _chi_ladder(_monic_tuple_by_index(p, n, k), d_coeffs, p, leg)
    return tot


def _sum_chi_worker(args) -> int:
    return _sum_chi_over_degree(*args)


def _coefficient_direct(q: int, D: FpPolynomial, n: int, workers: int = 1) -> int:
    """c_n by literal enumeration: one reciprocity-ladder character value per
    monic polynomial of degree n. Order-independent integer summation, so
    splitting the index range across workers cannot change the result."""
    if n == 0:
        return 1
    total = q**n
    if workers > 1 and total >= 4 * workers:
        bounds = [total * i // workers for i in range(workers + 1)]
        tasks = [
            (q, D.coeffs, n, bounds[i], bounds[i + 1]) for i in range(workers)
        ]
        with multiprocessing.Pool(workers) as pool:
            return sum(pool.map(_sum_chi_worker, tasks))
    return _sum_chi_over_degree(q, D.coeffs, n, 0, total)


def _use_table(q: int, D: FpPolynomial) -> bool:
    return q**D.degree >= _TABLE_THRESHOLD


def coefficient_by_enumeration(
    q: int, D: FpPolynomial, n: int, engine: str = "auto", workers: int = 1
) -> int:
    """c_n = sum of chi_D over all monic f of degree n, for any n >= 0.

    Used to verify that coefficients vanish from degree deg D on. engine
    selects the character evaluation route: "ladder" is one reciprocity ladder
    per f; "table" tabulates chi from its values on irreducibles (identical
    values, exhaustively cross-checked in tests); "auto" picks by size.
    """
    require_good_pair(q, D)
    if n < 0:
        raise ValueError("coefficient index must be >= 0")
    if n == 0:
        return 1
    if engine == "auto":
        engine = "table" if _use_table(q, D) else "ladder"
    if engine == "table":
        table = chi_table(D, max(n, D.degree))
        return int(sum(table[n]))
    if engine == "ladder":
        return _coefficient_direct(q, D, n, workers=workers)
    raise ValueError("unknown engine %r" % engine)


def dirichlet_coefficients(
    q: int,
    D: FpPolynomial,
    mode: str = "half",
    engine: str = "auto",
    workers: int = 1,
) -> tuple:
    """The integer coefficients c_0..c_2g of L(s, chi_D).

    mode="half" enumerates only degrees 0..g (q^n character values for c_n)
    and fills the upper half through the exact integer functional equation
    c_(g+n) = q^n c_(g-n). mode="full" enumerates every degree 0..2g; it
    exists so tests can verify the functional equation instead of assuming it.
    """
    require_good_pair(q, D)
    if mode not in ("half", "full"):
        raise ValueError("mode must be 'half' or 'full'")
    g = (D.degree - 1) // 2
    top = g if mode == "half" else 2 * g
    if engine == "auto":
        engine = "table" if mode == "full" and _use_table(q, D) else "ladder"
    if engine == "table":
        table = chi_table(D, max(top, D.degree))
        c = [int(sum(table[n])) if n else 1 for n in range(top + 1)]
    elif engine == "ladder":
        c = [_coefficient_direct(q, D, n, workers=workers) for n in range(top + 1)]
    else:
        raise ValueError("unknown engine %r" % engine)
    if mode == "half":
        for n in range(1, g + 1):
            c.append(q**n * c[g - n])
    return tuple(c)


def fourier_coefficients(q: int, g: int, c: tuple):
    """(phi, phi_exact) from the coefficient vector: Phi_n = c_(g-n) q^(n/2).

    phi_exact pairs (c_(g-n), n) carry the exact value; phi is its float.
    """
    sq = math.sqrt(q)
    phi = []
    phi_exact = []
    for n in range(g + 1):
        a = c[g - n]
        phi_exact.append((a, n))
        phi.append(a * q ** (n // 2) * (sq if n % 2 else 1.0))
    return tuple(phi), tuple(phi_exact)


def build_lfunction(
    q: int, D: FpPolynomial, mode: str = "half", engine: str = "auto", workers: int = 1
) -> LFunctionData:
    require_good_pair(q, D)
    g = (D.degree - 1) // 2
    c = dirichlet_coefficients(q, D, mode=mode, engine=engine, workers=workers)
    phi, phi_exact = fourier_coefficients(q, g, c)
    return LFunctionData(q=q, D=D, g=g, c=c, phi=phi, phi_exact=phi_exact)


def xi_eval(L: LFunctionData, t: float, x):
    """Xi_t(x). Real x gives a float (the sum is exactly real); complex x is
    evaluated with the two-sided exponential kernel and the imaginary part is
    dropped when below 1e-12 in magnitude."""
    if isinstance(x, complex):
        val = complex(L.phi[0])
        for n in range(1, L.g + 1):
            if L.phi[n]:
                e = math.exp(t * n * n)
                val += L.phi[n] * e * (cmath.exp(1j * n * x) + cmath.exp(-1j * n * x))
        if abs(val.imag) < 1e-12:
            return val.real
        return val
    val = L.phi[0]
    for n in range(1, L.g + 1):
        if L.phi[n]:
            val += 2.0 * L.phi[n] * math.exp(t * n * n) * math.cos(n * x)
    return val


@lru_cache(maxsize=32)
def _cos_matrix(g: int, m: int):
    x = np.arange(m) * (2.0 * math.pi / m)
    return np.cos(np.outer(np.arange(g + 1), x))


def _weights(L: LFunctionData, t: float) -> np.ndarray:
    w = np.zeros(L.g + 1)
    w[0] = L.phi[0]
    for n in range(1, L.g + 1):
        if L.phi[n]:
            w[n] = 2.0 * L.phi[n] * math.exp(t * n * n)
    return w


def xi_on_grid(L: LFunctionData, t: float, m: int = GRID_POINTS) -> np.ndarray:
    """Xi_t sampled on the uniform m-point grid of [0, 2pi)."""
    return _weights(L, t) @ _cos_matrix(L.g, m)


def grid_sign_changes(L: LFunctionData, t: float, m: int = GRID_POINTS) -> int:
    """Number of sign changes of Xi_t around the m-point circle grid.

    A degree-g cosine polynomial has at most 2g zeros per period, so a count
    of 2g certifies that every zero is real and simple.
    """
    v = xi_on_grid(L, t, m)
    s = np.sign(v)
    return int(np.count_nonzero(s * np.roll(s, -1) < 0))


def _grid_real_zeros(L: LFunctionData, t: float, m: int = GRID_POINTS):
    """Refine every sign change of Xi_t on the grid by bisection."""
    v = xi_on_grid(L, t, m)
    s = np.sign(v)
    idx = np.nonzero(s * np.roll(s, -1) < 0)[0]
    h = 2.0 * math.pi / m
    zeros = []
    for k in idx:
        lo, hi = k * h, (k + 1) * h
        flo = xi_eval(L, t, lo)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = xi_eval(L, t, mid)
            if (fm < 0) == (flo < 0):
                lo, flo = mid, fm
            else:
                hi = mid
        zeros.append(0.5 * (lo + hi))
    return zeros


@dataclass(frozen=True)
class ZeroSet:
    """The zeros of Xi_t in one period, as x-values with Re in [0, 2pi).

    gammas:  sorted real zeros lying in (0, pi); generically g of them
    nonreal: zeros with |Im x| above the classification tolerance
    delta:   max |Im x| over all zeros (the strip half-width)
    xs:      all 2g zeros
    """

    t: float
    gammas: tuple
    nonreal: tuple
    delta: float
    xs: tuple


def zeros_at_t(L: LFunctionData, t: float, tol: float = 1e-9) -> ZeroSet:
    """All 2g zeros of Xi_t via the substitution z = e^(ix).

    e^(2igx) Xi_t(x) is the palindromic polynomial
    Q_t(z) = Phi_0 z^g + sum_n Phi_n e^(t n^2) (z^(g+n) + z^(g-n)),
    solved by companion-matrix eigenvalues; x = -i log z. If at t >= 0 any
    root strays off the unit circle (where all of them must sit) the real
    zeros are recovered instead by grid bisection and the count cross-checked.
    """
    g = L.g
    a = np.zeros(2 * g + 1)
    a[g] = L.phi[0]
    for n in range(1, g + 1):
        w = L.phi[n] * math.exp(t * n * n)
        a[g + n] = w
        a[g - n] = w
    if not np.all(np.isfinite(a)):
        raise NumericalError("Xi_t coefficients overflowed at t=%g" % t)
    if a[2 * g] == 0.0:
        raise NumericalError("leading coefficient underflowed at t=%g" % t)
    z = np.roots(a[::-1])
    if len(z) != 2 * g:
        raise NumericalError(
            "root finder returned %d of %d roots at t=%g" % (len(z), 2 * g, t)
        )
    if t >= 0 and np.max(np.abs(np.abs(z) - 1.0)) > 1e-6:
        # RH for curves puts every root on |z| = 1; fall back to the real line
        real = _grid_real_zeros(L, t)
        if len(real) != 2 * g:
            raise NumericalError(
                "eigenvalues left the unit circle at t=%g and the grid found "
                "%d of %d zeros" % (t, len(real), 2 * g)
            )
        xs = tuple(complex(v, 0.0) for v in sorted(real))
        gammas = tuple(v for v in sorted(real) if 0.0 < v < math.pi)
        return ZeroSet(t=t, gammas=gammas, nonreal=(), delta=0.0, xs=xs)
    re = np.mod(np.angle(z), 2.0 * math.pi)
    im = -np.log(np.abs(z))
    order = np.lexsort((im, re))
    xs = tuple(complex(re[i], im[i]) for i in order)
    delta = float(np.max(np.abs(im)))
    gammas = tuple(
        sorted(x.real for x in xs if abs(x.imag) <= tol and 0.0 < x.real < math.pi)
    )
    nonreal = tuple(x for x in xs if abs(x.imag) > tol)
    return ZeroSet(t=t, gammas=gammas, nonreal=nonreal, delta=delta, xs=xs)


def lfunction_jsonable(L: LFunctionData) -> dict:
    """JSON-ready view: q, D text, g, integer c, phi at 12 significant digits."""
    return {
        "q": L.q,
        "D": poly_to_text(L.D),
        "g": L.g,
        "c": list(L.c),
        "phi": [float("%.12g" % v) for v in L.phi],
    }
