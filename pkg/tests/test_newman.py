"""Lower bounds and exact values for the deformation constant Lambda_D."""

import math

import numpy as np
import pytest

from ffnewman.fp_poly import FpPolynomial, enumerate_monic, is_squarefree
from ffnewman.lfunction import ZeroSet, build_lfunction, zeros_at_t
from ffnewman.newman import (
    NewmanEstimate,
    all_zeros_real,
    count_nonzero_phi,
    crude_condition_check,
    double_zero_lower_bound,
    has_double_zero_at_axis,
    lambda_bisect,
    lambda_exact_genus1,
    newman_jsonable,
    stopple_G,
    stopple_G_direct,
    stopple_data,
    stopple_jsonable,
    stopple_lower_bound,
    strip_bound,
    xi0_axis_values_exact,
)

SQ5 = math.sqrt(5.0)
D_MAIN = (2, 1, 0, 1, 2, 1)
D_VARIANT = (2, 2, 0, 1, 1, 1)


def P(coeffs, p):
    return FpPolynomial(tuple(coeffs), p)


def L_main():
    return build_lfunction(5, P(D_MAIN, 5))


def quartic_log_root(phi0):
    # independent route: largest real root of 10 y^4 + 2 phi_1 y + phi_0 with
    # phi_1 = -sqrt 5, via the companion matrix, then its logarithm
    roots = np.roots([10.0, 0.0, 0.0, -2.0 * SQ5, phi0])
    real = [r.real for r in roots if abs(r.imag) < 1e-9 and r.real > 0]
    return math.log(max(real))


def test_exact_genus1_value():
    L = build_lfunction(3, P([1, 2, 0, 1], 3))
    e = lambda_exact_genus1(L)
    assert e.kind == "exact"
    assert e.value == pytest.approx(math.log(3.0 / (2.0 * math.sqrt(3.0))), abs=1e-15)
    assert e.value == pytest.approx(-0.14384103622589045, abs=1e-12)


def test_exact_genus1_minus_infinity():
    L = build_lfunction(3, P([0, 1, 0, 1], 3))
    e = lambda_exact_genus1(L)
    assert e.kind == "minus_infinity"
    assert e.value == float("-inf")


def test_exact_genus1_rejects_higher_genus():
    with pytest.raises(ValueError):
        lambda_exact_genus1(L_main())


def test_count_nonzero_phi():
    assert count_nonzero_phi(L_main()) == 3
    assert count_nonzero_phi(build_lfunction(3, P([0, 1, 0, 1], 3))) == 1


def test_all_zeros_real_worked_pair():
    L = L_main()
    assert all_zeros_real(L, 0.0)
    assert all_zeros_real(L, -0.1)
    assert not all_zeros_real(L, -0.25)
    assert not all_zeros_real(L, -0.3)


def test_all_zeros_real_pure_cosine_any_t():
    # a single surviving Fourier mode keeps its zeros real for all t,
    # including t so negative that e^(t n^2) underflows
    L = build_lfunction(3, P([0, 1, 0, 1], 3))
    for t in [0.0, -5.0, -1e6]:
        assert all_zeros_real(L, t)


def test_bisect_worked_pair():
    L = L_main()
    e = lambda_bisect(L)
    assert e.kind == "bisect"
    assert e.value == pytest.approx(-0.1884, abs=5e-4)
    assert e.value == pytest.approx(quartic_log_root(-1.0), abs=1e-8)
    lo, hi = e.bracket
    assert lo <= e.value <= hi
    assert hi - lo <= 2e-10


def test_bisect_variant_pair():
    L = build_lfunction(5, P(D_VARIANT, 5))
    e = lambda_bisect(L)
    assert e.value == pytest.approx(quartic_log_root(1.0), abs=1e-8)
    assert e.value == pytest.approx(-0.4042265776529523, abs=1e-9)


def test_bisect_minus_infinity_is_algebraic():
    e = lambda_bisect(build_lfunction(3, P([0, 1, 0, 1], 3)))
    assert e.kind == "minus_infinity"
    assert e.value == float("-inf")
    assert e.bracket is None


def test_bisect_agrees_with_exact_on_cubics():
    for D in list(enumerate_monic(3, 3)):
        if not is_squarefree(D):
            continue
        L = build_lfunction(3, D)
        exact = lambda_exact_genus1(L)
        got = lambda_bisect(L)
        if exact.kind == "minus_infinity":
            assert got.kind == "minus_infinity"
        else:
            assert abs(got.value - exact.value) < 1e-6


def test_exact_double_zero_detected():
    # T^5 - T over F_5: Xi_t = 10 e^(4t) cos 2x - 10, double zeros at t = 0
    L = build_lfunction(5, P([0, 4, 0, 0, 0, 1], 5))
    assert L.c == (1, 0, -10, 0, 25)
    assert xi0_axis_values_exact(L) == ((0, 0), (0, 0))
    assert has_double_zero_at_axis(L)
    with pytest.warns(UserWarning):
        e = lambda_bisect(L)
    assert e.kind == "exact"
    assert e.value == 0.0


def test_xi0_axis_values():
    # Xi_0(0) = A + B sqrt q and Xi_0(pi) = A - B sqrt q with integer A, B
    L = L_main()
    (a0, b0), (a1, b1) = xi0_axis_values_exact(L)
    assert (a0, b0) == (9, -2)
    assert (a1, b1) == (9, 2)
    assert not has_double_zero_at_axis(L)


def test_double_zero_bound_genus1():
    # c = (1, -3): P(y) = -3 + 2 sqrt3 y^... largest root y* = sqrt3 / 2
    L = build_lfunction(3, P([1, 2, 0, 1], 3))
    e = double_zero_lower_bound(L)
    assert e.kind == "double_zero_lower_bound"
    assert math.exp(e.value) == pytest.approx(math.sqrt(3.0) / 2.0, abs=1e-10)
    assert e.value == pytest.approx(lambda_exact_genus1(L).value, abs=1e-9)


def test_double_zero_bound_genus2_example():
    # c = (1, -3, 5) over F_3: P(y) = 5 - 6 sqrt3 y + 6 y^4
    L = build_lfunction(3, P([1, 1, 0, 1, 0, 1], 3))
    e = double_zero_lower_bound(L)
    ystar = math.exp(e.value)
    assert abs(5.0 - 6.0 * math.sqrt(3.0) * ystar + 6.0 * ystar**4) < 1e-9
    assert 0.9 < ystar < 0.95
    assert e.value == pytest.approx(-0.0528, abs=1e-3)


def test_double_zero_bound_worked_pair():
    L = L_main()
    e = double_zero_lower_bound(L)
    assert e.value == pytest.approx(lambda_bisect(L).value, abs=1e-6)


def test_double_zero_bound_no_bound_cases():
    # Phi_0 = 0: P(y) = 2 sqrt3 y^... has no positive root
    L = build_lfunction(3, P([0, 1, 0, 1], 3))
    assert double_zero_lower_bound(L).kind == "no_bound"


def test_double_zero_bound_at_pi():
    # with c_1 > 0 the collision happens at x = pi instead of x = 0
    for D in enumerate_monic(3, 3):
        if not is_squarefree(D):
            continue
        L = build_lfunction(3, D)
        if L.c[1] <= 0:
            continue
        assert double_zero_lower_bound(L).kind == "no_bound"
        e = double_zero_lower_bound(L, at_pi=True)
        assert e.kind == "double_zero_lower_bound"
        assert e.value == pytest.approx(lambda_exact_genus1(L).value, abs=1e-9)
        break
    else:
        pytest.fail("no cubic with positive c_1 found")


def test_bound_never_exceeds_bisect():
    for q, coeffs in [(5, D_MAIN), (5, D_VARIANT), (3, (1, 1, 0, 1, 0, 1))]:
        L = build_lfunction(q, P(coeffs, q))
        b = lambda_bisect(L)
        dz = double_zero_lower_bound(L)
        if dz.kind == "double_zero_lower_bound":
            assert dz.value <= b.value + 1e-8


def test_monotone_predicate_along_flow():
    L = L_main()
    seen_true = False
    for t in [x * 0.05 - 0.5 for x in range(13)]:
        ok = all_zeros_real(L, t)
        if seen_true:
            assert ok, "all-zeros-real flipped back off at t=%g" % t
        seen_true = seen_true or ok


def test_stopple_G_closed_form():
    # single zero at pi/2: G = 1/6 - 2/pi^2 + 1/2
    z = ZeroSet(t=0.0, gammas=(math.pi / 2.0,), nonreal=(), delta=0.0, xs=(math.pi / 2.0, 3.0 * math.pi / 2.0))
    want = 1.0 / 6.0 - 2.0 / math.pi**2 + 0.5
    assert stopple_G(z) == pytest.approx(want, abs=1e-14)
    assert want == pytest.approx(0.4640243, abs=1e-7)


def test_stopple_G_small_gamma_limit():
    # csc^2 expansion cancels the -1/(2 gamma^2) pole, leaving 1/3
    for gamma in [1e-3, 1e-4]:
        z = ZeroSet(t=0.0, gammas=(gamma,), nonreal=(), delta=0.0, xs=(gamma, 2 * math.pi - gamma))
        assert stopple_G(z) == pytest.approx(1.0 / 3.0, abs=1e-5)


def test_stopple_G_matches_direct_sum():
    ell_max = 200000
    for q, coeffs in [(3, (1, 2, 0, 1)), (5, D_MAIN)]:
        L = build_lfunction(q, P(coeffs, q))
        z = zeros_at_t(L, 0.0)
        tol = 4.0 * (2.0 * L.g) / (2.0 * math.pi * ell_max)
        assert abs(stopple_G(z) - stopple_G_direct(z.gammas, ell_max)) < tol


def test_stopple_G_rejects_bad_input():
    with pytest.raises(ValueError):
        stopple_G(ZeroSet(t=0.0, gammas=(), nonreal=(), delta=0.0, xs=()))
    with pytest.raises(ValueError):
        stopple_G(
            ZeroSet(t=0.0, gammas=(1.0, 1.0 + 1e-15), nonreal=(), delta=0.0, xs=())
        )
    with pytest.raises(ValueError):
        stopple_G(
            ZeroSet(t=-0.25, gammas=(1.0,), nonreal=(0.3j,), delta=0.3, xs=(0.3j,))
        )


def test_stopple_lower_bound_example():
    e = stopple_lower_bound(0.01, 1.0)
    assert e.kind == "stopple_lower_bound"
    want = ((1.0 - 5.0 * 1e-4) ** 0.8 - 1.0) / 8.0
    assert e.value == pytest.approx(want, abs=1e-15)
    assert e.value == pytest.approx(-5.0e-5, abs=2e-6)


def test_stopple_lower_bound_validity_edge():
    with pytest.raises(ValueError):
        stopple_lower_bound(1.0, 0.2)  # 5 gamma^2 G = 1
    with pytest.raises(ValueError):
        stopple_lower_bound(2.0, 1.0)
    # just inside validity still works
    e = stopple_lower_bound(1.0, 0.199999)
    assert e.value < 0


def test_stopple_data_worked_pair():
    L = L_main()
    sd = stopple_data(L)
    assert len(sd.gamma) == L.g
    assert sd.gamma_tilde[0] == pytest.approx(sd.gamma[0] * L.g / math.pi, abs=1e-12)
    b = lambda_bisect(L)
    if sd.condition_ok:
        assert sd.bound is not None
        assert sd.bound <= b.value + 1e-8
    else:
        assert sd.bound is None
    sj = stopple_jsonable(sd)
    assert set(sj) == {"gamma", "gamma_tilde", "G", "condition_ok", "bound"}


def test_crude_condition_check():
    def synthetic(g, gt1, gt2):
        gam = [gt1 * math.pi / g, gt2 * math.pi / g]
        gam += [(j + 1.0) * math.pi / g for j in range(2, g)]
        xs = tuple(gam) + tuple(2.0 * math.pi - v for v in gam)
        return ZeroSet(t=0.0, gammas=tuple(gam), nonreal=(), delta=0.0, xs=xs)

    assert crude_condition_check(synthetic(13, 0.01, 1.0), 13)
    assert not crude_condition_check(synthetic(12, 0.01, 1.0), 12)
    assert not crude_condition_check(synthetic(13, 0.01, 3.0), 13)
    assert not crude_condition_check(synthetic(13, 0.2, 1.0), 13)
    with pytest.raises(ValueError):
        crude_condition_check(
            ZeroSet(t=0.0, gammas=(0.1,), nonreal=(), delta=0.0, xs=(0.1,)), 1
        )


def test_strip_bound():
    assert strip_bound(0.368, 0.05) == pytest.approx(
        math.sqrt(0.368**2 - 0.1), abs=1e-12
    )
    assert strip_bound(0.368, 0.05) == pytest.approx(0.188, abs=2e-3)
    assert strip_bound(0.3, 0.045) <= 1e-8  # s = delta^2 / 2 up to float dust
    assert strip_bound(0.3, 0.4) == 0.0
    assert strip_bound(0.0, 0.1) == 0.0
    with pytest.raises(ValueError):
        strip_bound(-0.1, 0.1)
    with pytest.raises(ValueError):
        strip_bound(0.1, -0.1)


def test_strip_bound_consistent_with_flow():
    # a strip of half-width delta is fully reabsorbed after delta^2 / 2 of
    # forward flow, so Lambda <= t + delta(t)^2 / 2 at every sampled t
    L = L_main()
    lam = lambda_bisect(L).value
    for t in [-0.30, -0.25, -0.20]:
        d = zeros_at_t(L, t).delta
        assert lam <= t + d * d / 2.0 + 1e-6


def test_newman_jsonable():
    e = lambda_bisect(build_lfunction(3, P([0, 1, 0, 1], 3)))
    j = newman_jsonable(e)
    assert j["kind"] == "minus_infinity"
    assert j["value"] == "-inf"
    e2 = NewmanEstimate(kind="exact", value=-0.25, bracket=None, tol=None, notes="x")
    assert newman_jsonable(e2)["value"] == -0.25


def test_lambda_nonpositive_across_samples():
    for D in list(enumerate_monic(3, 3))[::2]:
        if not is_squarefree(D):
            continue
        e = lambda_bisect(build_lfunction(3, D))
        assert e.value <= 0.0
