import math

import mpmath as mp
import pytest

from thetafuchs import elliptic as el
from thetafuchs import theta_eta as th
from thetafuchs.numerics import NumericsError, tau_grid

COVER_G3 = 7 * math.sqrt(2) / 27


def test_k_at_zero():
    assert abs(el.ellip_K(0) - math.pi / 2) < 1e-15


def test_k_lemniscatic_agm():
    mp.mp.dps = 25
    assert abs(el.ellip_K(1 / math.sqrt(2)) - complex(mp.ellipk(0.5))) < 1e-14


def test_k_equals_kprime_at_i():
    k, _ = el.legendre_moduli(1j)
    assert abs(el.ellip_K(k) - el.ellip_Kprime(k)) < 1e-12


def test_k_complex_vs_mpmath():
    mp.mp.dps = 25
    for k in (0.3 + 0.2j, 0.8 - 0.4j):
        assert abs(el.ellip_K(k) - complex(mp.ellipk(mp.mpc(k.real, k.imag) ** 2))) < 1e-12


def test_k_cut_flagged():
    with pytest.raises(NumericsError):
        el.ellip_K(1.2)


def test_hyp2f1_values():
    assert abs(el.hyp2f1_half(0) - 1) < 1e-15
    target = (2 / math.pi) * el.ellip_K(1 / math.sqrt(2))
    assert abs(el.hyp2f1_half(0.5) - target) < 1e-13


def test_hyp2f1_series_agreement():
    for z in (0.3 + 0.1j, -0.6, 0.72j):
        assert abs(el.hyp2f1_half(z) - el.hyp2f1_half_series(z)) < 1e-12


def test_legendre_ode_residual():
    z0 = 0.3

    def phi(z):
        return el.hyp2f1_half(z)

    def stencil(h):
        d1 = (phi(z0 + h) - phi(z0 - h)) / (2 * h)
        d2 = (phi(z0 + h) - 2 * phi(z0) + phi(z0 - h)) / h ** 2
        return d1, d2

    c1, c2 = stencil(0.01)
    f1, f2 = stencil(0.005)
    d1 = (4 * f1 - c1) / 3
    d2 = (4 * f2 - c2) / 3
    resid = z0 * (z0 - 1) * d2 + (2 * z0 - 1) * d1 + phi(z0) / 4
    assert abs(resid) < 1e-8


def test_legendre_moduli_pythagoras():
    for tau in tau_grid(10, seed=3):
        k, kp = el.legendre_moduli(tau)
        assert abs(k * k + kp * kp - 1) < 1e-12


def test_moduli_special_values():
    k, kp = el.legendre_moduli(1j)
    assert abs(k - 1 / math.sqrt(2)) < 1e-12
    assert abs(kp - 1 / math.sqrt(2)) < 1e-12
    k2, _ = el.legendre_moduli(1j * math.sqrt(2))
    assert abs(k2 - (math.sqrt(2) - 1)) < 1e-12


def test_eisenstein_values():
    g2, g3, jj = el.eisenstein(1j)
    assert abs(g2 - 11.817045) < 5e-7
    assert abs(jj - 1) < 1e-10
    assert abs(th.theta4(2j) ** 8 - 8 * g2 / math.pi ** 4) < 1e-10


def test_stable_j_matches_series_j():
    for tau in (0.2 + 0.9j, 1.1j, -0.3 + 1.4j):
        assert abs(el.klein_j(tau) - el.eisenstein(tau)[2]) < 1e-12 * max(
            1.0, abs(el.klein_j(tau)))


def test_carlson_rf_vs_mpmath():
    mp.mp.dps = 25
    cases = ((1, 2, 3), (1 + 1j, 2, 3 - 0.5j), (0, 1, 2))
    for x, y, z in cases:
        ref = complex(mp.elliprf(x, y, z))
        assert abs(el.carlson_rf(x, y, z) - ref) < 1e-12


def test_wp_laurent_leading():
    par = el.WeierstrassParams.from_invariants(5 / 3, -COVER_G3)
    p, _, _ = el.wp(1e-3, par)
    assert abs(p * 1e-6 - 1) < 1e-5


def test_wp_differential_equation():
    par = el.WeierstrassParams.from_invariants(5 / 3, -COVER_G3)
    p, dp, _ = el.wp(0.3 + 0.2j, par)
    assert abs(dp ** 2 - (4 * p ** 3 - par.g2 * p - par.g3)) < 1e-9


def test_wp_periodicity():
    par = el.WeierstrassParams.from_invariants(5 / 3, COVER_G3)
    z = 0.31 + 0.17j
    p1, dp1, _ = el.wp(z, par)
    p2, dp2, _ = el.wp(z + par.period1, par)
    assert abs(p1 - p2) < 1e-9
    assert abs(dp1 - dp2) < 1e-9


def test_wp_duplication_vs_direct():
    par = el.WeierstrassParams.from_half_periods(2.0, 2.0 * (0.2 + 1.3j))
    z = 0.4 + 0.3j
    p, dp, _ = el.wp(z, par)
    ppp = 6 * p * p - par.g2 / 2
    dup = 0.25 * (ppp / dp) ** 2 - 2 * p
    direct, _, _ = el.wp(2 * z, par)
    assert abs(dup - direct) < 1e-9


def test_wp_inverse_round_trip():
    par = el.WeierstrassParams.from_invariants(5 / 3, COVER_G3)
    w = 2 + 1j
    alpha = el.wp_inverse(w, par)
    assert abs(el.wp(alpha, par)[0] - w) < 1e-9


def test_wp_inverse_asymptotic():
    par = el.WeierstrassParams.from_invariants(5 / 3, -COVER_G3)
    alpha = el.wp_inverse(1e6, par)
    assert abs(alpha - 1e-3) < 1e-5


def test_wp_inverse_derivative_fd():
    par = el.WeierstrassParams.from_invariants(5 / 3, -COVER_G3)
    w = 2 + 1j
    h = 1e-5
    base = el.wp_inverse(w, par)
    plus = el.wp_inverse(w + h, par)
    minus = el.wp_inverse(w - h, par)
    fd = (plus - minus) / (2 * h)
    dp = el.wp(base, par)[1]
    assert abs(fd - 1 / dp) < 1e-6


def test_period_invariant_round_trip():
    par = el.WeierstrassParams.from_half_periods(1.0, 0.25 + 1.2j)
    back = el.WeierstrassParams.from_invariants(par.g2, par.g3)
    check = el.WeierstrassParams.from_periods(back.period1, back.period2)
    assert abs(check.g2 - par.g2) < 1e-10 * max(1, abs(par.g2))
    assert abs(check.g3 - par.g3) < 1e-10 * max(1, abs(par.g3))


def test_agm_series_paths_agree():
    for k in (0.1, 0.4 + 0.3j, 0.85, 0.6 - 0.5j):
        if abs(k) <= 0.9:
            direct = el.ellip_K(k)
            series = (math.pi / 2) * el.hyp2f1_half_series(k * k)
            assert abs(direct - series) < 1e-12


def test_wp_lattice_point_error():
    par = el.WeierstrassParams.from_half_periods(2.0, 2.6j)
    with pytest.raises(NumericsError):
        el.wp(0.0, par)


def test_moduli_cusp_limits():
    k, kp = el.legendre_moduli(25j)
    assert abs(k) < 1e-12
    assert abs(kp - 1) < 1e-12


def test_phi_satisfies_legendre_ode_in_modulus_square():
    # Phi1 = (pi/2) theta3^2 against the hypergeometric equation in z = k^2,
    # all derivatives through exact jets and the chain rule
    from thetafuchs.jets import theta_jet

    for tau in (0.3 + 1.1j, 0.1 + 0.8j):
        j = theta_jet(tau, (1, 0), 2)
        phi = (math.pi / 2) * j.t3.pow(2)
        z = (j.t2 / j.t3).pow(4)
        z1, z2 = z.d[1], z.d[2]
        phi_z = phi.d[1] / z1
        phi_zz = (phi.d[2] * z1 - phi.d[1] * z2) / z1 ** 3
        zv = z.d[0]
        resid = zv * (zv - 1) * phi_zz + (2 * zv - 1) * phi_z + phi.d[0] / 4
        assert abs(resid) < 1e-9
