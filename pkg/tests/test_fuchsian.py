import cmath
import math
from fractions import Fraction

from thetafuchs import fuchsian as fu
from thetafuchs.jets import Jet, theta_jet
from thetafuchs.numerics import newton_solve, tau_grid

GRID = tau_grid(12, seed=11, im_range=(0.4, 2.5))


def test_schwarzian_trivial_cases():
    tau = 0.4 + 1.1j
    s = fu.schwarzian_jet(lambda t, o: Jet.variable(t, o), tau)
    assert abs(s.schwarzian) < 1e-14
    assert abs(s.mero) < 1e-14
    # Mobius image of tau
    mob = fu.schwarzian_jet(
        lambda t, o: (Jet.variable(t, o) + 2.0) / (Jet.variable(t, o) - 1.5j),
        tau)
    assert abs(mob.schwarzian) < 1e-12


def test_burnside_equation_pointwise():
    s = fu.schwarzian_jet(fu.x_burnside, 1 / 3 + 1j)
    x = s.x
    target = -0.5 * (x ** 8 + 14 * x ** 4 + 1) / (x ** 2 * (x ** 4 - 1) ** 2)
    assert abs(s.mero - target) < 1e-9


def test_catalogue_sweeps():
    for qid in fu.CATALOGUE_IDS:
        res = fu.verify_fuchsian(qid, GRID)
        assert res["max_residual"] < 1e-9, (qid, res)


def test_fermat4_is_burnside_form():
    q4 = fu.q_fermat(4)
    for x in (0.3 + 0.2j, 1.7 - 0.4j):
        assert abs(q4(x) - fu.q_burnside(x)) < 1e-12 * abs(fu.q_burnside(x))


def test_parabolic_form_equals_fermat8_exactly():
    # the nine-pole explicit form and the closed n = 8 form agree as rational
    # functions; checked in exact rational arithmetic on the imaginary axis
    from fractions import Fraction

    def fermat8_exact(z: Fraction) -> Fraction:
        return Fraction(-1, 2) * (z ** 16 + 62 * z ** 8 + 1) / (z * (z ** 8 - 1)) ** 2

    def parabolic_exact(z: Fraction) -> Fraction:
        # sum over 0 and the eighth roots collapses to rational combinations
        s = 1 / z ** 2 + (8 * z ** 14 + 56 * z ** 6) / (z ** 8 - 1) ** 2
        return Fraction(-1, 2) * (s - 8 * z ** 6 / (z ** 8 - 1))

    for z in (Fraction(1, 3), Fraction(7, 5), Fraction(-4, 9)):
        assert fermat8_exact(z) == parabolic_exact(z)


def test_q_parabolic_matches_closed_form_numerically():
    roots = (0,) + tuple(cmath.exp(2j * math.pi * k / 8) for k in range(8))
    qp = fu.q_parabolic(roots)
    qf = fu.q_fermat(8)
    for z in (0.4 + 0.1j, 1.3 - 0.7j):
        assert abs(qp(z) - qf(z)) < 1e-10 * abs(qf(z))


def test_whittaker_variant_ratio():
    qw = fu.q_whittaker((0, 1, -1, 1j, -1j))
    qp = fu.q_parabolic((0, 1, -1, 1j, -1j))
    z = 0.5 + 0.4j
    assert abs(qw(z) / qp(z) - 0.75) < 1e-12


def test_change_of_variable_law():
    out = fu.change_of_var_check(GRID)
    assert out["z_x4_law"] < 1e-9
    assert out["z_x4_is_legendre"] < 1e-9
    assert out["mobius"] < 1e-12
    assert out["pair_lemma"] < 1e-9


def test_schwarzian_cocycle():
    assert fu.schwarzian_cocycle_check(0.23 + 1.2j) < 1e-9


def test_y_side_pole_structure():
    # [y, tau] must blow up at 5 x^4 = 1 exactly like the double pole of the
    # algebraic-coefficient equation: Q2 y^2 (y^8 - 2^8 5^-5)^2 stays bounded
    def f(t):
        j = fu.x_burnside(t, 1)
        return 5 * j.d[0] ** 4 - 1

    def df(t):
        j = fu.x_burnside(t, 1)
        return 20 * j.d[0] ** 3 * j.d[1]

    tau_star, _ = newton_solve(f, df, 0.75j, root_tol=1e-12)
    c = 2 ** 8 * 5 ** -5
    bounded = []
    growth = []
    for delta in (0.04, 0.02, 0.01):
        t = tau_star + delta * (0.6 + 0.8j)
        yj = fu.y_burnside(t, 3)
        _, q2 = fu.brackets_from_jet(yj)
        growth.append(abs(q2))
        bounded.append(abs(q2 * yj.d[0] ** 2 * (yj.d[0] ** 8 - c) ** 2))
    assert growth[2] > 20 * growth[0]
    assert max(bounded) / min(bounded) < 1.2


def test_psi_families():
    tau = 0.3 + 1.1j
    p1, p2 = fu.psi("burnside_tau", tau)
    assert abs(p2 / p1 - tau) < 1e-12
    xj = fu.x_burnside(tau, 1)
    assert abs(p1 ** 2 - xj.d[1]) < 1e-10
    f1, f2 = fu.psi("legendre", tau)
    assert abs(f2 / f1 - (-1j * tau)) < 1e-12
    x = 0.4 + 0.25j
    a1, a2 = fu.psi("burnside_x", x)
    b1, b2 = fu.psi("burnside_x_w", x)
    # (K/K', K'/K) pairs: a2/a1 = K'/K and b1/b2 = K'/(iK)
    assert abs(a2 / a1 - 1j * (b1 / b2)) < 1e-10


def test_wronskians_constant():
    w50 = []
    w16 = []
    for tau in (0.2 + 1.1j, 0.4 + 0.9j, 1.3j):
        xj = fu.x_burnside(tau, 1)
        x, x1 = xj.d[0], xj.d[1]
        p1 = fu.psi1_tau(tau, 1)
        w50.append((p1.d[0] * (p1.d[0] + tau * p1.d[1])
                    - tau * p1.d[0] * p1.d[1]) / x1)
        t3 = theta_jet(tau, (1, 0), 1).t3
        phi1 = (math.pi / 2) * t3.pow(2)
        phi2v = -1j * tau * phi1.d[0]
        phi2d = -1j * (phi1.d[0] + tau * phi1.d[1])
        w16.append((x ** 5 - x) * (phi1.d[0] * phi2d - phi2v * phi1.d[1]) / x1)
    for w in w50:
        assert abs(w - 1) < 1e-9
    for w in w16:
        assert abs(w + math.pi) < 1e-9


def test_modular_ode_residuals_on_grid():
    for tau in tau_grid(8, seed=9, im_range=(0.5, 1.8)):
        res = fu.modular_ode_residuals(tau)
        worst = max(res.values())
        assert worst < 1e-8, (tau, res)


def test_ground_form_at_i():
    res = fu.modular_ode_residuals(1j)
    assert res["ground_form_eta"] < 1e-11


def test_theorema_at_quarter_shift():
    res = fu.modular_ode_residuals(0.25 + 1j)
    assert res["theorema_theta3"] < 1e-8
    assert res["theorema_theta4"] < 1e-8


def test_log_solution_ode():
    res = fu.modular_ode_residuals(0.3 + 0.8j)
    assert res["ode_log_solution"] < 1e-8
    assert res["ode_weight2"] < 1e-8


def test_dd_refinement_agrees_with_double():
    for tau in (0.3 + 1.1j, 0.1 + 0.7j):
        for qid in ("burnside", "fermat8", "lambda_mixed"):
            assert fu.residual_dd(qid, tau) < 1e-12


def test_accessory_metadata():
    for qid in fu.CATALOGUE_IDS:
        assert fu.q_catalogue(qid).accessory_zero
