"""Inversion of the genus-2 uniformizer and the theta solution of the quintic.

Given A, the ratio tau' = i K(A^2)/K'(A^2) (K in the modulus convention) is a
half-plane representative with k'(tau') = A^2.  Doubling the 24 coset images
of tau' therefore yields candidate points where chi = -theta4(./2)/theta3(./2)
takes the value A exactly; the minimizer of |chi - A| is returned, and the
level-one invariant of tau' must match the octahedral expression in A.

The Bring-form quintic x^5 - x + a = 0 is solved by inverting the modular
expression 16 eta^6(2 tau)/theta3^6(tau) = a (Newton with a q-expansion seed
plus straight-segment continuation), after which one root is the quotient
theta4/theta3 at the solution point and the others follow by deflation and
per-root inversion.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import elliptic as el
from . import theta_eta as th
from .curves import chi_burnside, octahedral_j, x_quotient
from .jets import theta_jet
from .modgroup import ProjMatrix, coset_reps, gamma4_reduce, mobius
from .numerics import (TOL, NumericsError, check_tau, fd_jet, newton_solve,
                       poly_roots)

BRANCH_TAU_CLASSES = ("oo", "i", "rho")  # cusp, order-2, order-3 vertices


@dataclass(frozen=True)
class BranchPointResult:
    """Marker for inversion at a branch value of the curve."""

    value: complex
    tau_class: str


@dataclass(frozen=True)
class InversionResult:
    tau0: complex
    orbit: tuple
    residual: float
    matrix: ProjMatrix
    j_residual: float


def _is_branch_point(a: complex) -> bool:
    return abs(a) < 1e-13 or abs(a ** 4 - 1.0) < 1e-13


def invert_chi(a: complex) -> InversionResult | BranchPointResult:
    """Solve chi(tau0) = A for the conformal-map generator chi.

    Branch values A in {0, +-1, +-i, oo} correspond to the cusp class and
    return a marker instead of a point.
    """
    a = complex(a)
    if _is_branch_point(a):
        return BranchPointResult(a, "oo")
    m = a * a
    m2 = m * m
    if m2.imag == 0.0 and m2.real >= 1.0:
        # A^4 lands on the cut of K; take the upper-side branch
        m *= cmath.exp(5e-15j)
    tau_prime = 1j * el.ellip_K(m) / el.ellip_Kprime(m)
    if tau_prime.imag <= 0:
        raise NumericsError(f"inversion ratio left the half-plane: {tau_prime}")
    doubled = 2.0 * tau_prime
    candidates = []
    for index, rep in enumerate(coset_reps()):
        point, _ = gamma4_reduce(mobius(rep, doubled))
        try:
            value = chi_burnside(point)
        except NumericsError:
            candidates.append((math.inf, point, rep, index))
            continue
        candidates.append((abs(value - a), point, rep, index))
    candidates.sort(key=lambda item: (item[0], item[3]))
    best = candidates[0]
    if best[0] > TOL.root_tol:
        raise NumericsError(f"inversion failed: best residual {best[0]:.3e}")
    j_res = abs(el.klein_j(best[1]) - octahedral_j(a))
    return InversionResult(best[1], tuple(c[1] for c in candidates), best[0],
                           best[2], j_res)


# ---------------------------------------------------------------------------
# Exact values


SQRT2 = math.sqrt(2.0)


def exact_value_suite() -> dict:
    """Residuals of the table of special values of chi and theta quotients."""
    out = {}
    out["chi_sqrt2_abs"] = abs(abs(chi_burnside(1j * SQRT2))
                               - math.sqrt(SQRT2 - 1.0))
    out["t4_over_t3_half_i"] = abs(th.theta4(0.5j) / th.theta3(0.5j)
                                   - (SQRT2 - 1.0))
    chi_i = chi_burnside(1j)
    out["chi_at_i_in_class"] = min(abs(chi_i - v) for v in
                                   (1 + SQRT2, 1 - SQRT2, -1 + SQRT2, -1 - SQRT2))
    # chi on the 24 level-one images of i sqrt(2) produces 24 distinct roots
    # of (A^8 + 14 A^4 + 1)^3 = 500 (A^4 - 1)^4 A^4, i.e. J = 125/27 there
    worst = 0.0
    values = []
    for rep in coset_reps():
        sigma, _ = gamma4_reduce(mobius(rep, 1j * SQRT2))
        av = chi_burnside(sigma)
        values.append(av)
        worst = max(worst, abs(octahedral_j(av) - 125.0 / 27.0))
    out["octahedral_orbit_j"] = worst
    separation = min(abs(v1 - v2) for i, v1 in enumerate(values)
                     for v2 in values[i + 1:])
    out["octahedral_orbit_distinct"] = 0.0 if separation > 1e-6 else 1.0
    for probe in (0.0, 1.0, -1.0, 1j, -1j):
        res = invert_chi(probe)
        key = f"branch_marker_{probe}"
        out[key] = 0.0 if isinstance(res, BranchPointResult) else 1.0
    return out


def series_at_i() -> dict:
    """Taylor data of J and chi at tau = i against the closed-form targets.

    J derivatives come from central differences on the Eisenstein route (the
    theta route would not be independent), chi' from the exact jet.
    """
    g2, _, _ = el.eisenstein(1j)
    g2 = g2.real

    def jfun(t):
        return el.eisenstein(t)[2]

    d1, d2, d3 = fd_jet(jfun, 1j, order=3, h=0.005)
    out = {
        "j_first_deriv": abs(d1),
        "j_coeff2": abs(d2 / 2.0 + 12.0 * g2 / math.pi ** 2),
        "j_coeff3": abs(d3 / 6.0 + 12j * g2 / math.pi ** 2),
    }
    from fractions import Fraction
    jet = theta_jet(1j, (Fraction(1, 2), 0), 1)
    chi1 = -(jet.t4 / jet.t3).d[1]
    out["chi_slope_sq"] = abs(chi1 ** 2 - (4.0 * SQRT2 - 6.0) * g2 / math.pi ** 2)
    return out


# ---------------------------------------------------------------------------
# Quintic


@dataclass(frozen=True)
class QuinticSolution:
    a: complex
    roots: tuple
    taus: tuple          # half-plane points, or 'oo' markers at a = 0
    poly_residuals: tuple
    theta_residuals: tuple
    vieta_residual: float
    newton_iterations: int


def modular_quintic_rhs(tau: complex) -> complex:
    """16 eta^6(2 tau)/theta3^6(tau); x^5 - x + rhs = 0 at x = theta4/theta3."""
    tau = check_tau(tau)
    return 16.0 * th.eta(2.0 * tau) ** 6 / th.theta3(tau) ** 6


def _rhs_and_slope(tau: complex):
    j2 = theta_jet(tau, (2, 0), 1)
    j1 = theta_jet(tau, (1, 0), 1)
    g = 16.0 * j2.eta.pow(6) / j1.t3.pow(6)
    return g.d[0], g.d[1]


def _damped_newton(target: complex, start: complex, max_iter: int = 80):
    """Newton with step halving; keeps the continuation on the half-plane."""
    tau = start
    fval = _rhs_and_slope(tau)[0] - target
    for it in range(1, max_iter + 1):
        if abs(fval) <= 1e-13:
            return tau, it - 1
        slope = _rhs_and_slope(tau)[1]
        if abs(slope) < 1e-300:
            raise NumericsError("derivative underflow in quintic continuation")
        step = fval / slope
        for _ in range(30):
            cand = tau - step
            if cand.imag > 0:
                cand_val = _rhs_and_slope(cand)[0] - target
                if abs(cand_val) < abs(fval):
                    tau, fval = cand, cand_val
                    break
            step *= 0.5
        else:
            raise NumericsError("quintic continuation stalled")
    raise NumericsError("quintic continuation did not converge")


def _vieta_residual(a: complex, roots) -> float:
    """Expand prod (x - r) and compare against x^5 + 0 x^4 + ... - x + a."""
    coeffs = [1.0 + 0.0j]
    for r in roots:
        coeffs = [c for c in coeffs] + [0.0]
        for i in range(len(coeffs) - 1, 0, -1):
            coeffs[i] = coeffs[i] - r * coeffs[i - 1]
    target = [1.0, 0.0, 0.0, 0.0, -1.0, complex(a)]
    return max(abs(c - t) for c, t in zip(coeffs, target))


def quintic_solve(a: complex, seed_scale: float = 1e-3,
                  steps: int = 16) -> QuinticSolution:
    """All five roots of x^5 - x + a = 0 through the modular parametrization."""
    a = complex(a)
    if a == 0:
        roots = (0.0 + 0.0j, 1.0 + 0.0j, -1.0 + 0.0j, 1j, -1j)
        return QuinticSolution(a, roots, ("oo",) * 5,
                               tuple(abs(r ** 5 - r) for r in roots),
                               (0.0,) * 5, _vieta_residual(0.0, roots), 0)

    def solve_at(target, start):
        def f(t):
            return _rhs_and_slope(t)[0] - target

        def df(t):
            return _rhs_and_slope(t)[1]

        return newton_solve(f, df, start, root_tol=1e-13)

    def seed_for(value):
        s = cmath.log(value / 16.0) / (1j * math.pi)
        if s.imag <= 0:
            raise NumericsError("seed left the half-plane; |a| too large")
        return s

    total_iter = 0
    try:
        tau, total_iter = solve_at(a, seed_for(a))
    except NumericsError:
        # straight-segment continuation from a small multiple of a,
        # each step warm-started with a damped Newton
        a0 = a * seed_scale
        tau, its = solve_at(a0, seed_for(a0))
        total_iter = its
        for step in range(1, steps + 1):
            target = a0 + (a - a0) * step / steps
            tau, its = _damped_newton(target, tau)
            total_iter += its
    x1 = x_quotient(tau)
    # deflate and finish with the simultaneous root finder
    quartic = [1.0, x1, x1 ** 2, x1 ** 3, x1 ** 4 - 1.0]
    rest = poly_roots(quartic)
    roots = [x1] + sorted(rest, key=lambda z: (round(cmath.phase(z), 9),
                                               round(abs(z), 9)))
    taus = [tau]
    theta_res = [abs(x_quotient(tau) - x1)]
    for r in roots[1:]:
        inv = invert_chi(-r)
        if isinstance(inv, BranchPointResult):
            taus.append("oo")
            theta_res.append(abs(r ** 5 - r + a))
            continue
        sigma = inv.tau0 / 2.0
        taus.append(sigma)
        theta_res.append(abs(x_quotient(sigma) - r))
    poly_res = tuple(abs(r ** 5 - r + a) for r in roots)
    return QuinticSolution(a, tuple(roots), tuple(taus), poly_res,
                           tuple(theta_res), _vieta_residual(a, roots),
                           total_iter)
