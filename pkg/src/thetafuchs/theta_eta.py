"""Jacobi theta constants, Dedekind eta, and the Weierstrass eta-constant.

Conventions (nome q = exp(pi*i*tau) throughout):

    theta2(tau) = 2 exp(pi*i*tau/4) * sum_{k>=0} exp((k^2+k) pi*i*tau)
    theta3(tau) = 1 + 2 sum_{k>=1} exp(k^2 pi*i*tau)
    theta4(tau) = 1 + 2 sum_{k>=1} (-1)^k exp(k^2 pi*i*tau)
    eta(tau)    = exp(pi*i*tau/12) * prod_{k>=1} (1 - exp(2 pi*i*k*tau))

The infinite product for eta is summed through Euler's pentagonal-number
series, which converges like a theta series and so shares the same term cap.

eta_w is the Weierstrass zeta-value at 1 on the lattice with half-periods
(1, tau).  It equals c * E2(tau) with E2 the weight-2 Eisenstein series in
exp(2 pi*i*tau); the constant c is fixed once at import time by forcing the
theta3 member of the closed derivative system at tau = 2i and is checked
against the analytic value pi^2/12.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .numerics import TOL, NumericsError, check_tau

_MAX_TERMS = 64


class SeriesTruncationError(NumericsError):
    """Raised when a q-series still moves at the term cap (Im tau too small)."""


def _sum_capped(terms, what: str, cap: int = _MAX_TERMS) -> complex:
    """Sum terms until |term| < series_eps * |partial sum|, cap the count.

    The default cap suits the theta series, whose exponents grow
    quadratically; linear-exponent sums pass a larger cap explicitly.
    """
    total = 0.0 + 0.0j
    for k, t in enumerate(terms):
        total += t
        if abs(t) < TOL.series_eps * max(abs(total), 1e-300):
            return total
        if k + 1 >= cap:
            raise SeriesTruncationError(
                f"{what}: series needs more than {cap} terms")
    return total


def theta2(tau: complex) -> complex:
    tau = check_tau(tau)
    q = cmath.exp(0.25j * math.pi * tau)

    def terms():
        k = 0
        while True:
            yield q ** ((2 * k + 1) ** 2)
            k += 1

    return 2.0 * _sum_capped(terms(), "theta2")


def theta3(tau: complex) -> complex:
    tau = check_tau(tau)
    q = cmath.exp(1j * math.pi * tau)

    def terms():
        yield 1.0 + 0.0j
        k = 1
        while True:
            yield 2.0 * q ** (k * k)
            k += 1

    return _sum_capped(terms(), "theta3")


def theta4(tau: complex) -> complex:
    tau = check_tau(tau)
    q = cmath.exp(1j * math.pi * tau)

    def terms():
        yield 1.0 + 0.0j
        k = 1
        while True:
            yield 2.0 * (-1) ** k * q ** (k * k)
            k += 1

    return _sum_capped(terms(), "theta4")


def euler_product(x: complex) -> complex:
    """prod_{k>=1} (1 - x^k) via the pentagonal-number series."""

    def terms():
        yield 1.0 + 0.0j
        k = 1
        while True:
            sign = -1.0 if k % 2 else 1.0
            yield sign * x ** (k * (3 * k - 1) // 2)
            yield sign * x ** (k * (3 * k + 1) // 2)
            k += 1

    return _sum_capped(terms(), "eta product")


def eta(tau: complex) -> complex:
    tau = check_tau(tau)
    return cmath.exp(1j * math.pi * tau / 12.0) * euler_product(
        cmath.exp(2j * math.pi * tau))


def theta3_tail(tau: complex) -> complex:
    """theta3(tau) - 1, summed without the constant term."""
    tau = check_tau(tau)
    q = cmath.exp(1j * math.pi * tau)

    def terms():
        k = 1
        while True:
            yield 2.0 * q ** (k * k)
            k += 1

    return _sum_capped(terms(), "theta3 tail")


def theta4_tail(tau: complex) -> complex:
    """theta4(tau) - 1."""
    tau = check_tau(tau)
    q = cmath.exp(1j * math.pi * tau)

    def terms():
        k = 1
        while True:
            yield 2.0 * (-1) ** k * q ** (k * k)
            k += 1

    return _sum_capped(terms(), "theta4 tail")


def e2_tail(tau: complex) -> complex:
    """E2(tau) - 1 = -24 sum k qb^k/(1-qb^k)."""
    tau = check_tau(tau)
    qb = cmath.exp(2j * math.pi * tau)

    def terms():
        k = 1
        while True:
            qk = qb ** k
            yield -24.0 * k * qk / (1.0 - qk)
            k += 1

    return _sum_capped(terms(), "E2 tail", cap=512)


def eisenstein_e2(tau: complex) -> complex:
    """E2(tau) = 1 - 24 sum k*qb^k/(1-qb^k), qb = exp(2 pi*i*tau)."""
    return 1.0 + e2_tail(tau)


def _theta3_deriv_series(tau: complex) -> complex:
    """d theta3 / d tau by term-wise differentiation (calibration oracle)."""
    q = cmath.exp(1j * math.pi * tau)

    def terms():
        k = 1
        while True:
            yield 2j * math.pi * k * k * q ** (k * k)
            k += 1

    return _sum_capped(terms(), "theta3'")


@lru_cache(maxsize=1)
def eta_w_scale() -> float:
    """Calibration constant c in eta_w = c * E2.

    Solved from the theta3 equation of the closed system at tau = 2i:
        theta3'/theta3 = (i/pi) eta_w + (pi*i/12)(theta2^4 - theta4^4).
    The result must agree with pi^2/12 (lattice half-periods (1, tau)).
    """
    t0 = 2j
    lhs = _theta3_deriv_series(t0) / theta3(t0)
    quartic = (math.pi * 1j / 12.0) * (theta2(t0) ** 4 - theta4(t0) ** 4)
    c = ((lhs - quartic) * math.pi / 1j / eisenstein_e2(t0)).real
    expected = math.pi ** 2 / 12.0
    if abs(c - expected) > 1e-9 * expected:
        raise NumericsError(f"eta_w calibration failed: c={c!r}")
    return c


def eta_w(tau: complex) -> complex:
    """Weierstrass eta-constant zeta(1) on the lattice with half-periods (1, tau)."""
    return eta_w_scale() * eisenstein_e2(tau)


@dataclass(frozen=True)
class ThetaFrame:
    """theta2..theta4, eta, eta_w at a common tau."""

    tau: complex
    t2: complex
    t3: complex
    t4: complex
    eta: complex
    etaw: complex

    def check(self, tol: float | None = None) -> None:
        tol = TOL.identity_tol if tol is None else tol
        quartic = abs(self.t3 ** 4 - self.t2 ** 4 - self.t4 ** 4)
        triple = abs(2.0 * self.eta ** 3 - self.t2 * self.t3 * self.t4)
        if quartic > tol or triple > tol:
            raise NumericsError(
                f"theta frame inconsistent: quartic={quartic:.3e} triple={triple:.3e}")


def theta(tau: complex) -> ThetaFrame:
    """Evaluate the full constant frame at tau and self-check the identities."""
    tau = check_tau(tau)
    frame = ThetaFrame(tau, theta2(tau), theta3(tau), theta4(tau),
                       eta(tau), eta_w(tau))
    frame.check(tol=1e-9 if tau.imag < 0.1 else None)
    return frame


# ---------------------------------------------------------------------------
# Identity corpus: half/double argument relations, the four sum relations,
# Landen, the quartic, the eta triple product, and Dedekind's two relations
# for eta1 = eta(2 tau), eta2 = eta(tau/2), eta3 = eta((tau+1)/2).


def identity_residuals(tau: complex) -> dict[str, float]:
    tau = check_tau(tau)
    t2, t3, t4 = theta2(tau), theta3(tau), theta4(tau)
    t2h, t3h, t4h = theta2(tau / 2), theta3(tau / 2), theta4(tau / 2)
    t2d, t3d, t4d = theta2(2 * tau), theta3(2 * tau), theta4(2 * tau)
    t2q, t3q = theta2(4 * tau), theta3(4 * tau)
    t3s, t4s = theta3(tau + 0.5), theta4(tau + 0.5)
    e = eta(tau)
    e1, e2_, e3 = eta(2 * tau), eta(tau / 2), eta((tau + 1) / 2)

    res = {
        "half_t2": abs(t2h ** 2 - 2.0 * t2 * t3),
        "half_t3": abs(t3h ** 2 - (t3 ** 2 + t2 ** 2)),
        "half_t4": abs(t4h ** 2 - (t3 ** 2 - t2 ** 2)),
        "double_t2": abs(2.0 * t2d ** 2 - (t3 ** 2 - t4 ** 2)),
        "double_t2_quad": abs(2.0 * t2d ** 2 - 4.0 * t2q * t3q),
        "double_t3": abs(2.0 * t3d ** 2 - (t3 ** 2 + t4 ** 2)),
        "double_t3_shift": abs(2.0 * t3d ** 2 - 2.0 * t4s * t3s),
        "double_t4_shift": abs(2.0 * t4d ** 2 - (t3s ** 2 + t4s ** 2)),
        "double_t4": abs(2.0 * t4d ** 2 - 2.0 * t4 * t3),
        "sum_plain": abs(t4 + t3 - 2.0 * t3q),
        "diff_plain": abs(t4 - t3 + 2.0 * t2q),
        "sum_i": abs(t4 + 1j * t3 - (1 + 1j) * t3s),
        "diff_i": abs(t4 - 1j * t3 - (1 - 1j) * t4s),
        "landen": abs(2.0 * t2d * t3d - t2 ** 2),
        "jacobi_quartic": abs(t3 ** 4 - t2 ** 4 - t4 ** 4),
        "eta_triple": abs(2.0 * e ** 3 - t2 * t3 * t4),
        "dedekind_sum": abs(16.0 * e1 ** 8 + e2_ ** 8
                            + cmath.exp(2j * math.pi / 3.0) * e3 ** 8),
        "dedekind_prod": abs(e1 * e2_ * e3 - cmath.exp(1j * math.pi / 24.0) * e ** 3),
    }
    return res
