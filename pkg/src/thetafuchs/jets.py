"""Exact tau-derivatives of theta-constant expressions.

A Jet holds the derivatives (f, f', f'', ...) of a function at one point and
supports field arithmetic, exp/log, and rational powers via Leibniz and chain
rules.  Derivatives of the four base constants theta2, theta3, theta4, eta_w
come from their closed first-order system

    theta2'/theta2 = (i/pi) eta_w + (pi i/12)(theta3^4 + theta4^4)
    theta3'/theta3 = (i/pi) eta_w + (pi i/12)(theta2^4 - theta4^4)
    theta4'/theta4 = (i/pi) eta_w - (pi i/12)(theta2^4 + theta3^4)
    eta_w'        = (i/pi)(2 eta_w^2 - (pi^4/144)(theta2^8 + theta3^8 + theta4^8))

together with pi * eta' = i * eta * eta_w for Dedekind's eta, so any finite
expression in these constants at affine arguments c*tau + d differentiates
exactly to the requested order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import theta_eta as th
from .numerics import NumericsError, check_tau


class Jet:
    """Derivatives (d[0]=value, d[k]=k-th derivative) at a fixed point."""

    __slots__ = ("d",)

    def __init__(self, derivs):
        self.d = tuple(complex(v) for v in derivs)

    @property
    def order(self) -> int:
        return len(self.d) - 1

    @property
    def value(self) -> complex:
        return self.d[0]

    def __getitem__(self, k: int) -> complex:
        return self.d[k]

    @staticmethod
    def const(c: complex, order: int) -> "Jet":
        return Jet([c] + [0.0] * order)

    @staticmethod
    def variable(x: complex, order: int) -> "Jet":
        d = [complex(x)] + [0.0] * order
        if order >= 1:
            d[1] = 1.0
        return Jet(d)

    def _coerce(self, other, order):
        if isinstance(other, Jet):
            return other
        return Jet.const(other, order)

    def __add__(self, other):
        o = self._coerce(other, self.order)
        return Jet([a + b for a, b in zip(self.d, o.d)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-a for a in self.d])

    def __sub__(self, other):
        return self + (-self._coerce(other, self.order))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other, self.order)
        n = min(self.order, o.order)
        return Jet([sum(comb(k, j) * self.d[j] * o.d[k - j] for j in range(k + 1))
                    for k in range(n + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other, self.order)
        n = min(self.order, o.order)
        if o.d[0] == 0:
            raise NumericsError("jet division by zero value")
        h = [self.d[0] / o.d[0]]
        for k in range(1, n + 1):
            acc = self.d[k]
            for j in range(k):
                acc -= comb(k, j) * h[j] * o.d[k - j]
            h.append(acc / o.d[0])
        return Jet(h)

    def __rtruediv__(self, other):
        return Jet.const(other, self.order) / self

    def exp(self) -> "Jet":
        h = [cmath.exp(self.d[0])]
        for k in range(1, self.order + 1):
            acc = 0.0
            for j in range(k):
                acc += comb(k - 1, j) * self.d[k - j] * h[j]
            h.append(acc)
        return Jet(h)

    def log(self) -> "Jet":
        """Principal-branch logarithm jet."""
        if self.d[0] == 0:
            raise NumericsError("jet log of zero value")
        g = self.deriv_jet() / self
        h = [cmath.log(self.d[0])]
        for k in range(1, self.order + 1):
            h.append(g.d[k - 1])
        return Jet(h)

    def deriv_jet(self) -> "Jet":
        """Jet of f' (one order lower)."""
        return Jet(self.d[1:]) if self.order >= 1 else Jet([0.0])

    def pow(self, a) -> "Jet":
        """f^a on the principal branch, a any rational or complex constant."""
        if isinstance(a, int) and a >= 0:
            out = Jet.const(1.0, self.order)
            base = self
            k = a
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        if isinstance(a, Fraction):
            a = a.numerator / a.denominator
        if self.d[0] == 0:
            raise NumericsError("jet power of zero value")
        # h = f^a from h' = a h f'/f
        g = self.deriv_jet() / self
        h = [cmath.exp(a * cmath.log(self.d[0]))]
        for k in range(1, self.order + 1):
            acc = 0.0
            for j in range(k):
                acc += comb(k - 1, j) * (a * g.d[k - 1 - j]) * h[j]
            h.append(acc)
        return Jet(h)

    def __pow__(self, a):
        return self.pow(a)

    def sqrt(self) -> "Jet":
        return self.pow(0.5)

    def truncate(self, order: int) -> "Jet":
        return Jet(self.d[: order + 1])

    def __repr__(self):
        return f"Jet({self.d!r})"


# ---------------------------------------------------------------------------
# Base jets of the constant quadruple via the closed system


def _rhs(t2: Jet, t3: Jet, t4: Jet, w: Jet):
    ip = 1j / math.pi
    pf = math.pi * 1j / 12.0
    r2 = t2 * (ip * w + pf * (t3.pow(4) + t4.pow(4)))
    r3 = t3 * (ip * w + pf * (t2.pow(4) - t4.pow(4)))
    r4 = t4 * (ip * w - pf * (t2.pow(4) + t3.pow(4)))
    rw = ip * (2.0 * w * w - (math.pi ** 4 / 144.0)
               * (t2.pow(8) + t3.pow(8) + t4.pow(8)))
    return r2, r3, r4, rw


def _poly_tail(t: complex, n: int) -> complex:
    """(1+t)^n - 1 expanded in t, avoiding the 1-1 cancellation."""
    acc = 0.0 + 0.0j
    for j in range(n, 0, -1):
        acc = acc * t + comb(n, j)
    return acc * t


def _first_derivatives(sigma: complex, t2v, t3v, t4v, wv):
    """Cancellation-free first derivatives of the quadruple.

    Near the cusp the log-derivatives theta3'/theta3, theta4'/theta4 and
    eta_w' are exponentially small differences of order-one quantities; they
    are assembled here from the tail series E2-1, theta3-1, theta4-1 so the
    cancellations happen exactly.
    """
    e2t = th.e2_tail(sigma)
    t3t = th.theta3_tail(sigma)
    t4t = th.theta4_tail(sigma)
    t2q = t2v ** 4
    t3q_t = _poly_tail(t3t, 4)   # theta3^4 - 1
    t4q_t = _poly_tail(t4t, 4)   # theta4^4 - 1
    pf = math.pi * 1j / 12.0
    a2 = pf * (3.0 + e2t + t3q_t + t4q_t)
    a3 = pf * (e2t + t2q - t4q_t)
    a4 = pf * (e2t - t2q - t3q_t)
    # 2 E2^2 - theta2^8 - theta3^8 - theta4^8, all as tails
    combo = (2.0 * (2.0 * e2t + e2t * e2t) - t2v ** 8
             - _poly_tail(t3t, 8) - _poly_tail(t4t, 8))
    w1 = (1j / math.pi) * (math.pi ** 4 / 144.0) * combo
    return a2 * t2v, a3 * t3v, a4 * t4v, w1


@lru_cache(maxsize=4096)
def _quad_jets(sigma: complex, order: int):
    """Jets of (theta2, theta3, theta4, eta_w) at sigma to the given order."""
    sigma = check_tau(sigma)
    vals = [[th.theta2(sigma)], [th.theta3(sigma)], [th.theta4(sigma)],
            [th.eta_w(sigma)]]
    if order >= 1:
        d1 = _first_derivatives(sigma, vals[0][0], vals[1][0], vals[2][0],
                                vals[3][0])
        for v, g in zip(vals, d1):
            v.append(g)
    for m in range(1, order):
        jets = [Jet(v) for v in vals]
        rhs = _rhs(*jets)
        for v, r in zip(vals, rhs):
            v.append(r.d[m])
    return tuple(Jet(v) for v in vals)


@lru_cache(maxsize=4096)
def _eta_jet(sigma: complex, order: int) -> Jet:
    """Jet of Dedekind eta from pi*eta' = i*eta*eta_w."""
    w = _quad_jets(sigma, max(order - 1, 0))[3]
    vals = [th.eta(sigma)]
    for m in range(order):
        ej = Jet(vals)
        r = (1j / math.pi) * (ej * w.truncate(m))
        vals.append(r.d[m])
    return Jet(vals)


def _rescale(jet: Jet, c) -> Jet:
    """Chain rule for sigma = c*tau + d: d^k/dtau^k = c^k d^k/dsigma^k."""
    c = complex(c)
    return Jet([jet.d[k] * c ** k for k in range(jet.order + 1)])


@dataclass(frozen=True)
class ThetaJet:
    """Jets (in tau) of the constants evaluated at the argument c*tau + d."""

    tau: complex
    scale: tuple
    order: int
    t2: Jet
    t3: Jet
    t4: Jet
    etaw: Jet
    eta: Jet

    @property
    def frame(self) -> th.ThetaFrame:
        return th.ThetaFrame(self.tau, self.t2.value, self.t3.value,
                             self.t4.value, self.eta.value, self.etaw.value)


def theta_jet(tau: complex, scale=(1, 0), order: int = 1) -> ThetaJet:
    """Jets of theta2..4, eta, eta_w at c*tau+d, derivatives taken in tau.

    scale is the pair (c, d); ints, Fractions and floats are accepted.
    order up to 4 is supported (higher orders work but are untested).
    """
    tau = check_tau(tau)
    if order < 0 or order > 6:
        raise NumericsError("theta_jet order out of range")
    c, d = scale
    cf = float(Fraction(c)) if not isinstance(c, (int, float)) else float(c)
    df = float(Fraction(d)) if not isinstance(d, (int, float)) else float(d)
    sigma = cf * tau + df
    if sigma.imag <= 0:
        raise NumericsError(f"scaled argument {sigma} left the half-plane")
    t2, t3, t4, w = _quad_jets(sigma, order)
    e = _eta_jet(sigma, order)
    return ThetaJet(tau, (cf, df), order,
                    _rescale(t2, cf), _rescale(t3, cf), _rescale(t4, cf),
                    _rescale(w, cf), _rescale(e, cf))


def tau_jet(tau: complex, order: int) -> Jet:
    """The identity function tau as a jet."""
    return Jet.variable(tau, order)
