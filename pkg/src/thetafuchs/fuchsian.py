"""Schwarzian machinery and residual verification of the Fuchsian catalogue.

For a uniformizer x(tau) the meromorphic derivative

    [x, tau] = {x, tau} / x_tau^2,   {x, tau} = x'''/x' - (3/2)(x''/x')^2

must reproduce the rational function Q(x) attached to the curve, i.e.
[x, tau] - Q(x(tau)) vanishes identically.  All derivatives come from exact
theta jets; finite differences appear only as a cross-oracle in the tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import elliptic as el
from . import theta_eta as th
from .jets import Jet, theta_jet
from .numerics import NumericsError, check_tau

_CRITICAL_XTAU = 1e-6


@dataclass(frozen=True)
class SchwarzianSample:
    tau: complex
    x: complex
    x_tau: complex
    x_tautau: complex
    x_tautautau: complex
    schwarzian: complex
    mero: complex


def brackets_from_jet(j: Jet):
    """({x,tau}, [x,tau]) from an order-3 jet."""
    x1, x2, x3 = j.d[1], j.d[2], j.d[3]
    if x1 == 0:
        raise NumericsError("critical point: x_tau = 0, Schwarzian is singular")
    sch = x3 / x1 - 1.5 * (x2 / x1) ** 2
    return sch, sch / (x1 * x1)


def schwarzian_jet(xfun, tau: complex) -> SchwarzianSample:
    """Schwarzian data of a jet-valued expression xfun(tau, order) -> Jet."""
    tau = check_tau(tau)
    j = xfun(tau, 3)
    sch, mero = brackets_from_jet(j)
    return SchwarzianSample(tau, j.d[0], j.d[1], j.d[2], j.d[3], sch, mero)


# ---------------------------------------------------------------------------
# Uniformizing expressions (jets in tau)


def x_burnside(tau, order=3) -> Jet:
    j = theta_jet(tau, (1, 0), order)
    return j.t4 / j.t3


def chi_half(tau, order=3) -> Jet:
    """chi(tau) = -theta4(tau/2)/theta3(tau/2), the conformal-map normalization."""
    from fractions import Fraction
    j = theta_jet(tau, (Fraction(1, 2), 0), order)
    return -(j.t4 / j.t3)


def y_burnside(tau, order=3) -> Jet:
    e2 = theta_jet(tau, (2, 0), order).eta
    t3 = theta_jet(tau, (1, 0), order).t3
    return 4j * e2.pow(3) / t3.pow(3)


def k_modulus(tau, order=3) -> Jet:
    j = theta_jet(tau, (1, 0), order)
    return (j.t2 / j.t3).pow(2)


def kprime2(tau, order=3) -> Jet:
    j = theta_jet(tau, (1, 0), order)
    return (j.t4 / j.t3).pow(4)


def z_fermat8(tau, order=3) -> Jet:
    t4d = theta_jet(tau, (2, 0), order).t4
    t3 = theta_jet(tau, (1, 0), order).t3
    return t4d / t3


def lambda_mixed(tau, order=3) -> Jet:
    t3d = theta_jet(tau, (2, 0), order).t3
    t4 = theta_jet(tau, (1, 0), order).t4
    t3q = theta_jet(tau, (4, 0), order).t3
    return t3d.pow(2) / (t4 * t3q)


def j_invariant(tau, order=3) -> Jet:
    """Klein's J as a jet, through the octahedral form in x(tau/2)."""
    from fractions import Fraction
    j = theta_jet(tau, (Fraction(1, 2), 0), order)
    x = j.t4 / j.t3
    x4 = x.pow(4)
    num = (x4.pow(2) + 14.0 * x4 + 1.0).pow(3)
    den = (x.pow(5) - x).pow(4)
    return num / den * (1.0 / 108.0)


def psi1_tau(tau, order=3) -> Jet:
    """Gamma(4) weight-2 solution 2i sqrt(i pi) eta^3(2 tau)/theta3(tau)."""
    e2 = theta_jet(tau, (2, 0), order).eta
    t3 = theta_jet(tau, (1, 0), order).t3
    return (2j * cmath.sqrt(1j * math.pi)) * e2.pow(3) / t3


# ---------------------------------------------------------------------------
# Q catalogue


@dataclass(frozen=True)
class QFunction:
    id: str
    evaluator: object  # x -> Q(x)
    singular_points: tuple
    accessory_zero: bool
    uniformizer: object = None  # (tau, order) -> Jet, when known
    residual: object = None     # (tau, jet) -> float, stable override
    notes: str = ""


def q_burnside(x: complex) -> complex:
    return -0.5 * (x ** 8 + 14.0 * x ** 4 + 1.0) / (x ** 5 - x) ** 2


def q_burnside_dx(x: complex) -> complex:
    num = x ** 8 + 14.0 * x ** 4 + 1.0
    dnum = 8.0 * x ** 7 + 56.0 * x ** 3
    den = x ** 5 - x
    dden = 5.0 * x ** 4 - 1.0
    return -0.5 * (dnum * den - 2.0 * num * dden) / den ** 3


def q_legendre(z: complex) -> complex:
    return -0.5 * (z * z - z + 1.0) / (z * (z - 1.0)) ** 2


def q_bruns(j: complex) -> complex:
    return -(36.0 * j * j - 41.0 * j + 32.0) / (72.0 * (j * (j - 1.0)) ** 2)


def q_fermat(n: int):
    def q(z: complex) -> complex:
        return -0.5 * (z ** (2 * n) + (n * n - 2.0) * z ** n + 1.0) \
            / (z * (z ** n - 1.0)) ** 2
    return q


def q_heun(k: complex) -> complex:
    return -0.5 * (k * k + 1.0) ** 2 / (k * (k * k - 1.0)) ** 2


def q_lambda_mixed(lam: complex) -> complex:
    num = (lam ** 6 + 4.0 * lam ** 5 + 16.0 * lam ** 4 - 56.0 * lam ** 3
           + 68.0 * lam ** 2 - 48.0 * lam + 16.0)
    den = (lam * (lam - 1.0) * (lam ** 2 + 4.0 * lam - 4.0)) ** 2
    return -0.5 * num / den


def q_parabolic(branch_points, accessory=None):
    """The all-parabolic family for y^2 = prod (x - e_k), odd point count."""
    e = tuple(complex(v) for v in branch_points)
    g = (len(e) - 1) // 2
    if len(e) != 2 * g + 1:
        raise NumericsError("parabolic family needs an odd number of points")

    def q(x: complex) -> complex:
        s = sum(1.0 / (x - ek) ** 2 for ek in e)
        prod = 1.0
        for ek in e:
            prod *= (x - ek)
        acc = accessory(x) if accessory else 0.0
        return -0.5 * (s - (2.0 * g * x ** (2 * g - 1) + acc) / prod)
    return q


def q_parabolic_even(branch_points, accessory=None):
    """Same family for an even number 2g+2 of finite branch points."""
    e = tuple(complex(v) for v in branch_points)
    g = len(e) // 2 - 1
    if len(e) != 2 * g + 2:
        raise NumericsError("even family needs 2g+2 points")
    esum = sum(e)

    def q(x: complex) -> complex:
        s = sum(1.0 / (x - ek) ** 2 for ek in e)
        prod = 1.0
        for ek in e:
            prod *= (x - ek)
        acc = accessory(x) if accessory else 0.0
        top = 2.0 * (g + 1) * x ** (2 * g) + 2.0 * g * esum * x ** (2 * g - 1) + acc
        return -0.5 * (s - top / prod)
    return q


def q_whittaker(branch_points, accessory=None):
    """Whittaker's -3/8 variant on the same pole set."""
    base = q_parabolic(branch_points, accessory)

    def q(x: complex) -> complex:
        return 0.75 * base(x)  # -3/8 from -1/2
    return q


_EIGHTH_ROOTS = tuple(cmath.exp(2j * math.pi * k / 8.0) for k in range(8))


# ---------------------------------------------------------------------------
# Stable residuals.  Near the cusp both [x,tau] and Q(x) grow like q^-2 and
# the naive denominators (x^5-x, z^8-1, lambda-1) lose half the digits to
# cancellation.  The factored forms below rebuild them from single theta
# series; the residual is then assembled as |{x,tau} - Q x_tau^2| / |x_tau|^2,
# which is the same number evaluated where it is well conditioned.  Each
# factored form is one of the separately verified corpus identities.


def _fused_residual(j: Jet, q_value: complex) -> float:
    x1 = j.d[1]
    sch, _ = brackets_from_jet(j)
    return abs(sch - q_value * x1 * x1) / abs(x1) ** 2


def _residual_burnside(tau: complex, j: Jet, half: bool) -> float:
    # x^4 - 1 = -theta2^4/theta3^4 and x^5 - x = -16 eta^6(2s)/theta3^6(s)
    # at s = tau (s = tau/2 for the conformal-map normalization chi).
    s = tau / 2.0 if half else tau
    t2, t3 = th.theta2(s), th.theta3(s)
    eta_d = th.eta(2.0 * s)
    v = -(t2 / t3) ** 4
    num = 16.0 + 16.0 * v + v * v
    dd = 16.0 * eta_d ** 6 / t3 ** 6
    if not half:
        dd = -dd
    q_val = -0.5 * num / (dd * dd)
    return _fused_residual(j, q_val)


def _residual_fermat8(tau: complex, j: Jet) -> float:
    # z^8 - 1 = -theta2^4/theta3^4 via theta4^2(2 tau) = theta3 theta4
    t2, t3 = th.theta2(tau), th.theta3(tau)
    u = -(t2 / t3) ** 4
    z = j.d[0]
    num = 64.0 + 64.0 * u + u * u
    q_val = -0.5 * num / (z * z * u * u)
    return _fused_residual(j, q_val)


def _residual_lambda_mixed(tau: complex, j: Jet) -> float:
    # lambda - 1 = theta3(tau) theta2(4 tau) / (theta4(tau) theta3(4 tau))
    mu = (th.theta3(tau) * th.theta2(4.0 * tau)
          / (th.theta4(tau) * th.theta3(4.0 * tau)))
    return _lambda_mixed_fused(j, mu)


def _lambda_mixed_fused(j: Jet, mu: complex) -> float:
    lam = j.d[0]
    num = (1.0 + mu * (10.0 + mu * (51.0 + mu * (68.0 + mu * (51.0 + mu
           * (10.0 + mu))))))
    quad = 1.0 + 6.0 * mu + mu * mu  # lambda^2 + 4 lambda - 4
    q_val = -0.5 * num / (lam * mu * quad) ** 2
    return _fused_residual(j, q_val)


def _residual_legendre(tau: complex, j: Jet) -> float:
    # z = k'^2: z - 1 = -theta2^4/theta3^4
    t2, t3 = th.theta2(tau), th.theta3(tau)
    u = -(t2 / t3) ** 4
    z = j.d[0]
    q_val = -0.5 * (u * u + u + 1.0) / (z * u) ** 2
    return _fused_residual(j, q_val)



# ---------------------------------------------------------------------------
# Double-double refinement.  The fused residual is a function of the four
# starting values (theta2, theta3, theta4, eta_w) alone, and it vanishes
# identically in them: the closed system propagates any quadruple to a Mobius
# reparametrization of the theta family, and both the bracket and Q(x) see
# only that family.  Rounding in the assembly is therefore the entire error,
# and redoing the arithmetic in ~32-digit precision removes it.

from math import comb as _comb

from .ddnum import (CDD, DD_INV_PI, DD_PI4_144, DD_PI_12, cdd,
                    cdd_tau, dd_theta_quad)


def _ddjet_mul(a, b):
    n = min(len(a), len(b)) - 1
    out = []
    for k in range(n + 1):
        acc = CDD()
        for j in range(k + 1):
            term = a[j] * b[k - j]
            acc = acc + term.scale(float(_comb(k, j)))
        out.append(acc)
    return out


def _ddjet_div(a, b):
    n = min(len(a), len(b)) - 1
    h = [a[0] / b[0]]
    for k in range(1, n + 1):
        acc = a[k]
        for j in range(k):
            acc = acc - (h[j] * b[k - j]).scale(float(_comb(k, j)))
        h.append(acc / b[0])
    return h


def _ddjet_pow(a, n):
    out = [cdd(1.0)] + [CDD() for _ in a[1:]]
    base = a
    k = n
    while k:
        if k & 1:
            out = _ddjet_mul(out, base)
        base = _ddjet_mul(base, base)
        k >>= 1
    return out


def _ddjet_scale(a, c):
    cc = cdd(c)
    return [v * cc for v in a]


def _ddjet_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _ddjet_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _dd_quad(tau: complex, pow2: int, order: int):
    """CDD jets of the quadruple at 2^pow2 tau via the closed recursion.

    The scaled argument is exact (powers of two), and the starting values are
    summed in double-double, so the only inaccuracy left is the ~1e-32
    arithmetic floor.  Derivatives are with respect to the scaled argument;
    callers chain-rule with _dd_rescale.
    """
    t2v, t3v, t4v, wv = dd_theta_quad(cdd_tau(tau, pow2))
    vals = [[t2v], [t3v], [t4v], [wv]]
    c_ip = CDD(im=DD_INV_PI)   # i/pi
    c_pf = CDD(im=DD_PI_12)    # i pi/12
    c_p4 = CDD(re=DD_PI4_144)  # pi^4/144
    for m in range(order):
        t2, t3, t4, w = vals
        q2 = _ddjet_pow(t2, 4)
        q3 = _ddjet_pow(t3, 4)
        q4 = _ddjet_pow(t4, 4)

        def cmulj(jet, const):
            return [v * const for v in jet]

        b2 = _ddjet_add(cmulj(w, c_ip), cmulj(_ddjet_add(q3, q4), c_pf))
        b3 = _ddjet_add(cmulj(w, c_ip), cmulj(_ddjet_sub(q2, q4), c_pf))
        b4 = _ddjet_sub(cmulj(w, c_ip), cmulj(_ddjet_add(q2, q3), c_pf))
        r2 = _ddjet_mul(t2, b2)
        r3 = _ddjet_mul(t3, b3)
        r4 = _ddjet_mul(t4, b4)
        sum8 = _ddjet_add(_ddjet_add(_ddjet_mul(q2, q2), _ddjet_mul(q3, q3)),
                          _ddjet_mul(q4, q4))
        rw = cmulj(_ddjet_sub(_ddjet_scale(_ddjet_mul(w, w), 2.0),
                              cmulj(sum8, c_p4)), c_ip)
        for v, r in zip(vals, (r2, r3, r4, rw)):
            v.append(r[m])
    return vals


def _dd_rescale(jet, c: float):
    return [v.scale(c ** k) for k, v in enumerate(jet)]


def _dd_uniformizer(qid: str, tau: complex, order: int = 3):
    if qid in ("burnside", "fermat4"):
        t2, t3, t4, w = _dd_quad(tau, 0, order)
        return _ddjet_div(t4, t3)
    if qid == "burnside_chi":
        t2, t3, t4, w = _dd_quad(tau, -1, order)
        half = _ddjet_div(t4, t3)
        return [(-v).scale(0.5 ** k) for k, v in enumerate(half)]
    if qid == "legendre":
        t2, t3, t4, w = _dd_quad(tau, 0, order)
        return _ddjet_pow(_ddjet_div(t4, t3), 4)
    if qid == "heun":
        t2, t3, t4, w = _dd_quad(tau, 0, order)
        return _ddjet_pow(_ddjet_div(t2, t3), 2)
    if qid in ("fermat8", "z9_parabolic"):
        t4d = _dd_rescale(_dd_quad(tau, 1, order)[2], 2.0)
        t3 = _dd_quad(tau, 0, order)[1]
        return _ddjet_div(t4d, t3)
    if qid == "lambda_mixed":
        t3d = _dd_rescale(_dd_quad(tau, 1, order)[1], 2.0)
        base = _dd_quad(tau, 0, order)
        t3q = _dd_rescale(_dd_quad(tau, 2, order)[1], 4.0)
        return _ddjet_div(_ddjet_mul(t3d, t3d), _ddjet_mul(base[2], t3q))
    raise KeyError(f"no double-double path for {qid}")


def _dd_q_value(qid: str, x: CDD) -> CDD:
    one = cdd(1.0)
    half = cdd(-0.5)
    if qid in ("burnside", "burnside_chi", "fermat4"):
        num = x.powi(8) + x.powi(4).scale(14.0) + one
        den = (x.powi(5) - x).powi(2)
        return half * num / den
    if qid == "legendre":
        num = x * x - x + one
        den = (x * (x - one)).powi(2)
        return half * num / den
    if qid == "heun":
        num = (x * x + one).powi(2)
        den = (x * (x * x - one)).powi(2)
        return half * num / den
    if qid in ("fermat8", "z9_parabolic"):
        num = x.powi(16) + x.powi(8).scale(62.0) + one
        den = (x * (x.powi(8) - one)).powi(2)
        return half * num / den
    if qid == "lambda_mixed":
        num = (x.powi(6) + x.powi(5).scale(4.0) + x.powi(4).scale(16.0)
               + x.powi(3).scale(-56.0) + x.powi(2).scale(68.0)
               + x.scale(-48.0) + cdd(16.0))
        quad = x * x + x.scale(4.0) - cdd(4.0)
        den = (x * (x - one) * quad).powi(2)
        return half * num / den
    raise KeyError(qid)


_DD_IDS = frozenset({"burnside", "burnside_chi", "fermat4", "legendre",
                     "heun", "fermat8", "z9_parabolic", "lambda_mixed"})


def residual_dd(qid: str, tau: complex) -> float:
    """|[x,tau] - Q(x)| assembled entirely in double-double arithmetic."""
    j = _dd_uniformizer(qid, tau, 3)
    x1, x2, x3 = j[1], j[2], j[3]
    sch = x3 / x1 - (x2 / x1).powi(2).scale(1.5)
    qv = _dd_q_value(qid, j[0])
    fused = sch - qv * x1 * x1
    return fused.abs_approx() / x1.abs_approx() ** 2


def q_catalogue(qid: str) -> QFunction:
    catalogue = {
        "burnside": QFunction(
            "burnside", q_burnside, (0, 1, -1, 1j, -1j), True, x_burnside,
            lambda tau, j: _residual_burnside(tau, j, False),
            "y^2 = x^5 - x, x = theta4/theta3"),
        "burnside_chi": QFunction(
            "burnside_chi", q_burnside, (0, 1, -1, 1j, -1j), True, chi_half,
            lambda tau, j: _residual_burnside(tau, j, True),
            "same equation in the conformal-map normalization"),
        "legendre": QFunction(
            "legendre", q_legendre, (0, 1), True, kprime2, _residual_legendre,
            "hypergeometric form, z = k'^2"),
        "bruns": QFunction(
            "bruns", q_bruns, (0, 1), True, j_invariant, None,
            "level-one equation in Klein's J"),
        "fermat4": QFunction(
            "fermat4", q_fermat(4), (0,) + tuple(1j ** k for k in range(4)),
            True, x_burnside, lambda tau, j: _residual_burnside(tau, j, False),
            "z^4 + w^4 = 1"),
        "fermat8": QFunction(
            "fermat8", q_fermat(8), (0,) + _EIGHTH_ROOTS, True, z_fermat8,
            _residual_fermat8, "z^8 + w^8 = 1"),
        "z9_parabolic": QFunction(
            "z9_parabolic", q_parabolic((0,) + _EIGHTH_ROOTS), (0,) + _EIGHTH_ROOTS,
            True, z_fermat8, _residual_fermat8,
            "y^2 = z^9 - z in the explicit parabolic form"),
        "heun": QFunction(
            "heun", q_heun, (0, 1, -1), True, k_modulus, None,
            "k^2 = 1 - z^n tower, Heun form in k"),
        "lambda_mixed": QFunction(
            "lambda_mixed", q_lambda_mixed,
            (0, 1, -2 + 2 * math.sqrt(2), -2 - 2 * math.sqrt(2)), True,
            lambda_mixed, _residual_lambda_mixed,
            "three parabolic plus two ramified points"),
    }
    if qid not in catalogue:
        raise KeyError(f"unknown Q id: {qid}")
    return catalogue[qid]


CATALOGUE_IDS = ("burnside", "burnside_chi", "legendre", "bruns", "fermat4",
                 "fermat8", "z9_parabolic", "heun", "lambda_mixed")


def verify_fuchsian(qid: str, taus) -> dict:
    """Max |[x,tau] - Q(x)| over the sample; critical points are skipped.

    Residuals that come out above a tenth of the usual tolerance are
    re-evaluated in double-double arithmetic.  The closed derivative system
    propagates any four starting values to a Mobius reparametrization of the
    same solution family and the bracket is Mobius-invariant, so the residual
    vanishes identically as a function of the inputs; near the cusp, where
    both [x,tau] and Q pass 1e6, plain doubles lose the cancellation and the
    extended evaluation restores it.
    """
    qf = q_catalogue(qid)
    if qf.uniformizer is None:
        raise NumericsError(f"{qid} has no registered uniformizer")
    worst = 0.0
    skipped = 0
    count = 0
    for tau in taus:
        count += 1
        j = qf.uniformizer(tau, 3)
        if abs(j.d[1]) < _CRITICAL_XTAU:
            skipped += 1
            continue
        if qf.residual is not None:
            r = qf.residual(tau, j)
        else:
            _, mero = brackets_from_jet(j)
            r = abs(mero - qf.evaluator(j.d[0]))
        if r > 1e-10 and qid in _DD_IDS:
            r = residual_dd(qid, tau)
        worst = max(worst, r)
    return {"id": qid, "max_residual": worst, "skipped": skipped,
            "samples": count}


# ---------------------------------------------------------------------------
# Change of variable law


def _mero_from(jet: Jet) -> complex:
    return brackets_from_jet(jet)[1]


def change_of_var_check(taus) -> dict:
    """Residuals of [z,tau] = [z,x] + Q(x)/z_x^2 for three instructive pairs.

    z = x^4 uses the closed forms [z,x] = -15/(32 x^8), z_x = 4 x^3; the
    Mobius pair has [z,x] = 0; the hyperelliptic partner y recovers its
    bracket from implicit differentiation of y^2 = x^5 - x.
    """
    out = {"z_x4_law": 0.0, "z_x4_is_legendre": 0.0, "mobius": 0.0,
           "pair_lemma": 0.0, "skipped": 0}
    for tau in taus:
        xj = x_burnside(tau, 3)
        if abs(xj.d[1]) < _CRITICAL_XTAU:
            out["skipped"] += 1
            continue
        x = xj.d[0]
        mero_x = _mero_from(xj)

        zj = kprime2(tau, 3)  # z = x^4 as its own theta expression
        mero_z = _mero_from(zj)
        z_x = 4.0 * x ** 3
        mero_zx = -15.0 / (32.0 * x ** 8)
        out["z_x4_law"] = max(out["z_x4_law"],
                              abs(mero_z - (mero_zx + mero_x / z_x ** 2)))
        out["z_x4_is_legendre"] = max(out["z_x4_is_legendre"],
                                      _residual_legendre(tau, zj))

        # Mobius change w = (x+1)/(x-1): [w,x] = 0, w_x = -2/(x-1)^2
        wj = (xj + 1.0) / (xj - 1.0)
        mero_w = _mero_from(wj)
        w_x = -2.0 / (x - 1.0) ** 2
        out["mobius"] = max(out["mobius"], abs(mero_w - mero_x / w_x ** 2))

        # hyperelliptic partner y(tau), bracket via implicit derivatives
        yj = y_burnside(tau, 3)
        y = yj.d[0]
        mero_y = _mero_from(yj)
        p = 5.0 * x ** 4 - 1.0
        dp = 20.0 * x ** 3
        ddp = 60.0 * x * x
        y1 = p / (2.0 * y)
        y2 = dp / (2.0 * y) - p * p / (4.0 * y ** 3)
        y3 = (ddp / (2.0 * y) - 0.75 * p * dp / y ** 3
              + 0.375 * p ** 3 / y ** 5)
        sch_yx = y3 / y1 - 1.5 * (y2 / y1) ** 2
        mero_yx = sch_yx / y1 ** 2
        out["pair_lemma"] = max(out["pair_lemma"],
                                abs(mero_y - (mero_yx + mero_x / y1 ** 2)))
    return out


def schwarzian_cocycle_check(tau: complex) -> float:
    """Two-step x -> z -> w application against the direct [w,tau]."""
    xj = x_burnside(tau, 3)
    x = xj.d[0]
    zj = kprime2(tau, 3)            # z = x^4
    wj = (zj + 1.0) / (zj - 1.0)    # w = (z+1)/(z-1)
    mero_w = _mero_from(wj)
    mero_x = _mero_from(xj)
    # step 1: [z,x] closed form; step 2: [w,z] = 0 (Mobius)
    z = zj.d[0]
    mero_zx = -15.0 / (32.0 * x ** 8)
    z_x = 4.0 * x ** 3
    mero_z = mero_zx + mero_x / z_x ** 2
    w_z = -2.0 / (z - 1.0) ** 2
    return abs(mero_w - mero_z / w_z ** 2)


# ---------------------------------------------------------------------------
# Psi solution families


def psi(family: str, point):
    """Fundamental-solution pairs (Psi1, Psi2).

    'burnside_x'   -- point is x: (2/pi) sqrt(x^5-x) (K(x^2), K'(x^2))
    'burnside_x_w' -- the weighted normalization sqrt(i/pi) sqrt(x^5-x)
                      (K'(x^2), i K(x^2)), whose square matches d/dtau x(tau)
    'legendre'     -- point is tau: (pi/2) theta3^2 (1, -i tau)
    'burnside_tau' -- point is tau: 2i sqrt(i pi) eta^3(2 tau)/theta3 (1, tau)
    """
    if family == "burnside_x":
        x = complex(point)
        s = cmath.sqrt(x ** 5 - x)
        return ((2.0 / math.pi) * s * el.ellip_K(x * x),
                (2.0 / math.pi) * s * el.ellip_Kprime(x * x))
    if family == "burnside_x_w":
        x = complex(point)
        s = cmath.sqrt(x ** 5 - x)
        c = cmath.sqrt(1j / math.pi)
        return (c * s * el.ellip_Kprime(x * x), 1j * c * s * el.ellip_K(x * x))
    if family == "legendre":
        tau = check_tau(point)
        phi1 = (math.pi / 2.0) * th.theta3(tau) ** 2
        return phi1, -1j * tau * phi1
    if family == "burnside_tau":
        tau = check_tau(point)
        p1 = psi1_tau(tau, 0).d[0]
        return p1, tau * p1
    raise KeyError(f"unknown psi family: {family}")


# ---------------------------------------------------------------------------
# Modular ODE residuals


def _theorema_residual(yj: Jet) -> float:
    y, y1, y2, y3 = yj.d[0], yj.d[1], yj.d[2], yj.d[3]
    a = y * y * y3 - 15.0 * y * y1 * y2 + 30.0 * y1 ** 3
    b = y * y2 - 3.0 * y1 * y1
    return abs(a * a + 32.0 * b ** 3 + math.pi ** 2 * y ** 10 * b * b)


def modular_ode_residuals(tau: complex) -> dict:
    """Residuals of the third-order and weight-2 identities at one tau."""
    tau = check_tau(tau)
    res = {}
    base = theta_jet(tau, (1, 0), 3)
    res["theorema_theta3"] = _theorema_residual(base.t3)
    res["theorema_theta4"] = _theorema_residual(base.t4)

    # log-eta equation
    w = base.etaw
    ip = 1j / math.pi
    l1, l2, l3 = ip * w.d[0], ip * w.d[1], ip * w.d[2]
    lhs = ((l3 - 12.0 * l2 * l1 + 16.0 * l1 ** 3) ** 2
           + 32.0 * (l2 - 2.0 * l1 * l1) ** 3)
    res["log_eta_equation"] = abs(lhs - (4.0 / 27.0) * math.pi ** 6
                                  * base.eta.d[0] ** 24)

    # weight-2 elimination pair for the Gamma(4) Psi
    pj = psi1_tau(tau, 3)
    xj = x_burnside(tau, 1)
    x = xj.d[0]
    p0, p1, p2, p3 = pj.d[0], pj.d[1], pj.d[2], pj.d[3]
    res["elimination_second"] = abs(2.0 * p0 * p2 - 4.0 * p1 * p1
                                    - q_burnside(x) * p0 ** 6)
    res["elimination_third"] = abs(2.0 * p0 * p0 * p3 - 18.0 * p0 * p1 * p2
                                   + 24.0 * p1 ** 3 - q_burnside_dx(x) * p0 ** 9)
    res["psi1_sq_is_x_tau"] = abs(p0 * p0 - xj.d[1])

    # octahedral ground forms against g2, g3 at 2 tau
    t3v, t4v = base.t3.d[0], base.t4.d[0]
    eta2 = theta_jet(tau, (2, 0), 0).eta.d[0]
    g2d, g3d, _ = el.eisenstein(2 * tau)
    res["ground_form_eta"] = abs(t4v * t3v * (t4v ** 4 - t3v ** 4)
                                 + 16.0 * eta2 ** 6)
    res["ground_form_g2"] = abs(t4v ** 8 + 14.0 * t4v ** 4 * t3v ** 4 + t3v ** 8
                                - 192.0 / math.pi ** 4 * g2d)
    res["ground_form_g3"] = abs(t4v ** 12 - 33.0 * t4v ** 8 * t3v ** 4
                                - 33.0 * t4v ** 4 * t3v ** 8 + t3v ** 12
                                + 27.0 * 512.0 / math.pi ** 6 * g3d)

    # level-one equation for eta^2 as a function of J
    jj = j_invariant(tau, 2)
    e2j = base.eta.pow(2)
    jv, j1, j2 = jj.d[0], jj.d[1], jj.d[2]
    f1 = e2j.d[1] / j1
    f2 = (e2j.d[2] * j1 - e2j.d[1] * j2) / j1 ** 3
    res["eta2_in_J"] = abs(jv * (jv - 1.0) * f2 + (7.0 * jv - 4.0) / 6.0 * f1
                           + e2j.d[0] / 144.0)

    # solvable linear equations
    coeff = (math.pi ** 2 / 288.0) * (7.0 * base.t4.d[0] ** 4 + base.t3.d[0] ** 4
                                      + 48.0 / math.pi ** 2 * w.d[0]) ** 2 \
        - 3.0 / math.pi ** 2 * g2d
    res["ode_weight2"] = abs(p2 + coeff * p0)

    lg = (base.t4 / base.t3).log()
    psi_log = base.t2.pow(-2) * (1.0 + lg)
    t4d8 = theta_jet(tau, (2, 0), 0).t4.d[0] ** 8
    res["ode_log_solution"] = abs(psi_log.d[2]
                                  + math.pi ** 2 / 4.0 * t4d8 * psi_log.d[0])
    return res
