"""Minimal double-double arithmetic for ill-conditioned residual assembly.

A double-double is an unevaluated sum hi + lo of two floats carrying about 32
significant digits.  Only the field operations needed by the jet recursion
are provided; values enter as ordinary doubles and leave through to_complex.
Error-free transforms follow Dekker and Knuth (no fma required).
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float):
    s = a + b
    return s, b - (s - a)


def _split(a: float):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a: float, b: float):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(x, y):
    s1, s2 = _two_sum(x[0], y[0])
    t1, t2 = _two_sum(x[1], y[1])
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


def dd_neg(x):
    return (-x[0], -x[1])


def dd_sub(x, y):
    return dd_add(x, dd_neg(y))


def dd_mul(x, y):
    p1, p2 = _two_prod(x[0], y[0])
    p2 += x[0] * y[1] + x[1] * y[0]
    return _quick_two_sum(p1, p2)


def dd_div(x, y):
    if y[0] == 0.0:
        raise ZeroDivisionError("double-double division by zero")
    q1 = x[0] / y[0]
    r = dd_sub(x, dd_mul((q1, 0.0), y))
    q2 = r[0] / y[0]
    r = dd_sub(r, dd_mul((q2, 0.0), y))
    q3 = r[0] / y[0]
    s, e = _quick_two_sum(q1, q2)
    return dd_add((s, e), (q3, 0.0))


DD_ZERO = (0.0, 0.0)
DD_ONE = (1.0, 0.0)


class CDD:
    """Complex number with double-double components."""

    __slots__ = ("re", "im")

    def __init__(self, re=DD_ZERO, im=DD_ZERO):
        self.re = re
        self.im = im

    @staticmethod
    def from_complex(z: complex) -> "CDD":
        return CDD((z.real, 0.0), (z.imag, 0.0))

    def to_complex(self) -> complex:
        return complex(self.re[0] + self.re[1], self.im[0] + self.im[1])

    def __add__(self, other: "CDD") -> "CDD":
        return CDD(dd_add(self.re, other.re), dd_add(self.im, other.im))

    def __sub__(self, other: "CDD") -> "CDD":
        return CDD(dd_sub(self.re, other.re), dd_sub(self.im, other.im))

    def __neg__(self) -> "CDD":
        return CDD(dd_neg(self.re), dd_neg(self.im))

    def __mul__(self, other: "CDD") -> "CDD":
        return CDD(dd_sub(dd_mul(self.re, other.re), dd_mul(self.im, other.im)),
                   dd_add(dd_mul(self.re, other.im), dd_mul(self.im, other.re)))

    def __truediv__(self, other: "CDD") -> "CDD":
        den = dd_add(dd_mul(other.re, other.re), dd_mul(other.im, other.im))
        num_re = dd_add(dd_mul(self.re, other.re), dd_mul(self.im, other.im))
        num_im = dd_sub(dd_mul(self.im, other.re), dd_mul(self.re, other.im))
        return CDD(dd_div(num_re, den), dd_div(num_im, den))

    def powi(self, n: int) -> "CDD":
        out = CDD.from_complex(1.0)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: float) -> "CDD":
        cc = CDD.from_complex(complex(c, 0.0))
        return self * cc

    def abs_approx(self) -> float:
        return abs(self.to_complex())


def cdd(z) -> CDD:
    if isinstance(z, CDD):
        return z
    return CDD.from_complex(complex(z))


# ---------------------------------------------------------------------------
# Transcendentals.  Hard-coded double-double constants; exp and sin/cos by
# argument reduction plus Taylor sums carried in double-double.

DD_PI = (3.141592653589793, 1.2246467991473532e-16)
DD_2PI = (6.283185307179586, 2.4492935982947064e-16)
DD_HALF_PI = (1.5707963267948966, 6.123233995736766e-17)
DD_LN2 = (0.6931471805599453, 2.3190468138462996e-17)
DD_PI_SQ_12 = (0.8224670334241132, 1.520336175199238e-17)  # pi^2/12
DD_PI4_144 = (0.6764520210694613, 2.967820026784603e-17)   # pi^4/144
DD_INV_PI = (0.3183098861837907, -1.9678676675182486e-17)   # 1/pi
DD_PI_12 = (0.26179938779914946, -2.6802044161277275e-17)   # pi/12


def dd_scale_pow2(x, k: int):
    m = 2.0 ** k
    return (x[0] * m, x[1] * m)


def dd_exp(x):
    """exp of a double-double real, |x| < 700."""
    k = int(round((x[0] + x[1]) / 0.6931471805599453))
    r = dd_sub(x, dd_mul((float(k), 0.0), DD_LN2))
    total = DD_ONE
    term = DD_ONE
    for n in range(1, 26):
        term = dd_mul(term, r)
        term = dd_div(term, (float(n), 0.0))
        total = dd_add(total, term)
        if abs(term[0]) < 1e-35 * max(1.0, abs(total[0])):
            break
    return dd_scale_pow2(total, k)


def _dd_sin_taylor(r):
    total = r
    term = r
    r2 = dd_mul(r, r)
    for n in range(1, 14):
        term = dd_mul(term, r2)
        term = dd_div(term, (float(-(2 * n) * (2 * n + 1)), 0.0))
        total = dd_add(total, term)
    return total


def _dd_cos_taylor(r):
    total = DD_ONE
    term = DD_ONE
    r2 = dd_mul(r, r)
    for n in range(1, 14):
        term = dd_mul(term, r2)
        term = dd_div(term, (float(-(2 * n - 1) * (2 * n)), 0.0))
        total = dd_add(total, term)
    return total


def dd_sincos(x):
    """(sin x, cos x) for a double-double real of moderate size."""
    n = int(round((x[0] + x[1]) / 1.5707963267948966))
    r = dd_sub(x, dd_mul((float(n), 0.0), DD_HALF_PI))
    s, c = _dd_sin_taylor(r), _dd_cos_taylor(r)
    quadrant = n % 4
    if quadrant == 0:
        return s, c
    if quadrant == 1:
        return c, dd_neg(s)
    if quadrant == 2:
        return dd_neg(s), dd_neg(c)
    return dd_neg(c), s


def cdd_exp(z: CDD) -> CDD:
    mag = dd_exp(z.re)
    s, c = dd_sincos(z.im)
    return CDD(dd_mul(mag, c), dd_mul(mag, s))


# ---------------------------------------------------------------------------
# Theta constants and the weight-2 Eisenstein tail in double-double.  The
# argument arrives as (tau, k) meaning 2^k * tau, so scaled arguments stay
# exact; tau itself is an exact double input.


def cdd_tau(tau: complex, pow2: int = 0) -> CDD:
    m = 2.0 ** pow2
    return CDD((tau.real * m, 0.0), (tau.imag * m, 0.0))


def _i_pi_sigma(sigma: CDD) -> CDD:
    return CDD(dd_neg(dd_mul(DD_PI, sigma.im)), dd_mul(DD_PI, sigma.re))


def dd_theta_quad(sigma: CDD):
    """(theta2, theta3, theta4, eta_w) at sigma, all in double-double."""
    ipis = _i_pi_sigma(sigma)
    q = cdd_exp(ipis)
    q2 = q * q
    one = cdd(1.0)
    t3 = one
    t4 = one
    qk = one        # q^{k^2}
    qodd = q        # q^{2k+1}
    for k in range(1, 40):
        qk = qk * qodd
        qodd = qodd * q2
        term = qk + qk
        t3 = t3 + term
        t4 = (t4 + term) if k % 2 == 0 else (t4 - term)
        if abs(qk.abs_approx()) < 1e-36:
            break
    qq = cdd_exp(CDD(dd_scale_pow2(ipis.re, -2), dd_scale_pow2(ipis.im, -2)))
    t2 = cdd(0.0)
    qk = one        # q^{k^2+k} built from q^{(k+1)^2-...}
    step = q2       # q^{2k+2}
    qk_cur = one
    for k in range(0, 40):
        t2 = t2 + qk_cur
        qk_cur = qk_cur * step
        step = step * q2
        if qk_cur.abs_approx() < 1e-36:
            t2 = t2 + qk_cur
            break
    t2 = (qq + qq) * t2
    # E2 tail with qb = q^2
    tail = cdd(0.0)
    qbk = q2
    for k in range(1, 300):
        term = qbk.scale(float(k)) / (one - qbk)
        tail = tail + term
        qbk = qbk * q2
        if term.abs_approx() < 1e-36:
            break
    e2 = one + tail.scale(-24.0)
    etaw = CDD(dd_mul(DD_PI_SQ_12, e2.re), dd_mul(DD_PI_SQ_12, e2.im))
    return t2, t3, t4, etaw
