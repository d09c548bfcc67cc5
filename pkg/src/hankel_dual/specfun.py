"""Special-function layer with explicit accuracy contracts.

Every public evaluation returns a :class:`SpecialValue` (or
:class:`ComplexValue` for complex arguments) carrying an estimated
absolute error bound alongside the value.  Real-argument paths are
backed by ``scipy.special``; complex modified-Bessel evaluation and
general-order Legendre functions fall back to ``mpmath``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
import scipy.optimize as _opt
import scipy.special as _sp

from .errors import DomainError, ParameterError, PoleError, RangeError

__all__ = [
    "SpecialValue",
    "ComplexValue",
    "Order",
    "gamma_fn",
    "bessel_j",
    "bessel_y",
    "bessel_i",
    "bessel_k",
    "struve_h",
    "struve_minus_y",
    "hyp2f1_terminating",
    "jacobi_p",
    "chebyshev_t",
    "legendre_p_negorder",
    "legendre_q_negorder",
    "bessel_zero",
    "bessel_zeros",
]


@dataclass(frozen=True)
class SpecialValue:
    """A real function value together with an absolute error estimate."""

    value: float
    abs_err: float

    def __post_init__(self):
        if math.isfinite(self.value) and not (
            math.isfinite(self.abs_err) and self.abs_err >= 0.0
        ):
            raise ValueError("abs_err must be finite and non-negative")

    def __float__(self):
        return self.value


@dataclass(frozen=True)
class ComplexValue:
    """A complex function value with an absolute error estimate.

    Only needed for modified Bessel K on the rays arg z = ±π/4; final
    catalog comparisons are always on manifestly real combinations.
    """

    re: float
    im: float
    abs_err: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class Order:
    """Bessel/Legendre order or degree parameter."""

    nu: float

    def __post_init__(self):
        if not math.isfinite(self.nu):
            raise ValueError("order must be finite")

    def __float__(self):
        return self.nu


def _as_order(nu) -> float:
    return float(nu.nu) if isinstance(nu, Order) else float(nu)


def gamma_fn(x) -> SpecialValue:
    """Euler gamma function on the real line away from its poles."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"gamma_fn requires finite x, got {x}")
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"gamma_fn pole at non-positive integer x={x}")
    v = float(_sp.gamma(x))
    if math.isinf(v):
        raise RangeError(f"gamma_fn overflow at x={x}")
    return SpecialValue(v, 1e-14 * (1.0 + abs(v)))


def bessel_j(nu, x) -> SpecialValue:
    """Bessel function of the first kind J_nu(x) for x >= 0, nu >= -1."""
    nu, x = _as_order(nu), float(x)
    if x < 0.0:
        raise DomainError(f"bessel_j requires x >= 0, got {x}")
    if nu < -1.0:
        raise DomainError(f"bessel_j requires nu >= -1, got {nu}")
    if x == 0.0 and nu < 0.0:
        raise DomainError("bessel_j diverges at x=0 for nu < 0")
    v = float(_sp.jv(nu, x))
    return SpecialValue(v, 1e-13 * (1.0 + abs(v)))


def bessel_y(nu, x) -> SpecialValue:
    """Bessel function of the second kind Y_nu(x) for x > 0."""
    nu, x = _as_order(nu), float(x)
    if x <= 0.0:
        raise DomainError(f"bessel_y requires x > 0, got {x}")
    v = float(_sp.yv(nu, x))
    return SpecialValue(v, 1e-13 * (1.0 + abs(v)))


def bessel_i(nu, x) -> SpecialValue:
    """Modified Bessel function I_nu(x) for x >= 0."""
    nu, x = _as_order(nu), float(x)
    if x < 0.0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    if x == 0.0 and nu < 0.0:
        raise DomainError("bessel_i diverges at x=0 for nu < 0")
    v = float(_sp.iv(nu, x))
    if math.isinf(v):
        raise RangeError(f"bessel_i overflow at nu={nu}, x={x}")
    return SpecialValue(v, 1e-13 * (1.0 + abs(v)))


def bessel_i_scaled(nu, x) -> SpecialValue:
    """Exponentially scaled modified Bessel function e^{-x} I_nu(x)."""
    nu, x = _as_order(nu), float(x)
    if x < 0.0:
        raise DomainError(f"bessel_i_scaled requires x >= 0, got {x}")
    v = float(_sp.ive(nu, x))
    return SpecialValue(v, 1e-13 * (1.0 + abs(v)))


def bessel_k(nu, z) -> SpecialValue | ComplexValue:
    """Modified Bessel function K_nu(z) for Re z > 0.

    Real arguments use the scipy fast path and return a SpecialValue;
    complex arguments (needed only on the rays arg z = ±π/4) are
    evaluated with mpmath at elevated precision and return a
    ComplexValue.
    """
    nu = _as_order(nu)
    zc = complex(z)
    if zc.real <= 0.0:
        raise DomainError(f"bessel_k requires Re z > 0, got {z}")
    if zc.imag == 0.0:
        v = float(_sp.kv(nu, zc.real))
        if math.isinf(v):
            raise RangeError(f"bessel_k overflow at nu={nu}, z={z}")
        return SpecialValue(v, 1e-12 * (1.0 + abs(v)))
    with mpmath.workdps(25):
        w = mpmath.besselk(nu, mpmath.mpc(zc.real, zc.imag))
        re, im = float(w.real), float(w.imag)
    return ComplexValue(re, im, 1e-11 * (1.0 + math.hypot(re, im)))


def struve_h(nu, x) -> SpecialValue:
    """Struve function H_nu(x) for x >= 0, nu >= -1/2."""
    nu, x = _as_order(nu), float(x)
    if x < 0.0:
        raise DomainError(f"struve_h requires x >= 0, got {x}")
    if nu < -0.5:
        raise ParameterError(f"struve_h requires nu >= -1/2, got {nu}")
    v = float(_sp.struve(nu, x))
    return SpecialValue(v, 1e-11 * (1.0 + abs(v)))


_STRUVE_SWITCH = 30.0


def _struve_minus_y_asym(nu: float, x: np.ndarray) -> np.ndarray:
    """Large-argument series for H_nu(x) - Y_nu(x).

    H_nu(x) - Y_nu(x) ~ (1/pi) * sum_k Gamma(k+1/2) (x/2)^{nu-2k-1}
    / Gamma(nu+1/2-k), truncated at the smallest term.  Evaluating the
    difference directly at large x loses all accuracy to cancellation.
    """
    x = np.asarray(x, dtype=float)
    half = x / 2.0
    total = np.zeros_like(x)
    prev = np.full_like(x, np.inf)
    for k in range(14):
        term = (
            float(_sp.gamma(k + 0.5))
            * float(_sp.rgamma(nu + 0.5 - k))
            / math.pi
        ) * half ** (nu - 2 * k - 1)
        mag = np.abs(term)
        if np.all(mag >= prev):
            break
        grow = mag >= prev
        term = np.where(grow, 0.0, term)
        total = total + term
        prev = np.where(grow, prev, mag)
        if np.all(prev <= 1e-17 * (1.0 + np.abs(total))):
            break
    return total


def struve_minus_y(nu, x):
    """H_nu(x) - Y_nu(x), stable for large x.  Vectorized over x."""
    nu = _as_order(nu)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("struve_minus_y requires x > 0")
    small = x < _STRUVE_SWITCH
    out = np.empty_like(x)
    if np.any(small):
        xs = x[small]
        out[small] = _sp.struve(nu, xs) - _sp.yv(nu, xs)
    if np.any(~small):
        out[~small] = _struve_minus_y_asym(nu, x[~small])
    return out if out.ndim else float(out)


def hyp2f1_terminating(a, n, c, x) -> SpecialValue:
    """Terminating Gauss hypergeometric sum 2F1(a, -n; c; x).

    Exact finite sum of n+1 terms; n must be a non-negative integer.
    """
    a, c, x = float(a), float(c), float(x)
    n = int(n)
    if n < 0:
        raise ParameterError("hyp2f1_terminating requires n >= 0")
    total = 1.0
    term = 1.0
    for k in range(n):
        denom = c + k
        if denom == 0.0:
            raise ParameterError(
                f"hyp2f1_terminating: c={c} hits a non-positive integer"
            )
        term *= (a + k) * (-n + k) / denom * x / (k + 1)
        total += term
    return SpecialValue(total, 1e-14 * (1.0 + abs(total)))


def jacobi_p(n, alpha, beta, x) -> SpecialValue:
    """Jacobi polynomial P_n^{(alpha,beta)}(x) by three-term recurrence."""
    n = int(n)
    alpha, beta, x = float(alpha), float(beta), float(x)
    if n < 0:
        raise ParameterError("jacobi_p requires n >= 0")
    if alpha <= -1.0 or beta <= -1.0:
        raise ParameterError("jacobi_p requires alpha, beta > -1")
    if n == 0:
        return SpecialValue(1.0, 0.0)
    pm1 = 1.0
    p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        ab = alpha + beta
        c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
        c2 = (2.0 * k + ab - 1.0) * (
            (2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + alpha**2 - beta**2
        )
        c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
        p, pm1 = (c2 * p - c3 * pm1) / c1, p
    return SpecialValue(p, 1e-13 * (1.0 + abs(p)))


def chebyshev_t(n, x) -> SpecialValue:
    """Chebyshev polynomial of the first kind T_n(x) on [-1, 1]."""
    n = int(n)
    x = float(x)
    if n < 0:
        raise ParameterError("chebyshev_t requires n >= 0")
    if abs(x) > 1.0 + 1e-12:
        raise DomainError(f"chebyshev_t requires |x| <= 1, got {x}")
    v = math.cos(n * math.acos(max(-1.0, min(1.0, x))))
    return SpecialValue(v, 1e-15 * (1.0 + abs(v)))


# ---------------------------------------------------------------------------
# Legendre functions on the cut (1, inf)
# ---------------------------------------------------------------------------


def _legendre_p0_array(deg: float, x: np.ndarray) -> np.ndarray:
    """P_deg(x) for x > 1 at order 0, via 2F1(-deg, deg+1; 1; (1-x)/2)."""
    x = np.asarray(x, dtype=float)
    return _sp.hyp2f1(-deg, deg + 1.0, 1.0, 0.5 * (1.0 - x))


def _legendre_q0_array(deg: float, x: np.ndarray) -> np.ndarray:
    """Q_deg(x) for x > 1 at order 0.

    Away from x=1 this is the standard large-argument hypergeometric
    representation; close to x=1 the 2F1 argument approaches 1 in the
    logarithmic (c = a+b) case, so we sum that log expansion directly
    to avoid accuracy loss.
    """
    x = np.asarray(x, dtype=float)
    a = 0.5 * deg + 1.0
    b = 0.5 * (deg + 1.0)
    w = x ** (-2.0)
    out = np.empty_like(x)
    near = w > 0.985
    if np.any(~near):
        xf = x[~near]
        pref = (
            math.sqrt(math.pi)
            * float(_sp.gamma(deg + 1.0))
            * float(_sp.rgamma(deg + 1.5))
            / (2.0 * xf) ** (deg + 1.0)
        )
        out[~near] = pref * _sp.hyp2f1(a, b, deg + 1.5, w[~near])
    if np.any(near):
        xn = x[near]
        u = 1.0 - w[near]  # in (0, 0.015]
        lg = -np.log(u)
        acc = np.zeros_like(u)
        coeff = np.ones_like(u)
        for s in range(12):
            psi_part = (
                2.0 * float(_sp.digamma(s + 1.0))
                - float(_sp.digamma(a + s))
                - float(_sp.digamma(b + s))
            )
            acc = acc + coeff * (psi_part + lg)
            coeff = coeff * u * (a + s) * (b + s) / (s + 1.0) ** 2
        out[near] = acc / (2.0 * xn ** (deg + 1.0))
    return out


def legendre_p_negorder(deg, order_mu, x) -> SpecialValue:
    """Associated Legendre P_deg^{-mu}(x) on the cut x > 1."""
    deg, mu, x = float(deg), float(order_mu), float(x)
    if x <= 1.0:
        raise DomainError(f"legendre_p_negorder requires x > 1, got {x}")
    if (deg - mu) < 0 and (deg - mu) == math.floor(deg - mu):
        raise ParameterError("legendre_p_negorder: gamma factor poles")
    if mu == 0.0:
        v = float(_legendre_p0_array(deg, np.asarray([x]))[0])
    else:
        with mpmath.workdps(25):
            v = float(mpmath.re(mpmath.legenp(deg, -mu, x, type=3)))
    return SpecialValue(v, 1e-10 * (1.0 + abs(v)))


def legendre_q_negorder(deg, order_mu, x) -> SpecialValue:
    """Associated Legendre Q_deg^{-mu}(x) on the cut x > 1."""
    deg, mu, x = float(deg), float(order_mu), float(x)
    if x <= 1.0:
        raise DomainError(f"legendre_q_negorder requires x > 1, got {x}")
    if (deg - mu) < 0 and (deg - mu) == math.floor(deg - mu):
        raise ParameterError("legendre_q_negorder: gamma factor poles")
    if mu == 0.0:
        v = float(_legendre_q0_array(deg, np.asarray([x]))[0])
    else:
        with mpmath.workdps(25):
            v = float(mpmath.re(mpmath.legenq(deg, -mu, x, type=3)))
    return SpecialValue(v, 1e-10 * (1.0 + abs(v)))


# ---------------------------------------------------------------------------
# Bessel function zeros
# ---------------------------------------------------------------------------

_zero_cache: dict[tuple[float, str], np.ndarray] = {}


def _cyl(kind: str):
    if kind == "j":
        return _sp.jv, _sp.jvp
    if kind == "y":
        return _sp.yv, _sp.yvp
    raise ValueError(f"unknown Bessel kind {kind!r}")


@lru_cache(maxsize=256)
def _first_zeros_by_scan(nu: float, kind: str, count: int) -> tuple:
    """Locate the first few positive zeros by sign-change scan + Brent."""
    f, _ = _cyl(kind)
    start = max(abs(nu), 0.05)
    step = 0.2
    zeros = []
    x0 = start
    v0 = f(nu, x0)
    while len(zeros) < count and x0 < start + 60.0 + 3.0 * count:
        x1 = x0 + step
        v1 = f(nu, x1)
        if v0 == 0.0:
            zeros.append(x0)
        elif np.sign(v0) != np.sign(v1):
            zeros.append(_opt.brentq(lambda t: f(nu, t), x0, x1, xtol=1e-14))
        x0, v0 = x1, v1
    return tuple(zeros)


def _mcmahon_newton(nu: float, ks: np.ndarray, kind: str) -> np.ndarray:
    f, fp = _cyl(kind)
    mu = 4.0 * nu * nu
    off = 0.25 if kind == "j" else 0.75
    beta = (ks + 0.5 * nu - off) * math.pi
    x = (
        beta
        - (mu - 1.0) / (8.0 * beta)
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * beta) ** 3)
    )
    for _ in range(40):
        dx = f(nu, x) / fp(nu, x)
        x = x - dx
        if np.all(np.abs(dx) < 1e-14 * np.maximum(x, 1.0)):
            break
    return x


def bessel_zeros(nu, kmax: int, kind: str = "j") -> np.ndarray:
    """First kmax positive zeros of J_nu (kind='j') or Y_nu (kind='y')."""
    nu = _as_order(nu)
    kmax = int(kmax)
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    key = (nu, kind)
    cached = _zero_cache.get(key)
    if cached is not None and len(cached) >= kmax:
        return cached[:kmax].copy()
    n_scan = 4 + int(math.ceil(2.0 * abs(nu)))
    want = max(kmax, 16)
    low = np.array(_first_zeros_by_scan(nu, kind, min(n_scan, want)))
    if want > len(low):
        ks = np.arange(len(low) + 1, want + 1, dtype=float)
        high = _mcmahon_newton(nu, ks, kind)
        zeros = np.concatenate([low, high])
    else:
        zeros = low
    if not np.all(np.diff(zeros) > 0):
        raise RuntimeError(f"zero sequence not increasing for nu={nu}")
    _zero_cache[key] = zeros
    return zeros[:kmax].copy()


def bessel_zero(nu, k: int, kind: str = "j") -> float:
    """k-th positive zero of the Bessel function of order nu."""
    nu = _as_order(nu)
    if nu < -0.5:
        raise DomainError(f"bessel_zero requires nu >= -1/2, got {nu}")
    k = int(k)
    if k < 1:
        raise ValueError("k must be >= 1")
    return float(bessel_zeros(nu, k, kind)[k - 1])
