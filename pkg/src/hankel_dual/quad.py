"""Quadrature engine.

Two workhorses: an adaptive Gauss-Legendre bisection rule for finite
segments (with mandatory endpoint substitutions for declared
inverse-square-root singularities and geometric refinement for
logarithmic ones), and a semi-infinite oscillatory integrator that
partitions the axis at Bessel-kernel zeros and accelerates the
alternating lobe sums with Wynn's epsilon algorithm.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
import scipy.special as _sp

from .specfun import bessel_zeros

__all__ = [
    "Interval",
    "QuadResult",
    "OscillationSpec",
    "epsilon_extrapolate",
    "integrate_finite",
    "integrate_oscillatory_tail",
    "integrate_entry",
]

DEFAULT_BUDGET = 2_000_000

FINITE_FROM_ZERO = "finite_from_zero"
TAIL = "tail"
FULL_HALF_LINE = "full_half_line"
FINITE_SEGMENT = "finite_segment"

INVERSE_SQRT_AT_UPPER = "inverse_sqrt_at_upper"
INVERSE_SQRT_AT_LOWER = "inverse_sqrt_at_lower"
LOG_AT_UPPER = "log_at_upper"

_HINTS = {None, INVERSE_SQRT_AT_UPPER, INVERSE_SQRT_AT_LOWER, LOG_AT_UPPER}


@dataclass(frozen=True)
class Interval:
    """Integration range with an optional declared endpoint singularity."""

    kind: str
    lower: float = 0.0
    upper: float = math.inf
    singularity_hint: Optional[str] = None

    def __post_init__(self):
        if self.singularity_hint not in _HINTS:
            raise ValueError(f"unknown singularity hint {self.singularity_hint!r}")
        if self.kind in (FINITE_FROM_ZERO, FINITE_SEGMENT):
            if not (math.isfinite(self.upper) and self.upper > self.lower):
                raise ValueError("finite interval requires upper > lower")
        if self.lower < 0.0:
            raise ValueError("lower bound must be >= 0")

    @classmethod
    def finite_from_zero(cls, upper, hint=None):
        return cls(FINITE_FROM_ZERO, 0.0, float(upper), hint)

    @classmethod
    def tail(cls, lower, hint=None):
        return cls(TAIL, float(lower), math.inf, hint)

    @classmethod
    def full_half_line(cls):
        return cls(FULL_HALF_LINE, 0.0, math.inf, None)

    @classmethod
    def segment(cls, lower, upper, hint=None):
        return cls(FINITE_SEGMENT, float(lower), float(upper), hint)

    @property
    def is_finite(self) -> bool:
        return self.kind in (FINITE_FROM_ZERO, FINITE_SEGMENT)


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_err: float
    evaluations: int
    converged: bool


@dataclass(frozen=True)
class OscillationSpec:
    """Kernel structure of the integrand: a cylinder function of a
    linear argument, plus optional additional break points contributed
    by a second oscillatory factor (e.g. a Bessel factor with a
    square-root argument, whose zeros must also partition the axis).
    """

    bessel_order: float
    frequency: float
    kind: str = "j"
    extra_breaks: Optional[Callable[[int], np.ndarray]] = field(
        default=None, compare=False
    )

    def __post_init__(self):
        if not (self.frequency > 0.0):
            raise ValueError("frequency must be > 0")
        if self.kind not in ("j", "y"):
            raise ValueError("kernel kind must be 'j' or 'y'")

    def kernel(self, t):
        fn = _sp.jv if self.kind == "j" else _sp.yv
        return fn(self.bessel_order, self.frequency * np.asarray(t, dtype=float))


# ---------------------------------------------------------------------------
# Gauss-Legendre panels
# ---------------------------------------------------------------------------


@lru_cache(maxsize=16)
def _gl_nodes(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _gl_panel(f, a: float, b: float, n: int) -> float:
    x, w = _gl_nodes(n)
    h = 0.5 * (b - a)
    y = f(a + h * (x + 1.0))
    return h * float(np.dot(w, np.asarray(y, dtype=float)))


# ---------------------------------------------------------------------------
# Wynn epsilon extrapolation
# ---------------------------------------------------------------------------


def epsilon_extrapolate(partial_sums) -> tuple[float, float]:
    """Accelerate a sequence of partial sums with Wynn's epsilon
    algorithm; returns (best extrapolant, error estimate)."""
    s = [float(v) for v in partial_sums]
    n = len(s)
    if n == 0:
        raise ValueError("need at least one partial sum")
    if n == 1:
        return s[0], math.inf
    best = s[-1]
    best_err = abs(s[-1] - s[-2])
    prev2 = [0.0] * (n + 1)
    prev1 = list(s)
    col = 0
    last_even_tail = s[-1]
    while len(prev1) > 1:
        col += 1
        cur = []
        for i in range(len(prev1) - 1):
            d = prev1[i + 1] - prev1[i]
            if d == 0.0:
                cur.append(prev2[i + 1] + 1e300)
            else:
                cur.append(prev2[i + 1] + 1.0 / d)
        if col % 2 == 0:
            tail = cur[-1]
            err = abs(tail - last_even_tail)
            if len(cur) >= 2:
                err = max(err, abs(tail - cur[-2]) * 0.5)
            if math.isfinite(tail) and err < best_err:
                best, best_err = tail, err
            last_even_tail = tail
        prev2, prev1 = prev1, cur
    return best, best_err


# ---------------------------------------------------------------------------
# Finite-segment adaptive quadrature
# ---------------------------------------------------------------------------


class _Counter:
    __slots__ = ("f", "n")

    def __init__(self, f):
        self.f = f
        self.n = 0

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        self.n += x.size
        return self.f(x)


def _adaptive(f, panels, tol, budget):
    """Heap-driven bisection refinement over initial panel list.

    Returns (value, raw error estimate, converged flag).
    """
    heap = []
    total = 0.0
    total_err = 0.0
    serial = 0
    for a, b in panels:
        i25 = _gl_panel(f, a, b, 25)
        i12 = _gl_panel(f, a, b, 12)
        e = abs(i25 - i12)
        total += i25
        total_err += e
        heapq.heappush(heap, (-e, serial, a, b, i25))
        serial += 1
    target = 0.35 * tol
    while total_err > target and f.n < budget and heap:
        nege, _, a, b, i25 = heapq.heappop(heap)
        e = -nege
        if e <= 0.0 or (b - a) < 1e-15 * (abs(a) + abs(b) + 1.0):
            total_err = max(total_err, e)
            break
        total -= i25
        total_err -= e
        m = 0.5 * (a + b)
        for aa, bb in ((a, m), (m, b)):
            i25n = _gl_panel(f, aa, bb, 25)
            i12n = _gl_panel(f, aa, bb, 12)
            en = abs(i25n - i12n)
            total += i25n
            total_err += en
            heapq.heappush(heap, (-en, serial, aa, bb, i25n))
            serial += 1
    return total, total_err, total_err <= tol


def _geometric_points(lower, upper, depth=33):
    width = upper - lower
    pts = [lower] + [upper - width * 0.5**j for j in range(1, depth + 1)]
    return pts


def integrate_finite(f, seg: Interval, tol: float, budget: int = DEFAULT_BUDGET) -> QuadResult:
    """Adaptive quadrature over a finite segment.

    Declared inverse-square-root endpoint singularities are removed by
    the substitutions x = U sin(theta) (upper) and x = L cosh(t)
    (lower) before refinement; logarithmic upper-endpoint singularities
    get geometric panel refinement toward the endpoint.
    """
    if not seg.is_finite:
        raise ValueError("integrate_finite requires a finite segment")
    lo, up = seg.lower, seg.upper
    g = _Counter(f)
    extra_err = 0.0
    if seg.singularity_hint == INVERSE_SQRT_AT_UPPER:
        th0 = math.asin(min(1.0, lo / up)) if lo > 0.0 else 0.0

        def h(theta):
            return g(up * np.sin(theta)) * up * np.cos(theta)

        hh = _Counter(h)
        panels = _split([(th0, 0.5 * math.pi)], 4)
        value, raw, ok = _adaptive(hh, panels, tol, budget)
        evals = g.n
    elif seg.singularity_hint == INVERSE_SQRT_AT_LOWER:
        if lo <= 0.0:
            raise ValueError("inverse-sqrt-at-lower substitution needs lower > 0")
        tmax = math.acosh(up / lo)

        def h(t):
            return g(lo * np.cosh(t)) * lo * np.sinh(t)

        hh = _Counter(h)
        panels = _split([(0.0, tmax)], 4)
        value, raw, ok = _adaptive(hh, panels, tol, budget)
        evals = g.n
    elif seg.singularity_hint == LOG_AT_UPPER:
        pts = _geometric_points(lo, up)
        panels = list(zip(pts[:-1], pts[1:]))
        value, raw, ok = _adaptive(g, panels, tol, budget)
        # truncation of the last geometric sliver, integrable log
        delta = up - pts[-1]
        tail_mag = abs(float(np.max(np.abs(g(np.asarray([pts[-1]]))))))
        extra_err = 2.0 * delta * (tail_mag + 1.0)
        evals = g.n
    else:
        panels = _split([(lo, up)], 4)
        value, raw, ok = _adaptive(g, panels, tol, budget)
        evals = g.n
    abs_err = min(2.0 * raw + extra_err, 10.0 * tol) if ok else 2.0 * raw + extra_err
    abs_err = max(abs_err, 1e-16 * (1.0 + abs(value)))
    converged = ok and abs_err <= tol
    return QuadResult(value, abs_err, evals, converged)


def _split(panels, k):
    out = []
    for a, b in panels:
        edges = np.linspace(a, b, k + 1)
        out.extend(zip(edges[:-1], edges[1:]))
    return out


# ---------------------------------------------------------------------------
# Oscillatory semi-infinite tails
# ---------------------------------------------------------------------------


class _BreakStream:
    """Merged, increasing stream of kernel zeros and extra break points."""

    def __init__(self, osc: OscillationSpec, start: float):
        self.osc = osc
        self.start = start
        self._nk = 0
        self._nx = 0
        self._kernel = np.empty(0)
        self._extra = np.empty(0)
        self._merged = [start]

    def _grow_kernel(self):
        self._nk += 96
        z = bessel_zeros(self.osc.bessel_order, self._nk, self.osc.kind)
        self._kernel = z / self.osc.frequency

    def _grow_extra(self):
        if self.osc.extra_breaks is None:
            return
        self._nx += 96
        self._extra = np.asarray(self.osc.extra_breaks(self._nx), dtype=float)

    def get(self, i: int) -> float:
        """i-th break point at or beyond start (0-th is start itself)."""
        while len(self._merged) <= i:
            need_hi = self._merged[-1] + 1.0
            while self._kernel.size == 0 or self._kernel[-1] < need_hi + 1.0:
                self._grow_kernel()
            if self.osc.extra_breaks is not None:
                while self._extra.size == 0 or (
                    self._extra[-1] < need_hi + 1.0 and self._nx < 4096
                ):
                    old = self._extra.size
                    self._grow_extra()
                    if self._extra.size == old:
                        break
            pts = np.concatenate([self._kernel, self._extra])
            pts = np.sort(pts[pts > self.start * (1.0 + 1e-12)])
            # drop near-coincident breaks (degenerate slivers)
            keep = [self.start]
            min_gap = 0.05 * math.pi / self.osc.frequency
            for p in pts:
                if p - keep[-1] > min_gap:
                    keep.append(float(p))
            if len(keep) <= len(self._merged):
                # force more kernel zeros and retry
                self._grow_kernel()
                continue
            self._merged = keep
        return self._merged[i]


def _period_fit(ts: np.ndarray, ss: np.ndarray) -> tuple[float, float]:
    """Extrapolate full-period partial sums by least-squares polynomial
    fit in 1/T; returns (limit estimate, error estimate).

    Sound when the partial sums are sampled at (near-)constant kernel
    phase, where the remainder has an asymptotic expansion in inverse
    powers of the truncation point — the regime where lobe sums stop
    alternating (same-frequency Bessel products) and epsilon
    acceleration silently fails.
    """
    m = min(30, len(ts))
    t, s = ts[-m:], ss[-m:]
    A = np.vstack([np.ones_like(t), 1.0 / t, t**-2.0, t**-3.0]).T
    coef, res, *_ = np.linalg.lstsq(A, s, rcond=None)
    a0 = float(coef[0])
    rms = math.sqrt(float(res[0]) / m) if len(res) else 0.0
    m2 = max(8, m // 2)
    t2, s2 = ts[-m2:], ss[-m2:]
    A2 = np.vstack([np.ones_like(t2), 1.0 / t2, t2**-2.0]).T
    coef2, *_ = np.linalg.lstsq(A2, s2, rcond=None)
    err = abs(a0 - float(coef2[0])) + 2.0 * rms
    return a0, err


def integrate_oscillatory_tail(
    f_smooth,
    osc: OscillationSpec,
    lower: float,
    tol: float,
    head: Optional[float] = None,
    lower_hint: Optional[str] = None,
    max_lobes: int = 220,
    window: int = 40,
    budget: int = DEFAULT_BUDGET,
    accel: str = "epsilon",
) -> QuadResult:
    """Integrate f_smooth(t) * C_nu(frequency*t) over [lower, inf).

    The axis is partitioned at the scaled kernel zeros (united with any
    extra break sequence declared on the oscillation spec); each lobe
    is integrated with a fixed Gauss-Legendre rule and the alternating
    partial sums are accelerated with Wynn's epsilon algorithm over a
    sliding window.  Integrands whose lobes decay below the tolerance
    terminate by direct summation with a tail bound instead.
    """
    g = _Counter(lambda t: np.asarray(f_smooth(t), dtype=float) * osc.kernel(t))

    if head is not None:
        head_end = max(head, lower)
    else:
        head_end = lower + max(1.0, 10.0 / osc.frequency)
    stream = _BreakStream(osc, lower)
    # snap the head to the first break at/after head_end
    i = 0
    while stream.get(i) < head_end:
        i += 1
    head_end = stream.get(i)
    first_lobe_index = i

    if head_end > lower:
        hint = lower_hint
        seg = Interval.segment(lower, head_end, hint)
        head_res = integrate_finite(g.f, seg, 0.25 * tol, budget)
        head_val, head_err = head_res.value, head_res.abs_err
        evals = head_res.evaluations
    else:
        head_val, head_err, evals = 0.0, 0.0, 0

    if accel not in ("epsilon", "period"):
        raise ValueError(f"unknown acceleration mode {accel!r}")
    kernel_zeros = None
    kz_idx = 0
    period_t: list[float] = []
    period_s: list[float] = []
    seen_kz = 0

    sums = []
    total = head_val
    prev_est = None
    best_val, best_raw = total, math.inf
    lobe_mags = []
    i = first_lobe_index
    n_lobes = 0
    while n_lobes < max_lobes and g.n + evals < budget:
        a = stream.get(i)
        b = stream.get(i + 1)
        lobe = _gl_panel(g, a, b, 25)
        i += 1
        n_lobes += 1
        total += lobe
        sums.append(total)
        lobe_mags.append(abs(lobe))
        # direct-summation exit for rapidly decaying integrands
        if n_lobes >= 2 and lobe_mags[-1] < 0.02 * tol and lobe_mags[-2] < 0.02 * tol:
            tail_bound = 3.0 * (lobe_mags[-1] + lobe_mags[-2])
            abs_err = tail_bound + head_err
            return QuadResult(total, max(abs_err, 1e-16), g.n + evals, abs_err <= tol)
        if accel == "period":
            if kernel_zeros is None or kz_idx >= len(kernel_zeros):
                n_need = max(256, 2 * (kz_idx + 8))
                kernel_zeros = (
                    bessel_zeros(osc.bessel_order, n_need, osc.kind)
                    / osc.frequency
                )
            crossed = False
            while kz_idx < len(kernel_zeros) and kernel_zeros[kz_idx] <= b * (
                1.0 + 1e-12
            ):
                kz_idx += 1
                crossed = True
            if crossed:
                seen_kz += 1
                if seen_kz % 2 == 0:
                    period_t.append(b)
                    period_s.append(total)
            if len(period_t) >= 18:
                est, raw = _period_fit(
                    np.asarray(period_t), np.asarray(period_s)
                )
                if raw < best_raw:
                    best_val, best_raw = est, raw
                if raw < 0.3 * tol:
                    abs_err = max(2.0 * raw + head_err, 1e-16)
                    return QuadResult(est, abs_err, g.n + evals, abs_err <= tol)
            continue
        if n_lobes >= 6:
            est, raw = epsilon_extrapolate(sums[-window:])
            if math.isfinite(est) and raw < best_raw:
                best_val, best_raw = est, raw
            if prev_est is not None and math.isfinite(est):
                drift = abs(est - prev_est)
                if raw < 0.3 * tol and drift < 0.3 * tol:
                    abs_err = 2.0 * max(raw, drift) + head_err
                    abs_err = max(abs_err, 1e-16)
                    return QuadResult(est, abs_err, g.n + evals, abs_err <= tol)
            prev_est = est if math.isfinite(est) else prev_est
    abs_err = 2.0 * best_raw + head_err if math.isfinite(best_raw) else math.inf
    return QuadResult(best_val, abs_err, g.n + evals, False)


def _integrate_decaying_tail(f, lower, tol, budget=DEFAULT_BUDGET):
    """Non-oscillatory decaying tail: doubling windows until negligible."""
    total = 0.0
    err = 0.0
    evals = 0
    a = lower
    width = 1.0
    small_streak = 0
    for _ in range(64):
        b = a + width
        res = integrate_finite(f, Interval.segment(a, b), 0.1 * tol, budget)
        total += res.value
        err += res.abs_err
        evals += res.evaluations
        small_streak = small_streak + 1 if abs(res.value) < 0.02 * tol else 0
        if small_streak >= 2:
            abs_err = err + 2.0 * abs(res.value)
            return QuadResult(total, abs_err, evals, abs_err <= tol)
        a = b
        width *= 2.0
    return QuadResult(total, math.inf, evals, False)


def integrate_entry(
    f,
    iv: Interval,
    osc: Optional[OscillationSpec] = None,
    tol: float = 1e-9,
    head: Optional[float] = None,
    budget: int = DEFAULT_BUDGET,
    accel: str = "epsilon",
    max_lobes: int = 220,
) -> QuadResult:
    """Dispatch an integrand + interval (+ kernel spec) to the right rule.

    When ``osc`` is given, ``f`` is the smooth (non-kernel) factor and
    the full integrand is f(t) * C_nu(frequency * t).
    """
    if iv.is_finite:
        if osc is None:
            full = f
        else:
            full = lambda t: np.asarray(f(t), dtype=float) * osc.kernel(t)
        return integrate_finite(full, iv, tol, budget)
    lower = iv.lower if iv.kind == TAIL else 0.0
    if osc is None:
        return _integrate_decaying_tail(f, lower, tol, budget)
    return integrate_oscillatory_tail(
        f,
        osc,
        lower,
        tol,
        head=head,
        lower_hint=iv.singularity_hint,
        budget=budget,
        accel=accel,
        max_lobes=max_lobes,
    )
