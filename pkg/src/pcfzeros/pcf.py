"""Absolute evaluation of U(a,z) and U'(a,z) in the left half-plane.

Two routes: origin-anchored Taylor-ODE integration along a path that
follows the level lines of Re z^2 (where forward integration stays well
conditioned, see _path_waypoints), and the Liouville-Green expansions
for large positive parameter away from the axes.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.special import gammaln, gammasgn

from . import lgeval, taylor
from .config import ChainConfig, DEFAULT_CONFIG
from .errors import PcfZerosError, RegionError
from .lgcoef import make_tables
from .scaled import ScaledValue

_RAY_ANGLE = 0.75 * math.pi
_LOG_SQRT_PI = 0.5 * math.log(math.pi)
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class PcfValue:
    """Function and derivative values with evaluation-route provenance."""
    U: ScaledValue
    Uprime: ScaledValue
    method: str  # "origin-series" | "liouville-green"


def origin_values(a: float) -> tuple[float, float]:
    """Standard initial values (U(a,0), U'(a,0)).

    Plain doubles; overflows for |a| beyond a few hundred, use
    :func:`origin_values_scaled` in that regime.
    """
    (m0, m1), e = origin_values_scaled(a)
    s = math.exp(e)
    return m0.real * s, m1.real * s


def origin_values_scaled(a: float) -> tuple[tuple[complex, complex], float]:
    """Origin data as mantissa pair + common log scale."""
    x0 = 0.75 + 0.5 * a
    x1 = 0.25 + 0.5 * a
    g0 = gammaln(x0)
    g1 = gammaln(x1)
    # gammasgn is nan at the poles, where the value is exactly zero
    s0 = gammasgn(x0) if math.isfinite(g0) else 0.0
    s1 = gammasgn(x1) if math.isfinite(g1) else 0.0
    # log |U(a,0)| and log |U'(a,0)|; -inf at Gamma poles
    l0 = _LOG_SQRT_PI - (0.5 * a + 0.25) * _LN2 - g0 if s0 else -math.inf
    l1 = _LOG_SQRT_PI - (0.5 * a - 0.25) * _LN2 - g1 if s1 else -math.inf
    e = max(l0, l1)
    m0 = s0 * math.exp(l0 - e) if s0 else 0.0
    m1 = -s1 * math.exp(l1 - e) if s1 else 0.0
    return (complex(m0), complex(m1)), e


def _path_waypoints(a: float, z: complex) -> list[complex]:
    """Integration path 0 -> axis -> z along the hyperbola Re w^2 = Re z^2.

    The first leg runs along the real or imaginary axis (whichever the
    hyperbola through z meets) and the second follows that hyperbola,
    i.e. a line of constant Im(i w^2/2).  Along such a line the growing
    and decaying solution branches both evolve monotonically toward
    their size at z, so forward integration picks up no contamination
    that later outgrows the target value.  A constant-modulus arc, by
    contrast, lets errors committed where |U| is large feed the other
    branch, which then outgrows U(z).
    """
    x, y = z.real, z.imag
    c = x * x - y * y          # Re z^2, conserved on the second leg
    s_end = 2.0 * x * y        # Im z^2, swept from 0 to its target value
    if c >= 0.0:
        p = complex(math.copysign(math.sqrt(c), x if x != 0.0 else 1.0), 0.0)
    else:
        p = complex(0.0, math.copysign(math.sqrt(-c), y if y != 0.0 else 1.0))
    pts: list[complex] = []
    if abs(p) > 1e-12:
        pts.append(p)
    if abs(s_end) > 1e-12:
        zc = p
        s = 0.0
        sgn = math.copysign(1.0, s_end)
        while True:
            # waypoint spacing chosen so chords stay within one step
            ds = 2.0 * abs(zc) * taylor.h_max(a, zc)
            s += sgn * max(1.0, ds)
            if (s_end - s) * sgn <= 0.0:
                break
            w = cmath.sqrt(complex(c, s))
            if x < 0.0:
                w = -w
            pts.append(w)
            zc = w
    pts.append(z)
    return pts


def evaluate(a: float, z: complex, cfg: ChainConfig = DEFAULT_CONFIG,
             method: str = "auto") -> PcfValue:
    """U(a,z) and U'(a,z) at a point of the closed left half-plane.

    method: "auto" dispatches to the LG expansions for a >= cfg.a_lg at
    points with |Re z| and |Im z| beyond cfg.lg_gate, otherwise to the
    origin-anchored Taylor route; "taylor" / "lg" force a route.
    """
    z = complex(z)
    if z.real > 1e-9 and abs(z) > 30.0:
        raise RegionError(f"z={z} outside the supported evaluation region")
    if method not in ("auto", "taylor", "lg"):
        raise ValueError(f"unknown method {method!r}")

    use_lg = method == "lg"
    if method == "auto":
        if a >= cfg.a_lg and abs(z.real) > cfg.lg_gate \
                and abs(z.imag) > cfg.lg_gate:
            use_lg = True
        elif a <= -cfg.a_lg and _neg_lg_usable(a, z):
            use_lg = True
    if use_lg:
        try:
            if a < 0:
                return _evaluate_lg_neg(a, z, cfg)
            return _evaluate_lg(a, z, cfg)
        except PcfZerosError:
            if method == "lg":
                raise
    return _evaluate_taylor(a, z, cfg)


def _evaluate_lg(a: float, z: complex, cfg: ChainConfig) -> PcfValue:
    u = 2.0 * a
    tables = make_tables(cfg.lg_order)
    conj = z.imag < 0.0
    if conj:
        z = z.conjugate()
    U = lgeval.eval_U(u, None, tables, z=z)
    Up = lgeval.eval_Uprime(u, None, tables, z=z)
    if conj:
        U = U.conjugate()
        Up = Up.conjugate()
    return PcfValue(U=U, Uprime=Up, method="liouville-green")


def _neg_lg_usable(a: float, z: complex) -> bool:
    """Geometric gate for the negative-parameter LG route: the mapped
    variable must keep clear of the turning point and the branch cut."""
    u = -2.0 * a
    s = math.sqrt(2.0 * u)
    w = z if z.imag >= 0 else z.conjugate()
    zhat = complex(-w.imag / s, -w.real / s)
    if abs(zhat - 1j) < 0.5:
        return False
    # near the imaginary zhat axis below the turning point the cut and
    # the oscillatory real-z segment take over; Taylor handles those
    if abs(zhat.real) < 0.1 and abs(zhat.imag) < 1.2:
        return False
    return True


def _evaluate_lg_neg(a: float, z: complex, cfg: ChainConfig) -> PcfValue:
    """U(a,z), U'(a,z) for large negative a from the positive-parameter
    expansions through the parameter-connection relation.

    With u = -2a, the relation expressing U(u/2, i w) through
    U(u/2, -i w) and U(-u/2, w) is solved for the last term; both
    right-hand values map to the same hatted variable in the second
    quadrant, where the oscillatory and single-exponential expansions
    apply respectively.
    """
    u = -2.0 * a
    tables = make_tables(cfg.lg_order)
    conj = z.imag < 0.0
    w = z.conjugate() if conj else z
    wm = complex(-w.imag, -w.real)
    zhat = wm / math.sqrt(2.0 * u)
    T1 = lgeval.eval_U(u, None, tables, z=wm).conjugate()
    T2 = lgeval.eval_U_negarg(u, zhat, tables).conjugate()
    D1 = lgeval.eval_Uprime(u, None, tables, z=wm).conjugate()
    D2 = lgeval.eval_Uprime_negarg(u, zhat, tables).conjugate()

    # 1/gamma = -i e^{(u/4+1/4) pi i} Gamma(u/2+1/2) / sqrt(2 pi), with
    # the Gamma expressed through its scaled asymptotic ratio
    gr = lgeval.gamma_ratio(u, tables)
    inv_gamma = ScaledValue.make(
        -1j * cmath.exp(0.25j * math.pi * (u + 1.0)) / gr,
        0.5 * u * (math.log(0.5 * u) - 1.0))
    phase = 1j * cmath.exp(-0.5j * math.pi * u)

    U = (T1 + T2 * phase) * inv_gamma
    Up = (D1 * 1j + D2 * cmath.exp(-0.5j * math.pi * u)) * inv_gamma
    if conj:
        U = U.conjugate()
        Up = Up.conjugate()
    return PcfValue(U=U, Uprime=Up, method="liouville-green")


def _evaluate_taylor(a: float, z: complex, cfg: ChainConfig) -> PcfValue:
    (m0, m1), e = origin_values_scaled(a)
    if abs(z) < 1e-300:
        return PcfValue(U=ScaledValue.make(m0, e),
                        Uprime=ScaledValue.make(m1, e),
                        method="origin-series")
    y, yp, logscale = taylor.propagate(a, 0j, m0, m1,
                                       _path_waypoints(a, z),
                                       cfg.taylor_order)
    return PcfValue(U=ScaledValue.make(y, e + logscale),
                    Uprime=ScaledValue.make(yp, e + logscale),
                    method="origin-series")


def relative_error_estimate(a: float, z: complex,
                            cfg: ChainConfig = DEFAULT_CONFIG) -> float:
    """Inverse condition number |U / (z U')| at z: the estimated relative
    error of z viewed as a computed zero of U(a, .)."""
    if z == 0:
        raise ValueError("z must be nonzero")
    v = evaluate(a, z, cfg)
    if v.U.is_zero:
        return 0.0
    return math.exp(v.U.exponent - v.Uprime.exponent) / abs(z)
