"""Liouville-Green asymptotic evaluation for large positive parameter.

All routines work in the scaled variable ``zhat`` (the physical argument
is z = sqrt(2u)*zhat with u = 2a) and return :class:`ScaledValue`
results, since the prefactors overflow doubles long before the series
lose accuracy.

Branch conventions: the square root w = sqrt(zhat^2 + 1) is principal,
which has positive real part everywhere off the cuts zhat = +/- i*y,
1 <= y < inf; the LG variable uses the principal inverse hyperbolic
sine, whose cuts coincide with those.
"""
from __future__ import annotations

import cmath
import math
import warnings

from . import _dd
from .errors import CutError, RegionError, TruncationWarning
from .lgcoef import LGCoeffTables, make_tables

U_MIN = 36.0          # smallest parameter the expansions are trusted at
R_TURNING = 0.35      # excluded disk radius around the turning point zhat = i

_QUARTER_PI = math.pi / 4.0


def _check_cut(zhat: complex) -> None:
    if abs(zhat.real) < 1e-13 and abs(zhat.imag) >= 1.0:
        raise CutError(f"zhat={zhat} lies on a branch cut")


def xi_bar(zhat: complex) -> complex:
    """LG phase variable: (1/2) zhat*sqrt(zhat^2+1) + (1/2) asinh(zhat)."""
    _check_cut(zhat)
    w = cmath.sqrt(zhat * zhat + 1.0)
    return 0.5 * zhat * w + 0.5 * cmath.asinh(zhat)


def beta_bar(zhat: complex) -> complex:
    """zhat / sqrt(zhat^2 + 1) on the same branch as :func:`xi_bar`."""
    _check_cut(zhat)
    return zhat / cmath.sqrt(zhat * zhat + 1.0)


def rho(zhat: complex) -> complex:
    """Phase measured from the turning point: i*xi_bar + pi/4."""
    return 1j * xi_bar(zhat) + _QUARTER_PI


def _truncated_sum(coeffs, u: float, start: int, step: int) -> complex:
    """sum coeffs[s] / u^s over s = start, start+step, ...

    ``coeffs[s]`` is looked up through a callable (1-based order).  Stops
    early once a term is below 1e-16 of the partial sum; warns if the
    final retained term is still above 1e-12 of it (approaching the
    divergent tail of the asymptotic series).
    """
    total = 0j
    last = 0.0
    upow = u ** start
    ustep = u ** step
    s = start
    n = 0
    while True:
        c = coeffs(s)
        if c is None:
            break
        term = c / upow
        total += term
        last = abs(term)
        n += 1
        if last < 1e-16 * max(abs(total), 1e-300):
            last = 0.0
            break
        upow *= ustep
        s += step
    if n and last > 1e-12 * max(abs(total), 1e-300):
        warnings.warn(
            f"asymptotic sum truncated at relative size {last / max(abs(total), 1e-300):.2e}",
            TruncationWarning, stacklevel=3)
    return total


def _sum_even(tables: LGCoeffTables, u: float, beta: complex) -> complex:
    return _truncated_sum(
        lambda s: tables.eval_E(s, beta) if s <= tables.S else None, u, 2, 2)


def _sum_even_tilde(tables: LGCoeffTables, u: float, beta: complex) -> complex:
    return _truncated_sum(
        lambda s: tables.eval_Etilde(s, beta) if s <= tables.S else None, u, 2, 2)


def _sum_odd_beta(tables: LGCoeffTables, u: float, beta: complex) -> complex:
    return _truncated_sum(
        lambda s: tables.eval_E(s, beta) if s <= tables.S else None, u, 1, 2)


def _sum_odd_beta_tilde(tables: LGCoeffTables, u: float, beta: complex) -> complex:
    return _truncated_sum(
        lambda s: tables.eval_Etilde(s, beta) if s <= tables.S else None, u, 1, 2)


def _sum_odd_anchor(tables: LGCoeffTables, u: float) -> float:
    return _truncated_sum(
        lambda s: tables.E_at_m1[s - 1] if s <= tables.S else None, u, 1, 2).real


def _sum_odd_anchor_tilde(tables: LGCoeffTables, u: float) -> float:
    return _truncated_sum(
        lambda s: tables.Etilde_at_p1[s - 1] if s <= tables.S else None, u, 1, 2).real


def _sum_full(tables: LGCoeffTables, u: float, beta: complex,
              tilde: bool, alternating: bool) -> complex:
    """sum sgn^s (F_s(beta) - F_s(anchor)) / u^s over all s."""
    anchors = tables.Etilde_at_p1 if tilde else tables.E_at_m1
    ev = tables.eval_Etilde if tilde else tables.eval_E

    def coeff(s):
        if s > tables.S:
            return None
        anchor = anchors[s - 1]
        if tilde:
            # Et_s(-1) = (-1)^s Et_s(1) by parity
            anchor = anchor if s % 2 == 0 else -anchor
        c = ev(s, beta) - anchor
        return -c if (alternating and s % 2 == 1) else c

    return _truncated_sum(coeff, u, 1, 1)


def chi(u: float, zhat: complex, tables: LGCoeffTables | None = None) -> complex:
    """Phase whose real cosine carries the zeros of the function."""
    tables = tables or make_tables()
    beta = beta_bar(zhat)
    return (1j * u * xi_bar(zhat) + 0.25 * (u + 1.0) * math.pi
            - 1j * _sum_odd_beta(tables, u, beta))


def chi_via_rho(u: float, zhat: complex, tables: LGCoeffTables | None = None) -> complex:
    """Equivalent phase form anchored at the turning point."""
    tables = tables or make_tables()
    beta = beta_bar(zhat)
    return (u * rho(zhat) + _QUARTER_PI
            - 1j * _sum_odd_beta(tables, u, beta))


def chi_tilde(u: float, zhat: complex, tables: LGCoeffTables | None = None) -> complex:
    """Phase for the derivative expansion (sine carries the zeros)."""
    tables = tables or make_tables()
    beta = beta_bar(zhat)
    return (1j * u * xi_bar(zhat) + 0.25 * (u + 1.0) * math.pi
            + 1j * _sum_odd_beta_tilde(tables, u, beta))


def check_region(u: float, zhat: complex, r_tp: float = R_TURNING) -> None:
    """Validity gate for the oscillatory-form expansions."""
    if u < U_MIN:
        raise RegionError(f"u={u} below the trusted minimum {U_MIN}")
    if zhat.real > 1e-12 or zhat.imag < -1e-12:
        raise RegionError(f"zhat={zhat} not in the closed second quadrant")
    if abs(zhat - 1j) < r_tp:
        raise RegionError(f"zhat={zhat} within {r_tp} of the turning point i")
    if abs(zhat.real) < 1e-13 and 0.0 <= zhat.imag <= 1.0:
        raise RegionError(f"zhat={zhat} on the excluded segment [0, i]")
    _check_cut(zhat)


def _geometry(u: float, zhat: complex):
    w = cmath.sqrt(zhat * zhat + 1.0)
    beta = zhat / w
    xi = 0.5 * zhat * w + 0.5 * cmath.asinh(zhat)
    quarter = cmath.sqrt(w)          # (1 + zhat^2)^(1/4)
    log2u_quarter = 0.25 * math.log(2.0 * u)
    return w, beta, xi, quarter, log2u_quarter


_PI_LO = 1.2246467991473532e-16  # pi - math.pi, the tail of the double


def _geometry_dd(u: float, z: complex):
    """Geometry from the physical argument z = sqrt(2u)*zhat.

    The scaling, the LG variable xi and the phase u*xi are carried in
    double-double precision: for |z| ~ 100 and u ~ 40 the phase reaches
    a few thousand, where plain double rounding of xi alone already
    costs ~3e-13 of relative accuracy in the oscillatory factors.
    Returns (zhat, beta, phi, quarter, log2u_quarter) with phi = u*xi
    as a (hi, lo) complex pair and everything else plain doubles.
    """
    s2u = _dd.dd_sqrt((2.0 * u, 0.0))
    zh = _dd.cdd_div_dd((complex(z), 0j), s2u)
    zhat = zh[0] + zh[1]
    w2 = _dd.cdd_add(_dd.cdd_mul(zh, zh), (1.0 + 0j, 0j))
    wdd = _dd.cdd_sqrt(w2)
    w = wdd[0] + wdd[1]
    beta = zhat / w
    asinh = _dd.cdd_log(_dd.cdd_add(zh, wdd))
    xi = _dd.cdd_mul_d(_dd.cdd_add(_dd.cdd_mul(zh, wdd), asinh), 0.5)
    phi = _dd.cdd_mul_d(xi, u)
    quarter = cmath.sqrt(w)
    log2u_quarter = 0.25 * math.log(2.0 * u)
    return zhat, beta, phi, quarter, log2u_quarter


def _scaled_cos_dd(xr, xim):
    """cos(x) as (mantissa, exponent) with x given as dd (real, imag)."""
    t, tl = xim
    m = abs(t)
    cp = cmath.exp(1j * xr[0]) * cmath.exp(complex(-tl, xr[1]))
    cm = cmath.exp(-1j * xr[0]) * cmath.exp(complex(tl, -xr[1]))
    mant = 0.5 * (cp * math.exp(-t - m) + cm * math.exp(t - m))
    return mant, m


def _scaled_sin_dd(xr, xim):
    t, tl = xim
    m = abs(t)
    cp = cmath.exp(1j * xr[0]) * cmath.exp(complex(-tl, xr[1]))
    cm = cmath.exp(-1j * xr[0]) * cmath.exp(complex(tl, -xr[1]))
    mant = (cp * math.exp(-t - m) - cm * math.exp(t - m)) / 2j
    return mant, m


def _log_pref(u: float) -> float:
    # log of (2e/u)^(u/4)
    return 0.25 * u * (math.log(2.0) + 1.0 - math.log(u))


def _scaled_cos(x: complex):
    """cos(x) as (mantissa, exponent) safe for large |Im x|."""
    t = x.imag
    m = abs(t)
    mant = 0.5 * (cmath.exp(1j * x.real) * math.exp(-t - m)
                  + cmath.exp(-1j * x.real) * math.exp(t - m))
    return mant, m


def _scaled_sin(x: complex):
    t = x.imag
    m = abs(t)
    mant = (cmath.exp(1j * x.real) * math.exp(-t - m)
            - cmath.exp(-1j * x.real) * math.exp(t - m)) / 2j
    return mant, m


from .scaled import ScaledValue  # noqa: E402  (after helpers, avoids cycle risk)


def eval_U(u: float, zhat: complex | None, tables: LGCoeffTables | None = None,
           enforce_region: bool = True, z: complex | None = None) -> ScaledValue:
    """U(u/2, sqrt(2u)*zhat) via the cosine-form expansion.

    If the physical argument ``z`` is given (and ``zhat`` may then be
    None), the scaling and the large phase u*xi are carried in
    double-double precision, which keeps the relative accuracy near
    1e-14 even when the phase reaches a few thousand.
    """
    tables = tables or make_tables()
    if z is not None:
        zhat, beta, phi, quarter, lq = _geometry_dd(u, z)
        if enforce_region:
            check_region(u, zhat)
        s_even = _sum_even(tables, u, beta)
        s_anchor = _sum_odd_anchor(tables, u)
        s_odd = _sum_odd_beta(tables, u, beta)
        qpi = _dd.dd_mul_d((math.pi, _PI_LO), 0.25 * (u + 1.0))
        # x = i*u*xi + (u+1)*pi/4 - i*s_odd, assembled in dd
        xr = _dd.dd_add(_dd.dd_add((-phi[0].imag, -phi[1].imag), qpi),
                        (s_odd.imag, 0.0))
        xim = _dd.dd_add((phi[0].real, phi[1].real), (-s_odd.real, 0.0))
        cos_m, cos_e = _scaled_cos_dd(xr, xim)
        mant = 2.0 * cmath.exp(-1j * qpi[0]) * cmath.exp(-1j * qpi[1]) / quarter
        mant *= cmath.exp(1j * s_even.imag) * cos_m
        e = (_log_pref(u) - lq, 0.0)
        for term in (s_even.real, s_anchor, cos_e):
            e = _dd.dd_add(e, (term, 0.0))
        return ScaledValue.make(mant * math.exp(e[1]), e[0])
    if enforce_region:
        check_region(u, zhat)
    w, beta, xi, quarter, lq = _geometry(u, zhat)
    s_even = _sum_even(tables, u, beta)
    s_anchor = _sum_odd_anchor(tables, u)
    x = (1j * u * xi + 0.25 * (u + 1.0) * math.pi
         - 1j * _sum_odd_beta(tables, u, beta))
    cos_m, cos_e = _scaled_cos(x)
    mant = 2.0 * cmath.exp(-0.25j * (u + 1.0) * math.pi) / quarter
    mant *= cmath.exp(1j * s_even.imag) * cos_m
    expo = _log_pref(u) - lq + s_even.real + s_anchor + cos_e
    return ScaledValue.make(mant, expo)


def eval_Uprime(u: float, zhat: complex | None, tables: LGCoeffTables | None = None,
                enforce_region: bool = True, z: complex | None = None) -> ScaledValue:
    """U'(u/2, sqrt(2u)*zhat) via the sine-form expansion.

    ``z`` selects the same double-double phase path as in :func:`eval_U`.
    """
    tables = tables or make_tables()
    if z is not None:
        zhat, beta, phi, quarter, lq = _geometry_dd(u, z)
        if enforce_region:
            check_region(u, zhat)
        s_even = _sum_even_tilde(tables, u, beta)
        s_anchor = _sum_odd_anchor_tilde(tables, u)
        s_odd = _sum_odd_beta_tilde(tables, u, beta)
        qpi = _dd.dd_mul_d((math.pi, _PI_LO), 0.25 * (u + 1.0))
        # x = i*u*xi + (u+1)*pi/4 + i*s_odd, assembled in dd
        xr = _dd.dd_add(_dd.dd_add((-phi[0].imag, -phi[1].imag), qpi),
                        (-s_odd.imag, 0.0))
        xim = _dd.dd_add((phi[0].real, phi[1].real), (s_odd.real, 0.0))
        sin_m, sin_e = _scaled_sin_dd(xr, xim)
        qpm = _dd.dd_mul_d((math.pi, _PI_LO), -0.25 * (u - 1.0))
        mant = -cmath.exp(1j * qpm[0]) * cmath.exp(1j * qpm[1]) * quarter
        mant *= cmath.exp(1j * s_even.imag) * sin_m
        e = (_log_pref(u) + lq, 0.0)
        for term in (s_even.real, s_anchor, sin_e):
            e = _dd.dd_add(e, (term, 0.0))
        return ScaledValue.make(mant * math.exp(e[1]), e[0])
    if enforce_region:
        check_region(u, zhat)
    w, beta, xi, quarter, lq = _geometry(u, zhat)
    s_even = _sum_even_tilde(tables, u, beta)
    s_anchor = _sum_odd_anchor_tilde(tables, u)
    x = (1j * u * xi + 0.25 * (u + 1.0) * math.pi
         + 1j * _sum_odd_beta_tilde(tables, u, beta))
    sin_m, sin_e = _scaled_sin(x)
    mant = -cmath.exp(-0.25j * (u - 1.0) * math.pi) * quarter
    mant *= cmath.exp(1j * s_even.imag) * sin_m
    expo = _log_pref(u) + lq + s_even.real + s_anchor + sin_e
    return ScaledValue.make(mant, expo)


def eval_U_negarg(u: float, zhat: complex, tables: LGCoeffTables | None = None,
                  enforce_region: bool = True) -> ScaledValue:
    """U(u/2, -sqrt(2u)*zhat), the solution recessive as zhat -> -inf."""
    tables = tables or make_tables()
    if enforce_region:
        if u < U_MIN:
            raise RegionError(f"u={u} below the trusted minimum {U_MIN}")
        if abs(zhat - 1j) < R_TURNING:
            raise RegionError("zhat too close to the turning point i")
        _check_cut(zhat)
    w, beta, xi, quarter, lq = _geometry(u, zhat)
    f = _sum_full(tables, u, beta, tilde=False, alternating=True)
    mant = cmath.exp(1j * (u * xi.imag + f.imag)) / quarter
    expo = _log_pref(u) - lq + u * xi.real + f.real
    return ScaledValue.make(mant, expo)


def eval_U_rot(u: float, zhat: complex, tables: LGCoeffTables | None = None,
               enforce_region: bool = True) -> ScaledValue:
    """U(-u/2, -i*sqrt(2u)*zhat), recessive as zhat -> i*inf."""
    tables = tables or make_tables()
    if enforce_region:
        if u < U_MIN:
            raise RegionError(f"u={u} below the trusted minimum {U_MIN}")
        if abs(zhat.real) < 1e-13 and 0.0 <= zhat.imag <= 1.0:
            raise RegionError("zhat on the excluded segment [0, i]")
        if abs(zhat - 1j) < R_TURNING:
            raise RegionError("zhat too close to the turning point i")
        _check_cut(zhat)
    w, beta, xi, quarter, lq = _geometry(u, zhat)
    f = _sum_full(tables, u, beta, tilde=False, alternating=False)
    mant = cmath.exp(0.25j * (u - 1.0) * math.pi) / quarter
    mant *= cmath.exp(1j * (-u * xi.imag + f.imag))
    expo = -_log_pref(u) - lq - u * xi.real + f.real
    return ScaledValue.make(mant, expo)


def eval_Uprime_negarg(u: float, zhat: complex, tables: LGCoeffTables | None = None,
                       enforce_region: bool = True) -> ScaledValue:
    """U'(u/2, -sqrt(2u)*zhat)."""
    tables = tables or make_tables()
    if enforce_region:
        if u < U_MIN:
            raise RegionError(f"u={u} below the trusted minimum {U_MIN}")
        if abs(zhat - 1j) < R_TURNING:
            raise RegionError("zhat too close to the turning point i")
        _check_cut(zhat)
    w, beta, xi, quarter, lq = _geometry(u, zhat)
    f = _sum_full(tables, u, beta, tilde=True, alternating=False)
    mant = -0.5 * quarter * cmath.exp(1j * (u * xi.imag + f.imag))
    expo = _log_pref(u) + lq + u * xi.real + f.real
    return ScaledValue.make(mant, expo)


def eval_Uprime_rot(u: float, zhat: complex, tables: LGCoeffTables | None = None,
                    enforce_region: bool = True) -> ScaledValue:
    """U'(-u/2, -i*sqrt(2u)*zhat)."""
    tables = tables or make_tables()
    if enforce_region:
        if u < U_MIN:
            raise RegionError(f"u={u} below the trusted minimum {U_MIN}")
        if abs(zhat.real) < 1e-13 and 0.0 <= zhat.imag <= 1.0:
            raise RegionError("zhat on the excluded segment [0, i]")
        if abs(zhat - 1j) < R_TURNING:
            raise RegionError("zhat too close to the turning point i")
        _check_cut(zhat)
    w, beta, xi, quarter, lq = _geometry(u, zhat)
    f = _sum_full(tables, u, beta, tilde=True, alternating=True)
    mant = -0.5 * quarter * cmath.exp(0.25j * (u + 1.0) * math.pi)
    mant *= cmath.exp(1j * (-u * xi.imag + f.imag))
    expo = -_log_pref(u) + lq - u * xi.real + f.real
    return ScaledValue.make(mant, expo)


def gamma_ratio(u: float, tables: LGCoeffTables | None = None,
                variant: str = "E") -> float:
    """Series approximation of sqrt(2 pi)/Gamma(u/2 + 1/2) * (u/2e)^(u/2).

    variant "E" uses the base-family odd anchors at -1, variant "Etilde"
    the tilde-family anchors at +1; both target the same ratio.
    """
    tables = tables or make_tables()
    if variant == "E":
        s = _sum_odd_anchor(tables, u)
    elif variant == "Etilde":
        s = _sum_odd_anchor_tilde(tables, u)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return math.exp(2.0 * s)
