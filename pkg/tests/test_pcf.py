"""Function evaluation: origin data, route dispatch, recurrence checks."""
import cmath
import math

import pytest

from pcfzeros import taylor
from pcfzeros.config import ChainConfig
from pcfzeros.errors import RegionError
from pcfzeros.pcf import (evaluate, origin_values, origin_values_scaled,
                          relative_error_estimate)

mpmath = pytest.importorskip("mpmath")


def test_origin_values_closed_form():
    # U(a, 0) = sqrt(pi) / (2^(a/2 + 1/4) Gamma(3/4 + a/2))
    a = 2.3
    u0, up0 = origin_values(a)
    assert abs(u0 - 0.69833466111617388) < 1e-15
    want_up = -math.sqrt(math.pi) / (
        2.0 ** (a / 2.0 - 0.25) * math.gamma(0.25 + a / 2.0))
    assert abs(up0 - want_up) < 1e-15 * abs(want_up)


def test_origin_values_match_mpmath():
    for a in (-4.2, -0.9, 0.3, 7.7):
        u0, up0 = origin_values(a)
        assert abs(u0 - float(mpmath.pcfu(a, 0))) < 1e-14 * abs(u0)
        ref = float(mpmath.diff(lambda t: mpmath.pcfu(a, t), 0))
        assert abs(up0 - ref) < 1e-13 * abs(ref)


def test_origin_values_scaled_consistent():
    a = 40.0
    (m0, m1), e = origin_values_scaled(a)
    s = math.exp(e)
    plain_u, plain_up = origin_values(a)
    assert abs(m0 * s - plain_u) < 1e-14 * abs(plain_u)
    assert abs(m1 * s - plain_up) < 1e-14 * abs(plain_up)


def test_evaluate_against_mpmath_moderate():
    cases = [(-1.7, -2.0 + 3.0j), (2.3, -1.0 + 4.0j), (-5.5, -6.0 + 1.0j)]
    for a, z in cases:
        v = evaluate(a, z)
        u = v.U.to_complex()
        up = v.Uprime.to_complex()
        ru = complex(mpmath.pcfu(a, complex(z)))
        rup = complex(mpmath.diff(lambda t: mpmath.pcfu(a, t), complex(z)))
        assert abs(u - ru) < 1e-11 * abs(ru), (a, z)
        assert abs(up - rup) < 1e-11 * abs(rup), (a, z)


def test_taylor_and_lg_routes_agree():
    a, z = 20.0, -20.0 + 20.0j
    vt = evaluate(a, z, method="taylor")
    vl = evaluate(a, z, method="lg")
    assert vt.method != vl.method
    assert vt.U.rel_diff(vl.U) < 1e-11
    assert vt.Uprime.rel_diff(vl.Uprime) < 1e-11


def test_neg_parameter_lg_route_agrees_with_taylor():
    a, z = -20.0, -12.0 + 10.0j
    vt = evaluate(a, z, method="taylor")
    vl = evaluate(a, z, method="lg")
    assert vt.U.rel_diff(vl.U) < 1e-11
    assert vt.Uprime.rel_diff(vl.Uprime) < 1e-11


def test_recurrence_residuals():
    # z U(a,z) - U(a-1,z) + (a + 1/2) U(a+1,z) = 0
    a, z = 20.0, -25.0 + 25.0j
    u_m = evaluate(a - 1.0, z, method="lg").U
    v0 = evaluate(a, z, method="lg")
    u_p = evaluate(a + 1.0, z, method="lg").U
    res = v0.U * z - u_m + u_p * (a + 0.5)
    scale = max(abs(z) * math.exp(v0.U.log_abs()), math.exp(u_m.log_abs()))
    assert math.exp(res.log_abs()) < 5e-13 * scale
    # U'(a,z) - (z/2) U(a,z) + U(a-1,z) = 0
    res2 = v0.Uprime - v0.U * (0.5 * z) + u_m
    scale2 = max(math.exp(v0.Uprime.log_abs()), math.exp(u_m.log_abs()))
    assert math.exp(res2.log_abs()) < 5e-13 * scale2


def test_conjugate_symmetry():
    # U(a, conj z) = conj U(a, z) for real a
    for a, z in ((3.1, -4.0 + 5.0j), (-7.7, -3.0 + 2.0j)):
        u1 = evaluate(a, z).U.to_complex()
        u2 = evaluate(a, z.conjugate()).U.to_complex()
        assert abs(u2 - u1.conjugate()) < 1e-12 * abs(u1)


def test_path_independence():
    # straight path vs a dog-leg through a different waypoint
    a = 2.0
    z = -3.0 + 4.0j
    y1, yp1, ls1 = taylor.propagate(a, 0.0, 1.0, 0.0, [z])
    y2, yp2, ls2 = taylor.propagate(a, 0.0, 1.0, 0.0, [-3.0 + 0.0j, z])
    v1 = y1 * cmath.exp(ls1)
    v2 = y2 * cmath.exp(ls2)
    assert abs(v1 - v2) < 1e-10 * abs(v1)


def test_dispatch_continuity_near_gate():
    # crossing the automatic Taylor/LG boundary must not jump the value
    cfg = ChainConfig()
    a = 25.0
    # Im chosen so neither sample point sits near a zero of U
    z_in = complex(-cfg.lg_gate - 0.2, cfg.lg_gate + 4.0)
    z_out = complex(-cfg.lg_gate + 0.2, cfg.lg_gate + 4.0)
    for z in (z_in, z_out):
        u = evaluate(a, z, cfg).U.to_complex()
        ref = complex(mpmath.pcfu(a, complex(z)))
        assert abs(u - ref) < 1e-10 * abs(ref), z


def test_region_rejection():
    with pytest.raises(RegionError):
        evaluate(1.0, 40.0 + 5.0j)
    with pytest.raises(ValueError):
        evaluate(1.0, -1.0 + 1.0j, method="bogus")


def test_relative_error_estimate_scale():
    # at a generic point the estimate is O(1/|z|); tiny only near a zero
    est = relative_error_estimate(2.3, -3.0 + 4.0j)
    assert 1e-3 < est < 10.0
    with pytest.raises(ValueError):
        relative_error_estimate(2.3, 0.0)
