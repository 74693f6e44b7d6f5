"""Taylor-series ODE stepping for y'' = (z^2/4 + a) y."""
import cmath
import math

import numpy as np
import pytest

from pcfzeros import taylor
from pcfzeros.errors import StepFailureError
from pcfzeros.taylor import derivatives_at, h_max, propagate, step


def gauss_pair(a, z):
    """Closed forms for the two elementary parameter values."""
    if a == -0.5:
        y = cmath.exp(-z * z / 4.0)
        return y, -0.5 * z * y
    if a == -1.5:
        g = cmath.exp(-z * z / 4.0)
        return z * g, (1.0 - 0.5 * z * z) * g
    raise ValueError(a)


def test_closed_form_minus_half():
    # the solution exp(-z^2/4), started from z0 = 0
    st = derivatives_at(-0.5, 0.0 + 0.0j, 1.0, 0.0)
    for z in (0.5 + 0.5j, -1.0 + 2.0j, -3.0 + 3.0j):
        y, yp = step(st, z)
        ref, refp = gauss_pair(-0.5, z)
        assert abs(y - ref) < 1e-13 * abs(ref)
        assert abs(yp - refp) < 1e-13 * abs(refp)


def test_closed_form_minus_three_halves():
    st = derivatives_at(-1.5, 0.0 + 0.0j, 0.0, 1.0)
    z = -1.0 + 1.5j
    y, yp = step(st, z)
    ref, refp = gauss_pair(-1.5, z)
    assert abs(y - ref) < 1e-13 * abs(ref)
    assert abs(yp - refp) < 1e-13 * abs(refp)


def test_zero_step_is_identity():
    st = derivatives_at(2.0, 1.0 - 1.0j, 0.3 + 0.1j, -0.2j)
    y, yp = step(st, 0.0)
    assert y == st.derivs[0]
    assert yp == st.derivs[1]


def test_state_satisfies_ode_at_expansion_point():
    a, z0 = 1.7, -2.0 + 3.0j
    y0, y1 = 0.4 - 0.3j, 1.1 + 0.2j
    st = derivatives_at(a, z0, y0, y1)
    c = 0.25 * z0 * z0 + a
    # y'' = c y  and  y''' = c y' + (z/2) y, in scaled-derivative form
    assert abs(st.derivs[2] * 2.0 - c * y0) < 1e-14 * max(1.0, abs(c * y0))
    want3 = c * y1 + 0.5 * z0 * y0
    assert abs(st.derivs[3] * 6.0 - want3) < 1e-14 * max(1.0, abs(want3))


def test_derivatives_against_finite_differences():
    a, z0 = -3.3, -4.0 + 2.0j
    st = derivatives_at(a, z0, 1.0 + 0.0j, 0.2 - 0.5j)
    h = 1e-3
    # second derivative by central difference of the evaluated series
    yp1 = step(st, h)[0]
    ym1 = step(st, -h)[0]
    y0 = st.derivs[0]
    d2 = (yp1 - 2.0 * y0 + ym1) / (h * h)
    # central difference truncation is O(h^2 y''''/12), about 1e-6 here
    assert abs(d2 - 2.0 * st.derivs[2]) < 1e-5 * max(1.0, abs(st.derivs[2]))


def test_round_trip_corpus():
    # 500 random (a, z0, h) cases: step out, rebuild, step back.  Cases
    # where one mode grows by more than about 1e6 over the step are
    # skipped: the return leg would have to recover the data from a
    # cancellation no double-precision integrator can win.
    rng = np.random.default_rng(20260826)
    worst = 0.0
    n = 0
    while n < 500:
        a = rng.uniform(-40.0, 40.0)
        z0 = complex(rng.uniform(-60.0, 60.0), rng.uniform(-60.0, 60.0))
        h = complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
        if abs(h) > 1.0:
            continue
        mu = max(abs(z0) / 2.0, math.sqrt(abs(a)), 1.0)
        if abs(h) * mu > 3.0:
            continue
        y0 = complex(rng.normal(), rng.normal())
        y1 = complex(rng.normal(), rng.normal())
        if abs(y0) < 0.1 or abs(y1) < 0.1:
            continue
        n += 1
        fwd = derivatives_at(a, z0, y0, y1)
        # the scaled-derivative sequence must stay balanced within h_max
        hm = h_max(a, z0)
        growth = max(abs(d) * hm ** k for k, d in enumerate(fwd.derivs))
        assert growth < 1e6 * abs(fwd.derivs[0])
        ya, ypa = step(fwd, h)
        back = derivatives_at(a, z0 + h, ya, ypa)
        yb, ypb = step(back, -h)
        # relative to the data vector norm, the standard backward measure
        d = max(abs(y0), abs(y1))
        worst = max(worst, abs(yb - y0) / d, abs(ypb - y1) / d)
    assert worst < 1e-12, worst


def test_wronskian_conservation():
    # two independent solutions keep y1 y2' - y2 y1' constant
    a, z0 = 5.0, -10.0 + 8.0j
    s1 = derivatives_at(a, z0, 1.0, 0.0)
    s2 = derivatives_at(a, z0, 0.0, 1.0)
    w0 = 1.0  # value at z0
    z = z0
    for h in (0.6 - 0.2j, -0.3 + 0.7j, 0.5 + 0.5j):
        y1, yp1 = step(s1, h)
        y2, yp2 = step(s2, h)
        w = y1 * yp2 - y2 * yp1
        # the products cancel, so scale the tolerance by their size
        assert abs(w - w0) < 1e-13 * (abs(y1 * yp2) + abs(y2 * yp1))
        z = z + h
        s1 = derivatives_at(a, z, y1, yp1)
        s2 = derivatives_at(a, z, y2, yp2)


def test_h_max_bounds_series_growth():
    a, z0 = 30.0, -50.0 + 40.0j
    st = derivatives_at(a, z0, 1.0, 0.5)
    hm = h_max(a, z0)
    growth = max(abs(d) * hm ** k for k, d in enumerate(st.derivs))
    assert growth / abs(st.derivs[0]) < 1e6


def test_unreasonable_step_raises():
    a, z0 = 30.0, -50.0 + 40.0j
    st = derivatives_at(a, z0, 1.0, 0.5)
    with pytest.raises(StepFailureError):
        step(st, 1e5)


def test_subdivided_step_matches_many_small_steps():
    # one large step (internally subdivided) vs an explicit fine walk
    a, z0 = 3.0, -6.0 + 5.0j
    y0, y1 = 1.0 + 0.0j, 0.0 + 1.0j
    target = -2.0 + 9.0j
    st = derivatives_at(a, z0, y0, y1)
    y, yp = step(st, target - z0)
    n = 200
    z = z0
    cy, cyp = y0, y1
    for k in range(1, n + 1):
        zn = z0 + (target - z0) * (k / n)
        cy, cyp = step(derivatives_at(a, z, cy, cyp), zn - z)
        z = zn
    assert abs(y - cy) < 1e-11 * abs(cy)
    assert abs(yp - cyp) < 1e-11 * abs(cyp)


def test_propagate_polyline():
    a, z0 = 3.0, -6.0 + 5.0j
    y0, y1 = 1.0 + 0.0j, 0.0 + 1.0j
    mid = -4.0 + 7.0j
    target = -2.0 + 9.0j
    y, yp, logscale = propagate(a, z0, y0, y1, [mid, target])
    yd, ypd = step(derivatives_at(a, z0, y0, y1), target - z0)
    scale = math.exp(logscale)
    assert abs(y * scale - yd) < 1e-11 * abs(yd)
    assert abs(yp * scale - ypd) < 1e-11 * abs(ypd)


def test_order_validation():
    with pytest.raises(ValueError):
        derivatives_at(1.0, 0.0, 1.0, 0.0, N=2)


def test_kernel_selected():
    assert taylor.KERNEL in ("cython", "python")
