"""Taylor-series propagation of solutions of y'' = (z^2/4 + a) y.

Thin, typed API over the stepping kernel.  The compiled kernel is used
when available; set the environment variable ``PCFZEROS_PURE=1`` before
import to force the pure-Python twin.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import StepFailureError

if os.environ.get("PCFZEROS_PURE") == "1":
    from . import _taylor_py as kernel
else:
    try:
        from . import _taylor_c as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _taylor_py as kernel

KERNEL = kernel.KERNEL
h_max = kernel.h_max

DEFAULT_ORDER = 30


@dataclass(frozen=True)
class TaylorState:
    """Expansion of a solution at z0: derivs[k] = y^(k)(z0)/k!.

    derivs has N+2 entries (orders 0..N+1) so that both the value and
    the derivative sums carry N+1 terms.
    """
    a: float
    z0: complex
    derivs: tuple[complex, ...]
    N: int


def derivatives_at(a: float, z0: complex, y0: complex, y1: complex,
                   N: int = DEFAULT_ORDER) -> TaylorState:
    """Generate scaled derivatives from (y, y') data at z0."""
    if N < 4:
        raise ValueError("N must be >= 4")
    c = kernel.scaled_derivs(a, z0, y0, y1, N + 1)
    return TaylorState(a=a, z0=z0, derivs=tuple(c), N=N)


def step(state: TaylorState, h: complex) -> tuple[complex, complex]:
    """Advance (y, y') by h, re-expanding and subdividing as needed."""
    if h == 0:
        return state.derivs[0], state.derivs[1]
    y, yp, tail = kernel.taylor_eval(state.derivs, h)
    scale = max(abs(y), abs(h) * abs(yp), 1e-300)
    if tail <= 1e-15 * scale and abs(h) <= kernel.h_max(state.a, state.z0):
        return y, yp
    y, yp, ok = kernel.step_once(state.a, state.z0, state.derivs[0],
                                 state.derivs[1], h, state.N)
    if not ok:
        raise StepFailureError(
            f"step of size {abs(h):.3g} at z0={state.z0} failed the tail "
            "criterion after maximal subdivision")
    return y, yp


def propagate(a: float, z0: complex, y0: complex, y1: complex,
              waypoints, order: int = DEFAULT_ORDER):
    """Propagate (y, y') along a polyline; returns (y, yprime, logscale)."""
    y, yp, logscale, ok = kernel.propagate_polyline(
        a, z0, y0, y1, list(waypoints), order)
    if not ok:
        raise StepFailureError(
            f"propagation from {z0} failed the tail criterion")
    return y, yp, logscale
