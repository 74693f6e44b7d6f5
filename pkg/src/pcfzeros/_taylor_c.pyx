# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Taylor stepping kernel; semantics match pcfzeros._taylor_py."""

from libc.math cimport sqrt, log, fabs
from libc.stdlib cimport malloc, free

cdef extern from "complex.h":
    double cabs(double complex) nogil

DEF TAIL_TOL = 1e-15
DEF MAX_SPLIT_DEPTH = 6
DEF RESCALE_LIMIT = 1e130
DEF MAX_ORDER = 256

KERNEL = "cython"


cdef inline double _h_max(double a, double complex z) nogil:
    cdef double m = cabs(z) * 0.5
    cdef double sa = sqrt(fabs(a))
    if sa > m:
        m = sa
    if 1.0 > m:
        m = 1.0
    return 6.0 / m


def h_max(double a, double complex z):
    """Largest trusted step size at expansion point z."""
    return _h_max(a, z)


cdef void _derivs(double a, double complex z0, double complex y0,
                  double complex y1, int n, double complex *c) nogil:
    cdef double complex q = 0.25 * z0 * z0 + a
    cdef double complex hz = 0.5 * z0
    cdef double complex t
    cdef int k
    c[0] = y0
    c[1] = y1
    for k in range(n - 1):
        t = q * c[k]
        if k >= 1:
            t = t + hz * c[k - 1]
        if k >= 2:
            t = t + 0.25 * c[k - 2]
        c[k + 2] = t / ((k + 1) * (k + 2))


cdef void _eval(double complex *c, int n, double complex h,
                double complex *y, double complex *yp, double *tail) nogil:
    cdef double complex s = c[n]
    cdef double complex sp = n * c[n]
    cdef int k
    for k in range(n - 1, -1, -1):
        s = s * h + c[k]
    for k in range(n - 1, 0, -1):
        sp = sp * h + k * c[k]
    y[0] = s
    yp[0] = sp
    # last two terms: a single term can vanish by parity at symmetric
    # expansion points
    cdef double ah = cabs(h)
    cdef double t1 = cabs(c[n]) * ah ** n
    cdef double t2 = cabs(c[n - 1]) * ah ** (n - 1)
    tail[0] = t1 if t1 > t2 else t2


cdef inline bint _ok(double complex y, double complex yp,
                     double complex h, double tail) nogil:
    cdef double scale = cabs(y)
    cdef double hs = cabs(h) * cabs(yp)
    if hs > scale:
        scale = hs
    if scale < 1e-300:
        scale = 1e-300
    return tail <= TAIL_TOL * scale


cdef int _step_once(double a, double complex z0, double complex y0,
                    double complex y1, double complex h, int order,
                    double complex *yout, double complex *ypout) nogil:
    """Returns 1 on success, 0 if the tail criterion cannot be met."""
    cdef double complex c[MAX_ORDER]
    cdef double complex y, yp, zc, yc, ypc, hh
    cdef double tail
    cdef int n = order + 1
    cdef int depth, pieces, i
    cdef bint good

    _derivs(a, z0, y0, y1, n, c)
    _eval(c, n, h, &y, &yp, &tail)
    if _ok(y, yp, h, tail):
        yout[0] = y
        ypout[0] = yp
        return 1
    pieces = 1
    yc = y0
    ypc = y1
    for depth in range(MAX_SPLIT_DEPTH):
        pieces *= 2
        hh = h / pieces
        zc = z0
        yc = y0
        ypc = y1
        good = True
        for i in range(pieces):
            _derivs(a, zc, yc, ypc, n, c)
            _eval(c, n, hh, &y, &yp, &tail)
            if not _ok(y, yp, hh, tail):
                good = False
                break
            zc = zc + hh
            yc = y
            ypc = yp
        if good:
            yout[0] = yc
            ypout[0] = ypc
            return 1
    yout[0] = yc
    ypout[0] = ypc
    return 0


def scaled_derivs(double a, double complex z0, double complex y0,
                  double complex y1, int n):
    """Scaled derivatives c_0..c_n at z0 as a Python list."""
    if n + 1 > MAX_ORDER:
        raise ValueError(f"order too large (max {MAX_ORDER - 1})")
    cdef double complex *c = <double complex *> malloc(
        (n + 1) * sizeof(double complex))
    if c == NULL:
        raise MemoryError()
    try:
        _derivs(a, z0, y0, y1, n, c)
        return [c[i] for i in range(n + 1)]
    finally:
        free(c)


def taylor_eval(c, double complex h):
    """Evaluate (y, y', tail) of an expansion given its coefficients."""
    cdef int n = len(c) - 1
    cdef double complex buf[MAX_ORDER]
    cdef double complex y, yp
    cdef double tail
    cdef int i
    if n + 1 > MAX_ORDER:
        raise ValueError(f"order too large (max {MAX_ORDER - 1})")
    for i in range(n + 1):
        buf[i] = c[i]
    _eval(buf, n, h, &y, &yp, &tail)
    return y, yp, tail


def step_once(double a, double complex z0, double complex y0,
              double complex y1, double complex h, int order):
    """One re-expanding step of size h; returns (y, yprime, ok)."""
    cdef double complex y, yp
    cdef int ok
    if order + 2 > MAX_ORDER:
        raise ValueError(f"order too large (max {MAX_ORDER - 2})")
    ok = _step_once(a, z0, y0, y1, h, order, &y, &yp)
    return y, yp, ok != 0


def propagate_polyline(double a, double complex z0, double complex y0,
                       double complex y1, waypoints, int order):
    """Propagate along straight segments; returns (y, yprime, logscale, ok)."""
    cdef double complex zc = z0, yc = y0, ypc = y1
    cdef double complex target, rem, h, y, yp
    cdef double logscale = 0.0, d, hm, m
    cdef int ok
    if order + 2 > MAX_ORDER:
        raise ValueError(f"order too large (max {MAX_ORDER - 2})")
    for target_obj in waypoints:
        target = target_obj
        while True:
            rem = target - zc
            d = cabs(rem)
            if d == 0.0:
                break
            hm = _h_max(a, zc)
            h = rem if d <= hm else rem * (hm / d)
            ok = _step_once(a, zc, yc, ypc, h, order, &y, &yp)
            if not ok:
                return y, yp, logscale, False
            zc = zc + h
            yc = y
            ypc = yp
            m = cabs(yc)
            if cabs(ypc) > m:
                m = cabs(ypc)
            if m > RESCALE_LIMIT:
                logscale += log(m)
                yc = yc / m
                ypc = ypc / m
            if d <= hm:
                break
        zc = target
    return yc, ypc, logscale, True
