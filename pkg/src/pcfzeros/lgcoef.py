"""Exact-rational coefficient polynomials for the Liouville-Green expansions.

Two families of polynomials in the variable b (the scaled LG variable,
written beta-bar elsewhere) are built with `fractions.Fraction`
arithmetic: the base family used for the function expansions and a
tilde family used for the derivative expansions.  Both satisfy an
integro-differential recurrence that keeps every coefficient an exact
rational; floats only appear when a polynomial is evaluated.

A polynomial is stored as a list of Fractions in ascending powers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Poly = list[Fraction]

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [_ZERO] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def poly_scale(p: Poly, c: Fraction) -> Poly:
    return _trim([c * a for a in p])


def poly_diff(p: Poly) -> Poly:
    return _trim([k * p[k] for k in range(1, len(p))])


def poly_antideriv(p: Poly) -> Poly:
    """Antiderivative with zero constant term."""
    return _trim([_ZERO] + [p[k] / (k + 1) for k in range(len(p))])


def poly_eval_exact(p: Poly, x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_integral_from(p: Poly, lower: Fraction) -> Poly:
    """Definite integral of p from `lower` to the variable, as a polynomial."""
    F = poly_antideriv(p)
    return poly_add(F, [-poly_eval_exact(F, lower)])


def eval_poly(p: Poly, x: complex) -> complex:
    """Horner evaluation in double-precision complex arithmetic."""
    acc = 0j
    for c in reversed(p):
        acc = acc * x + float(c)
    return acc


# (b^2 - 1)^2, shared by both recurrences.
_W = [Fraction(1), _ZERO, Fraction(-2), _ZERO, Fraction(1)]


def _sigma(s: int) -> Fraction:
    # lower integration limit: 1 for s odd, 0 for s even
    return Fraction(1) if s % 2 == 1 else _ZERO


def build_E_tables(S: int) -> list[Poly]:
    """Base-family polynomials for s = 1..S.

    Seeds are the printed closed forms for s = 1, 2; higher orders come
    from the recurrence
        E_{s+1} = (1/2) (b^2-1)^2 E_s' + (1/2) Int_{sigma(s)}^{b} (p^2-1)^2
                  sum_{j=1}^{s-1} E_j'(p) E_{s-j}'(p) dp.
    """
    if S < 1:
        raise ValueError("S must be >= 1")
    # E_1 = (5 b^3 - 6 b)/24
    E: list[Poly] = [[_ZERO, Fraction(-1, 4), _ZERO, Fraction(5, 24)]]
    if S >= 2:
        # E_2 = (1/16) (b^2-1)^2 (5 b^2 - 2)
        E.append(poly_scale(poly_mul(_W, [Fraction(-2), _ZERO, Fraction(5)]),
                            Fraction(1, 16)))
    dE = [poly_diff(p) for p in E]
    for s in range(2, S):
        # builds E_{s+1} (index s in the 0-based list)
        term = poly_scale(poly_mul(_W, dE[s - 1]), _HALF)
        conv: Poly = []
        for j in range(1, s):
            conv = poly_add(conv, poly_mul(dE[j - 1], dE[s - j - 1]))
        if conv:
            integrand = poly_mul(_W, conv)
            term = poly_add(term, poly_scale(
                poly_integral_from(integrand, _sigma(s)), _HALF))
        E.append(term)
        dE.append(poly_diff(term))
    return E[:S]


def build_Etilde_tables(S: int) -> list[Poly]:
    """Tilde-family polynomials (derivative expansions) for s = 1..S.

    Same structure as the base family with (1-b^2)^2 weights and
    opposite signs:
        Et_{s+1} = -(1/2) (1-b^2)^2 Et_s' - (1/2) Int_{sigma(s)}^{b}
                   (1-p^2)^2 sum Et_j'(p) Et_{s-j}'(p) dp.
    Note (1-b^2)^2 == (b^2-1)^2.
    """
    if S < 1:
        raise ValueError("S must be >= 1")
    # Et_1 = (7 b^3 - 6 b)/24
    Et: list[Poly] = [[_ZERO, Fraction(-1, 4), _ZERO, Fraction(7, 24)]]
    if S >= 2:
        # Et_2 = (1/16) (1-b^2)^2 (2 - 7 b^2)
        Et.append(poly_scale(poly_mul(_W, [Fraction(2), _ZERO, Fraction(-7)]),
                             Fraction(1, 16)))
    dEt = [poly_diff(p) for p in Et]
    for s in range(2, S):
        term = poly_scale(poly_mul(_W, dEt[s - 1]), -_HALF)
        conv: Poly = []
        for j in range(1, s):
            conv = poly_add(conv, poly_mul(dEt[j - 1], dEt[s - j - 1]))
        if conv:
            integrand = poly_mul(_W, conv)
            term = poly_add(term, poly_scale(
                poly_integral_from(integrand, _sigma(s)), -_HALF))
        Et.append(term)
        dEt.append(poly_diff(term))
    return Et[:S]


@dataclass(frozen=True)
class LGCoeffTables:
    """Immutable coefficient tables up to truncation order S.

    `E[s-1]` / `Etilde[s-1]` hold the order-s polynomials.  Float copies
    of the coefficients and the constant anchors E_s(-1), Et_s(1) are
    precomputed so evaluation never touches Fractions.
    """
    S: int
    E: tuple[tuple[Fraction, ...], ...]
    Etilde: tuple[tuple[Fraction, ...], ...]
    E_float: tuple[tuple[float, ...], ...] = field(repr=False, default=())
    Etilde_float: tuple[tuple[float, ...], ...] = field(repr=False, default=())
    E_at_m1: tuple[float, ...] = ()
    Etilde_at_p1: tuple[float, ...] = ()

    def eval_E(self, s: int, x: complex) -> complex:
        """E_s(x) in double precision, s = 1..S."""
        acc = 0j
        for c in reversed(self.E_float[s - 1]):
            acc = acc * x + c
        return acc

    def eval_Etilde(self, s: int, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.Etilde_float[s - 1]):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=8)
def make_tables(S: int = 12) -> LGCoeffTables:
    E = build_E_tables(S)
    Et = build_Etilde_tables(S)
    return LGCoeffTables(
        S=S,
        E=tuple(tuple(p) for p in E),
        Etilde=tuple(tuple(p) for p in Et),
        E_float=tuple(tuple(float(c) for c in p) for p in E),
        Etilde_float=tuple(tuple(float(c) for c in p) for p in Et),
        E_at_m1=tuple(float(poly_eval_exact(list(p), Fraction(-1))) for p in E),
        Etilde_at_p1=tuple(float(poly_eval_exact(list(p), Fraction(1))) for p in Et),
    )


def dump_tables(tables: LGCoeffTables) -> str:
    """Exact fraction dump, one polynomial per line, ascending powers.

    Format: ``E s : c0/d0 c1/d1 ...`` (and ``Et s : ...``), intended for
    diffing against an external symbolic computation.
    """
    lines = []
    for name, fam in (("E", tables.E), ("Et", tables.Etilde)):
        for s, p in enumerate(fam, start=1):
            coeffs = " ".join(f"{c.numerator}/{c.denominator}" for c in p)
            lines.append(f"{name} {s} : {coeffs}")
    return "\n".join(lines) + "\n"
