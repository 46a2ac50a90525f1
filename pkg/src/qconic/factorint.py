"""Factorization of univariate rational polynomials.

Complete and self-contained through degree four (rational roots are
recovered without factoring any integers, quartics are split over the
rationals via the cubic in p^2 attached to a two-quadratic split of the
depressed form).  Degrees five and up, which never arise from conic
pairs, fall back to sympy.
"""

from __future__ import annotations

from .rationals import QQ, is_square, rational_sqrt_exact
from . import unipoly as up


def factor(p) -> tuple:
    """Factor a nonzero rational polynomial into monic irreducibles.

    Returns ``(unit, [(factor, multiplicity), ...])`` with ``unit`` the
    leading-coefficient content so that p = unit * prod factor^mult.
    Factors are monic and sorted deterministically.
    """
    p = up.from_coeffs(p)
    if up.is_zero(p):
        raise ValueError("cannot factor the zero polynomial")
    unit = p[-1]
    if up.degree(p) == 0:
        return unit, []
    out = []
    for sf, mult in up.squarefree_decomposition(p):
        for piece in _factor_squarefree(sf):
            out.append((piece, mult))
    out.sort(key=lambda fm: (up.degree(fm[0]), [str(c) for c in fm[0]], fm[1]))
    return unit, out


def _factor_squarefree(p):
    """Monic irreducible factors of a monic squarefree polynomial."""
    factors = []
    for r in up.rational_roots(p):
        factors.append(up.from_coeffs([-r, QQ(1)]))
        p = up.divmod_poly(p, factors[-1])[0]
    n = up.degree(p)
    if n <= 0:
        return factors
    if n in (1, 2, 3):
        # no rational roots left: degrees 2 and 3 are now irreducible
        factors.append(up.monic(p))
        return factors
    if n == 4:
        split = _split_quartic(p)
        if split is None:
            factors.append(up.monic(p))
        else:
            factors.extend(split)
        return factors
    factors.extend(_factor_sympy(p))
    return factors


def _split_quartic(p):
    """Split a monic rational-root-free quartic into two monic quadratics
    over the rationals, or return None when it is irreducible.

    After depressing (x -> x - a3/4) a split must look like
    (x^2 + px + q)(x^2 - px + s); p^2 is then a rational root of
    z^3 + 2Bz^2 + (B^2 - 4D)z - C^2 built from the depressed coefficients.
    """
    a3 = p[3]
    shiftv = -a3 / 4
    dep = up.shift(p, shiftv)  # x^4 + B x^2 + C x + D
    B, C, D = dep[2], dep[1], dep[0]
    candidates = []
    if not C:
        # biquadratic: (x^2+q)(x^2+s) with q+s = B, qs = D
        disc = B * B - 4 * D
        if is_square(disc):
            rt = rational_sqrt_exact(disc)
            q, s = (B + rt) / 2, (B - rt) / 2
            candidates.append((QQ(0), q, s))
        # or (x^2+px+q)(x^2-px+q) with q^2 = D, p^2 = 2q - B
        if is_square(D):
            for q in (rational_sqrt_exact(D), -rational_sqrt_exact(D)):
                psq = 2 * q - B
                if psq > 0 and is_square(psq):
                    candidates.append((rational_sqrt_exact(psq), q, q))
    else:
        res = up.from_coeffs([-C * C, B * B - 4 * D, 2 * B, QQ(1)])
        for z in up.rational_roots(res):
            if z > 0 and is_square(z):
                pv = rational_sqrt_exact(z)
                s = (B + z + C / pv) / 2
                q = (B + z - C / pv) / 2
                candidates.append((pv, q, s))
    for pv, q, s in candidates:
        f1 = up.from_coeffs([q, pv, QQ(1)])
        f2 = up.from_coeffs([s, -pv, QQ(1)])
        if up.mul(f1, f2) == dep:
            g1 = up.shift(f1, -shiftv)
            g2 = up.shift(f2, -shiftv)
            return sorted([g1, g2], key=lambda f: [str(c) for c in f])
    return None


def _factor_sympy(p):
    """Backstop for degrees >= 5; conic-pair geometry never reaches this."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x**i
               for i, c in enumerate(p))
    factors = []
    for fac, mult in sympy.factor_list(expr)[1]:
        coeffs = [QQ(int(c.p), int(c.q))
                  for c in reversed(sympy.Poly(fac, x).all_coeffs())]
        factors.extend([up.monic(up.from_coeffs(coeffs))] * mult)
    return factors


def is_irreducible(p) -> bool:
    p = up.from_coeffs(p)
    if up.degree(p) < 1:
        return False
    _, factors = factor(p)
    return len(factors) == 1 and factors[0][1] == 1 and up.degree(factors[0][0]) == up.degree(p)
