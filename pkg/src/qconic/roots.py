"""Certified isolation of all complex roots of a squarefree rational polynomial.

Real roots are isolated by Sturm-count interval bisection, entirely in
rational arithmetic.  Non-real roots are located numerically (mpmath) and
then *certified* exactly: around an approximation c we form the disc of
radius n*|p(c)/p'(c)|, which provably contains at least one root; when the
n enclosing squares are pairwise disjoint, the pigeonhole principle pins
exactly one root per box, and the real boxes account for every real root,
so each disc box holds exactly one non-real root.  Every certificate is a
rational comparison; floating point only proposes candidates.
"""

from __future__ import annotations

import mpmath

from .rationals import QQ, sqrt_upper
from .intervals import Box
from . import unipoly as up


# ---------------------------------------------------- exact complex rationals

def _cx_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cx_abs2(a):
    return a[0] * a[0] + a[1] * a[1]


def _cx_div(a, b):
    d = _cx_abs2(b)
    if not d:
        raise ZeroDivisionError
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _cx_eval(p, c):
    acc = (QQ(0), QQ(0))
    for coeff in reversed(p):
        acc = _cx_mul(acc, c)
        acc = (acc[0] + coeff, acc[1])
    return acc


def _nearest_root_radius(p, dp, n, c):
    """Rational r >= n*|p(c)/p'(c)|; the disc around c of that radius
    contains at least one root of p.  None when p'(c) = 0."""
    num = _cx_abs2(_cx_eval(p, c))
    den = _cx_abs2(_cx_eval(dp, c))
    if not den:
        return None
    if not num:
        return QQ(0)
    return n * sqrt_upper(num / den)


def _round_dyadic(x, prec_bits):
    scale = 1 << prec_bits
    return QQ(round(QQ(x) * scale), scale)


# --------------------------------------------------------------- isolation

def isolate_all_roots(p) -> list[Box]:
    """Pairwise-disjoint certified boxes, one per distinct root of squarefree p.

    Order: real roots ascending, then non-real roots by (re_lo, im_lo).
    The order is deterministic for a given polynomial.
    """
    p = up.from_coeffs(p)
    n = up.degree(p)
    if n < 1:
        return []
    if up.degree(up.gcd(p, up.derivative(p))) > 0:
        raise ValueError("polynomial must be squarefree")

    chain = up.sturm_chain(p)
    real_intervals = _separate(p, chain, up.isolate_real_roots(p))
    tight = []
    for lo, hi in real_intervals:
        while hi - lo > QQ(1, 16):
            lo, hi = up.refine_root_interval(p, lo, hi, chain)
        tight.append((lo, hi))
    real_intervals = tight
    n_complex = n - len(real_intervals)

    real_boxes = [Box.real_interval(lo, hi) for lo, hi in real_intervals]
    if n_complex == 0:
        return real_boxes

    dp = up.derivative(p)
    for dps in (40, 80, 160, 320, 640):
        candidates = _approximate_roots(p, dps)
        if candidates is None:
            continue
        # non-real candidates: largest |Im| first; exact certification below
        candidates.sort(key=lambda c: -abs(c[1]))
        discs = []
        for c in candidates[:n_complex]:
            r = _nearest_root_radius(p, dp, n, c)
            if r is None:
                discs = None
                break
            discs.append(Box(c[0] - r, c[0] + r, c[1] - r, c[1] + r))
        if discs is None:
            continue
        if any(b.im_lo <= 0 <= b.im_hi for b in discs):
            continue  # must be certifiably non-real
        boxes = _tighten_real(p, chain, real_intervals, discs)
        if boxes is None:
            continue
        all_boxes = boxes + sorted(discs, key=lambda b: (b.re_lo, b.im_lo))
        if _pairwise_disjoint(all_boxes):
            return all_boxes
    raise RuntimeError("root isolation did not certify; increase precision ladder")


def _approximate_roots(p, dps):
    """Numeric root candidates as exact dyadic rationals (re, im) pairs."""
    prec_bits = max(32, (10 * dps) // 4)
    scale = 1 << prec_bits
    half = mpmath.mpf("0.5")
    try:
        with mpmath.workdps(dps):
            coeffs = [mpmath.mpf(int(c.numerator)) / mpmath.mpf(int(c.denominator))
                      for c in reversed(p)]
            raw = mpmath.polyroots(coeffs, maxsteps=400, extraprec=120)
            out = []
            for z in raw:
                z = mpmath.mpc(z)
                out.append((QQ(int(mpmath.floor(z.real * scale + half)), scale),
                            QQ(int(mpmath.floor(z.imag * scale + half)), scale)))
            return out
    except (mpmath.libmp.NoConvergence, ValueError):
        return None


def _separate(p, chain, intervals):
    """Refine sorted isolating intervals until pairwise strictly disjoint
    as closed sets (adjacent Sturm intervals may share an endpoint)."""
    ivs = [list(iv) for iv in intervals]
    for a, b in zip(ivs, ivs[1:]):
        guard = 0
        while a[1] >= b[0]:
            a[0], a[1] = up.refine_root_interval(p, a[0], a[1], chain)
            b[0], b[1] = up.refine_root_interval(p, b[0], b[1], chain)
            guard += 1
            if guard > 10000:  # pragma: no cover
                raise RuntimeError("failed to separate real roots")
    return [tuple(iv) for iv in ivs]


def _tighten_real(p, chain, real_intervals, discs):
    """Shrink real isolating intervals until disjoint from every disc box."""
    out = []
    for lo, hi in real_intervals:
        box = Box.real_interval(lo, hi)
        guard = 0
        while any(not box.disjoint(d) for d in discs):
            if lo == hi or guard > 4000:
                return None  # a disc sits on a real root: precision too low
            lo, hi = up.refine_root_interval(p, lo, hi, chain)
            box = Box.real_interval(lo, hi)
            guard += 1
        out.append(box)
    return out


def _pairwise_disjoint(boxes) -> bool:
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if not boxes[i].disjoint(boxes[j]):
                return False
    return True


# --------------------------------------------------------------- refinement

def refine_box(p, box: Box, chain=None) -> Box:
    """Return a strictly smaller certified box for the same root of p.

    Real boxes refine by Sturm bisection; complex ones by an exact Newton
    step from a dyadically rounded center, accepted only when the new disc
    box is contained in the old one (which certifies the same root).
    """
    p = up.from_coeffs(p)
    n = up.degree(p)
    dp = up.derivative(p)
    if box.im_lo == 0 == box.im_hi:
        if chain is None:
            chain = up.sturm_chain(p)
        lo, hi = up.refine_root_interval(p, box.re_lo, box.re_hi, chain)
        return Box.real_interval(lo, hi)

    target = box.width() / 2
    prec = max(16, _width_bits(box) + 8)
    c = box.center()
    for _ in range(60):
        c = (_round_dyadic(c[0], prec), _round_dyadic(c[1], prec))
        try:
            fc = _cx_eval(p, c)
            dfc = _cx_eval(dp, c)
            step = _cx_div(fc, dfc)
            c = (c[0] - step[0], c[1] - step[1])
        except ZeroDivisionError:
            prec *= 2
            c = box.center()
            continue
        r = _nearest_root_radius(p, dp, n, c)
        if r is not None:
            cand = Box(c[0] - r, c[0] + r, c[1] - r, c[1] + r)
            touches_axis = cand.im_lo <= 0 <= cand.im_hi
            if box.contains_box(cand) and cand.width() <= target and not touches_axis:
                return cand
        prec *= 2
    raise RuntimeError("complex box refinement stalled")


def _width_bits(box: Box) -> int:
    w = box.width()
    if not w:
        return 64
    bits = 0
    while QQ(1, 1 << bits) > w and bits < 4096:
        bits += 1
    return bits + 4
