"""Complex rectangles with exact rational corners.

A :class:`Box` is the product [re_lo, re_hi] x [im_lo, im_hi].  These are
the certified enclosures attached to algebraic numbers; all comparisons
and arithmetic below are exact, so enclosure statements proved with them
are rigorous.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rationals import QQ, format_rational


@dataclass(frozen=True)
class Box:
    re_lo: object
    re_hi: object
    im_lo: object
    im_hi: object

    def __post_init__(self):
        object.__setattr__(self, "re_lo", QQ(self.re_lo))
        object.__setattr__(self, "re_hi", QQ(self.re_hi))
        object.__setattr__(self, "im_lo", QQ(self.im_lo))
        object.__setattr__(self, "im_hi", QQ(self.im_hi))
        if self.re_lo > self.re_hi or self.im_lo > self.im_hi:
            raise ValueError("inverted box")

    @staticmethod
    def point(re, im=0) -> "Box":
        return Box(re, re, im, im)

    @staticmethod
    def real_interval(lo, hi) -> "Box":
        return Box(lo, hi, 0, 0)

    def width(self):
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def center(self):
        return ((self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2)

    def contains_zero(self) -> bool:
        return (self.re_lo <= 0 <= self.re_hi) and (self.im_lo <= 0 <= self.im_hi)

    def disjoint(self, other: "Box") -> bool:
        return (self.re_hi < other.re_lo or other.re_hi < self.re_lo
                or self.im_hi < other.im_lo or other.im_hi < self.im_lo)

    def overlaps(self, other: "Box") -> bool:
        return not self.disjoint(other)

    def contains_box(self, other: "Box") -> bool:
        return (self.re_lo <= other.re_lo and other.re_hi <= self.re_hi
                and self.im_lo <= other.im_lo and other.im_hi <= self.im_hi)

    def __add__(self, other: "Box") -> "Box":
        return Box(self.re_lo + other.re_lo, self.re_hi + other.re_hi,
                   self.im_lo + other.im_lo, self.im_hi + other.im_hi)

    def __neg__(self) -> "Box":
        return Box(-self.re_hi, -self.re_lo, -self.im_hi, -self.im_lo)

    def __sub__(self, other: "Box") -> "Box":
        return self + (-other)

    def __mul__(self, other: "Box") -> "Box":
        # (a+bi)(c+di) = (ac - bd) + (ad + bc)i, bounded corner-wise
        ac = _interval_mul(self.re_lo, self.re_hi, other.re_lo, other.re_hi)
        bd = _interval_mul(self.im_lo, self.im_hi, other.im_lo, other.im_hi)
        ad = _interval_mul(self.re_lo, self.re_hi, other.im_lo, other.im_hi)
        bc = _interval_mul(self.im_lo, self.im_hi, other.re_lo, other.re_hi)
        return Box(ac[0] - bd[1], ac[1] - bd[0], ad[0] + bc[0], ad[1] + bc[1])

    def scale(self, c) -> "Box":
        c = QQ(c)
        if c >= 0:
            return Box(self.re_lo * c, self.re_hi * c, self.im_lo * c, self.im_hi * c)
        return Box(self.re_hi * c, self.re_lo * c, self.im_hi * c, self.im_lo * c)

    def to_json(self):
        return [format_rational(v) for v in (self.re_lo, self.re_hi, self.im_lo, self.im_hi)]

    def approx_str(self, digits: int = 6) -> str:
        re = float((self.re_lo + self.re_hi) / 2)
        im = float((self.im_lo + self.im_hi) / 2)
        if self.im_lo == 0 == self.im_hi:
            return f"{re:.{digits}g}"
        sign = "+" if im >= 0 else "-"
        return f"{re:.{digits}g}{sign}{abs(im):.{digits}g}i"


def _interval_mul(a_lo, a_hi, b_lo, b_hi):
    prods = (a_lo * b_lo, a_lo * b_hi, a_hi * b_lo, a_hi * b_hi)
    return min(prods), max(prods)


def evaluate_poly_on_box(coeffs, box: Box) -> Box:
    """Horner evaluation of a rational-coefficient polynomial on a box."""
    acc = Box.point(0)
    for c in reversed(list(coeffs)):
        acc = acc * box + Box.point(QQ(c))
    return acc
