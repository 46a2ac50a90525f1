import sympy
from hypothesis import given, settings, strategies as st

from qconic.rationals import QQ
from qconic.multipoly import (HomogeneousForm, monomial_basis, monomial_count,
                              resultant, gcd_bivariate, gcd_homogeneous,
                              is_reduced, p_evaluate)
from qconic.errors import NotHomogeneousError


def test_derivative_examples():
    f = HomogeneousForm(2, {(2, 0, 0): 1, (0, 1, 1): 1})  # x^2 + yz
    assert f.derivative(0).terms == {(1, 0, 0): QQ(2)}
    assert f.derivative(2).terms == {(0, 1, 0): QQ(1)}
    assert HomogeneousForm(3, {(3, 0, 0): 1}).derivative(1).is_zero()


def test_monomial_basis():
    assert monomial_basis(0) == [(0, 0, 0)]
    assert len(monomial_basis(1)) == 3
    assert len(monomial_basis(5)) == 21 == monomial_count(5)
    # documented order: x-exponent descending, then y-exponent descending
    assert monomial_basis(2)[:3] == [(2, 0, 0), (1, 1, 0), (1, 0, 1)]
    for t in range(7):
        b = monomial_basis(t)
        assert len(set(b)) == len(b) == (t + 1) * (t + 2) // 2
        assert all(sum(m) == t for m in b)


def test_homogeneity_enforced():
    try:
        HomogeneousForm.from_dict({(1, 0, 0): QQ(1), (2, 0, 0): QQ(1)})
    except NotHomogeneousError:
        pass
    else:
        raise AssertionError("mixed degrees must be rejected")


def _sympy_resultant(p, q, var):
    xs = sympy.symbols("x y z")
    def to_expr(d):
        return sum(sympy.Rational(int(QQ(c).numerator), int(QQ(c).denominator))
                   * xs[0]**m[0] * xs[1]**m[1] * xs[2]**m[2]
                   for m, c in d.items())
    res = sympy.resultant(to_expr(p), to_expr(q), xs[var])
    poly = sympy.Poly(res, *xs)
    return {m: QQ(int(c.p), int(c.q))
            for m, c in zip(poly.monoms(), poly.coeffs()) if c}


def test_resultant_spec_examples():
    p1 = {(2, 0, 0): QQ(1), (0, 2, 0): QQ(1), (0, 0, 2): QQ(-1)}
    p2 = {(2, 0, 0): QQ(1), (0, 2, 0): QQ(2), (0, 0, 2): QQ(-1)}
    assert resultant(p1, p2, 0) == {(0, 4, 0): QQ(1)}          # y^4
    p3 = {(2, 0, 0): QQ(1), (0, 1, 0): QQ(-1)}
    p4 = {(1, 0, 0): QQ(1), (0, 1, 0): QQ(-1)}
    assert resultant(p3, p4, 0) == {(0, 2, 0): QQ(1), (0, 1, 0): QQ(-1)}
    p5 = {(1, 0, 0): QQ(1), (0, 0, 0): QQ(-1)}
    p6 = {(1, 0, 0): QQ(1), (0, 0, 0): QQ(1)}
    assert resultant(p5, p6, 0) == {(0, 0, 0): QQ(2)}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_resultant_matches_sympy(data):
    def poly(draw):
        terms = {}
        for _ in range(draw(st.integers(min_value=1, max_value=4))):
            m = tuple(draw(st.integers(min_value=0, max_value=2)) for _ in range(3))
            terms[m] = QQ(draw(st.integers(min_value=-4, max_value=4)))
        return {m: c for m, c in terms.items() if c}
    p = poly(data.draw)
    q = poly(data.draw)
    var = data.draw(st.integers(min_value=0, max_value=2))
    if not p or not q or all(m[var] == 0 for m in p) or all(m[var] == 0 for m in q):
        return
    assert resultant(p, q, var) == _sympy_resultant(p, q, var)


def test_resultant_vanishes_exactly_on_projections():
    # p, q share the point (x, y) = (2, 3) in the z = 1 chart
    p = {(1, 0, 0): QQ(1), (0, 1, 0): QQ(1), (0, 0, 1): QQ(-5)}   # x + y - 5z
    q = {(2, 0, 0): QQ(1), (0, 1, 0): QQ(-1), (0, 0, 1): QQ(-1)}  # x^2 - y - z
    r = resultant(p, q, 0)
    assert p_evaluate(r, (QQ(0), QQ(3), QQ(1))) == 0
    assert p_evaluate(r, (QQ(0), QQ(4), QQ(1))) != 0


def test_gcd_and_reducedness():
    x2_yz = HomogeneousForm(2, {(2, 0, 0): 1, (0, 1, 1): -1})
    other = HomogeneousForm(2, {(2, 0, 0): 1, (0, 1, 1): 1})
    square = x2_yz.mul(x2_yz)
    assert not is_reduced(square)
    assert is_reduced(x2_yz.mul(other))
    g = gcd_homogeneous(square, square.mul(other))
    assert g.degree == 4  # (x^2 - yz)^2
    # bivariate gcd via (x^2 - y^2, x - y)
    a = {(2, 0): QQ(1), (0, 2): QQ(-1)}
    b = {(1, 0): QQ(1), (0, 1): QQ(-1)}
    g2 = gcd_bivariate(a, b)
    assert sorted(g2) == [(0, 1), (1, 0)] and g2[(0, 1)] == -g2[(1, 0)]


def test_reducedness_z_factors():
    z2x = HomogeneousForm(3, {(1, 0, 2): 1})  # x z^2
    assert not is_reduced(z2x)
    zx = HomogeneousForm(2, {(1, 0, 1): 1})   # x z
    assert is_reduced(zx)


def test_transform_is_substitution():
    f = HomogeneousForm(2, {(2, 0, 0): 1})     # x^2
    T = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]      # x -> x + y
    g = f.transform(T)
    assert g.terms == {(2, 0, 0): QQ(1), (1, 1, 0): QQ(2), (0, 2, 0): QQ(1)}


def test_evaluate():
    f = HomogeneousForm(2, {(1, 1, 0): QQ(3)})
    assert f.evaluate((QQ(2), QQ(5), QQ(0))) == 30
