from hypothesis import given, strategies as st

from qconic.rationals import QQ
from qconic import unipoly as up


def coeffs(max_deg=5):
    return st.lists(st.integers(min_value=-9, max_value=9),
                    min_size=0, max_size=max_deg + 1)


def as_poly(ints):
    return up.from_coeffs(ints)


@given(coeffs(), coeffs())
def test_mul_degree_and_commutativity(a, b):
    p, q = as_poly(a), as_poly(b)
    assert up.mul(p, q) == up.mul(q, p)
    if not up.is_zero(p) and not up.is_zero(q):
        assert up.degree(up.mul(p, q)) == up.degree(p) + up.degree(q)


@given(coeffs(), coeffs())
def test_divmod_round_trip(a, b):
    p, q = as_poly(a), as_poly(b)
    if up.is_zero(q):
        return
    quo, rem = up.divmod_poly(p, q)
    assert up.add(up.mul(quo, q), rem) == p
    assert up.degree(rem) < up.degree(q)


@given(coeffs(3), coeffs(3), coeffs(2))
def test_gcd_divides_both(a, b, c):
    p, q, m = as_poly(a), as_poly(b), as_poly(c)
    p, q = up.mul(p, m), up.mul(q, m)
    if up.is_zero(p) or up.is_zero(q):
        return
    g = up.gcd(p, q)
    assert up.is_zero(up.rem(p, g))
    assert up.is_zero(up.rem(q, g))
    if up.degree(m) > 0:
        assert up.degree(g) >= up.degree(m)


def test_shift():
    p = up.from_coeffs([0, 0, 1])  # t^2
    assert up.shift(p, 1) == up.from_coeffs([1, 2, 1])  # (t+1)^2
    assert up.evaluate(up.shift(p, QQ(3, 2)), QQ(-3, 2)) == 0


def test_yun_squarefree_decomposition():
    # (t-1)^2 (t^2+1)
    p = up.mul(up.mul(up.from_coeffs([-1, 1]), up.from_coeffs([-1, 1])),
               up.from_coeffs([1, 0, 1]))
    dec = up.squarefree_decomposition(p)
    assert ([(list(f), m) for f, m in dec]
            == [([QQ(1), QQ(0), QQ(1)], 1), ([QQ(-1), QQ(1)], 2)])


def test_resultant_convention():
    # deg(q) rows of p over deg(p) rows of q, descending coefficients
    assert up.resultant(up.from_coeffs([-1, 1]), up.from_coeffs([1, 1])) == 2
    # common factor -> zero
    p = up.mul(up.from_coeffs([1, 1]), up.from_coeffs([2, 1]))
    q = up.mul(up.from_coeffs([1, 1]), up.from_coeffs([5, 1]))
    assert up.resultant(p, q) == 0


@given(coeffs(4))
def test_sturm_isolation_counts_all_real_roots(a):
    p = as_poly(a)
    if up.degree(p) < 1:
        return
    sf = up.squarefree_part(p)
    intervals = up.isolate_real_roots(sf)
    # each interval holds exactly one root; all real roots are covered
    chain = up.sturm_chain(sf)
    bound = up.root_bound(sf)
    assert up.sturm_count(chain, -bound, bound) == len(intervals)
    for lo, hi in intervals:
        if lo == hi:
            assert up.evaluate(sf, lo) == 0
        else:
            assert up.sturm_count(chain, lo, hi) == 1
    # pairwise disjoint (ordering is sorted)
    for (a1, b1), (a2, b2) in zip(intervals, intervals[1:]):
        assert b1 <= a2


def test_rational_roots_without_integer_factoring():
    # 6t^3 - 17t^2 - 4t + 3 = (3t+1)(2t-... ) has roots 3, 1/2? build directly:
    # (t - 3)(2t - 1)(3t + 1) = 6t^3 - 19t^2 + 2t + 3
    p = up.mul(up.mul(up.from_coeffs([-3, 1]), up.from_coeffs([-1, 2])),
               up.from_coeffs([1, 3]))
    roots = up.rational_roots(p)
    assert roots == sorted([QQ(-1, 3), QQ(1, 2), QQ(3)])


def test_root_multiplicity():
    p = up.mul(up.from_coeffs([-1, 1]), up.from_coeffs([-1, 1]))
    assert up.root_multiplicity(p, 1) == 2
    assert up.root_multiplicity(p, 2) == 0
