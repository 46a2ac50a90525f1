import itertools

import pytest
from hypothesis import given, strategies as st

from qconic.rationals import QQ
from qconic.arrangement import (Conic, validate_arrangement,
                                arrangement_violations, defining_polynomial,
                                pencil_members, arrangement_to_document,
                                arrangement_from_document)
from qconic.errors import (ValidationError, SingularMember, DuplicateMembers,
                           TooFewMembers, SingularPencilMember, ParseError)

UNIT_CIRCLE = Conic((1, 1, -1, 0, 0, 0))


def test_validate_accepts_good_pair():
    arr = validate_arrangement([Conic((1, 1, -1, 0, 0, 0)),
                                Conic((1, 2, -1, 0, 0, 0))])
    assert arr.k == 2
    # determinants -1 and -2 by the 3x3 formula
    assert arr.conics[0].determinant() == -1
    assert arr.conics[1].determinant() == -2


def test_validate_rejects_singular_member():
    # x^2 - z^2 is a line pair: det of diag(1, 0, -1) is 0
    with pytest.raises(ValidationError) as err:
        validate_arrangement([Conic((1, 0, -1, 0, 0, 0)),
                              Conic((0, 1, -1, 0, 0, 0))])
    kinds = err.value.violations
    assert SingularMember(0) in kinds


def test_validate_rejects_proportional_pair():
    with pytest.raises(ValidationError) as err:
        validate_arrangement([Conic((1, 1, -1, 0, 0, 0)),
                              Conic((2, 2, -2, 0, 0, 0))])
    assert DuplicateMembers(0, 1) in err.value.violations


def test_validate_rejects_too_few():
    violations = arrangement_violations([UNIT_CIRCLE])
    assert TooFewMembers(1) in violations


def test_validation_order_independent():
    conics = [Conic((1, 1, -1, 0, 0, 0)), Conic((1, 0, -1, 0, 0, 0)),
              Conic((1, 2, -1, 0, 0, 0))]
    verdicts = set()
    for perm in itertools.permutations(conics):
        verdicts.add(bool(arrangement_violations(list(perm))))
    assert verdicts == {True}  # always rejected (singular member), any order


def test_defining_polynomial_examples():
    # {x^2 - yz, x^2 + yz} -> x^4 - y^2 z^2
    arr = validate_arrangement([Conic((1, 0, 0, 0, 0, -1)),
                                Conic((1, 0, 0, 0, 0, 1))])
    f = defining_polynomial(arr).form
    assert f.degree == 4
    assert f.terms == {(4, 0, 0): QQ(1), (0, 2, 2): QQ(-1)}

    arr2 = validate_arrangement([Conic((1, 1, -1, 0, 0, 0)),
                                 Conic((1, 2, -1, 0, 0, 0))])
    f2 = defining_polynomial(arr2).form
    assert f2.degree == 4
    assert f2.evaluate((QQ(1), QQ(0), QQ(1))) == 0


@given(st.fractions(max_denominator=40))
def test_product_vanishes_on_members(t):
    # rational parametrization of the unit circle: (1-t^2, 2t, 1+t^2)
    tt = QQ(t.numerator, t.denominator)
    point = (1 - tt * tt, 2 * tt, 1 + tt * tt)
    arr = validate_arrangement([UNIT_CIRCLE, Conic((1, 2, -1, 0, 0, 0))])
    assert defining_polynomial(arr).form.evaluate(point) == 0


def test_pencil_members_example():
    g1 = Conic((1, 1, -2, 0, 0, 0))
    g2 = Conic((1, -1, 0, 0, 0, 0))
    arr = pencil_members(g1, g2, [0, 2, 3])
    assert arr.k == 3
    # member determinant is -2(1+t)(1-t)
    for conic, t in zip(arr.conics, (QQ(0), QQ(2), QQ(3))):
        assert conic.determinant() == -2 * (1 + t) * (1 - t)
    arr4 = pencil_members(g1, g2, [0, 2, 3, 4])
    assert arr4.k == 4


def test_pencil_rejects_singular_parameter():
    g1 = Conic((1, 1, -2, 0, 0, 0))
    g2 = Conic((1, -1, 0, 0, 0, 0))
    with pytest.raises(ValidationError) as err:
        pencil_members(g1, g2, [0, 1])
    assert SingularPencilMember(QQ(1)) in err.value.violations


def test_document_round_trip(tmp_path):
    arr = validate_arrangement([UNIT_CIRCLE, Conic((1, 2, -1, 0, 0, 0))])
    doc = arrangement_to_document(arr)
    back = arrangement_from_document(doc)
    assert back == arr
    assert arrangement_to_document(back) == doc  # byte-stable


def test_document_parse_errors():
    with pytest.raises(ParseError):
        arrangement_from_document("not json")
    with pytest.raises(ParseError):
        arrangement_from_document('{"conics": [{"coeffs": ["1", "2"]}]}')
    with pytest.raises(ParseError):
        arrangement_from_document('{"nope": []}')


def test_transform_preserves_smoothness():
    T = [[1, 2, 0], [0, 1, 1], [1, 0, 1]]
    c = UNIT_CIRCLE.transform(T)
    assert c.is_smooth()
    # transform is substitution: value at w equals original at T w
    w = (QQ(3), QQ(-2), QQ(1))
    tw = tuple(sum(QQ(T[i][j]) * w[j] for j in range(3)) for i in range(3))
    assert c.evaluate(w) == UNIT_CIRCLE.evaluate(tw)
