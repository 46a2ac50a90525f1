import pytest

from qconic.multipoly import HomogeneousForm
from qconic.arrangement import ArrangementPolynomial, defining_polynomial
from qconic.freeness import (mdr, global_tjurina, tjurina_from_combinatorics,
                             du_plessis_wall, dpw_value, freeness_report)
from qconic.singular import analyze_singular_points
from qconic.combinatorics import WeakCombinatorics
from qconic.errors import NotReducedError, NonIsolatedError, QConicError


def _curve(terms, degree=None):
    form = (HomogeneousForm(degree, terms) if degree is not None
            else HomogeneousForm.from_dict(terms))
    return ArrangementPolynomial(form)


def test_mdr_sphere():
    f = _curve({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    w = mdr(f)
    assert w.degree == 1
    assert w.verify(f.form)
    assert any(not g.is_zero() for g in w.triple)


def test_mdr_triangle():
    f = _curve({(1, 1, 1): 1})
    w = mdr(f)
    assert w.degree == 1
    assert w.verify(f.form)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_mdr_fermat(d):
    f = _curve({(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1})
    assert mdr(f).degree == d - 1


def test_mdr_rejects_non_reduced():
    sq = HomogeneousForm(2, {(2, 0, 0): 1, (0, 1, 1): -1})
    with pytest.raises(NotReducedError):
        mdr(ArrangementPolynomial(sq.mul(sq)))


def test_global_tjurina_examples(generic_pair, tangent_pair, pencil3):
    assert global_tjurina(defining_polynomial(generic_pair)) == 4
    assert global_tjurina(defining_polynomial(tangent_pair)) == 6
    assert global_tjurina(defining_polynomial(pencil3)) == 16


def test_global_tjurina_smooth_curves():
    assert global_tjurina(_curve({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})) == 0
    assert global_tjurina(_curve({(1, 1, 1): 1})) == 3


def test_global_tjurina_matches_local_sum(q_fixtures):
    for arr in q_fixtures.values():
        local = sum(r.orbit_size * r.tjurina for r in analyze_singular_points(arr))
        assert global_tjurina(defining_polynomial(arr)) == local


def test_global_tjurina_non_isolated_cap(monkeypatch):
    # a squared conic has a whole curve of singular points: with the
    # reducedness guard bypassed the dimensions grow forever and the hard
    # cap must fire
    from qconic import freeness as fr
    sq = HomogeneousForm(2, {(2, 0, 0): 1, (0, 1, 1): -1})
    form = sq.mul(sq)
    d = form.degree
    values = [fr._tjurina_at(form, t) for t in range(3 * (d - 2), 2 * d)]
    assert all(b > a for a, b in zip(values, values[1:]))  # strictly growing
    with pytest.raises(NotReducedError):
        global_tjurina(ArrangementPolynomial(form))
    monkeypatch.setattr(fr, "is_reduced", lambda _form: True)
    with pytest.raises(NonIsolatedError):
        fr.global_tjurina(ArrangementPolynomial(form))


def test_tjurina_from_combinatorics():
    assert tjurina_from_combinatorics(WeakCombinatorics(2, 4, 0, 0, 0)) == 4
    assert tjurina_from_combinatorics(WeakCombinatorics(3, 0, 0, 4, 0)) == 16
    assert tjurina_from_combinatorics(WeakCombinatorics(5, 1, 1, 1, 1)) == 17
    with pytest.raises(QConicError):
        tjurina_from_combinatorics(WeakCombinatorics(2, 4, 0, 0, 0, other_count=1))


def test_du_plessis_wall_branches():
    # threshold first: r = 2 > (4-1)/2, so never free regardless of the
    # criterion value (which happens to be 7 = 4 - 6 + 9 here)
    v = du_plessis_wall(4, 2, 7)
    assert not v.free and v.reason == "mdr_above_threshold"
    assert dpw_value(4, 2) == 7
    v = du_plessis_wall(4, 2, 4)
    assert not v.free
    v = du_plessis_wall(6, 3, 10)
    assert not v.free and v.reason == "mdr_above_threshold"
    # genuine free example: triangle xyz has d=3, r=1, tau=3 = 1 - 2 + 4
    v = du_plessis_wall(3, 1, 3)
    assert v.free and v.reason == "criterion_met"
    v = du_plessis_wall(4, 1, 7)
    assert v.free


def test_freeness_report_fixtures(q_fixtures):
    expected_tau = {"generic_pair": 4, "tangent_pair": 6,
                    "pencil3": 16, "pencil4": 36}
    for name, arr in q_fixtures.items():
        rep = freeness_report(defining_polynomial(arr))
        assert rep.tau == expected_tau[name], name
        assert not rep.verdict.free, name
        assert rep.witness.verify(defining_polynomial(arr).form)
        assert len(set(rep.tau_sources.values())) == 1
        assert {"local_sum", "combinatorial", "hilbert"} <= set(rep.tau_sources)


def test_freeness_report_triangle_is_free():
    rep = freeness_report(_curve({(1, 1, 1): 1}))
    assert rep.verdict.free
    assert (rep.degree, rep.mdr, rep.tau, rep.dpw_value) == (3, 1, 3, 3)


def test_freeness_report_smooth_conic():
    rep = freeness_report(_curve({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}))
    assert rep.tau == 0 and rep.mdr == 1
    assert not rep.verdict.free
    assert rep.verdict.reason == "mdr_above_threshold"


def test_mdr_and_tau_projective_invariance(pencil3):
    T = [[2, 1, 0], [1, 1, 1], [0, 3, 1]]
    f0 = defining_polynomial(pencil3)
    f1 = ArrangementPolynomial(f0.form.transform(T))
    assert mdr(f0).degree == mdr(f1).degree
    assert global_tjurina(f0) == global_tjurina(f1)
