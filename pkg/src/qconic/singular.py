"""Singular locus of a conic arrangement.

Since every member is smooth, the singular points of the product curve are
exactly the pairwise intersection points.  For each pair the two conics
are moved by a small integer projective change of coordinates until the
projection from (0:1:0) is generic for them:

  * both transformed conics have a nonzero y^2 coefficient (the center
    lies on neither conic),
  * the y-resultant, a binary quartic in (x, z), is not divisible by z
    (no intersection on the moved line at infinity),
  * over every root of the resultant the two restricted conics have a
    gcd of degree exactly one (one geometric point per fiber).

Under those checks the resultant factors as the product of (x - xi*z)
to the local intersection multiplicity, each irreducible factor generates
the exact field of definition of its fiber point, and back-substitution
recovers the point with coordinates in that field.  Points are merged
across pairs by a canonical orbit key: the minimal polynomial of
gamma = X + c*Y (first shift c making gamma a primitive element) together
with the expressions of the normalized coordinates as polynomials in
gamma.  The key is intrinsic to the Galois orbit, so equality of orbits
is a purely symbolic comparison; no floating point is involved anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .rationals import QQ
from .errors import PointNotOnBothError, QConicError
from . import unipoly as up
from .factorint import factor
from .multipoly import resultant
from .numberfield import (RATIONAL_FIELD, NumberField, FieldElement,
                          field_for_root, characteristic_polynomial,
                          express_in_powers, gpoly_gcd_monic)
from .arrangement import Conic, ConicArrangement, defining_polynomial
from .localalg import (local_milnor_number, local_tjurina_number,
                       truncated_quotient_dimension, local_affine_at)
from .combinatorics import WeakCombinatorics

_GAMMA_SHIFTS = (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6)
_MAX_FRAME_ATTEMPTS = 64


# ------------------------------------------------------------------- types

@dataclass(frozen=True)
class SingularityType:
    """Classification of one singular point of the arrangement curve."""

    name: str                 # node | tacnode | ordinary_triple | ordinary_quadruple | other
    branches: int             # number of incident members (= multiplicity of the point)
    max_pair_multiplicity: int
    distinct_tangents: int

    @property
    def is_q_type(self) -> bool:
        return self.name in ("node", "tacnode", "ordinary_triple",
                             "ordinary_quadruple")

    def to_json(self):
        return {"name": self.name, "branches": self.branches,
                "max_pair_multiplicity": self.max_pair_multiplicity,
                "distinct_tangents": self.distinct_tangents}


#: expected (milnor, tjurina) for the four quasi-homogeneous types
Q_TYPE_INVARIANTS = {
    "node": (1, 1),
    "tacnode": (3, 3),
    "ordinary_triple": (4, 4),
    "ordinary_quadruple": (9, 9),
}


@dataclass(frozen=True)
class SingularPointRecord:
    """One Galois orbit of singular points with all computed invariants."""

    key: tuple
    field: NumberField
    point: tuple                      # normalized: last nonzero coordinate is 1
    orbit_size: int
    incident_conics: frozenset
    pairwise_multiplicities: dict     # (i, j) -> local intersection multiplicity
    tangent_partition: tuple          # groups of member indices sharing a tangent
    kind: SingularityType | None = None
    milnor: int | None = None
    tjurina: int | None = None
    quasi_homogeneous: bool | None = None

    @property
    def multiplicity(self) -> int:
        return len(self.incident_conics)

    def approx_point(self, digits: int = 6):
        return [c.enclosure(QQ(1, 10 ** (digits + 2))).approx_str(digits)
                for c in self.point]

    def to_json(self):
        out = {
            "field": self.field.to_json(),
            "point": [c.to_json() for c in self.point],
            "point_approx_display_only": self.approx_point(),
            "orbit_size": self.orbit_size,
            "incident_conics": sorted(self.incident_conics),
            "pairwise_multiplicities": {
                f"{i},{j}": m
                for (i, j), m in sorted(self.pairwise_multiplicities.items())},
            "tangent_partition": [list(g) for g in self.tangent_partition],
        }
        if self.kind is not None:
            out["type"] = self.kind.to_json()
            out["milnor"] = self.milnor
            out["tjurina"] = self.tjurina
            out["quasi_homogeneous"] = self.quasi_homogeneous
        return out


# -------------------------------------------------------- frame candidates

def _frame_candidates():
    yield [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for attempt in range(1, _MAX_FRAME_ATTEMPTS):
        rng = random.Random(7919 * attempt)
        while True:
            m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                   - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                   + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            if det:
                yield m
                break


# ------------------------------------------------------- pair intersections

def conic_pair_intersections(c1: Conic, c2: Conic):
    """Intersection orbits of two distinct smooth conics.

    Returns a list of (key, field, normalized_coords, orbit_size, mult);
    the per-pair multiplicities times orbit sizes always sum to 4.
    """
    for frame in _frame_candidates():
        result = _try_frame(c1, c2, frame)
        if result is not None:
            total = sum(orbit * mult for _, _, _, orbit, mult in result)
            if total != 4:
                raise QConicError(
                    f"pair multiplicities sum to {total}, expected 4")
            return result
    raise QConicError("no generic frame found for conic pair")


def _try_frame(c1: Conic, c2: Conic, frame):
    d1, d2 = c1.transform(frame), c2.transform(frame)
    if not d1.coefficients[1] or not d2.coefficients[1]:
        return None  # projection center lies on a conic
    res = resultant(_conic_dict(d1), _conic_dict(d2), 1)
    if not res:
        return None
    quartic = [QQ(0)] * 5
    for (i, _, l), c in res.items():
        quartic[i] = c
    u = up.strip(list(quartic))
    if up.degree(u) != 4:
        return None  # an intersection point sits on the moved line z = 0
    out = []
    for q, mult in factor(u)[1]:
        hit = _fiber_point(d1, d2, q)
        if hit is None:
            return None
        field, coords_new = hit
        coords = _apply_frame(frame, coords_new)
        key, rec_field, rec_coords, orbit = _orbit_canonical(field, coords)
        out.append((key, rec_field, rec_coords, orbit, mult))
    return out


def _conic_dict(c: Conic):
    a, b, cc, d, e, f = c.coefficients
    terms = {(2, 0, 0): a, (0, 2, 0): b, (0, 0, 2): cc,
             (1, 1, 0): d, (1, 0, 1): e, (0, 1, 1): f}
    return {m: v for m, v in terms.items() if v}


def _fiber_point(d1: Conic, d2: Conic, q):
    """The unique point of {d1 = d2 = 0} on the fiber x = xi*z, z = 1, where
    xi is a root of the irreducible factor q; None if the fiber is not
    simple (caller picks a new frame)."""
    if up.degree(q) == 1:
        field = RATIONAL_FIELD
        xi = field.rational(-q[0])
    else:
        field = field_for_root(tuple(q), 0)
        xi = field.generator()
    g1 = _restrict_to_fiber(d1, xi, field)
    g2 = _restrict_to_fiber(d2, xi, field)
    g = gpoly_gcd_monic(g1, g2)
    if len(g) != 2:
        return None  # zero, two points, or a double point on this fiber
    eta = -g[0]
    one = field.one()
    return field, (xi, eta, one)


def _restrict_to_fiber(c: Conic, xi: FieldElement, field: NumberField):
    a, b, cc, d, e, f = (field.rational(v) for v in c.coefficients)
    return [a * xi * xi + e * xi + cc, d * xi + f, b]


def _apply_frame(frame, coords):
    return tuple(coords[0] * frame[i][0] + coords[1] * frame[i][1]
                 + coords[2] * frame[i][2] for i in range(3))


# --------------------------------------------------------- canonical orbits

def _orbit_canonical(field: NumberField, coords):
    """Normalize a point and build the canonical key of its Galois orbit.

    The key is (chart, shift, min_poly(gamma), X as poly in gamma, Y as
    poly in gamma) for gamma = X + shift*Y, the first shift in a fixed
    list making gamma primitive.  Identical orbits found through any pair
    or frame produce identical keys.
    """
    chart = max(i for i in range(3) if coords[i])
    inv = coords[chart].inverse()
    norm = tuple(c * inv for c in coords)
    if chart == 0:
        one, zero = RATIONAL_FIELD.one(), RATIONAL_FIELD.zero()
        key = (0, 0, (QQ(0), QQ(1)), (), ())
        return key, RATIONAL_FIELD, (one, zero, zero), 1

    affine = [norm[0]] if chart == 1 else [norm[0], norm[1]]
    shifts = (0,) if len(affine) == 1 else _GAMMA_SHIFTS
    for c in shifts:
        gamma = affine[0] if len(affine) == 1 else affine[0] + affine[1] * c
        chi = characteristic_polynomial(gamma)
        if up.degree(up.gcd(chi, up.derivative(chi))) != 0:
            continue
        mu = tuple(chi)
        n = len(mu) - 1
        if n == 1:
            rec_field = RATIONAL_FIELD
            reps = [(a.rational_value(),) for a in affine]
        else:
            rec_field = field_for_root(mu, 0)
            reps = [tuple(r) for r in express_in_powers(gamma, affine)]
        u = reps[0]
        v = reps[1] if len(reps) > 1 else ()
        key = (chart, c, mu, u, v)
        if chart == 1:
            point = (rec_field.element(u), rec_field.one(), rec_field.zero())
        else:
            point = (rec_field.element(u), rec_field.element(v), rec_field.one())
        return key, rec_field, point, n
    raise QConicError("no primitive-element shift worked for an orbit")


# ------------------------------------------------------------ record build

def locate_singular_points(arr: ConicArrangement) -> list:
    """All singular points of the arrangement curve, one record per Galois
    orbit, with incidence, pairwise multiplicities and tangent patterns
    filled in; classification and local invariants are filled by
    :func:`analyze_singular_points`."""
    merged: dict = {}
    for i, j in arr.pairs():
        for key, field, point, orbit, mult in conic_pair_intersections(
                arr.conics[i], arr.conics[j]):
            entry = merged.setdefault(
                key, {"field": field, "point": point, "orbit": orbit,
                      "incident": set(), "mults": {}})
            entry["incident"].update((i, j))
            entry["mults"][(i, j)] = mult
    records = []
    for key in sorted(merged):
        e = merged[key]
        _check_incidence(arr, e["point"], e["incident"])
        records.append(SingularPointRecord(
            key=key,
            field=e["field"],
            point=e["point"],
            orbit_size=e["orbit"],
            incident_conics=frozenset(e["incident"]),
            pairwise_multiplicities=dict(sorted(e["mults"].items())),
            tangent_partition=_tangent_partition(arr, e["point"], e["incident"]),
        ))
    return records


def _check_incidence(arr: ConicArrangement, point, incident):
    for m, conic in enumerate(arr.conics):
        on_curve = not conic.evaluate(point)
        if on_curve != (m in incident):
            raise QConicError("incidence bookkeeping mismatch at a point")


def _tangent_partition(arr: ConicArrangement, point, incident):
    """Group incident members by equal (projectively proportional) tangent
    lines; the gradient of a smooth conic at a point of it never vanishes."""
    groups = []
    for m in sorted(incident):
        grad = arr.conics[m].gradient(point)
        placed = False
        for group, rep in groups:
            if _proportional(grad, rep):
                group.append(m)
                placed = True
                break
        if not placed:
            groups.append(([m], grad))
    return tuple(tuple(g) for g, _ in groups)


def _proportional(a, b) -> bool:
    return (a[0] * b[1] == a[1] * b[0]
            and a[0] * b[2] == a[2] * b[0]
            and a[1] * b[2] == a[2] * b[1])


def classify_point(record: SingularPointRecord) -> SingularityType:
    """Node / tacnode / ordinary triple / ordinary quadruple / other, from
    incidence count, pairwise multiplicities and the tangent pattern."""
    m = record.multiplicity
    mults = record.pairwise_multiplicities
    max_mult = max(mults.values())
    tangents = len(record.tangent_partition)
    ordinary = max_mult == 1 and tangents == m
    name = "other"
    if m == 2:
        if max_mult == 1:
            name = "node"
        elif max_mult == 2 and tangents == 1:
            name = "tacnode"
    elif m == 3 and ordinary:
        name = "ordinary_triple"
    elif m == 4 and ordinary:
        name = "ordinary_quadruple"
    return SingularityType(name, m, max_mult, tangents)


def analyze_singular_points(arr: ConicArrangement) -> list:
    """Locate, classify, and compute local Milnor/Tjurina numbers exactly."""
    form = defining_polynomial(arr).form
    cap = (form.degree - 1) ** 2 + 2
    out = []
    for rec in locate_singular_points(arr):
        kind = classify_point(rec)
        mu = local_milnor_number(form, rec.point, rec.field, cap)
        tau = local_tjurina_number(form, rec.point, rec.field, cap)
        if tau > mu:
            raise QConicError("local invariants violate tjurina <= milnor")
        out.append(replace(rec, kind=kind, milnor=mu, tjurina=tau,
                           quasi_homogeneous=(mu == tau)))
    return out


def is_quasi_homogeneous(record: SingularPointRecord) -> bool:
    """Exact criterion: equality of the local Milnor and Tjurina numbers."""
    if record.milnor is None or record.tjurina is None:
        raise QConicError("invariants not computed yet")
    return record.milnor == record.tjurina


def weak_combinatorics(arr: ConicArrangement):
    """Counts (k; n2, t2, n3, n4) plus the non-classified rest.

    Each geometric point counts once: orbit representatives are weighted
    by orbit size.  The flag is True iff every singular point is one of
    the four quasi-homogeneous types.
    """
    records = analyze_singular_points(arr)
    counts = {"node": 0, "tacnode": 0, "ordinary_triple": 0,
              "ordinary_quadruple": 0, "other": 0}
    for rec in records:
        counts[rec.kind.name] += rec.orbit_size
    wc = WeakCombinatorics(
        k=arr.k, n2=counts["node"], t2=counts["tacnode"],
        n3=counts["ordinary_triple"], n4=counts["ordinary_quadruple"],
        other_count=counts["other"])
    return wc, counts["other"] == 0, records


# ----------------------------------------------------- standalone multiplicity

def intersection_multiplicity(ci: Conic, cj: Conic, point, field=None) -> int:
    """Local intersection multiplicity of two smooth conics at a point.

    The point may have rational or FieldElement coordinates; it must lie
    on both conics.  Computed as the local algebra dimension of the two
    dehomogenized equations, independently of the resultant route used by
    :func:`locate_singular_points`.
    """
    field = field or _field_of(point)
    coords = tuple(c if isinstance(c, FieldElement) else field.rational(c)
                   for c in point)
    if not any(coords):
        raise ValueError("(0 : 0 : 0) is not a projective point")
    if ci.evaluate(coords) or cj.evaluate(coords):
        raise PointNotOnBothError("point must lie on both conics")
    chart = max(i for i in range(3) if coords[i])
    inv = coords[chart].inverse()
    norm = tuple(c * inv for c in coords)
    gens = [local_affine_at(c.form(), norm, field) for c in (ci, cj)]
    return truncated_quotient_dimension(gens, cap=11, field_degree=field.degree)


def _field_of(point):
    for c in point:
        if isinstance(c, FieldElement):
            return c.field
    return RATIONAL_FIELD
