"""Single algebraic extensions of the rationals with certified embeddings.

A :class:`NumberField` is Q[t]/(m) for a monic irreducible m together with
an isolating box pinning one complex root of m; elements are coordinate
vectors in the power basis and all arithmetic reduces modulo m, so it is
exact.  The degree-1 field ``RATIONAL_FIELD`` (minimal polynomial t)
represents the rationals themselves, which keeps every pipeline value a
:class:`FieldElement` regardless of where it lives.

Fields are cached per minimal polynomial: isolating all roots once fixes a
canonical root order, and a field is identified by (polynomial, root index).
"""

from __future__ import annotations

from .rationals import QQ, format_rational
from .intervals import Box, evaluate_poly_on_box
from . import unipoly as up
from . import roots as rootmod
from .errors import QConicError

_FIELD_CACHE: dict[tuple, list["NumberField"]] = {}


class NumberField:
    """Q[t]/(minimal_polynomial) embedded at one certified root."""

    __slots__ = ("min_poly", "root_index", "_box", "degree", "_red_rows", "_chain")

    def __init__(self, min_poly, root_index: int, box: Box):
        self.min_poly = tuple(QQ(c) for c in min_poly)
        self.root_index = root_index
        self._box = box
        self.degree = len(self.min_poly) - 1
        self._red_rows = None
        self._chain = None

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.min_poly == other.min_poly
                and self.root_index == other.root_index)

    def __hash__(self):
        return hash((self.min_poly, self.root_index))

    def __repr__(self):
        return f"NumberField({up.to_string(list(self.min_poly))} @ root {self.root_index})"

    @property
    def box(self) -> Box:
        return self._box

    def refine(self) -> Box:
        """Shrink the isolating box (certified); returns the new box."""
        self._box = rootmod.refine_box(list(self.min_poly), self._box, self._sturm())
        return self._box

    def _sturm(self):
        if self._chain is None and self.degree >= 1:
            self._chain = up.sturm_chain(list(self.min_poly))
        return self._chain

    # -- elements ----------------------------------------------------------
    def element(self, coords) -> "FieldElement":
        coords = [QQ(c) for c in coords]
        if len(coords) > self.degree:
            coords = self._reduce(coords)
        coords += [QQ(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def rational(self, c) -> "FieldElement":
        return self.element([QQ(c)])

    def zero(self) -> "FieldElement":
        return self.rational(0)

    def one(self) -> "FieldElement":
        return self.rational(1)

    def generator(self) -> "FieldElement":
        if self.degree == 1:
            # t is congruent to the unique root of the linear minimal polynomial
            return self.rational(-self.min_poly[0] / self.min_poly[1])
        return self.element([0, 1])

    def _reduction_rows(self, upto: int):
        # t^(degree+k) as coordinate vectors, for k = 0 .. upto-1
        n = self.degree
        if self._red_rows is None:
            self._red_rows = [[-c / self.min_poly[n] for c in self.min_poly[:n]]]
        rows = self._red_rows
        while len(rows) < upto:
            cur = rows[-1]
            hi = cur[-1]  # coefficient of t^(n-1): overflows into t^n
            cur = [QQ(0)] + cur[:-1]
            if hi:
                cur = [a + hi * b for a, b in zip(cur, rows[0])]
            rows.append(cur)
        return rows

    def _reduce(self, coords):
        n = self.degree
        if n == 0:
            raise QConicError("degenerate field")
        coords = list(coords)
        if len(coords) <= n:
            return coords
        rows = self._reduction_rows(len(coords) - n)
        out = coords[:n]
        for k, c in enumerate(coords[n:]):
            if c:
                row = rows[k]
                out = [a + c * b for a, b in zip(out, row)]
        return out

    def to_json(self):
        return {
            "minimal_polynomial": [format_rational(c) for c in self.min_poly],
            "box": self.box.to_json(),
        }


class FieldElement:
    """An element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if self.field == other.field:
                return self.coords == other.coords
            if self.is_rational() and other.is_rational():
                return self.coords[0] == other.coords[0]
            return False
        if other == 0:
            return not any(self.coords)
        return self.coords[0] == QQ(other) and not any(self.coords[1:])

    def __hash__(self):
        return hash((self.field, self.coords))

    def _align(self, other):
        """Bring both operands into one field (rationals lift anywhere)."""
        if not isinstance(other, FieldElement):
            return self, self.field.rational(other)
        if other.field == self.field:
            return self, other
        if other.field.degree == 1:
            return self, self.field.rational(other.coords[0])
        if self.field.degree == 1:
            return other.field.rational(self.coords[0]), other
        raise _mixed_fields(self, other)

    def __add__(self, other):
        a, b = self._align(other)
        return FieldElement(a.field, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        a, b = self._align(other)
        return FieldElement(a.field, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            c = QQ(other)
            return FieldElement(self.field, tuple(a * c for a in self.coords))
        a, b = self._align(other)
        n = a.field.degree
        prod = [QQ(0)] * (2 * n - 1) if n > 1 else [QQ(0)]
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    prod[i + j] += x * y
        return FieldElement(a.field, tuple(a.field._reduce(prod)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("zero field element")
        n = self.field.degree
        if n == 1:
            return self.field.rational(QQ(1) / self.coords[0])
        # extended Euclid: s * self + t * min_poly = gcd = constant
        a = up.strip(list(self.coords))
        m = list(self.field.min_poly)
        s0, s1 = [QQ(1)], []
        r0, r1 = a, m
        while r1:
            q, r = up.divmod_poly(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, up.sub(s0, up.mul(q, s1))
        if up.degree(r0) != 0:
            raise QConicError("minimal polynomial is not irreducible")
        inv = up.scale(s0, QQ(1) / r0[0])
        return self.field.element(inv)

    def __truediv__(self, other):
        a, b = self._align(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise QConicError("element is not rational")
        return self.coords[0]

    def enclosure(self, max_width=None) -> Box:
        """Certified box containing the element; refined on demand."""
        box = evaluate_poly_on_box(self.coords, self.field.box)
        if max_width is not None:
            guard = 0
            while box.width() > QQ(max_width) and guard < 200:
                self.field.refine()
                box = evaluate_poly_on_box(self.coords, self.field.box)
                guard += 1
        return box

    def to_json(self):
        return [format_rational(c) for c in self.coords]

    def __repr__(self):
        if self.is_rational():
            return f"FieldElement({self.coords[0]})"
        return f"FieldElement({up.to_string(list(self.coords))} in {self.field!r})"


def _mixed_fields(a, b):
    return QConicError(f"cannot mix elements of {a.field!r} and {b.field!r}")


# ------------------------------------------------------------- field registry

RATIONAL_FIELD = NumberField((QQ(0), QQ(1)), 0, Box.point(0))


def fields_for_polynomial(min_poly) -> list[NumberField]:
    """All embeddings of Q[t]/(m): one NumberField per root of m, isolated
    with certified pairwise-disjoint boxes in a canonical, stable order.
    Irreducibility of m over the rationals is verified at construction."""
    key = tuple(QQ(c) for c in up.monic(up.from_coeffs(min_poly)))
    if key not in _FIELD_CACHE:
        from .factorint import is_irreducible

        if not is_irreducible(list(key)):
            raise QConicError(
                f"minimal polynomial {up.to_string(list(key))} is reducible")
        boxes = rootmod.isolate_all_roots(list(key))
        _FIELD_CACHE[key] = [NumberField(key, i, b) for i, b in enumerate(boxes)]
    return _FIELD_CACHE[key]


def field_for_root(min_poly, index: int = 0) -> NumberField:
    if up.degree(up.from_coeffs(min_poly)) == 1:
        return RATIONAL_FIELD
    return fields_for_polynomial(min_poly)[index]


# ----------------------------------------------- characteristic polynomials

def multiplication_matrix(elem: FieldElement):
    """Matrix of multiplication by elem on the power basis (columns)."""
    n = elem.field.degree
    cols = []
    basis_elem = elem.field.one()
    gen = elem.field.generator()
    for _ in range(n):
        cols.append((elem * basis_elem).coords)
        basis_elem = basis_elem * gen
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def characteristic_polynomial(elem: FieldElement):
    """Monic characteristic polynomial of multiplication by elem (degree n)."""
    m = multiplication_matrix(elem)
    n = len(m)
    # entries of T*I - M as univariate polynomials in T
    entries = [[up.from_coeffs([-m[i][j]] if i != j else [-m[i][j], 1])
                for j in range(n)] for i in range(n)]
    return _poly_det(entries)


def _poly_det(entries):
    n = len(entries)
    if n == 1:
        return entries[0][0]
    det = []
    sign = 1
    for j in range(n):
        if up.is_zero(entries[0][j]):
            sign = -sign
            continue
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = up.mul(entries[0][j], _poly_det(minor))
        det = up.add(det, term) if sign > 0 else up.sub(det, term)
        sign = -sign
    return det


def express_in_powers(gamma: FieldElement, targets):
    """Write each target element as a polynomial in gamma (gamma primitive).

    Solves the linear system whose columns are the power-basis coordinates
    of gamma^j; raises if gamma does not generate the field.
    """
    from .linalg import solve_unique

    field = gamma.field
    n = field.degree
    cols = []
    pw = field.one()
    for _ in range(n):
        cols.append(pw.coords)
        pw = pw * gamma
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    out = []
    for t in targets:
        out.append(tuple(solve_unique(rows, list(t.coords))))
    return out


# ----------------------------------------------- generic univariate over K

def gpoly_strip(p):
    while p and not p[-1]:
        p.pop()
    return p


def gpoly_divmod(p, q):
    if not q:
        raise ZeroDivisionError
    r = list(p)
    quot = []
    inv_lead = q[-1].inverse()
    while len(r) >= len(q):
        c = r[-1] * inv_lead
        k = len(r) - len(q)
        while len(quot) <= k:
            quot.append(c.field.zero())
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] = r[i + k] - c * b
        gpoly_strip(r)
    return gpoly_strip(quot), r


def gpoly_gcd_monic(p, q):
    """Monic gcd of univariate polynomials with FieldElement coefficients."""
    a, b = gpoly_strip(list(p)), gpoly_strip(list(q))
    while b:
        a, b = b, gpoly_divmod(a, b)[1]
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]
