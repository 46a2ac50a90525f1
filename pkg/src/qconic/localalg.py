"""Local algebra dimensions by truncated linear algebra.

The dimension of C[[u, v]]/(h_1, ..., h_r) (each h_i of positive order) is
computed as the stabilized value of

    D(N) = dim P_{<N} - dim span{ trunc_{<N}(u^a v^b h_i) : a+b <= N-1 }

where P_{<N} is the space of polynomials of total degree < N.  Because
every generator has positive order, the span equals the degree-<N
truncation of the full ideal, so D(N) = dim O/(I + m^N); once two
consecutive values agree, I + m^N = I + m^(N+1) forces m^N into I
(Nakayama), so the value is exact from then on.  A hard cap turns
non-isolated singularities into an error instead of a loop.

Matrices over a number field are blown up entry-wise into multiplication
matrices over the rationals: the rational rank is exactly (field degree)
times the field rank, so the fast integer elimination path serves both.
"""

from __future__ import annotations

from .rationals import QQ
from .errors import NonIsolatedError, NotSingularError
from .multipoly import AffinePolynomial
from .numberfield import FieldElement, multiplication_matrix
from . import linalg


def _entry_to_rational(c):
    if isinstance(c, FieldElement):
        if not c.is_rational():
            raise ValueError("not rational")
        return c.coords[0]
    return QQ(c)


def _rank_over_field(rows, field_degree: int) -> int:
    """Exact rank of a matrix with FieldElement (or rational) entries."""
    if not rows or not rows[0]:
        return 0
    if field_degree == 1:
        rat = [[_entry_to_rational(c) for c in row] for row in rows]
        return linalg.rank_blockwise(rat)
    blown = []
    for row in rows:
        blocks = []
        for c in row:
            if isinstance(c, FieldElement):
                blocks.append(multiplication_matrix(c))
            else:
                cc = QQ(c)
                blocks.append([[cc if i == j else QQ(0)
                                for j in range(field_degree)]
                               for i in range(field_degree)])
        for i in range(field_degree):
            blown.append([blocks[j][i][l]
                          for j in range(len(row)) for l in range(field_degree)])
    big_rank = linalg.rank_blockwise(blown)
    if big_rank % field_degree:
        raise RuntimeError("blown-up rank not divisible by field degree")
    return big_rank // field_degree


def truncated_quotient_dimension(generators, cap: int, field_degree: int = 1) -> int:
    """Stabilized dimension of the local quotient by ``generators``.

    Every generator must have order >= 1 (vanish at the origin); raises
    NonIsolatedError when no two consecutive truncation levels agree by
    total degree ``cap``.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise NonIsolatedError("zero ideal is never zero-dimensional")
    orders = [g.order() for g in gens]
    if min(orders) < 1:
        raise ValueError("generators must vanish at the origin")

    prev = None
    n = 2
    while n <= cap + 1:
        cur = _truncated_dim_at(gens, orders, n, field_degree)
        if prev is not None and cur == prev:
            return cur
        prev = cur
        n += 1
    raise NonIsolatedError(
        f"local dimension failed to stabilize by degree {cap}")


def _truncated_dim_at(gens, orders, n: int, field_degree: int) -> int:
    monomials = [(i, j) for s in range(n) for i in range(s, -1, -1)
                 for j in (s - i,)]
    index = {m: r for r, m in enumerate(monomials)}
    columns = []
    for g, order in zip(gens, orders):
        for a in range(n - order):
            for b in range(n - order - a):
                col = [0] * len(monomials)
                nonzero = False
                for (i, j), c in g.terms.items():
                    ii, jj = i + a, j + b
                    if ii + jj < n:
                        col[index[(ii, jj)]] = c
                        nonzero = True
                if nonzero:
                    columns.append(col)
    if not columns:
        return len(monomials)
    rows = [[col[r] for col in columns] for r in range(len(monomials))]
    return len(monomials) - _rank_over_field(rows, field_degree)


# ------------------------------------------------------- curve-level helpers

def local_affine_at(form, point, field) -> AffinePolynomial:
    """Dehomogenize at the chart where the normalized point has coordinate 1
    and translate that point to the origin; coefficients live in ``field``."""
    chart = max(i for i in range(3) if point[i])
    if point[chart] != field.one():
        raise ValueError("point must be normalized (last nonzero coordinate 1)")
    affine = form.dehomogenize(chart)
    keep = [v for v in range(3) if v != chart]
    a, b = point[keep[0]], point[keep[1]]
    lifted = AffinePolynomial({m: field.rational(c) for m, c in affine.terms.items()})
    return lifted.translate(a, b)


def local_milnor_number(form, point, field, cap: int | None = None) -> int:
    """Dimension of the local algebra of the two affine partials at ``point``."""
    g = local_affine_at(form, point, field)
    gu, gv = g.derivative(0), g.derivative(1)
    _require_singular(g, gu, gv)
    cap = cap if cap is not None else (form.degree - 1) ** 2 + 2
    return truncated_quotient_dimension([gu, gv], cap, field.degree)


def local_tjurina_number(form, point, field, cap: int | None = None) -> int:
    """Dimension of the local algebra of (g, g_u, g_v) at ``point``."""
    g = local_affine_at(form, point, field)
    gu, gv = g.derivative(0), g.derivative(1)
    _require_singular(g, gu, gv)
    cap = cap if cap is not None else (form.degree - 1) ** 2 + 2
    return truncated_quotient_dimension([g, gu, gv], cap, field.degree)


def _require_singular(g, gu, gv):
    if g.is_zero():
        raise NonIsolatedError("curve contains the whole chart line")
    if g.order() == 0:
        raise NotSingularError("point does not lie on the curve")
    if gu.order() == 0 or gv.order() == 0:
        raise NotSingularError("point is a smooth point of the curve")
