"""Dense univariate polynomial arithmetic over exact rationals.

A polynomial is a list of ``QQ`` coefficients indexed by degree with no
trailing zeros; the zero polynomial is the empty list.  Everything here
is exact; these routines back the root-isolation and number-field layers.
"""

from __future__ import annotations

from .rationals import QQ, ZERO, ONE, clear_denominators

Poly = list  # list of QQ, index = degree


def strip(p: Poly) -> Poly:
    while p and not p[-1]:
        p.pop()
    return p


def from_coeffs(coeffs) -> Poly:
    return strip([QQ(c) for c in coeffs])


def degree(p: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def constant(c) -> Poly:
    c = QQ(c)
    return [c] if c else []


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [ZERO] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return strip(out)


def sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [ZERO] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return strip(out)


def neg(p: Poly) -> Poly:
    return [-c for c in p]


def scale(p: Poly, c) -> Poly:
    c = QQ(c)
    if not c:
        return []
    return [x * c for x in p]


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return strip(out)


def mul_xk(p: Poly, k: int) -> Poly:
    if not p:
        return []
    return [ZERO] * k + list(p)


def divmod_poly(p: Poly, q: Poly):
    """Exact quotient and remainder over the rationals."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq, lead = degree(q), q[-1]
    quot = [ZERO] * max(0, len(p) - len(q) + 1)
    while len(r) >= len(q):
        c = r[-1] / lead
        k = len(r) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        strip(r)
        if len(r) >= len(q) and not r[-1]:  # pragma: no cover - strip handles
            strip(r)
    return strip(quot), r


def rem(p: Poly, q: Poly) -> Poly:
    return divmod_poly(p, q)[1]


def monic(p: Poly) -> Poly:
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    a, b = list(p), list(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def derivative(p: Poly) -> Poly:
    return strip([p[i] * i for i in range(1, len(p))])


def evaluate(p: Poly, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def shift(p: Poly, a) -> Poly:
    """Taylor shift: returns q with q(x) = p(x + a)."""
    a = QQ(a)
    out = list(p)
    n = len(out)
    # synthetic division by (x - (-a)), repeated
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return strip(out)


def compose_linear(p: Poly, a, b) -> Poly:
    """q(x) = p(a*x + b)."""
    a, b = QQ(a), QQ(b)
    acc: Poly = []
    lin = strip([b, a])
    for c in reversed(p):
        acc = add(mul(acc, lin), constant(c))
    return acc


def primitive_integer(p: Poly):
    """Scale to integer coefficients with content 1; returns ints list."""
    ints, _ = clear_denominators(p)
    return ints


def squarefree_part(p: Poly) -> Poly:
    if degree(p) < 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def squarefree_decomposition(p: Poly):
    """Yun's algorithm: returns [(g_i, i)] with p = lc * prod g_i^i,
    the g_i monic, squarefree and pairwise coprime."""
    if degree(p) < 1:
        return []
    p = monic(p)
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    out = []
    i = 1
    while degree(b) > 0:
        g = gcd(b, d)
        if degree(g) > 0:
            out.append((monic(g), i))
        b2 = divmod_poly(b, g)[0]
        c2 = divmod_poly(d, g)[0]
        b, c = b2, c2
        d = sub(c, derivative(b))
        i += 1
    return out


def resultant(p: Poly, q: Poly):
    """Sylvester resultant of two univariate rational polynomials.

    Convention: deg(q) rows of p's coefficients above deg(p) rows of q's,
    coefficients in descending order; the value is that determinant.
    """
    m, n = degree(p), degree(q)
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial")
    if m == 0:
        return p[0] ** n
    if n == 0:
        return q[0] ** m
    size = m + n
    rows = []
    pc = list(reversed(p))
    qc = list(reversed(q))
    for i in range(n):
        rows.append([ZERO] * i + pc + [ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO] * i + qc + [ZERO] * (size - n - 1 - i))
    # fraction-managed Gaussian elimination
    det = ONE
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pval = rows[col][col]
        det *= pval
        for r in range(col + 1, size):
            f = rows[r][col]
            if f:
                f = f / pval
                rows[r] = [rows[r][j] - f * rows[col][j] for j in range(size)]
    return det


# --------------------------------------------------------------- real roots

def root_bound(p: Poly):
    """Cauchy bound: every (real or complex) root has |z| < bound."""
    if degree(p) < 1:
        raise ValueError("constant polynomial")
    lead = p[-1]
    return ONE + max(abs(c / lead) for c in p[:-1]) if len(p) > 1 else ONE


def sturm_chain(p: Poly):
    chain = [list(p), derivative(p)]
    while chain[-1]:
        chain.append(neg(rem(chain[-2], chain[-1])))
    chain.pop()
    return chain


def _sign_changes(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain, a, b) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    va = _sign_changes(evaluate(f, a) for f in chain)
    vb = _sign_changes(evaluate(f, b) for f in chain)
    return va - vb


def isolate_real_roots(p: Poly):
    """Disjoint open-ish rational intervals, one per distinct real root.

    ``p`` must be squarefree.  Returns a sorted list of (lo, hi) pairs;
    a root that happens to be rational may come back as a degenerate
    (r, r) interval.  Certified by Sturm counts (interval bisection).
    """
    if degree(p) < 1:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(chain, lo, hi)
        if n == 0:
            continue
        if n == 1:
            # shrink away an endpoint root on hi (count is for (lo, hi])
            if not evaluate(p, hi):
                out.append((hi, hi))
                continue
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if not evaluate(p, mid):
            out.append((mid, mid))
            # shrink a gap around mid until Sturm certifies it holds only mid
            delta = (hi - lo) / 4
            while sturm_count(chain, mid - delta, mid + delta) != 1:
                delta /= 2
            stack.append((lo, mid - delta))
            stack.append((mid + delta, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    return sorted(out)


def refine_root_interval(p: Poly, lo, hi, chain=None):
    """One bisection step keeping the unique root of squarefree p inside."""
    if lo == hi:
        return lo, hi
    if chain is None:
        chain = sturm_chain(p)
    mid = (lo + hi) / 2
    if not evaluate(p, mid):
        return mid, mid
    if sturm_count(chain, lo, mid) == 1:
        return lo, mid
    return mid, hi


# ------------------------------------------------------------ rational roots

def rational_roots(p: Poly):
    """All rational roots of p (any multiplicity), without factoring integers.

    Each candidate root of the squarefree part is pinned by refining its
    isolating interval below 1/B^2 (B = |leading coefficient| of the
    primitive integer form, which bounds every root's denominator) and
    testing the unique smallest-denominator rational in the interval.
    """
    from .rationals import simplest_in_interval

    if degree(p) < 1:
        return []
    sf = squarefree_part(p)
    ints = primitive_integer(sf)
    bden = abs(ints[-1])
    sfz = from_coeffs(ints)
    width = QQ(1, bden * bden + 1)
    roots = []
    chain = sturm_chain(sfz)
    for lo, hi in isolate_real_roots(sfz):
        if lo == hi:
            roots.append(lo)
            continue
        while hi - lo >= width:
            lo, hi = refine_root_interval(sfz, lo, hi, chain)
            if lo == hi:
                break
        cand = lo if lo == hi else simplest_in_interval(lo, hi)
        if cand.denominator <= bden and not evaluate(sfz, cand):
            roots.append(QQ(cand))
    return sorted(roots)


def root_multiplicity(p: Poly, r) -> int:
    m = 0
    cur = list(p)
    lin = from_coeffs([-QQ(r), 1])
    while True:
        q, rr = divmod_poly(cur, lin)
        if rr:
            return m
        m += 1
        cur = q


def to_string(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
