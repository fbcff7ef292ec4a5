"""Dense univariate polynomial arithmetic over an arbitrary field object.

Polynomials are plain Python lists of field elements, little-endian
(index i holds the coefficient of x^i).  The zero polynomial is the
empty list.  Every function takes the field as its first argument; the
field must provide ``zero``, ``one``, ``element`` and, for the
root/factor routines, ``q``, ``p``, ``absolute_degree`` and
``element_at``.

This module is internal plumbing: the public polynomial API of the
package lives in :mod:`gonalift.mpoly`.
"""

from __future__ import annotations


def trim(cs):
    """Drop trailing zero coefficients."""
    n = len(cs)
    while n > 0 and not cs[n - 1]:
        n -= 1
    return list(cs[:n])


def degree(cs):
    """Degree, with deg 0 = -1."""
    n = len(cs)
    while n > 0 and not cs[n - 1]:
        n -= 1
    return n - 1


def is_zero(cs):
    return degree(cs) < 0


def constant(field, c):
    c = field.element(c)
    return [c] if c else []


def x_poly(field):
    return [field.zero, field.one]


def lc(cs):
    """Leading coefficient; raises on the zero polynomial."""
    d = degree(cs)
    if d < 0:
        raise ValueError("zero polynomial has no leading coefficient")
    return cs[d]


def add(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(field, a, b):
    return add(field, a, neg(b))


def scale(field, a, c):
    c = field.element(c)
    if not c:
        return []
    return trim([ai * c for ai in a])


def mul(field, a, b):
    a = trim(a)
    b = trim(b)
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return trim(out)


def shift(field, a, k):
    """Multiply by x^k."""
    a = trim(a)
    if not a:
        return []
    return [field.zero] * k + a


def divmod_(field, a, b):
    """Quotient and remainder; b must be nonzero."""
    a = trim(a)
    b = trim(b)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lc = b[db].inverse()
    r = list(a)
    q = [field.zero] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = r[i + db] * inv_lc
        if not c:
            continue
        q[i] = c
        for j in range(db + 1):
            r[i + j] = r[i + j] - c * b[j]
    return trim(q), trim(r)


def rem(field, a, b):
    return divmod_(field, a, b)[1]


def monic(field, a):
    a = trim(a)
    if not a:
        return []
    return scale(field, a, a[-1].inverse())


def gcd(field, a, b):
    """Monic gcd."""
    a = trim(a)
    b = trim(b)
    while b:
        a, b = b, rem(field, a, b)
    return monic(field, a)


def xgcd(field, a, b):
    """Return (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = trim(a), trim(b)
    u0, u1 = [field.one], []
    v0, v1 = [], [field.one]
    while r1:
        q, r = divmod_(field, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(field, u0, mul(field, q, u1))
        v0, v1 = v1, sub(field, v0, mul(field, q, v1))
    if not r0:
        return [], u0, v0
    c = r0[-1].inverse()
    return scale(field, r0, c), scale(field, u0, c), scale(field, v0, c)


def pow_mod(field, a, e, m):
    """a^e mod m by square-and-multiply; e a nonnegative int."""
    result = [field.one]
    base = rem(field, a, m)
    while e > 0:
        if e & 1:
            result = rem(field, mul(field, result, base), m)
        base = rem(field, mul(field, base, base), m)
        e >>= 1
    return result


def eval_at(field, a, x):
    acc = field.zero
    for c in reversed(trim(a)):
        acc = acc * x + c
    return acc


def eval_in(ext, a, x):
    """Evaluate with coefficients embedded into the extension of x."""
    acc = ext.zero
    for c in reversed(trim(a)):
        acc = acc * x + ext.embed(c)
    return acc


def derivative(field, a):
    return trim([a[i] * field.element(i) for i in range(1, len(a))])


def interpolate(field, points):
    """Newton interpolation through distinct (x, y) pairs."""
    xs = [field.element(x) for x, _ in points]
    ys = [field.element(y) for _, y in points]
    n = len(xs)
    # divided differences, in place
    coeffs = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) * (xs[i] - xs[i - level]).inverse()
    poly = []
    for i in range(n - 1, -1, -1):
        poly = add(field, mul(field, poly, [-xs[i], field.one]), [coeffs[i]])
    return trim(poly)


def resultant(field, a, b):
    """Exact resultant of two univariate polynomials over a field."""
    a = trim(a)
    b = trim(b)
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return field.zero
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    acc = field.one
    sign = 1
    while True:
        r = rem(field, a, b)
        dr = degree(r)
        if da * db % 2 == 1:
            sign = -sign
        if dr < 0:
            return field.zero
        acc = acc * lc(b) ** (da - dr)
        a, b, da, db = b, r, db, dr
        if db == 0:
            acc = acc * b[0] ** da
            return acc if sign == 1 else -acc


def count_roots(field, a):
    """Number of distinct roots in the field itself."""
    a = trim(a)
    if degree(a) < 1:
        return 0
    xq = pow_mod(field, x_poly(field), field.q, a)
    g = gcd(field, sub(field, xq, x_poly(field)), a)
    return degree(g)


def roots(field, a):
    """Distinct roots in the field, sorted by the field's enumeration index."""
    a = trim(a)
    d = degree(a)
    if d < 0:
        raise ValueError("every field element is a root of the zero polynomial")
    if d == 0:
        return []
    xq = pow_mod(field, x_poly(field), field.q, a)
    g = gcd(field, sub(field, xq, x_poly(field)), a)
    found = []
    _split_linear(field, g, found)
    found.sort(key=field.index_of)
    return found


def _split_linear(field, g, out):
    """Split a product of distinct monic linear factors into its roots."""
    d = degree(g)
    if d <= 0:
        return
    if d == 1:
        out.append(-g[0] * g[1].inverse())
        return
    if field.q <= 512:
        # brute force beats equal-degree splitting at this size
        for i in range(field.q):
            c = field.element_at(i)
            if not eval_at(field, g, c):
                out.append(c)
        return
    e = (field.q - 1) // 2
    index = 0
    while True:
        index += 1
        delta = field.element_at(index % field.q)
        h = pow_mod(field, [delta, field.one], e, g)
        h = sub(field, h, [field.one])
        w = gcd(field, h, g)
        dw = degree(w)
        if 0 < dw < d:
            _split_linear(field, w, out)
            _split_linear(field, divmod_(field, g, w)[0], out)
            return


def is_squarefree(field, a):
    a = trim(a)
    if degree(a) <= 0:
        return True
    d = derivative(field, a)
    if is_zero(d):
        return False
    return degree(gcd(field, a, d)) == 0


def is_irreducible(field, a):
    """Rabin's irreducibility test over the field."""
    a = trim(a)
    d = degree(a)
    if d <= 0:
        return False
    if d == 1:
        return True
    if not a[0] and d > 1:
        return False
    a = monic(field, a)
    q = field.q
    x = x_poly(field)
    # b_i = x^(q^i) mod a, by iterated q-th powering
    b = x
    powers = {}
    for i in range(1, d + 1):
        b = pow_mod(field, b, q, a)
        powers[i] = b
    if trim(sub(field, powers[d], x)):
        return False
    for r in _prime_divisors(d):
        g = gcd(field, sub(field, powers[d // r], x), a)
        if degree(g) != 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def squarefree_decomposition(field, a):
    """Return [(g_i, m_i)] with a = lc * prod g_i^m_i, g_i monic squarefree, coprime."""
    a = monic(field, trim(a))
    if degree(a) <= 0:
        return []
    p = field.p
    out = []
    multiplier = 1
    while degree(a) > 0:
        d = derivative(field, a)
        if is_zero(d):
            a = _pth_root_poly(field, a)
            multiplier *= p
            continue
        u = gcd(field, a, d)
        v = divmod_(field, a, u)[0]  # product of factors with mult not divisible by p
        k = 0
        while degree(v) > 0:
            k += 1
            w = gcd(field, u, v)
            piece = divmod_(field, v, w)[0]
            if degree(piece) > 0:
                out.append((piece, k * multiplier))
            v = w
            u = divmod_(field, u, w)[0]
        a = u
    return out


def _pth_root_poly(field, a):
    """For a(x) = b(x^p), return the p-th root polynomial of a."""
    p = field.p
    root_exp = field.p ** (field.absolute_degree - 1)
    out = []
    for i in range(0, len(a), p):
        out.append(a[i] ** root_exp)
    return trim(out)


def factor(field, a):
    """Full factorization into monic irreducibles: returns (unit, [(g, mult)]).

    Distinct-degree splitting followed by equal-degree splitting; the
    equal-degree stage scans deterministic split elements so results are
    reproducible.
    """
    a = trim(a)
    if degree(a) < 0:
        raise ValueError("cannot factor the zero polynomial")
    unit = a[-1]
    pieces = []
    for g, m in squarefree_decomposition(field, a):
        for h in _factor_squarefree(field, g):
            pieces.append((h, m))
    pieces.sort(key=lambda gm: (degree(gm[0]), [field.index_of(c) for c in gm[0]]))
    return unit, pieces


def _factor_squarefree(field, a):
    out = []
    q = field.q
    x = x_poly(field)
    b = x
    d = 0
    rest = monic(field, a)
    while degree(rest) > 0:
        d += 1
        if 2 * d > degree(rest):
            out.append(rest)
            break
        b = pow_mod(field, b, q, rest)
        g = gcd(field, sub(field, b, x), rest)
        if degree(g) > 0:
            out.extend(_equal_degree_split(field, g, d))
            rest = divmod_(field, rest, g)[0]
            b = rem(field, b, rest)
    return out


def _equal_degree_split(field, g, d):
    """Split a squarefree product of degree-d irreducibles."""
    if degree(g) == d:
        return [monic(field, g)]
    e = (field.q ** d - 1) // 2
    index = 0
    while True:
        index += 1
        delta = _element_sequence(field, index, degree(g))
        h = pow_mod(field, delta, e, g)
        h = sub(field, h, [field.one])
        w = gcd(field, h, g)
        dw = degree(w)
        if 0 < dw < degree(g):
            left = _equal_degree_split(field, w, d)
            right = _equal_degree_split(field, divmod_(field, g, w)[0], d)
            return left + right


def _element_sequence(field, index, max_deg):
    """Deterministic scan of low-degree polynomials used as split candidates."""
    coeffs = []
    i = index
    while i > 0:
        i, r = divmod(i, field.q)
        coeffs.append(field.element_at(r))
    if len(coeffs) < 2:
        coeffs = [field.element_at(index % field.q), field.one]
    return trim(coeffs[: max(max_deg, 2)])
