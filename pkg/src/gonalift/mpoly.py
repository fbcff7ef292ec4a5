"""Sparse multivariate polynomials over exact coefficient rings.

An ``MPoly`` stores a map from exponent tuples to nonzero coefficients
and belongs to a ``PolyRing`` (coefficient ring plus variable names).
Everything is immutable by convention and exact; the coefficient ring
can be a finite field, the number-ring order, or plain integers, as
long as its elements support ring arithmetic.

The term order used for normalization, leading terms and printing is
graded lexicographic, everywhere.
"""

from __future__ import annotations

from . import linalg, upoly
from .errors import (
    AllZero,
    DegreeTooSmall,
    InputError,
    NotPolynomial,
    ResultantDegenerate,
    ZeroInput,
)


def _glex_key(e):
    return (sum(e), e)


class PolyRing:
    """Polynomial ring R[names] over an exact coefficient ring R."""

    __slots__ = ("coeff_ring", "names", "nvars")

    def __init__(self, coeff_ring, names):
        self.coeff_ring = coeff_ring
        self.names = tuple(names)
        self.nvars = len(self.names)

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, PolyRing) and self.coeff_ring == other.coeff_ring
                and self.names == other.names)

    def __hash__(self):
        return hash((self.coeff_ring, self.names))

    def __repr__(self):
        return f"PolyRing({self.coeff_ring!r}, {list(self.names)})"

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return MPoly(self, {(0,) * self.nvars: self.coeff_ring.one})

    def constant(self, c):
        c = self.coeff_ring.element(c)
        if not c:
            return self.zero()
        return MPoly(self, {(0,) * self.nvars: c})

    def variable(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return MPoly(self, {tuple(e): self.coeff_ring.one})

    def gens(self):
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps, c=1):
        c = self.coeff_ring.element(c)
        if not c:
            return self.zero()
        e = tuple(int(x) for x in exps)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise InputError(f"bad exponent vector {e}")
        return MPoly(self, {e: c})

    def from_terms(self, term_iter):
        terms = {}
        for e, c in term_iter:
            c = self.coeff_ring.element(c)
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars or any(x < 0 for x in e):
                raise InputError(f"bad exponent vector {e}")
            if not c:
                continue
            if e in terms:
                c = terms[e] + c
                if c:
                    terms[e] = c
                else:
                    del terms[e]
            else:
                terms[e] = c
        return MPoly(self, terms)

    def index_of_name(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"no variable named {name!r}") from None


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic structure

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def support(self):
        return sorted(self.terms, key=_glex_key)

    def coeff(self, e):
        return self.terms.get(tuple(e), self.ring.coeff_ring.zero)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        e = max(self.terms, key=_glex_key)
        return e, self.terms[e]

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.coeff_ring.zero)

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring == self.ring:
                return other
            return None
        if isinstance(other, int):
            return self.ring.constant(other)
        # a bare coefficient-ring element acts as a constant
        try:
            return self.ring.constant(self.ring.coeff_ring.element(other))
        except (ValueError, TypeError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return MPoly(self.ring, {})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    c = out[e] + c
                    if c:
                        out[e] = c
                    else:
                        del out[e]
                elif c:
                    out[e] = c
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise InputError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        c = self.ring.coeff_ring.element(c)
        if not c:
            return self.ring.zero()
        return MPoly(self.ring, {e: x * c for e, x in self.terms.items()})

    # -- views

    def coeff_of(self, var, k):
        """Coefficient of var^k, as a polynomial in the same ring."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == k:
                reduced = list(e)
                reduced[var] = 0
                out[tuple(reduced)] = c
        return MPoly(self.ring, out)

    def coefficients_in(self, var, formal_deg=None):
        """Little-endian list of coefficients with respect to one variable."""
        d = self.degree_in(var) if formal_deg is None else formal_deg
        if formal_deg is not None and self.degree_in(var) > formal_deg:
            raise InputError("formal degree below the actual degree")
        return [self.coeff_of(var, k) for k in range(d + 1)]

    def evaluate(self, values, into=None):
        """Full evaluation; coefficients are coerced into the target ring.

        ``into`` may be a coefficient ring or a PolyRing, so curves can be
        restricted to parametrized lines by passing polynomial values.
        """
        ring = into if into is not None else self.ring.coeff_ring
        if len(values) != self.ring.nvars:
            raise InputError("wrong number of values")
        if isinstance(ring, PolyRing):
            coerce = lambda v: v if isinstance(v, MPoly) else ring.constant(v)
            zero = ring.zero()
        else:
            coerce = ring.element
            zero = ring.zero
        values = [coerce(v) for v in values]
        acc = zero
        for e, c in self.terms.items():
            t = coerce(c)
            for i, ei in enumerate(e):
                if ei:
                    t = t * values[i] ** ei
            acc = acc + t
        return acc

    def partial_eval(self, assignments):
        """Evaluate some variables; the result keeps the same ring."""
        ring = self.ring.coeff_ring
        vals = {var: ring.element(v) for var, v in assignments.items()}
        out = {}
        for e, c in self.terms.items():
            for var, v in vals.items():
                if e[var]:
                    c = c * v ** e[var]
            if not c:
                continue
            ne = tuple(0 if i in vals else x for i, x in enumerate(e))
            if ne in out:
                c = out[ne] + c
                if c:
                    out[ne] = c
                else:
                    del out[ne]
            else:
                out[ne] = c
        return MPoly(self.ring, out)

    def map_coefficients(self, fn, new_ring):
        out = {}
        for e, c in self.terms.items():
            nc = fn(c)
            if nc:
                out[e] = nc
        return MPoly(new_ring, out)

    # -- serialization and printing

    def to_dict(self):
        terms = []
        for e in sorted(self.terms, key=_glex_key, reverse=True):
            c = self.terms[e]
            terms.append({"e": list(e), "c": [int(x) for x in c.coeffs]})
        return {"vars": list(self.ring.names), "terms": terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_glex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.ring.names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            cs = str(c)
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                parts.append(cs + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<MPoly {self}>"


def from_dict(data, coeff_ring):
    ring = PolyRing(coeff_ring, data["vars"])
    return ring.from_terms((t["e"], t["c"]) for t in data["terms"])


# ---------------------------------------------------------------------------
# substitution and changes of variables


def substitute(f, images):
    """Replace each variable of f by its image polynomial, fully expanded."""
    if len(images) != f.ring.nvars:
        raise InputError("one image per variable is required")
    target = images[0].ring
    for im in images:
        if im.ring != target:
            raise InputError("images must share one ring")
    maxes = [0] * f.ring.nvars
    for e in f.terms:
        for i, ei in enumerate(e):
            if ei > maxes[i]:
                maxes[i] = ei
    powers = []
    for i, im in enumerate(images):
        pows = [target.one()]
        for _ in range(maxes[i]):
            pows.append(pows[-1] * im)
        powers.append(pows)
    acc = target.zero()
    for e, c in f.terms.items():
        t = target.constant(c)
        for i, ei in enumerate(e):
            if ei:
                t = t * powers[i][ei]
        acc = acc + t
    return acc


class LinearChange:
    """Invertible substitution X <- A*X on the variables of a polynomial ring.

    Applying A and then B to a polynomial composes to the matrix product
    A*B: (B applied after A) f = f((A*B)X).
    """

    __slots__ = ("coeff_ring", "rows", "_det")

    def __init__(self, coeff_ring, rows):
        self.coeff_ring = coeff_ring
        self.rows = [[coeff_ring.element(x) for x in row] for row in rows]
        k = len(self.rows)
        if any(len(row) != k for row in self.rows):
            raise InputError("matrix must be square")
        self._det = linalg.det(self.rows, coeff_ring.zero, coeff_ring.one)
        if not self._det:
            raise linalg.SingularMatrix("linear change is singular")

    @property
    def size(self):
        return len(self.rows)

    def det(self):
        return self._det

    def apply(self, f):
        if f.ring.nvars != self.size:
            raise InputError("dimension mismatch")
        if f.ring.coeff_ring != self.coeff_ring:
            raise InputError("coefficient ring mismatch")
        gens = f.ring.gens()
        images = []
        for row in self.rows:
            im = f.ring.zero()
            for a, g in zip(row, gens):
                if a:
                    im = im + g.scale(a)
            images.append(im)
        return substitute(f, images)

    def then(self, other):
        """The change that applies self's substitution first, then other's."""
        if other.size != self.size or other.coeff_ring != self.coeff_ring:
            raise InputError("cannot compose changes of different shape")
        return LinearChange(self.coeff_ring, linalg.mat_mul(self.rows, other.rows))

    def inverse(self):
        if not getattr(self.coeff_ring, "is_field", False):
            raise InputError("matrix inversion requires field coefficients")
        return LinearChange(self.coeff_ring, linalg.inverse(self.coeff_ring, self.rows))

    def map_entries(self, fn, new_ring):
        return LinearChange(new_ring, [[fn(x) for x in row] for row in self.rows])

    def to_json(self):
        return [[[int(c) for c in x.coeffs] for x in row] for row in self.rows]

    def __eq__(self, other):
        return (isinstance(other, LinearChange) and self.coeff_ring == other.coeff_ring
                and self.rows == other.rows)

    def __repr__(self):
        return f"LinearChange({self.rows!r})"


def identity_change(coeff_ring, k):
    rows = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    return LinearChange(coeff_ring, rows)


def apply_linear_change(f, change):
    return change.apply(f)


# ---------------------------------------------------------------------------
# homogenization


def dehomogenize(f, var):
    """Set variable ``var`` to 1 and remove it from the ring."""
    names = f.ring.names[:var] + f.ring.names[var + 1:]
    ring = PolyRing(f.ring.coeff_ring, names)
    out = {}
    for e, c in f.terms.items():
        ne = e[:var] + e[var + 1:]
        if ne in out:
            c = out[ne] + c
            if c:
                out[ne] = c
            else:
                del out[ne]
        else:
            out[ne] = c
    return MPoly(ring, out)


def homogenize(f, degree, name, at=None):
    """Inverse of dehomogenize: insert a variable and pad every term to ``degree``."""
    d = f.total_degree()
    if degree < d:
        raise DegreeTooSmall(f"cannot homogenize degree {d} to {degree}")
    if at is None:
        at = f.ring.nvars
    names = f.ring.names[:at] + (name,) + f.ring.names[at:]
    ring = PolyRing(f.ring.coeff_ring, names)
    out = {}
    for e, c in f.terms.items():
        ne = e[:at] + (degree - sum(e),) + e[at:]
        out[ne] = c
    return MPoly(ring, out)


# ---------------------------------------------------------------------------
# resultants


def sylvester_matrix(f, g, var, formal_degs=None):
    if not f or not g:
        raise ZeroInput("resultant of a zero polynomial")
    df, dg = f.degree_in(var), g.degree_in(var)
    if formal_degs is not None:
        fdf, fdg = formal_degs
        if fdf < df or fdg < dg:
            raise InputError("formal degree below the actual degree")
        df, dg = fdf, fdg
    fc = [f.coeff_of(var, k) for k in range(df + 1)]
    gc = [g.coeff_of(var, k) for k in range(dg + 1)]
    size = df + dg
    zero = f.ring.zero()
    rows = []
    for i in range(dg):
        row = [zero] * size
        for j in range(df + 1):
            row[i + j] = fc[df - j]
        rows.append(row)
    for i in range(df):
        row = [zero] * size
        for j in range(dg + 1):
            row[i + j] = gc[dg - j]
        rows.append(row)
    return rows


def resultant(f, g, var, formal_degs=None):
    """Sylvester determinant with respect to one variable.

    With ``formal_degs=(df, dg)`` the matrix is built at the stated
    degrees even if leading coefficients vanish; this keeps the result a
    universal polynomial in the inputs' coefficients, so it commutes
    with any coefficient homomorphism (reduction mod p in particular).
    """
    rows = sylvester_matrix(f, g, var, formal_degs)
    if not rows:
        return f.ring.one()
    return linalg.det(rows, f.ring.zero(), f.ring.one())


def resultant_with_shear(f, g, var, rng, attempts=8):
    """Resultant that retries through seeded shears when elimination degenerates.

    Returns (resultant, shear) where shear is the LinearChange that was
    applied to both inputs (None when none was needed).  Raises
    ResultantDegenerate when every retry still gives the zero polynomial.
    """
    r = resultant(f, g, var)
    if r:
        return r, None
    ring = f.ring
    coeff = ring.coeff_ring
    others = [i for i in range(ring.nvars) if i != var]
    if len(others) < 2:
        raise ResultantDegenerate("no room to shear")
    for _ in range(attempts):
        i, j = rng.sample(others, 2)
        c = coeff.element(rng.randrange(1, getattr(coeff, "q", 2 ** 30)))
        rows = [[coeff.one if a == b else coeff.zero for b in range(ring.nvars)]
                for a in range(ring.nvars)]
        rows[i][j] = c
        shear = LinearChange(coeff, rows)
        r = resultant(shear.apply(f), shear.apply(g), var)
        if r:
            return r, shear
    raise ResultantDegenerate(f"resultant stayed zero after {attempts} shears")


def bilinear_triple_resultant(forms, w_var, v_var):
    """Exact resultant of three forms bilinear in two designated variables.

    Each form must be of shape a + b*W + c*V + d*W*V with a, b, c, d free
    of W and V.  The result is det(b,c,a)*det(d,c,b) - det(b,d,a)*det(d,c,a),
    where det(u,v,w) is the 3x3 determinant with rows (u_i, v_i, w_i);
    it vanishes exactly when the three forms share a zero on P^1 x P^1
    (points at infinity included) and carries no extraneous factor.
    """
    if len(forms) != 3:
        raise InputError("exactly three bilinear forms are required")
    ring = forms[0].ring
    cols = {"a": [], "b": [], "c": [], "d": []}
    for f in forms:
        if f.ring != ring:
            raise InputError("forms must share one ring")
        if f.degree_in(w_var) > 1 or f.degree_in(v_var) > 1:
            raise InputError("forms must be bilinear in the designated variables")
        pieces = {"a": {}, "b": {}, "c": {}, "d": {}}
        for e, coeff in f.terms.items():
            key = ("b" if e[w_var] else "") + ("c" if e[v_var] else "")
            key = {"": "a", "b": "b", "c": "c", "bc": "d"}[key]
            ne = list(e)
            ne[w_var] = 0
            ne[v_var] = 0
            pieces[key][tuple(ne)] = coeff
        for key in "abcd":
            cols[key].append(MPoly(ring, pieces[key]))

    def det3(u, v, w):
        rows = [[u[i], v[i], w[i]] for i in range(3)]
        return linalg.det(rows, ring.zero(), ring.one())

    a, b, c, d = cols["a"], cols["b"], cols["c"], cols["d"]
    return det3(b, c, a) * det3(d, c, b) - det3(b, d, a) * det3(d, c, a)


# ---------------------------------------------------------------------------
# bivariate gcd over a field


def _as_y_coeffs(f):
    """Bivariate MPoly -> list (little-endian in var 1) of upoly lists in var 0."""
    field = f.ring.coeff_ring
    dy = f.degree_in(1)
    dx = f.degree_in(0)
    out = [[field.zero] * (dx + 1) for _ in range(dy + 1)]
    for (i, j), c in f.terms.items():
        out[j][i] = c
    return [upoly.trim(row) for row in out]


def _from_y_coeffs(ring, rows):
    terms = {}
    for j, row in enumerate(rows):
        for i, c in enumerate(row):
            if c:
                terms[(i, j)] = c
    return MPoly(ring, terms)


def _ycontent(field, rows):
    g = []
    for row in rows:
        g = upoly.gcd(field, g, row)
        if upoly.degree(g) == 0:
            break
    return g


def _ydivide(field, rows, content):
    out = []
    for row in rows:
        q, r = upoly.divmod_(field, row, content)
        if r:
            raise ArithmeticError("content division left a remainder")
        out.append(q)
    return out


def _yprem(field, a_rows, b_rows):
    """Pseudo-remainder in the outer variable, fraction-free."""
    a = [list(r) for r in a_rows]
    da, db = len(a) - 1, len(b_rows) - 1
    lb = b_rows[db]
    for k in range(da - db, -1, -1):
        top = a[k + db]
        a = [upoly.mul(field, row, lb) for row in a]
        for j in range(db + 1):
            a[k + j] = upoly.sub(field, a[k + j], upoly.mul(field, top, b_rows[j]))
    while a and upoly.is_zero(a[-1]):
        a.pop()
    return a


def _pp_gcd(field, a_rows, b_rows):
    """gcd of two primitive polynomials in y over F_q[x]."""
    a, b = a_rows, b_rows
    if len(a) < len(b):
        a, b = b, a
    while True:
        if not b:
            return a
        if len(b) == 1:
            return [[field.one]]
        r = _yprem(field, a, b)
        if r:
            cont = _ycontent(field, r)
            r = _ydivide(field, r, cont)
        a, b = b, r


def bivariate_gcd(fs):
    """Monic gcd of bivariate polynomials over a field.

    Subresultant-style primitive PRS in the second variable with content
    splitting over F_q[x]; the result is normalized to leading
    coefficient 1 in graded lex.
    """
    fs = [f for f in fs if f]
    if not fs:
        raise AllZero("gcd of an all-zero family")
    ring = fs[0].ring
    field = ring.coeff_ring
    if ring.nvars != 2:
        raise InputError("bivariate_gcd expects two variables")
    g = None
    for f in fs:
        if g is None:
            g = f
            continue
        g = _gcd2(field, ring, g, f)
        if g.total_degree() == 0:
            break
    _, lcoeff = g.leading_term()
    return g.scale(lcoeff.inverse())


def _gcd2(field, ring, f, g):
    fr, gr = _as_y_coeffs(f), _as_y_coeffs(g)
    fcont, gcont = _ycontent(field, fr), _ycontent(field, gr)
    fpp, gpp = _ydivide(field, fr, fcont), _ydivide(field, gr, gcont)
    cont = upoly.gcd(field, fcont, gcont)
    pp = _pp_gcd(field, fpp, gpp)
    combined = [upoly.mul(field, row, cont) for row in pp]
    return _from_y_coeffs(ring, combined)


def divide_exact(f, g):
    """Quotient f/g over a field, or None when g does not divide f."""
    if not g:
        raise ZeroInput("division by the zero polynomial")
    ring = f.ring
    if not getattr(ring.coeff_ring, "is_field", False):
        raise InputError("exact division requires field coefficients")
    if not f:
        return ring.zero()
    ge, gc = g.leading_term()
    ginv = gc.inverse()
    rem = dict(f.terms)
    quo = {}
    while rem:
        re = max(rem, key=_glex_key)
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(d < 0 for d in diff):
            return None
        c = rem[re] * ginv
        quo[diff] = c
        for e2, c2 in g.terms.items():
            ne = tuple(a + b for a, b in zip(diff, e2))
            v = rem.get(ne, ring.coeff_ring.zero) - c * c2
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return MPoly(ring, quo)


# ---------------------------------------------------------------------------
# torus-level exponent changes (bivariate)


def monomial_map(f, mat, offset=None):
    """Apply an invertible exponent change e -> mat*e + offset to a bivariate f.

    ``mat`` is a 2x2 integer matrix with det +-1; when ``offset`` is None
    the shift making the support touch both axes is chosen, i.e. the
    result is the input composed with x <- x^m00 y^m10, y <- x^m01 y^m11
    times the unique monomial clearing denominators and common factors.
    Returns (result, used_offset).
    """
    (m00, m01), (m10, m11) = mat
    if abs(m00 * m11 - m01 * m10) != 1:
        raise InputError("exponent matrix must be unimodular")
    if f.ring.nvars != 2:
        raise InputError("monomial_map expects two variables")
    if not f:
        return f, (0, 0)
    mapped = {}
    for (i, j), c in f.terms.items():
        mapped[(m00 * i + m01 * j, m10 * i + m11 * j)] = c
    if offset is None:
        offset = (-min(e[0] for e in mapped), -min(e[1] for e in mapped))
    out = {}
    for (i, j), c in mapped.items():
        ni, nj = i + offset[0], j + offset[1]
        if ni < 0 or nj < 0:
            raise NotPolynomial("exponent change produced a negative exponent")
        out[(ni, nj)] = c
    return MPoly(f.ring, out), tuple(offset)


def derivative(f, var):
    ring = f.ring
    out = {}
    for e, c in f.terms.items():
        k = e[var]
        if not k:
            continue
        nc = c * ring.coeff_ring.element(k)
        if not nc:
            continue
        ne = list(e)
        ne[var] = k - 1
        ne = tuple(ne)
        if ne in out:
            nc = out[ne] + nc
            if nc:
                out[ne] = nc
            else:
                del out[ne]
        else:
            out[ne] = nc
    return MPoly(ring, out)
