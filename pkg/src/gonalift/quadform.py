"""Quadratic forms over F_q (q odd): Gram matrices, rank and discriminant
data, and exact standardization to the model quadrics ZW - X^2 and XY - ZW.

All changes of variables returned here are verified by re-substitution
before they leave the module, so downstream pipelines can substitute
without re-checking.
"""

from __future__ import annotations

from . import linalg
from .errors import InputError, NotHyperbolic, WrongRank
from .mpoly import LinearChange


class QuadricForm:
    """Symmetric Gram matrix with Q(v) = v^T * gram * v."""

    __slots__ = ("field", "gram", "dim")

    def __init__(self, field, gram):
        self.field = field
        self.dim = len(gram)
        if self.dim not in (4, 5):
            raise InputError("quadric forms here live in P^3 or P^4")
        rows = [[field.element(c) if isinstance(c, int) else c for c in row]
                for row in gram]
        for row in rows:
            if len(row) != self.dim:
                raise InputError("Gram matrix must be square")
        for i in range(self.dim):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InputError("Gram matrix must be symmetric")
        self.gram = rows

    @classmethod
    def from_polynomial(cls, f):
        """Gram matrix of a homogeneous quadratic; exact reproduction."""
        ring = f.ring
        field = ring.coeff_ring
        n = ring.nvars
        if not f or not f.is_homogeneous() or f.total_degree() != 2:
            raise InputError("expected a nonzero homogeneous quadratic")
        half = (field.one + field.one).inverse()
        gram = [[field.zero for _ in range(n)] for _ in range(n)]
        for e, c in f.terms.items():
            idx = [k for k, v in enumerate(e) if v]
            if len(idx) == 1:
                gram[idx[0]][idx[0]] = c
            else:
                i, j = idx
                gram[i][j] = gram[j][i] = c * half
        return cls(field, gram)

    def polynomial(self, ring):
        if ring.nvars != self.dim:
            raise InputError("ring has the wrong number of variables")
        gens = ring.gens()
        out = ring.zero()
        for i in range(self.dim):
            for j in range(self.dim):
                out = out + gens[i] * gens[j] * self.gram[i][j]
        return out

    def value(self, vec):
        acc = self.field.zero
        for i, vi in enumerate(vec):
            for j, vj in enumerate(vec):
                acc = acc + vi * self.gram[i][j] * vj
        return acc

    def bilinear(self, u, v):
        acc = self.field.zero
        for i, ui in enumerate(u):
            for j, vj in enumerate(v):
                acc = acc + ui * self.gram[i][j] * vj
        return acc

    def transformed(self, rows):
        """Gram of Q(A*X), i.e. A^T * gram * A for column-substitution A."""
        at = linalg.transpose(rows)
        return QuadricForm(self.field, linalg.mat_mul(linalg.mat_mul(at, self.gram), rows))

    def det(self):
        return linalg.det_field(self.field, self.gram)

    def __repr__(self):
        return f"QuadricForm(dim={self.dim})"


def _chi(x):
    from .ff import chi2
    return chi2(x)


def discriminant_chi(q: QuadricForm) -> int:
    """chi_2 of the Gram determinant; the genus-4 discriminant invariant."""
    if q.dim != 4:
        raise InputError("the discriminant is defined for quadrics in P^3")
    return _chi(q.det())


def _congruence_diagonalize(q: QuadricForm):
    """Basis matrix A (columns = new basis) with A^T * gram * A diagonal."""
    field = q.field
    n = q.dim
    g = [row[:] for row in q.gram]
    basis = linalg.identity(field, n)

    def col_op(dst, src, factor):
        # e_dst += factor * e_src, applied symmetrically to g
        for i in range(n):
            g[i][dst] = g[i][dst] + factor * g[i][src]
        for i in range(n):
            g[dst][i] = g[dst][i] + factor * g[src][i]
        for i in range(n):
            basis[i][dst] = basis[i][dst] + factor * basis[i][src]

    def swap(a, b):
        for i in range(n):
            g[i][a], g[i][b] = g[i][b], g[i][a]
        for i in range(n):
            g[a][i], g[b][i] = g[b][i], g[a][i]
        for i in range(n):
            basis[i][a], basis[i][b] = basis[i][b], basis[i][a]

    for k in range(n):
        if not g[k][k]:
            pivot = next((i for i in range(k + 1, n) if g[i][i]), None)
            if pivot is not None:
                swap(k, pivot)
            else:
                # char != 2: adding a row with g[k][i] != 0 creates a pivot
                off = next((i for i in range(k + 1, n) if g[k][i]), None)
                if off is not None:
                    col_op(k, off, field.one)
        if not g[k][k]:
            continue
        inv = g[k][k].inverse()
        for i in range(k + 1, n):
            if g[k][i]:
                col_op(i, k, -(g[k][i] * inv))
    diag = [g[i][i] for i in range(n)]
    return basis, diag


def pseudo_det_chi(q: QuadricForm):
    """(chi_2 of the product of nonzero diagonal entries, rank).

    Well defined: congruent diagonalizations change the product by a
    square.  The zero form reports (0, 0).
    """
    _, diag = _congruence_diagonalize(q)
    nonzero = [d for d in diag if d]
    if not nonzero:
        return 0, 0
    prod = q.field.one
    for d in nonzero:
        prod = prod * d
    return _chi(prod), len(nonzero)


def _isotropic_ternary(field, d1, d2, d3):
    """(x, y, z) != 0 with d1 x^2 + d2 y^2 + d3 z^2 = 0, deterministic scan."""
    inv2 = d2.inverse()
    for i in range(field.q):
        x = field.element_at(i)
        rhs = -(d3 + d1 * x * x) * inv2
        if not rhs:
            return x, field.zero, field.one
        if _chi(rhs) == 1:
            from .ff import sqrt
            return x, sqrt(rhs), field.one
    raise ArithmeticError("ternary form over a finite field must be isotropic")


def _vec_combine(basis_cols, coeffs, field):
    n = len(basis_cols[0])
    out = [field.zero] * n
    for col, c in zip(basis_cols, coeffs):
        if not c:
            continue
        for i in range(n):
            out[i] = out[i] + c * col[i]
    return out


def _hyperbolic_pair(q: QuadricForm, e, candidates):
    """Complete an isotropic e to (e, f): Q(f) = 0, B(e, f) = 1."""
    field = q.field
    half = (field.one + field.one).inverse()
    for g in candidates:
        beg = q.bilinear(e, g)
        if beg:
            gp = [beg.inverse() * gi for gi in g]
            lam = q.value(gp) * half
            f = [gp[i] - lam * e[i] for i in range(len(e))]
            return f
    raise ArithmeticError("isotropic vector lies in the radical")


def _radical_basis(q: QuadricForm):
    return linalg.kernel_basis(q.field, q.gram)


def _verify(q, rows, target_gram, scalar):
    got = q.transformed(rows).gram
    n = q.dim
    for i in range(n):
        for j in range(n):
            if got[i][j] != scalar * target_gram[i][j]:
                raise ArithmeticError("standardization failed re-substitution")


def standardize_rank3(q: QuadricForm):
    """(LinearChange, scalar c) with Q(A*X) = c * (ZW - X^2).

    The X^2 slot is coordinate 0 and the Z, W slots are coordinates 2
    and dim-1; remaining coordinates span the radical.
    """
    field = q.field
    scaled = _model_multiple(q, _model_rank3_gram(field, q.dim))
    if scaled is not None:
        rows = linalg.identity(field, q.dim)
        return LinearChange(field, rows), scaled
    basis, diag = _congruence_diagonalize(q)
    supp = [i for i, d in enumerate(diag) if d]
    if len(supp) != 3:
        raise WrongRank(f"rank {len(supp)} form where rank 3 is required")
    cols = [[basis[i][j] for i in range(q.dim)] for j in supp]
    d1, d2, d3 = (diag[j] for j in supp)
    x, y, z = _isotropic_ternary(field, d1, d2, d3)
    e = _vec_combine(cols, (x, y, z), field)
    f = _hyperbolic_pair(q, e, cols)
    # the rank-3 complement of the hyperbolic plane carries the X^2 slot
    u = None
    for v in cols:
        cand = [v[i] - q.bilinear(v, f) * e[i] - q.bilinear(v, e) * f[i]
                for i in range(q.dim)]
        if q.value(cand):
            u = cand
            break
    if u is None:
        raise ArithmeticError("degenerate hyperbolic complement")
    scalar = -q.value(u)
    radical = _radical_basis(q)
    if len(radical) != q.dim - 3:
        raise WrongRank("radical dimension inconsistent with rank 3")
    half = (field.one + field.one).inverse()
    w_col = [scalar * half * fi for fi in f]
    slots = {0: u, 2: e, q.dim - 1: w_col}
    spare = iter(radical)
    columns = [slots.get(j) if j in slots else next(spare) for j in range(q.dim)]
    rows = [[columns[j][i] for j in range(q.dim)] for i in range(q.dim)]
    target = _model_rank3_gram(field, q.dim)
    _verify(q, rows, target, scalar)
    return LinearChange(field, rows), scalar


def standardize_rank4_hyperbolic(q: QuadricForm):
    """(LinearChange, scalar 1) with Q(A*X) = XY - ZW exactly.

    X, Y are coordinates 0, 1 and Z, W are coordinates 2 and dim-1.
    Raises NotHyperbolic when the form's discriminant sits in the wrong
    square class (the conjugate-pair case over F_{q^2}).
    """
    field = q.field
    if _model_multiple(q, _model_rank4_gram(field, q.dim)) == field.one:
        rows = linalg.identity(field, q.dim)
        return LinearChange(field, rows), field.one
    basis, diag = _congruence_diagonalize(q)
    supp = [i for i, d in enumerate(diag) if d]
    if len(supp) != 4:
        raise WrongRank(f"rank {len(supp)} form where rank 4 is required")
    prod = field.one
    for j in supp:
        prod = prod * diag[j]
    if _chi(prod) != 1:
        raise NotHyperbolic("pseudo-determinant is a non-square")
    cols = [[basis[i][j] for i in range(q.dim)] for j in supp]
    d1, d2, d3 = (diag[j] for j in supp[:3])
    x, y, z = _isotropic_ternary(field, d1, d2, d3)
    e1 = _vec_combine(cols[:3], (x, y, z), field)
    f1 = _hyperbolic_pair(q, e1, cols)
    # split off the first plane, diagonalize the orthogonal complement
    comp = []
    for v in cols:
        cand = [v[i] - q.bilinear(v, f1) * e1[i] - q.bilinear(v, e1) * f1[i]
                for i in range(q.dim)]
        if any(cand):
            comp.append(cand)
    # pairwise sums rescue the case where every projection is isotropic
    candidates = list(comp)
    for i in range(len(comp)):
        for j in range(i + 1, len(comp)):
            candidates.append([comp[i][k] + comp[j][k] for k in range(q.dim)])
    pivots = []
    for v in candidates:
        w = v[:]
        for u in pivots:
            coef = q.bilinear(w, u) * q.value(u).inverse()
            w = [w[i] - coef * u[i] for i in range(q.dim)]
        if q.value(w):
            pivots.append(w)
        if len(pivots) == 2:
            break
    if len(pivots) < 2:
        raise ArithmeticError("complement of a hyperbolic plane degenerated")
    a, b = q.value(pivots[0]), q.value(pivots[1])
    ratio = -a * b.inverse()
    if _chi(ratio) != 1:
        raise NotHyperbolic("second plane is anisotropic")
    from .ff import sqrt
    t = sqrt(ratio)
    e2 = [pivots[0][i] + t * pivots[1][i] for i in range(q.dim)]
    f2 = _hyperbolic_pair(q, e2, pivots)
    half = (field.one + field.one).inverse()
    y_col = [half * v for v in f1]
    w_col = [-half * v for v in f2]
    slots = {0: e1, 1: y_col, 2: e2, q.dim - 1: w_col}
    spare = iter(_radical_basis(q))
    columns = [slots.get(j) if j in slots else next(spare) for j in range(q.dim)]
    rows = [[columns[j][i] for j in range(q.dim)] for i in range(q.dim)]
    target = _model_rank4_gram(field, q.dim)
    _verify(q, rows, target, field.one)
    return LinearChange(field, rows), field.one


def _model_multiple(q, model):
    """Scalar c with gram == c * model, or None."""
    c = None
    for i in range(q.dim):
        for j in range(q.dim):
            if model[i][j]:
                if c is None:
                    c = q.gram[i][j] * model[i][j].inverse()
                elif q.gram[i][j] != c * model[i][j]:
                    return None
            elif q.gram[i][j]:
                return None
    return c if c else None


def _model_rank3_gram(field, dim):
    half = (field.one + field.one).inverse()
    g = [[field.zero] * dim for _ in range(dim)]
    g[0][0] = -field.one
    g[2][dim - 1] = g[dim - 1][2] = half
    return g


def _model_rank4_gram(field, dim):
    half = (field.one + field.one).inverse()
    g = [[field.zero] * dim for _ in range(dim)]
    g[0][1] = g[1][0] = half
    g[2][dim - 1] = g[dim - 1][2] = -half
    return g


def model_rank3_polynomial(ring):
    """ZW - X^2 in the given ring (Z, W at slots 2 and nvars-1)."""
    gens = ring.gens()
    return gens[2] * gens[ring.nvars - 1] - gens[0] * gens[0]


def model_rank4_polynomial(ring):
    """XY - ZW in the given ring (slots 0,1 and 2, nvars-1)."""
    gens = ring.gens()
    return gens[0] * gens[1] - gens[2] * gens[ring.nvars - 1]
