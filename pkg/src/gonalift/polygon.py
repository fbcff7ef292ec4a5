"""Newton polygon combinatorics.

Lattice polygons here are convex hulls of polynomial supports in Z^2 and
may degenerate to a segment or a single point.  Interior lattice-point
counts give the genus bound of a nondegenerate curve, and the lattice
width bounds its gonality; both queries run by exhaustive enumeration,
which is exact and instant at these sizes.
"""

from __future__ import annotations

import math

from .errors import InputError, ZeroInput
from . import mpoly


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class LatticePolygon:
    """Convex hull of lattice points, vertices counterclockwise and minimal."""

    __slots__ = ("vertices",)

    def __init__(self, points):
        pts = sorted({(int(x), int(y)) for x, y in points})
        if not pts:
            raise InputError("a polygon needs at least one point")
        if len(pts) == 1:
            self.vertices = (pts[0],)
            return
        # monotone chain; strict turns only, so no collinear triples survive
        lower = []
        for p in pts:
            while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        upper = []
        for p in reversed(pts):
            while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        hull = lower[:-1] + upper[:-1]
        if len(hull) == 2 and hull[0] == hull[1]:
            hull = hull[:1]
        self.vertices = tuple(hull)

    def __eq__(self, other):
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    def is_degenerate(self):
        return len(self.vertices) < 3

    def bounding_box(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def double_area(self):
        vs = self.vertices
        if len(vs) < 3:
            return 0
        acc = 0
        for i in range(len(vs)):
            x0, y0 = vs[i]
            x1, y1 = vs[(i + 1) % len(vs)]
            acc += x0 * y1 - x1 * y0
        return acc

    def edges(self):
        vs = self.vertices
        if len(vs) == 1:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains_point(self, pt):
        pt = (int(pt[0]), int(pt[1]))
        vs = self.vertices
        if len(vs) == 1:
            return pt == vs[0]
        if len(vs) == 2:
            a, b = vs
            if _cross(a, b, pt) != 0:
                return False
            return (min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))
        return all(_cross(a, b, pt) >= 0 for a, b in self.edges())

    def strictly_contains_point(self, pt):
        vs = self.vertices
        if len(vs) < 3:
            return False
        return all(_cross(a, b, pt) > 0 for a, b in self.edges())

    def contains(self, other):
        return all(self.contains_point(v) for v in other.vertices)

    def interior_points(self):
        """All strictly interior lattice points, sorted."""
        if self.is_degenerate():
            return []
        x0, y0, x1, y1 = self.bounding_box()
        out = []
        for x in range(x0 + 1, x1):
            for y in range(y0 + 1, y1):
                if self.strictly_contains_point((x, y)):
                    out.append((x, y))
        return out

    def boundary_points(self):
        """All lattice points on the boundary."""
        out = set()
        if len(self.vertices) == 1:
            return [self.vertices[0]]
        for a, b in self.edges():
            out.update(edge_lattice_points(a, b))
        return sorted(out)

    def lattice_points(self):
        x0, y0, x1, y1 = self.bounding_box()
        return [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)
                if self.contains_point((x, y))]

    def spread(self, direction):
        a, b = direction
        vals = [a * x + b * y for x, y in self.vertices]
        return max(vals) - min(vals)

    def lattice_width(self, radius=None):
        """(width, primitive direction); ties prefer (0,1), then (1,0)."""
        x0, y0, x1, y1 = self.bounding_box()
        if radius is None:
            radius = max(x1 - x0, y1 - y0, 1)
        best = None
        for b in range(0, radius + 1):
            for a in range(-radius, radius + 1):
                if b == 0 and a <= 0:
                    continue
                if math.gcd(abs(a), b) != 1:
                    continue
                w = self.spread((a, b))
                pref = 0 if (a, b) == (0, 1) else (1 if (a, b) == (1, 0) else 2)
                key = (w, pref, b, abs(a), -a)
                if best is None or key < best[0]:
                    best = (key, w, (a, b))
        return best[1], best[2]

    def translate(self, offset):
        dx, dy = offset
        return LatticePolygon([(x + dx, y + dy) for x, y in self.vertices])

    def apply_unimodular(self, mat, offset=(0, 0)):
        (m00, m01), (m10, m11) = mat
        if abs(m00 * m11 - m01 * m10) != 1:
            raise InputError("matrix must be unimodular")
        return LatticePolygon([(m00 * x + m01 * y + offset[0],
                                m10 * x + m11 * y + offset[1])
                               for x, y in self.vertices])

    def to_json(self):
        return {"vertices": [list(v) for v in self.vertices]}


def edge_lattice_points(a, b):
    """Lattice points on the closed segment [a, b]."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    g = math.gcd(abs(dx), abs(dy))
    if g == 0:
        return [a]
    sx, sy = dx // g, dy // g
    return [(a[0] + k * sx, a[1] + k * sy) for k in range(g + 1)]


def newton_polygon(f) -> LatticePolygon:
    """Convex hull of the support of a bivariate polynomial."""
    if not f:
        raise ZeroInput("the zero polynomial has no Newton polygon")
    if f.ring.nvars != 2:
        raise InputError("newton_polygon expects a bivariate polynomial")
    return LatticePolygon(f.terms.keys())


def interior_lattice_points(p: LatticePolygon):
    return p.interior_points()


def baker_bound(f) -> int:
    """Number of interior lattice points of the Newton polygon."""
    return len(newton_polygon(f).interior_points())


def lattice_width(p: LatticePolygon):
    return p.lattice_width()


def _complete_unimodular(a, b):
    """Unimodular matrix with second row (a, b) and smallest first row."""
    g, x, y = _xgcd(b, a)
    if g != 1:
        raise InputError("direction is not primitive")
    # first row is (x, -y) + k*(a, b) up to sign; pick the tamest one
    best = None
    span = abs(x) + abs(y) + 2
    for base in ((x, -y), (-x, y)):
        for k in range(-span, span + 1):
            row = (base[0] + k * a, base[1] + k * b)
            key = (abs(row[0]) + abs(row[1]), -row[0], -row[1])
            if best is None or key < best[0]:
                best = (key, row)
    return (best[1], (a, b))


def normalize_to_strip(f):
    """Exponent change realizing the lattice width as deg_y.

    Returns (g, (matrix, offset)) where g = monomial_map(f)[0] has
    deg_y(g) = lattice width of f's polygon and support touching both
    axes; the matrix is unimodular, so the change is invertible on the
    torus.  An already-normal f gets the identity matrix.
    """
    poly = newton_polygon(f)
    w, (a, b) = poly.lattice_width()
    mat = _complete_unimodular(a, b)
    out, offset = mpoly.monomial_map(f, mat)
    assert out.degree_in(1) == w
    return out, (mat, offset)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# exceptional classes: unimodular equivalence with 2*Upsilon and d*Sigma

UPSILON = ((-1, -1), (1, 0), (0, 1))


def _try_match_triangles(p_verts, t_verts):
    """Affine unimodular map sending triangle p onto triangle t, or None."""
    for orient in (1, -1):
        tv = t_verts if orient == 1 else tuple(reversed(t_verts))
        for rot in range(3):
            tt = tv[rot:] + tv[:rot]
            e1 = (p_verts[1][0] - p_verts[0][0], p_verts[1][1] - p_verts[0][1])
            e2 = (p_verts[2][0] - p_verts[0][0], p_verts[2][1] - p_verts[0][1])
            f1 = (tt[1][0] - tt[0][0], tt[1][1] - tt[0][1])
            f2 = (tt[2][0] - tt[0][0], tt[2][1] - tt[0][1])
            det = e1[0] * e2[1] - e1[1] * e2[0]
            if det == 0:
                continue
            # solve M*e1 = f1, M*e2 = f2 over Q, demand integrality and det +-1
            m00 = f1[0] * e2[1] - f2[0] * e1[1]
            m01 = f2[0] * e1[0] - f1[0] * e2[0]
            m10 = f1[1] * e2[1] - f2[1] * e1[1]
            m11 = f2[1] * e1[0] - f1[1] * e2[0]
            if any(v % det for v in (m00, m01, m10, m11)):
                continue
            mat = ((m00 // det, m01 // det), (m10 // det, m11 // det))
            if abs(mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) != 1:
                continue
            off = (tt[0][0] - mat[0][0] * p_verts[0][0] - mat[0][1] * p_verts[0][1],
                   tt[0][1] - mat[1][0] * p_verts[0][0] - mat[1][1] * p_verts[0][1])
            image = LatticePolygon([
                (mat[0][0] * x + mat[0][1] * y + off[0],
                 mat[1][0] * x + mat[1][1] * y + off[1]) for x, y in p_verts])
            if image.vertices == LatticePolygon(t_verts).vertices:
                return mat, off
    return None


def detect_exceptional(p: LatticePolygon):
    """('two_upsilon', None), ('d_sigma', d), or None.

    Both exceptional families are triangles, so equivalence is decided
    by explicit vertex matching over all affine unimodular maps between
    triangles, after cheap invariant prefilters.
    """
    if len(p.vertices) != 3:
        return None
    area2 = abs(p.double_area())
    two_upsilon = tuple((2 * x, 2 * y) for x, y in UPSILON)
    if area2 == 12 and _try_match_triangles(p.vertices, two_upsilon):
        return ("two_upsilon", None)
    d = math.isqrt(area2)
    if d * d == area2 and d >= 2:
        sigma = ((0, 0), (d, 0), (0, d))
        if _try_match_triangles(p.vertices, sigma):
            return ("d_sigma", d)
    return None


# ---------------------------------------------------------------------------
# named target polygons

class TargetPolygon:
    """A named support bound guaranteed by one lifting construction."""

    __slots__ = ("name", "polygon", "derived")

    def __init__(self, name, vertices, derived=False):
        self.name = name
        self.polygon = LatticePolygon(vertices)
        self.derived = derived

    def contains_support(self, f):
        return self.polygon.contains(newton_polygon(f))

    def __repr__(self):
        return f"TargetPolygon({self.name!r}, {list(self.polygon.vertices)})"


_FIXED_TARGETS = {
    # genus 3, plane quartics
    "g3_plain": [(0, 0), (4, 0), (0, 4)],
    "g3_point": [(0, 0), (4, 0), (1, 3), (0, 3)],
    # genus 4, quadric [cap] cubic in P^3
    "g4_cone": [(0, 0), (6, 0), (4, 1), (2, 2), (0, 3)],
    "g4_quadric": [(0, 0), (3, 0), (3, 3), (0, 3)],
    "g4_nonsplit": [(0, 0), (6, 0), (2, 4), (0, 4)],
    # genus 5, trigonal on the (1,2) scroll
    "g5_trig_standard": [(0, 0), (5, 0), (2, 3), (0, 3)],
    # genus 5, intersection of three quadrics in P^4
    "g5_cone": [(0, 0), (8, 0), (6, 1), (4, 2), (2, 3), (0, 4)],
    "g5_quadric": [(0, 0), (4, 0), (4, 4), (0, 4)],
    # plane quartic fallback for pointless curves (gonality 4)
    "g3_pointless": [(0, 0), (4, 0), (0, 4)],
}


def general_trigonal_target(a, b):
    """Support bound for a trigonal curve with scroll type (a, b), a <= b."""
    if a > b or a < 0:
        raise InputError("scroll type must satisfy 0 <= a <= b")
    return TargetPolygon(
        f"trig_scroll_{a}_{b}",
        [(0, 0), (2 * b + 2 - a, 0), (2 * a + 2 - b, 3), (0, 3)],
    )


def target(name) -> TargetPolygon:
    if name in _FIXED_TARGETS:
        return TargetPolygon(name, _FIXED_TARGETS[name])
    from . import _derived_polygons
    if name in _derived_polygons.DERIVED:
        return TargetPolygon(name, _derived_polygons.DERIVED[name], derived=True)
    raise InputError(f"unknown target polygon {name!r}")


def known_targets():
    from . import _derived_polygons
    return sorted(set(_FIXED_TARGETS) | set(_derived_polygons.DERIVED))
