"""Regenerate src/gonalift/_derived_polygons.py from randomized sweeps.

For every construction whose support bound is established empirically,
run the mod-p half of the construction on a few hundred randomized
inputs, union the Newton polygons of the outputs, and freeze the vertex
lists.  Cross-checks per family: the union's interior lattice point
count must equal the genus the family realizes, and the monicized
x-degree must meet the documented bound.

Usage: python3 tools/derive_polygons.py [--runs N] [--write]
Without --write the derived table is printed but the module is left
untouched.
"""

from __future__ import annotations

import argparse
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from gonalift import ff, lift3, mpoly, pointsearch, polygon, verify
from gonalift.mpoly import PolyRing
from gonalift.pointsearch import ProjPoint

SEED = 20260825


def proj_ring(field):
    return PolyRing(field, ("X", "Y", "Z"))


def random_quartic(ring, rng, forced=None):
    """A random homogeneous quartic; ``forced`` pins chosen coefficients."""
    field = ring.coeff_ring
    terms = {}
    for a in range(5):
        for b in range(5 - a):
            e = (a, b, 4 - a - b)
            if forced is not None and e in forced:
                c = forced[e]
            else:
                c = field.random_element(rng)
            if c:
                terms[e] = c
    return ring.from_terms(terms.items())


def random_smooth_quartic(ring, rng, forced=None):
    while True:
        f = random_quartic(ring, rng, forced)
        if f.is_zero() or f.total_degree() != 4:
            continue
        if verify.plane_curve_is_smooth(f):
            return f


def random_scramble(field, rng):
    while True:
        rows = [[field.random_element(rng) for _ in range(3)] for _ in range(3)]
        try:
            return mpoly.LinearChange(field, rows)
        except Exception:
            continue


def nonzero(field, rng):
    while True:
        c = field.random_element(rng)
        if c:
            return c


def _transport(change, coords):
    """Image of a point of F under the scramble F <- F(M X): M^-1 * P."""
    field = change.coeff_ring
    from gonalift import linalg
    inv = linalg.inverse(field, change.rows)
    return ProjPoint(field, [sum((a * x for a, x in zip(row, coords)),
                                 field.zero) for row in inv])


# -- per-family sweeps: each yields one affine model per run ----------------


def sweep_point_routes(route, fields, runs, rng):
    """Routes driven by an arbitrary rational point of a random quartic."""
    out = []
    while len(out) < runs:
        field = fields[len(out) % len(fields)]
        F = random_smooth_quartic(proj_ring(field), rng)
        pts = pointsearch.points_on_plane_curve(F)
        if not pts:
            continue
        rng.shuffle(pts)
        if route == "two_point":
            got = None
            for p in pts[:16]:
                _mult, others = pointsearch.tangent_contact(F, p)
                if others:
                    second = sorted((q for q, _m in others),
                                    key=lambda t: t.key())[0]
                    got = lift3._route_model(F, "two_point", p, second)
                    break
            if got is None:
                continue
            out.append(got[0])
        else:
            out.append(lift3._route_model(F, route, pts[0], None)[0])
    return out


def sweep_forced(route, fields, runs, rng):
    """Flex/bitangent/hyperflex sweeps on curves built to contain one.

    The special configuration is pinned at the coordinate points with
    tangent line Z = 0, then hidden behind a random change of variables;
    the route must recover the placement from the scrambled curve.
    """
    out = []
    while len(out) < runs:
        field = fields[len(out) % len(fields)]
        ring = proj_ring(field)
        forced = {(0, 4, 0): field.zero, (1, 3, 0): field.zero,
                  (0, 3, 1): nonzero(field, rng)}
        if route == "flex":
            forced[(2, 2, 0)] = field.zero
            forced[(3, 1, 0)] = nonzero(field, rng)
            forced[(4, 0, 0)] = field.zero
        elif route == "bitangent":
            forced[(2, 2, 0)] = nonzero(field, rng)
            forced[(3, 1, 0)] = field.zero
            forced[(4, 0, 0)] = field.zero
            forced[(3, 0, 1)] = nonzero(field, rng)
        else:
            forced[(2, 2, 0)] = field.zero
            forced[(3, 1, 0)] = field.zero
            forced[(4, 0, 0)] = nonzero(field, rng)
        F0 = random_smooth_quartic(ring, rng, forced)
        change = random_scramble(field, rng)
        F = change.apply(F0)
        p = _transport(change, [field.zero, field.one, field.zero])
        second = None
        if route in ("flex", "bitangent"):
            second = _transport(change, [field.one, field.zero, field.zero])
        out.append(lift3._route_model(F, route, p, second)[0])
    return out


def hull_union(models):
    pts = set()
    for f in models:
        pts.update(f.support())
    return polygon.LatticePolygon(sorted(pts))


GENUS3_FAMILIES = [
    # name, sweep, expected interior count, monic deg_x bound (None: skip)
    ("g3_tangent", lambda fields, runs, rng:
        sweep_point_routes("tangent", fields, runs, rng), 3, 4),
    ("g3_two_point", lambda fields, runs, rng:
        sweep_point_routes("two_point", fields, runs, rng), 3, 3),
    ("g3_flex", lambda fields, runs, rng:
        sweep_forced("flex", fields, runs, rng), 3, 3),
    ("g3_bitangent", lambda fields, runs, rng:
        sweep_forced("bitangent", fields, runs, rng), 3, 3),
    ("g3_hyperflex", lambda fields, runs, rng:
        sweep_forced("hyperflex", fields, runs, rng), 3, 4),
]


def derive(runs):
    rng = random.Random(SEED)
    fields = [ff.FqField(31), ff.FqField(37), ff.FqField(5, 2)]
    table = {}
    for name, sweep, interior, monic_bound in GENUS3_FAMILIES:
        models = sweep(fields, runs, rng)
        poly = hull_union(models)
        got_interior = len(poly.interior_points())
        print(f"{name}: union {list(poly.vertices)} over {len(models)} runs, "
              f"interior {got_interior}")
        if got_interior != interior:
            raise SystemExit(f"{name}: interior {got_interior} != {interior}")
        if monic_bound is not None:
            worst = max(verify.make_monic(m, m.degree_in(1)).degree_in(0)
                        for m in models)
            print(f"{name}: worst monicized deg_x {worst} (bound {monic_bound})")
            if worst > monic_bound:
                raise SystemExit(f"{name}: monic deg_x {worst} > {monic_bound}")
        table[name] = [list(v) for v in poly.vertices]
    return table


HEADER = '''"""Support bounds established empirically; regenerated by tools/derive_polygons.py.

Each entry is the vertex list of the convex hull of every support seen
over a large randomized sweep of the corresponding construction, with the
construction's degree bounds as a cross-check.  Do not edit by hand.
"""

DERIVED = {
'''


def write_module(table):
    path = (pathlib.Path(__file__).resolve().parent.parent
            / "src" / "gonalift" / "_derived_polygons.py")
    existing = {}
    ns = {}
    exec(path.read_text(), ns)  # keep families derived by other sweeps
    existing.update(ns.get("DERIVED", {}))
    existing.update(table)
    body = "".join(
        f"    {name!r}: {[tuple(v) for v in existing[name]]!r},\n"
        for name in sorted(existing))
    path.write_text(HEADER + body + "}\n")
    print(f"wrote {path}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=250,
                    help="randomized runs per family (default 250)")
    ap.add_argument("--write", action="store_true",
                    help="rewrite src/gonalift/_derived_polygons.py")
    args = ap.parse_args(argv)
    table = derive(args.runs)
    if args.write:
        write_module(table)


if __name__ == "__main__":
    main()
