"""Support bounds established empirically; regenerated by tools/derive_polygons.py.

Each entry is the vertex list of the convex hull of every support seen
over a large randomized sweep of the corresponding construction, with the
construction's degree bounds as a cross-check.  Do not edit by hand.
"""

DERIVED = {
    'g3_bitangent': [(0, 0), (3, 0), (2, 2), (0, 3)],
    'g3_flex': [(0, 0), (3, 0), (3, 1), (0, 3)],
    'g3_hyperflex': [(0, 0), (4, 0), (0, 3)],
    'g3_tangent': [(0, 0), (4, 0), (2, 2), (0, 3)],
    'g3_two_point': [(0, 0), (3, 0), (3, 1), (2, 2), (0, 3)],
}
