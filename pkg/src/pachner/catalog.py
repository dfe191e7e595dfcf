"""A small catalog of named triangulations used throughout the package.

Each entry was found by exhaustive search over gluing tables of one or two
tetrahedra and is pinned here by its canonical signature.  The certifying
invariants (edge degrees, vertex links, first homology of the quotient
complex) are recorded next to each entry and re-checked by the test suite;
``demos/07_finding_the_catalog.py`` reruns the search.
"""

from .isosig import decode

__all__ = ["CATALOG", "figure_eight", "get"]

# Canonical signatures of the catalog triangulations.
CATALOG = {
    # The two-tetrahedron ideal triangulation of the figure-eight knot
    # complement: two edge classes of degree 6, one torus-link vertex,
    # trivial H1 of the quotient (the meridian generates H1 of the open
    # manifold, so coning the cusp kills it).  Its census sibling below has
    # Z/5 instead, which is what tells them apart.
    "fig8": "2|1/0123,1/1203,1/1032,1/3021;0/0123,0/1320,0/2013,0/1032",
    # The sister of the figure-eight complement (a knot complement in the
    # lens space L(5,1)): same edge degrees and torus link, H1(quotient) = Z/5.
    "fig8_sister": "2|1/0123,1/0231,1/3210,1/2013;0/0123,0/3210,0/0312,0/1203",
    # A two-tetrahedron one-vertex 3-sphere: sphere link, trivial H1.
    "s3_two_tet": "2|0/1023,0/1023,1/0123,1/2301;1/3012,0/2301,0/0123,1/1230",
    # The one-tetrahedron one-vertex 3-sphere; note its degree-one edge.
    "s3_one_tet": "1|0/1023,0/1023,0/1230,0/3012",
    # The Gieseking manifold: one ideal tetrahedron, Klein-bottle link.
    "gieseking": "1|0/1203,0/2013,0/0231,0/0312",
    # One-tetrahedron lens spaces, H1 = Z/4 and Z/5.
    "lens_4_1": "1|0/1230,0/3012,0/1230,0/3012",
    "lens_5_2": "1|0/1230,0/3012,0/2031,0/1302",
    # A two-tetrahedron one-vertex S2 x S1 (H1 = Z); it carries a
    # non-separating normal sphere, so it fails 0-efficiency.
    "s2xs1": "2|0/1230,0/3012,1/0123,1/0123;1/1230,1/3012,0/0123,0/0123",
}


def get(name):
    """A fresh Triangulation for a catalog entry."""
    return decode(CATALOG[name])


def figure_eight():
    """The two-tetrahedron figure-eight knot complement."""
    return get("fig8")
