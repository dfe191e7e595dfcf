"""Triangulations of 3-manifolds: Pachner moves, structures, exploration.

The package builds and searches the Pachner graph of one-vertex and ideal
triangulations.  Core object: :class:`pachner.triangulation.Triangulation`,
an immutable face-pairing of abstract tetrahedra.  On top of it live the
moves (:mod:`pachner.moves`), canonical signatures (:mod:`pachner.isosig`),
exact angle structures (:mod:`pachner.angles`), Thurston's gluing equations
(:mod:`pachner.geom`), normal surfaces with efficiency tests
(:mod:`pachner.nsurf`) and graph exploration with degree-one-free path
rewriting (:mod:`pachner.explorer`).  The ``tri`` command line tool exposes
all of it; see the README.
"""

from .catalog import figure_eight
from .isosig import decode, iso_sig
from .perm4 import Perm4
from .triangulation import Classification, Triangulation

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "Perm4",
    "Triangulation",
    "decode",
    "figure_eight",
    "iso_sig",
    "__version__",
]
