"""Thurston's gluing equations and a damped Gauss-Newton shape solver.

Each tetrahedron carries a complex shape z attached to opposite-edge pair 0
(edges 01 and 23); pairs 1 and 2 carry the complex dihedral angles
(z-1)/z and 1/(1-z).  An edge equation requires the product of the angles
of the corners identified into that edge to equal 1; the solver works on
the logarithmic form, where each edge's corner logarithms must sum to
2 pi i (the hidden angle-sum condition of the product form).

The solver certifies a *geometric candidate*: a positively oriented
solution of the edge equations.  Completeness of the resulting hyperbolic
structure (the cusp equations) is not checked, and every report says so.
"""

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateShape, HasBoundaryFaces, NotIdeal
from .triangulation import Classification, OPPOSITE_PAIR

__all__ = [
    "REGULAR_SHAPE",
    "GluingSystem",
    "GeometricVerdict",
    "gluing_system",
    "angle_factor",
    "evaluate",
    "solve",
    "is_geometric_candidate",
]

# Shape of the regular ideal tetrahedron, the default starting point.
REGULAR_SHAPE = 0.5 + (3 ** 0.5 / 2) * 1j

_DEGENERACY_TOL = 1e-12
_TWO_PI_I = 2j * cmath.pi


@dataclass(frozen=True)
class GluingSystem:
    """Corner data of the edge equations: per edge class, the incident
    (tetrahedron, pair-type) corners; pair-type 0 carries z, 1 carries
    (z-1)/z, 2 carries 1/(1-z)."""

    n: int
    corners: tuple  # per edge: tuple of (tet, pair type)


@dataclass(frozen=True)
class GeometricVerdict:
    """Outcome of a shape solve.

    residual is the maximum product-form defect max_e |prod - 1|.  The
    positively_oriented flag asks for all three complex angles of every
    tetrahedron to lie in the open upper half-plane.  Completeness is not
    examined; a positively oriented solution certifies a geometric
    candidate only.
    """

    solved: bool
    shapes: tuple
    residual: float
    positively_oriented: bool
    iterations: int
    message: str = ""


def gluing_system(tri):
    """Corner lists of the edge equations of an ideal triangulation."""
    if not tri.is_closed():
        raise HasBoundaryFaces("gluing equations need all faces glued")
    if tri.classify() is not Classification.IDEAL:
        raise NotIdeal("gluing equations need an ideal triangulation")
    corners = tuple(
        tuple((w.tet, OPPOSITE_PAIR[w.edge_index]) for w in ec.wedges)
        for ec in tri.skeleton.edges
    )
    return GluingSystem(tri.n, corners)


def angle_factor(z, pair):
    """The complex dihedral angle of pair 0, 1 or 2 at shape z."""
    if pair == 0:
        return z
    if pair == 1:
        return (z - 1.0) / z
    return 1.0 / (1.0 - z)


def _check_shapes(shapes, n):
    z = np.asarray(shapes, dtype=complex)
    if z.shape != (n,):
        raise DegenerateShape("expected %d shapes, got %r" % (n, np.shape(shapes)))
    if np.any(np.abs(z) < _DEGENERACY_TOL) or np.any(np.abs(z - 1.0) < _DEGENERACY_TOL):
        raise DegenerateShape("a shape parameter is within 1e-12 of 0 or 1")
    return z


def evaluate(tri, shapes, system=None):
    """Product-form residuals |prod - 1| and log-form defects per edge."""
    system = system or gluing_system(tri)
    z = _check_shapes(shapes, system.n)
    residuals, defects = [], []
    for corners in system.corners:
        prod = 1.0 + 0.0j
        logsum = 0.0 + 0.0j
        for t, pair in corners:
            mu = angle_factor(z[t], pair)
            prod *= mu
            logsum += cmath.log(mu)
        residuals.append(abs(prod - 1.0))
        defects.append(logsum - _TWO_PI_I)
    return residuals, defects


def _log_system(system, z):
    """Log-form residual vector and Jacobian at shapes z."""
    ne = len(system.corners)
    F = np.zeros(ne, dtype=complex)
    J = np.zeros((ne, system.n), dtype=complex)
    for e, corners in enumerate(system.corners):
        total = 0.0 + 0.0j
        for t, pair in corners:
            zt = z[t]
            total += cmath.log(angle_factor(zt, pair))
            if pair == 0:
                J[e, t] += 1.0 / zt
            elif pair == 1:
                J[e, t] += 1.0 / (zt - 1.0) - 1.0 / zt
            else:
                J[e, t] += 1.0 / (1.0 - zt)
        F[e] = total - _TWO_PI_I
    return F, J


def _degenerate(z):
    return bool(
        np.any(np.abs(z) < _DEGENERACY_TOL) or np.any(np.abs(z - 1.0) < _DEGENERACY_TOL)
    )


def _is_positively_oriented(z):
    for zt in z:
        for pair in range(3):
            if angle_factor(zt, pair).imag <= 0:
                return False
    return True


def solve(tri, init=None, tol=1e-10, max_iter=100):
    """Damped Gauss-Newton on the log-form system.

    Starts from the regular ideal shape unless an initial vector is given.
    Convergence means the product-form residual drops below tol.  On a
    degenerate iterate the solve restarts once from a jittered start; a
    failure to converge is reported in the verdict, not raised.
    """
    system = gluing_system(tri)
    if init is None:
        start = np.full(system.n, REGULAR_SHAPE, dtype=complex)
    else:
        start = _check_shapes(init, system.n)

    def attempt(z):
        iterations = 0
        F, J = _log_system(system, z)
        for iterations in range(1, max_iter + 1):
            residual = max(evaluate(tri, z, system)[0])
            if residual < tol:
                return z, residual, iterations - 1, None
            step, *_ = np.linalg.lstsq(J, -F, rcond=None)
            norm0 = np.linalg.norm(F)
            lam = 1.0
            while True:
                z2 = z + lam * step
                if not _degenerate(z2):
                    F2, J2 = _log_system(system, z2)
                    if np.linalg.norm(F2) < norm0:
                        break
                lam *= 0.5
                if lam < 2.0 ** -30:
                    return z, residual, iterations, "stalled: no descent step"
            z, F, J = z2, F2, J2
        residual = max(evaluate(tri, z, system)[0])
        if residual < tol:
            return z, residual, max_iter, None
        return z, residual, max_iter, "did not converge in %d iterations" % max_iter

    z, residual, iterations, failure = attempt(start.copy())
    if failure and init is None:
        rng = np.random.default_rng(8128)
        jitter = 0.05 * (rng.standard_normal(system.n) + 1j * rng.standard_normal(system.n))
        z2, r2, it2, failure2 = attempt(start + jitter)
        if failure2 is None or r2 < residual:
            z, residual, iterations, failure = z2, r2, it2, failure2

    solved = failure is None
    return GeometricVerdict(
        solved=solved,
        shapes=tuple(complex(v) for v in z),
        residual=float(residual),
        positively_oriented=solved and _is_positively_oriented(z),
        iterations=iterations,
        message=failure or "edge equations solved (completeness not checked)",
    )


def is_geometric_candidate(tri, tol=1e-10, max_iter=100):
    """True when the edge equations admit a positively oriented solution
    reachable by the solver.  NotIdeal inputs raise, they are not False."""
    verdict = solve(tri, tol=tol, max_iter=max_iter)
    return verdict.solved and verdict.positively_oriented
