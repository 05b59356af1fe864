"""Independent reference computations used only by the tests.

Extreme rays are recomputed in floating point with qhull (via scipy) on the
slice of a pointed cone by an affine hyperplane, so nothing here shares code
with the exact double description engine.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import linprog
from scipy.spatial import HalfspaceIntersection


def float_extreme_rays(normals, tol=1e-7):
    """Unit extreme rays of the pointed full-dimensional cone ``{x : A x >= 0}``."""
    A = np.array(normals, dtype=float)
    dim = A.shape[1]
    f = A.sum(axis=0)  # strictly positive on the cone minus the origin
    x0 = f / f.dot(f)
    B = null_space(f.reshape(1, -1))  # dim x (dim-1)
    # A (x0 + B z) >= 0  <=>  (-A B) z + (-A x0) <= 0
    M = -A @ B
    b = -A @ x0
    halfspaces = np.hstack([M, b.reshape(-1, 1)])
    norms = np.linalg.norm(M, axis=1)
    # Chebyshev centre: max r s.t. M z + r |M_i| <= -b
    c = np.zeros(dim)
    c[-1] = -1.0
    res = linprog(c, A_ub=np.hstack([M, norms.reshape(-1, 1)]), b_ub=-b,
                  bounds=[(None, None)] * (dim - 1) + [(0, None)])
    assert res.status == 0 and res.x[-1] > tol, "cone has empty interior"
    hs = HalfspaceIntersection(halfspaces, res.x[:-1])
    pts = x0 + hs.intersections @ B.T
    rays = []
    for p in pts:
        u = p / np.linalg.norm(p)
        if not any(np.allclose(u, r, atol=1e-6) for r in rays):
            rays.append(u)
    return rays


def unit(v):
    a = np.array(v, dtype=float)
    return a / np.linalg.norm(a)


def same_ray_sets(exact_rays, float_rays, atol=1e-6):
    if len(exact_rays) != len(float_rays):
        return False
    us = [unit(r) for r in exact_rays]
    return all(any(np.allclose(u, f, atol=atol) for f in float_rays) for u in us)


def is_extreme(normals, v, dim, lineality_dim=0):
    """Active-set rank test: v is extreme iff its active normals have rank dim-1-lin."""
    active = [n for n in normals if sum(a * b for a, b in zip(n, v)) == 0]
    if not active:
        return dim - 1 - lineality_dim == 0
    return np.linalg.matrix_rank(np.array(active, dtype=float)) == dim - 1 - lineality_dim


def brute_force_rays(normals, dim):
    """Extreme rays by solving every (dim-1)-subset of normals; tiny inputs only."""
    from fractions import Fraction
    from morikit.exact import kernel_basis, primitive

    found = set()
    for S in combinations(normals, dim - 1):
        K = kernel_basis(list(S), dim)
        if len(K) != 1:
            continue
        for sgn in (1, -1):
            v = tuple(sgn * x for x in K[0])
            if all(sum(Fraction(a) * b for a, b in zip(n, v)) >= 0 for n in normals):
                found.add(primitive(v))
    return sorted(found)
