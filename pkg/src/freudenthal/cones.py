"""Rational polyhedral cones of small rank, decided exactly.

Ambient rank stays <= 6 throughout, so membership and extremality reduce to
exact feasibility of small linear systems (Caratheodory: a point of the cone
is a nonnegative combination of some linearly independent generator subset).
No floating point, no LP solver.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .linalg import IntEchelon, integer_kernel, solve_rational


class DegeneratePolygonError(ValueError):
    """All points collinear; no two-dimensional normal fan exists."""


def primitive(v):
    """The primitive integer vector on the ray of v (v nonzero)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(int(x) // g for x in v)


def _rank(vectors, ncols):
    ech = IntEchelon(ncols)
    ech.add_rows(vectors)
    return ech.rank


class RationalCone:
    """Cone over a list of primitive integer generators in Z^rank."""

    __slots__ = ("rank", "generators")

    def __init__(self, rank, generators):
        self.rank = int(rank)
        if self.rank > 6:
            raise ValueError("ambient rank must be <= 6")
        seen = []
        for g in generators:
            if len(g) != self.rank:
                raise ValueError("generator has wrong length")
            p = primitive(g)
            if p not in seen:
                seen.append(p)
        self.generators = seen

    def __repr__(self):
        return f"RationalCone({self.rank}, {self.generators})"

    def dim(self):
        return _rank(self.generators, self.rank)

    def contains(self, v):
        return _in_cone(self.generators, v, self.rank)

    def is_pointed(self):
        return all(not _in_cone(self.generators, [-x for x in g], self.rank) for g in self.generators)


def _in_cone(gens, v, ncols):
    """Exact membership of v in cone(gens) via independent-subset feasibility."""
    v = [Fraction(x) for x in v]
    if not any(v):
        return True
    if not gens:
        return False
    r = _rank(gens, ncols)
    for size in range(1, min(r, len(gens)) + 1):
        for subset in combinations(gens, size):
            rows = [[Fraction(g[i]) for g in subset] for i in range(ncols)]
            x = solve_rational(rows, v)
            if x is not None and all(c >= 0 for c in x):
                return True
    return False


def extremal_rays(cone):
    """The generators not in the cone of the others, in input order."""
    gens = cone.generators
    out = []
    for i, g in enumerate(gens):
        others = [h for j, h in enumerate(gens) if j != i]
        if not _in_cone(others, g, cone.rank):
            out.append(g)
    return out


@dataclass(frozen=True)
class FacePosition:
    kind: str  # ON_EXTREMAL_RAY | RELATIVE_INTERIOR_OF_FACE | INTERIOR | OUTSIDE
    dim: int | None = None
    spanning: tuple = ()

    def describe(self):
        if self.kind == "RELATIVE_INTERIOR_OF_FACE":
            return f"relative interior of a {self.dim}-dimensional face spanned by {list(self.spanning)}"
        return self.kind


def _span_basis(gens, ncols):
    ech = IntEchelon(ncols)
    for g in gens:
        ech.add_row(g)
    return [ech.pivot_rows[c] for c in sorted(ech.pivot_rows)]


def facet_normals(cone):
    """Primitive inner normals of the facets (within the cone's linear span)."""
    gens = cone.generators
    n = cone.rank
    r = _rank(gens, n)
    if r < 2:
        return []
    basis = _span_basis(gens, n)  # r rows spanning the cone's linear span
    normals = []
    for subset in combinations(gens, r - 1):
        if _rank(list(subset), n) != r - 1:
            continue
        # normal = y^T basis with <normal, s> = 0 for s in subset
        rows = [[sum(s[k] * basis[j][k] for k in range(n)) for j in range(r)] for s in subset]
        kern = integer_kernel(rows)
        if len(kern) != 1:
            continue
        y = kern[0]
        normal = tuple(sum(y[j] * basis[j][k] for j in range(r)) for k in range(n))
        signs = [sum(normal[k] * g[k] for k in range(n)) for g in gens]
        if all(s >= 0 for s in signs):
            cand = primitive(normal)
        elif all(s <= 0 for s in signs):
            cand = primitive([-x for x in normal])
        else:
            continue
        if cand not in normals:
            normals.append(cand)
    return normals


def face_position(cone, v):
    """Classify v by the unique minimal face of the (pointed) cone containing it."""
    if not cone.is_pointed():
        raise ValueError("cone is not pointed")
    if not any(v):
        raise ValueError("zero vector is not classified")
    if not cone.contains(v):
        return FacePosition("OUTSIDE")
    gens = cone.generators
    n = cone.rank
    r = _rank(gens, n)
    if r == 1:
        return FacePosition("ON_EXTREMAL_RAY", 1, (gens[0],))
    tight = [
        nv
        for nv in facet_normals(cone)
        if sum(nv[k] * v[k] for k in range(n)) == 0
    ]
    if not tight:
        return FacePosition("INTERIOR", r, tuple(gens))
    face = [
        g
        for g in gens
        if all(sum(nv[k] * g[k] for k in range(n)) == 0 for nv in tight)
    ]
    k = _rank(face, n)
    if k == 1:
        return FacePosition("ON_EXTREMAL_RAY", 1, tuple(face))
    return FacePosition("RELATIVE_INTERIOR_OF_FACE", k, tuple(face))


# ---------------------------------------------------------------------------
# Lattice polygons and their normal fans
# ---------------------------------------------------------------------------


def convex_hull(points):
    """Counterclockwise hull vertices (monotone chain, strictly convex)."""
    pts = sorted({(int(x), int(y)) for x, y in points})
    if len(pts) < 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def lattice_polygon_normal_fan(points):
    """Primitive inward edge normals of conv(points), in ccw cyclic order.

    Raises DegeneratePolygonError when the points do not span the plane.
    """
    hull = convex_hull(points)
    if len(hull) < 3:
        raise DegeneratePolygonError("points are collinear")
    rays = []
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        dx, dy = q[0] - p[0], q[1] - p[1]
        rays.append(primitive((-dy, dx)))
    return rays


def minkowski_sum(points_a, points_b):
    return [(a[0] + b[0], a[1] + b[1]) for a in points_a for b in points_b]
