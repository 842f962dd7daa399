"""Smooth rational surfaces: toric fans in Z^2, three-point blowups of the
plane, Picard lattices with their intersection forms, finite group actions,
and Mori cones.

Two surface models are used side by side and cross-checked in the tests:

* toric -- a complete smooth fan with labelled rays; divisor classes live in
  the class group (rays modulo the two character relations);
* blowup -- the plane blown up in three points (general or collinear), with
  the classical basis L, E1, E2, E3 and diagonal intersection form.

The hexagon surface (the three-point toric blowup of the plane) carries the
boundary labelling D1 E3 D2 E1 D3 E2 in cyclic order, so that each line label
D_i is adjacent to exactly the two exceptional labels E_j, j != i.
"""

from fractions import Fraction
from itertools import product

from .cones import RationalCone, lattice_polygon_normal_fan, minkowski_sum, primitive
from .linalg import hnf_basis, integer_kernel, solve_rational


class InvalidCornerError(IndexError):
    """Blowup corner index outside the fan."""


class UnknownLabelError(KeyError):
    """No divisor class with that name on this surface."""


# ---------------------------------------------------------------------------
# fans
# ---------------------------------------------------------------------------


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _angular_key(v):
    # exact angular order: upper half-plane first, then by direction
    upper = v[1] > 0 or (v[1] == 0 and v[0] > 0)
    return 0 if upper else 1


def _ccw_sorted(rays):
    import functools

    def cmp(a, b):
        ka, kb = _angular_key(a), _angular_key(b)
        if ka != kb:
            return -1 if ka < kb else 1
        d = _det2(a, b)
        if d == 0:
            raise ValueError("two rays on the same line through the origin")
        return -1 if d > 0 else 1

    return sorted(rays, key=functools.cmp_to_key(cmp))


class Fan2D:
    """Complete smooth fan: primitive rays, strictly ccw, adjacent pairs
    spanning Z^2 (cyclically)."""

    __slots__ = ("rays",)

    def __init__(self, rays):
        rays = [primitive(r) for r in rays]
        if len(set(rays)) != len(rays):
            raise ValueError("duplicate rays")
        if len(rays) < 3:
            raise ValueError("a complete fan needs at least 3 rays")
        # strict ccw cyclic order: some rotation of the list is angular-sorted
        start = _ccw_sorted(rays)[0]
        k = rays.index(start)
        if _ccw_sorted(rays) != rays[k:] + rays[:k]:
            raise ValueError("rays are not in counterclockwise cyclic order")
        for i, v in enumerate(rays):
            w = rays[(i + 1) % len(rays)]
            if _det2(v, w) != 1:
                raise ValueError(f"adjacent rays {v}, {w} do not span Z^2")
        self.rays = tuple(rays)

    def __len__(self):
        return len(self.rays)

    def __eq__(self, other):
        if not isinstance(other, Fan2D):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def _canonical(self):
        k = self.rays.index(min(self.rays))
        return self.rays[k:] + self.rays[:k]

    def picard_rank(self):
        return len(self.rays) - 2

    def self_intersections(self):
        """D_i^2 from the wall relation v_{i-1} + v_{i+1} = -D_i^2 * v_i."""
        out = []
        n = len(self.rays)
        for i in range(n):
            s = tuple(
                self.rays[(i - 1) % n][t] + self.rays[(i + 1) % n][t] for t in range(2)
            )
            # (v_i, v_{i+1}) is a basis, and the v_{i+1}-coordinate of s is -1+1=0
            a = _det2(s, self.rays[(i + 1) % n])
            out.append(-a)
        return out


def fan_p2():
    return Fan2D([(1, 0), (0, 1), (-1, -1)])


def fan_hirzebruch(n):
    """P^1-bundle with a section of self-intersection -n."""
    return Fan2D([(1, 0), (0, 1), (-1, n), (0, -1)])


def toric_blowup(fan, corner):
    """Insert the primitive sum of the rays bounding the given 2D cone."""
    n = len(fan.rays)
    if not 0 <= corner < n:
        raise InvalidCornerError(f"corner {corner} not in 0..{n - 1}")
    v, w = fan.rays[corner], fan.rays[(corner + 1) % n]
    new = (v[0] + w[0], v[1] + w[1])
    rays = list(fan.rays)
    rays.insert(corner + 1, new)
    return Fan2D(rays)


def hexagon_fan():
    """The three successive corner blowups of the plane fan."""
    f = fan_p2()
    f = toric_blowup(f, 0)  # between (1,0) and (0,1)
    f = toric_blowup(f, 2)  # between (0,1) and (-1,-1)
    f = toric_blowup(f, 4)  # between (-1,-1) and (1,0)
    return f


def fans_isomorphic(f1, f2):
    """Search GL_2(Z) with entries bounded by the largest ray coordinate."""
    if len(f1) != len(f2):
        return False
    bound = max(
        1, max(abs(c) for r in f1.rays + f2.rays for c in r)
    )
    target = set(f2.rays)
    span = range(-bound, bound + 1)
    for a, b, c, d in product(span, repeat=4):
        if a * d - b * c not in (1, -1):
            continue
        image = {(a * x + b * y, c * x + d * y) for x, y in f1.rays}
        if image == target:
            return True
    return False


def normal_fan_in_ray_lattice(points):
    """Normal fan of conv(points), renormalized to the lattice its rays span.

    The inward normals may generate a finite-index sublattice of Z^2 (this
    happens when the monomial exponents do not generate the full character
    lattice); re-expressing them in a basis of that sublattice recovers the
    intrinsic fan of the orbit closure.
    """
    rays = lattice_polygon_normal_fan(points)
    basis = hnf_basis([list(r) for r in rays])
    if len(basis) != 2:
        raise ValueError("normal fan does not span the plane")
    new = []
    for r in rays:
        sol = solve_rational([[basis[0][0], basis[1][0]], [basis[0][1], basis[1][1]]], list(r))
        if sol is None or any(c.denominator != 1 for c in sol):
            raise AssertionError("ray not integral over the span basis")
        new.append((int(sol[0]), int(sol[1])))
    # a basis change of negative determinant mirrors the fan; re-sorting ccw
    # keeps a valid fan either way (and GL2(Z) equivalence is unaffected)
    return Fan2D(_ccw_sorted(new))


ORBIT_TRIANGLE = ((2, 0), (0, 2), (-2, -2))


def orbit_closure_surface():
    """The torus-orbit closure through the identity point, as a fan.

    Built from the squared-eigenvalue monomial exponents of the two plane
    factors; the Minkowski-sum polytope's normal fan, renormalized to its ray
    lattice, is required to be the hexagon (the three-point blowup).
    """
    t1 = ORBIT_TRIANGLE
    t2 = tuple((-x, -y) for x, y in t1)
    fan = normal_fan_in_ray_lattice(minkowski_sum(t1, t2))
    if len(fan) != 6 or not fans_isomorphic(fan, hexagon_fan()):
        raise AssertionError("orbit closure fan is not the hexagon")
    return fan


# ---------------------------------------------------------------------------
# surfaces with labelled Picard data
# ---------------------------------------------------------------------------

HEX_LABELS = ("D1", "E3", "D2", "E1", "D3", "E2")


class RationalSurface:
    """Common interface over the toric and blowup models."""

    def __init__(self, origin, basis_labels, classes, gram, boundary, negatives):
        self.origin = origin
        self.basis_labels = tuple(basis_labels)
        self._classes = dict(classes)
        self._gram = tuple(tuple(int(x) for x in row) for row in gram)
        self._boundary = tuple(boundary)
        self._negatives = tuple(negatives)

    @property
    def picard_rank(self):
        return len(self.basis_labels)

    def class_of(self, label):
        try:
            return self._classes[label]
        except KeyError:
            raise UnknownLabelError(f"{label!r} not on this surface") from None

    def labels(self):
        return sorted(self._classes)

    def boundary_labels(self):
        return self._boundary

    def gram(self):
        return self._gram

    def intersection(self, c1, c2):
        c1 = self._vec(c1)
        c2 = self._vec(c2)
        return sum(
            c1[i] * self._gram[i][j] * c2[j]
            for i in range(len(c1))
            for j in range(len(c2))
        )

    def _vec(self, c):
        if isinstance(c, str):
            return self.class_of(c)
        return tuple(int(x) for x in c)

    def linear_equivalent(self, c1, c2):
        return self._vec(c1) == self._vec(c2)

    def anticanonical(self):
        vec = [0] * self.picard_rank
        for label in self._boundary:
            for i, x in enumerate(self.class_of(label)):
                vec[i] += x
        return tuple(vec)

    def negative_curves(self):
        return [(label, self.class_of(label)) for label in self._negatives]

    def mori_cone(self):
        return RationalCone(self.picard_rank, [self.class_of(l) for l in self._negatives])


def _toric_classes(fan, labels, basis_labels):
    """Quotient Z^rays by the character relations, in the chosen label basis."""
    n = len(fan.rays)
    rel = [[fan.rays[i][0] for i in range(n)], [fan.rays[i][1] for i in range(n)]]
    pivot_labels = [l for l in labels if l not in basis_labels]
    pivots = [labels.index(l) for l in pivot_labels]
    # rows indexed by pivot ray: solve sum_t c_t rel[t][p] = div[p]
    pmat = [[rel[t][p] for t in range(2)] for p in pivots]
    det = pmat[0][0] * pmat[1][1] - pmat[0][1] * pmat[1][0]
    if abs(det) != 1:
        raise ValueError("complementary rays do not form a lattice basis")

    def reduce(div):
        c = solve_rational(pmat, [div[p] for p in pivots])
        out = []
        for lbl in basis_labels:
            i = labels.index(lbl)
            v = div[i] - c[0] * rel[0][i] - c[1] * rel[1][i]
            if Fraction(v).denominator != 1:
                raise AssertionError("non-integral class reduction")
            out.append(int(v))
        return tuple(out)

    classes = {}
    for i, lbl in enumerate(labels):
        div = [0] * n
        div[i] = 1
        classes[lbl] = reduce(div)
    return classes, reduce


def hexagonal_surface():
    """The torus-orbit closure with its boundary labelling and basis D1,E1,E2,E3."""
    fan = hexagon_fan()
    labels = list(HEX_LABELS)
    basis = ("D1", "E1", "E2", "E3")
    classes, _ = _toric_classes(fan, labels, basis)
    selfints = fan.self_intersections()
    n = len(labels)
    # Gram matrix on the basis classes via the toric intersection rules
    ray_pairing = [[0] * n for _ in range(n)]
    for i in range(n):
        ray_pairing[i][i] = selfints[i]
        ray_pairing[i][(i + 1) % n] = ray_pairing[(i + 1) % n][i] = 1

    def pair(lbl1, lbl2):
        return ray_pairing[labels.index(lbl1)][labels.index(lbl2)]

    gram = [[pair(a, b) for b in basis] for a in basis]
    surf = RationalSurface(
        "toric", basis, classes, gram, boundary=labels, negatives=labels
    )
    surf.fan = fan
    return surf


def blowup_p2_config(collinear):
    """The plane blown up in three points, general or collinear position.

    Negative curves come from the finite classification at three points:
    exceptional classes always; the pairwise line classes L - E_i - E_j only
    in general position (for collinear points the unique line through all
    three is the single class L - E1 - E2 - E3, and each L - E_i - E_j is
    represented by the reducible curve F0 + E_k, hence is not a negative
    prime class).
    """
    basis = ("L", "E1", "E2", "E3")
    ell = (1, 0, 0, 0)
    e = {i: tuple(-1 if j == i else 0 for j in range(1, 4)) for i in (1, 2, 3)}
    classes = {
        "L": ell,
        "E1": (0,) + e[1],
        "E2": (0,) + e[2],
        "E3": (0,) + e[3],
        "D1": (1, 0, -1, -1),
        "D2": (1, -1, 0, -1),
        "D3": (1, -1, -1, 0),
    }
    gram = [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    if collinear:
        classes["F0"] = (1, -1, -1, -1)
        for i in (1, 2, 3):
            classes[f"F{i}"] = classes[f"E{i}"]
        boundary = ("F0", "E1", "E2", "E3")
        negatives = ("F0", "E1", "E2", "E3")
    else:
        boundary = ("D1", "D2", "D3", "E1", "E2", "E3")
        negatives = ("E1", "E2", "E3", "D1", "D2", "D3")
    return RationalSurface("blowup", basis, classes, gram, boundary, negatives)


# ---------------------------------------------------------------------------
# Picard actions
# ---------------------------------------------------------------------------


class PicAction:
    """Integer isometry of a surface's Picard lattice, acting on columns."""

    __slots__ = ("surface", "label", "matrix")

    def __init__(self, surface, label, matrix):
        self.surface = surface
        self.label = label
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        n = surface.picard_rank
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix size does not match the Picard rank")
        det = _int_det(self.matrix)
        if det not in (1, -1):
            raise ValueError("matrix is not invertible over Z")
        if not self.is_isometry():
            raise ValueError(f"{label}: not an isometry of the intersection form")

    def apply(self, vec):
        vec = self.surface._vec(vec)
        return tuple(
            sum(self.matrix[i][j] * vec[j] for j in range(len(vec)))
            for i in range(len(vec))
        )

    def compose(self, other):
        n = self.surface.picard_rank
        m = tuple(
            tuple(
                sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        return PicAction(self.surface, f"{self.label}*{other.label}", m)

    def is_isometry(self):
        q = self.surface.gram()
        n = len(q)
        m = self.matrix
        for i in range(n):
            for j in range(n):
                v = sum(m[a][i] * q[a][b] * m[b][j] for a in range(n) for b in range(n))
                if v != q[i][j]:
                    return False
        return True

    def is_identity(self):
        n = self.surface.picard_rank
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )

    def __eq__(self, other):
        if not isinstance(other, PicAction):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def _int_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    out = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _int_det(minor)
        out += term if j % 2 == 0 else -term
    return out


def _action_from_label_map(surface, label, mapping):
    """Matrix of the Pic map sending each basis label to the named class."""
    cols = [surface.class_of(mapping[lbl]) for lbl in surface.basis_labels]
    n = surface.picard_rank
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    return PicAction(surface, label, matrix)


def s3_pic_actions(surface=None):
    """The six permutation actions on the hexagon surface, D_i -> D_p(i), E_i -> E_p(i)."""
    from .jordan import S3

    surface = surface or hexagonal_surface()
    out = []
    for p in S3:
        mapping = {}
        for i in range(3):
            mapping[f"D{i + 1}"] = f"D{p[i] + 1}"
            mapping[f"E{i + 1}"] = f"E{p[i] + 1}"
        out.append(_action_from_label_map(surface, f"sigma{p}", mapping))
    return out


def theta_pic_action(surface=None):
    """The involution exchanging D_i and E_i on the hexagon surface."""
    surface = surface or hexagonal_surface()
    mapping = {}
    for i in (1, 2, 3):
        mapping[f"D{i}"] = f"E{i}"
        mapping[f"E{i}"] = f"D{i}"
    return _action_from_label_map(surface, "theta", mapping)


def invariant_sublattice(actions):
    """(rank, HNF basis) of the joint fixed lattice of the given actions.

    The kernel of the stacked (M - Id) blocks is saturated by construction,
    so the basis generates the full invariant lattice over Z.
    """
    if not actions:
        raise ValueError("need at least one action")
    n = actions[0].surface.picard_rank
    rows = []
    for act in actions:
        for i in range(n):
            rows.append([act.matrix[i][j] - (1 if i == j else 0) for j in range(n)])
    basis = integer_kernel(rows)
    return len(basis), basis
