"""Root systems A1, A2, C3, F4 and exact weight multiplicities.

Realizations are the standard orthonormal-coordinate models over Q (the A2
model lives in the sum-zero hyperplane of Q^3), with the bilinear form scaled
so long roots have squared length 2.  The Weyl dimension formula and the
multiplicity recursion

    (|l+r|^2 - |m+r|^2) mult(m) = 2 sum_{a>0} sum_{k>=1} mult(m+ka) <m+ka, a>

are evaluated in exact rational arithmetic; every returned multiplicity is an
exact positive integer.

Representation labels are resolved by dimension (plus the requirement that
the zero weight occurs, i.e. the highest weight lies in the root lattice),
not by any naming convention for fundamental weights: Sp(6) has two
14-dimensional fundamental modules, and only one of them has a zero weight.
"""

from fractions import Fraction

from .linalg import solve_rational


class NotDominantError(ValueError):
    """Weight with a negative fundamental coordinate."""


class AmbiguousModuleError(LookupError):
    """Representation selection matched no module or more than one."""


class RootSystem:
    """Rational realization of an irreducible root system."""

    def __init__(self, label, simple_roots, form_scale):
        self.label = label
        self.rank = len(simple_roots)
        self.ambient = len(simple_roots[0])
        self.simple_roots = tuple(tuple(Fraction(x) for x in r) for r in simple_roots)
        self.form_scale = Fraction(form_scale)
        self._positive = None
        self._fundamental = None

    def inner(self, u, v):
        return self.form_scale * sum(a * b for a, b in zip(u, v))

    def coroot(self, alpha):
        n = self.inner(alpha, alpha)
        return tuple(2 * x / n for x in alpha)

    def pairing(self, mu, alpha):
        """<mu, alpha-check>, the integer pairing with the coroot of alpha."""
        return self.inner(mu, self.coroot(alpha))

    def reflect(self, mu, alpha):
        c = self.pairing(mu, alpha)
        return tuple(x - c * a for x, a in zip(mu, alpha))

    def cartan_matrix(self):
        """C[i][j] = <alpha_i, alpha_j-check>."""
        return [
            [int(self.pairing(ai, aj)) for aj in self.simple_roots]
            for ai in self.simple_roots
        ]

    def positive_roots(self):
        """All positive roots, by reflection closure of the simple roots."""
        if self._positive is not None:
            return self._positive
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for alpha in self.simple_roots:
                    gamma = self.reflect(beta, alpha)
                    if gamma not in roots and self._is_positive(gamma):
                        roots.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        self._positive = sorted(roots, key=lambda r: (self._height(r), r))
        return self._positive

    def _simple_coords(self, vec):
        rows = [[self.simple_roots[k][i] for k in range(self.rank)] for i in range(self.ambient)]
        return solve_rational(rows, list(vec))

    def _is_positive(self, vec):
        coords = self._simple_coords(vec)
        return coords is not None and all(c >= 0 for c in coords)

    def _height(self, vec):
        return sum(self._simple_coords(vec))

    def in_root_lattice(self, vec):
        coords = self._simple_coords(vec)
        return coords is not None and all(c.denominator == 1 for c in coords)

    def fundamental_weights(self):
        if self._fundamental is not None:
            return self._fundamental
        c = self.cartan_matrix()
        weights = []
        for i in range(self.rank):
            # omega_i = sum_k x_k alpha_k with <omega_i, alpha_j-check> = delta_ij
            rows = [[Fraction(c[k][j]) for k in range(self.rank)] for j in range(self.rank)]
            rhs = [Fraction(1 if j == i else 0) for j in range(self.rank)]
            x = solve_rational(rows, rhs)
            weights.append(
                tuple(
                    sum(x[k] * self.simple_roots[k][t] for k in range(self.rank))
                    for t in range(self.ambient)
                )
            )
        self._fundamental = tuple(weights)
        return self._fundamental

    def weight_vector(self, w):
        """Ambient vector of a weight given in fundamental coordinates."""
        fund = self.fundamental_weights()
        return tuple(
            sum(Fraction(w[i]) * fund[i][t] for i in range(self.rank))
            for t in range(self.ambient)
        )

    def fundamental_coords(self, vec):
        out = []
        for alpha in self.simple_roots:
            c = self.pairing(vec, alpha)
            if c.denominator != 1:
                raise ValueError("vector is not a weight-lattice point")
            out.append(int(c))
        return tuple(out)

    def rho(self):
        fund = self.fundamental_weights()
        return tuple(sum(f[t] for f in fund) for t in range(self.ambient))


_REALIZATIONS = {
    "A1": ([(2,)], Fraction(1, 2)),
    "A2": ([(1, -1, 0), (0, 1, -1)], Fraction(1)),
    "C3": ([(1, -1, 0), (0, 1, -1), (0, 0, 2)], Fraction(1, 2)),
    "F4": (
        [
            (0, 1, -1, 0),
            (0, 0, 1, -1),
            (0, 0, 0, 1),
            (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
        ],
        Fraction(1),
    ),
}

POSITIVE_ROOT_COUNTS = {"A1": 1, "A2": 3, "C3": 9, "F4": 24}

# C[i][j] = <alpha_i, alpha_j-check> for the realizations above
CARTAN_MATRICES = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "C3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
}

_SYSTEMS = {}


def root_system(label):
    rs = _SYSTEMS.get(label)
    if rs is None:
        if label not in _REALIZATIONS:
            raise KeyError(f"unknown root system {label!r}")
        roots, scale = _REALIZATIONS[label]
        rs = RootSystem(label, roots, scale)
        if rs.cartan_matrix() != CARTAN_MATRICES[label]:
            raise AssertionError(f"{label}: realization does not match its Cartan matrix")
        if len(rs.positive_roots()) != POSITIVE_ROOT_COUNTS[label]:
            raise AssertionError(f"{label}: wrong number of positive roots")
        _SYSTEMS[label] = rs
    return rs


def weyl_dim(rs, w):
    """Dimension of the irreducible module with dominant highest weight w."""
    if any(int(c) < 0 for c in w):
        raise NotDominantError(f"{w} is not dominant")
    lam = rs.weight_vector(w)
    rho = rs.rho()
    num = Fraction(1)
    den = Fraction(1)
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    for alpha in rs.positive_roots():
        num *= rs.inner(lam_rho, alpha)
        den *= rs.inner(rho, alpha)
    d = num / den
    if d.denominator != 1:
        raise AssertionError("Weyl dimension came out non-integral")
    return int(d)


class WeightDiagram:
    """Weights (fundamental coordinates) with positive integer multiplicities."""

    def __init__(self, rs, mults):
        self.rs = rs
        self.mults = dict(mults)

    def multiplicity(self, w):
        return self.mults.get(tuple(w), 0)

    def zero_multiplicity(self):
        return self.multiplicity((0,) * self.rs.rank)

    def dimension(self):
        return sum(self.mults.values())

    def weights(self):
        return sorted(self.mults)

    def __len__(self):
        return len(self.mults)


def _dominant_representative(rs, vec):
    """Apply simple reflections until all fundamental coordinates are >= 0."""
    v = vec
    while True:
        for alpha in rs.simple_roots:
            if rs.pairing(v, alpha) < 0:
                v = rs.reflect(v, alpha)
                break
        else:
            return v


def _antidominant_representative(rs, vec):
    v = vec
    while True:
        for alpha in rs.simple_roots:
            if rs.pairing(v, alpha) > 0:
                v = rs.reflect(v, alpha)
                break
        else:
            return v


def freudenthal_multiplicities(rs, w):
    """The full weight diagram of V(w) by the multiplicity recursion.

    Dominant weights are traversed by decreasing height from the highest
    weight; the recursion denominator is nonzero there, and each dominant
    multiplicity is propagated over its Weyl orbit by reflection closure.
    """
    if any(int(c) < 0 for c in w):
        raise NotDominantError(f"{w} is not dominant")
    lam = rs.weight_vector(w)
    rho = rs.rho()
    lowest = _antidominant_representative(rs, lam)
    max_height = rs._height(tuple(a - b for a, b in zip(lam, lowest)))

    # dominant candidates: lam minus nonnegative root combinations, by level
    dominant = {lam: 0}
    seen = {lam}
    level = {lam}
    h = 0
    while level and h < max_height:
        h += 1
        nxt = set()
        for v in level:
            for alpha in rs.simple_roots:
                u = tuple(a - b for a, b in zip(v, alpha))
                if u not in seen:
                    seen.add(u)
                    nxt.add(u)
        level = nxt
        for v in level:
            if all(rs.pairing(v, alpha) >= 0 for alpha in rs.simple_roots):
                dominant.setdefault(v, h)

    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    c_top = rs.inner(lam_rho, lam_rho)
    mults = {lam: 1}
    for v, h in sorted(dominant.items(), key=lambda kv: (kv[1], kv[0])):
        if v == lam:
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots():
            k = 1
            while True:
                u = tuple(a + k * b for a, b in zip(v, alpha))
                if rs._height(tuple(a - b for a, b in zip(lam, u))) < 0:
                    break
                m = mults.get(_dominant_representative(rs, u), 0)
                if m:
                    acc += m * rs.inner(u, alpha)
                k += 1
        v_rho = tuple(a + b for a, b in zip(v, rho))
        den = c_top - rs.inner(v_rho, v_rho)
        if den == 0:
            raise AssertionError("vanishing denominator at a dominant weight")
        m = 2 * acc / den
        if m.denominator != 1 or m < 0:
            raise AssertionError("multiplicity came out non-integral")
        if m:
            mults[v] = int(m)

    # expand over Weyl orbits
    full = {}
    for v, m in mults.items():
        orbit = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for alpha in rs.simple_roots:
                    t = rs.reflect(u, alpha)
                    if t not in orbit:
                        orbit.add(t)
                        nxt.append(t)
            frontier = nxt
        for u in orbit:
            full[rs.fundamental_coords(u)] = m
    diagram = WeightDiagram(rs, full)
    if diagram.dimension() != weyl_dim(rs, w):
        raise AssertionError("weight diagram dimension disagrees with the Weyl formula")
    return diagram


# ---------------------------------------------------------------------------
# matching the traceless Hermitian module
# ---------------------------------------------------------------------------

ROOT_SYSTEM_OF_TAG = {"C": "A1", "CxC": "A2", "HC": "C3", "OC": "F4"}


def select_paper_module(tag):
    """(root system, highest weight) of the traceless Hermitian module.

    Selected among small dominant weights by exact dimension (3 + 3 dim - 1)
    and by containing the zero weight (highest weight in the root lattice);
    label conventions never enter.  Raises AmbiguousModuleError unless the
    match is unique.
    """
    rs = root_system(ROOT_SYSTEM_OF_TAG[tag.name])
    target = 2 + 3 * tag.dim
    matches = []

    def tuples(rank, total):
        if rank == 1:
            for t in range(total + 1):
                yield (t,)
            return
        for head in range(total + 1):
            for rest in tuples(rank - 1, total - head):
                yield (head,) + rest

    for w in tuples(rs.rank, 4):
        if weyl_dim(rs, w) == target and rs.in_root_lattice(rs.weight_vector(w)):
            matches.append(w)
    if len(matches) != 1:
        raise AmbiguousModuleError(f"{tag}: candidates {matches} for dimension {target}")
    return rs, matches[0]
