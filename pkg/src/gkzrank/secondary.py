"""Regular triangulations, flips and the secondary polytope.

Enumeration is a breadth-first walk on the flip graph, seeded by the placing
triangulation.  Each vertex of the secondary fan is a full-dimensional cone
of liftings; its facets are found by exact LP, and crossing a facet with a
symbolic-perturbation lift lands in the neighboring regular triangulation.
Regularity is certified per node by exact strict-feasibility LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .lattice import primitive_relation, LatticeError
from .linprog import solve_lp, feasible_point
from .polytope import (
    ASet,
    MarkedPolytope,
    barycentric,
    lower_hull_cells,
    lower_hull_triangulation,
    marked_polytope,
    placing_lifts,
    total_volume,
)


class TriangulationError(ValueError):
    pass


class NotAnEdge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Maximal simplices (index sets) with a rational regularity certificate."""

    simplices: tuple[tuple[int, ...], ...]
    lifting: tuple[Fraction, ...] | None = None

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def characteristic_function(self, aset: ASet) -> tuple[int, ...]:
        from .lattice import det_int

        phi = [0] * aset.n
        for sigma in self.simplices:
            vol = abs(det_int([aset.points[i] for i in sigma]))
            for i in sigma:
                phi[i] += vol
        return tuple(phi)

    def uses(self) -> tuple[int, ...]:
        used = set()
        for sigma in self.simplices:
            used.update(sigma)
        return tuple(sorted(used))


@dataclass(frozen=True)
class Circuit:
    """A minimal dependent subset with its primitive relation."""

    indices: tuple[int, ...]
    relation: tuple[int, ...]

    @classmethod
    def from_points(cls, aset: ASet, indices) -> "Circuit":
        idx = tuple(sorted(indices))
        rel = primitive_relation([aset.points[i] for i in idx])
        return cls(indices=idx, relation=rel)

    @property
    def plus(self) -> tuple[int, ...]:
        return tuple(i for i, l in zip(self.indices, self.relation) if l > 0)

    @property
    def minus(self) -> tuple[int, ...]:
        return tuple(i for i, l in zip(self.indices, self.relation) if l < 0)


@dataclass(frozen=True)
class EdgeData:
    """An edge of the secondary polytope with its circuit, separating sets
    and coarsest common subdivision."""

    endpoints: tuple[Triangulation, Triangulation]
    circuit: Circuit
    separating_sets: tuple[tuple[int, ...], ...]
    subdivision: tuple[MarkedPolytope, ...]
    common_simplices: tuple[tuple[int, ...], ...]
    psi: tuple[Fraction, ...]
    vertex_pair: tuple[int, int]


@dataclass(frozen=True)
class SecondaryPolytope:
    aset: ASet
    triangulations: tuple[Triangulation, ...]
    phis: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    dim: int


def characteristic_function(aset: ASet, tri: Triangulation) -> tuple[int, ...]:
    return tri.characteristic_function(aset)


def check_triangulation(aset: ASet, simplices) -> tuple[tuple[int, ...], ...]:
    """Validate a set of index simplices as a triangulation of (Q, A).

    Checks full-dimensionality, exact volume additivity and pairwise proper
    intersection (the intersection of two simplices is a common face spanned
    by their shared vertices).
    """
    sims = tuple(sorted(tuple(sorted(map(int, s))) for s in simplices))
    if len(set(sims)) != len(sims):
        raise TriangulationError("repeated simplex")
    d = aset.dim
    from .lattice import det_int

    vol = 0
    for sigma in sims:
        if len(sigma) != d:
            raise TriangulationError("simplex with wrong vertex count: %r" % (sigma,))
        v = abs(det_int([aset.points[i] for i in sigma]))
        if v == 0:
            raise TriangulationError("flat simplex: %r" % (sigma,))
        vol += v
    if vol != total_volume(aset):
        raise TriangulationError("simplices do not tile Q (volume mismatch)")
    for sa, sb in combinations(sims, 2):
        if not _proper_intersection(aset, sa, sb):
            raise TriangulationError(
                "simplices %r and %r do not meet in a common face" % (sa, sb)
            )
    return sims


def _proper_intersection(aset: ASet, sa, sb) -> bool:
    """conv(sa) and conv(sb) intersect exactly in conv(sa & sb)."""
    shared = set(sa) & set(sb)
    outside = [("a", i) for i in sa if i not in shared] + [
        ("b", i) for i in sb if i not in shared
    ]
    if not outside:
        return True
    ka, kb = len(sa), len(sb)
    nvars = ka + kb
    d = aset.dim
    a_eq = []
    b_eq = []
    for r in range(d):
        row = [Fraction(aset.points[i][r]) for i in sa]
        row += [-Fraction(aset.points[i][r]) for i in sb]
        a_eq.append(row)
        b_eq.append(Fraction(0))
    a_eq.append([Fraction(1)] * ka + [Fraction(0)] * kb)
    b_eq.append(Fraction(1))
    a_eq.append([Fraction(0)] * ka + [Fraction(1)] * kb)
    b_eq.append(Fraction(1))
    a_ub = [[Fraction(-1) if j == i else Fraction(0) for j in range(nvars)] for i in range(nvars)]
    b_ub = [Fraction(0)] * nvars
    objective = [Fraction(0)] * nvars
    for pos, (side, i) in enumerate(
        [("a", i) for i in sa] + [("b", i) for i in sb]
    ):
        if i not in shared:
            objective[pos] = Fraction(1)
    res = solve_lp(nvars, objective, a_ub, b_ub, a_eq, b_eq, maximize=True)
    if res.status != "optimal":
        return True  # disjoint simplices
    return res.objective == 0


def _fold_functionals(aset: ASet, simplices) -> list[tuple[int, ...]]:
    """Primitive integer functionals c with C(T) = {w : c.w >= 0}."""
    n = aset.n
    seen = set()
    out = []
    for sigma in simplices:
        inside = set(sigma)
        for j in range(n):
            if j in inside:
                continue
            lam = barycentric(aset.points, sigma, j)
            c = [Fraction(0)] * n
            c[j] = Fraction(1)
            for coef, i in zip(lam, sigma):
                c[i] -= coef
            den = 1
            for x in c:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in c]
            g = 0
            for x in ints:
                g = gcd(g, x)
            prim = tuple(x // g for x in ints)
            if prim not in seen:
                seen.add(prim)
                out.append(prim)
    out.sort()
    return out


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    lifting: tuple[Fraction, ...] | None = None
    # Farkas multipliers on the fold constraints when irregular
    refutation: tuple[Fraction, ...] | None = None


def is_regular(aset: ASet, triangulation) -> RegularityResult:
    """Certify regularity of a triangulation by exact strict feasibility.

    The strict system "every non-simplex point lifts strictly above every
    simplex plane" is homogeneous, so strict feasibility is equivalent to
    feasibility with slack one.
    """
    simplices = (
        triangulation.simplices
        if isinstance(triangulation, Triangulation)
        else triangulation
    )
    sims = check_triangulation(aset, simplices)
    folds = _fold_functionals(aset, sims)
    if not folds:
        return RegularityResult(regular=True, lifting=(Fraction(0),) * aset.n)
    a_ub = [[-x for x in c] for c in folds]
    b_ub = [Fraction(-1)] * len(folds)
    res = solve_lp(aset.n, None, a_ub, b_ub)
    if res.status == "optimal":
        lift = res.x
        induced = lower_hull_triangulation(aset.points, lift, aset.dim)
        if induced != sims:
            raise RuntimeError("certificate lifting fails to induce the triangulation")
        return RegularityResult(regular=True, lifting=lift)
    return RegularityResult(regular=False, refutation=res.farkas[0])


def placing_triangulation(aset: ASet) -> Triangulation:
    """The regular triangulation obtained by placing points in input order."""
    sims = lower_hull_triangulation(aset.points, placing_lifts(aset.n), aset.dim)
    cert = is_regular(aset, sims)
    return Triangulation(simplices=sims, lifting=cert.lifting)


def _facets_of_secondary_cone(aset: ASet, folds):
    """Indices of irredundant (facet) fold functionals of C(T)."""
    facets = []
    for k, c in enumerate(folds):
        a_ub = [[-x for x in other] for i, other in enumerate(folds) if i != k]
        b_ub = [Fraction(0)] * (len(folds) - 1)
        a_ub.append(list(map(Fraction, c)))
        b_ub.append(Fraction(-1))
        if feasible_point(aset.n, a_ub, b_ub) is not None:
            facets.append(k)
    return facets


def triangulation_flips(aset: ASet, tri: Triangulation):
    """Neighbors of a regular triangulation across the facets of its cone."""
    folds = _fold_functionals(aset, tri.simplices)
    if not folds:
        return []
    facet_idx = _facets_of_secondary_cone(aset, folds)
    neighbors = []
    for k in facet_idx:
        c0 = folds[k]
        a_eq = [list(map(Fraction, c0))]
        b_eq = [Fraction(0)]
        a_ub = []
        b_ub = []
        for i in facet_idx:
            if i == k:
                continue
            a_ub.append([-x for x in folds[i]])
            b_ub.append(Fraction(-1))
        wall = feasible_point(aset.n, a_ub, b_ub, a_eq, b_eq)
        if wall is None:
            raise RuntimeError("facet of a secondary cone has empty relative interior")
        lifts = [(wall[i], Fraction(-c0[i])) for i in range(aset.n)]
        sims = lower_hull_triangulation(aset.points, lifts, aset.dim)
        neighbors.append((sims, c0))
    return neighbors


def enumerate_regular_triangulations(aset: ASet) -> tuple[Triangulation, ...]:
    """All regular triangulations, ordered by characteristic function."""
    return secondary_polytope(aset).triangulations


def secondary_polytope(aset: ASet) -> SecondaryPolytope:
    """The secondary polytope: vertices, flip edges and dimension."""
    seed = placing_triangulation(aset)
    by_key = {seed.simplices: seed}
    queue = [seed.simplices]
    edge_keys = set()
    while queue:
        key = queue.pop(0)
        tri = by_key[key]
        for sims, _wall in triangulation_flips(aset, tri):
            if sims not in by_key:
                cert = is_regular(aset, sims)
                if not cert.regular:
                    raise RuntimeError("flip crossed into an irregular triangulation")
                by_key[sims] = Triangulation(simplices=sims, lifting=cert.lifting)
                queue.append(sims)
            edge_keys.add(tuple(sorted((key, sims))))

    tris = list(by_key.values())
    tris.sort(key=lambda t: t.characteristic_function(aset))
    index = {t.simplices: i for i, t in enumerate(tris)}
    edges = tuple(
        sorted(tuple(sorted((index[a], index[b]))) for a, b in edge_keys)
    )
    phis = tuple(t.characteristic_function(aset) for t in tris)
    expected = aset.n - aset.dim
    from .polytope import affine_rank

    if len(phis) > 1:
        got = affine_rank(phis)
    else:
        got = 0
    if got != expected:
        raise RuntimeError(
            "secondary polytope dimension %d differs from n - d = %d" % (got, expected)
        )
    return SecondaryPolytope(
        aset=aset, triangulations=tuple(tris), phis=phis, edges=edges, dim=expected
    )


def normal_cone_sample(sp: SecondaryPolytope, i: int, j: int) -> tuple[Fraction, ...]:
    """A functional exposing exactly the edge [phi_i, phi_j], by slack LP."""
    n = sp.aset.n
    phis = sp.phis
    diff = [phis[i][k] - phis[j][k] for k in range(n)]
    a_eq = [list(map(Fraction, diff)) + [Fraction(0)]]
    b_eq = [Fraction(0)]
    a_ub = []
    b_ub = []
    for t in range(len(phis)):
        if t in (i, j):
            continue
        row = [Fraction(phis[t][k] - phis[i][k]) for k in range(n)]
        row.append(Fraction(1))  # slack
        a_ub.append(row)
        b_ub.append(Fraction(0))
    a_ub.append([Fraction(0)] * n + [Fraction(1)])
    b_ub.append(Fraction(1))
    objective = [Fraction(0)] * n + [Fraction(1)]
    res = solve_lp(n + 1, objective, a_ub, b_ub, a_eq, b_eq, maximize=True)
    if res.status != "optimal":
        raise NotAnEdge("not an edge")
    slack = res.x[n]
    if len(phis) > 2 and slack <= 0:
        raise NotAnEdge("not an edge")
    return tuple(res.x[:n])


def edge_data(sp: SecondaryPolytope, i: int, j: int) -> EdgeData:
    """Circuit, separating sets and subdivision of a secondary-polytope edge."""
    aset = sp.aset
    if i == j or not (0 <= i < len(sp.phis)) or not (0 <= j < len(sp.phis)):
        raise NotAnEdge("not an edge")
    i, j = min(i, j), max(i, j)
    psi = normal_cone_sample(sp, i, j)
    ta, tb = sp.triangulations[i], sp.triangulations[j]
    cells = lower_hull_cells(aset.points, [(-v,) for v in psi], aset.dim)

    d = aset.dim
    common = []
    big = []
    for cell in cells:
        if len(cell) == d:
            common.append(cell)
        else:
            big.append(cell)
    expected_common = tuple(sorted(set(ta.simplices) & set(tb.simplices)))
    if tuple(sorted(common)) != expected_common:
        raise NotAnEdge("not an edge")
    if not big:
        raise NotAnEdge("not an edge")

    circuits = set()
    for cell in big:
        if len(cell) != d + 1:
            raise NotAnEdge("not an edge")
        found = _unique_circuit(aset, cell)
        circuits.add(found)
    if len(circuits) != 1:
        raise NotAnEdge("not an edge")
    circuit = Circuit.from_points(aset, circuits.pop())

    cell_seps = tuple(
        sorted(tuple(sorted(set(cell) - set(circuit.indices))) for cell in big)
    )
    scan_seps = _separating_sets_by_scan(ta, tb, circuit)
    if cell_seps != scan_seps:
        raise RuntimeError(
            "separating sets from the subdivision and from the triangulation "
            "scan disagree: %r vs %r" % (cell_seps, scan_seps)
        )
    _check_separating_sides(ta, tb, circuit, cell_seps)

    subdivision = tuple(
        marked_polytope(aset.points, cell) for cell in sorted(cells)
    )
    # symmetric canonical endpoint order by characteristic function
    pa, pb = sp.phis[i], sp.phis[j]
    endpoints = (ta, tb) if pa <= pb else (tb, ta)
    return EdgeData(
        endpoints=endpoints,
        circuit=circuit,
        separating_sets=cell_seps,
        subdivision=subdivision,
        common_simplices=expected_common,
        psi=psi,
        vertex_pair=(i, j),
    )


def _unique_circuit(aset: ASet, cell):
    found = None
    for size in range(3, len(cell) + 1):
        for subset in combinations(cell, size):
            try:
                primitive_relation([aset.points[k] for k in subset])
            except LatticeError:
                continue
            if found is not None and found != subset:
                raise RuntimeError("cell contains more than one circuit")
            found = subset
    if found is None:
        raise RuntimeError("cell of an edge subdivision contains no circuit")
    return found


def _separating_sets_by_scan(ta: Triangulation, tb: Triangulation, circuit: Circuit):
    cset = set(circuit.indices)
    out = set()
    for tri in (ta, tb):
        for sigma in tri.simplices:
            missing = cset - set(sigma)
            if len(missing) == 1:
                out.add(tuple(sorted(set(sigma) - cset)))
    return tuple(sorted(out))


def _check_separating_sides(ta, tb, circuit: Circuit, seps):
    """Each endpoint hosts the simplices dropping exactly one sign class."""
    plus, minus = set(circuit.plus), set(circuit.minus)
    cset = set(circuit.indices)
    sims_a, sims_b = set(ta.simplices), set(tb.simplices)
    for jset in seps:
        sides = {"plus": set(), "minus": set()}
        for i in circuit.indices:
            sigma = tuple(sorted((cset - {i}) | set(jset)))
            in_a = sigma in sims_a
            in_b = sigma in sims_b
            if not (in_a or in_b):
                raise RuntimeError("separating set fails to span endpoint simplices")
            label = "plus" if i in plus else "minus"
            sides[label].add("a" if in_a else "b")
        if sides["plus"] & sides["minus"]:
            raise RuntimeError("separating set mixes the two circuit sides")


def hull_edges(sp: SecondaryPolytope) -> tuple[tuple[int, int], ...]:
    """Edges of conv{phi_T} computed directly by LP, for cross-checking."""
    out = []
    m = len(sp.phis)
    for i in range(m):
        for j in range(i + 1, m):
            try:
                normal_cone_sample(sp, i, j)
            except NotAnEdge:
                continue
            out.append((i, j))
    return tuple(sorted(out))
