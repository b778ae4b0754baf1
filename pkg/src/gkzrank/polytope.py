"""Exact rational convex geometry for height-one point configurations.

Validation of A-sets, the face lattice of Q = conv(A) with supporting
certificates, normalized volumes, projections to saturated quotient
lattices, and the lower-hull machinery (symbolic placing lifts included)
that triangulations and subdivisions are built on.

Convex hulls are enumerated by exact candidate-hyperplane search; there are
no floating-point predicates anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .lattice import (
    det_int,
    integer_solve,
    kernel_basis,
    quotient_group,
    saturation_projection,
)
from .linprog import in_convex_hull

IntVector = tuple[int, ...]


class InvalidConfiguration(ValueError):
    """A point configuration that is not a valid A-set."""

    def __init__(self, code: str, message: str | None = None):
        self.code = code
        super().__init__(message or code)


@dataclass(frozen=True)
class ASet:
    """A height-one lattice point configuration generating ZZ^dim."""

    dim: int
    points: tuple[IntVector, ...]
    height: IntVector

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Face:
    """A non-empty face of Q = conv(A), stored as the indices of all points
    of A lying on it, with an integer supporting functional certificate:
    <support, v> <= offset on A with equality exactly on the face."""

    indices: tuple[int, ...]
    support: IntVector
    offset: int
    dim: int

    @property
    def is_vertex(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True)
class MarkedPolytope:
    """A polytope together with a marked subset of A spanning it."""

    vertices_hull: tuple[int, ...]
    marks: tuple[int, ...]


def validate_aset(dim: int, points) -> ASet:
    """Validate and build an A-set; raises InvalidConfiguration."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise InvalidConfiguration("empty configuration")
    if any(len(p) != dim for p in pts):
        raise InvalidConfiguration("wrong point length", "point length differs from dim")
    if len(set(pts)) != len(pts):
        raise InvalidConfiguration("duplicate point")
    height = integer_solve([list(p) for p in pts], [1] * len(pts))
    if height is None:
        raise InvalidConfiguration("no height functional")
    if affine_rank(pts) != dim - 1:
        raise InvalidConfiguration(
            "degenerate configuration",
            "points lie on a proper affine subspace of the height-one hyperplane",
        )
    if not quotient_group(pts, dim).is_trivial:
        raise InvalidConfiguration("does not generate lattice")
    return ASet(dim=dim, points=tuple(pts), height=tuple(height))


def affine_rank(points) -> int:
    """Rank of the difference lattice of the points (dim of their affine hull)."""
    pts = [tuple(p) for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    rows = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
    diag = _rank_of(rows)
    return diag


def _rank_of(rows) -> int:
    from .lattice import smith_normal_form

    if not rows or not rows[0]:
        return 0
    return smith_normal_form(rows).rank


def _primitive_vector(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def faces(aset: ASet) -> tuple[Face, ...]:
    """All non-empty faces of Q, vertices through Q itself, with certificates.

    Ordered by (dim, lexicographic indices).
    """
    n = aset.n
    d = aset.dim
    m = d - 1  # dim Q
    everything = tuple(range(n))
    top = Face(indices=everything, support=(0,) * d, offset=0, dim=m)
    if m == 0:
        return (top,)

    pts = aset.points
    facets: dict[frozenset, tuple[IntVector, int]] = {}
    for subset in combinations(range(n), m):
        sub_pts = [pts[i] for i in subset]
        if affine_rank(sub_pts) != m - 1:
            continue
        base = sub_pts[0]
        diff_rows = [[x - b for x, b in zip(p, base)] for p in sub_pts[1:]]
        if not diff_rows:
            diff_rows = [[0] * d]
        kern = kernel_basis(diff_rows)
        normal = None
        for cand in kern:
            vals = [sum(c * x for c, x in zip(cand, p)) for p in pts]
            if len(set(vals)) > 1:
                normal = cand
                values = vals
                break
        if normal is None:
            continue
        c0 = sum(cc * x for cc, x in zip(normal, base))
        above = any(v > c0 for v in values)
        below = any(v < c0 for v in values)
        if above and below:
            continue
        if above:
            normal = tuple(-x for x in normal)
            values = [-v for v in values]
            c0 = -c0
        support = frozenset(i for i, v in enumerate(values) if v == c0)
        if support in facets:
            continue
        g = 0
        for x in normal:
            g = gcd(g, x)
        normal = tuple(x // g for x in normal)
        facets[support] = (normal, c0 // g)

    face_sets: set[frozenset] = set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in face_sets:
                    new.add(h)
        face_sets |= new
        frontier = new

    out = [top]
    for fs in face_sets:
        containing = [facets[s] for s in facets if fs <= s]
        support = tuple(sum(u[i] for u, _ in containing) for i in range(d))
        offset = sum(c for _, c in containing)
        vals = [sum(u * x for u, x in zip(support, p)) for p in pts]
        exact = tuple(sorted(i for i, v in enumerate(vals) if v == offset))
        if set(exact) != fs:
            raise RuntimeError("face certificate failed to isolate the face")
        out.append(
            Face(
                indices=exact,
                support=support,
                offset=offset,
                dim=affine_rank([pts[i] for i in exact]),
            )
        )
    out.sort(key=lambda f: (f.dim, f.indices))
    return tuple(out)


def normalized_volume(indices, aset: ASet) -> int:
    """Normalized volume of the simplex on the chosen d points (0 if flat)."""
    idx = tuple(indices)
    if len(idx) != aset.dim:
        raise InvalidConfiguration(
            "wrong simplex cardinality",
            "a maximal simplex needs exactly %d points" % aset.dim,
        )
    return abs(det_int([aset.points[i] for i in idx]))


@dataclass(frozen=True)
class ProjectedFace:
    """The saturated quotient of ZZ^d by the span of a face."""

    quotient_rank: int
    images: tuple[tuple[int, IntVector], ...]  # (point index, projected point)
    torsion: tuple[int, ...]
    pi: tuple[IntVector, ...]


def project_mod_face(aset: ASet, face: Face) -> ProjectedFace:
    """Project A to the saturated quotient lattice by the span of the face.

    Images are listed for the points outside the real span of the face; the
    torsion of ZZ^d / ZZ(A on the face) is reported separately.
    """
    gens = [aset.points[i] for i in face.indices]
    pi, rank, torsion = saturation_projection(gens, aset.dim)
    images = []
    face_set = set(face.indices)
    for i, p in enumerate(aset.points):
        img = tuple(sum(r * x for r, x in zip(row, p)) for row in pi)
        if i in face_set:
            if any(img):
                raise RuntimeError("face point fails to project to zero")
            continue
        if not any(img):
            raise RuntimeError("non-face point unexpectedly in the face span")
        images.append((i, img))
    return ProjectedFace(
        quotient_rank=aset.dim - rank,
        images=tuple(images),
        torsion=torsion,
        pi=pi,
    )


# -- lower-hull machinery ---------------------------------------------------
#
# Lift values are tuples of Fractions compared lexicographically; this gives
# exact symbolic-perturbation arithmetic (entries are coefficients of
# successive infinitesimals).


def barycentric(points, sigma, j):
    """Affine coordinates of point j in the full simplex sigma (Cramer)."""
    mat = [points[i] for i in sigma]
    den = det_int(mat)
    coords = []
    target = points[j]
    for r in range(len(sigma)):
        rows = [target if k == r else mat[k] for k in range(len(sigma))]
        coords.append(Fraction(det_int(rows), den))
    return coords


def candidate_simplices(points, dim) -> list[tuple[int, ...]]:
    return [
        sigma
        for sigma in combinations(range(len(points)), dim)
        if det_int([points[i] for i in sigma]) != 0
    ]


def _fold(points, lifts, sigma, j, width):
    """Lift of j minus the affine extension of the sigma lift at point j."""
    lam = barycentric(points, sigma, j)
    out = list(lifts[j])
    for coef, i in zip(lam, sigma):
        li = lifts[i]
        for k in range(width):
            out[k] -= coef * li[k]
    return tuple(out)


def _norm_lifts(lifts):
    vals = []
    width = None
    for v in lifts:
        if isinstance(v, tuple):
            vals.append(tuple(Fraction(x) for x in v))
        else:
            vals.append((Fraction(v),))
    width = max(len(v) for v in vals)
    return [v + (Fraction(0),) * (width - len(v)) for v in vals], width


def lower_hull_triangulation(points, lifts, dim) -> tuple[tuple[int, ...], ...]:
    """Simplices of the triangulation induced by a generic lower lift."""
    lifts, width = _norm_lifts(lifts)
    zero = (Fraction(0),) * width
    out = []
    for sigma in candidate_simplices(points, dim):
        ok = True
        for j in range(len(points)):
            if j in sigma:
                continue
            if _fold(points, lifts, sigma, j, width) <= zero:
                ok = False
                break
        if ok:
            out.append(tuple(sigma))
    return tuple(sorted(out))


def lower_hull_cells(points, lifts, dim) -> tuple[tuple[int, ...], ...]:
    """Marked cells (supports) of the polyhedral subdivision induced by a lift."""
    lifts, width = _norm_lifts(lifts)
    zero = (Fraction(0),) * width
    cells = set()
    for sigma in candidate_simplices(points, dim):
        support = set(sigma)
        ok = True
        for j in range(len(points)):
            if j in sigma:
                continue
            f = _fold(points, lifts, sigma, j, width)
            if f < zero:
                ok = False
                break
            if f == zero:
                support.add(j)
        if ok:
            cells.add(tuple(sorted(support)))
    return tuple(sorted(cells))


def placing_lifts(n: int):
    """Symbolic lifts realizing the placing order: point i at epsilon^(n-i)."""
    out = []
    for i in range(n):
        v = [Fraction(0)] * (n + 1)
        v[n - i] = Fraction(1)
        out.append(tuple(v))
    return out


def subset_volume(points, indices, dim) -> int:
    """Normalized volume of conv of the chosen (full-dimensional) subset."""
    idx = list(indices)
    sub = [points[i] for i in idx]
    tri = lower_hull_triangulation(sub, placing_lifts(len(sub)), dim)
    total = 0
    for sigma in tri:
        total += abs(det_int([sub[i] for i in sigma]))
    if total == 0:
        raise InvalidConfiguration("flat subset", "subset spans no full-dimensional cell")
    return total


def total_volume(aset: ASet) -> int:
    """Normalized volume of Q (via the placing triangulation)."""
    return subset_volume(aset.points, range(aset.n), aset.dim)


def hull_vertex_indices(points, indices) -> tuple[int, ...]:
    """The subset of indices whose points are vertices of their convex hull."""
    idx = list(indices)
    out = []
    for i in idx:
        others = [points[j] for j in idx if j != i]
        if not others or not in_convex_hull(points[i], others):
            out.append(i)
    return tuple(sorted(out))


def marked_polytope(points, marks) -> MarkedPolytope:
    marks = tuple(sorted(marks))
    return MarkedPolytope(
        vertices_hull=hull_vertex_indices(points, marks), marks=marks
    )
