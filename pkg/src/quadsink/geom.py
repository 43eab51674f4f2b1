"""Planar geometry core: points, polygons, PSLGs, circle tuples and predicates.

All angles are measured in degrees.  Coordinates are plain floats; every
predicate that needs a coincidence threshold goes through a TolerancePolicy
so the whole library shares one epsilon convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence


class GeometryError(ValueError):
    """Raised for invalid geometric input (degenerate, non-simple, ...)."""


class Point2(NamedTuple):
    x: float
    y: float

    def __add__(self, other):  # type: ignore[override]
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s):  # type: ignore[override]
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def angle_deg(self) -> float:
        """Direction of the vector in degrees in [0, 360)."""
        a = math.degrees(math.atan2(self.y, self.x))
        return a + 360.0 if a < 0 else a

    def rotated(self, degrees: float) -> "Point2":
        r = math.radians(degrees)
        c, s = math.cos(r), math.sin(r)
        return Point2(c * self.x - s * self.y, s * self.x + c * self.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


def from_polar(radius: float, angle_deg: float, center: Point2 = Point2(0.0, 0.0)) -> Point2:
    r = math.radians(angle_deg)
    return Point2(center.x + radius * math.cos(r), center.y + radius * math.sin(r))


@dataclass(frozen=True)
class TolerancePolicy:
    """Shared tolerance policy.

    eps_point is relative to the bounding-box diagonal of the object under
    test; eps_angle_deg is an absolute slack for angle assertions.
    """

    eps_point: float = 1e-9
    eps_angle_deg: float = 1e-7

    def point_eps(self, scale: float) -> float:
        # Scale floor avoids a zero epsilon for objects collapsed to a point.
        return self.eps_point * max(scale, 1.0)


DEFAULT_TOL = TolerancePolicy()


def bbox_diagonal(points: Iterable[Point2]) -> float:
    xs, ys = [], []
    for p in points:
        xs.append(p.x)
        ys.append(p.y)
    if not xs:
        return 0.0
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def orientation(a: Point2, b: Point2, c: Point2, eps: float = 0.0) -> int:
    """Sign of the cross product (b-a) x (c-a) with a dead zone of eps·scale.

    Returns +1 (counter-clockwise), -1 (clockwise) or 0 (collinear within
    the dead zone).
    """
    cr = (b - a).cross(c - a)
    if eps > 0.0:
        scale = max(a.dist(b), a.dist(c), 1e-300)
        if abs(cr) <= eps * scale:
            return 0
    return (cr > 0) - (cr < 0)


def segment_point_distance(a: Point2, b: Point2, p: Point2) -> float:
    ab = b - a
    denom = ab.dot(ab)
    if denom <= 0.0:
        return a.dist(p)
    t = max(0.0, min(1.0, (p - a).dot(ab) / denom))
    foot = Point2(a.x + t * ab.x, a.y + t * ab.y)
    return foot.dist(p)


def segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2, eps: float = 0.0) -> bool:
    """True when open segments (a,b) and (c,d) share a point.

    Shared endpoints do not count; a touch within eps does.
    """
    o1 = orientation(a, b, c, eps)
    o2 = orientation(a, b, d, eps)
    o3 = orientation(c, d, a, eps)
    o4 = orientation(c, d, b, eps)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    # collinear overlap / endpoint-in-interior cases
    for p, (u, v) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if segment_point_distance(u, v, p) <= eps:
            if p.dist(u) > eps and p.dist(v) > eps:
                return True
    return False


def angle_at(prev: Point2, vertex: Point2, nxt: Point2) -> float:
    """Interior angle in degrees at `vertex` of a CCW polygon, in (0, 360).

    Measured counter-clockwise from the outgoing edge (vertex->nxt) to the
    reversed incoming edge (vertex->prev); reflex vertices exceed 180.
    """
    v1 = prev - vertex
    v2 = nxt - vertex
    a = math.degrees(math.atan2(v2.cross(v1), v2.dot(v1)))
    if a < 0:
        a += 360.0
    return a


def polygon_signed_area(pts: Sequence[Point2]) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        s += p.cross(q)
    return 0.5 * s


def _check_simple(pts: Sequence[Point2], eps: float) -> None:
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i].dist(pts[j]) <= eps:
                raise GeometryError(f"repeated vertex at index {i} and {j}")
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            if segments_intersect(a, b, c, d, eps):
                raise GeometryError(f"edges {i} and {j} intersect")


@dataclass(frozen=True)
class SimplePolygon:
    """Simple polygon with vertices in counter-clockwise order."""

    vertices: tuple

    def __init__(self, vertices: Sequence[Point2], tol: TolerancePolicy = DEFAULT_TOL,
                 check: bool = True):
        pts = tuple(Point2(float(p[0]), float(p[1])) for p in vertices)
        if len(pts) < 3:
            raise GeometryError("polygon needs at least 3 vertices")
        for p in pts:
            if not p.is_finite():
                raise GeometryError("non-finite coordinate")
        if check:
            eps = tol.point_eps(bbox_diagonal(pts))
            _check_simple(pts, eps)
            if polygon_signed_area(pts) <= 0:
                raise GeometryError("polygon must be counter-clockwise with positive area")
        object.__setattr__(self, "vertices", pts)

    def __len__(self) -> int:
        return len(self.vertices)

    def area(self) -> float:
        return polygon_signed_area(self.vertices)

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def contains(self, p: Point2, eps: float = 0.0) -> bool:
        """Point-in-polygon (boundary counts as inside when eps > 0)."""
        if eps > 0:
            for a, b in self.edges():
                if segment_point_distance(a, b, p) <= eps:
                    return True
        inside = False
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if (a.y > p.y) != (b.y > p.y):
                xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
                if p.x < xi:
                    inside = not inside
        return inside


def interior_angles(poly: SimplePolygon, tol: TolerancePolicy = DEFAULT_TOL) -> list:
    """Interior angle at every vertex of a CCW simple polygon, degrees."""
    pts = poly.vertices
    area = polygon_signed_area(pts)
    scale = bbox_diagonal(pts)
    if area <= (tol.point_eps(scale)) ** 2:
        raise GeometryError("degenerate polygon (zero area)")
    n = len(pts)
    return [angle_at(pts[i - 1], pts[i], pts[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True)
class Quadrilateral:
    """Convex simple quadrilateral, counter-clockwise corners."""

    corners: tuple

    def __init__(self, corners: Sequence[Point2], tol: TolerancePolicy = DEFAULT_TOL):
        pts = tuple(Point2(float(p[0]), float(p[1])) for p in corners)
        if len(pts) != 4:
            raise GeometryError("quadrilateral needs exactly 4 corners")
        if polygon_signed_area(pts) <= 0:
            raise GeometryError("corners must be counter-clockwise with positive area")
        eps = tol.point_eps(bbox_diagonal(pts))
        for i in range(4):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % 4]
            if orientation(a, b, c, 0.0) <= 0:
                raise GeometryError("quadrilateral must be strictly convex")
            if b.dist(c) <= eps:
                raise GeometryError("zero-length side")
        object.__setattr__(self, "corners", pts)

    def polygon(self) -> SimplePolygon:
        return SimplePolygon(self.corners, check=False)

    def angles(self) -> list:
        pts = self.corners
        return [angle_at(pts[i - 1], pts[i], pts[(i + 1) % 4]) for i in range(4)]

    def side_lengths(self) -> list:
        pts = self.corners
        return [pts[i].dist(pts[(i + 1) % 4]) for i in range(4)]


def is_theta_nice(q: Quadrilateral, theta: float, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff all interior angles lie in [90-theta, 90+theta] (plus slack)."""
    if not (0 < theta < 90):
        raise GeometryError("theta must be in (0, 90)")
    lo = 90.0 - theta - tol.eps_angle_deg
    hi = 90.0 + theta + tol.eps_angle_deg
    return all(lo <= a <= hi for a in q.angles())


def eccentricity(q: Quadrilateral) -> float:
    """Longest side length over shortest side length."""
    lens = q.side_lengths()
    return max(lens) / min(lens)


@dataclass(frozen=True)
class Pslg:
    """Planar straight line graph: vertices plus disjoint open edges."""

    vertices: tuple
    edges: tuple

    def __init__(self, vertices: Sequence[Point2], edges: Sequence[tuple],
                 tol: TolerancePolicy = DEFAULT_TOL, check: bool = True):
        pts = tuple(Point2(float(p[0]), float(p[1])) for p in vertices)
        edg = tuple((int(i), int(j)) for i, j in edges)
        for p in pts:
            if not p.is_finite():
                raise GeometryError("non-finite coordinate")
        if check:
            eps = tol.point_eps(bbox_diagonal(pts)) if pts else 0.0
            n = len(pts)
            seen = set()
            for i, j in edg:
                if not (0 <= i < n and 0 <= j < n):
                    raise GeometryError(f"edge ({i},{j}) references a missing vertex")
                if i == j or pts[i].dist(pts[j]) <= eps:
                    raise GeometryError(f"zero-length edge ({i},{j})")
                key = (min(i, j), max(i, j))
                if key in seen:
                    raise GeometryError(f"duplicate edge ({i},{j})")
                seen.add(key)
            for a in range(len(pts)):
                for b in range(a + 1, len(pts)):
                    if pts[a].dist(pts[b]) <= eps:
                        raise GeometryError(f"coincident vertices {a} and {b}")
            for e1 in range(len(edg)):
                i1, j1 = edg[e1]
                for e2 in range(e1 + 1, len(edg)):
                    i2, j2 = edg[e2]
                    if len({i1, j1, i2, j2}) < 4:
                        # Shared endpoint: only forbid overlap along a line.
                        continue
                    if segments_intersect(pts[i1], pts[j1], pts[i2], pts[j2], eps):
                        raise GeometryError(f"edges {e1} and {e2} intersect")
            # Vertices are not allowed in the interior of other edges.
            for v in range(len(pts)):
                for k, (i, j) in enumerate(edg):
                    if v in (i, j):
                        continue
                    if segment_point_distance(pts[i], pts[j], pts[v]) <= eps:
                        raise GeometryError(f"vertex {v} lies on edge {k}")
        object.__setattr__(self, "vertices", pts)
        object.__setattr__(self, "edges", edg)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def scale(self) -> float:
        return bbox_diagonal(self.vertices)


def convex_hull(p: Pslg, tol: TolerancePolicy = DEFAULT_TOL) -> SimplePolygon:
    """Convex hull of the PSLG vertices as a CCW polygon (monotone chain)."""
    pts = sorted(set(p.vertices))
    if len(pts) < 3:
        raise GeometryError("degenerate PSLG: fewer than 3 distinct vertices")

    def build(points):
        out = []
        for q in points:
            while len(out) >= 2 and (out[-1] - out[-2]).cross(q - out[-2]) <= 0:
                out.pop()
            out.append(q)
        return out

    lower = build(pts)
    upper = build(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise GeometryError("degenerate PSLG: all vertices collinear")
    return SimplePolygon(hull, tol=tol, check=False)


# ---------------------------------------------------------------------------
# Face extraction (rotation-system walk on the arrangement induced by the
# PSLG; edges never cross by the Pslg invariant, so the arrangement is the
# graph itself).
# ---------------------------------------------------------------------------

CLASS_SIMPLE = "simple"
CLASS_EDGE_SIMPLE = "edge-simple"
CLASS_NON_SIMPLE = "non-simple"


@dataclass
class Face:
    """A bounded face: outer boundary walk plus optional hole walks."""

    outer: list                 # vertex-index walk, CCW
    holes: list = field(default_factory=list)   # CW walks of islands/holes
    classification: str = CLASS_SIMPLE
    area: float = 0.0

    def walk_points(self, pslg: Pslg) -> list:
        return [pslg.vertices[i] for i in self.outer]


@dataclass
class FaceReport:
    faces: list
    outer_walks: list           # CW walks bounding the unbounded face
    ph_area: float              # area of the polynomial hull region


def _walk_area(pslg: Pslg, walk: Sequence[int]) -> float:
    return polygon_signed_area([pslg.vertices[i] for i in walk])


def _classify_walk(walk: Sequence[int]) -> str:
    edges = set()
    for i in range(len(walk)):
        a, b = walk[i], walk[(i + 1) % len(walk)]
        key = (min(a, b), max(a, b))
        if key in edges:
            return CLASS_NON_SIMPLE
        edges.add(key)
    if len(set(walk)) != len(walk):
        return CLASS_EDGE_SIMPLE
    return CLASS_SIMPLE


def extract_faces(p: Pslg, tol: TolerancePolicy = DEFAULT_TOL) -> FaceReport:
    """All bounded faces of the PSLG with boundary walks and classification.

    Walks are vertex-index cycles; outer boundaries run CCW and hole walks
    CW.  The unbounded face is reported via `outer_walks` (CW cycles).
    """
    pts = p.vertices
    darts = []      # (u, v) directed
    for i, j in p.edges:
        darts.append((i, j))
        darts.append((j, i))
    if not darts:
        return FaceReport([], [], 0.0)

    by_origin: dict = {}
    for d in darts:
        by_origin.setdefault(d[0], []).append(d)
    for v, lst in by_origin.items():
        lst.sort(key=lambda d: (pts[d[1]] - pts[d[0]]).angle_deg())

    def next_dart(d):
        # Interior of the traced face lies to the left of each dart: take
        # the reversed dart and step clockwise in the rotation at its origin.
        u, v = d
        ring = by_origin[v]
        idx = ring.index((v, u))
        return ring[(idx - 1) % len(ring)]

    unused = set(darts)
    cycles = []
    for d0 in darts:
        if d0 not in unused:
            continue
        walk = []
        d = d0
        while True:
            unused.discard(d)
            walk.append(d[0])
            d = next_dart(d)
            if d == d0:
                break
        cycles.append(walk)

    ccw, cw = [], []
    for w in cycles:
        (ccw if _walk_area(p, w) > 0 else cw).append(w)

    faces = [Face(outer=w, area=_walk_area(p, w)) for w in ccw]
    face_polys = []
    for f in faces:
        # A walk may repeat vertices; keep point list for containment tests.
        face_polys.append([pts[i] for i in f.outer])

    outer_walks = []
    eps = tol.point_eps(p.scale())
    for w in cw:
        # A CW cycle is either a hole boundary of the face that contains it
        # or an outer boundary of the polynomial hull (unbounded face side).
        probe = pts[w[0]]
        best = None
        best_area = math.inf
        for k, f in enumerate(faces):
            if set(w) <= set(f.outer):
                continue
            poly = face_polys[k]
            if _point_in_loop(poly, probe) and f.area < best_area:
                best, best_area = k, f.area
        if best is None:
            outer_walks.append(w)
        else:
            faces[best].holes.append(w)
            faces[best].area += _walk_area(p, w)   # hole area is negative

    for f in faces:
        cls = _classify_walk(f.outer)
        if f.holes:
            cls = CLASS_NON_SIMPLE
        f.classification = cls

    ph_area = -sum(_walk_area(p, w) for w in outer_walks)
    return FaceReport(faces, outer_walks, ph_area)


def _point_in_loop(poly: Sequence[Point2], p: Point2) -> bool:
    inside = False
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < xi:
                inside = not inside
    return inside


# ---------------------------------------------------------------------------
# Circle tuples ((n, theta)-tuples)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleTuple:
    """Ordered point tuple on a circle stored as strictly increasing angles.

    Angles are in degrees; the tuple is counter-clockwise and spans less
    than one full turn (args[-1] - args[0] < 360).
    """

    center: Point2
    radius: float
    args: tuple

    def __init__(self, center: Point2, radius: float, args: Sequence[float]):
        if radius <= 0:
            raise GeometryError("radius must be positive")
        a = [float(v) for v in args]
        if len(a) < 1:
            raise GeometryError("need at least one angle")
        base = a[0] % 360.0
        shift = base - a[0]
        a = [v + shift for v in a]
        for i in range(1, len(a)):
            if a[i] <= a[i - 1]:
                raise GeometryError("angles must increase strictly")
        if a[-1] - a[0] >= 360.0:
            raise GeometryError("angles must span less than a full turn")
        object.__setattr__(self, "center", Point2(*center))
        object.__setattr__(self, "radius", float(radius))
        object.__setattr__(self, "args", tuple(a))

    def __len__(self) -> int:
        return len(self.args)

    def points(self) -> list:
        return [from_polar(self.radius, a, self.center) for a in self.args]

    def gaps(self) -> list:
        """Circular gaps between consecutive points, degrees; sums to 360."""
        n = len(self.args)
        out = [self.args[i + 1] - self.args[i] for i in range(n - 1)]
        out.append(360.0 - (self.args[-1] - self.args[0]))
        return out

    def max_gap(self) -> float:
        return max(self.gaps())

    def is_theta_tuple(self, theta: float, slack: float = 1e-9) -> bool:
        return self.max_gap() <= theta + slack

    def scaled(self, factor: float) -> "CircleTuple":
        return CircleTuple(self.center, self.radius * factor, self.args)

    def with_radius(self, radius: float) -> "CircleTuple":
        return CircleTuple(self.center, radius, self.args)

    def rotated(self, degrees: float) -> "CircleTuple":
        return CircleTuple(self.center, self.radius,
                           [a + degrees for a in self.args])

    def polygon(self) -> SimplePolygon:
        return SimplePolygon(self.points(), check=False)


def midpoint_refine(t: CircleTuple, k: int = 1) -> CircleTuple:
    """Add the midpoint of each circular arc, k times (X -> X^k)."""
    if k < 0:
        raise GeometryError("k must be non-negative")
    args = list(t.args)
    for _ in range(k):
        nxt = []
        n = len(args)
        for i in range(n):
            nxt.append(args[i])
            gap = (args[i + 1] - args[i]) if i + 1 < n else 360.0 - (args[-1] - args[0])
            nxt.append(args[i] + gap / 2.0)
        args = nxt
    return CircleTuple(t.center, t.radius, args)
