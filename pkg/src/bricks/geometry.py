"""Exact rational 3D primitives: scalars, vectors, parallelepiped bricks,
and pairwise contact classification.

Every predicate in this module is computed over exact rationals (Python ints
and ``fractions.Fraction``); no floating point is used anywhere. Whole-face /
whole-edge equality is an exact question, and midpoint splits introduce
denominators of 2, so exactness is not optional.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import NamedTuple, Optional, Union

Scalar = Union[int, Fraction]


class GeometryError(ValueError):
    """Degenerate or non-exact geometric input."""


def _norm(q: Fraction) -> Scalar:
    # keep integral values as plain ints: faster arithmetic, cleaner output
    return q.numerator if q.denominator == 1 else q


def scalar(value) -> Scalar:
    """Coerce an int, Fraction, or "n/d" string to an exact scalar.

    Floats are rejected: the library is exact end to end.
    """
    if isinstance(value, bool):
        raise GeometryError(f"not an exact scalar: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _norm(value)
    if isinstance(value, str):
        try:
            return _norm(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"cannot parse scalar {value!r}: {exc}") from exc
    raise GeometryError(f"not an exact scalar: {value!r}")


def format_scalar(q: Scalar) -> str:
    """Render a scalar as an exact decimal-free token: "5" or "-3/4"."""
    if isinstance(q, Fraction) and q.denominator != 1:
        return f"{q.numerator}/{q.denominator}"
    return str(int(q))


class Vec3(NamedTuple):
    """An exact 3-vector; also used for points (Point3 is an alias).

    Arithmetic demotes integral Fractions back to plain ints, which keeps
    the hot predicates in fast integer arithmetic whenever inputs are
    integral.
    """

    x: Scalar
    y: Scalar
    z: Scalar

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(
            _norm_s(self.x + other.x),
            _norm_s(self.y + other.y),
            _norm_s(self.z + other.z),
        )

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(
            _norm_s(self.x - other.x),
            _norm_s(self.y - other.y),
            _norm_s(self.z - other.z),
        )

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def scale(self, k: Scalar) -> "Vec3":
        return Vec3(_norm_s(self.x * k), _norm_s(self.y * k), _norm_s(self.z * k))

    def dot(self, other: "Vec3") -> Scalar:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> Scalar:
        """Squared Euclidean length (exact)."""
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0


Point3 = Vec3


def _norm_s(q: Scalar) -> Scalar:
    return _norm(q) if isinstance(q, Fraction) else q


def vec3(x, y, z) -> Vec3:
    return Vec3(scalar(x), scalar(y), scalar(z))


def det3(a: Vec3, b: Vec3, c: Vec3) -> Scalar:
    return a.dot(b.cross(c))


# --- canonical element tables -------------------------------------------
#
# Vertex code 0..7 packs the generator coefficients (a, b, c) as a*4+b*2+c,
# which is exactly lexicographic order on (a, b, c). Edge and face orderings
# are derived from the codes so that element indices are stable everywhere.

VERTEX_COEFFS = tuple(product((0, 1), repeat=3))


def _build_edges():
    edges = []
    for axis in range(3):
        others = [a for a in range(3) if a != axis]
        for rest in product((0, 1), repeat=2):
            lo = [0, 0, 0]
            for o, r in zip(others, rest):
                lo[o] = r
            hi = list(lo)
            hi[axis] = 1
            code = lambda t: t[0] * 4 + t[1] * 2 + t[2]
            edges.append((code(lo), code(hi)))
    return tuple(edges)


EDGE_CODES = _build_edges()
EDGE_INDEX = {frozenset(e): i for i, e in enumerate(EDGE_CODES)}


def _build_faces():
    # Face index 2*k + side for generator k; side 0 contains the origin.
    # Corner cycles are oriented so the quad normal points out of the brick
    # (assuming det(u, v, w) > 0, which construction guarantees).
    faces = []
    for k in range(3):
        i, j = (k + 1) % 3, (k + 2) % 3
        ei, ej, ek = [0, 0, 0], [0, 0, 0], [0, 0, 0]
        ei[i] = ej[j] = ek[k] = 1
        code = lambda t: t[0] * 4 + t[1] * 2 + t[2]
        add = lambda *vs: code([sum(c) for c in zip(*vs)])
        zero = [0, 0, 0]
        faces.append((add(zero), add(ej), add(ei, ej), add(ei)))
        faces.append((add(ek), add(ek, ei), add(ek, ei, ej), add(ek, ej)))
    return tuple(faces)


FACE_CYCLES = _build_faces()
FACE_EDGE_INDICES = tuple(
    tuple(EDGE_INDEX[frozenset((cyc[i], cyc[(i + 1) % 4]))] for i in range(4))
    for cyc in FACE_CYCLES
)


def opposite_face(face_index: int) -> int:
    return face_index ^ 1


def face_generator(face_index: int) -> int:
    """Generator direction k for face index 2*k + side."""
    return face_index // 2


FACE_NAMES = ("u-", "u+", "v-", "v+", "w-", "w+")


# --- the brick ------------------------------------------------------------


@dataclass(frozen=True)
class Brick:
    """A parallelepiped: an origin plus three independent generator vectors.

    Stored canonically with det(u, v, w) > 0; construction swaps v and w if
    needed (this preserves the point set). Zero volume is rejected.
    """

    id: str
    origin: Point3
    u: Vec3
    v: Vec3
    w: Vec3

    def __post_init__(self):
        d = det3(self.u, self.v, self.w)
        if d == 0:
            raise GeometryError(f"brick {self.id!r} has zero volume")
        if d < 0:
            v, w = self.v, self.w
            object.__setattr__(self, "v", w)
            object.__setattr__(self, "w", v)

    @property
    def generators(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.u, self.v, self.w)

    @cached_property
    def det(self) -> Scalar:
        return det3(self.u, self.v, self.w)

    @property
    def volume(self) -> Scalar:
        return self.det

    @cached_property
    def vertices(self) -> tuple[Point3, ...]:
        o, (u, v, w) = self.origin, self.generators
        out = []
        for a, b, c in VERTEX_COEFFS:
            p = o
            if a:
                p = p + u
            if b:
                p = p + v
            if c:
                p = p + w
            out.append(p)
        return tuple(out)

    @cached_property
    def vertex_index(self) -> dict[Point3, int]:
        return {p: i for i, p in enumerate(self.vertices)}

    @cached_property
    def edge_segments(self) -> tuple[tuple[Point3, Point3], ...]:
        """The 12 edges, each as a sorted point pair (canonical)."""
        vs = self.vertices
        return tuple(tuple(sorted((vs[a], vs[b]))) for a, b in EDGE_CODES)

    @cached_property
    def edge_index(self) -> dict[tuple[Point3, Point3], int]:
        return {seg: i for i, seg in enumerate(self.edge_segments)}

    def face_polygon(self, face_index: int) -> tuple[Point3, ...]:
        """Corner cycle of a face, oriented outward."""
        vs = self.vertices
        return tuple(vs[c] for c in FACE_CYCLES[face_index])

    @cached_property
    def face_vertex_sets(self) -> tuple[frozenset, ...]:
        vs = self.vertices
        return tuple(frozenset(vs[c] for c in cyc) for cyc in FACE_CYCLES)

    @cached_property
    def halfspaces(self) -> tuple[tuple[Vec3, Scalar, Scalar], ...]:
        """Per generator k: (n, lo, hi) with p inside iff lo <= n.p <= hi.

        n is the cross product of the other two generators in cyclic order,
        so n . g_k = det > 0 for every k.
        """
        o, (u, v, w) = self.origin, self.generators
        gens = (u, v, w)
        out = []
        for k in range(3):
            n = gens[(k + 1) % 3].cross(gens[(k + 2) % 3])
            lo = n.dot(o)
            out.append((n, lo, lo + self.det))
        return tuple(out)

    def contains(self, p: Point3) -> bool:
        """Closed containment test."""
        for n, lo, hi in self.halfspaces:
            d = n.dot(p)
            if d < lo or d > hi:
                return False
        return True

    @cached_property
    def aabb(self) -> tuple[tuple[Scalar, Scalar], ...]:
        vs = self.vertices
        return tuple(
            (min(p[i] for p in vs), max(p[i] for p in vs)) for i in range(3)
        )

    @cached_property
    def box(self) -> Optional[tuple[tuple[Scalar, Scalar], ...]]:
        """Axis intervals if the brick is rectilinear, else None.

        Rectilinear means every generator is parallel to a coordinate axis
        (the point set is then an axis-aligned box).
        """
        for g in self.generators:
            if sum(1 for c in g if c != 0) != 1:
                return None
        return self.aabb

    def face_index_at(self, axis: int, coordinate: Scalar) -> Optional[int]:
        """For a rectilinear brick: face index of the facet in the plane
        ``axis = coordinate``, or None."""
        for k, g in enumerate(self.generators):
            if g[axis] != 0:
                if self.origin[axis] == coordinate:
                    return 2 * k
                if self.origin[axis] + g[axis] == coordinate:
                    return 2 * k + 1
                return None
        return None


def brick_from_box(min_corner, max_corner, id: str) -> Brick:
    """Axis-aligned brick spanning [min, max]; extents must be positive."""
    lo = vec3(*min_corner) if not isinstance(min_corner, Vec3) else min_corner
    hi = vec3(*max_corner) if not isinstance(max_corner, Vec3) else max_corner
    ext = hi - lo
    if ext.x <= 0 or ext.y <= 0 or ext.z <= 0:
        raise GeometryError(
            f"degenerate box for brick {id!r}: extents {ext} must be positive"
        )
    return Brick(
        id, lo, Vec3(ext.x, 0, 0), Vec3(0, ext.y, 0), Vec3(0, 0, ext.z)
    )


def brick_elements(b: Brick):
    """The 8 vertices, 12 edge segments, and 6 face corner cycles of a brick,
    in canonical order."""
    verts = b.vertices
    edges = tuple((verts[i], verts[j]) for i, j in EDGE_CODES)
    faces = tuple(b.face_polygon(f) for f in range(6))
    return verts, edges, faces


# --- contact classification ------------------------------------------------


class ContactKind(Enum):
    DISJOINT = "disjoint"
    POINT = "point"
    WHOLE_EDGE = "whole-edge"
    WHOLE_FACE = "whole-face"
    VOLUME_OVERLAP = "volume-overlap"
    PARTIAL_FACE = "partial-face"
    PARTIAL_EDGE = "partial-edge"


IMPROPER_KINDS = frozenset(
    {ContactKind.VOLUME_OVERLAP, ContactKind.PARTIAL_FACE, ContactKind.PARTIAL_EDGE}
)


@dataclass(frozen=True)
class Contact:
    """Classification of the intersection of a brick pair.

    points carries the contact point (POINT) or the segment endpoints
    (WHOLE_EDGE); face_a / face_b are the face indices of a whole-face
    contact, relative to the pair order used at classification time.
    """

    kind: ContactKind
    points: tuple[Point3, ...] = ()
    face_a: Optional[int] = None
    face_b: Optional[int] = None

    @property
    def improper(self) -> bool:
        return self.kind in IMPROPER_KINDS

    def mirrored(self) -> "Contact":
        """The same contact seen with the argument order swapped."""
        return Contact(self.kind, self.points, self.face_b, self.face_a)


DISJOINT = Contact(ContactKind.DISJOINT)


def _box_intersection_vertices(a: Brick, b: Brick):
    """(dim, vertices) for two rectilinear bricks, or (-1, []) if disjoint."""
    lo, hi = [], []
    for (alo, ahi), (blo, bhi) in zip(a.box, b.box):
        l, h = max(alo, blo), min(ahi, bhi)
        if l > h:
            return -1, []
        lo.append(l)
        hi.append(h)
    dim = sum(1 for l, h in zip(lo, hi) if h > l)
    corners = [
        Vec3(x, y, z)
        for x in ({lo[0], hi[0]})
        for y in ({lo[1], hi[1]})
        for z in ({lo[2], hi[2]})
    ]
    return dim, sorted(set(corners))


def _separated(a: Brick, b: Brick) -> bool:
    """True if a strictly separating axis exists (bricks are disjoint)."""
    for i in range(3):
        (alo, ahi), (blo, bhi) = a.aabb[i], b.aabb[i]
        if ahi < blo or bhi < alo:
            return True
    axes = [n for n, _, _ in a.halfspaces] + [n for n, _, _ in b.halfspaces]
    for ga in a.generators:
        for gb in b.generators:
            n = ga.cross(gb)
            if not n.is_zero():
                axes.append(n)
    va, vb = a.vertices, b.vertices
    for n in axes:
        da = [n.dot(p) for p in va]
        db = [n.dot(p) for p in vb]
        if max(da) < min(db) or max(db) < min(da):
            return True
    return False


def _intersection_vertices(a: Brick, b: Brick) -> list[Point3]:
    """Vertices of the convex polytope a ∩ b, exactly.

    Every vertex of the intersection lies on an edge of one brick (or is a
    vertex of one), so candidates are: vertices of each brick inside the
    other, plus each brick's edges crossed with the other's facet planes,
    all filtered by the 12 defining inequalities.
    """
    found = set()
    for p in a.vertices:
        if b.contains(p):
            found.add(p)
    for p in b.vertices:
        if a.contains(p):
            found.add(p)

    def edge_plane_hits(edges, other: Brick, container: Brick):
        for p, q in edges:
            d = q - p
            for n, lo, hi in other.halfspaces:
                nd = n.dot(d)
                if nd == 0:
                    continue
                npv = n.dot(p)
                for rhs in (lo, hi):
                    t = Fraction(rhs - npv, nd)
                    if 0 < t < 1:
                        pt = p + d.scale(t)
                        if other.contains(pt) and container.contains(pt):
                            found.add(pt)

    edge_plane_hits(a.edge_segments, b, a)
    edge_plane_hits(b.edge_segments, a, b)
    return sorted(found)


def _affine_dim(points) -> int:
    if not points:
        return -1
    p0 = points[0]
    diffs = [p - p0 for p in points[1:] if p != p0]
    if not diffs:
        return 0
    d1 = diffs[0]
    normal = None
    for d in diffs[1:]:
        c = d1.cross(d)
        if not c.is_zero():
            normal = c
            break
    if normal is None:
        return 1
    for d in diffs:
        if normal.dot(d) != 0:
            return 3
    return 2


def _classify_from_vertices(a: Brick, b: Brick, dim: int, verts) -> Contact:
    if dim < 0:
        return DISJOINT
    if dim == 0:
        return Contact(ContactKind.POINT, points=(verts[0],))
    if dim == 1:
        seg = (verts[0], verts[-1])  # verts sorted and collinear
        if seg in a.edge_index and seg in b.edge_index:
            return Contact(ContactKind.WHOLE_EDGE, points=seg)
        return Contact(ContactKind.PARTIAL_EDGE)
    if dim == 2:
        vset = frozenset(verts)
        fa = next(
            (i for i, s in enumerate(a.face_vertex_sets) if s == vset), None
        )
        fb = next(
            (i for i, s in enumerate(b.face_vertex_sets) if s == vset), None
        )
        if fa is not None and fb is not None:
            return Contact(ContactKind.WHOLE_FACE, face_a=fa, face_b=fb)
        return Contact(ContactKind.PARTIAL_FACE)
    return Contact(ContactKind.VOLUME_OVERLAP)


def classify_contact(a: Brick, b: Brick) -> Contact:
    """Classify a ∩ b per the proper-joining taxonomy.

    Total on valid bricks; symmetric up to mirrored face indices. Exact:
    the intersection polytope is enumerated over rationals, then compared
    against whole faces / whole edges of each operand.
    """
    if a.box is not None and b.box is not None:
        dim, verts = _box_intersection_vertices(a, b)
        return _classify_from_vertices(a, b, dim, verts)
    if _separated(a, b):
        return DISJOINT
    verts = _intersection_vertices(a, b)
    return _classify_from_vertices(a, b, _affine_dim(verts), verts)
