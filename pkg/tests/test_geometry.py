"""Exact primitives and contact classification.

The classifier is checked against two independent oracles: a brute-force
half-resolution rasterization of box intersections, and vertex enumeration
over all triples of defining planes for skew pairs.
"""

from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bricks.geometry import (
    Brick,
    ContactKind,
    GeometryError,
    _affine_dim,
    _intersection_vertices,
    brick_elements,
    brick_from_box,
    classify_contact,
    det3,
    format_scalar,
    scalar,
    vec3,
)


def box(lo, hi, label="b"):
    return brick_from_box(lo, hi, label)


UNIT = box((0, 0, 0), (1, 1, 1), "unit")


class TestScalar:
    def test_parse(self):
        assert scalar("3/4") == Fraction(3, 4)
        assert scalar("-2") == -2
        assert scalar(Fraction(4, 2)) == 2
        assert isinstance(scalar(Fraction(4, 2)), int)

    def test_rejects_floats_and_junk(self):
        with pytest.raises(GeometryError):
            scalar(0.5)
        with pytest.raises(GeometryError):
            scalar("a/b")
        with pytest.raises(GeometryError):
            scalar("1/0")

    def test_format(self):
        assert format_scalar(Fraction(1, 2)) == "1/2"
        assert format_scalar(Fraction(-3, 6)) == "-1/2"
        assert format_scalar(7) == "7"


class TestBrick:
    def test_unit_cube_from_box(self):
        assert UNIT.origin == vec3(0, 0, 0)
        assert UNIT.generators == (vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1))

    def test_paper_center_cube(self):
        b = box((28, 38, 48), (32, 42, 52), "C1")
        center = b.origin + (b.u + b.v + b.w).scale(Fraction(1, 2))
        assert center == vec3(30, 40, 50)
        assert b.volume == 64

    def test_degenerate_box_rejected(self):
        with pytest.raises(GeometryError):
            box((0, 0, 0), (0, 1, 1))
        with pytest.raises(GeometryError):
            box((0, 0, 0), (1, 1, 0))

    def test_zero_volume_rejected(self):
        with pytest.raises(GeometryError):
            Brick("z", vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(1, 1, 0))

    def test_canonicalization_flips_negative_det(self):
        b = Brick("n", vec3(0, 0, 0), vec3(0, 1, 0), vec3(1, 0, 0), vec3(0, 0, 1))
        assert b.det > 0
        assert set(b.vertices) == set(UNIT.vertices)

    def test_unit_cube_vertices_are_binary_points(self):
        verts, edges, faces = brick_elements(UNIT)
        assert list(verts) == [
            vec3(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)
        ]
        assert len(edges) == 12 and len(faces) == 6

    def test_skew_vertex_sum(self):
        b = Brick("s", vec3(0, 0, 0), vec3(10, 20, 20), vec3(0, 10, 0), vec3(0, 0, 10))
        assert b.vertices[7] == vec3(10, 30, 30)

    def test_every_face_has_four_vertices_and_edges(self):
        b = Brick("s", vec3(1, 2, 3), vec3(2, 1, 0), vec3(0, 3, 1), vec3(1, 0, 4))
        for f in range(6):
            poly = b.face_polygon(f)
            assert len(set(poly)) == 4
            for k in range(4):
                seg = tuple(sorted((poly[k], poly[(k + 1) % 4])))
                assert seg in b.edge_index


coords = st.integers(min_value=0, max_value=6)


@st.composite
def grid_boxes(draw, label="b"):
    lo = [draw(coords) for _ in range(3)]
    hi = []
    for c in lo:
        h = draw(st.integers(min_value=c + 1, max_value=7))
        hi.append(h)
    return box(tuple(lo), tuple(hi), label)


@st.composite
def small_bricks(draw, label="s"):
    origin = vec3(*[draw(st.integers(-2, 2)) for _ in range(3)])
    gens = [vec3(*[draw(st.integers(-2, 2)) for _ in range(3)]) for _ in range(3)]
    assume(det3(*gens) != 0)
    return Brick(label, origin, *gens)


class TestClassifyExamples:
    def test_whole_face(self):
        c = classify_contact(UNIT, box((1, 0, 0), (2, 1, 1)))
        assert c.kind is ContactKind.WHOLE_FACE
        assert (c.face_a, c.face_b) == (1, 0)  # +u face of A, -u face of B

    def test_identical_bricks_overlap(self):
        c = classify_contact(UNIT, box((0, 0, 0), (1, 1, 1), "other"))
        assert c.kind is ContactKind.VOLUME_OVERLAP

    def test_corner_touch(self):
        c = classify_contact(UNIT, box((1, 1, 1), (2, 2, 2)))
        assert c.kind is ContactKind.POINT
        assert c.points == (vec3(1, 1, 1),)

    def test_partial_edge(self):
        c = classify_contact(UNIT, box((1, 1, 0), (2, 2, 2)))
        assert c.kind is ContactKind.PARTIAL_EDGE

    def test_whole_edge(self):
        c = classify_contact(UNIT, box((1, 1, 0), (2, 2, 1)))
        assert c.kind is ContactKind.WHOLE_EDGE
        assert c.points == (vec3(1, 1, 0), vec3(1, 1, 1))

    def test_partial_face(self):
        c = classify_contact(UNIT, box((1, 0, 0), (2, Fraction(1, 2), 1)))
        assert c.kind is ContactKind.PARTIAL_FACE

    def test_disjoint(self):
        assert classify_contact(UNIT, box((3, 3, 3), (4, 4, 4))).kind is ContactKind.DISJOINT

    def test_skew_whole_face(self):
        # two copies of the same skew brick stacked along w share a whole face
        a = Brick("a", vec3(0, 0, 0), vec3(2, 1, 0), vec3(0, 2, 1), vec3(1, 0, 2))
        b = Brick("b", vec3(1, 0, 2), vec3(2, 1, 0), vec3(0, 2, 1), vec3(1, 0, 2))
        c = classify_contact(a, b)
        assert c.kind is ContactKind.WHOLE_FACE
        assert (c.face_a, c.face_b) == (5, 4)


def rasterized_dim(a: Brick, b: Brick) -> int:
    """Spec oracle: sample the closed intersection on the half-integer grid
    and read the dimension off the per-axis extent pattern."""
    pts = []
    for i, j, k in product(range(17), repeat=3):
        p = vec3(Fraction(i, 2), Fraction(j, 2), Fraction(k, 2))
        if a.contains(p) and b.contains(p):
            pts.append(p)
    if not pts:
        return -1
    return sum(
        1 for axis in range(3) if len({p[axis] for p in pts}) > 1
    )


DIM_OF_KIND = {
    ContactKind.DISJOINT: -1,
    ContactKind.POINT: 0,
    ContactKind.WHOLE_EDGE: 1,
    ContactKind.PARTIAL_EDGE: 1,
    ContactKind.WHOLE_FACE: 2,
    ContactKind.PARTIAL_FACE: 2,
    ContactKind.VOLUME_OVERLAP: 3,
}


class TestClassifyProperties:
    @settings(max_examples=60, deadline=None)
    @given(grid_boxes("a"), grid_boxes("b"))
    def test_box_dim_matches_rasterization_oracle(self, a, b):
        assert DIM_OF_KIND[classify_contact(a, b).kind] == rasterized_dim(a, b)

    @settings(max_examples=60, deadline=None)
    @given(grid_boxes("a"), grid_boxes("b"))
    def test_symmetry_boxes(self, a, b):
        assert classify_contact(a, b) == classify_contact(b, a).mirrored()

    @settings(max_examples=25, deadline=None)
    @given(small_bricks("a"), small_bricks("b"))
    def test_symmetry_skew(self, a, b):
        assert classify_contact(a, b) == classify_contact(b, a).mirrored()

    @settings(max_examples=30, deadline=None)
    @given(
        grid_boxes("a"),
        grid_boxes("b"),
        st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
    )
    def test_translation_invariance(self, a, b, t):
        shift = vec3(*t)
        a2 = Brick(a.id, a.origin + shift, a.u, a.v, a.w)
        b2 = Brick(b.id, b.origin + shift, b.u, b.v, b.w)
        c1, c2 = classify_contact(a, b), classify_contact(a2, b2)
        assert c1.kind is c2.kind
        assert (c1.face_a, c1.face_b) == (c2.face_a, c2.face_b)
        assert c2.points == tuple(p + shift for p in c1.points)

    @settings(max_examples=40, deadline=None)
    @given(small_bricks())
    def test_canonical_det_positive(self, b):
        assert b.det > 0


def triple_enumeration_vertices(a: Brick, b: Brick):
    """Independent oracle: every vertex of the intersection polytope lies on
    three defining planes with independent normals; enumerate all triples of
    the 12 planes and filter by the inequalities."""
    planes = []
    for brick in (a, b):
        for n, lo, hi in brick.halfspaces:
            planes.append((n, lo))
            planes.append((n, hi))
    found = set()
    for (n1, d1), (n2, d2), (n3, d3) in combinations(planes, 3):
        det = det3(n1, n2, n3)
        if det == 0:
            continue
        # Cramer's rule, exact
        def col(i):
            rhs = (d1, d2, d3)
            m = [[n1, n2, n3][r] for r in range(3)]
            cols = [[m[r][c] for r in range(3)] for c in range(3)]
            cols[i] = list(rhs)
            return det3(
                vec3(cols[0][0], cols[1][0], cols[2][0]),
                vec3(cols[0][1], cols[1][1], cols[2][1]),
                vec3(cols[0][2], cols[1][2], cols[2][2]),
            )

        p = vec3(Fraction(col(0), det), Fraction(col(1), det), Fraction(col(2), det))
        if a.contains(p) and b.contains(p):
            found.add(p)
    return sorted(found)


@settings(max_examples=25, deadline=None)
@given(small_bricks("a"), small_bricks("b"))
def test_intersection_vertices_match_triple_oracle(a, b):
    ours = _intersection_vertices(a, b)
    oracle = triple_enumeration_vertices(a, b)
    assert ours == oracle
    assert _affine_dim(ours) == _affine_dim(oracle)
