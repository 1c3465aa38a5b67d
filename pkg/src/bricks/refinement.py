"""Splitting operators and refinement schedules.

Octasection partitions a brick into eight sub-bricks from its center;
lengthwise quartering splits the cross-section perpendicular to the
strictly longest generator at its midpoints. Both preserve the point set
and total volume exactly, and refinement of a properly joined complex is
asserted to stay properly joined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .complexes import BrickComplex, ValidationReport, validate
from .geometry import Brick, Scalar, Vec3, opposite_face


class RefinementError(ValueError):
    """Invalid schedule or a refinement that broke an invariant."""


@dataclass(frozen=True)
class Keep:
    pass


@dataclass(frozen=True)
class Octasect:
    pass


@dataclass(frozen=True)
class QuarterLengthwise:
    long_dir: int | None = None


@dataclass(frozen=True)
class SplitAt:
    direction: int
    fractions: tuple[Scalar, ...]


RefineOp = Union[Keep, Octasect, QuarterLengthwise, SplitAt]
RefinementSchedule = Mapping[str, RefineOp]

HALF = Fraction(1, 2)


def _child(parent: Brick, label: str, origin: Vec3, gens) -> Brick:
    return Brick(label, origin, gens[0], gens[1], gens[2])


def split_at(b: Brick, direction: int, t: Scalar) -> tuple[Brick, Brick]:
    """Split b across generator `direction` at fraction t in (0, 1).

    The two children tile b and share a whole face of each, so they are
    properly joined and adjacent.
    """
    if not 0 < t < 1:
        raise RefinementError(f"split fraction {t} outside (0, 1)")
    gens = list(b.generators)
    g = gens[direction]
    first = list(gens)
    first[direction] = g.scale(t)
    second = list(gens)
    second[direction] = g.scale(1 - t)
    lo = _child(b, f"{b.id}/0", b.origin, first)
    hi = _child(b, f"{b.id}/1", b.origin + g.scale(t), second)
    return lo, hi


def split_many(b: Brick, direction: int, fractions) -> tuple[Brick, ...]:
    """Split b into len(fractions)+1 slabs at strictly increasing fractions."""
    fs = list(fractions)
    if not fs:
        return (b,)
    if any(not 0 < f < 1 for f in fs) or any(
        fs[i] >= fs[i + 1] for i in range(len(fs) - 1)
    ):
        raise RefinementError(
            f"fractions {fs} must be strictly increasing within (0, 1)"
        )
    gens = list(b.generators)
    g = gens[direction]
    cuts = [0] + fs + [1]
    children = []
    for i in range(len(cuts) - 1):
        span = cuts[i + 1] - cuts[i]
        child_gens = list(gens)
        child_gens[direction] = g.scale(span)
        children.append(
            _child(b, f"{b.id}/s{i}", b.origin + g.scale(cuts[i]), child_gens)
        )
    return tuple(children)


def octasect(b: Brick) -> tuple[Brick, ...]:
    """Partition b into eight sub-bricks from its center.

    Children are labeled id/abc over the octant coefficients; each child is
    face-adjacent to exactly three siblings.
    """
    u, v, w = (g.scale(HALF) for g in b.generators)
    children = []
    for a in (0, 1):
        for bb in (0, 1):
            for c in (0, 1):
                origin = b.origin
                if a:
                    origin = origin + u
                if bb:
                    origin = origin + v
                if c:
                    origin = origin + w
                children.append(
                    _child(b, f"{b.id}/{a}{bb}{c}", origin, (u, v, w))
                )
    return tuple(children)


def long_direction(b: Brick) -> int:
    """Index of the strictly longest generator (exact squared lengths)."""
    lengths = [g.norm2() for g in b.generators]
    top = max(lengths)
    winners = [i for i, n in enumerate(lengths) if n == top]
    if len(winners) > 1:
        raise RefinementError(
            f"brick {b.id!r} has no strictly longest generator "
            f"(squared lengths {lengths}); pass long_dir explicitly"
        )
    return winners[0]


def quarter_lengthwise(b: Brick, long_dir: int | None = None) -> tuple[Brick, ...]:
    """Split the two non-long directions at their midpoints: four bars.

    Each child is face-adjacent to exactly two siblings, and the parent's
    two end faces are partitioned into quarters.
    """
    long_idx = long_direction(b) if long_dir is None else long_dir
    cross = [i for i in range(3) if i != long_idx]
    gens = list(b.generators)
    halved = list(gens)
    for i in cross:
        halved[i] = gens[i].scale(HALF)
    children = []
    for q, (s, t) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        origin = b.origin
        if s:
            origin = origin + halved[cross[0]]
        if t:
            origin = origin + halved[cross[1]]
        children.append(_child(b, f"{b.id}/q{q}", origin, halved))
    return tuple(children)


def expand(b: Brick, op: RefineOp) -> tuple[Brick, ...]:
    if isinstance(op, Keep):
        return (b,)
    if isinstance(op, Octasect):
        return octasect(b)
    if isinstance(op, QuarterLengthwise):
        return quarter_lengthwise(b, op.long_dir)
    if isinstance(op, SplitAt):
        return split_many(b, op.direction, op.fractions)
    raise RefinementError(f"unknown refinement operator {op!r}")


def apply_schedule(complex: BrickComplex, schedule: RefinementSchedule) -> BrickComplex:
    """Replace each scheduled brick by its children (unlisted bricks Keep).

    Exact postconditions, asserted: total volume is conserved, and a
    properly joined input yields a properly joined output.
    """
    unknown = set(schedule) - set(complex.labels)
    if unknown:
        raise RefinementError(f"schedule references unknown labels {sorted(unknown)}")
    out = []
    for b in complex.bricks:
        out.extend(expand(b, schedule.get(b.id, Keep())))
    refined = BrickComplex(tuple(out), name=complex.name, note=complex.note)
    before = sum(b.volume for b in complex.bricks)
    after = sum(b.volume for b in refined.bricks)
    if before != after:
        raise RefinementError(f"volume not conserved: {before} -> {after}")
    if validate(complex).properly_joined:
        bad = validate(refined).improper_pairs
        if bad:
            pc = bad[0]
            raise RefinementError(
                "refinement broke proper joining: "
                f"{pc.a} vs {pc.b} is {pc.contact.kind.value}"
            )
    return refined


def two_opposite_covered(
    complex: BrickComplex, report: ValidationReport
) -> dict[str, bool]:
    """Per brick: does some opposite face pair appear covered (whole-face
    contacts on both k- and k+)?"""
    report.check_matches(complex)
    covered: dict[str, set[int]] = {label: set() for label in complex.labels}
    for pc in report.whole_face_contacts():
        covered[pc.a].add(pc.contact.face_a)
        covered[pc.b].add(pc.contact.face_b)
    return {
        label: any(
            f in faces and opposite_face(f) in faces for f in faces
        )
        for label, faces in covered.items()
    }


def is_cube_shaped(b: Brick) -> bool:
    """Three generators of equal length (exact comparison)."""
    a, bb, c = (g.norm2() for g in b.generators)
    return a == bb == c


def standard_zz_schedule(complex: BrickComplex) -> dict[str, RefineOp]:
    """Cube-shaped bricks octasect; everything else quarters lengthwise."""
    return {
        b.id: Octasect() if is_cube_shaped(b) else QuarterLengthwise()
        for b in complex.bricks
    }
