"""Brick complexes, proper-joining validation, and the brick graph.

A complex is a finite labeled list of bricks. Validation classifies every
pair exactly; the brick graph has a node per brick and an arc per pair
sharing a single whole face of each. A corner is a node of degree three or
less.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .geometry import Brick, Contact, ContactKind, classify_contact


class ComplexError(ValueError):
    """Malformed complex (duplicate labels, unknown labels, ...)."""


class StaleReportError(ValueError):
    """A validation report was paired with a complex it was not built from."""


@dataclass(frozen=True)
class BrickComplex:
    """An ordered, uniquely labeled collection of bricks."""

    bricks: tuple[Brick, ...]
    name: str = ""
    note: str = ""

    def __post_init__(self):
        seen = set()
        for b in self.bricks:
            if b.id in seen:
                raise ComplexError(f"duplicate brick label {b.id!r}")
            seen.add(b.id)

    def __len__(self) -> int:
        return len(self.bricks)

    def __iter__(self):
        return iter(self.bricks)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(b.id for b in self.bricks)

    def brick(self, label: str) -> Brick:
        for b in self.bricks:
            if b.id == label:
                return b
        raise ComplexError(f"no brick labeled {label!r}")


def brick_complex(bricks: Iterable[Brick], name: str = "", note: str = "") -> BrickComplex:
    return BrickComplex(tuple(bricks), name=name, note=note)


@dataclass(frozen=True)
class PairContact:
    a: str
    b: str
    contact: Contact


@dataclass(frozen=True)
class ValidationReport:
    """Full pairwise contact audit of a complex.

    contacts lists every non-disjoint pair, each ordered so a < b by label
    and the list sorted by (a, b). properly_joined is true iff no pair is
    improper (volume overlap, partial face, partial edge).
    """

    labels: tuple[str, ...]
    contacts: tuple[PairContact, ...]

    @property
    def improper_pairs(self) -> tuple[PairContact, ...]:
        return tuple(pc for pc in self.contacts if pc.contact.improper)

    @property
    def properly_joined(self) -> bool:
        return not self.improper_pairs

    def whole_face_contacts(self) -> tuple[PairContact, ...]:
        return tuple(
            pc for pc in self.contacts if pc.contact.kind is ContactKind.WHOLE_FACE
        )

    def check_matches(self, complex: BrickComplex) -> None:
        if self.labels != complex.labels:
            raise StaleReportError(
                "validation report labels do not match the complex"
            )


def validate(complex: BrickComplex) -> ValidationReport:
    """Classify all n(n-1)/2 brick pairs; memoized per complex instance."""
    cached = getattr(complex, "_report", None)
    if cached is not None:
        return cached
    records = []
    bricks = complex.bricks
    for i in range(len(bricks)):
        for j in range(i + 1, len(bricks)):
            contact = classify_contact(bricks[i], bricks[j])
            if contact.kind is ContactKind.DISJOINT:
                continue
            a, b = bricks[i].id, bricks[j].id
            if a > b:
                a, b = b, a
                contact = contact.mirrored()
            records.append(PairContact(a, b, contact))
    records.sort(key=lambda pc: (pc.a, pc.b))
    report = ValidationReport(labels=complex.labels, contacts=tuple(records))
    object.__setattr__(complex, "_report", report)
    return report


@dataclass(frozen=True)
class BrickGraph:
    """Nodes are brick labels; arcs are whole-face adjacencies."""

    nodes: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]
    degree: Mapping[str, int] = field(repr=False)

    @property
    def min_degree(self) -> int:
        return min(self.degree.values()) if self.degree else 0


def brick_graph(complex: BrickComplex, report: ValidationReport) -> BrickGraph:
    """Build the brick graph from a validation report.

    Permitted on improper complexes (arcs come only from whole-face pairs);
    the report itself retains the improper flag.
    """
    report.check_matches(complex)
    arcs = []
    seen = set()
    for pc in report.whole_face_contacts():
        pair = (pc.a, pc.b)
        # two properly joined bricks share at most one whole face
        assert pair not in seen, f"duplicate whole-face arc {pair}"
        seen.add(pair)
        arcs.append(pair)
    degree = {label: 0 for label in complex.labels}
    for a, b in arcs:
        degree[a] += 1
        degree[b] += 1
    return BrickGraph(nodes=complex.labels, arcs=tuple(arcs), degree=degree)


def corners(graph: BrickGraph) -> list[str]:
    """All bricks of degree three or less, sorted by label.

    An empty list means the object is cornerless.
    """
    return sorted(label for label in graph.nodes if graph.degree[label] <= 3)


def degree_histogram(graph: BrickGraph) -> dict[int, int]:
    return dict(sorted(Counter(graph.degree.values()).items()))


def component_count(graph: BrickGraph) -> int:
    """Connected components of the brick graph."""
    adjacency = {n: [] for n in graph.nodes}
    for a, b in graph.arcs:
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen: set[str] = set()
    components = 0
    for start in graph.nodes:
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return components
