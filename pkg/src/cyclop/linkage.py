"""Cell structure on the moduli space of a planar polygonal linkage.

Cells are the admissible labels: cyclic partitions of the edge set ``[m]``
all of whose blocks are short (total length strictly below half the
perimeter). The result is a subcomplex of :func:`cyclop.complex.build_complex`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from cyclop.complex import CellComplex, build_complex, euler_characteristic, f_vector
from cyclop.errors import DegenerateLinkage, GroundSetMismatch, GroundSetTooSmall, NotClosable
from cyclop.partitions import CyclicPartition, enumerate_partitions


@dataclass(frozen=True)
class Linkage:
    lengths: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.lengths) < 4:
            raise GroundSetTooSmall(f"a linkage needs at least 4 edges, got {len(self.lengths)}")
        if any(x <= 0 for x in self.lengths):
            raise ValueError("edge lengths must be positive")

    @classmethod
    def of(cls, lengths: Iterable) -> Linkage:
        return cls(tuple(Fraction(x) for x in lengths))

    @classmethod
    def parse(cls, text: str) -> Linkage:
        """Parse ``"1,1,1,1,1"``; entries may be fractions like ``3/2``."""
        return cls.of(x.strip() for x in text.split(","))

    @property
    def m(self) -> int:
        return len(self.lengths)

    @property
    def perimeter(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    def is_closable(self) -> bool:
        return all(2 * x < self.perimeter for x in self.lengths)

    def degenerate_subset(self) -> tuple[int, ...] | None:
        """A subset whose length is exactly half the perimeter, if any."""
        half = self.perimeter / 2
        for size in range(1, self.m):
            for subset in itertools.combinations(range(1, self.m + 1), size):
                if sum(self.lengths[i - 1] for i in subset) == half:
                    return subset
        return None

    def check(self) -> None:
        if not self.is_closable():
            raise NotClosable(f"some edge is at least half of the perimeter in {self}")
        bad = self.degenerate_subset()
        if bad is not None:
            raise DegenerateLinkage(f"edges {set(bad)} sum to half the perimeter")

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.lengths)


def is_short(subset: Iterable[int], linkage: Linkage) -> bool:
    return 2 * sum(linkage.lengths[i - 1] for i in subset) < linkage.perimeter


def is_admissible(label: CyclicPartition, linkage: Linkage) -> bool:
    if label.m != linkage.m:
        raise GroundSetMismatch(f"label on [1..{label.m}], linkage with {linkage.m} edges")
    return all(is_short(b, linkage) for b in label.blocks)


def admissible_labels(linkage: Linkage) -> list[CyclicPartition]:
    out = []
    for p in range(linkage.m, 2, -1):
        out += [lab for lab in enumerate_partitions(linkage.m, p) if is_admissible(lab, linkage)]
    return out


def build_moduli_complex(linkage: Linkage) -> CellComplex:
    linkage.check()
    labels = admissible_labels(linkage)
    c = CellComplex(linkage.m, labels)
    assert all(lab.p >= 3 for lab in labels)
    return c


@dataclass
class EmbeddingReport:
    ok: bool
    problems: list[str] = field(default_factory=list)


def verify_embedding(linkage: Linkage, moduli: CellComplex | None = None) -> EmbeddingReport:
    """Check that ``moduli`` is the admissible subcomplex of the full complex.

    ``moduli`` defaults to :func:`build_moduli_complex`; pass a modified
    complex to test the check itself. Covering relations must coincide with
    the full complex's covers restricted to the admissible cells.
    """
    linkage.check()
    moduli = moduli if moduli is not None else build_moduli_complex(linkage)
    full = build_complex(linkage.m)
    problems = []
    expected = set(admissible_labels(linkage))
    present = set(moduli.index)
    for lab in sorted(present - expected):
        problems.append(f"{lab} is not admissible")
    for lab in sorted(expected - present):
        problems.append(f"admissible {lab} is missing")
    for lab in sorted(present - set(full.index)):
        problems.append(f"{lab} is not a cell of the full complex")
    for cell in moduli.cells:
        if cell.label not in full:
            continue
        ours = {moduli.cells[f].label for f in moduli.covers[cell.id]}
        theirs = {full.cells[f].label for f in full.covers[full.index[cell.label]]}
        if not ours <= theirs:
            problems.append(f"{cell.label} has covers outside the full complex")
        if ours != theirs & present:
            problems.append(f"{cell.label} misses incidences of the full complex")
        if not theirs <= present:
            problems.append(f"faces of {cell.label} are missing (not downward closed)")
    return EmbeddingReport(not problems, problems)


@dataclass
class SurfaceReport:
    f_vector: list[int]
    euler_characteristic: int
    pseudo_manifold: bool
    links_are_cycles: bool
    connected: bool

    @property
    def closed_surface(self) -> bool:
        return self.pseudo_manifold and self.links_are_cycles and self.connected

    def to_dict(self) -> dict:
        return {
            "f_vector": self.f_vector,
            "euler_characteristic": self.euler_characteristic,
            "pseudo_manifold": self.pseudo_manifold,
            "links_are_cycles": self.links_are_cycles,
            "connected": self.connected,
            "closed_surface": self.closed_surface,
        }


def _is_single_cycle(nodes: set, arcs: list[tuple]) -> bool:
    if not nodes:
        return False
    adj: dict = {v: [] for v in nodes}
    for a, b in arcs:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(v) != 2 for v in adj.values()):
        return False
    return _connected(nodes, adj)


def _connected(nodes: set, adj: dict) -> bool:
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == nodes


def surface_report(linkage: Linkage, moduli: CellComplex | None = None) -> SurfaceReport:
    """Surface checks on the 2-dimensional moduli complex of a pentagon."""
    if linkage.m != 5:
        raise ValueError("surface checks apply to 5-edge linkages")
    c = moduli if moduli is not None else build_moduli_complex(linkage)
    dims = [cell.dim for cell in c.cells]
    edges = [i for i, d in enumerate(dims) if d == 1]
    vertices = {i for i, d in enumerate(dims) if d == 0}

    pseudo = all(sum(1 for u in c.covered_by[e] if dims[u] == 2) == 2 for e in edges)

    links_ok = True
    for v in vertices:
        link_nodes = {e for e in c.covered_by[v] if dims[e] == 1}
        arcs = []
        for face_id in {u for e in link_nodes for u in c.covered_by[e] if dims[u] == 2}:
            at_v = [e for e in c.covers[face_id] if e in link_nodes]
            if len(at_v) != 2:
                links_ok = False
                break
            arcs.append(tuple(at_v))
        if not links_ok or not _is_single_cycle(link_nodes, arcs):
            links_ok = False
            break

    adj = {v: [] for v in vertices}
    for e in edges:
        a, b = c.covers[e]
        adj[a].append(b)
        adj[b].append(a)
    connected = bool(vertices) and _connected(vertices, adj)
    return SurfaceReport(f_vector(c), euler_characteristic(c), pseudo, links_ok, connected)
