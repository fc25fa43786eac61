"""Mechanical checks that the cell complex and the virtual polytope agree.

The geometric side never looks at cell vertex lists: face vertex sets come
from :func:`cyclop.geometry.face_vertices` (faces at perturbed directions),
and they are compared with the vertex labels the complex prescribes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from cyclop import kernels
from cyclop.complex import CellComplex, build_complex
from cyclop.geometry import (
    Direction,
    dot,
    face,
    face_label,
    face_vertices,
    perturb_for_refinement,
    representative_direction,
    support_value,
    vertex_coordinates,
)
from cyclop.partitions import (
    CyclicPartition,
    cell_vertices,
    cycl,
    enumerate_partitions,
    lift_label,
    reduce_label,
)


def phi(v: CyclicPartition) -> tuple[int, ...]:
    """Vertex label of the complex -> vertex of the polytope."""
    return vertex_coordinates(reduce_label(v))


def rank(vectors: Sequence[Sequence]) -> int:
    """Exact rank by fraction-valued Gaussian elimination."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def geometric_dim(xi) -> int:
    """Dimension of the face at ``xi`` from the rank of its segment vectors."""
    vecs = [g.end for g in face(xi).generators()]
    return rank(vecs) if vecs else 0


def random_direction(n: int, rng: random.Random, pinned: bool = False) -> Direction:
    """Random rational direction; ``pinned`` forces one coordinate onto the mean."""
    width = 2 * n * n
    while True:
        x = [Fraction(rng.randint(-width, width)) for _ in range(n)]
        if pinned:
            i = rng.randrange(n)
            x[i] = (sum(x) - x[i]) / (n - 1)
        scale = rng.randint(1, n)
        xi = Direction(tuple(c / scale for c in x))
        if len(set(xi.coords)) > 1:
            return xi


@dataclass
class IsomorphismReport:
    m: int
    checked_cells: int = 0
    covering_pairs: int = 0
    direction_samples: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.checked_cells} cells, {len(self.failures)} failures"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "checked_cells": self.checked_cells,
            "covering_pairs": self.covering_pairs,
            "direction_samples": self.direction_samples,
            "failures": [list(f) for f in self.failures],
            "ok": self.ok,
        }


def verify_theorem1(m: int, samples: int = 500, seed: int = 0,
                     complex_: CellComplex | None = None) -> IsomorphismReport:
    """Check the label-preserving correspondence between cells and faces.

    Forward: every cell's representative direction reproduces its label, its
    face has the prescribed vertex set and dimension. Backward: random
    directions (half of them pinned to the mean, so diagonal) land on cells
    and agree likewise. Incidence: every covering pair is realized by a
    perturbation whose face is a face of the coarser face, and vertex-set
    containment matches refinement over all pairs of cells.
    """
    c = complex_ or build_complex(m)
    report = IsomorphismReport(m)
    fail = report.failures
    directions: list[Direction] = []
    vsets: list[frozenset] = []

    for cell in c.cells:
        lab = cell.label
        xi = representative_direction(lab)
        directions.append(xi)
        geo = face_vertices(xi)
        vsets.append(geo)
        if face_label(xi) != lab:
            fail.append((lab.text, f"direction {list(map(str, xi))} gives {face_label(xi)}"))
        expected = frozenset(phi(v) for v in cell_vertices(lab))
        if geo != expected:
            fail.append((lab.text, "vertex set differs from the cell's vertex labels"))
        if geometric_dim(xi) != cell.dim:
            fail.append((lab.text, f"segment rank {geometric_dim(xi)} != dim {cell.dim}"))
        report.checked_cells += 1

    if len(set(vsets)) != len(vsets):
        fail.append(("*", "two distinct labels share a vertex set"))

    rng = random.Random(seed)
    for k in range(samples):
        xi = random_direction(m - 1, rng, pinned=k % 2 == 1)
        lab = face_label(xi)
        report.direction_samples += 1
        if lab not in c:
            fail.append((lab.text, f"random direction {list(map(str, xi))} leaves the complex"))
            continue
        if face_vertices(xi) != vsets[c.index[lab]]:
            fail.append((lab.text, f"random direction {list(map(str, xi))} gives another face"))

    for hi, lo in c.covering_pairs():
        coarse, fine = c.cells[hi].label, c.cells[lo].label
        xi = directions[hi]
        eta = perturb_for_refinement(xi, fine)
        sub = face(eta)
        top = face(xi)
        h = support_value(xi)
        report.covering_pairs += 1
        if sub.label != fine:
            fail.append((fine.text, f"perturbation of {coarse} lands on {sub.label}"))
        if not vsets[lo] <= vsets[hi]:
            fail.append((fine.text, f"vertices not contained in those of {coarse}"))
        if not (set(sub.q_segments) <= set(top.q_segments)
                and set(sub.r_segments) <= set(top.r_segments)):
            fail.append((fine.text, f"segments not a sub-sum of those of {coarse}"))
        if any(dot(v, xi.coords) != h for v in vsets[lo]):
            fail.append((fine.text, f"vertices off the supporting plane of {coarse}"))

    refine = kernels.refinement_matrix(c.codes, c.codes)
    dims = np.array([cell.dim for cell in c.cells])
    for i, j in zip(*np.nonzero(dims[:, None] < dims[None, :])):
        contained = vsets[i] <= vsets[j]
        if contained != bool(refine[i, j]):
            fail.append((c.cells[i].label.text,
                         f"containment in {c.cells[j].label} is {contained}, refinement is "
                         f"{bool(refine[i, j])}"))
    return report


def two_face_category(label: CyclicPartition) -> str:
    """Shape class of a 2-cell of the five-element complex.

    ``a``: the m-block has three elements; ``b``: m alone, other blocks of
    sizes 2 and 2; ``c``: the m-block has two elements; ``d``: m alone, other
    blocks of sizes 1 and 3.
    """
    if label.m != 5 or label.p != 3:
        raise ValueError(f"{label} is not a 2-cell label on [1..5]")
    home = len(label.blocks[-1])
    if home == 3:
        return "a"
    if home == 2:
        return "c"
    sizes = sorted(len(b) for b in label.blocks[:-1])
    return "b" if sizes == [2, 2] else "d"


def classify_two_faces(m: int = 5) -> dict[str, int]:
    if m != 5:
        raise ValueError("two-face classification is defined for m = 5")
    counts = {"a": 0, "b": 0, "c": 0, "d": 0}
    for lab in enumerate_partitions(5, 3):
        counts[two_face_category(lab)] += 1
    return counts


def _adjacent_transposition(a: Sequence[int], b: Sequence[int]) -> bool:
    diff = [k for k in range(len(a)) if a[k] != b[k]]
    return len(diff) == 2 and diff[1] == diff[0] + 1 and a[diff[0]] == b[diff[1]] \
        and a[diff[1]] == b[diff[0]]


def _inverse(coords: Sequence[int]) -> tuple[int, ...]:
    order = [0] * len(coords)
    for e, pos in enumerate(coords, start=1):
        order[pos - 1] = e
    return tuple(order)


@dataclass
class EdgeCensus:
    diagonal: int = 0
    permutohedral: int = 0
    violations: list[str] = field(default_factory=list)


def edge_census(m: int = 5) -> EdgeCensus:
    """Split edges into translates of some ``r_i`` and ordinary permutohedron edges.

    Reduced labels of the endpoints of a diagonal edge must differ by one
    ``cycl``; those of an ordinary edge by one adjacent transposition.
    """
    out = EdgeCensus()
    for lab in enumerate_partitions(m, m - 1):
        xi = representative_direction(lab)
        f = face(xi)
        a, b = sorted(_inverse(v) for v in face_vertices(xi))
        if f.r_segments:
            out.diagonal += 1
            if cycl(a) != b and cycl(b) != a:
                out.violations.append(f"{lab}: {a} and {b} do not differ by cycl")
        else:
            out.permutohedral += 1
            if not _adjacent_transposition(a, b):
                out.violations.append(f"{lab}: {a} and {b} are not adjacent transpositions")
    return out


def vertex_set(m: int) -> frozenset[tuple[int, ...]]:
    """All 0-dimensional faces, one per vertex label via its representative direction."""
    out = set()
    for order in itertools.permutations(range(1, m)):
        f = face(representative_direction(lift_label(order)))
        if f.q_segments or f.r_segments:
            raise AssertionError(f"face of vertex label {order} is not a point")
        out.add(tuple(int(x) for x in f.translation))
    return frozenset(out)


def decreasing_direction(n: int, k: int) -> Direction:
    """Strictly decreasing direction with exactly ``k`` coordinates above the mean."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}")
    top = n * n
    values = [top + (k - i) for i in range(k)] + [-(i + 1) for i in range(n - k)]
    return Direction.of(values)


def decreasing_vertex_label(n: int, k: int) -> tuple[int, ...]:
    """Reduced label of the vertex at :func:`decreasing_direction` ``(n, k)``."""
    return reduce_label(face_label(decreasing_direction(n, k)))
