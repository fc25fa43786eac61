"""The regular cell complex on cyclic partitions into at least three blocks.

Cells are labelled by :class:`~cyclop.partitions.CyclicPartition`; a cell of a
label with ``p`` blocks has dimension ``m - p``. Incidence is stored only as
the covering relation (facets), generated by splitting one block into two
cyclically consecutive pieces. Cell ids are global: cells are ordered by
dimension and, inside a dimension, by the deterministic enumeration order.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import comb, factorial
from typing import Iterable

import numpy as np

from cyclop import kernels
from cyclop.errors import GroundSetMismatch, GroundSetTooSmall, UnsupportedFormat
from cyclop.partitions import CyclicPartition, enumerate_partitions


@dataclass(frozen=True)
class Cell:
    id: int
    label: CyclicPartition
    dim: int


def _rotate_last(blocks: list[tuple[int, ...]], m: int) -> CyclicPartition:
    k = next(i for i, b in enumerate(blocks) if m in b)
    return CyclicPartition(m, tuple(blocks[k + 1 :] + blocks[: k + 1]))


def facet_labels(label: CyclicPartition) -> list[CyclicPartition]:
    """Labels with one more block that refine ``label``."""
    out = []
    blocks = list(label.blocks)
    for k, block in enumerate(blocks):
        size = len(block)
        for mask in range(1, (1 << size) - 1):
            first = tuple(e for i, e in enumerate(block) if mask >> i & 1)
            second = tuple(e for i, e in enumerate(block) if not mask >> i & 1)
            split = blocks[:k] + [first, second] + blocks[k + 1 :]
            out.append(_rotate_last(split, label.m))
    return out


class CellComplex:
    """A finite set of labelled cells with its covering relation.

    The complex is closed under taking facets of the labels it contains only
    if the caller supplies such a set; :func:`build_complex` and the linkage
    builder both do.
    """

    def __init__(self, m: int, labels: Iterable[CyclicPartition]):
        self.m = m
        ordered = sorted(labels, key=lambda lab: m - lab.p)
        self.cells: list[Cell] = []
        self.index: dict[CyclicPartition, int] = {}
        for lab in ordered:
            if lab.m != m:
                raise GroundSetMismatch(f"label {lab} is not on [1..{m}]")
            if lab in self.index:
                continue
            cell = Cell(len(self.cells), lab, m - lab.p)
            self.index[lab] = cell.id
            self.cells.append(cell)
        self.covers: list[tuple[int, ...]] = []
        for cell in self.cells:
            ids = {self.index[f] for f in facet_labels(cell.label) if f in self.index}
            self.covers.append(tuple(sorted(ids)))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, label: CyclicPartition) -> bool:
        return label in self.index

    def cell(self, label: CyclicPartition) -> Cell:
        return self.cells[self.index[label]]

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    @cached_property
    def covered_by(self) -> list[tuple[int, ...]]:
        up: list[list[int]] = [[] for _ in self.cells]
        for cid, facets in enumerate(self.covers):
            for f in facets:
                up[f].append(cid)
        return [tuple(u) for u in up]

    @cached_property
    def codes(self) -> np.ndarray:
        """Block codes of all cells, one row per cell id."""
        return np.array([c.label.code for c in self.cells], dtype=np.intc).reshape(
            len(self.cells), self.m
        )

    def covering_pairs(self) -> list[tuple[int, int]]:
        """``(coarse_id, fine_id)`` for every covering pair."""
        return [(cid, f) for cid, facets in enumerate(self.covers) for f in facets]

    def closure(self, label: CyclicPartition) -> list[int]:
        """Ids of all cells whose labels refine ``label`` (including itself)."""
        if label.m != self.m:
            raise GroundSetMismatch(f"m={label.m} vs m={self.m}")
        mask = kernels.refines_many(self.codes, np.array(label.code, dtype=np.intc))
        return np.flatnonzero(mask).tolist()


def build_complex(m: int) -> CellComplex:
    """All cyclic partitions of ``[m]`` into ``3..m`` blocks, with covers."""
    if m < 4:
        raise GroundSetTooSmall(f"m must be at least 4, got {m}")
    labels = [lab for p in range(m, 2, -1) for lab in enumerate_partitions(m, p)]
    return CellComplex(m, labels)


def f_vector(c: CellComplex) -> list[int]:
    counts = [0] * (c.dim + 1)
    for cell in c.cells:
        counts[cell.dim] += 1
    return counts


def euler_characteristic(c: CellComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(f_vector(c)))


def closed_cell_face_counts(c: CellComplex, label: CyclicPartition) -> list[int]:
    """Number of ``j``-cells in the closure of the cell ``label``, for ``j = 0..dim``."""
    dim = c.m - label.p
    counts = [0] * (dim + 1)
    for cid in c.closure(label):
        counts[c.cells[cid].dim] += 1
    return counts


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, by the explicit alternating sum."""
    return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)


def permutohedron_f_vector(d: int) -> list[int]:
    """Face numbers of the ``(d-1)``-dimensional permutohedron on ``d`` letters."""
    return [factorial(d - k) * stirling2(d, d - k) for k in range(d)]


def product_f_vector(sizes: Iterable[int]) -> list[int]:
    """Face numbers of a Cartesian product of permutohedra (convolution)."""
    out = [1]
    for d in sizes:
        f = permutohedron_f_vector(d)
        conv = [0] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                conv[i + j] += a * b
        out = conv
    return out


def boundary_euler_characteristic(c: CellComplex, label: CyclicPartition) -> int:
    """Euler characteristic of the boundary of a closed cell."""
    own = c.index.get(label)
    return sum((-1) ** c.cells[i].dim for i in c.closure(label) if i != own)


def vertex_degrees(c: CellComplex) -> dict[int, int]:
    """Number of edges at each vertex id."""
    return {cell.id: sum(1 for u in c.covered_by[cell.id] if c.cells[u].dim == 1)
            for cell in c.cells if cell.dim == 0}


def diamond_violations(c: CellComplex, label: CyclicPartition) -> list[tuple[int, int]]:
    """Intervals of length two in the face poset of a closed cell that are not diamonds.

    The poset is the closure of ``label`` plus a bottom element; every
    interval ``[x, z]`` with ``dim z - dim x = 2`` must hold exactly two
    middle elements, and every edge must have exactly two vertices. Returns
    ``(lower, upper)`` id pairs that fail (``lower = -1`` for the bottom).
    """
    bad = []
    for z in c.closure(label):
        dz = c.cells[z].dim
        if dz == 1 and len(c.covers[z]) != 2:
            bad.append((-1, z))
        if dz < 2:
            continue
        middles = Counter(x for y in c.covers[z] for x in c.covers[y])
        for x in c.closure(c.cells[z].label):
            if c.cells[x].dim == dz - 2 and middles[x] != 2:
                bad.append((x, z))
    return bad


def export(c: CellComplex, fmt: str) -> bytes:
    """Serialize as JSON records or as a DOT Hasse diagram."""
    if fmt == "json":
        doc = {
            "m": c.m,
            "cells": [
                {"id": cell.id, "dim": cell.dim, "label": cell.label.text,
                 "covers": list(c.covers[cell.id])}
                for cell in c.cells
            ],
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    if fmt == "dot":
        lines = [f"digraph CP{c.m} {{"]
        lines += [f'  c{cell.id} [label="{cell.label.text}"];' for cell in c.cells]
        lines += [f"  c{hi} -> c{lo};" for hi, lo in c.covering_pairs()]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise UnsupportedFormat(f"unsupported export format {fmt!r}")


def refinement_closure_pairs(c: CellComplex) -> np.ndarray:
    """Full refinement matrix ``R[i, j] = label_i refines label_j`` over the complex."""
    return kernels.refinement_matrix(c.codes, c.codes)


__all__ = [
    "Cell", "CellComplex", "boundary_euler_characteristic", "build_complex",
    "closed_cell_face_counts", "diamond_violations", "euler_characteristic",
    "export", "f_vector", "facet_labels", "permutohedron_f_vector",
    "product_f_vector", "refinement_closure_pairs", "stirling2", "vertex_degrees",
]
