"""The cyclopermutohedron as a weighted Minkowski sum of segments.

Ambient space is ``Q^n`` with ``n = m - 1``. The summands are the segments
``q_ij = [e_i, e_j]`` (``i < j``, weight +1), the point ``S = (1, ..., 1)``,
and the segments ``r_i = [0, R_i]`` with ``R_i = n*e_i - S`` (weight -1).
Faces are taken summand by summand; a face of a negatively weighted
segment is the negation of the segment's face.

Everything here is exact (:class:`fractions.Fraction`); there are no
tolerances. Indices ``i, j`` are 1-based, matching labels on ``[m]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from cyclop.errors import ImproperDirection, NotARefinement, UnrealizableLabel
from cyclop.partitions import CyclicPartition, canonicalize, refines

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Direction:
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> Direction:
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> Direction:
        """Parse ``"7,3,2,0"`` or ``"7/2,3,2,0"``."""
        return cls.of(Fraction(x.strip()) for x in text.split(","))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def mean(self) -> Fraction:
        return sum(self.coords, Fraction(0)) / self.n

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def as_direction(xi) -> Direction:
    return xi if isinstance(xi, Direction) else Direction.of(xi)


# -- the segment family ------------------------------------------------------


def unit(n: int, i: int) -> Point:
    return tuple(Fraction(int(k == i - 1)) for k in range(n))


def ones(n: int) -> Point:
    return (Fraction(1),) * n


def r_vector(n: int, i: int) -> Point:
    """``R_i = n*e_i - S``: ``n - 1`` at position ``i``, ``-1`` elsewhere."""
    return tuple(Fraction(n - 1 if k == i - 1 else -1) for k in range(n))


def add(*points: Sequence) -> Point:
    return tuple(sum(c, Fraction(0)) for c in zip(*points))


def neg(p: Sequence) -> Point:
    return tuple(-c for c in p)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class Segment(NamedTuple):
    start: Point
    end: Point
    weight: int = 1


def r_pairing(xi, i: int) -> Fraction:
    """``<R_i, xi> = n*xi_i - sum(xi)``."""
    xi = as_direction(xi)
    return xi.n * xi[i - 1] - sum(xi.coords, Fraction(0))


# -- cluster schemes ---------------------------------------------------------


class MeanPosition(NamedTuple):
    kind: str  # "gap" or "at"
    index: int  # 1-based, into clusters in decreasing order


@dataclass(frozen=True)
class ClusterScheme:
    """Level sets of a direction in strictly decreasing value order."""

    clusters: tuple[frozenset[int], ...]
    values: tuple[Fraction, ...]
    mean: Fraction
    position: MeanPosition

    @property
    def diagonal(self) -> bool:
        return self.position.kind == "at"

    @property
    def mean_cluster(self) -> frozenset[int] | None:
        if self.diagonal:
            return self.clusters[self.position.index - 1]
        return None


def cluster_scheme(xi) -> ClusterScheme:
    xi = as_direction(xi)
    values = sorted(set(xi.coords), reverse=True)
    if len(values) < 2:
        raise ImproperDirection(f"all coordinates of {list(map(str, xi))} are equal")
    clusters = tuple(
        frozenset(i + 1 for i, x in enumerate(xi.coords) if x == v) for v in values
    )
    mean = xi.mean
    if mean in values:
        position = MeanPosition("at", values.index(mean) + 1)
    else:
        position = MeanPosition("gap", sum(1 for v in values if v > mean))
    return ClusterScheme(clusters, tuple(values), mean, position)


def is_diagonal(xi) -> bool:
    return cluster_scheme(xi).diagonal


def separation_gap(xi) -> Fraction:
    """Smallest nonzero distance among the coordinate values and the mean."""
    xi = as_direction(xi)
    pts = sorted(set(xi.coords) | {xi.mean})
    return min(b - a for a, b in zip(pts, pts[1:]))


# -- faces of the summands ----------------------------------------------------


def q_face(i: int, j: int, xi) -> Point | Segment:
    xi = as_direction(xi)
    n = xi.n
    if xi[i - 1] > xi[j - 1]:
        return unit(n, i)
    if xi[j - 1] > xi[i - 1]:
        return unit(n, j)
    return Segment(unit(n, i), unit(n, j))


def r_face(i: int, xi) -> Point | Segment:
    """Face of ``r_i`` by the sign of ``<R_i, xi>``; negate for ``-r_i``."""
    xi = as_direction(xi)
    n = xi.n
    s = r_pairing(xi, i)
    if s > 0:
        return r_vector(n, i)
    if s < 0:
        return (Fraction(0),) * n
    return Segment((Fraction(0),) * n, r_vector(n, i))


def _summand_faces(xi: Direction) -> tuple[Point, tuple[tuple[int, int], ...], tuple[int, ...]]:
    n = xi.n
    x = xi.coords
    total = sum(x, Fraction(0))
    point = [Fraction(1)] * n  # S
    qs = []
    for i in range(n):
        for j in range(i + 1, n):
            if x[i] > x[j]:
                point[i] += 1
            elif x[j] > x[i]:
                point[j] += 1
            else:
                qs.append((i + 1, j + 1))
    rs = []
    for i in range(n):
        s = n * x[i] - total
        if s > 0:
            # the face of -r_i is the point -R_i
            for k in range(n):
                point[k] += 1
            point[i] -= n
        elif s == 0:
            rs.append(i + 1)
    return tuple(point), tuple(qs), tuple(rs)


# -- faces and labels ---------------------------------------------------------


@dataclass(frozen=True)
class VirtualFace:
    """``translation + sum(q_ij for ij in q_segments) - sum(r_i for i in r_segments)``."""

    translation: Point
    q_segments: tuple[tuple[int, int], ...]
    r_segments: tuple[int, ...]
    label: CyclicPartition
    diagonal: bool

    @property
    def m(self) -> int:
        return self.label.m

    @property
    def dim(self) -> int:
        return self.m - self.label.p

    def generators(self) -> list[Segment]:
        """Segments through the origin, with weights, plus base shifts folded out.

        A ``q_ij`` contributes ``[0, e_j - e_i]`` (its base point ``e_i`` is
        moved into :meth:`anchor`); an ``r_i`` contributes ``[0, R_i]`` with
        weight -1.
        """
        n = len(self.translation)
        zero = (Fraction(0),) * n
        out = [Segment(zero, add(unit(n, j), neg(unit(n, i)))) for i, j in self.q_segments]
        out += [Segment(zero, r_vector(n, i), -1) for i in self.r_segments]
        return out

    def anchor(self) -> Point:
        n = len(self.translation)
        return add(self.translation, *(unit(n, i) for i, _ in self.q_segments))


def face_label(xi) -> CyclicPartition:
    """Cyclic label of the face in direction ``xi``.

    Clusters are read by increasing value; ``m`` is inserted as its own block
    where the mean falls between two clusters, or joins the cluster whose
    value equals the mean.
    """
    xi = as_direction(xi)
    scheme = cluster_scheme(xi)
    m = xi.n + 1
    increasing = [set(c) for c in reversed(scheme.clusters)]
    c = len(increasing)
    kind, j = scheme.position
    if kind == "at":
        increasing[c - j].add(m)
        blocks = increasing
    else:
        blocks = increasing[: c - j] + [{m}] + increasing[c - j :]
    return canonicalize(blocks, m)


def face(xi) -> VirtualFace:
    xi = as_direction(xi)
    scheme = cluster_scheme(xi)
    point, qs, rs = _summand_faces(xi)
    return VirtualFace(point, qs, rs, face_label(xi), scheme.diagonal)


def support_value(xi) -> Fraction:
    """Support function of the weighted segment sum at ``xi``."""
    xi = as_direction(xi)
    x = xi.coords
    n = xi.n
    h = sum(x, Fraction(0))
    for i in range(n):
        for j in range(i + 1, n):
            h += max(x[i], x[j])
    for i in range(1, n + 1):
        h -= max(Fraction(0), r_pairing(xi, i))
    return h


def vertex_coordinates(order: Sequence[int]) -> tuple[int, ...]:
    """Permutohedron vertex labelled by the linear order ``order`` (inverse permutation)."""
    coords = [0] * len(order)
    for pos, e in enumerate(order, start=1):
        coords[e - 1] = pos
    return tuple(coords)


# -- perturbations --------------------------------------------------------------


def perturb(xi, delta: Sequence) -> Direction:
    """``xi + eps*delta`` with ``eps`` below the separation bound of ``xi``.

    ``eps = g / (4 n max|delta|)``, where ``g`` is :func:`separation_gap`, so
    no two clusters merge and no cluster crosses the mean.
    """
    xi = as_direction(xi)
    delta = [Fraction(d) for d in delta]
    big = max(abs(d) for d in delta)
    if big == 0:
        return xi
    eps = separation_gap(xi) / (4 * xi.n * big)
    return Direction(tuple(x + eps * d for x, d in zip(xi.coords, delta)))


def _balance(delta: dict[int, Fraction], fixed: Iterable[int], n: int) -> dict[int, Fraction]:
    # shift every coordinate outside ``fixed`` so that sum(delta) == 0
    fixed = set(fixed)
    free = [i for i in range(1, n + 1) if i not in fixed]
    s = -sum(delta.values(), Fraction(0)) / len(free)
    return {i: d + s if i in free else d for i, d in delta.items()}


def face_vertices(xi) -> frozenset[tuple[int, ...]]:
    """Vertices of the face in direction ``xi``, as faces in perturbed directions.

    Every generic direction near ``xi`` is described by a strict order on
    each cluster and, for a diagonal ``xi``, a cut of the mean cluster's
    order into a lower and an upper part. Each pattern is turned into an
    explicit rational ``eta`` and the (point) face of the whole sum at
    ``eta`` is computed from the summands.
    """
    xi = as_direction(xi)
    scheme = cluster_scheme(xi)
    n = xi.n
    mean_cluster = scheme.mean_cluster
    orders = [list(itertools.permutations(sorted(c))) for c in scheme.clusters]
    out = set()
    for choice in itertools.product(*orders):
        base: dict[int, Fraction] = {}
        for order in choice:
            for rank, i in enumerate(order):
                base[i] = Fraction(rank)
        cuts = range(len(mean_cluster) + 1) if mean_cluster else [None]
        for cut in cuts:
            delta = dict(base)
            if cut is not None:
                order = choice[scheme.position.index - 1]
                for rank, i in enumerate(order):
                    delta[i] = rank - cut + Fraction(1, 2)
                delta = _balance(delta, mean_cluster, n)
            eta = perturb(xi, [delta[i] for i in range(1, n + 1)])
            point, qs, rs = _summand_faces(eta)
            if qs or rs:
                raise AssertionError(f"perturbation {eta} of {xi} is not generic")
            out.add(tuple(int(c) for c in point))
    return frozenset(out)


def realize(
    label: CyclicPartition,
    split: int = 1,
    heights: Sequence | None = None,
    depths: Sequence | None = None,
) -> Direction:
    """A direction whose face has label ``label``.

    With canonical blocks ``(B_1, ..., B_{p-1}, M)``, ``M`` holding ``m``,
    the blocks ``B_1..B_split`` are placed above the mean in increasing order
    and ``B_{split+1}..B_{p-1}`` below it, also increasing; ``M - {m}`` (if
    nonempty) sits exactly at the mean. ``heights`` (increasing, positive)
    and ``depths`` (decreasing, positive) give the relative offsets; the
    upper part is rescaled so the weighted offsets cancel.
    """
    m = label.m
    n = m - 1
    p = label.p
    if p < 3:
        raise UnrealizableLabel(f"{label} has fewer than three blocks")
    if not 1 <= split <= p - 2:
        raise ValueError(f"split must lie in 1..{p - 2}")
    above = label.blocks[:split]
    below = label.blocks[split:-1]
    heights = [Fraction(h) for h in (heights or range(1, len(above) + 1))]
    depths = [Fraction(d) for d in (depths or range(len(below), 0, -1))]
    if any(h <= 0 for h in heights) or any(a >= b for a, b in zip(heights, heights[1:])):
        raise ValueError("heights must be positive and increasing")
    if any(d <= 0 for d in depths) or any(a <= b for a, b in zip(depths, depths[1:])):
        raise ValueError("depths must be positive and decreasing")
    pull = sum((len(b) * d for b, d in zip(below, depths)), Fraction(0))
    push = sum((len(b) * h for b, h in zip(above, heights)), Fraction(0))
    scale = pull / push
    x = [Fraction(0)] * n
    for b, h in zip(above, heights):
        for e in b:
            x[e - 1] = scale * h
    for b, d in zip(below, depths):
        for e in b:
            x[e - 1] = -d
    return Direction(tuple(x))


def representative_direction(label: CyclicPartition) -> Direction:
    """An integer direction realizing ``label`` (checked before returning)."""
    xi = realize(label)
    den = lcm(*(c.denominator for c in xi.coords))
    low = min(xi.coords)
    xi = Direction.of((c - low) * den for c in xi.coords)
    if face_label(xi) != label:
        raise UnrealizableLabel(f"constructed {xi} does not realize {label}")
    return xi


def perturb_for_refinement(xi, target: CyclicPartition) -> Direction:
    """A small perturbation ``eta`` of ``xi`` whose face is labelled ``target``."""
    xi = as_direction(xi)
    coarse = face_label(xi)
    if not refines(target, coarse):
        raise NotARefinement(f"{target} does not refine {coarse}")
    if target == coarse:
        return xi
    scheme = cluster_scheme(xi)
    n = xi.n
    m = n + 1
    delta = {i: Fraction(0) for i in range(1, n + 1)}
    for cluster in scheme.clusters:
        if cluster == scheme.mean_cluster:
            continue
        # a cluster without m is split into a run of target blocks; since the
        # m-block is last, the run never wraps
        subs = [b for b in target.blocks if set(b) <= cluster]
        for rank, b in enumerate(subs):
            for e in b:
                delta[e] = Fraction(rank)
    if scheme.diagonal:
        # the target blocks inside mean-cluster + {m} form one cyclic run ending
        # in the m-block: a tail before it (below the mean) and a head after it
        home = set(scheme.mean_cluster) | {m}
        head = list(itertools.takewhile(lambda b: set(b) <= home, target.blocks[:-1]))
        tail = list(itertools.takewhile(lambda b: set(b) <= home, reversed(target.blocks[:-1])))
        tail.reverse()
        for rank, b in enumerate(tail):
            for e in b:
                delta[e] = Fraction(rank - len(tail))
        for e in target.blocks[-1]:
            if e != m:
                delta[e] = Fraction(0)
        for rank, b in enumerate(head, start=1):
            for e in b:
                delta[e] = Fraction(rank)
        delta = _balance(delta, scheme.mean_cluster, n)
    eta = perturb(xi, [delta[i] for i in range(1, n + 1)])
    if face_label(eta) != target:
        raise UnrealizableLabel(f"perturbation {eta} of {xi} does not realize {target}")
    return eta
