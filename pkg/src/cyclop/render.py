"""Planar virtual polygons drawn as closed polygonal chains, and SVG output.

A virtual polygon ``K - L`` is drawn by merging the counterclockwise edges of
``K`` with the negated edges of ``L`` in the angular order of their outer
normals and walking them head to tail. All chain arithmetic is exact; the
only floats are produced when a scene is mapped isometrically onto the page.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from pathlib import Path
from typing import BinaryIO, Sequence

from cyclop.errors import DegeneratePolygon, ParallelEdges
from cyclop.geometry import (
    VirtualFace,
    add,
    dot,
    face_vertices,
    r_vector,
    unit,
)

Point2 = tuple[Fraction, Fraction]


def _p2(p) -> Point2:
    return (Fraction(p[0]), Fraction(p[1]))


def _add(a: Point2, b: Point2) -> Point2:
    return (a[0] + b[0], a[1] + b[1])


def _sub(a: Point2, b: Point2) -> Point2:
    return (a[0] - b[0], a[1] - b[1])


def _scale(a: Point2, k) -> Point2:
    return (a[0] * k, a[1] * k)


def cross(a: Point2, b: Point2) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _half(d: Point2) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def angle_cmp(a: Point2, b: Point2) -> int:
    """Compare direction angles in ``[0, 2*pi)`` exactly."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _normal(d: Point2) -> Point2:
    # outer normal of a counterclockwise edge with direction d
    return (d[1], -d[0])


def _before_key(d: Point2):
    """Lexicographic objective whose maximizer is the vertex just before edge key ``d``."""
    nrm = _normal(d)
    return lambda x: (x[0] * nrm[0] + x[1] * nrm[1], -(x[0] * d[0] + x[1] * d[1]))


@dataclass(frozen=True)
class ConvexPolygon2:
    """Counterclockwise strictly convex polygon, or a single point."""

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) == 2 or not vs:
            raise DegeneratePolygon(f"{len(vs)} vertices")
        if len(vs) == 1:
            return
        if len(set(vs)) != len(vs):
            raise DegeneratePolygon("repeated vertices")
        k = len(vs)
        for i in range(k):
            if cross(_sub(vs[(i + 1) % k], vs[i]), _sub(vs[(i + 2) % k], vs[(i + 1) % k])) <= 0:
                raise DegeneratePolygon("vertices are not strictly convex counterclockwise")

    @classmethod
    def of(cls, points) -> ConvexPolygon2:
        return cls(tuple(_p2(p) for p in points))

    def edges(self) -> list[Point2]:
        vs = self.vertices
        if len(vs) == 1:
            return []
        return [_sub(vs[(i + 1) % len(vs)], vs[i]) for i in range(len(vs))]

    def support_before(self, d: Point2) -> Point2:
        return max(self.vertices, key=_before_key(d))


@dataclass(frozen=True)
class Chain2:
    """Closed polygonal chain: a start point and the edge vectors walked in order."""

    start: Point2
    steps: tuple[Point2, ...]

    @property
    def vertices(self) -> list[Point2]:
        out = [self.start]
        for s in self.steps[:-1]:
            out.append(_add(out[-1], s))
        return out

    def closes(self) -> bool:
        total = (Fraction(0), Fraction(0))
        for s in self.steps:
            total = _add(total, s)
        return total == (0, 0)

    def distinct_vertices(self) -> set[Point2]:
        return set(self.vertices)

    def rotated_to_min(self) -> Chain2:
        """Same chain, started at its lexicographically smallest vertex."""
        vs = self.vertices
        if not self.steps:
            return self
        k = vs.index(min(vs))
        return Chain2(vs[k], self.steps[k:] + self.steps[:k])


def _check_mutually_nonparallel(first: Sequence[Point2], second: Sequence[Point2]) -> None:
    for a in first:
        for b in second:
            if cross(a, b) == 0:
                raise ParallelEdges(f"edge {a} is parallel to edge {b}")


def _walk(start: Point2, entries: list[tuple[Point2, Point2]]) -> Chain2:
    entries = sorted(entries, key=cmp_to_key(lambda a, b: angle_cmp(a[0], b[0])))
    chain = Chain2(start, tuple(v for _, v in entries))
    if not chain.closes():
        raise AssertionError("chain does not close")
    return chain.rotated_to_min()


def minkowski_diff_chain(K: ConvexPolygon2, L: ConvexPolygon2) -> Chain2:
    """Closed chain of the virtual polygon ``K - L``."""
    ek, el = K.edges(), L.edges()
    _check_mutually_nonparallel(ek, el)
    entries = [(d, d) for d in ek] + [(d, _scale(d, -1)) for d in el]
    if not entries:
        return Chain2(_sub(K.vertices[0], L.vertices[0]), ())
    first = min(entries, key=cmp_to_key(lambda a, b: angle_cmp(a[0], b[0])))[0]
    start = _sub(K.support_before(first), L.support_before(first))
    return _walk(start, entries)


def weighted_segment_chain(segments: Sequence[tuple[Sequence, int]], anchor) -> Chain2:
    """Closed chain of ``anchor + sum(weight * [0, v])`` over ``(v, weight)`` pairs."""
    segs = [(_p2(v), w) for v, w in segments]
    anchor = _p2(anchor)
    for i, (a, wa) in enumerate(segs):
        for b, wb in segs[i + 1 :]:
            if wa != wb and cross(a, b) == 0:
                raise ParallelEdges(f"segments {a} and {b} are parallel with opposite weights")
    entries = []
    for v, w in segs:
        entries.append((v, _scale(v, w)))
        entries.append((_scale(v, -1), _scale(v, -w)))
    if not entries:
        return Chain2(anchor, ())
    first = min(entries, key=cmp_to_key(lambda a, b: angle_cmp(a[0], b[0])))[0]
    objective = _before_key(first)
    start = anchor
    zero = (Fraction(0), Fraction(0))
    for v, w in segs:
        if objective(v) > objective(zero):
            start = _add(start, _scale(v, w))
    return _walk(start, entries)


# -- projection to the plane ------------------------------------------------------


@dataclass(frozen=True)
class PlaneProjection:
    """Exact affine coordinates on a 2-plane ``origin + span(b1, b2)`` of ``Q^n``."""

    origin: tuple[Fraction, ...]
    b1: tuple[Fraction, ...]
    b2: tuple[Fraction, ...]

    def linear(self, v: Sequence) -> Point2:
        """Coordinates of an in-plane vector in the basis ``(b1, b2)``."""
        n = len(self.b1)
        for i in range(n):
            for j in range(i + 1, n):
                det = self.b1[i] * self.b2[j] - self.b1[j] * self.b2[i]
                if det != 0:
                    a = (v[i] * self.b2[j] - v[j] * self.b2[i]) / det
                    b = (self.b1[i] * v[j] - self.b1[j] * v[i]) / det
                    if any(a * x + b * y != c for x, y, c in zip(self.b1, self.b2, v)):
                        raise ValueError(f"{tuple(map(str, v))} is not parallel to the plane")
                    return (Fraction(a), Fraction(b))
        raise DegeneratePolygon("projection basis is not independent")

    def coords(self, x: Sequence) -> Point2:
        return self.linear([Fraction(a) - o for a, o in zip(x, self.origin)])

    def isometric(self, c: Point2) -> tuple[float, float]:
        """Map plane coordinates to an orthonormal frame (Cholesky of the Gram matrix)."""
        g11 = float(dot(self.b1, self.b1))
        g12 = float(dot(self.b1, self.b2))
        g22 = float(dot(self.b2, self.b2))
        r11 = math.sqrt(g11)
        r12 = g12 / r11
        r22 = math.sqrt(g22 - r12 * r12)
        a, b = float(c[0]), float(c[1])
        return (a * r11 + b * r12, b * r22)

    def lift(self, c: Point2) -> tuple[Fraction, ...]:
        return tuple(o + c[0] * x + c[1] * y for o, x, y in zip(self.origin, self.b1, self.b2))


@dataclass
class Scene:
    chains: list[Chain2] = field(default_factory=list)
    points: list[tuple[Point2, str]] = field(default_factory=list)
    projection: PlaneProjection | None = None


def _label_text(v: Sequence[int]) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"


def cp4_projection() -> PlaneProjection:
    """The plane ``x1 + x2 + x3 = 6`` around its centre ``(2, 2, 2)``."""
    f = Fraction
    return PlaneProjection((f(2), f(2), f(2)), (f(1), f(-1), f(0)), (f(1), f(0), f(-1)))


def _zonotope(vectors: Sequence[Point2]) -> ConvexPolygon2:
    chain = weighted_segment_chain([(v, 1) for v in vectors], (0, 0))
    return ConvexPolygon2(tuple(chain.vertices))


# small in-plane shifts of the r-generators that break every coincidence
CP4_PERTURBATION = (
    (Fraction(0), Fraction(1, 5), Fraction(-1, 5)),
    (Fraction(1, 7), Fraction(0), Fraction(-1, 7)),
    (Fraction(-1, 9), Fraction(1, 9), Fraction(0)),
)


def cp4_chain(perturb: bool = False) -> Chain2:
    """Chain of the whole four-element cyclopermutohedron in plane coordinates.

    ``K`` is the hexagon of permutations of ``(1, 2, 3)``; ``L`` is the
    zonotope of the vectors ``R_i``, optionally perturbed within the plane.
    """
    proj = cp4_projection()
    hexagon = [proj.coords(p) for p in ((1, 2, 3), (1, 3, 2), (2, 3, 1),
                                         (3, 2, 1), (3, 1, 2), (2, 1, 3))]
    hexagon.sort(key=cmp_to_key(lambda a, b: angle_cmp(a, b)))
    K = ConvexPolygon2(tuple(hexagon))
    gens = [r_vector(3, i) for i in (1, 2, 3)]
    if perturb:
        gens = [add(g, d) for g, d in zip(gens, CP4_PERTURBATION)]
    L = _zonotope([proj.linear(g) for g in gens])
    return minkowski_diff_chain(K, L)


def project_cp4(vface: VirtualFace | None = None, direction=None, perturb: bool = False) -> Scene:
    """Scene for the whole four-element cyclopermutohedron, or for one of its faces."""
    proj = cp4_projection()
    if vface is None:
        chain = cp4_chain(perturb)
        scene = Scene([chain], [], proj)
        if not perturb:
            for v in sorted(chain.distinct_vertices()):
                scene.points.append((v, _label_text(proj.lift(v))))
        return scene
    if vface.m != 4:
        raise ValueError("project_cp4 takes faces of the four-element polytope")
    return face_scene(vface, direction, proj)


def face_projection(vface: VirtualFace) -> PlaneProjection:
    """A plane through the face's anchor spanned by two of its generators."""
    gens = [g.end for g in vface.generators()]
    n = len(vface.translation)
    if not gens:
        return PlaneProjection(vface.anchor(), unit(n, 1), unit(n, 2))
    b1 = gens[0]
    candidates = gens[1:] + [unit(n, i) for i in range(1, n + 1)]
    b2 = next(g for g in candidates if not _parallel(b1, g))
    return PlaneProjection(vface.anchor(), b1, b2)


def _parallel(a: Sequence, b: Sequence) -> bool:
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


def face_scene(vface: VirtualFace, direction, proj: PlaneProjection | None = None) -> Scene:
    """Chain of a face of dimension at most two, with its vertices labelled."""
    if vface.dim > 2:
        raise ValueError(f"face of dimension {vface.dim} cannot be drawn in the plane")
    proj = proj or face_projection(vface)
    segs = [(proj.linear(g.end), g.weight) for g in vface.generators()]
    chain = weighted_segment_chain(segs, proj.coords(vface.anchor()))
    points = [(proj.coords(v), _label_text(v)) for v in sorted(face_vertices(direction))]
    return Scene([chain], points, proj)


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_svg(scene: Scene, target: str | Path | BinaryIO | None = None) -> bytes:
    """Standalone SVG 1.1 of ``scene``; also written to ``target`` when given."""
    iso = scene.projection.isometric if scene.projection else (lambda c: (float(c[0]), float(c[1])))

    def page(c: Point2) -> tuple[float, float]:
        x, y = iso(c)
        return (x, -y)

    pts = [page(v) for ch in scene.chains for v in ch.vertices] + \
          [page(p) for p, _ in scene.points]
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        w = max(xs) - min(xs)
        h = max(ys) - min(ys)
        w, h = (w or h or 1.0), (h or w or 1.0)
        box = (min(xs) - 0.1 * w, min(ys) - 0.1 * h, 1.2 * w, 1.2 * h)
    else:
        box = (0.0, 0.0, 1.0, 1.0)
    size = max(box[2], box[3])
    out = io.StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    out.write('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
              f'viewBox="{" ".join(_fmt(v) for v in box)}">\n')
    stroke = _fmt(size / 200)
    for ch in scene.chains:
        vs = [page(v) for v in ch.vertices]
        cmds = [f"M {_fmt(vs[0][0])} {_fmt(vs[0][1])}"]
        cmds += [f"L {_fmt(x)} {_fmt(y)}" for x, y in vs[1:]]
        cmds.append("Z")
        out.write(f'  <path d="{" ".join(cmds)}" fill="none" stroke="black" '
                  f'stroke-width="{stroke}"/>\n')
    radius = _fmt(size / 80)
    font = _fmt(size / 25)
    for p, text in scene.points:
        x, y = page(p)
        out.write(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{radius}" fill="black"/>\n')
        out.write(f'  <text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{font}" '
                  f'dx="{radius}" dy="-{radius}">{text}</text>\n')
    out.write("</svg>\n")
    data = out.getvalue().encode("utf-8")
    if target is not None:
        if isinstance(target, (str, Path)):
            Path(target).write_bytes(data)
        else:
            target.write(data)
    return data
