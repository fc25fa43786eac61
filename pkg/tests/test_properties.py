import itertools
from fractions import Fraction

from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from cyclop.geometry import (
    cluster_scheme,
    dot,
    face,
    face_label,
    face_vertices,
    perturb,
    perturb_for_refinement,
    r_pairing,
    realize,
    support_value,
)
from cyclop.partitions import cell_vertices, refines
from cyclop.verify import geometric_dim
from strategies import cyclic_partitions, directions


def tuples(label):
    return tuple(tuple(b) for b in label.blocks)


@given(st.integers(4, 6).flatmap(lambda m: st.tuples(*[cyclic_partitions(m)] * 2)))
def test_refines_matches_oracle(pair):
    a, b = pair
    assert refines(a, b) == oracles.refines(tuples(a), tuples(b))


@given(st.integers(4, 7).flatmap(lambda m: st.tuples(*[cyclic_partitions(m)] * 3)))
def test_refinement_transitive_and_antisymmetric(triple):
    a, b, c = triple
    if refines(a, b) and refines(b, c):
        assert refines(a, c)
    if refines(a, b) and refines(b, a):
        assert a == b


@given(directions(pinned=True))
def test_zero_pairings_form_one_cluster(xi):
    scheme = cluster_scheme(xi)
    zero = frozenset(i for i in range(1, xi.n + 1) if r_pairing(xi, i) == 0)
    assert scheme.diagonal
    assert zero in scheme.clusters and zero == scheme.mean_cluster


@given(directions(), st.lists(st.integers(-9, 9), min_size=6, max_size=6))
def test_small_perturbation_refines(xi, raw):
    eta = perturb(xi, raw[: xi.n])
    assert refines(face_label(eta), face_label(xi))


@given(directions())
def test_support_identity(xi):
    h = support_value(xi)
    assert all(dot(v, xi.coords) == h for v in face_vertices(xi))


@given(directions())
def test_dimension_law(xi):
    f = face(xi)
    assert f.dim == xi.n + 1 - f.label.p == geometric_dim(xi)
    assert bool(f.r_segments) == f.diagonal


@given(directions(), st.data())
def test_label_equivariance(xi, data):
    sigma = data.draw(st.permutations(range(1, xi.n + 1)))
    # (sigma xi)_{sigma(i)} = xi_i
    moved = [Fraction(0)] * xi.n
    for i, s in enumerate(sigma, start=1):
        moved[s - 1] = xi[i - 1]
    mapping = {i: s for i, s in enumerate(sigma, start=1)}
    mapping[xi.n + 1] = xi.n + 1
    assert face_label(moved) == face_label(xi).relabel(mapping)


@given(cyclic_partitions(min_blocks=3), st.data())
def test_label_determines_face(label, data):
    p = label.p
    split = data.draw(st.integers(1, p - 2))
    ups = sorted(data.draw(st.sets(st.integers(1, 30), min_size=split, max_size=split)))
    downs = sorted(data.draw(st.sets(st.integers(1, 30), min_size=p - 1 - split,
                                     max_size=p - 1 - split)), reverse=True)
    xi = realize(label, split, ups, downs)
    other = realize(label)
    assert face_label(xi) == face_label(other) == label
    assert face_vertices(xi) == face_vertices(other) == \
        {tuple(int(c) for c in _phi(v)) for v in cell_vertices(label)}
    assert face(xi).q_segments == face(other).q_segments
    assert face(xi).r_segments == face(other).r_segments


def _phi(v):
    order = [b[0] for b in v.blocks[:-1]]
    coords = [0] * len(order)
    for k, e in enumerate(order, start=1):
        coords[e - 1] = k
    return coords


@given(directions(n=4), st.data())
def test_perturbation_reaches_every_vertex(xi, data):
    lab = face_label(xi)
    target = data.draw(st.sampled_from(sorted(cell_vertices(lab))))
    eta = perturb_for_refinement(xi, target)
    assert face_label(eta) == target


def test_equivariance_exhaustive_small():
    xi = (Fraction(4), Fraction(1), Fraction(1), Fraction(-2))
    base = face_label(xi)
    for sigma in itertools.permutations(range(1, 5)):
        moved = [None] * 4
        for i, s in enumerate(sigma, start=1):
            moved[s - 1] = xi[i - 1]
        mapping = dict(enumerate(sigma, start=1)) | {5: 5}
        assert face_label(moved) == base.relabel(mapping)
