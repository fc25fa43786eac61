import itertools

import pytest

import oracles
from cyclop.complex import CellComplex, build_complex
from cyclop.geometry import face, representative_direction
from cyclop.partitions import enumerate_partitions
from cyclop.verify import (
    classify_two_faces,
    decreasing_direction,
    decreasing_vertex_label,
    edge_census,
    phi,
    rank,
    two_face_category,
    verify_theorem1,
    vertex_set,
)


@pytest.mark.parametrize("m, cells", [(4, 18), (5, 134)])
def test_theorem1_small(m, cells):
    report = verify_theorem1(m, samples=200)
    assert report.ok, report.failures[:5]
    assert report.checked_cells == cells
    assert report.summary() == f"{cells} cells, 0 failures"


def test_verifier_detects_a_missing_cell():
    labels = [cell.label for cell in build_complex(4).cells]
    report = verify_theorem1(4, samples=200, complex_=CellComplex(4, labels[:-1]))
    assert not report.ok
    assert all("leaves the complex" in msg for _, msg in report.failures)


def test_report_dict():
    d = verify_theorem1(4, samples=10).to_dict()
    assert d["ok"] and d["checked_cells"] == 18 and d["direction_samples"] == 10


@pytest.mark.parametrize("m", [4, 5, 6])
def test_vertex_set_is_the_permutohedron(m):
    assert vertex_set(m) == oracles.permutation_points(m - 1)


def test_phi():
    from cyclop.partitions import lift_label

    assert phi(lift_label((2, 3, 1))) == (3, 1, 2)


def test_two_face_counts_against_geometry():
    brute = {"a": 0, "b": 0, "c": 0, "d": 0}
    for lab in enumerate_partitions(5, 3):
        f = face(representative_direction(lab))
        kind = oracles.two_face_kind(len(f.q_segments), len(f.r_segments))
        assert kind == two_face_category(lab)
        brute[kind] += 1
    assert brute == classify_two_faces() == {"a": 12, "b": 6, "c": 24, "d": 8}


def test_edge_census():
    census = edge_census(5)
    assert census.diagonal + census.permutohedral == 60
    assert census.violations == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_decreasing_direction_labels(n):
    for k in range(1, n):
        expected = tuple(range(k, 0, -1)) + tuple(range(n, k, -1))
        assert decreasing_vertex_label(n, k) == expected
        xi = decreasing_direction(n, k)
        assert all(a > b for a, b in itertools.pairwise(xi.coords))


def test_rank():
    assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert rank([]) == 0
