import json

import pytest

import oracles
from cyclop.complex import (
    boundary_euler_characteristic,
    build_complex,
    closed_cell_face_counts,
    diamond_violations,
    euler_characteristic,
    export,
    f_vector,
    facet_labels,
    permutohedron_f_vector,
    product_f_vector,
    stirling2,
    vertex_degrees,
)
from cyclop.errors import GroundSetTooSmall, UnsupportedFormat
from cyclop.partitions import canonicalize, enumerate_partitions, refines


@pytest.fixture(scope="module")
def cp5():
    return build_complex(5)


def test_cp4():
    c = build_complex(4)
    assert f_vector(c) == [6, 12]
    assert c.dim == 1
    assert euler_characteristic(c) == -6


def test_cp5(cp5):
    assert f_vector(cp5) == [24, 60, 50]
    assert euler_characteristic(cp5) == 14
    assert len(cp5) == 134


def test_cp6():
    c = build_complex(6)
    assert f_vector(c) == [120, 360, 390, 180]
    assert euler_characteristic(c) == -30


@pytest.mark.parametrize("m", [4, 5, 6])
def test_not_a_sphere(m):
    assert euler_characteristic(build_complex(m)) not in (0, 2)


def test_too_small():
    with pytest.raises(GroundSetTooSmall):
        build_complex(3)


def test_cells_are_exactly_the_partitions(cp5):
    expected = {lab for p in range(3, 6) for lab in enumerate_partitions(5, p)}
    assert set(cp5.index) == expected
    assert [cell.id for cell in cp5.cells] == list(range(len(cp5)))
    dims = [cell.dim for cell in cp5.cells]
    assert dims == sorted(dims)


def test_covers_are_refinements_with_one_more_block(cp5):
    for hi, lo in cp5.covering_pairs():
        a, b = cp5.cells[hi].label, cp5.cells[lo].label
        assert b.p == a.p + 1 and refines(b, a)
    brute = sum(1 for a in cp5.cells for b in cp5.cells
                if b.label.p == a.label.p + 1 and refines(b.label, a.label))
    assert brute == len(cp5.covering_pairs()) == 360


def test_facet_labels_of_a_two_block_split():
    lab = canonicalize([[1, 2], [3], [4]])
    facets = set(facet_labels(lab))
    assert facets == {canonicalize([[1], [2], [3], [4]]), canonicalize([[2], [1], [3], [4]])}


def test_vertex_degrees_cp4():
    assert set(vertex_degrees(build_complex(4)).values()) == {4}


def test_stirling_matches_recurrence():
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert stirling2(n, k) == oracles.stirling2(n, k)


def test_permutohedron_face_numbers():
    assert permutohedron_f_vector(3) == [6, 6, 1]
    assert permutohedron_f_vector(4) == [24, 36, 14, 1]


@pytest.mark.parametrize("m", [5, 6])
def test_closed_cells_are_products_of_permutohedra(m):
    c = build_complex(m)
    for cell in c.cells:
        sizes = [len(b) for b in cell.label.blocks]
        assert closed_cell_face_counts(c, cell.label) == product_f_vector(sizes)


def test_boundary_of_a_closed_cell_is_a_sphere(cp5):
    for cell in cp5.cells:
        expected = 1 + (-1) ** (cell.dim - 1) if cell.dim > 0 else 0
        assert boundary_euler_characteristic(cp5, cell.label) == expected


def test_diamond_property(cp5):
    for cell in cp5.cells:
        assert diamond_violations(cp5, cell.label) == []


def test_export_json_round_trip(cp5):
    doc = json.loads(export(cp5, "json"))
    assert doc["m"] == 5 and len(doc["cells"]) == 134
    assert sum(len(x["covers"]) for x in doc["cells"]) == 360
    assert export(cp5, "json") == export(build_complex(5), "json")


def test_export_dot():
    text = export(build_complex(4), "dot").decode()
    assert text.startswith("digraph CP4 {")
    assert text.count("->") == 24


def test_export_unknown_format(cp5):
    with pytest.raises(UnsupportedFormat):
        export(cp5, "xml")


def test_closure_contains_itself(cp5):
    lab = canonicalize([[1, 2], [3, 4], [5]])
    ids = cp5.closure(lab)
    assert cp5.index[lab] in ids
    assert len(ids) == 4 + 4 + 1
