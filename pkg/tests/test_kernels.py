import numpy as np
import pytest

from cyclop import _kernels_py, kernels
from cyclop.complex import build_complex

try:
    from cyclop import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None

needs_ext = pytest.mark.skipif(_kernels_cy is None, reason="compiled extension not built")


def test_backend_is_recorded():
    assert kernels.BACKEND in {"cython", "python"}


@needs_ext
@pytest.mark.parametrize("m", [4, 5, 6])
def test_backends_agree_on_full_matrix(m):
    codes = build_complex(m).codes
    a = np.asarray(_kernels_py.refinement_matrix(codes, codes))
    b = np.asarray(_kernels_cy.refinement_matrix(codes, codes))
    assert a.shape == b.shape == (len(codes), len(codes))
    assert np.array_equal(a, b)


@needs_ext
def test_backends_agree_on_rows_and_pairs():
    codes = build_complex(5).codes
    for coarse in codes[::7]:
        assert np.array_equal(np.asarray(_kernels_py.refines_many(codes, coarse)),
                              np.asarray(_kernels_cy.refines_many(codes, coarse)))
    for fine in codes[::11]:
        for coarse in codes[::13]:
            assert bool(_kernels_py.refines_pair(fine, coarse)) == \
                bool(_kernels_cy.refines_pair(fine, coarse))


def test_pure_python_selected_by_env(monkeypatch):
    import importlib

    monkeypatch.setenv("CYCLOP_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("CYCLOP_PURE_PYTHON")
        importlib.reload(kernels)


def test_diagonal_is_reflexive():
    codes = build_complex(5).codes
    assert np.asarray(kernels.refinement_matrix(codes, codes)).diagonal().all()
