"""Exact arithmetic for the cyclopermutohedron.

The cell complex on cyclically ordered partitions, its realization as a
virtual polytope (a weighted Minkowski sum of segments), a checker that the
two agree, moduli complexes of planar linkages, and a planar renderer.
"""

from cyclop.complex import CellComplex, build_complex, euler_characteristic, export, f_vector
from cyclop.errors import CyclopError
from cyclop.geometry import (
    Direction,
    VirtualFace,
    face,
    face_label,
    face_vertices,
    perturb_for_refinement,
    representative_direction,
    support_value,
)
from cyclop.kernels import BACKEND
from cyclop.linkage import Linkage, build_moduli_complex, surface_report, verify_embedding
from cyclop.partitions import (
    CyclicPartition,
    canonicalize,
    cell_vertices,
    enumerate_partitions,
    lift_label,
    parse_label,
    reduce_label,
    refines,
)
from cyclop.render import minkowski_diff_chain, render_svg, weighted_segment_chain
from cyclop.verify import verify_theorem1

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CellComplex", "CyclicPartition", "CyclopError", "Direction", "Linkage",
    "VirtualFace", "build_complex", "build_moduli_complex", "canonicalize", "cell_vertices",
    "enumerate_partitions", "euler_characteristic", "export", "f_vector", "face", "face_label",
    "face_vertices", "lift_label", "minkowski_diff_chain", "parse_label", "perturb_for_refinement",
    "reduce_label", "refines", "render_svg", "representative_direction", "support_value",
    "surface_report", "verify_embedding", "verify_theorem1", "weighted_segment_chain",
]
