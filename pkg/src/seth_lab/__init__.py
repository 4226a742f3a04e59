"""Edit-distance engines, the orthogonal-vectors-to-edit-distance
reduction, and a desk-scale verification harness."""

from .editdist import (
    EditOp,
    EditOps,
    apply_ops,
    edit_alignment,
    edit_distance_banded,
    edit_distance_bitparallel,
    edit_distance_bruteforce,
    edit_distance_dp,
)
from .gadgets import (
    ConstraintReport,
    GadgetParams,
    check_params,
    coordinate_gadget_1,
    coordinate_gadget_2,
    gadget_g,
    params_desk,
    params_paper,
    vector_gadget_1,
    vector_gadget_2,
)
from .ov import OvInstance, dot, gen_ov, solve_ov_bruteforce
from .pat import pat_distance, pat_distance_bruteforce, pat_distance_dp
from .reduction import (
    ReductionOutput,
    TheoremViolation,
    build_sequences,
    decide_ov_via_edit,
    decide_ov_via_pat,
    padded_vector_gadget,
)

__all__ = [
    "EditOp",
    "EditOps",
    "apply_ops",
    "edit_alignment",
    "edit_distance_banded",
    "edit_distance_bitparallel",
    "edit_distance_bruteforce",
    "edit_distance_dp",
    "ConstraintReport",
    "GadgetParams",
    "check_params",
    "coordinate_gadget_1",
    "coordinate_gadget_2",
    "gadget_g",
    "params_desk",
    "params_paper",
    "vector_gadget_1",
    "vector_gadget_2",
    "OvInstance",
    "dot",
    "gen_ov",
    "solve_ov_bruteforce",
    "pat_distance",
    "pat_distance_bruteforce",
    "pat_distance_dp",
    "ReductionOutput",
    "TheoremViolation",
    "build_sequences",
    "decide_ov_via_edit",
    "decide_ov_via_pat",
    "padded_vector_gadget",
]

__version__ = "0.1.0"
