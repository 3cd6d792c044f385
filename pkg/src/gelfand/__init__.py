"""Exact verification toolkit for invariant-dimension bounds of matrix-group
pairs over small finite fields: double-coset decompositions with a transpose
action, the symmetric-matrix transporter solver, sphere-swapping reflections,
and complex character tables computed by the modular (mod-l) method.
"""

from .errors import (CapExceededError, DomainError, InternalCheckError,
                     SingularMatrixError)
from .field import Fq, Scalar, build_field, field_from_q
from .matrix import (MatFq, format_matrix, format_vector, mat_vec,
                     parse_matrix, parse_vector, vec_dot)
from .groups import (Embedding, GroupTable, embed_identity, embed_standard,
                     enumerate_gl, enumerate_o, gl_order)
from .cosets import (DoubleCosetDecomposition, InvolutionAction, count_nonfixed,
                     double_cosets, involution_action)
from .symsolve import oracle_symmetric, solve_symmetric
from .reflections import sphere_points, swap_element
from .chartab import (CharacterTable, ConjClasses, InvariantReport,
                      VerificationOutcome, character_table, conjugacy_classes,
                      dim_invariants, verify_pair)
from .pipeline import run_verify, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CapExceededError", "DomainError", "InternalCheckError",
    "SingularMatrixError",
    "Fq", "Scalar", "build_field", "field_from_q",
    "MatFq", "format_matrix", "format_vector", "mat_vec", "parse_matrix",
    "parse_vector", "vec_dot",
    "Embedding", "GroupTable", "embed_identity", "embed_standard",
    "enumerate_gl", "enumerate_o", "gl_order",
    "DoubleCosetDecomposition", "InvolutionAction", "count_nonfixed",
    "double_cosets", "involution_action",
    "oracle_symmetric", "solve_symmetric",
    "sphere_points", "swap_element",
    "CharacterTable", "ConjClasses", "InvariantReport", "VerificationOutcome",
    "character_table", "conjugacy_classes", "dim_invariants", "verify_pair",
    "run_verify", "run_sweep",
]
