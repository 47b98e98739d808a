"""Exact-arithmetic verification of homotopy-associative structure data.

The package represents finite families of multilinear structure maps over a
graded basis, checks the defining identities two independent ways (the
direct quadratic identity and the square of the induced tensor-coalgebra
coderivation), ships a three-element example that carries such a structure
at every arity, and produces the induced symmetrized (bracket-style) data.

All arithmetic is exact rational; sweeps optionally run through a compiled
kernel (see ``ainfty._backend``) without changing any result.
"""

from ._backend import active_backend, kernel_available
from .engine import (
    AStructure,
    MultiMap,
    apply_map,
    coderivation_apply,
    d_apply,
    d_squared,
    prime,
    stasheff_defect,
    unprime,
    verify_structure,
)
from .errors import AinftyError, InputError, ParseError
from .example import (
    BUILTIN_STRUCTURES,
    EXAMPLE_SPACE,
    example_m,
    example_mprime,
    example_structure,
    lemma1_check,
    lemma2_top_sum_check,
)
from .formats import parse_structure, serialize_structure
from .graded import (
    BasisElement,
    GradedSpace,
    Scalar,
    TensorPoly,
    Vector,
    Word,
    permute_word,
    poly_add,
    poly_scale,
    word_degree,
)
from .linfty import (
    SymMultiMap,
    linfty_defect,
    symmetrize_prime,
    unshuffles,
    verify_linfty,
)
from .report import CheckRecord, Failure, Report, emit_report
from .signs import (
    alpha_sign,
    desusp_word_sign,
    koszul_permutation_sign,
    pass_operator_sign,
    s_sign,
    susp_iso_sign,
)

__version__ = "0.1.0"

__all__ = [
    "AStructure",
    "AinftyError",
    "BUILTIN_STRUCTURES",
    "BasisElement",
    "CheckRecord",
    "EXAMPLE_SPACE",
    "Failure",
    "GradedSpace",
    "InputError",
    "MultiMap",
    "ParseError",
    "Report",
    "Scalar",
    "SymMultiMap",
    "TensorPoly",
    "Vector",
    "Word",
    "active_backend",
    "alpha_sign",
    "apply_map",
    "coderivation_apply",
    "d_apply",
    "d_squared",
    "desusp_word_sign",
    "emit_report",
    "example_m",
    "example_mprime",
    "example_structure",
    "kernel_available",
    "koszul_permutation_sign",
    "lemma1_check",
    "lemma2_top_sum_check",
    "linfty_defect",
    "parse_structure",
    "pass_operator_sign",
    "permute_word",
    "poly_add",
    "poly_scale",
    "prime",
    "s_sign",
    "serialize_structure",
    "stasheff_defect",
    "susp_iso_sign",
    "symmetrize_prime",
    "unprime",
    "unshuffles",
    "verify_linfty",
    "verify_structure",
    "word_degree",
]
