"""Exact computations in the braid group B_3.

Burau matrices over Z[t, t^-1], the word and conjugacy problems through
PSL(2, Z), and the Moody polynomial of a pure braid.
"""

from __future__ import annotations

from .burau import (
    burau,
    burau_mod_p,
    fox_unreduced_burau,
    integral_burau,
    reduce_unreduced,
)
from .conjugacy import (
    Branch2,
    ConjugacyVerdict,
    Decision,
    DichotomyReport,
    SeparatingInvariant,
    are_conjugate,
    branch2_target,
    burau_dichotomy,
    word_problem_equal,
)
from .errors import (
    BadModulus,
    Braid3Error,
    ConsistencyError,
    InputError,
    MalformedSyllables,
    MalformedWord,
    NotPureBraid,
    ReductionMismatch,
    StructureViolation,
    SubdivisionLimit,
    WitnessVerificationFailed,
)
from .harness import BenchReport, bench_conjugacy, brute_force_conjugate, random_braid
from .laurent import LaurentPoly, Mat2, laurent_eq_up_to_unit, laurent_mod_p
from .modular import (
    INFINITY,
    ModularWord,
    braid_to_modular,
    cyclic_reduce,
    modular_to_braid_lift,
    pi_invariant,
    psl2_conjugate,
)
from .moody import MoodyResult, moody, moody_mod_p, validate_turning_points
from .plarc import pl_arc_oracle
from .words import (
    BraidWord,
    artin_image,
    delta,
    exponent_sum,
    invert,
    is_identity,
    parse_braid,
    permutation,
    reverse_bar,
)

__version__ = "0.1.0"
