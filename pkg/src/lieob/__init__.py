"""Exact rational Lie algebra toolkit: centers, derivations, automorphism
blocks, Chevalley-Eilenberg cohomology and the obstruction classifier."""

from .algebra import (
    JacobiReport,
    LieAlgebra,
    NotAnIdealError,
    ad,
    bracket,
    center,
    change_basis,
    derived_subalgebra,
    direct_sum,
    quotient_algebra,
    verify_jacobi,
)
from .cohomology import (
    LieModule,
    adjoint_module,
    ce_differential,
    cohomology_dim,
    is_closed,
    trivial_module,
)
from .linalg import LinearMap, Subspace, vec
from .maps import (
    BlockDecomposition,
    NotNilpotentError,
    SplitData,
    aut_out_description,
    block_decompose,
    derivation_space,
    exp_ad,
    induced_quotient_automorphism,
    inner_derivations,
    is_automorphism,
)
from .obstruction import (
    ObstructionVerdict,
    Reason,
    SplitResult,
    Status,
    classify_obstruction,
    reduction_report,
    split_check,
)

__version__ = "0.1.0"
