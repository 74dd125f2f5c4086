"""Triviality classifier for the Mackenzie obstruction of a coupling with fiber g.

The obstruction class lives in degree-3 cohomology of the base with
coefficients in the center bundle.  Triviality is known when g is centerless,
when g is abelian, and when g = Zg + g0 with g0 a centerless ideal.  Anything
else is reported as Undetermined: no nontrivial obstruction is ever claimed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .algebra import LieAlgebra, center, derived_subalgebra
from .linalg import LinearMap, Subspace, unit_vector
from .maps import SplitData, build_split, quotient_by_center


class Status(str, Enum):
    TRIVIAL = "Trivial"
    UNDETERMINED = "Undetermined"


class Reason(str, Enum):
    CENTERLESS = "Centerless"
    ABELIAN = "Abelian"
    CENTRAL_SPLIT = "CentralSplit"


@dataclass(frozen=True)
class ObstructionVerdict:
    status: Status
    reason: Reason | None = None
    diagnostics: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        if (self.status is Status.TRIVIAL) != (self.reason is not None):
            raise ValueError("a reason is given exactly for Trivial verdicts")
        if (self.status is Status.UNDETERMINED) != (self.diagnostics is not None):
            raise ValueError("diagnostics are given exactly for Undetermined verdicts")

    @property
    def is_trivial(self) -> bool:
        return self.status is Status.TRIVIAL

    def __str__(self):
        if self.reason is not None:
            return f"{self.status.value} ({self.reason.value})"
        return self.status.value


@dataclass(frozen=True)
class SplitResult:
    found: bool
    split: SplitData | None = None
    obstruction_witness: Subspace | None = None

    def __bool__(self):
        return self.found


def split_check(g: LieAlgebra) -> SplitResult:
    """Decide whether g = Zg + g0 with g0 a centerless ideal.

    Such g0 exists iff Zg and [g,g] meet trivially.  The complement is a
    basis of [g,g] extended greedily by standard vectors e_0, e_1, ... that
    stay independent of Zg + (current span).
    """
    n = g.dim
    z = center(g)
    d = derived_subalgebra(g)
    meet = z.intersection(d)
    if not meet.is_zero():
        return SplitResult(False, obstruction_witness=meet)
    complement = list(d.basis)
    span = z + d
    for i in range(n):
        if span.dim == n:
            break
        e = unit_vector(n, i)
        if not span.contains(e):
            complement.append(e)
            span = Subspace.span(span.basis + (e,), n)
    return SplitResult(True, split=build_split(g, z.basis, complement))


def classify_obstruction(g: LieAlgebra) -> ObstructionVerdict:
    z = center(g)
    if z.is_zero():
        return ObstructionVerdict(Status.TRIVIAL, Reason.CENTERLESS)
    d = derived_subalgebra(g)
    if d.is_zero():
        return ObstructionVerdict(Status.TRIVIAL, Reason.ABELIAN)
    result = split_check(g)
    if result.found:
        return ObstructionVerdict(Status.TRIVIAL, Reason.CENTRAL_SPLIT)
    # g0 = g/Zg has abelianization g/(Zg + [g,g])
    abel = g.dim - (z + d).dim
    return ObstructionVerdict(Status.UNDETERMINED, diagnostics={
        "dim_center": z.dim,
        "dim_derived": d.dim,
        "dim_center_meet_derived": result.obstruction_witness.dim,
        "dim_hom_block": abel * z.dim,
    })


@dataclass(frozen=True)
class ReductionReport:
    quotient: LieAlgebra
    projection: LinearMap
    quotient_center_dim: int
    note: str

    @property
    def quotient_centerless(self) -> bool:
        return self.quotient_center_dim == 0


def reduction_report(g: LieAlgebra) -> ReductionReport:
    """Pass to g0 = g/Zg.

    Every automorphism of g preserves Zg and so descends to g0, inner ones to
    inner ones.  A bundle with fiber g0 whose structure group reduces through
    Aut(g) -> Aut(g0) has trivial obstruction.  The quotient need not be
    centerless; its center dimension is reported as computed.
    """
    q, proj = quotient_by_center(g)
    qz = center(q).dim
    if qz == 0:
        note = "g/Zg is centerless; couplings for g/Zg reducible through Aut(g) have trivial obstruction"
    else:
        note = (f"g/Zg has a {qz}-dimensional center; couplings for g/Zg reducible "
                "through Aut(g) have trivial obstruction")
    return ReductionReport(q, proj, qz, note)
