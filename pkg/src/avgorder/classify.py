"""The supersolvability criterion and the below-threshold classification.

The headline facts being checked: an average element order below 31/12
forces supersolvability, equality happens exactly for A4, and every group
below the threshold is a 2-group of a constrained shape, C3, or an
elementary-abelian-3-by-C2 Frobenius group.  Violations raise
``CriterionViolation`` (a distinct error kind) so batch runs can report
them as data.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import CriterionViolation
from .families import alternating, cyclic
from .perm import DEFAULT_ISO_CAP, DEFAULT_LATTICE_CAP, PermGroup, Subgroup, direct_product, is_isomorphic
from .stats import avg_order, order_spectrum
from .structure import frobenius_decomposition, is_elementary_abelian, is_p_group, is_supersolvable

THRESHOLD = Fraction(31, 12)


class CaseTag(enum.Enum):
    TWO_GROUP = "TwoGroupCase"
    C3 = "C3Case"
    FROBENIUS = "FrobeniusCase"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class TwoGroupWitnesses:
    """Case (a) evidence: G' = Frattini, and n_2 beats (17/24)|G| - 3/2."""

    derived: Subgroup
    frattini: Subgroup
    n2: int
    n2_bound: Fraction


@dataclass(frozen=True)
class FrobeniusWitnesses:
    """Case (c) evidence: C_3^m kernel, order-2 complement, and the exact o value."""

    kernel: Subgroup
    complement: Subgroup
    m: int


@dataclass(frozen=True)
class ClassificationReport:
    o_value: Fraction
    comparison: str  # below | equal | above, vs 31/12
    case_tag: CaseTag
    witnesses: Optional[Union[TwoGroupWitnesses, FrobeniusWitnesses]]
    supersolvable: bool


def _comparison(o: Fraction) -> str:
    if o < THRESHOLD:
        return "below"
    if o == THRESHOLD:
        return "equal"
    return "above"


def classify(g: PermGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> ClassificationReport:
    """Compute o exactly and, below the threshold, pin down the structure case.

    Exactly one case applies to each below-threshold group; a group that
    fits none (or fails its case's own verification) raises
    CriterionViolation, which can only mean an implementation bug.
    """
    o = avg_order(g)
    comparison = _comparison(o)
    supersolvable = is_supersolvable(g)
    if comparison != "below":
        return ClassificationReport(o, comparison, CaseTag.NOT_APPLICABLE, None, supersolvable)

    if is_p_group(g, 2):
        derived = g.derived_subgroup()
        frattini = g.frattini_subgroup(lattice_cap)
        if derived.members != frattini.members:
            raise CriterionViolation(
                f"2-group of order {g.order} below threshold with derived != Frattini"
            )
        n2 = order_spectrum(g).n(2)
        bound = Fraction(17, 24) * g.order - Fraction(3, 2)
        if not n2 > bound:
            raise CriterionViolation(
                f"2-group of order {g.order} below threshold with n2 = {n2} <= {bound}"
            )
        witnesses = TwoGroupWitnesses(derived, frattini, n2, bound)
        return ClassificationReport(o, comparison, CaseTag.TWO_GROUP, witnesses, supersolvable)

    if is_isomorphic(g, cyclic(3)):
        return ClassificationReport(o, comparison, CaseTag.C3, None, supersolvable)

    dec = frobenius_decomposition(g)
    if dec is None:
        raise CriterionViolation(
            f"group of order {g.order} below threshold fits no classification case"
        )
    kernel_group = dec.kernel.as_group()
    if not is_elementary_abelian(kernel_group, 3) or dec.complement.order != 2:
        raise CriterionViolation(
            f"below-threshold Frobenius group of order {g.order} has the wrong shape"
        )
    m = 0
    size = dec.kernel.order
    while size % 3 == 0:
        size //= 3
        m += 1
    if size != 1 or dec.kernel.order != 3**m:
        raise CriterionViolation(f"Frobenius kernel order {dec.kernel.order} is not a power of 3")
    if o != frobenius_family_avg_order(m):
        raise CriterionViolation(
            f"Frobenius case o = {o} differs from the closed form at m = {m}"
        )
    witnesses = FrobeniusWitnesses(dec.kernel, dec.complement, m)
    return ClassificationReport(o, comparison, CaseTag.FROBENIUS, witnesses, supersolvable)


@dataclass(frozen=True)
class CriterionRecord:
    """The evaluated facts behind the supersolvability criterion for one group."""

    o_value: Fraction
    comparison: str
    supersolvable: bool
    isomorphic_to_a4: bool


def verify_supersolvability_criterion(
    g: PermGroup, iso_cap: int = DEFAULT_ISO_CAP
) -> CriterionRecord:
    """Assert (o < 31/12 implies supersolvable) and (o = 31/12 iff G is A4)."""
    o = avg_order(g)
    comparison = _comparison(o)
    supersolvable = is_supersolvable(g)
    iso_a4 = g.order == 12 and is_isomorphic(g, alternating(4), iso_cap)
    if comparison == "below" and not supersolvable:
        raise CriterionViolation(
            f"o = {o} < 31/12 but the group of order {g.order} is not supersolvable"
        )
    if (comparison == "equal") != iso_a4:
        raise CriterionViolation(
            f"o = {o}: equality with 31/12 and isomorphism to A4 disagree"
        )
    return CriterionRecord(o, comparison, supersolvable, iso_a4)


# -- closed-form oracles -----------------------------------------------------


def frobenius_family_avg_order(m: int) -> Fraction:
    """o of the order-2*3^m Frobenius family: (5*3^m - 2) / (2*3^m)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return Fraction(5 * 3**m - 2, 2 * 3**m)


def avg_order_cyclic_2t(t: int) -> Fraction:
    """o of the cyclic 2-power family: (2^(2t+1) + 1) / (3 * 2^t)."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return Fraction(2 ** (2 * t + 1) + 1, 3 * 2**t)


def avg_order_c2r_c3(r: int) -> Fraction:
    """o of C_2^r extended fixed-point-freely by C_3: (2^(r+3) - 1) / (3 * 2^r)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return Fraction(2 ** (r + 3) - 1, 3 * 2**r)


def avg_order_c3r_d8(r: int) -> Fraction:
    """(21 * 3^r - 2) / (8 * 3^r), the value attached to the C_3^r-by-D8 shape."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return Fraction(21 * 3**r - 2, 8 * 3**r)


# -- product and quotient laws ------------------------------------------------


@dataclass(frozen=True)
class MultiplicativityRecord:
    o_left: Fraction
    o_right: Fraction
    o_product: Fraction
    holds: bool


def check_multiplicativity(a: PermGroup, b: PermGroup) -> MultiplicativityRecord:
    """For coprime orders, o of the direct product must equal o(a) * o(b)."""
    if math.gcd(a.order, b.order) != 1:
        raise ValueError(f"orders {a.order} and {b.order} are not coprime")
    o_left = avg_order(a)
    o_right = avg_order(b)
    o_product = avg_order(direct_product(a, b))
    if o_product != o_left * o_right:
        raise CriterionViolation(
            f"multiplicativity failed: {o_product} != {o_left} * {o_right}"
        )
    return MultiplicativityRecord(o_left, o_right, o_product, True)


@dataclass(frozen=True)
class QuotientMonotonicityRecord:
    o_value: Fraction
    checked: tuple[tuple[int, Fraction], ...]  # (|N|, o(G/N)) per nontrivial normal N


def check_quotient_monotonicity(
    g: PermGroup, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> QuotientMonotonicityRecord:
    """o(G/N) < o(G) strictly, for every nontrivial normal subgroup N."""
    o = avg_order(g)
    checked = []
    for n in g.normal_subgroups(lattice_cap):
        if n.is_trivial():
            continue
        o_quotient = avg_order(g.quotient(n))
        if not o_quotient < o:
            raise CriterionViolation(
                f"quotient by a normal subgroup of order {n.order} has o = {o_quotient} >= {o}"
            )
        checked.append((n.order, o_quotient))
    return QuotientMonotonicityRecord(o, tuple(checked))
