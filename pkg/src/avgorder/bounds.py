"""Element- and subgroup-count bound checks used as the census sanity layer.

Each check returns a report carrying the exact left- and right-hand sides,
so a failure is immediately diagnosable.  The bounds are theorems
(Laffey's element-count bounds, the Brandl-Shi {1,2,3} spectrum
classification, and the dominance of 2-group subgroup counts by
D8 x C2^(n-3)), so a failing report on a valid group means a bug here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .families import d8_times_c2power
from .perm import DEFAULT_LATTICE_CAP, PermGroup
from .structure import (
    element_order_set,
    exponent,
    frobenius_decomposition,
    is_elementary_abelian,
    is_p_group,
)
from .stats import order_spectrum


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality; ``holds`` is meaningful only when ``applicable``."""

    bound_name: str
    lhs: Union[int, Fraction]
    rhs: Fraction
    holds: bool
    applicable: bool

    def failed(self) -> bool:
        return self.applicable and not self.holds


def check_prime_element_bound(g: PermGroup, p: int) -> BoundReport:
    """Laffey: if G is not a p-group, then n_p(G) <= p/(p+1) * |G| - 1."""
    if g.order % p != 0:
        raise ValueError(f"{p} does not divide the group order {g.order}")
    applicable = not is_p_group(g, p)
    n_p = order_spectrum(g).n(p)
    rhs = Fraction(p, p + 1) * g.order - 1
    return BoundReport(
        bound_name=f"n_{p}_vs_group_order",
        lhs=n_p,
        rhs=rhs,
        holds=(not applicable) or n_p <= rhs,
        applicable=applicable,
    )


def check_3group_exponent_bound(g: PermGroup) -> BoundReport:
    """Laffey: in a 3-group of exponent != 3, n_3(G) <= 7/9 * |G| - 1."""
    if not is_p_group(g, 3):
        raise ValueError(f"order {g.order} is not a power of 3")
    applicable = exponent(g) != 3
    n_3 = order_spectrum(g).n(3)
    rhs = Fraction(7, 9) * g.order - 1
    return BoundReport(
        bound_name="n_3_in_3_group",
        lhs=n_3,
        rhs=rhs,
        holds=(not applicable) or n_3 <= rhs,
        applicable=applicable,
    )


def check_spectrum_123_frobenius(g: PermGroup) -> BoundReport:
    """Brandl-Shi: element orders exactly {1,2,3} force a Frobenius structure.

    The decomposition must have kernel C_3^m with complement of order 2,
    or kernel C_2^(2m) with complement of order 3.
    """
    applicable = element_order_set(g) == (1, 2, 3)
    holds = True
    if applicable:
        holds = False
        dec = frobenius_decomposition(g)
        if dec is not None:
            kernel = dec.kernel.as_group()
            if is_elementary_abelian(kernel, 3) and dec.complement.order == 2:
                holds = True
            elif (
                is_elementary_abelian(kernel, 2)
                and dec.complement.order == 3
                and kernel.order.bit_length() % 2 == 1  # order 2^(2m): even exponent
            ):
                holds = True
    return BoundReport(
        bound_name="spectrum_123_frobenius",
        lhs=0,
        rhs=Fraction(0),
        holds=holds,
        applicable=applicable,
    )


def subgroup_counts_by_order(g: PermGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> dict[int, int]:
    """Histogram of the full subgroup lattice by subgroup order."""
    counts = Counter(s.order for s in g.all_subgroups(lattice_cap))
    return dict(sorted(counts.items()))


_REFERENCE_COUNTS: dict[int, dict[int, int]] = {}


def _reference_counts(n: int, lattice_cap: int) -> dict[int, int]:
    """Subgroup counts of D8 x C2^(n-3), constructed and enumerated, then cached."""
    if n not in _REFERENCE_COUNTS:
        _REFERENCE_COUNTS[n] = subgroup_counts_by_order(d8_times_c2power(n - 3), lattice_cap)
    return _REFERENCE_COUNTS[n]


def check_2group_subgroup_counts(
    g: PermGroup, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> list[BoundReport]:
    """For a 2-group of order 2^n (n >= 3) and exponent != 2, every subgroup
    count s_{2^k}(G) is at most the count in D8 x C2^(n-3); one report per k."""
    if not is_p_group(g, 2):
        raise ValueError(f"order {g.order} is not a power of 2")
    n = g.order.bit_length() - 1
    if n < 3:
        raise ValueError(f"order {g.order} is below 8")
    applicable = exponent(g) != 2
    reports = []
    if not applicable:
        return [
            BoundReport(f"s_{2**k}_vs_reference", 0, Fraction(0), True, False)
            for k in range(n + 1)
        ]
    counts = subgroup_counts_by_order(g, lattice_cap)
    reference = _reference_counts(n, lattice_cap)
    for k in range(n + 1):
        lhs = counts.get(2**k, 0)
        rhs = Fraction(reference.get(2**k, 0))
        reports.append(
            BoundReport(f"s_{2**k}_vs_reference", lhs, rhs, lhs <= rhs, True)
        )
    return reports


def run_all_checks(g: PermGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list[BoundReport]:
    """Every check whose preconditions the group meets, in a fixed order."""
    reports: list[BoundReport] = []
    primes = _prime_divisors(g.order)
    for p in primes:
        reports.append(check_prime_element_bound(g, p))
    if is_p_group(g, 3) and g.order > 1:
        reports.append(check_3group_exponent_bound(g))
    reports.append(check_spectrum_123_frobenius(g))
    if is_p_group(g, 2) and g.order >= 8:
        reports.extend(check_2group_subgroup_counts(g, lattice_cap))
    return reports


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
