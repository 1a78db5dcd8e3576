"""Exact element-order statistics: spectra, psi, average order, count bounds.

Every quantity that feeds a comparison is an integer or a
``fractions.Fraction``; floating point never enters a decision here,
because the interesting thresholds are exact rationals.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Mapping

from .perm import PermGroup

# Arbitrary-precision reduced fraction; Fraction already guarantees
# gcd(numerator, denominator) = 1 and denominator > 0.
ExactRational = Fraction


class OrderSpectrum:
    """The element-order histogram d -> n_d of a finite group."""

    __slots__ = ("counts", "distinct_orders", "total")

    def __init__(self, counts: Mapping[int, int]):
        counts = dict(counts)
        if counts.get(1) != 1:
            raise ValueError("a spectrum must count the identity exactly once")
        if any(d < 1 or n < 1 for d, n in counts.items()):
            raise ValueError("orders and counts must be positive")
        self.counts = counts
        self.distinct_orders = tuple(sorted(counts))
        self.total = sum(counts.values())

    def n(self, d: int) -> int:
        """Number of elements of order d (0 when the order does not occur)."""
        return self.counts.get(d, 0)

    def items(self) -> list[tuple[int, int]]:
        return [(d, self.counts[d]) for d in self.distinct_orders]

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderSpectrum) and self.counts == other.counts

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: {n}" for d, n in self.items())
        return f"OrderSpectrum({{{inner}}})"


def order_spectrum(g: PermGroup) -> OrderSpectrum:
    spec = OrderSpectrum(Counter(x.order() for x in g.elements))
    if spec.total != g.order:
        raise RuntimeError("spectrum does not add up to the group order")
    return spec


def psi(g: PermGroup) -> int:
    """Sum of the orders of all elements."""
    return sum(x.order() for x in g.elements)


def avg_order(g: PermGroup) -> ExactRational:
    """Mean element order psi(G)/|G|, in lowest terms."""
    return Fraction(psi(g), g.order)


def cyclic_subgroup_counts(g: PermGroup) -> dict[int, int]:
    """Counts of distinct cyclic subgroups per order d.

    Satisfies n_d = phi(d) * result[d] for every d: a cyclic group of
    order d contains exactly phi(d) generators.
    """
    seen: set[frozenset] = set()
    counts: Counter = Counter()
    identity = g.identity
    for x in g.elements:
        powers = [identity]
        y = x
        while y != identity:
            powers.append(y)
            y = y * x
        key = frozenset(powers)
        if key not in seen:
            seen.add(key)
            counts[len(powers)] += 1
    return dict(sorted(counts.items()))


def psi_via_cyclic_counts(g: PermGroup) -> int:
    """psi computed along the second route: sum of d * phi(d) * (#cyclic subgroups of order d)."""
    return sum(d * euler_phi(d) * c for d, c in cyclic_subgroup_counts(g).items())


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("totient is defined for positive integers")
    result = n
    d = 2
    while d * d <= n:
        if n % d == 0:
            result -= result // d
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        result -= result // n
    return result


def spectrum_count_bound(
    spectrum: OrderSpectrum, group_order: int, s: int, c: ExactRational
) -> ExactRational:
    """Lower bound forced on n_{d_{s-1}} when the average order is below c.

    With 1 = d_1 < ... < d_r the occurring element orders and 3 <= s <= r,
    an average order below c forces

        n_{d_{s-1}} > (d_s - c)/(d_s - d_{s-1}) * |G|
                      - sum_{i=1}^{s-2} (d_s - d_i)/(d_s - d_{s-1}) * n_{d_i}.

    This returns the right-hand side exactly; the caller supplies the
    hypothesis and performs the comparison, so the boundary can be probed.
    """
    orders = spectrum.distinct_orders
    r = len(orders)
    if r < 3:
        raise ValueError("the bound needs at least three distinct element orders")
    if not 3 <= s <= r:
        raise ValueError(f"s must lie in [3, {r}], got {s}")
    if c <= 0:
        raise ValueError("c must be positive")
    d_s = orders[s - 1]
    d_prev = orders[s - 2]
    gap = d_s - d_prev
    bound = Fraction(d_s - Fraction(c), gap) * group_order
    for i in range(s - 2):
        d_i = orders[i]
        bound -= Fraction(d_s - d_i, gap) * spectrum.n(d_i)
    return bound
