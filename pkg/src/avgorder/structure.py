"""Structural predicates: the solvability hierarchy, Frobenius structure, and friends."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .perm import (
    DEFAULT_LATTICE_CAP,
    PermGroup,
    Subgroup,
    _members_nilpotent,
    _prime_factors,
    _reduce_generators,
)


def is_abelian(g: PermGroup) -> bool:
    return all(x * y == y * x for x in g.generators for y in g.generators)


def is_nilpotent(g: PermGroup) -> bool:
    """True iff every Sylow subgroup is normal.

    Equivalently: for each prime p the p-elements close under
    multiplication, making them the unique (hence normal) Sylow
    p-subgroup.  This needs no subgroup lattice.
    """
    return _members_nilpotent(g.elements)


def is_solvable(g: PermGroup) -> bool:
    """True iff the derived series reaches the trivial subgroup."""
    current = g
    while current.order > 1:
        derived = current.derived_subgroup()
        if derived.order == current.order:
            return False
        current = derived.as_group()
    return True


def is_supersolvable(g: PermGroup) -> bool:
    """Greedy chain test: repeatedly factor out a normal subgroup of prime order.

    If the group is supersolvable, any prime-order normal subgroup works
    (quotients of supersolvable groups are supersolvable, and a completed
    chain pulls back to a normal series with cyclic factors), so the
    greedy choice is safe.  If no prime-order normal subgroup exists the
    group cannot be supersolvable.
    """
    current = g
    while current.order > 1:
        step = _prime_order_normal_subgroup(current)
        if step is None:
            return False
        current = current.quotient(step)
    return True


def _prime_order_normal_subgroup(g: PermGroup) -> Optional[Subgroup]:
    seen: set[frozenset] = set()
    for x in g.sorted_elements:
        k = x.order()
        if k == 1 or _prime_factors(k) != [k]:
            continue
        members = frozenset(x**i for i in range(k))
        if members in seen:
            continue
        seen.add(members)
        if all(frozenset(t * m * t.inverse() for m in members) == members for t in g.generators):
            return Subgroup(g, members, _gens=(x,))
    return None


def exponent(g: PermGroup) -> int:
    """Least common multiple of all element orders."""
    return math.lcm(*(x.order() for x in g.elements))


def element_order_set(g: PermGroup) -> tuple[int, ...]:
    """The distinct element orders, ascending."""
    return tuple(sorted({x.order() for x in g.elements}))


def is_elementary_abelian(g: PermGroup, p: int) -> bool:
    """Abelian with every non-identity element of order p."""
    if not is_abelian(g):
        return False
    return all(x.order() == p for x in g.elements if not x.is_identity())


def is_p_group(g: PermGroup, p: int) -> bool:
    n = g.order
    while n % p == 0:
        n //= p
    return n == 1


def omega1(g: PermGroup, p: int) -> Subgroup:
    """Subgroup of a p-group generated by all elements of order dividing p."""
    if not is_p_group(g, p):
        raise ValueError(f"omega1 needs a {p}-group, got order {g.order}")
    return g.subgroup([x for x in g.elements if x.order() in (1, p)])


@dataclass(frozen=True)
class FrobeniusDecomposition:
    """A kernel/complement pair witnessing Frobenius structure."""

    kernel: Subgroup
    complement: Subgroup

    def verify(self) -> None:
        """Re-check all defining conditions, independent of how the pair was found."""
        g = self.kernel.parent
        if self.complement.parent is not g:
            raise ValueError("kernel and complement live in different groups")
        if not self.kernel.is_normal():
            raise ValueError("kernel is not normal")
        if self.kernel.members & self.complement.members != {g.identity}:
            raise ValueError("kernel and complement intersect nontrivially")
        if self.kernel.order * self.complement.order != g.order:
            raise ValueError("kernel and complement orders do not multiply to |G|")
        if not _fixed_point_free(self.kernel, self.complement):
            raise ValueError("complement action has a fixed point")


def _fixed_point_free(kernel: Subgroup, complement: Subgroup) -> bool:
    e = kernel.parent.identity
    for h in complement.members:
        if h == e:
            continue
        hinv = h.inverse()
        for k in kernel.members:
            if k == e:
                continue
            if h * k * hinv == k:
                return False
    return True


def frobenius_decomposition(g: PermGroup) -> Optional[FrobeniusDecomposition]:
    """Search for a Frobenius kernel/complement pair; None if there is none.

    A Frobenius kernel is a normal Hall subgroup (the complement acts
    semiregularly on it, so their orders are coprime), and a normal Hall
    subgroup of order d, if it exists, is exactly the set of elements
    whose order divides d.  So it suffices to scan the Hall divisors of
    |G| in ascending order, test whether that element set closes, find a
    complement (one always exists for a normal Hall subgroup), and check
    fixed-point-freeness.  All complements of a given kernel are
    conjugate, so checking one of them decides the property.
    """
    n = g.order
    order_of = {x: x.order() for x in g.elements}
    for d in _hall_divisors(n):
        primes = set(_prime_factors(d))
        candidate = frozenset(x for x, k in order_of.items() if set(_prime_factors(k)) <= primes)
        if len(candidate) != d:
            continue
        gens, closure = _reduce_generators(candidate, n)
        if closure != candidate:
            continue
        kernel = Subgroup(g, candidate, _gens=tuple(gens))
        complement = _find_complement(g, kernel, n // d, order_of)
        if complement is None:
            continue
        if _fixed_point_free(kernel, complement):
            decomposition = FrobeniusDecomposition(kernel, complement)
            decomposition.verify()
            return decomposition
    return None


def _hall_divisors(n: int) -> list[int]:
    """Divisors d with 1 < d < n and gcd(d, n/d) = 1, ascending."""
    out = []
    for d in range(2, n):
        if n % d == 0 and math.gcd(d, n // d) == 1:
            out.append(d)
    return out


def _find_complement(g, kernel, target, order_of) -> Optional[Subgroup]:
    """Deterministic search for a subgroup of the target order meeting the kernel trivially."""
    if target == 1:
        return g.trivial_subgroup()
    candidates = [
        x
        for x in g.sorted_elements
        if not x.is_identity() and target % order_of[x] == 0 and x not in kernel.members
    ]
    identity = g.identity

    def extend(current: frozenset, gens: tuple, start: int) -> Optional[Subgroup]:
        for i in range(start, len(candidates)):
            x = candidates[i]
            if x in current:
                continue
            new_gens = gens + (x,)
            _, closure = _reduce_generators(new_gens, g.order)
            if len(closure) > target or target % len(closure) != 0:
                continue
            if any(y in kernel.members and y != identity for y in closure):
                continue
            if len(closure) == target:
                return Subgroup(g, closure, _gens=new_gens)
            found = extend(closure, new_gens, i + 1)
            if found is not None:
                return found
        return None

    return extend(frozenset([identity]), (), 0)


def is_just_non_supersolvable(g: PermGroup, lattice_cap: int = DEFAULT_LATTICE_CAP) -> bool:
    """Solvable, not supersolvable, with every proper quotient supersolvable."""
    if not is_solvable(g) or is_supersolvable(g):
        return False
    for n in g.normal_subgroups(lattice_cap):
        if n.is_trivial():
            continue
        if not is_supersolvable(g.quotient(n)):
            return False
    return True
