"""Permutations, permutation groups and their subgroup machinery.

Everything here works by explicit enumeration: a group carries its full
element set, built by breadth-first closure over generator products, and
the subgroup lattice is grown by extending known subgroups one element at
a time.  At desk scale (a few thousand elements) this is fast enough and
trivially correct, so no stabilizer-chain machinery is used.

All objects are immutable after construction and safe to share across
threads; every operation is pure.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from typing import Iterable, Optional, Sequence

from .errors import CapExceeded

DEFAULT_ELEMENT_CAP = 20000
DEFAULT_LATTICE_CAP = 1024
DEFAULT_ISO_CAP = 200


class Permutation:
    """A bijection on {0, ..., degree-1}, stored as a dense image tuple."""

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if not images:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"images {images!r} are not a bijection on 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} appears in more than one cycle")
                seen.add(pt)
            for i, pt in enumerate(cycle):
                images[pt] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse disjoint-cycle notation like ``(0 1 2)(3 4)``; ``()`` is the identity."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation text")
        cycles: list[list[int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            if text[pos] != "(":
                raise ValueError(f"expected '(' at position {pos} in {text!r}")
            end = text.find(")", pos)
            if end < 0:
                raise ValueError(f"unbalanced '(' in {text!r}")
            body = text[pos + 1 : end].replace(",", " ").split()
            if body:
                cycles.append([int(tok) for tok in body])
            pos = end + 1
        return cls.from_cycles(cycles, degree)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        out = []
        seen = set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``self * other``: apply ``other`` first, then ``self``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        imgs = self.images
        return Permutation(imgs[j] for j in other.images)

    def inverse(self) -> "Permutation":
        result = [0] * self.degree
        for i, j in enumerate(self.images):
            result[j] = i
        return Permutation(result)

    def __pow__(self, exponent: int) -> "Permutation":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def order(self) -> int:
        """Least k >= 1 with self**k = identity: the lcm of the cycle lengths."""
        return math.lcm(*(len(c) for c in self.cycles()), 1)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __gt__(self, other: "Permutation") -> bool:
        return self.images > other.images

    def __ge__(self, other: "Permutation") -> bool:
        return self.images >= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation.parse({self.cycle_string()!r}, {self.degree})"

    def __getstate__(self):
        return self.images

    def __setstate__(self, state):
        object.__setattr__(self, "images", tuple(state))


def _mulclose(gens: Sequence[Permutation], cap: int) -> frozenset[Permutation]:
    """Closure of the generators under composition (breadth-first)."""
    degree = gens[0].degree
    els = {Permutation.identity(degree)}
    els.update(gens)
    boundary = sorted(els)
    while boundary:
        new = []
        for a in boundary:
            for g in gens:
                c = a * g
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if len(els) > cap:
                        raise CapExceeded(f"group has more than {cap} elements")
        boundary = new
    return frozenset(els)


def _reduce_generators(seeds: Iterable[Permutation], cap: int) -> tuple[list[Permutation], frozenset[Permutation]]:
    """Greedy small generating list for <seeds>, plus the generated element set."""
    seeds = sorted(set(seeds))
    degree = seeds[0].degree if seeds else 1
    gens: list[Permutation] = []
    closure: frozenset[Permutation] = frozenset([Permutation.identity(degree)])
    for s in seeds:
        if s not in closure:
            gens.append(s)
            closure = _mulclose(gens, cap)
    return gens, closure


class PermGroup:
    """A permutation group given by generators, with its elements materialized.

    The element set is computed on first use by closing the generators
    under composition; ``max_order`` bounds that enumeration.
    """

    def __init__(
        self,
        generators: Iterable[Permutation],
        max_order: int = DEFAULT_ELEMENT_CAP,
        _elements: Optional[frozenset[Permutation]] = None,
    ):
        generators = tuple(generators)
        if not generators:
            raise ValueError("a group needs at least one generator")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators have mismatched degrees")
        self.generators = generators
        self.degree = degree
        self.max_order = max_order
        self._elements = _elements
        self._sorted: Optional[tuple[Permutation, ...]] = None
        self._idx = None
        self._lattice: Optional[tuple["Subgroup", ...]] = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def elements(self) -> frozenset[Permutation]:
        if self._elements is None:
            self._elements = _mulclose(self.generators, self.max_order)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        """Elements in image-tuple order; the identity always comes first."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators)
        return f"PermGroup(degree={self.degree}, order={self.order}, generators=[{gens}])"

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, seeds: Iterable[Permutation]) -> "Subgroup":
        """Smallest subgroup containing the seed elements."""
        seeds = list(seeds)
        for s in seeds:
            if s not in self.elements:
                raise ValueError(f"seed {s.cycle_string()} is not an element of the group")
        gens, closure = _reduce_generators(seeds + [self.identity], self.order)
        return Subgroup(self, closure, _gens=tuple(gens))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset([self.identity]), _gens=())

    def whole_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements, _gens=self.generators)

    def _indexed(self):
        """(position map, multiplication table, inverse table) over sorted elements."""
        if self._idx is None:
            els = self.sorted_elements
            pos = {p: i for i, p in enumerate(els)}
            mul = [[pos[a * b] for b in els] for a in els]
            inv = [pos[a.inverse()] for a in els]
            self._idx = (pos, mul, inv)
        return self._idx

    def all_subgroups(self, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list["Subgroup"]:
        """Every subgroup exactly once, sorted by (order, member images).

        Seeded with all cyclic subgroups, then every known subgroup is
        extended by every outside element until nothing new appears.
        Extension candidates are deduplicated to one generator per cyclic
        subgroup, which changes nothing: <H, x> = <H, x'> whenever
        <x> = <x'>.
        """
        if self.order > lattice_cap:
            raise CapExceeded(f"order {self.order} exceeds the lattice cap {lattice_cap}")
        if self._lattice is None:
            self._lattice = self._build_lattice()
        return list(self._lattice)

    def _build_lattice(self) -> tuple["Subgroup", ...]:
        els = self.sorted_elements
        pos, mul, _ = self._indexed()
        e = pos[self.identity]

        cyclic: dict[frozenset[int], int] = {}
        for i in range(len(els)):
            powers = [e]
            x = i
            while x != e:
                powers.append(x)
                x = mul[x][i]
            cyclic.setdefault(frozenset(powers), i)  # ascending i keeps the least generator

        known: dict[frozenset[int], tuple[int, ...]] = {frozenset([e]): ()}
        queue: deque[frozenset[int]] = deque()
        for key in sorted(cyclic, key=len):
            if key not in known:
                known[key] = (cyclic[key],)
                queue.append(key)
        reps = sorted(set(cyclic.values()) - {e})

        while queue:
            sub = queue.popleft()
            gens = known[sub]
            for x in reps:
                if x in sub:
                    continue
                grown = _extend_subgroup(sub, gens, x, mul, e)
                if grown not in known:
                    known[grown] = gens + (x,)
                    queue.append(grown)

        subs = [
            Subgroup(self, frozenset(els[i] for i in key), _gens=tuple(els[i] for i in known[key]))
            for key in known
        ]
        subs.sort(key=lambda s: (s.order, s.member_key()))
        return tuple(subs)

    def normal_subgroups(self, lattice_cap: int = DEFAULT_LATTICE_CAP) -> list["Subgroup"]:
        """Subgroups invariant under conjugation, including trivial and whole."""
        return [h for h in self.all_subgroups(lattice_cap) if h.is_normal()]

    # -- derived constructions ---------------------------------------------

    def quotient(self, sub: "Subgroup") -> "PermGroup":
        """The factor group acting on left cosets of a normal subgroup.

        Cosets are canonicalized by their least member and numbered in
        that order, so the construction is deterministic.
        """
        if sub.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        if not sub.is_normal():
            raise ValueError("cannot form a quotient by a non-normal subgroup")
        members = sub.members
        rep_of: dict[Permutation, Permutation] = {}
        reps: list[Permutation] = []
        for x in self.sorted_elements:  # ascending scan: first hit is the least coset member
            if x in rep_of:
                continue
            for h in members:
                rep_of[x * h] = x
            reps.append(x)
        point = {r: i for i, r in enumerate(reps)}

        def project(g: Permutation) -> Permutation:
            return Permutation(point[rep_of[g * r]] for r in reps)

        gen_images = [project(g) for g in self.generators]
        for gi, g in zip(gen_images, self.generators):
            for hj, h in zip(gen_images, self.generators):
                if project(g * h) != gi * hj:
                    raise RuntimeError("coset action is not a homomorphism; normality check is broken")
        result = PermGroup(gen_images, max_order=self.max_order)
        if result.order * sub.order != self.order:
            raise RuntimeError("quotient order mismatch")
        return result

    def derived_subgroup(self) -> "Subgroup":
        """Subgroup generated by all commutators x^-1 y^-1 x y; always normal."""
        els = self.sorted_elements
        inv = {x: x.inverse() for x in els}
        commutators = {inv[x] * inv[y] * x * y for x in els for y in els}
        return self.subgroup(commutators)

    def center(self) -> "Subgroup":
        members = [x for x in self.sorted_elements if all(x * g == g * x for g in self.generators)]
        return Subgroup(self, frozenset(members))

    def frattini_subgroup(self, lattice_cap: int = DEFAULT_LATTICE_CAP) -> "Subgroup":
        """Intersection of all maximal subgroups (the whole group if there are none)."""
        subs = self.all_subgroups(lattice_cap)
        proper = [s for s in subs if s.order < self.order]
        maximal = [
            h
            for h in proper
            if not any(h.order < k.order and h.members < k.members for k in proper)
        ]
        if not maximal:
            return self.whole_subgroup()
        common = frozenset.intersection(*(m.members for m in maximal))
        return Subgroup(self, common)

    def sylow_subgroup(self, p: int, lattice_cap: int = DEFAULT_LATTICE_CAP) -> "Subgroup":
        """A subgroup of order p^a where p^a exactly divides the group order.

        Among the (conjugate) choices, returns the one whose sorted member
        list is lexicographically least; all_subgroups is already sorted
        that way, so the first hit wins.
        """
        if self.order % p != 0:
            raise ValueError(f"{p} does not divide the group order {self.order}")
        pa = 1
        while self.order % (pa * p) == 0:
            pa *= p
        for sub in self.all_subgroups(lattice_cap):
            if sub.order == pa:
                return sub
        raise RuntimeError("no Sylow subgroup found; lattice construction is broken")

    def p_core(self, p: int, lattice_cap: int = DEFAULT_LATTICE_CAP) -> "Subgroup":
        """Largest normal p-subgroup: the intersection of all Sylow p-subgroups."""
        if self.order % p != 0:
            return self.trivial_subgroup()
        pa = 1
        while self.order % (pa * p) == 0:
            pa *= p
        sylows = [s.members for s in self.all_subgroups(lattice_cap) if s.order == pa]
        return Subgroup(self, frozenset.intersection(*sylows))

    def fitting_subgroup(self, lattice_cap: int = DEFAULT_LATTICE_CAP) -> "Subgroup":
        """Subgroup generated by the p-cores over all primes dividing the order."""
        seeds: set[Permutation] = {self.identity}
        for p in _prime_factors(self.order):
            seeds.update(self.p_core(p, lattice_cap).members)
        fit = self.subgroup(seeds)
        if not fit.is_normal() or not _members_nilpotent(fit.members):
            raise RuntimeError("computed Fitting subgroup is not nilpotent normal")
        return fit


class Subgroup:
    """A subset of a parent group's elements that forms a subgroup."""

    __slots__ = ("parent", "members", "_gens", "_sorted")

    def __init__(
        self,
        parent: PermGroup,
        members: Iterable[Permutation],
        _gens: Optional[tuple[Permutation, ...]] = None,
    ):
        members = frozenset(members)
        if parent.identity not in members:
            raise ValueError("a subgroup must contain the identity")
        if parent.order % len(members) != 0:
            raise ValueError(f"size {len(members)} does not divide the parent order {parent.order}")
        self.parent = parent
        self.members = members
        self._gens = _gens
        self._sorted: Optional[tuple[Permutation, ...]] = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def sorted_members(self) -> tuple[Permutation, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.members))
        return self._sorted

    def member_key(self) -> tuple[tuple[int, ...], ...]:
        """Deterministic sort key: the image tuples of the sorted members."""
        return tuple(p.images for p in self.sorted_members)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_normal(self) -> bool:
        """True iff conjugation by every parent element maps members onto members.

        Checking the parent's generators suffices: set stabilization is
        preserved under products and, in a finite group, under inverses.
        """
        for g in self.parent.generators:
            ginv = g.inverse()
            for h in self.members:
                if g * h * ginv not in self.members:
                    return False
        return True

    def generating_set(self) -> tuple[Permutation, ...]:
        if self._gens is None:
            gens, _ = _reduce_generators(self.members, len(self.members))
            self._gens = tuple(gens)
        return self._gens

    def as_group(self) -> PermGroup:
        """This subgroup as a standalone group (same degree, same elements)."""
        gens = self.generating_set() or (self.parent.identity,)
        return PermGroup(gens, max_order=self.parent.max_order, _elements=self.members)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order}, degree={self.parent.degree})"


def _extend_subgroup(
    sub: frozenset[int],
    gens: tuple[int, ...],
    x: int,
    mul: list[list[int]],
    e: int,
) -> frozenset[int]:
    """Index set of <sub, x>, walking right cosets of ``sub``.

    Each newly reached coset is filled in with |sub| table lookups, so the
    whole closure costs about |result| lookups instead of |result| * |gens|.
    """
    allgens = gens + (x,)
    elements = set(sub)
    reps = deque([e])
    while reps:
        t = reps.popleft()
        row = mul[t]
        for g in allgens:
            u = row[g]
            if u not in elements:
                for h in sub:
                    elements.add(mul[h][u])
                reps.append(u)
    return frozenset(elements)


def _prime_factors(n: int) -> list[int]:
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


def _members_nilpotent(members: frozenset[Permutation]) -> bool:
    """Nilpotency of a materialized subgroup: each set of p-elements must close.

    A finite group is nilpotent iff every Sylow subgroup is normal, which
    holds iff for each prime p the p-elements form a subgroup (that
    subgroup then contains every p-element, forcing it to be the unique,
    hence normal, Sylow p-subgroup).
    """
    n = len(members)
    for p in _prime_factors(n):
        p_part = {x for x in members if _is_prime_power_order(x.order(), p)}
        _, closure = _reduce_generators(p_part, n)
        if closure != p_part:
            return False
    return True


def _is_prime_power_order(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def direct_product(a: PermGroup, b: PermGroup, max_order: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Product group acting independently on the two point blocks."""
    if a.order * b.order > max_order:
        raise CapExceeded(f"product order {a.order * b.order} exceeds the cap {max_order}")
    da, db = a.degree, b.degree
    gens = [Permutation(tuple(g.images) + tuple(range(da, da + db))) for g in a.generators]
    gens += [Permutation(tuple(range(da)) + tuple(i + da for i in g.images)) for g in b.generators]
    product = PermGroup(gens, max_order=max_order)
    if product.order != a.order * b.order:
        raise RuntimeError("direct product order mismatch")
    return product


def _order_spectrum_counter(g: PermGroup) -> Counter:
    return Counter(x.order() for x in g.elements)


def _generating_sequence(g: PermGroup) -> list[Permutation]:
    """Greedy minimal generating sequence, deterministic in element order."""
    gens: list[Permutation] = []
    closure: frozenset[Permutation] = frozenset([g.identity])
    for x in g.sorted_elements:
        if x not in closure:
            gens.append(x)
            closure = _mulclose(gens, g.order)
            if len(closure) == g.order:
                break
    return gens


def is_isomorphic(a: PermGroup, b: PermGroup, iso_cap: int = DEFAULT_ISO_CAP) -> bool:
    """Decide isomorphism by backtracking over generator images.

    Rejects immediately on order or order-spectrum mismatch.  Otherwise
    maps a greedy generating sequence of ``a`` to order-matching elements
    of ``b``, extending multiplicatively and backtracking on the first
    inconsistency.  Candidate images are tried in ascending element order.
    """
    if a.order > iso_cap or b.order > iso_cap:
        raise CapExceeded(f"orders {a.order}, {b.order} exceed the isomorphism cap {iso_cap}")
    if a.order != b.order:
        return False
    if _order_spectrum_counter(a) != _order_spectrum_counter(b):
        return False

    gens = _generating_sequence(a)
    if not gens:  # trivial group
        return True
    by_order: dict[int, list[Permutation]] = {}
    for y in b.sorted_elements:
        by_order.setdefault(y.order(), []).append(y)
    candidates = [by_order.get(x.order(), []) for x in gens]

    def consistent(images: list[Permutation]) -> bool:
        """Extend gens[:k] -> images to <gens[:k]> and check it stays a bijective map."""
        hom = {a.identity: b.identity}
        used = {b.identity}
        for g, im in zip(gens, images):
            hom[g] = im
            if im in used:
                return False
            used.add(im)
        queue = list(hom)
        while queue:
            x = queue.pop()
            hx = hom[x]
            for g, im in zip(gens, images):
                y = x * g
                v = hx * im
                if y in hom:
                    if hom[y] != v:
                        return False
                else:
                    if v in used:
                        return False
                    hom[y] = v
                    used.add(v)
                    queue.append(y)
        return True

    def search(level: int, images: list[Permutation]) -> bool:
        if level == len(gens):
            return True
        for cand in candidates[level]:
            images.append(cand)
            if consistent(images) and search(level + 1, images):
                return True
            images.pop()
        return False

    return search(0, [])
