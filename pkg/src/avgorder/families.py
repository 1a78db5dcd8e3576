"""Deterministic constructors for the named groups and parametric families.

Semidirect products are realized uniformly as affine permutation groups:
the translations of F_p^n together with a chosen group of invertible
linear maps, acting on the p^n vectors.  One construction covers every
family needed here, with small degree and no randomness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded
from .perm import DEFAULT_ELEMENT_CAP, PermGroup, Permutation, direct_product


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class MatrixOverFp:
    """A square matrix over the prime field F_p."""

    p: int
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries are not {self.n}x{self.n}")
        object.__setattr__(
            self, "entries", tuple(tuple(v % self.p for v in row) for row in self.entries)
        )

    @classmethod
    def identity(cls, p: int, n: int) -> "MatrixOverFp":
        return cls(p, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __mul__(self, other: "MatrixOverFp") -> "MatrixOverFp":
        if (self.p, self.n) != (other.p, other.n):
            raise ValueError("matrix shape or modulus mismatch")
        n, p = self.n, self.p
        rows = tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(n)) % p for j in range(n))
            for i in range(n)
        )
        return MatrixOverFp(p, n, rows)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        n, p = self.n, self.p
        return tuple(sum(self.entries[i][k] * vector[k] for k in range(n)) % p for i in range(n))

    def is_invertible(self) -> bool:
        """Gaussian elimination over F_p."""
        n, p = self.n, self.p
        rows = [list(r) for r in self.entries]
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col] % p != 0), None)
            if pivot is None:
                return False
            rows[col], rows[pivot] = rows[pivot], rows[col]
            inv = pow(rows[col][col], -1, p)
            rows[col] = [(v * inv) % p for v in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    factor = rows[r][col]
                    rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], rows[col])]
        return True


def _matrix_group_order(generators: Sequence[MatrixOverFp], cap: int) -> int:
    p, n = generators[0].p, generators[0].n
    els = {MatrixOverFp.identity(p, n)}
    els.update(generators)
    boundary = list(els)
    while boundary:
        new = []
        for a in boundary:
            for g in generators:
                c = a * g
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if len(els) > cap:
                        raise CapExceeded(f"matrix group has more than {cap} elements")
        boundary = new
    return len(els)


def affine_semidirect(
    p: int,
    n: int,
    matrix_generators: Iterable[MatrixOverFp],
    max_order: int = DEFAULT_ELEMENT_CAP,
) -> PermGroup:
    """Translations of F_p^n extended by the given invertible linear maps.

    Acts on the p^n vectors, indexed little-endian: v -> sum v[i] * p^i.
    The result has order p^n * |<matrix generators>|, which is asserted.
    """
    matrix_generators = list(matrix_generators)
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("dimension must be at least 1")
    for mat in matrix_generators:
        if (mat.p, mat.n) != (p, n):
            raise ValueError("matrix generator has mismatched modulus or dimension")
        if not mat.is_invertible():
            raise ValueError(f"singular matrix generator: {mat.entries}")

    points = p**n
    linear_order = _matrix_group_order(matrix_generators, max_order) if matrix_generators else 1
    expected = points * linear_order
    if expected > max_order:
        raise CapExceeded(f"affine group order {expected} exceeds the cap {max_order}")

    def vec(index: int) -> tuple[int, ...]:
        out = []
        for _ in range(n):
            index, r = divmod(index, p)
            out.append(r)
        return tuple(out)

    def idx(vector: Sequence[int]) -> int:
        out = 0
        for comp in reversed(vector):
            out = out * p + comp
        return out

    vectors = [vec(i) for i in range(points)]
    gens = []
    for axis in range(n):
        gens.append(
            Permutation(
                idx(tuple((v[j] + (1 if j == axis else 0)) % p for j in range(n)))
                for v in vectors
            )
        )
    for mat in matrix_generators:
        gens.append(Permutation(idx(mat.apply(v)) for v in vectors))

    group = PermGroup(gens, max_order=max_order)
    if group.order != expected:
        raise RuntimeError(f"affine construction produced order {group.order}, expected {expected}")
    return group


# -- named small groups ------------------------------------------------------


def cyclic(n: int) -> PermGroup:
    """C_n as the rotation of n points."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])])


def elementary_abelian(p: int, m: int) -> PermGroup:
    """C_p^m as m independent p-cycles on disjoint blocks."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 0:
        raise ValueError("rank must be nonnegative")
    if m == 0:
        return cyclic(1)
    degree = p * m
    gens = []
    for block in range(m):
        base = block * p
        images = list(range(degree))
        for i in range(p):
            images[base + i] = base + (i + 1) % p
        gens.append(Permutation(images))
    return PermGroup(gens)


def dihedral(order: int) -> PermGroup:
    """The dihedral group of the given (even) order, as symmetries of a polygon."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and at least 2")
    n = order // 2
    if n == 1:
        return cyclic(2)
    if n == 2:
        return elementary_abelian(2, 2)
    rotation = Permutation([(i + 1) % n for i in range(n)])
    reflection = Permutation([(n - i) % n for i in range(n)])
    g = PermGroup([rotation, reflection])
    if g.order != order:
        raise RuntimeError("dihedral construction produced the wrong order")
    return g


def _group_from_mul(elements: list, mul: Callable, generators: list) -> PermGroup:
    """Left-regular permutation representation of an abstract multiplication."""
    elements = sorted(elements)
    index = {x: i for i, x in enumerate(elements)}
    gens = [Permutation(index[mul(g, x)] for x in elements) for g in generators]
    group = PermGroup(gens)
    if group.order != len(elements):
        raise RuntimeError("regular representation has the wrong order")
    return group


def dicyclic(n: int) -> PermGroup:
    """The dicyclic group of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>."""
    if n < 1:
        raise ValueError("n must be at least 1")
    two_n = 2 * n
    elements = [(k, e) for e in (0, 1) for k in range(two_n)]

    def mul(u, v):
        (i, e1), (j, e2) = u, v
        if e1 == 0:
            return ((i + j) % two_n, e2)
        if e2 == 0:
            return ((i - j) % two_n, 1)
        return ((i - j + n) % two_n, 0)

    return _group_from_mul(elements, mul, [(1, 0), (0, 1)])


def quaternion8() -> PermGroup:
    """Q_8 in its regular representation."""
    return dicyclic(2)


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return cyclic(1)
    full_cycle = Permutation([(i + 1) % n for i in range(n)])
    swap = Permutation.from_cycles([(0, 1)], n)
    g = PermGroup([swap, full_cycle])
    if g.order != math.factorial(n):
        raise RuntimeError("symmetric group construction has the wrong order")
    return g


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n <= 2:
        return PermGroup([Permutation.identity(n)])
    three_cycle = Permutation.from_cycles([(0, 1, 2)], n)
    if n == 3:
        return PermGroup([three_cycle])
    # a 3-cycle plus a full (n odd) or n-1 (n even) cycle generates the
    # even permutations
    if n % 2:
        big = Permutation([(i + 1) % n for i in range(n)])
    else:
        big = Permutation.from_cycles([tuple(range(1, n))], n)
    g = PermGroup([three_cycle, big])
    if g.order != math.factorial(n) // 2:
        raise RuntimeError("alternating group construction has the wrong order")
    return g


# -- parametric families -----------------------------------------------------


def frobenius_3m_2(m: int, max_order: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """C_3^m extended by negation: a Frobenius group of order 2 * 3^m.

    Every non-identity vector is inverted, so the spectrum is
    {1: 1, 2: 3^m, 3: 3^m - 1}.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    negate = MatrixOverFp(3, m, tuple(tuple(-1 if i == j else 0 for j in range(m)) for i in range(m)))
    return affine_semidirect(3, m, [negate], max_order=max_order)


def fpf_c3_on_c2(m: int, max_order: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """C_2^(2m) extended by a fixed-point-free order-3 action; order 3 * 4^m.

    Uses m identical 2x2 blocks of the order-3 companion matrix
    [[0,1],[1,1]] over F_2; m = 1 gives A_4.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    dim = 2 * m
    rows = [[0] * dim for _ in range(dim)]
    for b in range(m):
        i = 2 * b
        rows[i][i + 1] = 1
        rows[i + 1][i] = 1
        rows[i + 1][i + 1] = 1
    action = MatrixOverFp(2, dim, tuple(tuple(r) for r in rows))
    return affine_semidirect(2, dim, [action], max_order=max_order)


def d8_times_c2power(k: int, max_order: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Direct product of D_8 with k copies of C_2; order 2^(k+3)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    g = dihedral(8)
    if k:
        g = direct_product(g, elementary_abelian(2, k), max_order=max_order)
    return g


def d8_on_c3_squared(max_order: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """F_3^2 extended by D_8 < GL(2,3): the order-72 group with spectrum
    n_2 = 45, n_3 = 8, n_4 = 18.

    The embedding is fixed to the rotation [[0,-1],[1,0]] and reflection
    [[1,0],[0,-1]]; any faithful embedding gives an isomorphic group.
    """
    rotation = MatrixOverFp(3, 2, ((0, -1), (1, 0)))
    reflection = MatrixOverFp(3, 2, ((1, 0), (0, -1)))
    return affine_semidirect(3, 2, [rotation, reflection], max_order=max_order)


# Registry for the CLI / service "families" surface: name -> (constructor, #int params, summary)
FAMILIES: dict[str, tuple[Callable[..., PermGroup], int, str]] = {
    "cyclic": (cyclic, 1, "cyclic group C_n"),
    "elementary": (elementary_abelian, 2, "elementary abelian group C_p^m (args: p m)"),
    "dihedral": (dihedral, 1, "dihedral group of the given order"),
    "quaternion8": (quaternion8, 0, "the quaternion group Q_8"),
    "dicyclic": (dicyclic, 1, "dicyclic group of order 4n"),
    "symmetric": (symmetric, 1, "symmetric group S_n"),
    "alternating": (alternating, 1, "alternating group A_n"),
    "frobenius32": (frobenius_3m_2, 1, "Frobenius group C_3^m : C_2 of order 2*3^m"),
    "c2rc3": (fpf_c3_on_c2, 1, "C_2^(2m) : C_3 of order 3*4^m (m=1 is A_4)"),
    "d8c2k": (d8_times_c2power, 1, "D_8 x C_2^k of order 2^(k+3)"),
    "order72": (d8_on_c3_squared, 0, "the order-72 group C_3^2 : D_8"),
}


def build_family(name: str, params: Sequence[int], max_order: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Construct a registered family member from integer parameters."""
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise ValueError(f"unknown family {name!r}; known families: {known}")
    ctor, arity, _ = FAMILIES[name]
    params = list(params)
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} integer parameter(s), got {len(params)}")
    if name in ("frobenius32", "c2rc3", "d8c2k", "order72"):
        return ctor(*params, max_order=max_order)
    return ctor(*params)
