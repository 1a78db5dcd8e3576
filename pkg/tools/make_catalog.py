#!/usr/bin/env python3
"""Generate the checked-in catalog of all groups of order <= 30.

Every entry is built from an explicit construction (cyclic, dihedral,
metacyclic, dicyclic, direct/semidirect products, one central product,
affine and matrix groups), then the whole set is validated: per-order
entry counts must match the classical classification
(1,1,1,2,1,2,1,5,2,2,1,5,1,2,1,14,1,5,1,5,2,2,1,15,2,2,5,4,1,4 for
orders 1..30) and entries within an order must be pairwise
non-isomorphic.  Those two facts together make the list complete, so a
transcription slip here cannot survive generation.

Run from the repository root:  python3 tools/make_catalog.py
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from avgorder.families import (
    MatrixOverFp,
    affine_semidirect,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    elementary_abelian,
    frobenius_3m_2,
    symmetric,
)
from avgorder.perm import PermGroup, Permutation, direct_product, is_isomorphic
from avgorder.stats import order_spectrum
from avgorder.structure import is_abelian, is_supersolvable

CLASSICAL_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4]


def metacyclic(n: int, m: int, k: int) -> PermGroup:
    """C_n : C_m with the C_m generator acting by x -> k*x; needs k^m = 1 mod n.

    Acts on two blocks: Z_n (translation) and Z_m (regular), so the
    construction stays faithful even when the action has a kernel.
    """
    assert pow(k, m, n) == 1 and n > 1 and m > 1
    deg = n + m
    a = Permutation([(i + 1) % n for i in range(n)] + list(range(n, deg)))
    images = [(k * i) % n for i in range(n)] + [n + (j + 1) % m for j in range(m)]
    b = Permutation(images)
    g = PermGroup([a, b])
    assert g.order == n * m, (n, m, k, g.order)
    return g


def abelian_aut_semidirect(moduli, phi, m: int) -> PermGroup:
    """(Z_mod1 x Z_mod2 x ...) : C_m, the C_m generator acting by the automorphism phi."""
    tuples = sorted(itertools.product(*[range(mod) for mod in moduli]))
    idx = {t: i for i, t in enumerate(tuples)}
    k = len(tuples)
    deg = k + m
    gens = []
    for axis in range(len(moduli)):
        images = list(range(deg))
        for t in tuples:
            s = list(t)
            s[axis] = (s[axis] + 1) % moduli[axis]
            images[idx[t]] = idx[tuple(s)]
        gens.append(Permutation(images))
    images = [idx[phi(t)] for t in tuples] + [k + (j + 1) % m for j in range(m)]
    gens.append(Permutation(images))
    g = PermGroup(gens)
    assert g.order == k * m, (moduli, m, g.order)
    return g


def cyclic_by_group(n: int, h: PermGroup, exps) -> PermGroup:
    """Z_n : H with H's i-th generator acting on Z_n by multiplication by exps[i]."""
    deg = n + h.degree
    gens = [Permutation([(i + 1) % n for i in range(n)] + list(range(n, deg)))]
    for gen, e in zip(h.generators, exps):
        images = [(e * i) % n for i in range(n)] + [n + gen(j) for j in range(h.degree)]
        gens.append(Permutation(images))
    g = PermGroup(gens)
    assert g.order == n * h.order, (n, h.order, g.order)
    return g


def sl23() -> PermGroup:
    """SL(2,3) acting on the eight nonzero vectors of F_3^2."""
    vectors = sorted(v for v in itertools.product(range(3), repeat=2) if v != (0, 0))
    idx = {v: i for i, v in enumerate(vectors)}

    def perm(mat: MatrixOverFp) -> Permutation:
        return Permutation(idx[mat.apply(v)] for v in vectors)

    g = PermGroup([perm(MatrixOverFp(3, 2, ((1, 1), (0, 1)))), perm(MatrixOverFp(3, 2, ((1, 0), (1, 1))))])
    assert g.order == 24
    return g


def c4_central_d8() -> PermGroup:
    """The central product C4 o D8: C4 x D8 with the two central involutions glued."""
    prod = direct_product(cyclic(4), dihedral(8))
    c, r, _s = prod.generators
    glue = prod.subgroup([(c * c) * (r * r)])
    assert glue.order == 2 and glue.is_normal()
    g = prod.quotient(glue)
    assert g.order == 16
    return g


def heisenberg3() -> PermGroup:
    return affine_semidirect(3, 2, [MatrixOverFp(3, 2, ((1, 1), (0, 1)))])


def build_catalog() -> list[tuple[int, int, str, PermGroup]]:
    c2, c3, c4, c5, c6 = cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6)
    entries: list[tuple[int, str, PermGroup]] = []

    def add(order: int, name: str, group: PermGroup):
        assert group.order == order, (name, order, group.order)
        entries.append((order, name, group))

    for n in (1, 2, 3):
        add(n, f"C{n}", cyclic(n))
    add(4, "C4", c4)
    add(4, "C2^2", elementary_abelian(2, 2))
    add(5, "C5", c5)
    add(6, "C6", c6)
    add(6, "S3", symmetric(3))
    add(7, "C7", cyclic(7))
    add(8, "C8", cyclic(8))
    add(8, "C4xC2", direct_product(c4, c2))
    add(8, "C2^3", elementary_abelian(2, 3))
    add(8, "D8", dihedral(8))
    add(8, "Q8", dicyclic(2))
    add(9, "C9", cyclic(9))
    add(9, "C3^2", elementary_abelian(3, 2))
    add(10, "C10", cyclic(10))
    add(10, "D10", dihedral(10))
    add(11, "C11", cyclic(11))
    add(12, "C12", cyclic(12))
    add(12, "C6xC2", direct_product(c6, c2))
    add(12, "D12", dihedral(12))
    add(12, "Dic3", metacyclic(3, 4, 2))
    add(12, "A4", alternating(4))
    add(13, "C13", cyclic(13))
    add(14, "C14", cyclic(14))
    add(14, "D14", dihedral(14))
    add(15, "C15", cyclic(15))

    add(16, "C16", cyclic(16))
    add(16, "C4xC4", direct_product(c4, c4))
    add(16, "C8xC2", direct_product(cyclic(8), c2))
    add(16, "C4xC2^2", direct_product(c4, elementary_abelian(2, 2)))
    add(16, "C2^4", elementary_abelian(2, 4))
    add(16, "D16", dihedral(16))
    add(16, "SD16", metacyclic(8, 2, 3))
    add(16, "M4(2)", metacyclic(8, 2, 5))
    add(16, "Q16", dicyclic(4))
    add(16, "D8xC2", direct_product(dihedral(8), c2))
    add(16, "Q8xC2", direct_product(dicyclic(2), c2))
    add(16, "C4:C4", metacyclic(4, 4, 3))
    add(16, "(C4xC2):C2", abelian_aut_semidirect((4, 2), lambda t: (t[0], (t[0] + t[1]) % 2), 2))
    add(16, "C4oD8", c4_central_d8())

    add(17, "C17", cyclic(17))
    add(18, "C18", cyclic(18))
    add(18, "C3xC6", direct_product(c3, c6))
    add(18, "D18", dihedral(18))
    add(18, "C3xS3", direct_product(c3, symmetric(3)))
    add(18, "C3^2:C2", frobenius_3m_2(2))
    add(19, "C19", cyclic(19))
    add(20, "C20", cyclic(20))
    add(20, "C10xC2", direct_product(cyclic(10), c2))
    add(20, "D20", dihedral(20))
    add(20, "Dic5", metacyclic(5, 4, 4))
    add(20, "F20", metacyclic(5, 4, 2))
    add(21, "C21", cyclic(21))
    add(21, "C7:C3", metacyclic(7, 3, 2))
    add(22, "C22", cyclic(22))
    add(22, "D22", dihedral(22))
    add(23, "C23", cyclic(23))

    add(24, "C24", cyclic(24))
    add(24, "C12xC2", direct_product(cyclic(12), c2))
    add(24, "C6xC2^2", direct_product(c6, elementary_abelian(2, 2)))
    add(24, "S4", symmetric(4))
    add(24, "SL23", sl23())
    add(24, "A4xC2", direct_product(alternating(4), c2))
    add(24, "D24", dihedral(24))
    add(24, "Dic6", dicyclic(6))
    add(24, "C3:C8", metacyclic(3, 8, 2))
    add(24, "C3xD8", direct_product(c3, dihedral(8)))
    add(24, "C3xQ8", direct_product(c3, dicyclic(2)))
    add(24, "C4xS3", direct_product(c4, symmetric(3)))
    add(24, "D12xC2", direct_product(dihedral(12), c2))
    add(24, "Dic3xC2", direct_product(metacyclic(3, 4, 2), c2))
    # rotation inverts, reflection acts trivially (action kernel = Klein);
    # the other nontrivial character, with <r> as kernel, would rebuild D24
    add(24, "C3:D8", cyclic_by_group(3, dihedral(8), (-1, 1)))

    add(25, "C25", cyclic(25))
    add(25, "C5^2", elementary_abelian(5, 2))
    add(26, "C26", cyclic(26))
    add(26, "D26", dihedral(26))
    add(27, "C27", cyclic(27))
    add(27, "C9xC3", direct_product(cyclic(9), c3))
    add(27, "C3^3", elementary_abelian(3, 3))
    add(27, "He3", heisenberg3())
    add(27, "C9:C3", metacyclic(9, 3, 4))
    add(28, "C28", cyclic(28))
    add(28, "C14xC2", direct_product(cyclic(14), c2))
    add(28, "D28", dihedral(28))
    add(28, "Dic7", metacyclic(7, 4, 6))
    add(29, "C29", cyclic(29))
    add(30, "C30", cyclic(30))
    add(30, "D30", dihedral(30))
    add(30, "C5xS3", direct_product(c5, symmetric(3)))
    add(30, "C3xD10", direct_product(c3, dihedral(10)))

    # validation: counts per order, then pairwise non-isomorphism within each order
    indexed: list[tuple[int, int, str, PermGroup]] = []
    for order in range(1, 31):
        block = [(name, g) for o, name, g in entries if o == order]
        expected = CLASSICAL_COUNTS[order - 1]
        assert len(block) == expected, f"order {order}: built {len(block)}, classification says {expected}"
        for (n1, g1), (n2, g2) in itertools.combinations(block, 2):
            assert not is_isomorphic(g1, g2), f"duplicate isomorphism type at order {order}: {n1} vs {n2}"
        for i, (name, g) in enumerate(block, start=1):
            indexed.append((order, i, name, g))
    assert len(indexed) == 92
    return indexed


def emit(indexed) -> str:
    lines = [
        "# Catalog of all groups of order <= 30 (92 entries).",
        "# Block grammar: header line 'order/index/name/degree', then one",
        "# generator per line in disjoint-cycle notation, then optional",
        "# expected-record lines '! spectrum d:n ...', '! abelian BOOL',",
        "# '! supersolvable BOOL'.  Blocks are separated by blank lines;",
        "# '#' starts a comment.  Generated by tools/make_catalog.py.",
        "",
    ]
    for order, index, name, g in indexed:
        lines.append(f"{order}/{index}/{name}/{g.degree}")
        for gen in g.generators:
            lines.append(gen.cycle_string())
        spectrum = order_spectrum(g)
        lines.append("! spectrum " + " ".join(f"{d}:{n}" for d, n in spectrum.items()))
        lines.append(f"! abelian {'true' if is_abelian(g) else 'false'}")
        lines.append(f"! supersolvable {'true' if is_supersolvable(g) else 'false'}")
        lines.append("")
    return "\n".join(lines)


def main():
    indexed = build_catalog()
    out = Path(__file__).resolve().parent.parent / "src" / "avgorder" / "data" / "groups_le30.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(emit(indexed))
    print(f"wrote {len(indexed)} entries to {out}")


if __name__ == "__main__":
    main()
