"""Structural predicate tests."""

import pytest

from avgorder import families
from avgorder.perm import direct_product
from avgorder.structure import (
    element_order_set,
    exponent,
    frobenius_decomposition,
    is_abelian,
    is_elementary_abelian,
    is_just_non_supersolvable,
    is_nilpotent,
    is_solvable,
    is_supersolvable,
    omega1,
)


class TestAbelian:
    def test_cases(self):
        assert is_abelian(families.cyclic(3))
        assert not is_abelian(families.alternating(4))
        assert is_abelian(families.elementary_abelian(2, 4))


class TestNilpotent:
    def test_p_group(self):
        assert is_nilpotent(families.dihedral(8))

    def test_s3_not(self):
        assert not is_nilpotent(families.symmetric(3))

    def test_abelian(self):
        assert is_nilpotent(families.cyclic(6))

    def test_sylow_normality_oracle(self):
        # independent route: all Sylow subgroups normal
        for g in [families.symmetric(3), families.cyclic(12), families.dihedral(12), families.quaternion8()]:
            primes = sorted({p for p in range(2, g.order + 1) if g.order % p == 0 and all(p % q for q in range(2, p))})
            via_sylow = all(g.sylow_subgroup(p).is_normal() for p in primes)
            assert is_nilpotent(g) == via_sylow


class TestSolvable:
    def test_a4(self):
        assert is_solvable(families.alternating(4))

    def test_a5_not(self):
        assert not is_solvable(families.alternating(5))

    def test_two_groups(self):
        for k in (0, 1, 2):
            assert is_solvable(families.d8_times_c2power(k))


class TestSupersolvable:
    def test_a4_not(self):
        assert not is_supersolvable(families.alternating(4))

    def test_s3(self):
        assert is_supersolvable(families.symmetric(3))

    def test_s4_not(self):
        assert not is_supersolvable(families.symmetric(4))

    def test_small_groups_all_supersolvable(self):
        for g in [
            families.cyclic(n) for n in range(1, 12)
        ] + [families.dihedral(8), families.quaternion8(), families.dihedral(10), families.elementary_abelian(3, 2)]:
            assert is_supersolvable(g), g

    def test_hierarchy(self):
        for g in [
            families.cyclic(6),
            families.symmetric(3),
            families.dihedral(8),
            families.alternating(4),
            families.symmetric(4),
            families.quaternion8(),
        ]:
            if is_abelian(g):
                assert is_nilpotent(g)
            if is_nilpotent(g):
                assert is_supersolvable(g)
            if is_supersolvable(g):
                assert is_solvable(g)


class TestExponentAndOrders:
    def test_exponent(self):
        assert exponent(families.elementary_abelian(2, 3)) == 2
        assert exponent(families.alternating(4)) == 6
        assert exponent(families.dihedral(8)) == 4

    def test_element_order_set(self):
        assert element_order_set(families.symmetric(3)) == (1, 2, 3)
        assert element_order_set(families.alternating(4)) == (1, 2, 3)
        assert element_order_set(families.cyclic(12)) == (1, 2, 3, 4, 6, 12)


class TestElementaryAbelian:
    def test_klein(self):
        assert is_elementary_abelian(families.elementary_abelian(2, 2), 2)

    def test_c4_not(self):
        assert not is_elementary_abelian(families.cyclic(4), 2)

    def test_frobenius_kernel(self):
        g = families.frobenius_3m_2(2)
        dec = frobenius_decomposition(g)
        assert dec is not None
        assert is_elementary_abelian(dec.kernel.as_group(), 3)


class TestOmega1:
    def test_c4(self):
        assert omega1(families.cyclic(4), 2).order == 2

    def test_elementary_abelian_whole(self):
        g = families.elementary_abelian(2, 3)
        assert omega1(g, 2).order == 8

    def test_d8_whole(self):
        g = families.dihedral(8)
        assert omega1(g, 2).order == 8

    def test_requires_p_group(self):
        with pytest.raises(ValueError):
            omega1(families.symmetric(3), 2)

    def test_abelian_two_group_identity(self):
        # in an abelian 2-group the involutions plus identity already close,
        # so |omega1| = n2 + 1
        from avgorder.stats import order_spectrum

        for g in [
            families.cyclic(8),
            families.elementary_abelian(2, 4),
            direct_product(families.cyclic(4), families.cyclic(2)),
            direct_product(families.cyclic(4), families.cyclic(4)),
            direct_product(families.cyclic(8), families.cyclic(2)),
        ]:
            assert omega1(g, 2).order == order_spectrum(g).n(2) + 1


class TestFrobenius:
    def test_s3(self):
        dec = frobenius_decomposition(families.symmetric(3))
        assert dec is not None
        assert dec.kernel.order == 3
        assert dec.complement.order == 2
        dec.verify()

    def test_a4(self):
        dec = frobenius_decomposition(families.alternating(4))
        assert dec is not None
        assert dec.kernel.order == 4
        assert dec.complement.order == 3
        dec.verify()

    def test_c6_none(self):
        assert frobenius_decomposition(families.cyclic(6)) is None

    def test_d12_none(self):
        assert frobenius_decomposition(families.dihedral(12)) is None

    def test_s4_none(self):
        assert frobenius_decomposition(families.symmetric(4)) is None

    def test_f20(self):
        # C5 : C4 acting faithfully is Frobenius
        from avgorder.perm import PermGroup, Permutation

        g = PermGroup([Permutation.parse("(0 1 2 3 4)", 5), Permutation.parse("(1 2 4 3)", 5)])
        assert g.order == 20
        dec = frobenius_decomposition(g)
        assert dec is not None
        assert dec.kernel.order == 5
        assert dec.complement.order == 4

    def test_family_members(self):
        for m in (1, 2, 3):
            g = families.frobenius_3m_2(m)
            dec = frobenius_decomposition(g)
            assert dec is not None
            assert dec.kernel.order == 3**m
            assert dec.complement.order == 2
            dec.verify()

    def test_determinism(self):
        g = families.frobenius_3m_2(2)
        a = frobenius_decomposition(g)
        b = frobenius_decomposition(g)
        assert a.kernel.members == b.kernel.members
        assert a.complement.members == b.complement.members


class TestJustNonSupersolvable:
    def test_a4(self):
        assert is_just_non_supersolvable(families.alternating(4))

    def test_s4(self):
        assert is_just_non_supersolvable(families.symmetric(4))

    def test_s3_and_d8_are_supersolvable(self):
        assert not is_just_non_supersolvable(families.symmetric(3))
        assert not is_just_non_supersolvable(families.dihedral(8))

    def test_a5_not_solvable(self):
        assert not is_just_non_supersolvable(families.alternating(5))

    def test_a4_times_c2_not(self):
        # has the non-supersolvable proper quotient A4
        g = direct_product(families.alternating(4), families.cyclic(2))
        assert not is_just_non_supersolvable(g)
