"""Permutation and group-core tests, including brute-force lattice oracles."""

import itertools

import pytest

from avgorder.errors import CapExceeded
from avgorder.perm import PermGroup, Permutation, Subgroup, direct_product, is_isomorphic


def cyclic(n):
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])])


def klein():
    return PermGroup([Permutation.parse("(0 1)", 4), Permutation.parse("(2 3)", 4)])


def s3():
    return PermGroup([Permutation.parse("(0 1 2)", 3), Permutation.parse("(0 1)", 3)])


def a4():
    return PermGroup([Permutation.parse("(0 1 2)", 4), Permutation.parse("(0 1)(2 3)", 4)])


def d8():
    return PermGroup([Permutation.parse("(0 1 2 3)", 4), Permutation.parse("(0 2)", 4)])


def q8():
    # i and j acting on the eight unit quaternions {1,-1,i,-i,j,-j,k,-k}
    return PermGroup(
        [
            Permutation.parse("(0 2 1 3)(4 6 5 7)", 8),
            Permutation.parse("(0 4 1 5)(2 7 3 6)", 8),
        ]
    )


def a5():
    return PermGroup([Permutation.parse("(0 1 2 3 4)", 5), Permutation.parse("(0 1 2)", 5)])


class TestPermutation:
    def test_identity_compose(self):
        p = Permutation.parse("(0 1 2)", 3)
        e = Permutation.identity(3)
        assert e * p == p
        assert p * e == p

    def test_inverse_compose(self):
        p = Permutation.parse("(0 1 2 3)", 4)
        assert p * p.inverse() == Permutation.identity(4)
        assert p.inverse() * p == Permutation.identity(4)

    def test_compose_is_apply_right_first(self):
        # (0 1) after (1 2) maps 0->1, 1->2, 2->0
        p = Permutation.parse("(0 1)", 3)
        q = Permutation.parse("(1 2)", 3)
        assert (p * q).images == (1, 2, 0)

    def test_compose_degree_mismatch(self):
        with pytest.raises(ValueError):
            Permutation.parse("(0 1)", 2) * Permutation.parse("(0 1)", 3)

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])

    def test_order_identity(self):
        assert Permutation.identity(4).order() == 1

    def test_order_five_cycle(self):
        assert Permutation.parse("(0 1 2 3 4)", 5).order() == 5

    def test_order_two_cycle_times_three_cycle(self):
        p = Permutation.parse("(0 1)(2 3 4)", 5)
        # repeated composition oracle
        k, q = 1, p
        while not q.is_identity():
            q = q * p
            k += 1
        assert k == 6
        assert p.order() == 6

    def test_pow_matches_repeated_product(self):
        p = Permutation.parse("(0 1 2 3 4 5)", 6)
        q = Permutation.identity(6)
        for k in range(15):
            assert p**k == q
            q = q * p
        assert p**-1 == p.inverse()

    def test_cycle_string_round_trip(self):
        for text in ["()", "(0 1)", "(0 1 2)(3 4)", "(1 3)(2 5 4)"]:
            p = Permutation.parse(text, 6)
            assert Permutation.parse(p.cycle_string(), 6) == p

    def test_sorting_puts_identity_first(self):
        els = sorted(s3().elements)
        assert els[0].is_identity()


class TestEnumeration:
    def test_cyclic_four(self):
        g = PermGroup([Permutation.parse("(0 1 2 3)", 4)])
        assert g.order == 4

    def test_a4_has_twelve_elements(self):
        assert a4().order == 12

    def test_d8_closure_by_hand(self):
        g = d8()
        r = Permutation.parse("(0 1 2 3)", 4)
        s = Permutation.parse("(0 2)", 4)
        by_hand = set()
        for i in range(4):
            by_hand.add(r**i)
            by_hand.add((r**i) * s)
        assert g.elements == by_hand
        assert g.order == 8

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded):
            PermGroup([Permutation.parse("(0 1 2 3 4)", 5), Permutation.parse("(0 1 2)", 5)], max_order=30).elements

    def test_closure_invariants(self):
        for g in [s3(), a4(), d8(), q8()]:
            els = g.elements
            assert g.identity in els
            assert all(x.inverse() in els for x in els)
            assert all(x * y in els for x in els for y in els)
            fact = 1
            for i in range(1, g.degree + 1):
                fact *= i
            assert fact % g.order == 0


class TestSubgroups:
    def test_generated_trivial(self):
        g = a4()
        t = g.subgroup([g.identity])
        assert t.order == 1

    def test_generated_three_cycle(self):
        g = a4()
        h = g.subgroup([Permutation.parse("(0 1 2)", 4)])
        assert h.order == 3
        # closure oracle
        x = Permutation.parse("(0 1 2)", 4)
        assert h.members == {g.identity, x, x * x}

    def test_generated_whole(self):
        g = a4()
        assert g.subgroup(g.generators).order == 12

    def test_seed_not_in_parent(self):
        with pytest.raises(ValueError):
            a4().subgroup([Permutation.parse("(0 1)", 4)])

    def test_lagrange_enforced(self):
        g = s3()
        with pytest.raises(ValueError):
            Subgroup(g, frozenset([g.identity, Permutation.parse("(0 1)", 3), Permutation.parse("(0 2)", 3), Permutation.parse("(1 2)", 3)]))

    def test_normality(self):
        g = a4()
        v4 = g.subgroup([Permutation.parse("(0 1)(2 3)", 4), Permutation.parse("(0 2)(1 3)", 4)])
        assert v4.order == 4
        assert v4.is_normal()
        h = s3().subgroup([Permutation.parse("(0 1)", 3)])
        assert not h.is_normal()
        assert s3().whole_subgroup().is_normal()


def brute_force_subgroups(g):
    """Oracle: test every subset closed under the group operation."""
    els = sorted(g.elements)
    found = set()
    for size in range(1, g.order + 1):
        if g.order % size:
            continue
        for combo in itertools.combinations(els, size):
            s = set(combo)
            if g.identity not in s:
                continue
            if all(x * y in s for x in s for y in s):
                found.add(frozenset(s))
    return found


class TestLattice:
    def test_c2_has_two_subgroups(self):
        assert len(cyclic(2).all_subgroups()) == 2

    def test_a4_lattice_vs_brute_force(self):
        g = a4()
        subs = g.all_subgroups()
        assert len(subs) == 10
        by_order = {}
        for s in subs:
            by_order[s.order] = by_order.get(s.order, 0) + 1
        assert by_order == {1: 1, 2: 3, 3: 4, 4: 1, 12: 1}
        assert {s.members for s in subs} == brute_force_subgroups(g)

    def test_d8_lattice_vs_brute_force(self):
        g = d8()
        subs = g.all_subgroups()
        assert len(subs) == 10
        assert {s.members for s in subs} == brute_force_subgroups(g)

    def test_s3_q8_klein_vs_brute_force(self):
        for g in [s3(), q8(), klein(), cyclic(12)]:
            assert {s.members for s in g.all_subgroups()} == brute_force_subgroups(g)

    def test_lattice_cap(self):
        with pytest.raises(CapExceeded):
            a4().all_subgroups(lattice_cap=10)

    def test_lattice_is_sorted_and_unique(self):
        subs = d8().all_subgroups()
        keys = [(s.order, s.member_key()) for s in subs]
        assert keys == sorted(keys)
        assert len({s.members for s in subs}) == len(subs)

    def test_elementary_abelian_64_stress(self):
        # direct product of six swaps: 2^6 elements, 2825 subgroups
        gens = [Permutation.parse(f"({2 * i} {2 * i + 1})", 12) for i in range(6)]
        g = PermGroup(gens)
        assert g.order == 64
        assert len(g.all_subgroups()) == 2825

    def test_known_subgroup_totals(self):
        from avgorder import families

        assert len(families.symmetric(4).all_subgroups()) == 30
        assert len(families.dicyclic(4).all_subgroups()) == 11  # generalized quaternion Q16
        assert len(a5().all_subgroups()) == 59
        assert len(families.elementary_abelian(2, 4).all_subgroups()) == 67
        assert len(families.elementary_abelian(3, 3).all_subgroups()) == 28

    def test_dihedral_subgroup_count_formula(self):
        # D_2n has d(n) + sigma(n) subgroups
        from avgorder import families

        for n in range(3, 13):
            divisors = [d for d in range(1, n + 1) if n % d == 0]
            expected = len(divisors) + sum(divisors)
            assert len(families.dihedral(2 * n).all_subgroups()) == expected, n


class TestNormalSubgroups:
    def test_s3(self):
        orders = sorted(h.order for h in s3().normal_subgroups())
        assert orders == [1, 3, 6]

    def test_a4(self):
        orders = sorted(h.order for h in a4().normal_subgroups())
        assert orders == [1, 4, 12]

    def test_abelian_all_normal(self):
        g = cyclic(12)
        assert len(g.normal_subgroups()) == len(g.all_subgroups())


class TestQuotient:
    def test_a4_mod_v4(self):
        g = a4()
        v4 = next(h for h in g.normal_subgroups() if h.order == 4)
        q = g.quotient(v4)
        assert q.order == 3

    def test_quotient_by_whole(self):
        g = s3()
        assert g.quotient(g.whole_subgroup()).order == 1

    def test_d8_mod_center_is_klein(self):
        g = d8()
        q = g.quotient(g.center())
        assert q.order == 4
        assert all(x * x == q.identity for x in q.elements)

    def test_quotient_requires_normal(self):
        g = s3()
        h = g.subgroup([Permutation.parse("(0 1)", 3)])
        with pytest.raises(ValueError):
            g.quotient(h)

    def test_order_multiplies(self):
        for g in [a4(), d8(), q8(), s3()]:
            for n in g.normal_subgroups():
                assert g.quotient(n).order * n.order == g.order


class TestDerivedAndFriends:
    def test_derived_abelian_is_trivial(self):
        assert cyclic(6).derived_subgroup().order == 1

    def test_derived_a4_is_v4(self):
        d = a4().derived_subgroup()
        assert d.order == 4
        assert all(x.order() in (1, 2) for x in d.members)

    def test_derived_s3_is_c3(self):
        d = s3().derived_subgroup()
        assert d.order == 3

    def test_derived_is_normal_with_abelian_quotient(self):
        for g in [s3(), a4(), d8(), q8(), a5()]:
            d = g.derived_subgroup()
            assert d.is_normal()
            q = g.quotient(d)
            assert all(x * y == y * x for x in q.generators for y in q.generators)

    def test_frattini_a4_trivial(self):
        assert a4().frattini_subgroup().order == 1

    def test_frattini_c4(self):
        assert cyclic(4).frattini_subgroup().order == 2

    def test_frattini_elementary_abelian_trivial(self):
        assert klein().frattini_subgroup().order == 1

    def test_center_d8(self):
        c = d8().center()
        assert c.order == 2
        # oracle: scan for elements commuting with everything
        g = d8()
        manual = {x for x in g.elements if all(x * y == y * x for y in g.elements)}
        assert c.members == manual

    def test_fitting_a4(self):
        f = a4().fitting_subgroup()
        assert f.order == 4

    def test_fitting_of_nilpotent_is_whole(self):
        for g in [d8(), q8(), cyclic(12)]:
            assert g.fitting_subgroup().order == g.order

    def test_fitting_s4_is_klein(self):
        from avgorder.families import symmetric

        f = symmetric(4).fitting_subgroup()
        assert f.order == 4
        assert all(x.order() in (1, 2) for x in f.members)


class TestPCore:
    def test_a4(self):
        assert a4().p_core(2).members == a4().subgroup(
            [Permutation.parse("(0 1)(2 3)", 4), Permutation.parse("(0 2)(1 3)", 4)]
        ).members
        assert a4().p_core(3).order == 1

    def test_s3(self):
        assert s3().p_core(2).order == 1
        assert s3().p_core(3).order == 3

    def test_p_not_dividing_gives_trivial(self):
        assert s3().p_core(5).order == 1

    def test_p_group_core_is_whole(self):
        g = d8()
        assert g.p_core(2).order == 8


class TestSylow:
    def test_s3_sylow3(self):
        assert s3().sylow_subgroup(3).order == 3

    def test_a4_sylow2(self):
        s = a4().sylow_subgroup(2)
        assert s.order == 4
        assert all(x.order() in (1, 2) for x in s.members)

    def test_c12_sylow2(self):
        s = cyclic(12).sylow_subgroup(2)
        assert s.order == 4

    def test_p_must_divide(self):
        with pytest.raises(ValueError):
            s3().sylow_subgroup(5)

    def test_deterministic_choice(self):
        a = s3().sylow_subgroup(2)
        b = s3().sylow_subgroup(2)
        assert a.member_key() == b.member_key()
        # lexicographically least among the three conjugates
        g = s3()
        conjugates = sorted(
            tuple(p.images for p in sorted({g.identity, t}))
            for t in g.elements
            if t.order() == 2
        )
        assert a.member_key() == conjugates[0]


class TestDirectProduct:
    def test_with_trivial(self):
        g = direct_product(a4(), cyclic(1))
        assert g.order == 12
        assert is_isomorphic(g, a4())

    def test_c2_times_c3(self):
        g = direct_product(cyclic(2), cyclic(3))
        assert g.order == 6
        assert any(x.order() == 6 for x in g.elements)

    def test_d8_times_c2(self):
        g = direct_product(d8(), cyclic(2))
        assert g.order == 16

    def test_cap(self):
        with pytest.raises(CapExceeded):
            direct_product(a5(), a5(), max_order=100)


class TestIsomorphism:
    def test_a4_vs_affine_construction(self):
        # translations of F_2^2 extended by the order-3 linear map [[0,1],[1,1]]
        # points: vectors (x, y) numbered x + 2y
        t1 = Permutation([1, 0, 3, 2])  # +e1
        t2 = Permutation([2, 3, 0, 1])  # +e2
        lin = Permutation([0, 2, 3, 1])  # (x,y) -> (y, x+y)
        g = PermGroup([t1, t2, lin])
        assert g.order == 12
        assert is_isomorphic(g, a4())

    def test_c4_vs_klein(self):
        assert not is_isomorphic(cyclic(4), klein())

    def test_d8_vs_q8(self):
        assert not is_isomorphic(d8(), q8())

    def test_reflexive_and_symmetric(self):
        groups = [cyclic(6), s3(), d8(), q8(), a4()]
        for g in groups:
            assert is_isomorphic(g, g)
        for g, h in itertools.combinations(groups, 2):
            assert is_isomorphic(g, h) == is_isomorphic(h, g)

    def test_same_spectrum_nonisomorphic(self):
        # C4 x C4 and C2 x C8 share the order multiset only partially;
        # use the classic equal-spectrum pair C4xC2xC2 vs the Pauli-like
        # central product is exercised at catalog scale instead.  Here:
        # C2^3 vs C4xC2 differ, quick sanity only.
        assert not is_isomorphic(
            direct_product(cyclic(4), cyclic(4)), direct_product(cyclic(2), cyclic(8))
        )

    def test_cap_is_an_error_not_false(self):
        with pytest.raises(CapExceeded):
            is_isomorphic(a5(), a5(), iso_cap=30)

    def test_order_mismatch_is_false(self):
        assert not is_isomorphic(cyclic(2), cyclic(3))
