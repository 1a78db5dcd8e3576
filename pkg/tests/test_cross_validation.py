"""Independent cross-validation of the catalog against sympy.combinatorics.

sympy's permutation-group machinery (stabilizer chains) shares no code
with this package, so agreement on orders, structural flags, centers and
derived subgroups is strong evidence that the catalog data and the
closure-based algorithms are both right.
"""

import pytest
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup as SymGroup

from avgorder.catalog import load_catalog
from avgorder.structure import is_abelian, is_nilpotent, is_solvable


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


def to_sympy(group):
    return SymGroup([SymPerm(list(g.images)) for g in group.generators])


def test_orders_and_flags_agree(catalog):
    for entry in catalog:
        ours = entry.group()
        theirs = to_sympy(ours)
        assert theirs.order() == ours.order, entry.name
        assert theirs.is_abelian == is_abelian(ours), entry.name
        assert theirs.is_nilpotent == is_nilpotent(ours), entry.name
        assert theirs.is_solvable == is_solvable(ours), entry.name


def test_centers_and_derived_subgroups_agree(catalog):
    for entry in catalog:
        ours = entry.group()
        theirs = to_sympy(ours)
        assert theirs.center().order() == ours.center().order, entry.name
        assert theirs.derived_subgroup().order() == ours.derived_subgroup().order, entry.name


def test_element_orders_agree(catalog):
    for entry in catalog:
        ours = entry.group()
        theirs = to_sympy(ours)
        our_orders = sorted(x.order() for x in ours.elements)
        their_orders = sorted(p.order() for p in theirs.elements)
        assert our_orders == their_orders, entry.name


def test_cyclic_entries_agree(catalog):
    for entry in catalog:
        if entry.name.startswith("C") and "x" not in entry.name and "^" not in entry.name and ":" not in entry.name:
            if entry.name[1:].isdigit():
                assert to_sympy(entry.group()).is_cyclic, entry.name
