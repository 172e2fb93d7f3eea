from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from canred import NumericalSemigroup, pseudo_frobenius
from canred.enumeration import genus_tree
from canred.errors import EmptyInput, GcdNotOne, GeneratorTooLarge
from canred.semigroup import parse_generators

from naive import NaiveSemigroup

SMALL = list(genus_tree(8))


@pytest.mark.parametrize("gens, frob, pf, genus", [
    ([3, 4, 5], 2, {1, 2}, 2),
    ([1], -1, {-1}, 0),
    ([4, 5, 11], 7, {6, 7}, 5),
    ([2, 3], 1, {1}, 1),
])
def test_new_examples(gens, frob, pf, genus):
    H = NumericalSemigroup(gens)
    assert H.frobenius == frob
    assert set(H.pf) == pf
    assert H.genus == genus
    assert H.cm_type == len(pf)


def test_trivial_conventions():
    H = NumericalSemigroup([1])
    assert H.conductor == 0
    assert H.membership == (True,)
    assert H.cm_type == 1
    assert H.is_symmetric()


def test_minimalization():
    H = NumericalSemigroup([6, 4, 10, 9, 8, 13])
    assert H.generators == (4, 6, 9)
    assert NumericalSemigroup([3, 3, 5, 6, 10]).generators == (3, 5)


def test_errors():
    with pytest.raises(GcdNotOne):
        NumericalSemigroup([4, 6])
    with pytest.raises(EmptyInput):
        NumericalSemigroup([])
    with pytest.raises(EmptyInput):
        NumericalSemigroup([0, 3, 4])
    with pytest.raises(GeneratorTooLarge):
        NumericalSemigroup([3, 2 ** 31])


@pytest.mark.parametrize("gens, z, expected", [
    ([3, 4, 5], 2, False),
    ([3, 4, 5], 100, True),
    ([2, 3], 1, False),
    ([2, 3], -1, False),
    ([3, 4, 5], 0, True),
])
def test_contains(gens, z, expected):
    assert NumericalSemigroup(gens).contains(z) is expected


@pytest.mark.parametrize("gens, pf", [
    ([3, 4, 5], {1, 2}), ([4, 5, 11], {6, 7}), ([2, 3], {1}),
])
def test_pseudo_frobenius(gens, pf):
    assert pseudo_frobenius(NumericalSemigroup(gens)) == pf


@pytest.mark.parametrize("gens, sym", [([2, 3], True), ([3, 4, 5], False), ([1], True),
                                       ([6, 9, 20], True)])
def test_is_symmetric(gens, sym):
    assert NumericalSemigroup(gens).is_symmetric() is sym


@pytest.mark.parametrize("text", ["3,4,5", "⟨3,4,5⟩", "<3, 4, 5>", " 3 4 5 "])
def test_parse(text):
    assert parse_generators(text) == [3, 4, 5]


def test_json_fields():
    d = NumericalSemigroup([4, 5, 11]).to_dict()
    assert d == {"generators": [4, 5, 11], "frobenius": 7, "genus": 5,
                 "multiplicity": 4, "type": 2, "pf": [6, 7]}
    assert NumericalSemigroup.from_dict(d) == NumericalSemigroup([4, 5, 11])


@pytest.mark.parametrize("H", SMALL, ids=str)
def test_window_invariants(H):
    assert max(H.pf) == H.frobenius
    assert H.multiplicity == min(H.generators)
    assert H.genus == sum(1 for z in range(H.conductor) if not H.contains(z))
    for h in H.elements(H.window_length):
        for g in H.generators:
            assert H.contains(h + g)
    assert H.is_symmetric() == all(H.contains(z) != H.contains(H.frobenius - z)
                                   for z in range(-1, H.frobenius + 2))


def test_pf_routes_agree_up_to_genus_20():
    count = 0
    for H in genus_tree(20):
        assert H.pseudo_frobenius() == set(H.pf)
        count += 1
    assert count > 0


gen_lists = st.lists(st.integers(1, 40), min_size=1, max_size=5)


@settings(max_examples=300, deadline=None)
@given(gen_lists)
def test_membership_against_coin_problem(gens):
    if reduce(gcd, gens) != 1:
        with pytest.raises(GcdNotOne):
            NumericalSemigroup(gens)
        return
    H = NumericalSemigroup(gens)
    N = NaiveSemigroup(gens)
    assert H.frobenius == N.frobenius
    assert H.genus == N.genus
    assert set(H.pf) == N.pf()
    assert H.is_symmetric() == N.symmetric()
    for z in range(0, 4 * max(H.conductor, 1) + 1):
        assert H.contains(z) == (z in N)


@settings(max_examples=200, deadline=None)
@given(gen_lists)
def test_new_is_idempotent(gens):
    if reduce(gcd, gens) != 1:
        return
    H = NumericalSemigroup(gens)
    H2 = NumericalSemigroup(list(H.generators))
    assert H2.generators == H.generators
    assert H2.apery == H.apery and H2.pf == H.pf and H2.membership == H.membership
