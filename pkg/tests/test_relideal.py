import random

import pytest
from hypothesis import given, settings, strategies as st

from canred import NumericalSemigroup, RelativeIdeal, canonical_ideal
from canred.enumeration import genus_tree
from canred.errors import EmptyGenerators, NotASubset, ParentMismatch

from naive import NaiveIdeal, NaiveSemigroup, naive_unit

H345 = NumericalSemigroup([3, 4, 5])
H23 = NumericalSemigroup([2, 3])
H4511 = NumericalSemigroup([4, 5, 11])

POOL = [H for H in genus_tree(12) if H.genus >= 1]


def ideal(H, gens):
    return RelativeIdeal.from_elements(H, gens)


def members(E, upto):
    return [z for z in range(E.offset - 2, upto) if E.contains(z)]


def test_from_elements_examples():
    E = ideal(H345, [0, 1])
    assert (E.offset, E.window_members()) == (0, [0, 1])
    assert ideal(H345, [0]).equals(RelativeIdeal.unit(H345))
    M = ideal(H23, [2, 3])
    assert members(M, 8) == [2, 3, 4, 5, 6, 7]
    with pytest.raises(EmptyGenerators):
        ideal(H23, [])


def test_add_examples():
    K = ideal(H345, [0, 1])
    assert (K + K).equals(ideal(H345, [0, 1, 2]))
    assert members(K + K, 10) == list(range(10))
    E = ideal(H4511, [3, 8])
    assert (E + RelativeIdeal.unit(H4511)).equals(E)
    K2 = ideal(H4511, [0, 1])
    S = K2 + K2
    assert S.equals(ideal(H4511, [0, 1, 2]))
    assert not S.contains(3)


def test_colon_examples():
    K = ideal(H345, [0, 1])
    unit = RelativeIdeal.unit(H345)
    assert (unit - K).equals(RelativeIdeal.maximal(H345))
    E = ideal(H345, [-2, 7])
    assert (E - unit).equals(E)
    M = RelativeIdeal.maximal(H23)
    dual = RelativeIdeal.unit(H23) - M
    assert members(dual, 6) == list(range(6))
    assert not dual.contains(-1)


def test_power_examples():
    K = ideal(H4511, [0, 1])
    assert members(K.power(3), 20) == list(range(20))
    E = ideal(H345, [2, 7])
    assert E.power(1).equals(E)
    assert E.power(0).equals(RelativeIdeal.unit(H345))
    M = RelativeIdeal.maximal(H23)
    assert members(M.power(2), 10) == [4, 5, 6, 7, 8, 9]


def test_equals_subset_examples():
    K = canonical_ideal(H345)
    assert K.power(2).equals(K.power(3))
    for H in (H345, H23, H4511):
        assert RelativeIdeal.unit(H).is_subset(canonical_ideal(H))
    assert canonical_ideal(H23).equals(RelativeIdeal.unit(H23))


def test_shift_isomorphic_examples():
    M = RelativeIdeal.maximal(H345)
    assert M.isomorphic(M.shift(7))
    assert not canonical_ideal(H345).isomorphic(RelativeIdeal.unit(H345))
    E = ideal(H4511, [1, 6])
    assert E.shift(5).shift(-5).equals(E)


def test_minimal_generators_examples():
    assert ideal(H345, [0, 1]).minimal_generators() == [0, 1]
    assert RelativeIdeal.unit(H345).minimal_generators() == [0]
    assert ideal(H23, [0, 1]).minimal_generators() == [0, 1]


def test_colength_examples():
    unit = RelativeIdeal.unit(H345)
    K = ideal(H345, [0, 1])
    assert unit.colength_in(K.shift(3)) == 2
    assert K.colength_in(K) == 0
    assert ideal(H345, [0, 1, 2]).colength_in(unit) == 2
    with pytest.raises(NotASubset):
        unit.colength_in(K)


def test_parent_mismatch():
    with pytest.raises(ParentMismatch):
        RelativeIdeal.unit(H23) + RelativeIdeal.unit(H345)
    with pytest.raises(ParentMismatch):
        RelativeIdeal.unit(H23).colon(RelativeIdeal.unit(H345))


def test_json_round_trip():
    E = ideal(H4511, [-3, 2])
    assert RelativeIdeal.from_dict(H4511, E.to_dict()).equals(E)
    with pytest.raises(ValueError):
        RelativeIdeal.from_dict(H4511, {"offset": 0, "members": [0]})


# -- randomized checks against explicit sets ----------------------------

semigroups = st.sampled_from(POOL)
gen_sets = st.lists(st.integers(-20, 40), min_size=1, max_size=4, unique=True)


def _naive(H, gens):
    N = NaiveSemigroup(list(H.generators))
    span = 70 + H.conductor
    return N, span, NaiveIdeal.generated(N, gens, span)


def _same(lib, nv, c):
    lo, hi = nv.min - 1, nv.min + 4 * c + 1
    return lib.offset == nv.min and [lib.contains(z) for z in range(lo, hi)] == nv.window(lo, hi)


@settings(max_examples=300, deadline=None)
@given(semigroups, gen_sets, gen_sets, st.integers(0, 3))
def test_ops_match_explicit_sets(H, ge, gf, n):
    N, span, nE = _naive(H, ge)
    _, _, nF = _naive(H, gf)
    E, F = ideal(H, ge), ideal(H, gf)
    c = max(H.conductor, 1)
    assert _same(E + F, nE.add(nF), c)
    assert _same(E - F, nE.colon(nF), c)
    assert _same(E.power(n), nE.power(n, naive_unit(N, span)), c)
    lo, hi = min(nE.min, nF.min), max(nE.hi, nF.hi)
    subset = all(z in nF for z in range(lo, hi) if z in nE)
    assert E.is_subset(F) == subset
    if subset:
        assert F.colength_in(E) == sum(1 for z in range(lo, hi) if z in nF and z not in nE)


@settings(max_examples=200, deadline=None)
@given(semigroups, gen_sets, gen_sets, gen_sets, st.integers(-30, 30))
def test_algebraic_laws(H, ga, gb, gc, s):
    A, B, C = ideal(H, ga), ideal(H, gb), ideal(H, gc)
    unit = RelativeIdeal.unit(H)
    assert (A + B).equals(B + A)
    assert ((A + B) + C).equals(A + (B + C))
    assert (A + unit).equals(A)
    assert (A - A).equals(A.shift(s) - A.shift(s))
    # canonical form: equal sets have equal (offset, window)
    same = ideal(H, ga + [g + x for g in ga for x in H.generators])
    assert same.equals(A) and same.offset == A.offset and same.window == A.window
    # A ⊆ H implies H - (H - A) ⊇ A
    Ai = A.shift((unit - A).offset)
    assert Ai.is_subset(unit)
    assert Ai.is_subset(unit - (unit - Ai))
    assert (A - B).add(B).is_subset(A)


def test_window_tail_claim():
    rng = random.Random(3)
    for _ in range(200):
        H = rng.choice(POOL)
        E = ideal(H, rng.sample(range(-10, 30), rng.randint(1, 3)))
        for z in range(E.offset + H.conductor, E.offset + 3 * H.conductor + 3):
            assert E.contains(z)
