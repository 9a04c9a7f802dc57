import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_class, orbit, words
from permrel.presentation import build_presentation
from permrel.rewrite import (
    BUDGET_EXHAUSTED,
    CLOSURE_MEET,
    COMPLETE,
    EQUAL,
    FAST_PATH,
    INVARIANT_MISMATCH,
    NOT_EQUAL,
    TRUNCATED,
    UNKNOWN,
    EqDecision,
    closure,
    equal,
    find_in_class,
    ideal_profile,
    ideal_witness,
    in_ideal,
    one_step_rewrites,
)


def test_one_step_examples(alt):
    p = alt(4)
    # the word itself counts as a trivial rewrite
    assert one_step_rewrites((1, 2, 3, 4), p) == set(orbit(4, "alternating"))
    assert one_step_rewrites((1, 1), p) == {(1, 1)}
    assert (1, 2, 3, 1, 4) in one_step_rewrites((1, 1, 2, 3, 4), p)


def test_closure_of_z(alt):
    cls = closure((1, 2, 3, 4), alt(4))
    assert cls.status == COMPLETE and len(cls) == 12
    assert set(cls.members) == orbit(4, "alternating")
    assert list(cls.members) == sorted(cls.members)


def test_closure_small_cases(alt):
    cls = closure((1,), alt(4), budget=10)
    assert cls.members == ((1,),) and cls.complete
    cls = closure((1, 1, 2, 3, 4), alt(4))
    assert cls.complete and (1, 2, 3, 4, 1) not in cls


def test_closure_truncates(alt):
    cls = closure((1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6), alt(6), budget=50)
    assert cls.status == TRUNCATED
    assert not cls.complete
    with pytest.raises(ValueError):
        closure((1,), alt(4), budget=0)


@pytest.mark.parametrize("kind", ["trivial", "cyclic", "alternating", "symmetric"])
def test_closure_matches_naive_bfs(kind):
    p = build_presentation(4, kind)
    rel = orbit(4, kind)
    rng = random.Random(11)
    for _ in range(60):
        w = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 9)))
        assert set(closure(w, p).members) == naive_class(w, rel, 4)


def test_equal_examples(alt):
    z4, z5 = alt(4).z, alt(5).z
    assert equal((1, 2) + z4, z4 + (1, 2), alt(4)).verdict == EQUAL
    d = equal((1,) + z4, z4 + (1,), alt(4))
    assert d.verdict == NOT_EQUAL and d.reason == INVARIANT_MISMATCH
    d = equal((1, 1, 2) + z5, (2, 1, 1) + z5, alt(5))
    assert d.verdict == NOT_EQUAL and d.reason == CLOSURE_MEET


def test_equal_fast_path_and_budget(alt):
    z5 = alt(5).z
    u, v = (1, 1, 2) + z5 + z5, (2, 1, 1) + z5 + z5
    d = equal(u, v, alt(5))
    assert d.verdict == EQUAL and d.reason == FAST_PATH
    d = equal(u, v, alt(5), budget=10, fast_path=False)
    assert d.verdict == UNKNOWN and d.reason == BUDGET_EXHAUSTED


def test_decision_consistency():
    with pytest.raises(ValueError):
        EqDecision(UNKNOWN, CLOSURE_MEET)
    with pytest.raises(ValueError):
        EqDecision(EQUAL, BUDGET_EXHAUSTED)


def test_sign_not_used_for_odd_relators():
    # under Sym_4 the sign map is not invariant: a1a2a3a4 = a2a1a3a4
    p = build_presentation(4, "symmetric")
    assert equal((1, 2, 3, 4), (2, 1, 3, 4), p).verdict == EQUAL


def test_equal_agrees_with_naive_classes_cyclic():
    p = build_presentation(5, "cyclic")
    rel = orbit(5, "cyclic")
    rng = random.Random(2)
    for _ in range(40):
        w = tuple(rng.randint(1, 5) for _ in range(rng.randint(5, 10)))
        cls = naive_class(w, rel, 5)
        v = rng.choice(sorted(cls))
        assert equal(w, v, p).verdict == EQUAL
        other = tuple(sorted(w))
        assert (equal(w, other, p).verdict == EQUAL) == (other in cls)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=8), st.integers(0, 10**6))
def test_rewrites_stay_in_class(w, seed):
    p = build_presentation(4, "alternating")
    cls = closure(tuple(w), p)
    rng = random.Random(seed)
    x = rng.choice(cls.members)
    assert one_step_rewrites(x, p) <= set(cls.members)


def test_ideal_membership(alt):
    p4, p6 = alt(4), alt(6)
    assert in_ideal(p4.z + (1,), p4, "zM") == "yes"
    assert in_ideal((1, 2, 3) + p6.z, p6, "T") == "yes"
    assert in_ideal((1,), p4, "MzM") == "no"
    assert in_ideal(p4.z + (1,), p4, "Mz") == "no"
    assert in_ideal((1,) + p4.z, p4, "Mz") == "yes"
    status, wit, _ = ideal_witness((1, 2) + p4.z, p4, "zM")
    assert status == "yes" and wit[:4] in p4.relator_orbit
    with pytest.raises(ValueError):
        in_ideal(p4.z, p4, "T")
    with pytest.raises(ValueError):
        in_ideal(p4.z, p4, "Q")


def test_ideal_profile_matches_single_queries(alt):
    p = alt(6)
    names = ("Mz", "zM", "MzM", "T")
    for w in [(1, 2, 3) + p.z, p.z + (1,), (1, 1) + p.z, (2, 1, 3) + p.z + (5,)]:
        prof, _ = ideal_profile(w, p, names)
        assert prof == {k: in_ideal(w, p, k) for k in names}
    prof, _ = ideal_profile(p.z + (3,), p, ("Mza",))
    assert prof == {"Mza": "yes"}


def test_find_in_class(alt):
    p = alt(4)
    status, wit, _ = find_in_class(p.z, p, lambda x: x[0] == 4)
    assert status == "yes" and wit[0] == 4
    status, wit, _ = find_in_class(p.z, p, lambda x: x[0] == 5)
    assert status == "no" and wit is None


def test_invariants_preserved_small_exhaustive(alt):
    p = alt(4)
    for w in words(4, 6):
        for y in one_step_rewrites(w, p):
            assert sorted(y) == sorted(w)
            assert sum(1 for a, b in itertools.combinations(y, 2) if a > b) % 2 == sum(
                1 for a, b in itertools.combinations(w, 2) if a > b
            ) % 2
