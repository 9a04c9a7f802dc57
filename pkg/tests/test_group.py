import random

import pytest

from oracles import naive_image
from permrel import group as grp
from permrel.presentation import build_presentation


def test_products_of_generators():
    a1, a2 = grp.generator(1, 4), grp.generator(2, 4)
    assert grp.mul(a1, a2) == grp.GroupElement(0, (1, 1, 0, 0))
    assert grp.mul(a2, a1) == grp.GroupElement(1, (1, 1, 0, 0))
    assert grp.mul(a1, grp.identity(4)) == a1
    assert a1 * a2 == grp.mul(a1, a2)


def test_inverse():
    assert grp.inv(grp.identity(3)) == grp.identity(3)
    assert grp.inv(grp.generator(1, 4)) == grp.GroupElement(0, (-1, 0, 0, 0))
    g = grp.from_word((2, 1), 4)
    assert grp.mul(g, grp.inv(g)) == grp.identity(4)
    assert grp.mul(grp.inv(g), g) == grp.identity(4)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        grp.mul(grp.identity(3), grp.identity(4))


def test_from_word_examples():
    assert grp.from_word((1, 2, 3, 4), 4) == grp.GroupElement(0, (1, 1, 1, 1))
    assert grp.from_word((2, 1), 4) == grp.GroupElement(1, (1, 1, 0, 0))
    assert grp.from_word((1, 1, 2), 4) == grp.GroupElement(0, (2, 1, 0, 0))


def test_from_word_matches_oracle_and_fold():
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(3, 7)
        w = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 20)))
        g = grp.from_word(w, n)
        assert (g.eps, g.exps) == naive_image(w, n)
        assert grp.fold_word(w, n) == g


def test_associativity():
    rng = random.Random(5)
    for _ in range(200):
        g, h, k = (grp.GroupElement(rng.randint(0, 1), tuple(rng.randint(-3, 3) for _ in range(5))) for _ in range(3))
        assert grp.mul(grp.mul(g, h), k) == grp.mul(g, grp.mul(h, k))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_commutator_structure(n):
    c = grp.commutator_c(n)
    one = grp.identity(n)
    assert c != one and grp.mul(c, c) == one
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            got = grp.commutator(grp.generator(i, n), grp.generator(j, n))
            assert got == (one if i == j else c)
    assert grp.is_central(c)
    assert grp.is_central(grp.power(grp.generator(2, n), 2))
    assert not grp.is_central(grp.generator(1, n))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_relators_have_one_image(n):
    p = build_presentation(n, "alternating")
    images = {grp.from_word(r, n) for r in p.relator_orbit}
    assert images == {grp.from_word(p.z, n)}


def test_power_and_projections():
    g = grp.from_word((2, 1), 4)
    assert grp.power(g, 0) == grp.identity(4)
    assert grp.power(g, -1) == grp.inv(g)
    assert grp.power(g, 2) == grp.mul(g, g)
    assert grp.project_mod_C(g) == (1, 1, 0, 0)
    assert grp.project_mod_CD(grp.from_word((1, 2, 3, 4), 4)) == (1, 1, 1, 1)
    assert grp.project_mod_CD(grp.GroupElement(0, (2, 0, 0, 0))) == (0, 0, 0, 0)
