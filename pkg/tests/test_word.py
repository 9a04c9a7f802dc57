import random

import pytest

from oracles import f_value, naive_inversions
from permrel.word import check_letters, concat, format_word, inversions, multidegree, power, sign_f, word


def test_concat_and_power():
    assert concat((1, 2), (3,)) == (1, 2, 3)
    assert concat((), (2, 1)) == (2, 1)
    assert concat((1,), (1,)) == (1, 1)
    assert power((1, 2), 3) == (1, 2, 1, 2, 1, 2)
    assert word(3, 1) == (3, 1)


def test_multidegree():
    assert multidegree((1, 2, 3, 4), 4) == (1, 1, 1, 1)
    assert multidegree((1, 1, 2), 4) == (2, 1, 0, 0)
    assert multidegree((), 4) == (0, 0, 0, 0)


def test_check_letters():
    with pytest.raises(ValueError, match="position 1"):
        check_letters((1, 5), 4)
    with pytest.raises(ValueError):
        multidegree((0,), 3)


def test_sign_examples():
    assert sign_f((1, 2)) == 1
    assert sign_f((1, 2, 3, 4, 1)) == -1
    assert f_value((1, 2, 3, 4, 1)) == -1
    assert sign_f((1, 1, 2)) == 1


def test_inversions_match_brute_force():
    rng = random.Random(7)
    for _ in range(500):
        w = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 30)))
        assert inversions(w) == naive_inversions(w)
        assert sign_f(w) == f_value(w)


def test_format_word():
    assert format_word(()) == "ε"
    assert format_word((1, 2, 3)) == "1 2 3"
