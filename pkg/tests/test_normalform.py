import itertools
import random

import pytest

from oracles import naive_image, words
from permrel.normalform import (
    GENERAL,
    TWO_GENERATOR,
    CanonicalZ2Form,
    derive_z2,
    form_from_image,
    normal_form_T,
    normal_form_z2,
    reconstruct,
    replay,
    t_form_of,
)
from permrel.presentation import build_presentation
from permrel.rewrite import EQUAL, equal


def test_empty_word(alt):
    form = normal_form_z2((), alt(4))
    assert form.kind == TWO_GENERATOR and form.n1 == form.n2 == 0 and form.tail == ()


def test_alternating_run_reduces(alt):
    form = normal_form_z2((1, 2, 1, 2, 1), alt(4))
    assert (form.i, form.j, form.n1, form.n2, form.tail) == (1, 2, 1, 0, (2, 1, 2))
    # the reduction is an identity in M, checked by rewriting
    z = alt(4).z
    assert equal(z + z + (1, 2, 1, 2, 1), reconstruct(form, 4), alt(4), fast_path=False).verdict == EQUAL


def test_order_matters(alt):
    a = normal_form_z2((1, 2), alt(4))
    b = normal_form_z2((2, 1), alt(4))
    assert a != b and a.tail == (1, 2) and b.tail == (2, 1)
    z = alt(4).z
    assert naive_image(z + z + (1, 2), 4) != naive_image(z + z + (2, 1), 4)


def test_general_form_shape(alt):
    form = normal_form_z2((4, 3, 1, 2, 3), alt(4))
    assert form.kind == GENERAL
    assert form.word()[len(form.core):] == (3, 3, 4)


@pytest.mark.parametrize("n,L", [(4, 6), (5, 5), (6, 4)])
def test_forms_classify_images_exhaustively(n, L):
    z2 = tuple(range(1, n + 1)) * 2
    seen = {}
    for s in words(n, L):
        form, trace = derive_z2(s, n)
        assert replay(s, trace) == form.word()
        assert form == form_from_image(s, n)
        img = naive_image(z2 + s, n)
        assert seen.setdefault(img, form) == form
    # distinct images get distinct forms
    assert len(set(seen.values())) == len(seen)


def test_long_random_words():
    rng = random.Random(1)
    for n in (4, 7, 9):
        for _ in range(30):
            s = tuple(rng.randint(1, n) for _ in range(rng.randint(20, 60)))
            form, trace = derive_z2(s, n)
            assert replay(s, trace) == form.word()
            assert form == form_from_image(s, n)


def test_z2_form_requires_alternating():
    with pytest.raises(ValueError):
        normal_form_z2((1,), build_presentation(4, "symmetric"))


def test_to_dict_round_trip(alt):
    form = normal_form_z2((3, 1, 2, 2), alt(5))
    d = form.to_dict()
    again = CanonicalZ2Form(d["kind"], d["i"], d["j"], d["n1"], d["n2"], tuple(d["tail"]), tuple(d["m"]))
    assert again == form


def test_t_form_examples(alt):
    p = alt(6)
    base = normal_form_T((), 1, 2, 3, p)
    assert base.triple == (1, 2, 3) and base.orientation == 0 and sum(base.prefix) == 0
    commuted = normal_form_T((4,), 1, 2, 3, p)
    assert commuted.triple == (1, 2, 3) and commuted.orientation == 0
    assert commuted.prefix == (0, 0, 0, 1, 0, 0)
    flipped = normal_form_T((1,), 1, 2, 3, p)
    assert flipped.triple == (1, 2, 3) and flipped.orientation == 1
    assert flipped.prefix == (1, 0, 0, 0, 0, 0)


def test_t_form_is_equal_in_M(alt):
    p = alt(6)
    rng = random.Random(4)
    for _ in range(6):
        k, l, r = rng.sample(range(1, 7), 3)
        s = tuple(rng.randint(1, 6) for _ in range(rng.randint(0, 2)))
        x = (k, l, r) + p.z + s
        form = normal_form_T(s, k, l, r, p)
        assert equal(x, form.word(6), p).verdict == EQUAL


def test_t_form_errors(alt):
    with pytest.raises(ValueError):
        normal_form_T((), 1, 1, 2, alt(6))
    with pytest.raises(ValueError):
        normal_form_T((), 1, 2, 3, alt(5))
    with pytest.raises(ValueError):
        t_form_of((1, 2, 3, 4, 5, 6), alt(6))


def test_t_forms_separate_images(alt):
    p = alt(6)
    forms = {}
    for s in words(6, 2):
        for k, l, r in itertools.permutations(range(1, 4)):
            x = (k, l, r) + p.z + s
            f = normal_form_T(s, k, l, r, p)
            assert forms.setdefault(naive_image(x, 6), f) == f
    assert len(set(forms.values())) == len(forms)
