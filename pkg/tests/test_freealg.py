import random

import pytest

from ospq.scalars import Scalar, rat, P
from ospq.freealg import SuperPoly, TensorElement
from ospq.frt import ALPHABET


def w(*letters):
    return SuperPoly.word(ALPHABET, letters)


def test_product_is_concatenation():
    assert w("a") * w("b") == w("a", "b")


def test_no_auto_reordering_in_the_free_algebra():
    f = (w("a") + w("al")) * (w("a") - w("al"))
    expected = (w("a", "a") - w("a", "al") + w("al", "a") - w("al", "al"))
    assert f == expected


def test_odd_square_stays_a_word():
    assert w("de") * w("de") == w("de", "de")


def test_grade_queries():
    assert w("al", "de").grade() == 0
    assert w("al", "c").grade() == 1
    with pytest.raises(ValueError):
        (w("a") + w("al")).grade()


def _random_poly(rng, alphabet, max_deg=3, nterms=3):
    out = SuperPoly.zero(alphabet)
    for _ in range(rng.randint(1, nterms)):
        word = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(0, max_deg)))
        coeff = rat(rng.randint(-4, 4)) + rat(rng.randint(-2, 2)) * P
        out = out + SuperPoly.word(alphabet, word, coeff)
    return out


def test_product_bilinear_associative():
    rng = random.Random(11)
    for _ in range(25):
        f, g, h = (_random_poly(rng, ALPHABET) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_tensor_koszul_sign():
    one = SuperPoly.one(ALPHABET)
    al = w("al")
    t1 = TensorElement.of(one, al)
    t2 = TensorElement.of(al, one)
    assert t1 * t2 == TensorElement.of(al, al).scale(rat(-1))


def test_tensor_even_legs_sign_free():
    one = SuperPoly.one(ALPHABET)
    t1 = TensorElement.of(w("a"), one)
    t2 = TensorElement.of(one, w("b"))
    assert t1 * t2 == TensorElement.of(w("a"), w("b"))


def test_tensor_mixing_arities_rejected():
    one = SuperPoly.one(ALPHABET)
    t2 = TensorElement.of(one, one)
    t3 = TensorElement.of(one, one, one)
    with pytest.raises(ValueError):
        _ = t2 * t3


def test_tensor_associativity_random():
    rng = random.Random(23)
    for _ in range(10):
        legs = [_random_poly(rng, ALPHABET, max_deg=1, nterms=2) for _ in range(6)]
        t1 = TensorElement.of(legs[0], legs[1])
        t2 = TensorElement.of(legs[2], legs[3])
        t3 = TensorElement.of(legs[4], legs[5])
        assert (t1 * t2) * t3 == t1 * (t2 * t3)


def test_even_even_product_sign_free():
    rng = random.Random(5)
    evens = ["a", "b", "c", "d"]
    for _ in range(10):
        u = tuple(rng.choice(evens) for _ in range(2))
        v = tuple(rng.choice(evens) for _ in range(2))
        t1 = TensorElement.of(w(*u), w(*v))
        t2 = TensorElement.of(w(*v), w(*u))
        prod = t1 * t2
        key = (u + v, v + u)
        assert prod._terms[key] == Scalar.one()


def test_substitute_letters_is_algebra_map():
    images = {"a": w("a") + w("b"), "b": w("b", "b")}
    f = w("a", "b") + w("b")
    g = w("a")
    lhs = (f * g).substitute_letters(images)
    rhs = f.substitute_letters(images) * g.substitute_letters(images)
    assert lhs == rhs


def test_word_key_orders_by_weight_then_length():
    key = ALPHABET.word_key
    assert key(("c", "al")) > key(("al", "c")) or key(("c", "al")) < key(("al", "c"))
    # c has weight 1, a weight 2: the square of c is lighter than a single a pair
    assert key(("c", "c")) < key(("a", "a"))
    assert key(("c", "a")) > key(("c", "c"))
