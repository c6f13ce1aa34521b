import random

import pytest

from ospq.scalars import Scalar, rat, P, HALF
from ospq.freealg import SuperPoly, SCALAR_ALPHABET
from ospq.supermatrix import (SuperMatrix, MatrixTensor, graded_embed, embed_left,
                              embed_right, exp_nilpotent, invert_unipotent,
                              partial_transpose_first, desuperize, ybe_check,
                              entry_grade)
from ospq import frt


def unit_tensor(i, j, k, l):
    return MatrixTensor(2, {((i, j), (k, l)): Scalar.one()})


def test_embed_elementary_all_even():
    m = graded_embed(unit_tensor(1, 1, 1, 1))
    assert m[1, 1] == SuperPoly.one(SCALAR_ALPHABET)
    assert sum(1 for r in m.entries for e in r if not e.is_zero) == 1


def test_embed_elementary_odd_sign():
    # odd first leg against an odd row index picks up the Koszul sign
    m = graded_embed(unit_tensor(1, 2, 2, 2))
    assert m[2, 5] == -SuperPoly.one(SCALAR_ALPHABET)


def test_embed_is_linear_and_injective():
    rng = random.Random(1)
    basis = [(i, j, k, l) for i in (1, 2, 3) for j in (1, 2, 3)
             for k in (1, 2, 3) for l in (1, 2, 3)]
    t = MatrixTensor(2)
    coeffs = {}
    for idx in rng.sample(basis, 10):
        c = rat(rng.randint(1, 5))
        coeffs[idx] = c
        t = t + unit_tensor(*idx).scale(c)
    m = graded_embed(t)
    nonzero = sum(1 for r in m.entries for e in r if not e.is_zero)
    assert nonzero == len(coeffs)


def test_embed_multiplicative_on_graded_product():
    # the embedding turns the graded tensor product into matrix product
    rng = random.Random(4)
    for _ in range(20):
        i, j, k, l = (rng.randint(1, 3) for _ in range(4))
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        o, q = rng.randint(1, 3), rng.randint(1, 3)
        a = graded_embed(unit_tensor(i, j, k, l))
        b = graded_embed(unit_tensor(j, m, l, n))
        g = [0, 1, 0]
        sign = (-1) ** ((g[k - 1] + g[l - 1]) * (g[j - 1] + g[m - 1]))
        prod = graded_embed(unit_tensor(i, m, k, n).scale(rat(sign)))
        assert a @ b == prod


def test_embed_left_sign_pattern():
    t = frt.defining_matrix()
    t1 = embed_left(t)
    al = SuperPoly.letter(frt.ALPHABET9, "al")
    de = SuperPoly.letter(frt.ALPHABET9, "de")
    assert t1[2, 5] == -al
    assert t1[8, 5] == -de
    assert t1[1, 4] == al


def test_embed_right_is_block_diagonal():
    t = frt.defining_matrix()
    t2 = embed_right(t)
    for k in range(3):
        for i in range(3):
            for j in range(3):
                assert t2[3 * k + i + 1, 3 * k + j + 1] == t.entries[i][j]
    assert t2[1, 4].is_zero


def test_identity_embeds_to_identity():
    one = SuperMatrix.identity(frt.ALPHABET9, 3)
    assert embed_left(one) == SuperMatrix.identity(frt.ALPHABET9, 9)
    assert embed_right(one) == SuperMatrix.identity(frt.ALPHABET9, 9)


def test_embed_respects_products_of_scalar_matrices():
    rng = random.Random(8)
    for _ in range(5):
        a = _random_even_scalar_matrix(rng)
        b = _random_even_scalar_matrix(rng)
        assert embed_left(a) @ embed_left(b) == embed_left(a @ b)
        assert embed_right(a) @ embed_right(b) == embed_right(a @ b)


def _random_even_scalar_matrix(rng):
    rows = [[Scalar.zero()] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            if entry_grade(3, i + 1, j + 1) == 0:
                rows[i][j] = rat(rng.randint(-2, 2))
    return SuperMatrix.from_scalars(rows)


def test_dual_matrix_embedding_signs():
    from ospq.borel import RLL_ALPHABET, dual_generator_matrix
    l1 = embed_left(dual_generator_matrix())
    b = SuperPoly.letter(RLL_ALPHABET, "B")
    e = SuperPoly.letter(RLL_ALPHABET, "E")
    assert l1[2, 5] == -b
    assert l1[5, 8] == -e


def test_exp_nilpotent_basics():
    z = SuperMatrix.zero(SCALAR_ALPHABET, 3)
    assert exp_nilpotent(z) == SuperMatrix.identity(SCALAR_ALPHABET, 3)
    e13 = SuperMatrix.zero(SCALAR_ALPHABET, 3)
    e13.entries[0][2] = SuperPoly.one(SCALAR_ALPHABET)
    assert exp_nilpotent(e13) == SuperMatrix.identity(SCALAR_ALPHABET, 3) + e13


def test_exp_nilpotent_rejects_non_nilpotent():
    m = SuperMatrix.identity(SCALAR_ALPHABET, 3)
    with pytest.raises(ValueError):
        exp_nilpotent(m)


def test_exp_inverse_property():
    rng = random.Random(13)
    for _ in range(5):
        m = SuperMatrix.zero(SCALAR_ALPHABET, 4)
        for i in range(4):
            for j in range(i + 1, 4):
                m.entries[i][j] = SuperPoly.constant(
                    SCALAR_ALPHABET, rat(rng.randint(-3, 3)) * P)
        prod = exp_nilpotent(m, Scalar.one()) @ exp_nilpotent(m, rat(-1))
        assert prod == SuperMatrix.identity(SCALAR_ALPHABET, 4)


def test_quantum_r_corner():
    r = frt.quantum_r_matrix()
    assert r[1, 9] == SuperPoly.constant(SCALAR_ALPHABET, HALF * P * P)


def test_desuperize_flips_only_doubly_odd_rows():
    r = frt.quantum_r_matrix()
    twisted = desuperize(r)
    assert twisted[5, 5] == -SuperPoly.one(SCALAR_ALPHABET)
    assert twisted[5, 9] == -r[5, 9]
    assert twisted[1, 9] == r[1, 9]
    assert desuperize(twisted) == r


def test_ybe_identity_matrix():
    assert ybe_check(SuperMatrix.identity(SCALAR_ALPHABET, 9))


def test_ybe_desuperized_r():
    assert ybe_check(desuperize(frt.quantum_r_matrix()))


def test_ybe_fails_for_perturbed_r():
    r = frt.quantum_r_matrix()
    bad = SuperMatrix(r.alphabet, [row[:] for row in r.entries])
    bad.entries[0][8] = SuperPoly.constant(SCALAR_ALPHABET, P * P)
    assert not ybe_check(desuperize(bad))


def test_partial_transpose_moves_first_leg():
    t = MatrixTensor(2, {((1, 3), (1, 1)): Scalar.one()})
    m = graded_embed(t)
    mt = partial_transpose_first(m)
    expected = graded_embed(MatrixTensor(2, {((3, 1), (1, 1)): Scalar.one()}))
    assert mt == expected


def test_invert_unipotent():
    r = frt.quantum_r_matrix()
    rinv = invert_unipotent(r)
    one = SuperMatrix.identity(r.alphabet, 9)
    assert rinv @ r == one and r @ rinv == one
    with pytest.raises(ValueError):
        invert_unipotent(SuperMatrix.zero(SCALAR_ALPHABET, 3))


def test_grading_validation():
    t = frt.defining_matrix()
    t.check_grading()
    bad = SuperMatrix.zero(frt.ALPHABET9, 3)
    bad.entries[0][1] = SuperPoly.letter(frt.ALPHABET9, "a")  # even letter, odd slot
    with pytest.raises(ValueError):
        bad.check_grading()


def test_setting_p_zero_gives_identity():
    r = frt.quantum_r_matrix()
    assert r.substitute_parameter(p=0) == SuperMatrix.identity(r.alphabet, 9)
