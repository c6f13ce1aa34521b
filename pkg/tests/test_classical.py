from fractions import Fraction

import pytest

from ospq.scalars import Scalar, rat, P
from ospq.supermatrix import graded_embed
from ospq import classical
from ospq.checks import _r2_target_matrix


def test_bracket_examples():
    assert classical.bracket("H", "Xp") == {"Xp": Fraction(1)}
    assert classical.bracket("Xp", "Vp") == {}
    assert classical.bracket("Vp", "Vm") == {"H": Fraction(-1, 2)}
    # graded antisymmetry on an odd pair: anticommutator is symmetric
    assert classical.bracket("Vm", "Vp") == {"H": Fraction(-1, 2)}
    # ordinary antisymmetry for even pairs
    assert classical.bracket("Xm", "Xp") == {"H": Fraction(-2)}


def test_jacobi_everywhere():
    assert classical.jacobi_holds_everywhere()


def test_rep_satisfies_all_relations():
    assert classical.rep_is_faithful_presentation()


def test_sl2_triple_inside():
    xp, xm, h = classical.REP["Xp"], classical.REP["Xm"], classical.REP["H"]
    assert (xp @ xm) - (xm @ xp) == h.scale(rat(2))


def test_lowering_matrices_derived_uniquely():
    xm, vm = classical.derive_lowering_matrices()
    assert xm == classical.REP["Xm"]
    assert vm == classical.REP["Vm"]


def test_r2_embedding_matches_reference_matrix():
    assert graded_embed(classical.r2().expand()) == _r2_target_matrix()


def test_schouten_triangular():
    assert classical.schouten(classical.r1()).is_zero()
    assert classical.schouten(classical.r2()).is_zero()


def test_schouten_r3_nonzero_but_invariant():
    s3 = classical.schouten(classical.r3(Scalar.one()))
    assert not s3.is_zero()
    assert classical.ad_invariance_check(s3, 3)


def test_schouten_scales_quadratically():
    t = Scalar.var("t")
    assert classical.schouten(classical.r3(t)) == \
        classical.schouten(classical.r3(Scalar.one())).scale(t * t)


def test_parameter_absorbed_by_linearity():
    t = Scalar.var("t")
    lhs = graded_embed(classical.r3(t).expand()).scale(rat(2) * P)
    rhs = graded_embed(classical.r3(Scalar.one()).expand()).scale(rat(2) * P * t)
    assert lhs == rhs


def test_invariant_element():
    assert classical.ad_invariance_check(classical.ad_invariant_element())


def test_h_tensor_h_not_invariant():
    omega = classical.MatrixTensor.from_matrix_legs(
        classical.REP["H"], classical.REP["H"])
    assert not classical.ad_invariance_check(omega)


def test_zero_is_invariant():
    assert classical.ad_invariance_check(classical.MatrixTensor(2))


def test_families_fully_symbolic():
    assert classical.family_coboundary_check(classical.family_one())
    assert classical.family_coboundary_check(classical.family_two())


def test_family_two_specializes_to_r2():
    special = classical.family_two(Scalar.one(), Scalar.zero(), Scalar.zero())
    assert graded_embed(special.expand()) == graded_embed(classical.r2().expand())


def test_odd_probe_not_coboundary_compatible():
    probe = classical.RMatrixExpr([(Scalar.one(), "H", "Vp")])
    s = classical.schouten(probe)
    assert not s.is_zero()
    assert classical.family_coboundary_check(probe) is False


def test_mixed_parity_wedge_rejected():
    expr = classical.RMatrixExpr([(Scalar.one(), "H", "Xp"),
                                  (Scalar.one(), "H", "Vp")])
    with pytest.raises(ValueError):
        expr.parity()
