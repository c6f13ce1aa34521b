"""The orthosymplectic Lie superalgebra osp(1;2), its 3x3 matrix
representation, the antisymmetric r-matrix family, Schouten brackets, and
ad-invariance certificates.

Basis {H, Xp, Xm, Vp, Vm} with grades 0,0,0,1,1.  Brackets are graded: a
commutator unless both arguments are odd, then an anticommutator.  The
Schouten bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] is evaluated in
the 27-dimensional image of the representation through the graded embedding,
which is multiplicative, so graded commutators become matrix commutators.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .scalars import Scalar, rat
from .freealg import SuperPoly, SCALAR_ALPHABET
from .supermatrix import (SuperMatrix, MatrixTensor, graded_embed, INDEX_GRADE)

BASIS = ("H", "Xp", "Xm", "Vp", "Vm")
GRADE = {"H": 0, "Xp": 0, "Xm": 0, "Vp": 1, "Vm": 1}

_half = Fraction(1, 2)

# structure constants: bracket(x, y) = sum_z c * z, stored for x <= y in
# basis order; the rest follows from graded antisymmetry
_TABLE = {
    ("H", "Xp"): {"Xp": Fraction(1)},
    ("H", "Xm"): {"Xm": Fraction(-1)},
    ("H", "Vp"): {"Vp": _half},
    ("H", "Vm"): {"Vm": -_half},
    ("Xp", "Xm"): {"H": Fraction(2)},
    ("Xp", "Vp"): {},
    ("Xp", "Vm"): {"Vp": Fraction(1)},
    ("Xm", "Vp"): {"Vm": Fraction(1)},
    ("Xm", "Vm"): {},
    ("Vp", "Vm"): {"H": -_half},
    ("Vp", "Vp"): {"Xp": _half},
    ("Vm", "Vm"): {"Xm": -_half},
    ("H", "H"): {},
    ("Xp", "Xp"): {},
    ("Xm", "Xm"): {},
}


def bracket(x: str, y: str) -> dict:
    """Graded bracket of two basis elements as {basis: Fraction}."""
    if (x, y) in _TABLE:
        return dict(_TABLE[(x, y)])
    base = _TABLE[(y, x)]
    sign = -1 if (GRADE[x] * GRADE[y]) % 2 == 0 else 1
    return {z: sign * c for z, c in base.items()}


def bracket_linear(u: dict, v: dict) -> dict:
    """Graded bracket extended bilinearly to {basis: Fraction} combinations."""
    out = {}
    for x, cx in u.items():
        for y, cy in v.items():
            for z, c in bracket(x, y).items():
                out[z] = out.get(z, Fraction(0)) + cx * cy * c
    return {z: c for z, c in out.items() if c}


def jacobi_defect(x: str, y: str, z: str) -> dict:
    """Graded Jacobi combination; zero iff the identity holds on (x,y,z)."""
    gx, gy, gz = GRADE[x], GRADE[y], GRADE[z]
    terms = [
        ((-1) ** (gx * gz), x, bracket(y, z)),
        ((-1) ** (gy * gx), y, bracket(z, x)),
        ((-1) ** (gz * gy), z, bracket(x, y)),
    ]
    out = {}
    for sign, a, inner in terms:
        for w, c in bracket_linear({a: Fraction(1)}, inner).items():
            out[w] = out.get(w, Fraction(0)) + sign * c
    return {w: c for w, c in out.items() if c}


def jacobi_holds_everywhere() -> bool:
    """Exhaustive graded Jacobi identity over all 125 basis triples."""
    return all(not jacobi_defect(x, y, z)
               for x in BASIS for y in BASIS for z in BASIS)


# ----------------------------------------------------------------------
# Matrix representation.
# ----------------------------------------------------------------------

def _mat(rows) -> SuperMatrix:
    return SuperMatrix.from_scalars(
        [[rat(c) for c in row] for row in rows])


REP = {
    "H": _mat([[_half, 0, 0], [0, 0, 0], [0, 0, -_half]]),
    "Xp": _mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]]),
    "Vp": _mat([[0, _half, 0], [0, 0, _half], [0, 0, 0]]),
    # derived below; frozen values, re-derived by derive_lowering_matrices()
    "Xm": _mat([[0, 0, 0], [0, 0, 0], [1, 0, 0]]),
    "Vm": _mat([[0, 0, 0], [-_half, 0, 0], [0, _half, 0]]),
}


def rep(name: str) -> SuperMatrix:
    return REP[name]


def graded_matrix_bracket(a: SuperMatrix, b: SuperMatrix, ga: int, gb: int) -> SuperMatrix:
    ab = a @ b
    ba = b @ a
    return ab + ba if (ga and gb) else ab - ba


def rep_defects():
    """All 15 defining relations evaluated on the representation matrices."""
    out = []
    seen = set()
    for x in BASIS:
        for y in BASIS:
            if (y, x) in seen:
                continue
            seen.add((x, y))
            want = SuperMatrix.zero(SCALAR_ALPHABET, 3)
            for z, c in bracket(x, y).items():
                want = want + REP[z].scale(rat(c))
            got = graded_matrix_bracket(REP[x], REP[y], GRADE[x], GRADE[y])
            out.append(((x, y), got - want))
    return out


def rep_is_faithful_presentation() -> bool:
    return all(d.is_zero() for _, d in rep_defects())


def derive_lowering_matrices(grid=None):
    """Re-derive Xm and Vm by constrained search and return them.

    The slots are forced by the grading rule and the H-weight of each slot;
    the coefficients are then searched over a small rational grid and the
    full 15-relation system is checked.  Exactly one solution must survive.
    """
    if grid is None:
        grid = [Fraction(n, d) for n in (-2, -1, 0, 1, 2) for d in (1, 2, 4)]
        grid = sorted(set(grid))
    h = REP["H"]
    hdiag = [h[i, i].coefficient(()).as_rational() for i in (1, 2, 3)]

    def slots(weight, parity):
        out = []
        for i in range(1, 4):
            for j in range(1, 4):
                if (INDEX_GRADE[i - 1] + INDEX_GRADE[j - 1]) % 2 != parity:
                    continue
                if hdiag[i - 1] - hdiag[j - 1] == weight:
                    out.append((i, j))
        return out

    xm_slots = slots(Fraction(-1), 0)
    vm_slots = slots(-_half, 1)
    solutions = []
    for xm_coeffs in product(grid, repeat=len(xm_slots)):
        if all(c == 0 for c in xm_coeffs):
            continue
        xm = SuperMatrix.zero(SCALAR_ALPHABET, 3)
        for (i, j), c in zip(xm_slots, xm_coeffs):
            xm.entries[i - 1][j - 1] = SuperPoly.constant(SCALAR_ALPHABET, rat(c))
        for vm_coeffs in product(grid, repeat=len(vm_slots)):
            if all(c == 0 for c in vm_coeffs):
                continue
            vm = SuperMatrix.zero(SCALAR_ALPHABET, 3)
            for (i, j), c in zip(vm_slots, vm_coeffs):
                vm.entries[i - 1][j - 1] = SuperPoly.constant(SCALAR_ALPHABET, rat(c))
            cand = dict(REP)
            cand["Xm"] = xm
            cand["Vm"] = vm
            if _candidate_ok(cand):
                solutions.append((xm, vm))
    if len(solutions) != 1:
        raise ValueError(f"expected a unique solution, found {len(solutions)}")
    return solutions[0]


def _candidate_ok(cand) -> bool:
    seen = set()
    for x in BASIS:
        for y in BASIS:
            if (y, x) in seen:
                continue
            seen.add((x, y))
            want = SuperMatrix.zero(SCALAR_ALPHABET, 3)
            for z, c in bracket(x, y).items():
                want = want + cand[z].scale(rat(c))
            got = graded_matrix_bracket(cand[x], cand[y], GRADE[x], GRADE[y])
            if not (got - want).is_zero():
                return False
    return True


# ----------------------------------------------------------------------
# r-matrices as wedge combinations, expanded through the representation.
# ----------------------------------------------------------------------

class RMatrixExpr:
    """Formal Scalar combination of wedges x ^ y of basis elements.

    x ^ y = x ox y - (-1)^{|x||y|} y ox x, so odd self-wedges double:
    v ^ v = 2 (v ox v).
    """

    def __init__(self, terms):
        # terms: list of (Scalar coeff, x name, y name)
        self.terms = [(c, x, y) for c, x, y in terms if not c.is_zero]

    def parity(self) -> int:
        parities = {(GRADE[x] + GRADE[y]) % 2 for _, x, y in self.terms}
        if len(parities) > 1:
            raise ValueError("graded-mixed r-matrix expression")
        return parities.pop() if parities else 0

    def expand(self) -> MatrixTensor:
        out = MatrixTensor(2)
        for c, x, y in self.terms:
            xy = MatrixTensor.from_matrix_legs(REP[x], REP[y]).scale(c)
            sign = rat(-((-1) ** (GRADE[x] * GRADE[y])))
            yx = MatrixTensor.from_matrix_legs(REP[y], REP[x]).scale(c * sign)
            out = out + xy + yx
        return out

    def scale(self, coeff) -> "RMatrixExpr":
        return RMatrixExpr([(c * coeff, x, y) for c, x, y in self.terms])

    def __add__(self, other):
        return RMatrixExpr(self.terms + other.terms)


def r1() -> RMatrixExpr:
    return RMatrixExpr([(Scalar.one(), "H", "Xp")])


def r2() -> RMatrixExpr:
    return RMatrixExpr([(Scalar.one(), "H", "Xp"), (rat(-1), "Vp", "Vp")])


def r3(t=None) -> RMatrixExpr:
    if t is None:
        t = Scalar.var("t")
    return RMatrixExpr([(t, "H", "Xp"), (-t, "Vp", "Vp"),
                        (t, "H", "Xm"), (-t, "Vm", "Vm")])


def family_one(x=None, y=None) -> RMatrixExpr:
    """Two-parameter family x^2 H^Xp + xy Xp^Xm + y^2 H^Xm."""
    x = Scalar.var("x") if x is None else x
    y = Scalar.var("y") if y is None else y
    return RMatrixExpr([(x * x, "H", "Xp"), (x * y, "Xp", "Xm"), (y * y, "H", "Xm")])


def family_two(x=None, y=None, z=None) -> RMatrixExpr:
    """Three-parameter family mixing both root directions and the odd wedges."""
    x = Scalar.var("x") if x is None else x
    y = Scalar.var("y") if y is None else y
    z = Scalar.var("z") if z is None else z
    return RMatrixExpr([
        (x, "H", "Xp"), (-x, "Vp", "Vp"),
        (y, "Xp", "Xm"), (rat(2) * y, "Vp", "Vm"),
        (z, "H", "Xm"), (-z, "Vm", "Vm"),
    ])


def ad_invariant_element(t=None) -> MatrixTensor:
    """The symmetric invariant 2H ox H + Xp ox Xm + Xm ox Xp + 2(Vp ox Vm - Vm ox Vp)."""
    if t is None:
        t = Scalar.var("t")
    pieces = [
        (rat(2), "H", "H"), (Scalar.one(), "Xp", "Xm"), (Scalar.one(), "Xm", "Xp"),
        (rat(2), "Vp", "Vm"), (rat(-2), "Vm", "Vp"),
    ]
    out = MatrixTensor(2)
    for c, x, y in pieces:
        out = out + MatrixTensor.from_matrix_legs(REP[x], REP[y]).scale(c * t)
    return out


def _legs_of_pair(tensor: MatrixTensor):
    """r12, r13, r23 of an arity-2 abstract tensor, as arity-3 tensors."""
    r12 = tensor.leg_identity_inserted(2)
    r13 = tensor.leg_identity_inserted(1)
    r23 = tensor.leg_identity_inserted(0)
    return r12, r13, r23


def schouten(expr: RMatrixExpr) -> SuperMatrix:
    """[[r,r]] evaluated in the representation as an exact 27x27 matrix."""
    parity = expr.parity()
    tensor = expr.expand()
    legs = [graded_embed(t) for t in _legs_of_pair(tensor)]
    sign = rat((-1) ** parity)

    def gcomm(a, b):
        return (a @ b) - (b @ a).scale(sign)

    r12, r13, r23 = legs
    return gcomm(r12, r13) + gcomm(r12, r23) + gcomm(r13, r23)


def coproduct_embedding(name: str, arity: int) -> SuperMatrix:
    """sum_k 1 ox .. ox x ox .. ox 1 (x at slot k), graded-embedded."""
    total = SuperMatrix.zero(SCALAR_ALPHABET, 3 ** arity)
    base = MatrixTensor.from_matrix_legs(REP[name])
    for pos in range(arity):
        t = base
        for _ in range(pos):
            t = t.leg_identity_inserted(0)
        while t.arity < arity:
            t = t.leg_identity_inserted(t.arity)
        total = total + graded_embed(t)
    return total


def ad_invariance_check(omega, arity: int = None) -> bool:
    """Does the graded adjoint action of every basis element kill omega?

    ``omega`` may be a MatrixTensor (it is embedded first) or an already
    embedded SuperMatrix of dimension 9 or 27.  Since omega is even here, the
    action is the plain matrix commutator with the embedded coproduct.
    """
    if isinstance(omega, MatrixTensor):
        arity = omega.arity
        omega = graded_embed(omega)
    elif arity is None:
        arity = 2 if omega.n == 9 else 3
    for name in BASIS:
        dx = coproduct_embedding(name, arity)
        comm = (dx @ omega) - (omega @ dx)
        if not comm.is_zero():
            return False
    return True


def family_coboundary_check(expr: RMatrixExpr) -> bool:
    """Is [[r,r]] ad-invariant (with fully symbolic coefficients)?"""
    return ad_invariance_check(schouten(expr), 3)
