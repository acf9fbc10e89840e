from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfrb import fixtures as F
from hopfrb.actions import trivial_action, trivial_coaction
from hopfrb.hopf import iterated_comult
from hopfrb.rota_baxter import (
    RBKindError,
    RBOperatorCandidate,
    check_cor24_conditions,
    check_cor25_conditions,
    check_cor34_conditions,
    check_cor35_conditions,
    check_cor36_conditions,
    check_internal_2c2d,
    check_internal_3b,
    check_prop_32,
    check_thm22_conditions,
    check_thm33_conditions,
    classical_lift,
    is_rb_co_operator,
    is_rb_operator,
    lift_rb_co_operator,
    lift_rb_co_operator_cor34,
    lift_rb_operator,
    lift_rb_operator_cor24,
    lift_rb_operator_cor25,
)
from hopfrb.search import candidate_maps
from hopfrb.smash import PreconditionError, lr_smash_coproduct, lr_smash_product
from hopfrb.tensor import LinearOperator, SparseTensor

from oracles import C2_INV, example_lift, example_right_action

OPERATOR_CARRIERS = ["kC1", "kC2", "kC3", "kS3", "kdualC1", "kdualC2", "kdualC3"]
CO_CARRIERS = ["kdualC1", "kdualC2", "kdualC3", "kdualS3", "kC1", "kC2", "kC3"]


def _alg(stem):
    return F.algebra(f"{stem}.alg.json")


def op(H, B):
    return RBOperatorCandidate(H, B, "operator")


def coop(H, B):
    return RBOperatorCandidate(H, B, "co-operator")


# -- candidates -------------------------------------------------------------------

def test_candidate_kind_gates(kS3, dS3):
    with pytest.raises(RBKindError):
        coop(kS3, kS3.identity_map())
    with pytest.raises(RBKindError):
        op(dS3, dS3.identity_map())
    with pytest.raises(RBKindError):
        RBOperatorCandidate(kS3, kS3.identity_map(), "weight-2")
    with pytest.raises(ValueError):
        op(kS3, LinearOperator.identity(3))


def test_candidate_needs_coalgebra_map(kC3):
    bad = LinearOperator(3, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (2, 2): 1})
    rep = is_rb_operator(op(kC3, bad))
    assert not rep["coalgebra-map"].passed


# -- the operator identity -------------------------------------------------------------

def test_counit_operator_on_s3(kS3):
    assert is_rb_operator(op(kS3, kS3.counit_projection())).passed


def test_antipode_operator_on_s3(kS3):
    rep = is_rb_operator(op(kS3, kS3.antipode))
    assert rep.passed
    assert rep["rota-baxter"].cases == 36


def test_identity_on_s3_fails_on_noncommuting_pair(kS3):
    rep = is_rb_operator(op(kS3, kS3.identity_map()))
    assert rep.failed_labels() == ["rota-baxter"]
    x, y = rep["rota-baxter"].witness.inputs
    gx, gy = kS3.e(x), kS3.e(y)
    assert kS3.mul(gx, gy) != kS3.mul(gy, gx)
    # identity gives gh on the left and g²hg⁻¹ on the right
    w = rep["rota-baxter"].witness
    assert w.lhs == kS3.mul(gx, gy)
    assert w.rhs == kS3.mul(kS3.mul(kS3.mul(gx, gx), gy), kS3.S(gx))


@pytest.mark.parametrize("stem", OPERATOR_CARRIERS)
def test_counit_projection_is_operator_everywhere(stem):
    H = _alg(stem)
    assert is_rb_operator(op(H, H.counit_projection())).passed


@pytest.mark.parametrize("stem", ["kC1", "kC2", "kC3", "kS3"])
def test_antipode_is_operator_on_group_algebras(stem):
    H = _alg(stem)
    assert is_rb_operator(op(H, H.antipode)).passed


@pytest.mark.parametrize("stem", CO_CARRIERS)
def test_counit_projection_is_co_operator_everywhere(stem):
    H = _alg(stem)
    assert is_rb_co_operator(coop(H, H.counit_projection())).passed


def test_antipode_co_operator_on_dual_c2(dC2):
    assert dC2.antipode == dC2.identity_map()
    assert is_rb_co_operator(coop(dC2, dC2.antipode)).passed


def test_transposed_antipode_is_co_operator(kC3, dC3):
    assert is_rb_co_operator(coop(dC3, kC3.antipode.transpose())).passed


def _rb_sides(H, B, x, y):
    lhs = H.mul(B.apply(x), B.apply(y))
    rhs = SparseTensor((H.dim,))
    for (i, j, k), c in iterated_comult(H, x, 3).items():
        t = H.mul(H.mul(H.mul(H.e(i), B.column(j)), y), H.S(B.column(k)))
        rhs = rhs + B.apply(t).scale(c)
    return lhs, rhs


vec3 = st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)), min_size=3, max_size=3)


@settings(max_examples=30, deadline=None)
@given(vec3, vec3)
def test_identity_holds_on_arbitrary_elements(xs, ys):
    H = _alg("kC3")
    x, y = SparseTensor.from_dense(xs), SparseTensor.from_dense(ys)
    for images, B in candidate_maps(H):
        if is_rb_operator(op(H, B)).passed:
            lhs, rhs = _rb_sides(H, B, x, y)
            assert lhs == rhs, images


# -- counit preservation -------------------------------------------------------------

@pytest.mark.parametrize("stem", ["kdualC2", "kdualC3"])
def test_every_co_operator_preserves_counit(stem):
    C = _alg(stem)
    found = 0
    for _, B in candidate_maps(C):
        cand = coop(C, B)
        if is_rb_co_operator(cand).passed:
            found += 1
            assert check_prop_32(cand).passed
    assert found > 0


def test_counit_violation_implies_not_co_operator(dC2):
    for images, B in candidate_maps(dC2):
        cand = coop(dC2, B)
        if not check_prop_32(cand).passed:
            assert images[0] != 0
            assert not is_rb_co_operator(cand).passed


def test_counit_projection_preserves_counit(dC3):
    assert check_prop_32(coop(dC3, dC3.counit_projection())).passed


# -- smash-product lifts -------------------------------------------------------------------

def _basis(K, label):
    return K.e(K.index(label))


def test_counit_r_with_antipode_b(ex_action, maps):
    L = lift_rb_operator(maps["R-counit-c3"], ex_action.H.antipode, ex_action)
    K = lr_smash_product(ex_action).hopf
    for a in ("e_h", "e_h^2"):
        assert L.apply(_basis(K, f"{a}⊗e_g")) == _basis(K, "e_1⊗e_g")
    assert is_rb_operator(op(K, L)).passed


def test_swap_r_with_antipode_b(ex_action, maps):
    L = lift_rb_operator(maps["R-swap-c3"], ex_action.H.antipode, ex_action)
    K = lr_smash_product(ex_action).hopf
    for a in ("e_h", "e_h^2"):
        assert L.apply(_basis(K, f"{a}⊗e_g")) == _basis(K, f"{a}⊗e_g")
    assert L.apply(_basis(K, "e_h⊗e_1")) == _basis(K, "e_h^2⊗e_1")
    assert L != K.identity_map()
    assert is_rb_operator(op(K, L)).passed


def test_all_counit_lift(ex_action, maps):
    L = lift_rb_operator(maps["R-counit-c3"], maps["B-counit-c2"], ex_action)
    K = lr_smash_product(ex_action).hopf
    assert L == K.counit_projection()


@pytest.mark.parametrize("B_images", [(0, 0), (0, 1)])
def test_lift_against_oracle(ex_action, B_images):
    P = lr_smash_product(ex_action)
    B = LinearOperator.from_function_map(list(B_images))
    for images, R in candidate_maps(ex_action.A):
        L = lift_rb_operator(R, B, ex_action, check=False)
        for a, h in product(range(3), range(2)):
            c, k = example_lift(images, B_images, a, h)
            assert L.column(P.pair(a, h)) == P.hopf.e(P.pair(c, k))


def test_antipode_lift_shortcut_agrees(ex_action, left_action, maps):
    for act in (ex_action, left_action):
        for name in ("R-counit-c3", "R-swap-c3", "R-identity-c3"):
            R = maps[name]
            assert lift_rb_operator_cor24(R, act, check=False) == lift_rb_operator(R, act.H.antipode, act, check=False)


def test_antipode_r_lift_agrees(ex_action, maps):
    for name in ("B-antipode-c2", "B-counit-c2"):
        B = maps[name]
        assert lift_rb_operator_cor25(B, ex_action) == lift_rb_operator(ex_action.A.antipode, B, ex_action, check=False)


def test_classical_lift_under_trivial_right_action(left_action, maps):
    assert left_action.is_right_trivial()
    for _, R in candidate_maps(left_action.A):
        for name in ("B-antipode-c2", "B-counit-c2"):
            B = maps[name]
            assert classical_lift(R, B, left_action) == lift_rb_operator(R, B, left_action, check=False)


def test_lift_refuses_non_rb_b(ex_action):
    # identity on k[C2] is RB, so break coalgebra-ness instead
    bad = LinearOperator(2, {(0, 0): 1, (0, 1): 1, (1, 1): 1})
    with pytest.raises(PreconditionError):
        lift_rb_operator(ex_action.A.identity_map(), bad, ex_action)


# -- smash-product conditions ------------------------------------------------------------

def test_swap_conditions_pass(ex_action, maps):
    R, S = maps["R-swap-c3"], ex_action.H.antipode
    rep = check_thm22_conditions(R, S, ex_action)
    assert rep.labels() == ["R-coalgebra-map", "R-rota-baxter", "2a", "2b"]
    assert rep.passed
    assert check_internal_2c2d(R, S, ex_action).passed
    assert check_cor24_conditions(R, ex_action).passed


def test_trivial_everything_conditions(trivial_act, maps):
    R, B = maps["R-counit-c3"], maps["B-counit-c2"]
    assert check_thm22_conditions(R, B, trivial_act).passed
    assert check_internal_2c2d(R, B, trivial_act).passed
    assert check_cor24_conditions(R, trivial_act).passed


def test_identity_r_agrees_with_lift(ex_action, maps):
    R, S = maps["R-identity-c3"], ex_action.H.antipode
    rep = check_thm22_conditions(R, S, ex_action)
    assert rep.failed_labels() == ["2a"]
    K = lr_smash_product(ex_action).hopf
    assert not is_rb_operator(op(K, lift_rb_operator(R, S, ex_action))).passed
    assert check_cor24_conditions(R, ex_action).failed_labels() == ["COR24-A"]


def test_2c_fails_whenever_2a_fails(ex_action, left_action):
    for act in (ex_action, left_action):
        S = act.H.antipode
        for _, R in candidate_maps(act.A):
            if not check_thm22_conditions(R, S, act)["2a"].passed:
                assert not check_internal_2c2d(R, S, act)["2c"].passed


def test_cor25_with_antipode_b(ex_action, left_action, maps):
    for act in (ex_action, left_action):
        assert check_cor25_conditions(maps["B-antipode-c2"], act).passed


def test_cor25_with_counit_b_needs_trivial_left_action(ex_action, left_action, maps):
    B = maps["B-counit-c2"]
    assert check_cor25_conditions(B, ex_action).passed
    rep = check_cor25_conditions(B, left_action)
    assert not rep["COR25-B"].passed
    h, a = rep["COR25-B"].witness.inputs
    assert left_action.H.basis[h] == "e_g" and left_action.A.basis[a] == "e_h"
    assert rep["iff-agreement"].passed


def test_conditions_need_cocommutative_carrier(kS3, dS3):
    act = F.action("s3-grading.action.json")
    with pytest.raises(RBKindError):
        check_thm22_conditions(kS3.identity_map(), dS3.identity_map(), act)


# -- smash-coproduct lifts ----------------------------------------------------------------

def _colift_expected(R, B, x, h):
    a = example_right_action(x, C2_INV(h))
    return R.column(a).outer(B.column(h)).flatten()


@pytest.mark.parametrize("R_name", ["R-identity-dualc3", "R-swap-dualc3", "R-counit-dualc3"])
@pytest.mark.parametrize("B_name", ["B-antipode-dualc2", "B-identity-dualc2", "B-counit-dualc2"])
def test_colift_against_oracle(ex_coaction, maps, R_name, B_name):
    R, B = maps[R_name], maps[B_name]
    L = lift_rb_co_operator(R, B, ex_coaction, check=False)
    P = lr_smash_coproduct(ex_coaction)
    for x, h in product(range(3), range(2)):
        assert L.column(P.pair(x, h)) == _colift_expected(R, B, x, h)


def test_colift_trivial_coaction(trivial_coact, maps):
    from hopfrb.tensor import kron

    for R_name in ("R-identity-dualc3", "R-swap-dualc3", "R-counit-dualc3"):
        R, B = maps[R_name], maps["B-antipode-dualc2"]
        assert lift_rb_co_operator(R, B, trivial_coact, check=False) == kron(R, B)


def test_colift_swap_is_co_operator(ex_coaction, maps):
    K = lr_smash_coproduct(ex_coaction).hopf
    L = lift_rb_co_operator(maps["R-swap-dualc3"], ex_coaction.H.antipode, ex_coaction)
    assert is_rb_co_operator(coop(K, L)).passed
    assert L != K.identity_map()


def test_colift_identity_is_not_co_operator(ex_coaction, maps):
    K = lr_smash_coproduct(ex_coaction).hopf
    L = lift_rb_co_operator(maps["R-identity-dualc3"], ex_coaction.H.antipode, ex_coaction)
    assert not is_rb_co_operator(coop(K, L)).passed


def test_left_only_lift_shortcut(left_coaction, maps):
    for R_name in ("R-identity-dualc3", "R-swap-dualc3", "R-counit-dualc3"):
        for B_name in ("B-antipode-dualc2", "B-identity-dualc2", "B-counit-dualc2"):
            R, B = maps[R_name], maps[B_name]
            assert lift_rb_co_operator_cor34(R, B, left_coaction) == lift_rb_co_operator(R, B, left_coaction, check=False)


# -- smash-coproduct conditions ---------------------------------------------------------------

def test_thm33_labels_and_swap(ex_coaction, maps):
    rep = check_thm33_conditions(maps["R-swap-dualc3"], ex_coaction.H.antipode, ex_coaction)
    assert rep.labels() == ["R-algebra-map", "R-rota-baxter-co", "3c", "3d"]
    assert rep.passed
    assert check_internal_3b(maps["R-swap-dualc3"], ex_coaction.H.antipode, ex_coaction).passed


def test_trivial_coaction_conditions_reduce_to_co_identity(trivial_coact, maps):
    C = trivial_coact.C
    for _, R in candidate_maps(C):
        if is_rb_co_operator(coop(C, R)).passed:
            rep = check_thm33_conditions(R, maps["B-antipode-dualc2"], trivial_coact)
            assert rep.passed
            assert check_internal_3b(R, maps["B-antipode-dualc2"], trivial_coact).passed


def test_counit_r_with_example_coactions(ex_coaction, maps):
    assert check_thm33_conditions(maps["R-counit-dualc3"], ex_coaction.H.antipode, ex_coaction).passed


@pytest.mark.parametrize("stem", ["c3-c2-dual", "c3-c2-dual-left", "c3-c2-trivial"])
def test_3b_implications(stem, maps):
    co = F.coaction(f"{stem}.coaction.json")
    for B_name in ("B-antipode-dualc2", "B-counit-dualc2"):
        B = maps[B_name]
        for _, R in candidate_maps(co.C):
            cond = check_thm33_conditions(R, B, co)
            b3 = check_internal_3b(R, B, co)["3b"].passed
            if cond.passed:
                assert b3
            if not cond["3d"].passed:
                assert not b3


def test_cor34_requires_trivial_right_coaction(ex_coaction, maps):
    with pytest.raises(PreconditionError):
        check_cor34_conditions(maps["R-identity-dualc3"], maps["B-antipode-dualc2"], ex_coaction)


def test_cor34_identity_r(left_coaction, maps):
    rep = check_cor34_conditions(maps["R-identity-dualc3"], maps["B-antipode-dualc2"], left_coaction)
    assert rep.labels() == ["R-algebra-map", "R-rota-baxter-co", "3f", "3g", "iff-agreement"]
    assert rep.failed_labels() == ["3f"]
    assert rep["iff-agreement"].passed


def test_cor34_swap_r(left_coaction, maps):
    assert check_cor34_conditions(maps["R-swap-dualc3"], maps["B-antipode-dualc2"], left_coaction).passed


def test_cor35_with_antipode_b(ex_coaction, left_coaction, maps):
    for co in (ex_coaction, left_coaction):
        rep = check_cor35_conditions(maps["B-antipode-dualc2"], co)
        assert rep.passed


def test_cor35_3i_value(ex_coaction):
    # c₍₋₁₎₁ S(c₍₋₁₎₂) ⊗ c₍₀₎ for c = q_h equals 1 ⊗ q_h
    H, C = ex_coaction.H, ex_coaction.C
    q = C.e(C.index("q_h"))
    total = SparseTensor((H.dim, C.dim))
    for (h, c), x in ex_coaction.coact_left(q).items():
        for (i, j), y in H.delta(H.e(h)).items():
            total = total + H.mul(H.e(i), H.S(H.e(j))).outer(C.e(c)).scale(x * y)
    assert total == H.one.outer(q)


def test_cor35_counit_b_fails_on_left_variant(left_coaction, maps):
    rep = check_cor35_conditions(maps["B-counit-dualc2"], left_coaction)
    assert set(rep.failed_labels()) == {"3h", "3i"}
    assert rep["iff-agreement"].passed


def test_cor36_swap_passes(ex_coaction, maps):
    rep = check_cor36_conditions(maps["R-swap-dualc3"], ex_coaction)
    assert rep.passed
    C, R = ex_coaction.C, maps["R-swap-dualc3"]
    q = C.e(C.index("q_h"))
    lhs = ex_coaction.coact_right(R.apply(q))
    rhs = SparseTensor((C.dim, ex_coaction.H.dim))
    for (c, h), x in ex_coaction.coact_right(q).items():
        rhs = rhs + R.column(c).outer(ex_coaction.H.e(h)).scale(x)
    assert lhs == rhs


def test_cor36_identity_fails(ex_coaction, maps):
    rep = check_cor36_conditions(maps["R-identity-dualc3"], ex_coaction)
    assert rep.failed_labels() == ["3j"]
    assert rep["iff-agreement"].passed


def test_conditions_need_commutative_carrier(kS3, dS3):
    co = F.coaction("s3-diagonal.coaction.json")
    with pytest.raises(RBKindError):
        check_thm33_conditions(dS3.identity_map(), kS3.identity_map(), co)


def test_trivial_structures_with_trivial_maps(kC3, kC2, dC3, dC2):
    act = trivial_action(kC2, kC3)
    assert check_thm22_conditions(kC3.counit_projection(), kC2.counit_projection(), act).passed
    co = trivial_coaction(dC2, dC3)
    assert check_thm33_conditions(dC3.counit_projection(), dC2.counit_projection(), co).passed
