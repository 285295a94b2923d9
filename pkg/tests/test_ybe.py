"""Equation tensors, invariance, operator characterizations and search."""

import pytest

from prepoisson.algebra import check_structure, mul
from prepoisson.exact import (
    permute3,
    t2_eq,
    t3_eq,
    t3_is_zero,
    t3_neg,
    transpose,
    zeros2,
)
from prepoisson.reps import regular_rep
from prepoisson.ybe import (
    OperatorSpec,
    RMatrix,
    check_invariance,
    check_relative_rb,
    dual_products_from_r,
    eval_ybe,
    is_invariant,
    is_solution,
    lift_operator,
    operator_characterization,
    search_ybe,
    ya1_items,
)

from conftest import grids


def test_zero_tensor_is_a_solution(ae1):
    ev = eval_ybe(ae1, RMatrix(ae1, zeros2(3)))
    for key in ("D", "S", "D1", "D2", "D3", "S1"):
        assert t3_is_zero(ev[key])
    assert ev["is_solution"] and ev["is_symmetric"] and ev["is_coherent"]


def test_single_entry_solutions(ae, ae1):
    r = zeros2(2)
    r[0][0] = 1
    assert is_solution(ae, r)
    r = zeros2(3)
    r[2][2] = 1
    assert is_solution(ae1, r)


def test_tensor_variant_permutation_relations(ae, ae1):
    # for symmetric r the variant tensors are slot permutations of the
    # primary ones: sigma_13 S = S1, sigma_23 D = -D1, the 3-cycle D = D2
    for alg in (ae, ae1):
        for r in grids(alg.dim):
            rm = RMatrix(alg, r)
            if not rm.is_symmetric:
                continue
            ev = eval_ybe(alg, rm)
            assert t3_eq(permute3(ev["S"], "13"), ev["S1"])
            assert t3_eq(permute3(ev["D"], "23"), t3_neg(ev["D1"]))
            assert t3_eq(permute3(ev["D"], "132"), ev["D2"])


def test_item_level_operator_equivalences(ae):
    # each variant tensor vanishes exactly when its operator identity holds
    for r in grids(2):
        rm = RMatrix(ae, r)
        if not rm.is_symmetric:
            continue
        for tensor_flag, op_flag in ya1_items(ae, rm).values():
            assert tensor_flag == op_flag


def test_operator_characterization_agrees_with_tensors(ae, ae1):
    for alg in (ae, ae1):
        for r in grids(alg.dim):
            rm = RMatrix(alg, r)
            if not rm.is_symmetric:
                continue
            # the internal contract raises on any disagreement
            chars = operator_characterization(alg, rm)
            assert chars["consistency"]
            assert chars["poisson_O"] == chars["npp_O"] == is_solution(alg, r)


def test_invariance_audit_consistency(ae):
    for r in grids(2):
        report = check_invariance(ae, r)
        assert report.ok == is_invariant(ae, r)


def test_dual_products_agree_with_comultiplication_dual(ae):
    # the operator-form dual products of r must coincide with the algebra
    # dual to the comultiplications induced by r
    from prepoisson.bialgebra import cobound, dual_algebra

    for r in grids(2):
        general = dual_products_from_r(ae, r, "general")
        via_ct = dual_algebra(cobound(ae, RMatrix(ae, r)))
        for op in ("succ", "prec", "ast"):
            assert general.cube(op) == via_ct.cube(op)


def test_search_finds_known_solutions(ae1):
    hits = search_ybe(ae1, (-1, 0, 1), symmetric_only=True)
    found = set()
    for rm in hits:
        found.add(tuple(tuple(row) for row in rm.r))
    target = zeros2(3)
    target[2][2] = 1
    assert tuple(tuple(row) for row in target) in found
    assert len(hits) == 27


def test_search_budget_guard(ae1):
    with pytest.raises(ValueError):
        search_ybe(ae1, (-1, 0, 1), symmetric_only=False, budget=10)


def test_relative_rb_weight_identities(ae):
    rep = regular_rep(ae)
    n = ae.dim
    zero = [[0] * n for _ in range(n)]
    assert check_relative_rb(OperatorSpec(ae, rep, zero, weight=0,
                                          v_products=ae)).ok
    neg_ident = [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
    assert check_relative_rb(OperatorSpec(ae, rep, neg_ident, weight=1,
                                          v_products=ae)).ok


def test_operator_example_and_lift(ae):
    # T(e1) = e2, T(e2) = 0 intertwines the regular action
    T = [[0, 0], [1, 0]]
    assert check_relative_rb(OperatorSpec(ae, regular_rep(ae), T)).ok
    ext, rm, report = lift_operator(ae, regular_rep(ae), T)
    assert report.ok
    assert ext.dim == 4
    assert check_structure(ext, "coherent").ok
    assert rm.is_symmetric
    assert t2_eq(rm.r, transpose(rm.r))
    # the lifted tensor solves the equations exactly when T intertwines
    assert is_solution(ext, rm.r)
    chars = operator_characterization(ext, rm)
    assert chars["npp_O"] and chars["poisson_O"]


def test_lift_of_non_operator_is_not_a_solution(ae):
    T = [[1, 0], [0, 0]]
    assert not check_relative_rb(OperatorSpec(ae, regular_rep(ae), T)).ok
    ext, rm, report = lift_operator(ae, regular_rep(ae), T)
    assert not is_solution(ext, rm.r)
