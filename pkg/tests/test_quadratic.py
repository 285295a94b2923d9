"""Skew forms, symplectic splittings, phase spaces and Rota-Baxter data."""

import pytest

from prepoisson.algebra import check_structure, subadjacent
from prepoisson.exact import (
    identity_mat,
    mat_eq,
    mat_neg,
    mat_scale,
    mat_sub,
    t2_eq,
    transpose,
)
from prepoisson.ybe import RMatrix, is_invariant, is_solution
from prepoisson.bialgebra import classify_r, cobound, double
from prepoisson.quadratic import (
    RBSpec,
    SkewForm,
    check_form,
    check_manin,
    check_p_identities,
    check_quadratic_rb,
    complement,
    fact_to_rb,
    npp_from_symplectic,
    phase_space,
    r_omega,
    rb_to_fact,
)

from conftest import grids


def canonical_pairing_form(n):
    omega = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        omega[i][n + i] = -1
        omega[n + i][i] = 1
    return SkewForm(omega)


def sample_double(ae):
    ct = cobound(ae, RMatrix(ae, [[1, 0], [0, 0]]))
    return double(ae, ct)


def test_skew_form_validation():
    with pytest.raises(ValueError):
        SkewForm([[0, 1], [1, 0]])  # not skew
    with pytest.raises(ValueError):
        SkewForm([[0, 0], [0, 0]])  # degenerate
    form = SkewForm([[0, 2], [-2, 0]])
    assert form.eval([1, 0], [0, 1]) == 2
    assert form.eval([0, 1], [1, 0]) == -2


def test_tensor_of_a_form_inverts_the_pairing_map(ae_form):
    # the pairing map of the form tensor is the inverse of the sharp map
    from prepoisson.exact import mat_mul

    t_map = transpose(ae_form.r_omega)
    assert mat_mul(t_map, ae_form.omega_sharp) == identity_mat(2)


def test_example_form_is_quadratic(ae, ae_form):
    assert check_form(ae, ae_form, "quadratic-npp").ok
    assert check_form(ae, ae_form, "symplectic-poisson").ok


def test_form_tensor_invariance_biconditional(ae, ae_form):
    r, report = r_omega(ae_form, ae)
    assert report.ok
    assert t2_eq(r, mat_neg(transpose(r)))  # skew
    assert is_invariant(ae, r)


def test_perturbed_form_fails_matching_the_tensor(ae):
    # scale one block of the canonical pairing on the 4-dim phase space so
    # the form is still skew and nondegenerate but no longer invariant
    pair, form = phase_space(ae)
    alg = npp_from_symplectic(pair, form)
    omega = [row[:] for row in form.omega]
    omega[0][2] = 2
    omega[2][0] = -2
    bad = SkewForm(omega)
    quad = check_form(alg, bad, "quadratic-npp")
    r, report = r_omega(bad, alg)
    assert not quad.ok
    assert not is_invariant(alg, r)
    assert report.ok  # the biconditional itself still holds


def test_phase_space_is_symplectic_with_isotropic_halves(ae):
    pair, form = phase_space(ae)
    assert pair.dim == 4
    assert check_structure(pair, "coherent-poisson").ok
    assert check_form(pair, form, "symplectic-poisson").ok
    for i in range(2):
        for j in range(2):
            assert form.omega[i][j] == 0
            assert form.omega[2 + i][2 + j] == 0
            # both halves are closed under dot and bracket
            assert all(x == 0 for x in pair.c_dot[i][j][2:])
            assert all(x == 0 for x in pair.c_bracket[i][j][2:])
            assert all(x == 0 for x in pair.c_dot[2 + i][2 + j][:2])
            assert all(x == 0 for x in pair.c_bracket[2 + i][2 + j][:2])


def test_symplectic_splitting_recovers_the_pair(ae):
    pair, form = phase_space(ae)
    alg = npp_from_symplectic(pair, form)
    assert check_structure(alg, "coherent").ok
    assert check_form(alg, form, "quadratic-npp").ok
    sub = subadjacent(alg)
    assert sub.c_dot == pair.c_dot and sub.c_bracket == pair.c_bracket


def test_splitting_of_zero_pair_is_zero(ae_form):
    from prepoisson.algebra import PoissonPair

    alg = npp_from_symplectic(PoissonPair(2), ae_form)
    for op in ("succ", "prec", "ast"):
        assert all(x == 0 for plane in alg.cube(op) for row in plane for x in row)


def test_manin_split_of_the_double(ae):
    combined, _ = sample_double(ae)
    form = canonical_pairing_form(2)
    assert check_manin(combined, form, ([0, 1], [2, 3])).ok
    report = check_manin(combined, form, ([0, 2], [1, 3]))
    assert not report.ok
    assert any("isotropy" in f["identity"] for f in report.failures)
    with pytest.raises(ValueError):
        check_manin(combined, form, ([0, 1], [1, 2, 3]))


def test_quadratic_rb_trivial_examples(ae, ae_form):
    zero = [[0, 0], [0, 0]]
    assert check_quadratic_rb(RBSpec(ae, zero, 0, ae_form)).ok
    for lam in (1, 2, -3):
        # -lam * identity satisfies the Rota-Baxter identities at weight lam,
        # but the weighted form identity evaluates to -lam * omega, so the
        # only failures are form-weight witnesses
        neg = mat_scale(-lam, identity_mat(2))
        report = check_quadratic_rb(RBSpec(ae, neg, lam, ae_form))
        assert not report.ok
        assert {f["identity"] for f in report.failures} == {"form-weight"}


def test_factorizable_round_trip(ae):
    combined, rm = sample_double(ae)
    spec = fact_to_rb(combined, rm, 1)
    assert check_quadratic_rb(spec).ok
    assert check_quadratic_rb(complement(spec)).ok
    # weight relation: the skew part is the weight times the form tensor
    assert t2_eq(rm.skew, mat_scale(1, spec.form.r_omega))
    back = rb_to_fact(spec)
    assert t2_eq(back.r, rm.r)
    assert classify_r(combined, back).verdict == "quasi-triangular-factorizable"
    again = fact_to_rb(combined, back, 1)
    assert mat_eq(again.P, spec.P)
    assert mat_eq(again.form.omega, spec.form.omega)


def test_transposed_tensor_gives_the_complement_with_negated_form(ae):
    combined, rm = sample_double(ae)
    spec = fact_to_rb(combined, rm, 1)
    tau_spec = fact_to_rb(combined, RMatrix(combined, transpose(rm.r)), 1)
    expected_p = mat_sub(mat_neg(spec.P), identity_mat(4))
    assert mat_eq(tau_spec.P, expected_p)
    assert mat_eq(tau_spec.form.omega, mat_neg(spec.form.omega))


def test_fact_to_rb_preconditions(ae):
    combined, rm = sample_double(ae)
    with pytest.raises(ValueError):
        fact_to_rb(combined, rm, 0)
    with pytest.raises(ValueError):
        fact_to_rb(ae, RMatrix(ae, [[1, 0], [0, 0]]), 1)  # triangular


def test_weight_zero_branch_gives_symmetric_tensor(ae, ae_form):
    spec = RBSpec(ae, [[0, 0], [0, 0]], 0, ae_form)
    rm = rb_to_fact(spec)
    assert all(x == 0 for row in rm.r for x in row)
    assert classify_r(ae, rm).verdict == "triangular"


def test_operator_identities_match_solution_verdict(ae, ae_form):
    # with invariant skew part, the tensor solves the equations exactly when
    # the induced operator satisfies the three product identities
    for r in grids(2):
        rm = RMatrix(ae, r)
        if not is_invariant(ae, rm.skew):
            continue
        assert check_p_identities(ae, rm, ae_form).ok == is_solution(ae, r)


def test_weight_relation_matches_form_weight_identity(ae, ae_form):
    # r - tau(r) = weight * r_omega holds exactly when the induced operator
    # satisfies the weighted form identity
    from prepoisson.exact import mat_mul, mat_vec, unit_vec

    for r in grids(2, coeffs=(-1, 1)):
        rm = RMatrix(ae, r)
        for lam in (0, 1, 2):
            relation = t2_eq(rm.skew, mat_scale(lam, ae_form.r_omega))
            P = mat_neg(mat_mul(rm.t_map, ae_form.omega_sharp))
            identity = all(
                ae_form.eval(mat_vec(P, unit_vec(2, i)), unit_vec(2, j))
                + ae_form.eval(unit_vec(2, i), mat_vec(P, unit_vec(2, j)))
                + lam * ae_form.eval(unit_vec(2, i), unit_vec(2, j)) == 0
                for i in range(2) for j in range(2)
            )
            assert relation == identity


def test_symplectic_functor_round_trip(ae):
    # quadratic data descends to the sub-adjacent pair and lifts back
    combined, rm = sample_double(ae)
    spec = fact_to_rb(combined, rm, 1)
    sub = subadjacent(combined)
    assert check_form(sub, spec.form, "symplectic-poisson").ok
    back = npp_from_symplectic(sub, spec.form)
    assert check_form(back, spec.form, "quadratic-npp").ok
