"""Comultiplications, bialgebra audits, doubles and classification."""

import pytest

from prepoisson.algebra import check_structure
from prepoisson.exact import mat_transpose, t2_add
from prepoisson.ybe import RMatrix, is_solution
from prepoisson.bialgebra import (
    CoTriple,
    canonical_double_r,
    check_bialgebra,
    check_coalgebra,
    classify_r,
    cobound,
    double,
    dual_algebra,
    factorize,
)

from conftest import grids


def symmetric_solutions(alg):
    out = []
    for r in grids(alg.dim):
        rm = RMatrix(alg, r)
        if rm.is_symmetric and is_solution(alg, r):
            out.append(rm)
    return out


def test_every_symmetric_solution_gives_a_bialgebra(ae, ae1):
    for alg in (ae, ae1):
        sols = symmetric_solutions(alg)
        assert sols
        for rm in sols:
            ct = cobound(alg, rm)
            assert check_coalgebra(ct, "coherent").ok
            report = check_bialgebra(alg, ct)
            assert report.ok, report.summary()


def test_cobound_is_linear_in_r(ae):
    r1 = [[1, 0], [0, 0]]
    r2 = [[0, 1], [1, 0]]
    ct1 = cobound(ae, RMatrix(ae, r1))
    ct2 = cobound(ae, RMatrix(ae, r2))
    both = cobound(ae, RMatrix(ae, t2_add(r1, r2)))
    for d1, d2, db in ((ct1.d_succ, ct2.d_succ, both.d_succ),
                       (ct1.d_prec, ct2.d_prec, both.d_prec),
                       (ct1.d_ast, ct2.d_ast, both.d_ast)):
        for a, b, c in zip(d1, d2, db):
            assert t2_add(a, b) == c


def test_perturbed_tensor_fails_the_coalgebra_audit(ae1):
    # a symmetric non-solution whose induced comultiplications are not
    # coassociative in the required sense
    bad = [[-1, -1, -1], [-1, -1, -1], [-1, -1, -1]]
    assert not is_solution(ae1, bad)
    ct = cobound(ae1, RMatrix(ae1, bad))
    report = check_coalgebra(ct, "coherent")
    assert not report.ok
    identities = {f["identity"] for f in report.failures}
    assert "co-succ-after-dot" in identities
    assert not check_bialgebra(ae1, ct).ok


def test_double_is_coherent_and_factorizable(ae):
    ct = cobound(ae, RMatrix(ae, [[1, 0], [0, 0]]))
    combined, rm = double(ae, ct)
    assert combined.dim == 4
    assert check_structure(combined, "coherent").ok
    cls = classify_r(combined, rm)
    assert cls.verdict == "quasi-triangular-factorizable"
    # skew-part pairing map: the block map (zeta, x) -> (zeta, -x)
    assert mat_transpose(rm.skew) == [
        [0, 0, -1, 0],
        [0, 0, 0, -1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ]


def test_double_requires_a_valid_bialgebra(ae1):
    bad = [[-1, -1, -1], [-1, -1, -1], [-1, -1, -1]]
    ct = cobound(ae1, RMatrix(ae1, bad))
    with pytest.raises(ValueError):
        double(ae1, ct)


def test_classification_hierarchy(ae):
    assert classify_r(ae, RMatrix(ae, [[0, 0], [0, 0]])).verdict == "triangular"
    assert classify_r(ae, RMatrix(ae, [[1, 0], [0, 0]])).verdict == "triangular"
    assert (classify_r(ae, RMatrix(ae, [[0, 1], [0, 0]])).verdict
            == "quasi-triangular-factorizable")
    assert (classify_r(ae, RMatrix(ae, [[1, 1], [1, 1]])).verdict
            == "triangular")
    assert (classify_r(ae, RMatrix(ae, [[-1, -1], [-1, 0]])).verdict
            == "not-coboundary-solution")


def test_factorize_round_trip(ae):
    ct = cobound(ae, RMatrix(ae, [[1, 0], [0, 0]]))
    combined, rm = double(ae, ct)
    for x in ([1, 0, 0, 0], [0, 1, 0, 0], [2, -1, 3, 5]):
        x1, x2 = factorize(combined, rm, x)
        assert [a - b for a, b in zip(x1, x2)] == x


def test_factorize_rejects_non_factorizable(ae):
    with pytest.raises(ValueError):
        factorize(ae, RMatrix(ae, [[1, 0], [0, 0]]), [1, 0])


def test_canonical_double_tensor_shape():
    r = canonical_double_r(2)
    assert r == [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]


def test_dual_algebra_of_zero_comultiplication(ae):
    dual = dual_algebra(CoTriple.zero(2))
    for op in ("succ", "prec", "ast"):
        assert all(x == 0 for plane in dual.cube(op) for row in plane for x in row)
