"""Six-map actions, dualization, semidirect products and matched pairs."""

import pytest

from prepoisson.algebra import check_structure
from prepoisson.reps import (
    MatchedPairData,
    check_six_rep,
    check_sum_compatibilities,
    dualize_rep,
    find_noncoherent_witness,
    matched_pair_build,
    regular_rep,
    semidirect,
)
from prepoisson.bialgebra import cotriple_from_algebra, dual_algebra


def test_regular_rep_levels(ae, ae1):
    for alg in (ae, ae1):
        rep = regular_rep(alg)
        assert check_six_rep(alg, rep, "quasi").ok
        assert check_six_rep(alg, rep, "full").ok
        assert check_six_rep(alg, rep, "strong").ok


def test_dual_of_regular_is_full_on_coherent(ae, ae1):
    for alg in (ae, ae1):
        dual = dualize_rep(alg, regular_rep(alg))
        assert check_six_rep(alg, dual, "quasi").ok
        assert check_six_rep(alg, dual, "full").ok


def test_dual_of_regular_fails_on_noncoherent_witness():
    alg, cert = find_noncoherent_witness()
    assert cert["found"], "no witness within the search budget: %r" % cert
    assert check_structure(alg, "npp").ok
    assert not check_structure(alg, "coherent").ok
    dual = dualize_rep(alg, regular_rep(alg))
    assert not check_six_rep(alg, dual, "full").ok


def test_sum_compatibilities(ae, ae1):
    for alg in (ae, ae1):
        assert check_sum_compatibilities(alg, regular_rep(alg)).ok
        assert check_sum_compatibilities(
            alg, dualize_rep(alg, regular_rep(alg))
        ).ok


def test_semidirect_by_dualized_regular_is_coherent(ae, ae1):
    for alg in (ae, ae1):
        ext = semidirect(alg, regular_rep(alg), use_dual=True)
        assert ext.dim == 2 * alg.dim
        assert check_structure(ext, "coherent").ok


def test_matched_pair_with_zero_comultiplication(ae):
    # the dual of the zero comultiplication is the zero algebra; the matched
    # pair of the algebra with it must reproduce a coherent structure
    from prepoisson.bialgebra import CoTriple

    ct = CoTriple.zero(ae.dim)
    dual = dual_algebra(ct)
    maps1 = dualize_rep(ae, regular_rep(ae))
    maps2 = dualize_rep(dual, regular_rep(dual))
    combined, report = matched_pair_build(MatchedPairData(ae, dual, maps1, maps2))
    assert report.ok
    assert check_structure(combined, "coherent").ok


def test_dual_algebra_round_trip(ae, ae1):
    # reading an algebra's products as a comultiplication and dualizing twice
    # must reproduce the original structure constants
    for alg in (ae, ae1):
        ct = cotriple_from_algebra(alg)
        dual = dual_algebra(ct)
        back = dual_algebra(cotriple_from_algebra(dual))
        for op in ("succ", "prec", "ast"):
            assert back.cube(op) == alg.cube(op)
