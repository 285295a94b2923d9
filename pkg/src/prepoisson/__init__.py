"""Exact-arithmetic verification and construction engine for
finite-dimensional noncommutative pre-Poisson (bi)algebras."""

__version__ = "0.1.0"

from .algebra import (
    CheckReport,
    PoissonPair,
    TriAlgebra,
    check_structure,
    direct_sum,
    example_three_dim,
    example_two_dim,
    subadjacent,
)
from .reps import (
    MatchedPairData,
    SixRep,
    ThreeRep,
    check_six_rep,
    dualize_rep,
    matched_pair_build,
    regular_rep,
    semidirect,
)
from .ybe import (
    OperatorSpec,
    RMatrix,
    check_invariance,
    check_relative_rb,
    eval_ybe,
    is_invariant,
    is_solution,
    lift_operator,
    operator_characterization,
    search_ybe,
)
from .bialgebra import (
    CoTriple,
    check_bialgebra,
    check_coalgebra,
    classify_r,
    cobound,
    cotriple_from_algebra,
    double,
    dual_algebra,
    factorize,
)
from .quadratic import (
    RBSpec,
    SkewForm,
    check_form,
    check_manin,
    check_quadratic_rb,
    fact_to_rb,
    npp_from_symplectic,
    phase_space,
    r_omega,
    rb_to_fact,
)
