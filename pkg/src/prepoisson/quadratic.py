"""Skew bilinear forms, symplectic and quadratic structures, phase spaces,
Manin triples, quadratic Rota-Baxter data and the factorizable correspondence.

A form is stored as the matrix omega[i][j] = omega(e_i, e_j); omega_sharp is
the matrix of x -> omega(x, .) in the dual basis, so omega_sharp = omega^T.
The tensor r_omega is determined by T_{r_omega} = omega_sharp^{-1} under the
convention T_r = r^T used throughout.
"""

import itertools

from .exact import (
    identity_mat,
    invert,
    mat_mul,
    mat_neg,
    mat_scale,
    mat_sub,
    mat_transpose,
    mat_vec,
    t2_eq,
    unit_vec,
    vec_add,
    zeros_vec,
    zeros_mat,
)
from .algebra import (
    CheckReport,
    PoissonPair,
    TriAlgebra,
    check_structure,
    mul,
    subadjacent,
    zero_cube,
)
from .reps import regular_rep
from .ybe import OperatorSpec, RMatrix, check_invariance, check_relative_rb, is_invariant


class SkewForm:
    """A nondegenerate skew-symmetric bilinear form on an n-dimensional space."""

    def __init__(self, omega):
        n = len(omega)
        for row in omega:
            if len(row) != n:
                raise ValueError("form matrix must be square")
        for i in range(n):
            for j in range(n):
                if omega[i][j] != -omega[j][i]:
                    raise ValueError("form matrix must be skew-symmetric")
        self.dim = n
        self.omega = [row[:] for row in omega]
        self.omega_sharp = mat_transpose(omega)
        inverse, _ = invert(self.omega_sharp)
        if inverse is None:
            raise ValueError("form matrix must be nondegenerate")
        self.sharp_inv = inverse
        # r_omega is the tensor whose pairing map T is omega_sharp^{-1}.
        self.r_omega = mat_transpose(inverse)

    def eval(self, x, y):
        """The scalar omega(x, y)."""
        total = 0
        for p, a in enumerate(x):
            if a:
                row = self.omega[p]
                for q, b in enumerate(y):
                    if b and row[q]:
                        total += a * row[q] * b
        return total


class RBSpec:
    """An algebra with a candidate Rota-Baxter operator, weight and form."""

    def __init__(self, alg, P, weight=0, form=None):
        if len(P) != alg.dim or any(len(row) != alg.dim for row in P):
            raise ValueError("operator matrix dimension mismatch")
        if form is not None and form.dim != alg.dim:
            raise ValueError("form dimension does not match the algebra")
        self.alg = alg
        self.P = [row[:] for row in P]
        self.weight = weight
        self.form = form


FORM_LEVELS = ("symplectic-poisson", "quadratic-npp")


def check_form(alg, form, level):
    """Audit the cyclic (symplectic) or invariance (quadratic) identities."""
    if level not in FORM_LEVELS:
        raise ValueError("unknown form level %r" % level)
    if form.dim != alg.dim:
        raise ValueError("form dimension does not match the algebra")
    n = alg.dim
    report = CheckReport()
    if level == "symplectic-poisson":
        pair = subadjacent(alg) if isinstance(alg, TriAlgebra) else alg
        for i, j, k in itertools.product(range(n), repeat=3):
            for name, cube in (("cyclic-bracket", pair.c_bracket),
                               ("cyclic-dot", pair.c_dot)):
                total = form.eval(cube[i][j], unit_vec(n, k))
                total += form.eval(cube[j][k], unit_vec(n, i))
                total += form.eval(cube[k][i], unit_vec(n, j))
                report.record(name, (i, j, k), total, 0)
        return report
    for i, j, k in itertools.product(range(n), repeat=3):
        ei, ej, ek = unit_vec(n, i), unit_vec(n, j), unit_vec(n, k)
        report.record(
            "ast-invariance",
            (i, j, k),
            form.eval(alg.c_ast[i][j], ek),
            -form.eval(ej, alg.c_bracket[i][k]),
        )
        report.record(
            "succ-invariance",
            (i, j, k),
            form.eval(alg.c_succ[i][j], ek),
            form.eval(ej, alg.c_dot[k][i]),
        )
        report.record(
            "prec-invariance",
            (i, j, k),
            form.eval(alg.c_prec[i][j], ek),
            form.eval(ei, alg.c_dot[j][k]),
        )
    return report


def npp_from_symplectic(pair, form):
    """The compatible coherent splitting of a symplectic Poisson pair.

    Solves omega(x*y, z) = -omega(y, [x, z]), omega(x>y, z) = omega(y, z.x)
    and omega(x<y, z) = omega(x, y.z) for the structure constants; the
    solution is unique by nondegeneracy.  The output is coherent and its
    sub-adjacent pair equals the input.
    """
    pre = check_form(pair, form, "symplectic-poisson")
    if not pre.ok:
        raise ValueError("symplectic precondition failed: %s" % pre.summary())
    n = pair.dim
    c_succ, c_prec, c_ast = zero_cube(n), zero_cube(n), zero_cube(n)
    for i in range(n):
        for j in range(n):
            ei, ej = unit_vec(n, i), unit_vec(n, j)
            rhs_ast = [-form.eval(ej, pair.c_bracket[i][k]) for k in range(n)]
            rhs_succ = [form.eval(ej, pair.c_dot[k][i]) for k in range(n)]
            rhs_prec = [form.eval(ei, pair.c_dot[j][k]) for k in range(n)]
            # omega(v, e_k) = (omega_sharp @ v)_k, so v = sharp_inv @ rhs.
            c_ast[i][j] = mat_vec(form.sharp_inv, rhs_ast)
            c_succ[i][j] = mat_vec(form.sharp_inv, rhs_succ)
            c_prec[i][j] = mat_vec(form.sharp_inv, rhs_prec)
    alg = TriAlgebra(n, c_succ, c_prec, c_ast, basis_names=pair.basis_names)
    coh = check_structure(alg, "coherent")
    if not coh.ok:
        raise RuntimeError("splitting is not coherent: %s" % coh.summary())
    if not (
        all(t2_eq(a, b) for a, b in zip(alg.c_dot, pair.c_dot))
        and all(t2_eq(a, b) for a, b in zip(alg.c_bracket, pair.c_bracket))
    ):
        raise RuntimeError("splitting does not recover the input pair")
    return alg


def phase_space(alg):
    """The symplectic Poisson pair on A + A* over a coherent algebra.

    Products: (x+a).(y+b) = x.y + Rprec*(x)b + Lsucc*(y)a and
    [x+a, y+b] = [x,y] - Last*(x)b + Last*(y)a, with the canonical pairing
    form omega(x+a, y+b) = <a,y> - <x,b>.
    """
    coh = check_structure(alg, "coherent")
    if not coh.ok:
        raise ValueError("phase space requires a coherent algebra")
    n = alg.dim
    m = 2 * n
    c_dot = zero_cube(m)
    c_bracket = zero_cube(m)
    r_prec = alg.right_ops("prec")
    l_succ = alg.left_ops("succ")
    l_ast = alg.left_ops("ast")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c_dot[i][j][k] = alg.c_dot[i][j][k]
                c_bracket[i][j][k] = alg.c_bracket[i][j][k]
    for i in range(n):
        for q in range(n):
            for p in range(n):
                # e_i acting on the dual vector f_q, plain adjoint actions.
                c_dot[i][n + q][n + p] += r_prec[i][q][p]
                c_dot[n + q][i][n + p] += l_succ[i][q][p]
                c_bracket[i][n + q][n + p] += -l_ast[i][q][p]
                c_bracket[n + q][i][n + p] += l_ast[i][q][p]
    names = None
    if alg.basis_names:
        names = list(alg.basis_names) + [nm + "'" for nm in alg.basis_names]
    pair = PoissonPair(m, c_dot, c_bracket, basis_names=names)
    omega = zeros_mat(m)
    for i in range(n):
        omega[i][n + i] = -1
        omega[n + i][i] = 1
    return pair, SkewForm(omega)


def check_manin(alg, form, split):
    """Audit a Manin-triple split: quadratic form, closed isotropic parts.

    split is a pair of disjoint index lists covering the basis.  On a passing
    split the coherence of the whole algebra and of both restricted parts is
    audited as well and merged into the report.
    """
    part1, part2 = [list(p) for p in split]
    if sorted(part1 + part2) != list(range(alg.dim)):
        raise ValueError("split must partition the basis indices")
    n = alg.dim
    report = check_form(alg, form, "quadratic-npp")
    for label, part in (("part1", part1), ("part2", part2)):
        inside = set(part)
        for i in part:
            for j in part:
                for op in ("succ", "prec", "ast"):
                    col = alg.cube(op)[i][j]
                    leak = [col[k] if k not in inside else 0 for k in range(n)]
                    report.record(
                        "%s.closure-%s" % (label, op), (i, j), leak, zeros_vec(n)
                    )
                report.record(
                    "%s.isotropy" % label,
                    (i, j),
                    form.eval(unit_vec(n, i), unit_vec(n, j)),
                    0,
                )
    if not report.ok:
        return report
    whole = check_structure(alg, "coherent")
    for f in whole.failures:
        f["identity"] = "whole." + f["identity"]
    report.merge(whole)
    for label, part in (("part1", part1), ("part2", part2)):
        sub = _restrict(alg, part)
        coh = check_structure(sub, "coherent")
        for f in coh.failures:
            f["identity"] = label + "." + f["identity"]
        report.merge(coh)
    return report


def _restrict(alg, part):
    """The sub-TriAlgebra spanned by the given basis indices (must be closed)."""
    m = len(part)
    cubes = []
    for op in ("succ", "prec", "ast"):
        c = alg.cube(op)
        cubes.append(
            [[[c[a][b][d] for d in part] for b in part] for a in part]
        )
    return TriAlgebra(m, *cubes)


def check_quadratic_rb(spec):
    """Audit a quadratic Rota-Baxter structure of weight lambda.

    Combines the relative Rota-Baxter identities of P on the regular
    representation with the algebra's own products, the quadratic invariance
    of the form, and the weight identity
    omega(Px, y) + omega(x, Py) + lambda * omega(x, y) = 0.
    """
    if spec.form is None:
        raise ValueError("check_quadratic_rb needs a form")
    alg, P, lam, form = spec.alg, spec.P, spec.weight, spec.form
    op = OperatorSpec(alg, regular_rep(alg), P, weight=lam, v_products=alg)
    report = check_relative_rb(op)
    report.merge(check_form(alg, form, "quadratic-npp"))
    n = alg.dim
    for i in range(n):
        for j in range(n):
            ei, ej = unit_vec(n, i), unit_vec(n, j)
            total = form.eval(mat_vec(P, ei), ej)
            total += form.eval(ei, mat_vec(P, ej))
            total += lam * form.eval(ei, ej)
            report.record("form-weight", (i, j), total, 0)
    return report


def complement(spec):
    """The companion structure (-lambda*I - P, omega) at the same weight."""
    n = spec.alg.dim
    comp = mat_sub(mat_scale(-spec.weight, identity_mat(n)), spec.P)
    return RBSpec(spec.alg, comp, spec.weight, spec.form)


def fact_to_rb(alg, rm, weight):
    """Quadratic Rota-Baxter data of a factorizable tensor at nonzero weight.

    omega_sharp = weight * T_{r - tau(r)}^{-1} and P = -T_r omega_sharp; the
    skew part of r then equals weight * r_omega for the produced form.
    """
    if weight == 0:
        raise ValueError("fact_to_rb needs a nonzero weight")
    from .bialgebra import classify_r

    if not isinstance(rm, RMatrix):
        rm = RMatrix(alg, rm)
    cls = classify_r(alg, rm)
    if cls.verdict != "quasi-triangular-factorizable":
        raise ValueError("fact_to_rb requires a factorizable tensor, got %r"
                         % cls.verdict)
    skew_inv = cls.evidence["skew_inverse"]
    omega_sharp = mat_scale(weight, skew_inv)
    form = SkewForm(mat_transpose(omega_sharp))
    P = mat_neg(mat_mul(rm.t_map, omega_sharp))
    if not t2_eq(rm.skew, mat_scale(weight, form.r_omega)):
        raise RuntimeError("weight relation r - tau(r) = weight * r_omega failed")
    return RBSpec(alg, P, weight, form)


def rb_to_fact(spec):
    """The tensor recovered from quadratic Rota-Baxter data.

    At nonzero weight T_r = -P(omega_sharp)^{-1}; the weight-0 branch uses
    T_r = P(omega_sharp)^{-1} and produces a symmetric (triangular) tensor.
    The two branches deliberately differ in sign.
    """
    report = check_quadratic_rb(spec)
    if not report.ok:
        raise ValueError("quadratic Rota-Baxter audit failed: %s"
                         % report.summary())
    t_r = mat_mul(spec.P, spec.form.sharp_inv)
    if spec.weight != 0:
        t_r = mat_neg(t_r)
    return RMatrix(spec.alg, mat_transpose(t_r))


def r_omega(form, alg):
    """The tensor of a form, with the skew-invariance equivalence audit.

    Returns (r, report) where r satisfies T_r = omega_sharp^{-1}; the report
    asserts that the quadratic invariance of (alg, form) holds exactly when r
    is invariant (r is skew-symmetric by construction).
    """
    r = [row[:] for row in form.r_omega]
    report = CheckReport()
    quad = check_form(alg, form, "quadratic-npp")
    inv = is_invariant(alg, r)
    report.note("quadratic-form verdict: %s" % quad.verdict)
    report.note("tensor invariance verdict: %s" % ("pass" if inv else "fail"))
    report.record(
        "quadratic-iff-invariant", (0,), quad.ok, inv
    )
    if quad.ok and inv:
        # Both directions hold; cross-check against the full invariance audit.
        full = check_invariance(alg, r)
        for f in full.failures:
            f["identity"] = "invariance." + f["identity"]
        report.merge(full)
    return r, report


def check_p_identities(alg, rm, form):
    """The three operator identities equivalent to r being a solution.

    With s = r - tau(r) invariant and P = -T_r omega_sharp, each product o
    must satisfy P(x) o P(y) = P(P(x) o y + x o P(y) + x o T_s omega_sharp(y)).
    The sign on the trailing term is forced: only this orientation makes the
    identities equivalent to the vanishing of the two obstruction tensors on
    every tensor with invariant skew part.
    """
    if not isinstance(rm, RMatrix):
        rm = RMatrix(alg, rm)
    n = alg.dim
    P = mat_neg(mat_mul(rm.t_map, form.omega_sharp))
    shift = mat_mul(rm.t_skew, form.omega_sharp)
    report = CheckReport()
    for i in range(n):
        for j in range(n):
            ei, ej = unit_vec(n, i), unit_vec(n, j)
            pi, pj = mat_vec(P, ei), mat_vec(P, ej)
            sj = mat_vec(shift, ej)
            for op in ("succ", "prec", "ast"):
                cube = alg.cube(op)
                arg = vec_add(
                    vec_add(mul(cube, pi, ej), mul(cube, ei, pj)),
                    mul(cube, ei, sj),
                )
                report.record(
                    "p-identity-" + op,
                    (i, j),
                    mul(cube, pi, pj),
                    mat_vec(P, arg),
                )
    return report
