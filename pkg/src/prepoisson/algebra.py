"""Structure-constant algebras with three products and the axiom checkers.

A TriAlgebra stores the structure constants of three bilinear products
(succ '>', prec '<' and ast '*') as cubes c[i][j][k] = coefficient of e_k in
e_i o e_j.  The derived associative product is dot = succ + prec and the
derived bracket is the ast commutator.  A PoissonPair stores dot/bracket cubes
directly.  Validity is never assumed: check_structure audits any input.
"""

import itertools

from .exact import scalar_str, vec_add, vec_is_zero, vec_str, zeros_vec


def zero_cube(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def cube_add(a, b):
    return [
        [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(pa, pb)]
        for pa, pb in zip(a, b)
    ]


def cube_sub(a, b):
    return [
        [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(pa, pb)]
        for pa, pb in zip(a, b)
    ]


def cube_eq(a, b):
    return all(
        x == y
        for pa, pb in zip(a, b)
        for ra, rb in zip(pa, pb)
        for x, y in zip(ra, rb)
    )


def cube_commutator(c):
    """The bracket cube b[i][j] = c[i][j] - c[j][i]."""
    n = len(c)
    return [
        [[c[i][j][k] - c[j][i][k] for k in range(n)] for j in range(n)]
        for i in range(n)
    ]


def mul(cube, u, v):
    """Product of two coefficient vectors under a structure-constant cube."""
    n = len(cube)
    out = [0] * n
    for i in range(n):
        a = u[i]
        if not a:
            continue
        plane = cube[i]
        for j in range(n):
            b = v[j]
            if not b:
                continue
            row = plane[j]
            ab = a * b
            for k in range(n):
                if row[k]:
                    out[k] += ab * row[k]
    return out


class TriAlgebra:
    """A finite-dimensional algebra with three bilinear products."""

    def __init__(self, dim, c_succ=None, c_prec=None, c_ast=None, basis_names=None):
        self.dim = dim
        self.c_succ = c_succ if c_succ is not None else zero_cube(dim)
        self.c_prec = c_prec if c_prec is not None else zero_cube(dim)
        self.c_ast = c_ast if c_ast is not None else zero_cube(dim)
        for cube in (self.c_succ, self.c_prec, self.c_ast):
            if len(cube) != dim:
                raise ValueError("structure cube dimension mismatch")
        self.c_dot = cube_add(self.c_succ, self.c_prec)
        self.c_bracket = cube_commutator(self.c_ast)
        self.basis_names = basis_names
        self._cache = {}

    def cube(self, op):
        return {
            "succ": self.c_succ,
            "prec": self.c_prec,
            "ast": self.c_ast,
            "dot": self.c_dot,
            "bracket": self.c_bracket,
        }[op]

    def left_ops(self, op):
        """Matrices of y -> e_i o y for each basis index i (cached)."""
        key = ("L", op)
        if key not in self._cache:
            c = self.cube(op)
            n = self.dim
            self._cache[key] = [
                [[c[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)
            ]
        return self._cache[key]

    def right_ops(self, op):
        """Matrices of y -> y o e_i for each basis index i (cached)."""
        key = ("R", op)
        if key not in self._cache:
            c = self.cube(op)
            n = self.dim
            self._cache[key] = [
                [[c[j][i][k] for j in range(n)] for k in range(n)] for i in range(n)
            ]
        return self._cache[key]


class PoissonPair:
    """A finite-dimensional algebra with a product and a bracket."""

    def __init__(self, dim, c_dot=None, c_bracket=None, basis_names=None):
        self.dim = dim
        self.c_dot = c_dot if c_dot is not None else zero_cube(dim)
        self.c_bracket = c_bracket if c_bracket is not None else zero_cube(dim)
        self.basis_names = basis_names
        self._cache = {}

    def cube(self, op):
        return {"dot": self.c_dot, "bracket": self.c_bracket}[op]

    def left_ops(self, op):
        key = ("L", op)
        if key not in self._cache:
            c = self.cube(op)
            n = self.dim
            self._cache[key] = [
                [[c[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)
            ]
        return self._cache[key]

    def right_ops(self, op):
        key = ("R", op)
        if key not in self._cache:
            c = self.cube(op)
            n = self.dim
            self._cache[key] = [
                [[c[j][i][k] for j in range(n)] for k in range(n)] for i in range(n)
            ]
        return self._cache[key]


def fmt_value(v):
    """Render a scalar, vector or matrix witness value compactly."""
    if isinstance(v, list):
        if v and isinstance(v[0], list):
            return "[" + "; ".join(fmt_value(row) for row in v) + "]"
        return vec_str(v)
    return scalar_str(v)


class CheckReport:
    """Verdict plus witnesses for a batch of identity checks."""

    def __init__(self):
        self.failures = []
        self.notes = []

    @property
    def verdict(self):
        return "pass" if not self.failures else "fail"

    @property
    def ok(self):
        return not self.failures

    def record(self, identity, indices, lhs, rhs):
        if lhs != rhs:
            self.failures.append(
                {"identity": identity, "indices": indices, "lhs": lhs, "rhs": rhs}
            )

    def note(self, text):
        self.notes.append(text)

    def merge(self, other):
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        return self

    def summary(self):
        lines = ["verdict=%s" % self.verdict]
        for k, f in enumerate(self.failures):
            idx = ",".join(str(i + 1) for i in f["indices"])
            lines.append(
                "witness.%d: %s at (%s) lhs=%s rhs=%s"
                % (k, f["identity"], idx, fmt_value(f["lhs"]), fmt_value(f["rhs"]))
            )
        return "\n".join(lines)


def _triples(n):
    return itertools.product(range(n), range(n), range(n))


def _lcomp(c_outer, c_inner, i, j, k):
    """(e_i o2 e_j) o1 e_k as a coefficient vector."""
    n = len(c_outer)
    out = [0] * n
    inner = c_inner[i][j]
    for p in range(n):
        q = inner[p]
        if q:
            row = c_outer[p][k]
            for m in range(n):
                if row[m]:
                    out[m] += q * row[m]
    return out


def _rcomp(c_outer, c_inner, i, j, k):
    """e_i o1 (e_j o2 e_k) as a coefficient vector."""
    n = len(c_outer)
    out = [0] * n
    inner = c_inner[j][k]
    for p in range(n):
        q = inner[p]
        if q:
            row = c_outer[i][p]
            for m in range(n):
                if row[m]:
                    out[m] += q * row[m]
    return out


STRUCTURE_LEVELS = (
    "dendriform",
    "prelie",
    "npp",
    "coherent",
    "poisson",
    "coherent-poisson",
)


def check_structure(alg, level):
    """Audit the axiom system named by `level` on all basis triples."""
    if level not in STRUCTURE_LEVELS:
        raise ValueError("unknown structure level %r" % level)
    if level in ("poisson", "coherent-poisson"):
        if isinstance(alg, TriAlgebra):
            pair = subadjacent(alg)
        elif isinstance(alg, PoissonPair):
            pair = alg
        else:
            raise ValueError("poisson levels need a PoissonPair or TriAlgebra")
        report = _check_poisson(pair)
        if level == "coherent-poisson":
            report.merge(_check_cyclic_leibniz(pair))
        return report
    if not isinstance(alg, TriAlgebra):
        raise ValueError("level %r needs a TriAlgebra" % level)
    report = CheckReport()
    if level == "dendriform":
        return report.merge(_check_dendriform(alg))
    if level == "prelie":
        return report.merge(_check_prelie(alg))
    report.merge(_check_dendriform(alg))
    report.merge(_check_prelie(alg))
    report.merge(_check_npp_compat(alg))
    if level == "coherent":
        report.merge(_check_coherence(alg))
    return report


def _check_dendriform(alg):
    rep = CheckReport()
    n = alg.dim
    S, P, D = alg.c_succ, alg.c_prec, alg.c_dot
    for i, j, k in _triples(n):
        # (x<y)<z = x<(y.z)
        rep.record("prec-after-prec", (i, j, k), _lcomp(P, P, i, j, k), _rcomp(P, D, i, j, k))
        # (x>y)<z = x>(y<z)
        rep.record("prec-after-succ", (i, j, k), _lcomp(P, S, i, j, k), _rcomp(S, P, i, j, k))
        # x>(y>z) = (x.y)>z
        rep.record("succ-after-dot", (i, j, k), _rcomp(S, S, i, j, k), _lcomp(S, D, i, j, k))
    return rep


def _check_prelie(alg):
    rep = CheckReport()
    n = alg.dim
    A = alg.c_ast
    for i, j, k in _triples(n):
        # (x*y)*z - x*(y*z) = (y*x)*z - y*(x*z)
        lhs = [a - b for a, b in zip(_lcomp(A, A, i, j, k), _rcomp(A, A, i, j, k))]
        rhs = [a - b for a, b in zip(_lcomp(A, A, j, i, k), _rcomp(A, A, j, i, k))]
        rep.record("associator-symmetry", (i, j, k), lhs, rhs)
    return rep


def _check_npp_compat(alg):
    rep = CheckReport()
    n = alg.dim
    S, P, A, D, B = alg.c_succ, alg.c_prec, alg.c_ast, alg.c_dot, alg.c_bracket
    for i, j, k in _triples(n):
        # [x,y]>z = x*(y>z) - y>(x*z)
        lhs = _lcomp(S, B, i, j, k)
        rhs = [a - b for a, b in zip(_rcomp(A, S, i, j, k), _rcomp(S, A, j, i, k))]
        rep.record("bracket-into-succ", (i, j, k), lhs, rhs)
        # x<[y,z] = y*(x<z) - (y*x)<z
        lhs = _rcomp(P, B, i, j, k)
        rhs = [a - b for a, b in zip(_rcomp(A, P, j, i, k), _lcomp(P, A, j, i, k))]
        rep.record("prec-after-bracket", (i, j, k), lhs, rhs)
        # (x.y)*z = (x*z)<y + x>(y*z)
        lhs = _lcomp(A, D, i, j, k)
        rhs = vec_add(_lcomp(P, A, i, k, j), _rcomp(S, A, i, j, k))
        rep.record("dot-into-ast", (i, j, k), lhs, rhs)
    return rep


def _check_coherence(alg):
    rep = CheckReport()
    n = alg.dim
    S, P, A, D = alg.c_succ, alg.c_prec, alg.c_ast, alg.c_dot
    for i, j, k in _triples(n):
        # (x.y)*z = x*(y>z) + y*(z<x)
        lhs = _lcomp(A, D, i, j, k)
        rhs = vec_add(_rcomp(A, S, i, j, k), _rcomp(A, P, j, k, i))
        rep.record("dot-ast-split", (i, j, k), lhs, rhs)
    return rep


def _check_poisson(pair):
    rep = CheckReport()
    n = pair.dim
    D, B = pair.c_dot, pair.c_bracket
    for i in range(n):
        for j in range(n):
            # [x,y] = -[y,x]
            rep.record(
                "bracket-antisymmetry",
                (i, j),
                B[i][j],
                [-q for q in B[j][i]],
            )
    for i, j, k in _triples(n):
        # (x.y).z = x.(y.z)
        rep.record("dot-associativity", (i, j, k), _lcomp(D, D, i, j, k), _rcomp(D, D, i, j, k))
        # [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
        jac = vec_add(
            vec_add(_lcomp(B, B, i, j, k), _lcomp(B, B, j, k, i)),
            _lcomp(B, B, k, i, j),
        )
        rep.record("jacobi", (i, j, k), jac, zeros_vec(n))
        # [x, y.z] = [x,y].z + y.[x,z]
        lhs = _rcomp(B, D, i, j, k)
        rhs = vec_add(_lcomp(D, B, i, j, k), _rcomp(D, B, j, i, k))
        rep.record("leibniz", (i, j, k), lhs, rhs)
    return rep


def _check_cyclic_leibniz(pair):
    rep = CheckReport()
    n = pair.dim
    D, B = pair.c_dot, pair.c_bracket
    for i, j, k in _triples(n):
        # [x, y.z] + [y, z.x] + [z, x.y] = 0
        total = vec_add(
            vec_add(_rcomp(B, D, i, j, k), _rcomp(B, D, j, k, i)),
            _rcomp(B, D, k, i, j),
        )
        rep.record("cyclic-leibniz", (i, j, k), total, zeros_vec(n))
    return rep


def subadjacent(alg):
    """The product-sum / ast-commutator pair induced by a TriAlgebra."""
    return PoissonPair(
        alg.dim,
        c_dot=[[list(col) for col in plane] for plane in alg.c_dot],
        c_bracket=[[list(col) for col in plane] for plane in alg.c_bracket],
        basis_names=alg.basis_names,
    )


def operator_matrix(alg, op, side, x):
    """Matrix of the left/right multiplication (or ad) operator at element x."""
    if side == "ad":
        if op != "ast":
            raise ValueError("ad is only defined for the ast product")
        left = operator_matrix(alg, "ast", "L", x)
        right = operator_matrix(alg, "ast", "R", x)
        return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(left, right)]
    if side not in ("L", "R"):
        raise ValueError("side must be 'L', 'R' or 'ad'")
    if len(x) != alg.dim:
        raise ValueError("element has wrong dimension")
    ops = alg.left_ops(op) if side == "L" else alg.right_ops(op)
    n = alg.dim
    out = [[0] * n for _ in range(n)]
    for i, q in enumerate(x):
        if q:
            mat = ops[i]
            for r in range(n):
                row = mat[r]
                orow = out[r]
                for c in range(n):
                    if row[c]:
                        orow[c] += q * row[c]
    return out


def direct_sum(a1, a2):
    """Block-diagonal TriAlgebra on the concatenated bases."""
    n1, n2 = a1.dim, a2.dim
    n = n1 + n2
    cubes = []
    for op in ("succ", "prec", "ast"):
        c1, c2 = a1.cube(op), a2.cube(op)
        c = zero_cube(n)
        for i in range(n1):
            for j in range(n1):
                for k in range(n1):
                    c[i][j][k] = c1[i][j][k]
        for i in range(n2):
            for j in range(n2):
                for k in range(n2):
                    c[n1 + i][n1 + j][n1 + k] = c2[i][j][k]
        cubes.append(c)
    return TriAlgebra(n, *cubes)


# Worked examples used throughout the test-suite and the documentation.


def example_two_dim():
    """The 2-dimensional coherent algebra with e1>e1=e1, e1>e2=e2, e1<e2=-e2,
    e2<e1=e2, e1*e1=e1, e2*e1=e2."""
    a = TriAlgebra(2)
    a.c_succ[0][0][0] = 1
    a.c_succ[0][1][1] = 1
    a.c_prec[0][1][1] = -1
    a.c_prec[1][0][1] = 1
    a.c_ast[0][0][0] = 1
    a.c_ast[1][0][1] = 1
    return TriAlgebra(2, a.c_succ, a.c_prec, a.c_ast)


def example_three_dim():
    """The 3-dimensional coherent algebra with e2>e2=e3, e2<e2=-e3,
    e1*e2=e3, e2*e2=e1."""
    a = TriAlgebra(3)
    a.c_succ[1][1][2] = 1
    a.c_prec[1][1][2] = -1
    a.c_ast[0][1][2] = 1
    a.c_ast[1][1][0] = 1
    return TriAlgebra(3, a.c_succ, a.c_prec, a.c_ast)
