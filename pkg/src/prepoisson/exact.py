"""Exact rational scalars, matrices, order-2/3 tensors and the contraction engine.

Scalars are plain Python ints or fractions.Fraction values; the two mix freely
and all arithmetic is exact.  Matrices are lists of rows, an order-2 tensor
r = sum r[i][j] e_i (x) e_j is a square list grid, and an order-3 tensor is a
cubic nested list.  Everything here is a pure function; values are never
mutated after being returned.
"""

from fractions import Fraction


def rat(text):
    """Parse a rational literal like '7', '-3' or '-3/4' into an exact scalar."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        num = int(num)
        den = int(den)
        if den == 0:
            raise ValueError("zero denominator in rational literal %r" % text)
        value = Fraction(num, den)
        if value.denominator == 1:
            return int(value)
        return value
    return int(text)


def scalar_str(q):
    """Canonical text for a scalar: 'p' for integers, 'p/q' otherwise."""
    if isinstance(q, Fraction):
        if q.denominator == 1:
            return str(q.numerator)
        return "%d/%d" % (q.numerator, q.denominator)
    return str(q)


# ---------------------------------------------------------------------------
# vectors


def zeros_vec(n):
    return [0] * n


def unit_vec(n, i):
    v = [0] * n
    v[i] = 1
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_neg(u):
    return [-a for a in u]


def vec_scale(q, u):
    return [q * a for a in u]


def vec_is_zero(u):
    return all(a == 0 for a in u)


def vec_str(u):
    return "(" + ", ".join(scalar_str(a) for a in u) + ")"


# ---------------------------------------------------------------------------
# matrices


def zeros_mat(rows, cols=None):
    if cols is None:
        cols = rows
    return [[0] * cols for _ in range(rows)]


def identity_mat(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(q, a):
    return [[q * x for x in row] for row in a]


def mat_mul(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            q = ai[k]
            if q:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += q * bk[j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = 0
        for q, x in zip(row, v):
            if q and x:
                s += q * x
        out.append(s)
    return out


def mat_transpose(a):
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a):
    return all(x == 0 for row in a for x in row)


def invert(m):
    """Exact inverse of a square matrix.

    Returns (inverse, None) when m is invertible and (None, kernel_basis)
    otherwise, where kernel_basis is a list of vectors spanning the kernel.
    """
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("invert expects a square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    pivot_cols = []
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, n):
            if a[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv[r], inv[pivot] = inv[pivot], inv[r]
        scale = a[r][c]
        a[r] = [x / scale for x in a[r]]
        inv[r] = [x / scale for x in inv[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
                inv[i] = [x - factor * y for x, y in zip(inv[i], inv[r])]
        pivot_cols.append(c)
        r += 1
    if r == n:
        return [[_canonical(x) for x in row] for row in inv], None
    free_cols = [c for c in range(n) if c not in pivot_cols]
    kernel = []
    for fc in free_cols:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivot_cols):
            v[pc] = -a[ri][fc]
        kernel.append([_canonical(x) for x in v])
    return None, kernel


def _canonical(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def solve_linear(m, rhs):
    """Solve m @ x = rhs exactly for invertible square m."""
    inv, kernel = invert(m)
    if inv is None:
        raise ValueError("singular linear system")
    return mat_vec(inv, rhs)


# ---------------------------------------------------------------------------
# order-2 tensors


def zeros2(n):
    return [[0] * n for _ in range(n)]


def t2_add(r, s):
    return mat_add(r, s)


def t2_sub(r, s):
    return mat_sub(r, s)


def t2_neg(r):
    return mat_neg(r)


def t2_eq(r, s):
    return mat_eq(r, s)


def t2_is_zero(r):
    return mat_is_zero(r)


def transpose(r):
    """The flip tau(r): result[i][j] = r[j][i]."""
    return mat_transpose(r)


def t2_str(r):
    parts = []
    for i, row in enumerate(r):
        for j, q in enumerate(row):
            if q:
                parts.append("%s*e%d(x)e%d" % (scalar_str(q), i + 1, j + 1))
    return " + ".join(parts) if parts else "0"


def apply_kron(m1, m2, t):
    """(m1 (x) m2) applied to an order-2 tensor: out = m1 . t . m2^T."""
    return mat_mul(m1, mat_mul(t, mat_transpose(m2)))


# ---------------------------------------------------------------------------
# order-3 tensors


def zeros3(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def t3_add(t, u):
    return [
        [[x + y for x, y in zip(rt, ru)] for rt, ru in zip(pt, pu)]
        for pt, pu in zip(t, u)
    ]


def t3_sub(t, u):
    return [
        [[x - y for x, y in zip(rt, ru)] for rt, ru in zip(pt, pu)]
        for pt, pu in zip(t, u)
    ]


def t3_neg(t):
    return [[[-x for x in row] for row in plane] for plane in t]


def t3_eq(t, u):
    return all(
        x == y
        for pt, pu in zip(t, u)
        for rt, ru in zip(pt, pu)
        for x, y in zip(rt, ru)
    )


def t3_is_zero(t):
    return all(x == 0 for plane in t for row in plane for x in row)


_PERM_SOURCES = {
    # new[p][q][r] = t[source slots]; derived from where each slot's content
    # moves under the permutation of tensor factors.
    "132": lambda t, p, q, r: t[r][p][q],  # slot 1 -> 3, 3 -> 2, 2 -> 1
    "123": lambda t, p, q, r: t[q][r][p],  # slot 1 -> 2, 2 -> 3, 3 -> 1
    "23": lambda t, p, q, r: t[p][r][q],
    "13": lambda t, p, q, r: t[r][q][p],
    "12": lambda t, p, q, r: t[q][p][r],
}


def permute3(t, sigma):
    """Permute the slots of an order-3 tensor.

    sigma is one of '132', '123', '23', '13', '12' naming the cycle applied to
    the tensor factors, e.g. '132' sends x(x)y(x)z to y(x)z(x)x and '123'
    sends it to z(x)x(x)y.
    """
    src = _PERM_SOURCES[str(sigma)]
    n = len(t)
    return [[[src(t, p, q, r) for r in range(n)] for q in range(n)] for p in range(n)]


# ---------------------------------------------------------------------------
# contraction engine


def valid_pattern(pattern):
    (p, q), (u, v) = pattern
    slots = {p, q, u, v}
    if not slots <= {1, 2, 3}:
        return False
    if p == q or u == v:
        return False
    shared = {p, q} & {u, v}
    return len(shared) == 1 and slots == {1, 2, 3}


def contract(r, s, pattern, product):
    """Place two order-2 tensors into three slots and multiply at the shared one.

    pattern is ((p, q), (u, v)): the first tensor's legs go to slots p and q,
    the second tensor's legs to slots u and v; exactly one slot is shared and
    all three slots are covered.  At the shared slot the two legs are combined
    with `product` (a structure-constant cube c[i][j][k]), the FIRST tensor's
    leg being the left multiplicand.  The convention extends the printed
    two-index placement formulas uniquely.
    """
    if not valid_pattern(pattern):
        raise ValueError("invalid contraction pattern %r" % (pattern,))
    n = len(r)
    if len(s) != n or len(product) != n:
        raise ValueError("dimension mismatch in contract")
    (p, q), (u, v) = pattern
    shared = ({p, q} & {u, v}).pop()
    out = zeros3(n)
    for i1 in range(n):
        r_row = r[i1]
        for i2 in range(n):
            a = r_row[i2]
            if not a:
                continue
            f = i1 if p == shared else i2
            for j1 in range(n):
                s_row = s[j1]
                for j2 in range(n):
                    b = s_row[j2]
                    if not b:
                        continue
                    g = j1 if u == shared else j2
                    col = product[f][g]
                    ab = a * b
                    idx = [0, 0, 0]
                    if p != shared:
                        idx[p - 1] = i1
                    if q != shared:
                        idx[q - 1] = i2
                    if u != shared:
                        idx[u - 1] = j1
                    if v != shared:
                        idx[v - 1] = j2
                    for k in range(n):
                        ck = col[k]
                        if ck:
                            idx[shared - 1] = k
                            out[idx[0]][idx[1]][idx[2]] += ab * ck
    return out
