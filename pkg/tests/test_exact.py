"""Exact scalar, matrix and tensor layer, with an independent contraction oracle."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prepoisson.exact import (
    apply_kron,
    contract,
    invert,
    mat_mul,
    mat_vec,
    permute3,
    rat,
    scalar_str,
    solve_linear,
    t3_eq,
    transpose,
    valid_pattern,
    zeros3,
)

# The eleven two-tensor placement patterns used by the equation tensors:
# ((p, q), (u, v)) puts the first tensor's legs at slots p, q and the second
# tensor's legs at slots u, v, multiplying at the single shared slot.
PLACEMENT_PATTERNS = [
    ((1, 2), (1, 3)),
    ((2, 3), (1, 2)),
    ((3, 1), (2, 3)),
    ((2, 1), (1, 3)),
    ((3, 2), (2, 1)),
    ((3, 1), (3, 2)),
    ((1, 3), (3, 2)),
    ((2, 3), (2, 1)),
    ((2, 1), (3, 1)),
    ((2, 3), (1, 3)),
    ((1, 2), (3, 1)),
]


def naive_contract(r, s, pattern, product):
    """Slow five-loop re-derivation of contract, straight from the summation."""
    n = len(r)
    (p, q), (u, v) = pattern
    shared = ({p, q} & {u, v}).pop()
    out = zeros3(n)
    for a1 in range(n):
        for b1 in range(n):
            for a2 in range(n):
                for b2 in range(n):
                    coeff = r[a1][b1] * s[a2][b2]
                    if not coeff:
                        continue
                    first = a1 if p == shared else b1
                    second = a2 if u == shared else b2
                    for k in range(n):
                        ck = product[first][second][k]
                        if not ck:
                            continue
                        idx = {p: a1, q: b1}
                        idx[u] = a2
                        idx[v] = b2
                        idx[shared] = k
                        out[idx[1]][idx[2]][idx[3]] += coeff * ck
    return out


def rational_scalars():
    return st.one_of(
        st.integers(min_value=-5, max_value=5),
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
    ).map(lambda x: int(x) if isinstance(x, Fraction) and x.denominator == 1 else x)


def grid_strategy(n):
    return st.lists(
        st.lists(rational_scalars(), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )


def cube_strategy(n):
    return st.lists(grid_strategy(n), min_size=n, max_size=n)


def test_rational_parsing():
    assert rat("7") == 7
    assert rat("-3") == -3
    assert rat("-3/4") == Fraction(-3, 4)
    assert rat("6/3") == 2 and isinstance(rat("6/3"), int)
    with pytest.raises(ValueError):
        rat("1/0")
    assert scalar_str(Fraction(3, 4)) == "3/4"
    assert scalar_str(-2) == "-2"


def test_placement_patterns_are_the_valid_ones():
    assert len(PLACEMENT_PATTERNS) == 11
    for pattern in PLACEMENT_PATTERNS:
        assert valid_pattern(pattern)
    with pytest.raises(ValueError):
        contract([[1]], [[1]], ((1, 2), (1, 2)), [[[1]]])


@settings(max_examples=25, deadline=None)
@given(st.data())
@pytest.mark.parametrize("n", [2, 3, 4])
def test_contract_matches_naive_oracle(n, data):
    r = data.draw(grid_strategy(n))
    s = data.draw(grid_strategy(n))
    cube = data.draw(cube_strategy(n))
    for pattern in PLACEMENT_PATTERNS:
        assert t3_eq(contract(r, s, pattern, cube), naive_contract(r, s, pattern, cube))


def test_permute3_on_rank_one_tensors():
    # sigma '132' must send x(x)y(x)z to y(x)z(x)x; check on basis tensors.
    n = 3
    for a, b, c in itertools.product(range(n), repeat=3):
        t = zeros3(n)
        t[a][b][c] = 1
        expected = {
            "132": (b, c, a),
            "123": (c, a, b),
            "12": (b, a, c),
            "13": (c, b, a),
            "23": (a, c, b),
        }
        for sigma, (p, q, r) in expected.items():
            out = permute3(t, sigma)
            assert out[p][q][r] == 1
            assert sum(x for plane in out for row in plane for x in row) == 1


def test_permute3_cycles_compose():
    n = 3
    t = [[[(i + 1) * (j + 2) * (k + 3) for k in range(n)] for j in range(n)]
         for i in range(n)]
    assert t3_eq(permute3(permute3(t, "123"), "132"), t)
    assert t3_eq(permute3(permute3(t, "12"), "12"), t)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_invert_oracle(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    m = data.draw(grid_strategy(n))
    inverse, kernel = invert(m)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if inverse is not None:
        assert mat_mul(m, inverse) == ident
        assert mat_mul(inverse, m) == ident
    else:
        assert kernel
        for v in kernel:
            assert mat_vec(m, v) == [0] * n


def test_solve_linear_exact():
    m = [[2, 1], [1, 1]]
    assert solve_linear(m, [3, 2]) == [1, 1]
    assert solve_linear([[2]], [1]) == [Fraction(1, 2)]
    with pytest.raises(ValueError):
        solve_linear([[1, 1], [1, 1]], [1, 0])


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_apply_kron_matches_elementwise(data):
    n = data.draw(st.integers(min_value=1, max_value=3))
    m1 = data.draw(grid_strategy(n))
    m2 = data.draw(grid_strategy(n))
    t = data.draw(grid_strategy(n))
    out = apply_kron(m1, m2, t)
    for i in range(n):
        for j in range(n):
            total = 0
            for p in range(n):
                for q in range(n):
                    total += m1[i][p] * m2[j][q] * t[p][q]
            assert out[i][j] == total


def test_transpose_is_involutive():
    r = [[1, 2], [3, 4]]
    assert transpose(transpose(r)) == r
