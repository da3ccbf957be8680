import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from quiverrep import _core
from quiverrep.fields import GF, QQ, Field
from quiverrep.matrix import Matrix, column_space, in_column_span, quotient_map


def test_field_construction_checks_primality():
    GF(2)
    GF(5)
    GF(7919)
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)


def test_fields_are_value_comparable():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ == Field(None)
    assert QQ != GF(2)


def test_scalar_parse_and_format():
    f5 = GF(5)
    assert f5.parse("-1") == 4
    assert f5.parse("7") == 2
    assert f5.format(3) == "3"
    assert QQ.parse("2/4") == QQ.parse("1/2")
    assert QQ.format(QQ.parse("-3/6")) == "-1/2"
    assert QQ.format(QQ.canon(4)) == "4"


def test_rank_identity_gf2():
    assert Matrix.identity(GF(2), 3).rank() == 3


def test_rank_zero_matrix_rationals():
    assert Matrix.zeros(QQ, 2, 5).rank() == 0


def test_rank_dependent_rows_rationals():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    assert m.rank() == 1


def test_nullspace_of_injective_map_is_empty():
    assert Matrix.identity(GF(5), 4).nullspace_basis() == []


def test_nullspace_of_zero_row_matrix_is_standard_basis():
    m = Matrix.zeros(GF(3), 0, 3)
    basis = m.nullspace_basis()
    assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_nullspace_single_relation_gf2():
    # all four vectors of GF(2)^2 leave exactly one kernel line
    m = Matrix.from_rows(GF(2), [[1, 1]])
    assert m.nullspace_basis() == [(1, 1)]


def test_solve_identity():
    m = Matrix.identity(GF(7), 3)
    assert m.solve((1, 5, 6)) == (1, 5, 6)


def test_solve_inconsistent_system():
    m = Matrix.from_rows(QQ, [[1], [0]])
    assert m.solve((0, 1)) is None


def test_solve_division():
    m = Matrix.from_rows(QQ, [[2]])
    assert m.solve((1,)) == (QQ.parse("1/2"),)


def test_solve_rejects_bad_rhs_length():
    m = Matrix.identity(GF(2), 2)
    with pytest.raises(ValueError):
        m.solve((1,))


def test_invert_empty_matrix():
    m = Matrix.zeros(QQ, 0, 0)
    assert m.invert() == m


def test_invert_self_inverse_gf2():
    m = Matrix.from_rows(GF(2), [[1, 1], [0, 1]])
    w = m.invert()
    assert w == m
    assert m @ w == Matrix.identity(GF(2), 2)


def test_invert_singular_is_none():
    m = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    assert m.invert() is None


def test_invert_rectangular_is_none():
    assert Matrix.zeros(QQ, 2, 3).invert() is None


def _random_matrix(field, rng, rows, cols):
    return Matrix.from_rows(
        field, [[field.sample(rng) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


@pytest.mark.parametrize("field", [GF(2), GF(5), QQ])
def test_rank_nullity_and_solve_consistency(field):
    rng = random.Random(7)
    for _ in range(60):
        rows, cols = rng.randrange(0, 5), rng.randrange(0, 5)
        m = _random_matrix(field, rng, rows, cols)
        basis = m.nullspace_basis()
        assert m.rank() + len(basis) == cols
        zero = tuple([field.zero()] * rows)
        for v in basis:
            assert m.apply(v) == zero
        x = tuple(field.sample(rng) for _ in range(cols))
        b = m.apply(x)
        sol = m.solve(b)
        assert sol is not None
        assert m.apply(sol) == b


@pytest.mark.parametrize("field", [GF(2), GF(5), QQ])
def test_invert_round_trip(field):
    rng = random.Random(11)
    checked = 0
    while checked < 20:
        n = rng.randrange(1, 5)
        m = _random_matrix(field, rng, n, n)
        w = m.invert()
        if w is None:
            assert m.rank() < n
            continue
        eye = Matrix.identity(field, n)
        assert m @ w == eye
        assert w @ m == eye
        checked += 1


def _brute_force_rank_gf2(m: Matrix) -> int:
    # largest independent column subset, checked by enumerating all combinations
    cols = [m.col(j) for j in range(m.cols)]
    best = 0
    for r in range(1, m.cols + 1):
        for subset in itertools.combinations(range(m.cols), r):
            independent = True
            for coeffs in itertools.product((0, 1), repeat=r):
                if not any(coeffs):
                    continue
                combo = [0] * m.rows
                for c, j in zip(coeffs, subset):
                    if c:
                        combo = [(a + b) % 2 for a, b in zip(combo, cols[j])]
                if not any(combo):
                    independent = False
                    break
            if independent:
                best = max(best, r)
    return best


def test_rank_matches_brute_force_on_all_small_gf2_matrices():
    f2 = GF(2)
    for rows in range(4):
        for cols in range(4):
            for bits in range(1 << (rows * cols)):
                flat = [(bits >> k) & 1 for k in range(rows * cols)]
                m = Matrix(f2, rows, cols, flat)
                assert m.rank() == _brute_force_rank_gf2(m)
                kernel = [v for v in itertools.product((0, 1), repeat=cols)
                          if all(x == 0 for x in m.apply(v))]
                assert len(kernel) == 2 ** len(m.nullspace_basis())
                for v in m.nullspace_basis():
                    assert v in kernel


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
    st.randoms(use_true_random=False),
)
def test_column_space_and_quotient_map_split_the_ambient_space(rows, cols, rnd):
    f = GF(5)
    m = _random_matrix(f, rnd, rows, cols)
    cs = column_space(m)
    assert cs.rank() == m.transpose().rank()
    for j in range(m.cols):
        assert in_column_span(cs, m.col(j))
    q = quotient_map(m)
    assert q.rows == rows - cs.cols
    if cs.cols:
        assert (q @ cs).is_zero()
    assert q.rank() == q.rows


def test_backends_agree_on_random_inputs():
    if not _core.HAVE_COMPILED:
        pytest.skip("compiled kernel not built")
    rng = random.Random(3)
    for _ in range(40):
        rows = rng.randrange(1, 8)
        cols = rng.randrange(1, 8)
        p = rng.choice([2, 3, 5, 1009])
        data = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        assert _core.compiled_rref_mod_p(data, p) == tuple(
            _core.py_rref_mod_p(data, p)
        ) or _core.compiled_rref_mod_p(data, p) == _core.py_rref_mod_p(data, p)


def test_matmul_zero_dimensional_edges():
    f = GF(3)
    a = Matrix.zeros(f, 0, 2)
    b = Matrix.zeros(f, 2, 3)
    assert (a @ b).rows == 0 and (a @ b).cols == 3
    c = Matrix.zeros(f, 3, 0)
    d = Matrix.zeros(f, 0, 2)
    prod = c @ d
    assert prod == Matrix.zeros(f, 3, 2)
