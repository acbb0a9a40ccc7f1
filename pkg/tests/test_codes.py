import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weiduality.bits import popcounts
from weiduality.codes import (
    LinearCode,
    check_dimension_identity,
    code_demimatroid,
    code_support,
    code_wei_sets,
    column_rank_table,
    dual_code,
    gaussian_binomial,
    ghw,
    ghw_by_codewords,
    ghw_by_subcodes,
    example_code,
    puncture,
    shorten,
)
from weiduality.core import audit, feature_sets
from weiduality.gf import make_field


def test_example_code():
    C = example_code()
    assert C.k == 3 and C.n == 5
    assert dual_code(C).k == 2
    h = ghw(C)
    assert h.d == (2, 3, 5) and h.d_perp == (2, 5)
    assert h.U == (2, 3, 5) and h.V == (1, 4)


def test_codeword_route_agrees():
    C = example_code()
    assert ghw_by_codewords(C) == ghw_by_subcodes(C) == (2, 3, 5)


def test_demimatroid_sets_match_code_sets():
    D = code_demimatroid(example_code())
    fs = feature_sets(D)
    assert fs.S == (2, 3, 5) and fs.T == (1, 4)
    assert all(audit(D).values())


def test_repetition_code():
    C = LinearCode.from_rows(make_field(2), [[1, 1, 1]])
    h = ghw(C)
    assert h.d == (3,) and h.d_perp == (2, 3)


def test_gf5_code():
    C = LinearCode.from_rows(make_field(5), [[1, 0, 1, 1], [0, 1, 1, 2]])
    assert ghw(C).d == (3, 4)


def test_zero_code():
    C = LinearCode.from_rows(make_field(2), np.zeros((0, 3), dtype=int), 3)
    h = ghw(C)
    assert h.d == () and h.U == () and h.V == (1, 2, 3)


def test_puncture_and_shorten():
    C = example_code()
    x = 0b11000
    assert puncture(C, x).k == 2 and shorten(C, x).k == 1
    assert all(check_dimension_identity(C, x) for x in range(32))
    assert code_support(C) == 0b11111


def test_gaussian_binomial():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(4, 2, 3) == 130


def test_dual_of_dual():
    C = example_code()
    assert dual_code(dual_code(C)).same_space(C)


codes = st.tuples(st.sampled_from([(2, 1), (3, 1), (2, 2)]), st.integers(1, 3), st.integers(2, 6)).flatmap(
    lambda t: st.tuples(st.just(t[0]), st.just(t[2]),
                        st.lists(st.lists(st.integers(0, t[0][0] ** t[0][1] - 1), min_size=t[2], max_size=t[2]),
                                 min_size=t[1], max_size=t[1])))


@settings(max_examples=40, deadline=None)
@given(codes)
def test_random_codes(data):
    (p, m), n, rows = data
    F = make_field(p, m)
    C = LinearCode.from_rows(F, rows, n)
    Cd = dual_code(C)
    assert C.k + Cd.k == n
    rho, rho_perp = column_rank_table(C), column_rank_table(Cd)
    masks = np.arange(1 << n)
    assert np.array_equal(popcounts(n) - C.k + rho[(1 << n) - 1 - masks], rho_perp)
    h = ghw(C, oracle=True)
    assert code_wei_sets(C).ok
    assert h.d == ghw_by_codewords(C)
    # generalized Singleton bound and strict increase
    assert all(d <= n - C.k + i for i, d in enumerate(h.d, 1))
    assert all(a < b for a, b in zip(h.d, h.d[1:]))
