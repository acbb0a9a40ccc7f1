import numpy as np
import pytest

from weiduality.bits import indices_from_mask, iter_bits, mask_from_indices, masks_by_popcount, popcounts
from weiduality.core import (
    GroundSet,
    audit,
    bar,
    build_demimatroid,
    check_partition,
    dual,
    feature_sets,
    is_matroid_like,
    profiles,
    singleton_check,
    supplement,
    verify_wei,
)
from weiduality.errors import CapExceeded, DViolation, RViolation, SizeError

# n = 3, s = 1 only on E; t(X) = |X| - 1 on non-empty X
S3 = [0, 0, 0, 0, 0, 0, 0, 1]
T3 = [0, 0, 0, 1, 0, 1, 1, 2]


def cardinality(n):
    return popcounts(n).tolist()


def test_bit_helpers():
    assert mask_from_indices([0, 2]) == 0b101
    assert indices_from_mask(0b1010) == [1, 3]
    assert list(iter_bits(0b1010)) == [2, 8]
    assert popcounts(3).tolist() == [0, 1, 1, 2, 1, 2, 2, 3]
    assert [int(popcounts(3)[m]) for m in masks_by_popcount(3)] == [0, 1, 1, 1, 2, 2, 2, 3]


def test_ground_set_labels():
    g = GroundSet(3, ("x", "y", "z"))
    assert g.format(0b101) == "{x,z}"
    with pytest.raises(SizeError):
        GroundSet(2, ("a", "a"))


def test_three_element_values():
    D = build_demimatroid(3, S3, T3)
    assert D.k == 1
    p = profiles(D)
    assert p.sigma == (0, 3)
    assert p.smax == (2, 3)
    assert p.tau == (0, 2, 3)
    assert p.tmax == (1, 2, 3)
    fs = feature_sets(D)
    assert (fs.S, fs.T, fs.U, fs.V) == ((1,), (2, 3), (3,), (1, 2))
    assert not is_matroid_like(D)


def test_matroid_pair_is_demimatroid():
    # free matroid on 2 elements with its dual (the zero rank function)
    D = build_demimatroid(2, cardinality(2), [0, 0, 0, 0])
    assert D.k == 2
    assert is_matroid_like(D)
    assert verify_wei(D).partition_ok


def test_dual_swaps_and_supplement_formula():
    D = build_demimatroid(3, S3, T3)
    Ds = dual(D)
    assert np.array_equal(Ds.s, D.t) and np.array_equal(Ds.t, D.s)
    Db = supplement(D)
    expected = [D.s[-1] - D.s[7 ^ x] for x in range(8)]
    assert Db.s.tolist() == expected
    assert bar(bar(D.s)).tolist() == S3


def test_audit_all_true_on_example():
    assert all(audit(build_demimatroid(3, S3, T3)).values())


def test_singleton_bounds_hold():
    D = build_demimatroid(3, S3, T3)
    assert all(r.satisfied for r in singleton_check(D))


def test_r_violation_reports_witness():
    with pytest.raises(RViolation):
        build_demimatroid(2, [0, 1, 0, 0], [0, 1, 1, 1])


def test_r_violation_cardinality():
    with pytest.raises(RViolation):
        build_demimatroid(1, [0, 2], [0, 0])


def test_d_violation():
    with pytest.raises(DViolation):
        build_demimatroid(2, cardinality(2), cardinality(2))


def test_table_length_checked():
    with pytest.raises(SizeError):
        build_demimatroid(2, [0, 1, 1], [0, 0, 0, 0])


def test_table_cap():
    with pytest.raises(CapExceeded):
        build_demimatroid(21, [0], [0])


def test_partition_report_lists_violations():
    r = check_partition("X", (1, 2), (2,), 3)
    assert not r.ok
    assert r.violations


def test_empty_ground_set():
    D = build_demimatroid(0, [0], [0])
    fs = feature_sets(D)
    assert fs == type(fs)((), (), (), ())
    assert all(audit(D).values())
