import random

import numpy as np
import pytest

from weiduality.corpus import random_set_system
from weiduality.errors import SizeError
from weiduality.core import GroundSet
from weiduality.transversal import (
    ErratumWarning,
    SetSystem,
    exhaustive_matching_ranks,
    is_plug,
    mp_sequences,
    example_set_system,
    plugs,
    transversal_matroid,
    transversal_rank,
)


def test_matching_rank_small():
    A = SetSystem.from_labels("abc", [["a", "b"], ["a"]])
    assert transversal_rank(A, 0b011) == 2
    assert transversal_rank(A, 0b111) == 2
    assert transversal_rank(A, 0b100) == 0


def test_example_plugs_and_sequences():
    A = example_set_system()
    assert sorted(plugs(A).as_indices()) == [[0, 1, 2], [4]]
    with pytest.warns(ErratumWarning):
        seq = mp_sequences(A)
    assert seq.m == (1, 2, 4) and seq.p == (1, 4)
    assert seq.warnings


def test_no_warning_for_other_systems():
    import warnings

    A = SetSystem.from_labels("abc", [["a"], ["b", "c"]])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        seq = mp_sequences(A)
    assert seq.partition.ok and seq.warnings == ()


def test_plug_definition():
    A = example_set_system()
    assert is_plug(A, 0b10000)  # e lies in no set
    assert not is_plug(A, 0b00011)


@pytest.mark.parametrize("seed", range(10))
def test_matching_oracle(seed):
    A = random_set_system(random.Random(seed))
    fast = [transversal_rank(A, x) for x in range(1 << A.n)]
    assert exhaustive_matching_ranks(A).tolist() == fast
    assert transversal_matroid(A).table.tolist() == fast
    assert mp_sequences(A).partition.ok


def test_set_outside_ground():
    with pytest.raises(SizeError):
        SetSystem(GroundSet(2), (0b100,))
