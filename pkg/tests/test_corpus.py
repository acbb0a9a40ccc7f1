import random

from weiduality.core import audit
from weiduality.corpus import (
    closure_under_involutions,
    demimatroid_corpus,
    random_code,
    random_multigraph,
    random_set_system,
)
from weiduality.matroid import to_demimatroid, vamos


def test_generators_respect_limits():
    rng = random.Random(1)
    for _ in range(20):
        assert random_code(rng, 3).n <= 10
        assert random_multigraph(rng).n <= 10
        A = random_set_system(rng)
        assert A.n <= 8 and len(A.sets) <= 6


def test_corpus_is_seeded():
    a = demimatroid_corpus(seed=5, codes=6, graphs=4, systems=3)
    b = demimatroid_corpus(seed=5, codes=6, graphs=4, systems=3)
    assert [x.name for x in a] == [x.name for x in b]
    assert all(x.demimatroid == y.demimatroid for x, y in zip(a, b))


def test_involution_closure():
    group = closure_under_involutions("v", to_demimatroid(vamos()))
    assert len(group) == 4
    assert all(all(audit(x.demimatroid).values()) for x in group)


def test_other_seed_passes_audit():
    for inst in demimatroid_corpus(seed=11, codes=15, graphs=10, systems=8):
        assert all(audit(inst.demimatroid).values()), inst.name
