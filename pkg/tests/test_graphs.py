import numpy as np
import pytest

from weiduality.errors import BadParameters, SizeError
from weiduality.graphs import (
    Multigraph,
    bc_sequences,
    bonds,
    complete_bipartite,
    complete_graph,
    forest_rank,
    forest_rank_table,
    four_cycle_with_chord,
    graph_cycles,
    klm_closed_form,
    km_closed_form,
    max_subgraph_check,
)


def test_forest_rank_table_matches_union_find():
    G = Multigraph(4, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)))
    table = forest_rank_table(G)
    assert table.tolist() == [forest_rank(G, x) for x in range(1 << G.n)]


def test_loops_and_parallel_edges():
    G = Multigraph(2, ((0, 0), (0, 1), (0, 1)))
    assert forest_rank(G, 0b001) == 0
    cyc = sorted(graph_cycles(G).as_indices())
    assert cyc == [[0], [1, 2]]
    assert bonds(G).as_indices() == [[1, 2]]


def test_example_graph():
    G = four_cycle_with_chord()
    seq = bc_sequences(G)
    assert seq.b == (2, 4, 5) and seq.c == (3, 5)
    assert seq.U == (2, 4, 5) and seq.V == (1, 3)
    assert sorted(len(c) for c in bonds(G).as_indices()) == [2, 2, 3, 3, 3, 3]
    assert sorted(len(c) for c in graph_cycles(G).as_indices()) == [3, 3, 4]


def test_max_subgraph_check_example():
    out = max_subgraph_check(four_cycle_with_chord())
    assert out["ok"]


@pytest.mark.parametrize("m", [3, 4, 5])
def test_complete_graph_closed_form(m):
    seq = bc_sequences(complete_graph(m))
    assert (tuple(sorted(seq.b)), tuple(sorted(seq.c))) == km_closed_form(m)
    assert max_subgraph_check(complete_graph(m))["ok"]


@pytest.mark.parametrize("l,m", [(2, 1), (3, 2), (2, 2), (4, 3), (3, 3)])
def test_bipartite_closed_form(l, m):
    seq = bc_sequences(complete_bipartite(l, m))
    assert (tuple(sorted(seq.b)), tuple(sorted(seq.c))) == klm_closed_form(l, m)


def test_closed_form_parameters():
    with pytest.raises(BadParameters):
        klm_closed_form(2, 3)
    with pytest.raises(BadParameters):
        complete_graph(0)


def test_bad_edges():
    with pytest.raises(SizeError):
        Multigraph(2, ((0, 2),))
