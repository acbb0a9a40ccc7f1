"""Seeded random instances: codes, multigraphs and set systems, plus their demi-matroids."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .codes import LinearCode, code_demimatroid
from .core import DemiMatroid, GroundSet, dual, supplement
from .gf import make_field
from .graphs import Multigraph, cycle_matroid
from .matroid import Matroid, to_demimatroid, uniform_matroid, vamos
from .transversal import SetSystem, transversal_matroid

CODE_FIELDS = ((2, 1), (3, 1), (2, 2))


def random_code(rng: random.Random, p: int = 2, m: int = 1, n: int | None = None,
                rows: int | None = None) -> LinearCode:
    F = make_field(p, m)
    n = rng.randint(1, 10) if n is None else n
    rows = rng.randint(0, n) if rows is None else rows
    return LinearCode.from_rows(F, [[rng.randrange(F.q) for _ in range(n)] for _ in range(rows)], n)


def random_multigraph(rng: random.Random, max_edges: int = 10, max_vertices: int = 6) -> Multigraph:
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(0, max_edges)
    edges = []
    for _ in range(ne):
        u = rng.randrange(nv)
        # loops stay rare so that most instances have interesting cycles
        v = u if rng.random() < 0.08 else rng.randrange(nv)
        edges.append((u, v))
    return Multigraph(nv, tuple(edges))


def random_set_system(rng: random.Random, max_n: int = 8, max_sets: int = 6) -> SetSystem:
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_sets)
    sets = []
    for _ in range(m):
        if sets and rng.random() < 0.15:
            sets.append(rng.choice(sets))  # exercise multiset semantics
        else:
            sets.append(sum(1 << e for e in range(n) if rng.random() < 0.35))
    return SetSystem(GroundSet(n), tuple(sets))


@dataclass(frozen=True)
class Instance:
    name: str
    demimatroid: DemiMatroid


def closure_under_involutions(name: str, D: DemiMatroid) -> list[Instance]:
    """``D``, its dual, its supplement, and the dual of its supplement."""
    Db = supplement(D)
    return [Instance(name, D), Instance(f"{name}*", dual(D)),
            Instance(f"{name}~", Db), Instance(f"{name}~*", dual(Db))]


def base_matroids(seed: int, codes: int = 60, graphs: int = 40, systems: int = 30) -> Iterator[tuple[str, object, Matroid]]:
    """Yield ``(name, source, matroid)``; ``source`` is the code, graph or set system."""
    from .codes import vector_matroid

    rng = random.Random(seed)
    for i in range(codes):
        p, m = CODE_FIELDS[i % len(CODE_FIELDS)]
        C = random_code(rng, p, m)
        yield f"code{i}/GF({p ** m})", C, vector_matroid(C)
    for i in range(graphs):
        G = random_multigraph(rng)
        yield f"graph{i}", G, cycle_matroid(G)
    for i in range(systems):
        A = random_set_system(rng)
        yield f"setsystem{i}", A, transversal_matroid(A)


def demimatroid_corpus(seed: int = 0, codes: int = 60, graphs: int = 40, systems: int = 30) -> list[Instance]:
    """Random demi-matroids closed under dual and supplement (four per base instance).

    Codes contribute ``(E, rho_C, rho_{C-perp})`` built from the dual code; graphs
    and set systems contribute ``(E, rho, rho*)``.
    """
    out: list[Instance] = []
    for name, source, M in base_matroids(seed, codes, graphs, systems):
        D = code_demimatroid(source) if isinstance(source, LinearCode) else to_demimatroid(M)
        out.extend(closure_under_involutions(name, D))
    for name, M in fixed_matroids():
        out.extend(closure_under_involutions(name, to_demimatroid(M)))
    return out


def fixed_matroids() -> list[tuple[str, Matroid]]:
    """Small named matroids included in every corpus run."""
    from .graphs import complete_graph, four_cycle_with_chord
    from .transversal import example_set_system

    return [
        ("vamos", vamos()),
        ("U(2,4)", uniform_matroid(4, 2)),
        ("U(1,3)", uniform_matroid(3, 1)),
        ("U(0,2)", uniform_matroid(2, 0)),
        ("free3", uniform_matroid(3, 3)),
        ("example-graph", cycle_matroid(four_cycle_with_chord())),
        ("K4", cycle_matroid(complete_graph(4))),
        ("example-setsystem", transversal_matroid(example_set_system())),
    ]
