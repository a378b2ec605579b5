"""Shared test oracles, deliberately independent of the library internals.

Everything here recomputes from first principles: subset enumeration with
itertools, peeling by rescanning all survivors for the minimum score, and
direct edge sums.  Tests compare the package's optimized paths against
these.
"""

from __future__ import annotations

import itertools
import random

from negdsd import SignedGraph, build_signed_graph

TIE = 1e-12


def naive_induced(graph: SignedGraph, nodes) -> tuple[float, float]:
    node_set = set(nodes)
    wpos = wneg = 0.0
    for e in graph.edges:
        if e.u in node_set and e.v in node_set:
            wpos += e.wpos
            wneg += e.wneg
    return wpos, wneg


def naive_density(graph: SignedGraph, nodes) -> float:
    wpos, wneg = naive_induced(graph, nodes)
    return (wpos - wneg) / len(set(nodes))


def naive_objective(graph: SignedGraph, nodes, params) -> float:
    wpos, wneg = naive_induced(graph, nodes)
    k = len(set(nodes))
    return (wpos + params.lambda1 * k) / (params.risk_tolerance * wneg + params.lambda2 * k)


def naive_best(graph: SignedGraph, mode: str = "density", params=None):
    """Exhaustive optimum by plain subset enumeration; ties to lex-smallest."""
    best_value = None
    best_subset = None
    for size in range(1, graph.n + 1):
        for subset in itertools.combinations(range(graph.n), size):
            if mode == "density":
                value = naive_density(graph, subset)
            else:
                value = naive_objective(graph, subset, params)
            if (
                best_value is None
                or value > best_value + TIE
                or (abs(value - best_value) <= TIE and subset < best_subset)
            ):
                best_value, best_subset = value, subset
    return best_subset, best_value


def naive_peel(graph: SignedGraph, c: float) -> list[int]:
    """Peel by rescanning every survivor each round; ties to the smallest id."""
    alive = set(range(graph.n))
    pos = graph.positive_degrees()
    neg = graph.negative_degrees()
    sequence = []
    while alive:
        target = min(alive, key=lambda v: (c * pos[v] - neg[v], v))
        sequence.append(target)
        alive.remove(target)
        for e in graph.edges:
            if e.u == target and e.v in alive:
                pos[e.v] -= e.wpos
                neg[e.v] -= e.wneg
            elif e.v == target and e.u in alive:
                pos[e.u] -= e.wpos
                neg[e.u] -= e.wneg
    return sequence


def random_signed_graph(
    rng: random.Random,
    max_nodes: int = 12,
    weight_range: tuple[int, int] = (-3, 3),
    edge_probability: float = 0.5,
    allow_loops: bool = False,
) -> SignedGraph:
    """Random simple signed graph with integer net weights split by sign."""
    n = rng.randint(2, max_nodes)
    raw = []
    for u in range(n):
        for v in range(u if allow_loops else u + 1, n):
            if rng.random() < edge_probability:
                w = rng.randint(*weight_range)
                if w:
                    raw.append((u, v, float(max(w, 0)), float(max(-w, 0))))
    return build_signed_graph(raw, n=n)


def random_nonnegative_graph(
    rng: random.Random,
    max_nodes: int = 12,
    max_weight: int = 5,
    edge_probability: float = 0.5,
) -> SignedGraph:
    n = rng.randint(2, max_nodes)
    raw = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_probability:
                raw.append((u, v, float(rng.randint(1, max_weight)), 0.0))
    return build_signed_graph(raw, n=n)
