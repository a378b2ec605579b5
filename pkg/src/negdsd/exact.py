"""Exact densest-subgraph machinery for nonnegative weights.

The decision "is there a nonempty S with density >= g" reduces to one
minimum cut on the classic source/sink network: the source feeds each node
its weighted degree, each node pays 2g toward the sink, and every edge is
bidirected at its weight.  The source side of the cut with the *largest*
source side answers the >= query and doubles as the witness.

Weights are scaled to integers once per graph so every cut is computed in
exact arithmetic: integral weights scale by 1, dyadic rationals by their
common denominator (up to 2**32), anything else falls back to fixed-point
at 1e-9 and marks results as inexact.

``exact_dsd`` iterates the decision at the current best density until the
density stops improving, which terminates because each step strictly
increases a rational with denominator at most n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    DsdResult,
    ObjectiveParams,
    SignedGraph,
    TIE_TOLERANCE,
    WeightedGraph,
    build_signed_graph,
    objective_f,
    objective_upper_bound,
    tilde_weights,
)
from .errors import (
    BadParametersError,
    EmptySetError,
    NegativeWeightError,
    TooLargeError,
)
from .flow import Dinic

MAX_BRUTE_FORCE_NODES = 22
MAX_SEARCH_ITERATIONS = 64
_MAX_EXACT_SCALE = 2**32
_FIXED_POINT_SCALE = 10**9


@dataclass(frozen=True, slots=True)
class DecisionOutcome:
    """Answer to a density >= g query; the witness achieves it when feasible."""

    feasible: bool
    witness: frozenset[int] | None = None


@dataclass(frozen=True, slots=True)
class SearchTrace:
    """Bracket history of a binary search on the ratio objective."""

    iterations: int
    lo_history: list[float]
    hi_history: list[float]
    exact: bool

    @property
    def lo(self) -> float:
        return self.lo_history[-1]

    @property
    def hi(self) -> float:
        return self.hi_history[-1]


def _scale_to_integers(weights: list[float]) -> tuple[list[int], int, bool]:
    """Return (scaled ints, scale factor, exact flag) for a weight list."""
    if all(w == int(w) for w in weights):
        return [int(w) for w in weights], 1, True
    fracs = [Fraction(w) for w in weights]  # floats are exact dyadic rationals
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // math.gcd(denom, f.denominator)
        if denom > _MAX_EXACT_SCALE:
            return [round(w * _FIXED_POINT_SCALE) for w in weights], _FIXED_POINT_SCALE, False
    return [int(f * denom) for f in fracs], denom, True


def _validate_nonnegative(graph: WeightedGraph) -> None:
    for u, v, w in graph.edges:
        if not math.isfinite(w):
            raise BadParametersError(f"edge ({u}, {v}) has non-finite weight")
        if w < 0:
            raise NegativeWeightError(f"edge ({u}, {v}) has negative weight {w}")


def _max_density_side(
    n: int,
    int_edges: list[tuple[int, int, int]],
    int_deg: list[int],
    guess: Fraction,
) -> list[int]:
    """Largest S maximizing w(S) - guess*|S| (may be empty); guess >= 0."""
    a, b = guess.numerator, guess.denominator
    net = Dinic(n + 2)
    source, sink = n, n + 1
    for u in range(n):
        if int_deg[u] > 0:
            net.add_edge(source, u, int_deg[u] * b)
        if a > 0:
            net.add_edge(u, sink, 2 * a)
    for u, v, w in int_edges:
        if u != v and w > 0:  # loops act through degrees only
            net.add_edge(u, v, w * b)
            net.add_edge(v, u, w * b)
    net.max_flow(source, sink)
    reaches_sink = net.residual_sink_side(sink)
    return [u for u in range(n) if u not in reaches_sink]


def _prepare_integer_graph(
    graph: WeightedGraph,
) -> tuple[list[tuple[int, int, int]], list[int], int, bool]:
    weights = [w for _, _, w in graph.edges]
    int_weights, scale, exact = _scale_to_integers(weights)
    int_edges = [(u, v, w) for (u, v, _), w in zip(graph.edges, int_weights)]
    int_deg = [0] * graph.n
    for u, v, w in int_edges:
        int_deg[u] += w
        int_deg[v] += w  # loops counted twice
    return int_edges, int_deg, scale, exact


def dsd_decision(graph: WeightedGraph, g: float) -> DecisionOutcome:
    """Decide whether some nonempty S has density w(S)/|S| >= g.

    Exact for weights that scale to integers; otherwise the graph is rounded
    at 1e-9 resolution first.  Raises :class:`NegativeWeightError` on any
    negative weight.
    """
    _validate_nonnegative(graph)
    if graph.n == 0:
        return DecisionOutcome(False, None)
    if g <= 0:
        # Any set has nonnegative density here, so the whole node set works.
        return DecisionOutcome(True, frozenset(range(graph.n)))
    int_edges, int_deg, scale, _ = _prepare_integer_graph(graph)
    witness = _max_density_side(graph.n, int_edges, int_deg, Fraction(g) * scale)
    if witness:
        return DecisionOutcome(True, frozenset(witness))
    return DecisionOutcome(False, None)


def _induced_weight(edges: list[tuple[int, int, int]], nodes: set[int]) -> int:
    return sum(w for u, v, w in edges if u in nodes and v in nodes)


def exact_dsd(graph: WeightedGraph) -> DsdResult:
    """True maximizer of w(S)/|S| over nonempty S, via iterated min cuts.

    ``exact`` is True when the weights scaled to integers exactly, otherwise
    the answer is correct for the 1e-9 fixed-point rounding of the input.
    """
    _validate_nonnegative(graph)
    if graph.n == 0:
        raise EmptySetError("graph has no nodes")
    int_edges, int_deg, _, exact = _prepare_integer_graph(graph)
    total = sum(w for _, _, w in int_edges)
    best = list(range(graph.n))
    density = Fraction(total, graph.n)
    for _ in range(10 * graph.n + 10):
        side = _max_density_side(graph.n, int_edges, int_deg, density)
        if not side:
            break  # defensive; the current best set always sits in some optimal side
        side_density = Fraction(_induced_weight(int_edges, set(side)), len(side))
        if side_density <= density:
            best = side
            break
        best, density = side, side_density
    nodes = frozenset(best)
    w_float = sum(w for u, v, w in graph.edges if u in nodes and v in nodes)
    return DsdResult(
        nodes=nodes,
        net_density=w_float / len(nodes),
        wpos_total=w_float,
        wneg_total=0.0,
        exact=exact,
        algorithm="exact_dsd",
    )


def brute_force(
    graph: SignedGraph,
    mode: str = "density",
    params: ObjectiveParams | None = None,
) -> DsdResult:
    """Exhaustive maximizer over all nonempty subsets (n <= 22).

    Ties within ``TIE_TOLERANCE`` resolve to the lexicographically smallest
    sorted node tuple.  This is the reference oracle the rest of the test
    suite leans on, so it stays independent of every solver above.
    """
    if mode not in ("density", "objective"):
        raise BadParametersError(f"mode must be 'density' or 'objective', got {mode!r}")
    if mode == "objective" and params is None:
        raise BadParametersError("objective mode needs ObjectiveParams")
    n = graph.n
    if n == 0:
        raise EmptySetError("graph has no nodes")
    if n > MAX_BRUTE_FORCE_NODES:
        raise TooLargeError(f"brute force capped at n={MAX_BRUTE_FORCE_NODES}, got {n}")
    masks = np.arange(1, 2**n, dtype=np.int64)
    sizes = _popcount(masks)
    wpos = np.zeros(masks.shape[0], dtype=np.float64)
    wneg = np.zeros(masks.shape[0], dtype=np.float64)
    for e in graph.edges:
        both = ((masks >> e.u) & (masks >> e.v) & 1).astype(bool)
        if e.wpos:
            wpos[both] += e.wpos
        if e.wneg:
            wneg[both] += e.wneg
    if mode == "density":
        values = (wpos - wneg) / sizes
    else:
        values = (wpos + params.lambda1 * sizes) / (params.risk_tolerance * wneg + params.lambda2 * sizes)
    top = values.max()
    tied = np.flatnonzero(values >= top - TIE_TOLERANCE)
    best_mask = min((int(masks[i]) for i in tied), key=_mask_nodes)
    nodes = frozenset(_mask_nodes(best_mask))
    return DsdResult.evaluate(
        graph,
        nodes,
        algorithm="brute_force",
        exact=True,
        params=params if mode == "objective" else None,
    )


_POP16 = None


def _popcount(masks: np.ndarray) -> np.ndarray:
    global _POP16
    if _POP16 is None:
        _POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int32)
    return _POP16[masks & 0xFFFF] + _POP16[(masks >> 16) & 0xFFFF]


def _mask_nodes(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def binary_search_objective(
    graph: SignedGraph,
    params: ObjectiveParams,
    eps: float = 1e-9,
) -> tuple[DsdResult, SearchTrace]:
    """Maximize the ratio objective by binary search on its value.

    Each query reweights the graph at the midpoint and asks for a density
    threshold.  While the reweighted graph stays nonnegative the query is
    answered exactly by :func:`dsd_decision`; once negative weights appear
    the query falls back to peeling, whose "no" answers are not certificates,
    so the result is flagged inexact.  The returned set is always a real
    witness re-scored under the true objective, hence never an overestimate.
    """
    from .peeling import DEFAULT_C_LIST, PeelScoring, c_sweep  # local import to avoid a cycle

    if eps <= 0:
        raise BadParametersError(f"eps must be > 0, got {eps}")
    if graph.n == 0:
        raise EmptySetError("graph has no nodes")

    best_nodes = frozenset([0])
    best_f = objective_f(graph, best_nodes, params)
    for v in range(1, graph.n):
        f_v = objective_f(graph, [v], params)
        if f_v > best_f:
            best_f, best_nodes = f_v, frozenset([v])

    lo = best_f
    hi = max(objective_upper_bound(graph, params), lo)
    exact = True
    lo_history = [lo]
    hi_history = [hi]
    iterations = 0
    while hi - lo > eps * max(1.0, hi) and iterations < MAX_SEARCH_ITERATIONS:
        iterations += 1
        q = 0.5 * (lo + hi)
        threshold = q * params.lambda2 - params.lambda1
        reweighted = tilde_weights(graph, q, params.risk_tolerance)
        if reweighted.all_nonnegative:
            outcome = dsd_decision(reweighted, threshold)
            feasible, witness = outcome.feasible, outcome.witness
        else:
            signed = build_signed_graph(
                [(u, v, w, 0.0) if w >= 0 else (u, v, 0.0, -w) for u, v, w in reweighted.edges],
                n=graph.n,
            )
            candidate = c_sweep(signed, DEFAULT_C_LIST, PeelScoring())
            feasible = candidate.net_density >= threshold
            witness = candidate.nodes if feasible else None
            if not feasible:
                exact = False  # a peeling "no" is not a certificate
        if feasible:
            lo = q
            f_w = objective_f(graph, witness, params)
            if f_w > best_f:
                best_f, best_nodes = f_w, frozenset(witness)
        else:
            hi = q
        lo_history.append(lo)
        hi_history.append(hi)
    if hi - lo > eps * max(1.0, hi):
        exact = False  # iteration cap hit before the bracket closed
    result = DsdResult.evaluate(
        graph,
        best_nodes,
        algorithm="binary_search",
        exact=exact,
        params=params,
    )
    trace = SearchTrace(iterations, lo_history, hi_history, exact)
    return result, trace
