"""Per-graph polynomial invariants computed by counting colorings.

For a fixed number of colors q every map f: {1..n} -> {1..q} is visited and
the edges are classified:

* directed edge [a, b]: *up* if f(b) > f(a) (weight y), *down* if
  f(b) < f(a) (weight z);
* undirected edge {a, b}: weight y if f(a) != f(b).

Loops are never up, down or bichromatic.  Summing the weights over all q^n
maps gives the Bernardi polynomial (or the full chromatic polynomial)
evaluated at that q.  Both have q-degree at most n, so n + 1 integer values
of q determine them; one more value is computed as a consistency check.

Subgraphs keep all n vertices.  This matters for the subgraph expansions
below: an isolated vertex contributes a free color (a factor of q).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .graphs import (
    DirectedGraph,
    Graph,
    GuardError,
    UndirectedGraph,
    betti0,
    subgraph,
)
from .poly import (
    POTTS_VARS,
    MultiPoly,
    interpolate_q,
    partial_eval,
    potts_substitute,
    truncate_top,
)

DEFAULT_MAX_STEPS = 10**9


@dataclass(frozen=True)
class ColoringStats:
    """Histogram of colorings for one q: ``counts[(i, j)]`` is the number of
    maps with i up edges and j down edges (j is always 0 when undirected)."""

    q: int
    n: int
    k: int
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def coloring_steps(n: int) -> int:
    """Colorings visited to interpolate one n-vertex invariant (q = 1..n+2)."""
    return sum(q**n for q in range(1, n + 3))


def check_step_guard(steps: int, max_steps: int | None, what: str) -> None:
    limit = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    if steps > limit:
        raise GuardError(
            f"{what} needs about {steps} coloring steps, above the limit of "
            f"{limit} (raise --max-steps to allow)"
        )


def coloring_stats(g: Graph, q: int) -> ColoringStats:
    """Odometer over all q^n colorings; only edges at the changed vertices are
    re-classified on each step."""
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")
    n = g.n
    directed = g.oriented
    edges = [(a, b) for a, b in g.edges if a != b]
    incident = [[] for _ in range(n + 1)]
    for idx, (a, b) in enumerate(edges):
        incident[a].append(idx)
        incident[b].append(idx)
    color = [0] * (n + 1)
    state = [0] * len(edges)  # 0 equal, 1 up / different, 2 down
    up = down = 0
    counts: Counter = Counter()

    def refresh(v):
        nonlocal up, down
        for idx in incident[v]:
            a, b = edges[idx]
            ca, cb = color[a], color[b]
            if ca == cb:
                new = 0
            elif not directed or cb > ca:
                new = 1
            else:
                new = 2
            old = state[idx]
            if old != new:
                if old == 1:
                    up -= 1
                elif old == 2:
                    down -= 1
                if new == 1:
                    up += 1
                elif new == 2:
                    down += 1
                state[idx] = new

    top = q - 1
    while True:
        counts[(up, down)] += 1
        v = n
        while v:
            if color[v] < top:
                color[v] += 1
                refresh(v)
                break
            color[v] = 0
            refresh(v)
            v -= 1
        if not v:
            break
    return ColoringStats(q, n, g.k, dict(counts))


def bernardi_eval(g: DirectedGraph, q: int) -> MultiPoly:
    """B_G(q, y, z) at an integer q, as a polynomial in (y, z)."""
    _require(g, True)
    stats = coloring_stats(g, q)
    return MultiPoly(("y", "z"), stats.counts)


def _interpolated(g: Graph, evaluate, max_steps: int | None, what: str) -> MultiPoly:
    check_step_guard(coloring_steps(g.n), max_steps, what)
    nodes = range(1, g.n + 3)
    return interpolate_q([(q, evaluate(g, q)) for q in nodes], g.n)


def bernardi(g: DirectedGraph, max_steps: int | None = None) -> MultiPoly:
    """Bernardi polynomial B_G over (q, y, z)."""
    _require(g, True)
    return _interpolated(g, bernardi_eval, max_steps, f"bernardi({g})")


def full_chromatic_eval(g: UndirectedGraph, q: int) -> MultiPoly:
    _require(g, False)
    stats = coloring_stats(g, q)
    return MultiPoly(("y",), {(i,): c for (i, _), c in stats.counts.items()})


def full_chromatic(g: UndirectedGraph, max_steps: int | None = None) -> MultiPoly:
    """C_G(q, y): colorings weighted by y per bichromatic edge."""
    _require(g, False)
    return _interpolated(g, full_chromatic_eval, max_steps, f"full_chromatic({g})")


def potts(g: UndirectedGraph, max_steps: int | None = None) -> MultiPoly:
    """Z_G(q, v) from the full chromatic polynomial by the (v+1) substitution."""
    return potts_substitute(full_chromatic(g, max_steps), g.k)


def potts_sokal(g: UndirectedGraph, max_steps: int | None = None) -> MultiPoly:
    """Z_G(q, v) as a sum over spanning subgraphs of q^components * v^edges."""
    _require(g, False)
    check_step_guard(1 << g.k, max_steps, f"potts_sokal({g})")
    counts: Counter = Counter()
    for mask in range(1 << g.k):
        counts[(betti0(subgraph(g, mask)), bin(mask).count("1"))] += 1
    return MultiPoly(POTTS_VARS, counts)


def chi_geq(g: DirectedGraph, max_steps: int | None = None) -> MultiPoly:
    """B_G(q, 0, 1): maps with f(a) >= f(b) on every edge [a, b]."""
    return _chi(bernardi(g, max_steps))


def chi_gt(g: DirectedGraph, max_steps: int | None = None) -> MultiPoly:
    """[B_G]_k(q, 0, 1): maps with f(a) > f(b) on every edge [a, b]."""
    return _chi(truncate_top(bernardi(g, max_steps), g.k))


def _chi(b: MultiPoly) -> MultiPoly:
    return partial_eval(partial_eval(b, "y", 0), "z", 1)


def _require(g: Graph, oriented: bool) -> None:
    if g.oriented != oriented:
        kind = "directed" if oriented else "undirected"
        raise TypeError(f"expected a {kind} graph, got {g}")

