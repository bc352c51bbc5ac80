"""Formal linear combinations of graphs and the Laplace operator.

A :class:`GraphVector` is a finite sum ``sum c_G * G`` over graphs sharing
(n, k, orientation), with :class:`~graphlaplace.poly.MultiPoly` coefficients
keyed by graph rank.  Zero coefficients are never stored, so two vectors are
equal exactly when their term dicts are.

Operators:

* ``b_operator(i, V)`` fixes graphs whose edge i is not a loop and sends a
  graph with loop [a, a] at position i to minus the sum of its copies with
  edge i replaced by [a, m], m != a.
* ``laplace(V)`` applies B_1 ... B_k.  The B_i act on different edge
  positions and commute, so positions are processed in increasing order.
* ``laplace_undirected(V)`` orients every basis graph (smaller endpoint
  first unless another lift is given), applies ``laplace`` and forgets
  orientations again.

The universal constructors build ``sum_G P(G) * G`` over a whole graph set
for the per-graph invariants in :mod:`graphlaplace.invariants`.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Tuple

from . import invariants
from .graphs import (
    DirectedGraph,
    Graph,
    UndirectedGraph,
    betti0,
    canonical_lift,
    check_graph_guard,
    count_graphs,
    enumerate_graphs,
    forget,
    is_acyclic,
    is_totally_cyclic,
    isolated_vertices,
    parse_graph,
    rank,
    replace_edge,
    sinks,
    strip_loops,
    unrank,
)
from .poly import (
    BERNARDI_VARS,
    POTTS_VARS,
    MultiPoly,
    parse_poly,
    partial_eval,
    poly_from_json,
    poly_to_json,
    truncate_top,
)

READINGS = ("undirected", "directed-pushforward")


class GraphVector:
    __slots__ = ("n", "k", "oriented", "variables", "terms")

    def __init__(self, n: int, k: int, oriented: bool, variables: Sequence[str] = (),
                 terms: Mapping[int, MultiPoly] | None = None):
        self.n = n
        self.k = k
        self.oriented = oriented
        self.variables = tuple(variables)
        self.terms = {}
        for r, c in (terms or {}).items():
            self._accumulate(r, c)

    @classmethod
    def from_graphs(cls, items: Iterable[Tuple[Graph, object]], n: int, k: int,
                    oriented: bool, variables: Sequence[str] = ()) -> "GraphVector":
        v = cls(n, k, oriented, variables)
        for g, c in items:
            v.add_term(g, c)
        return v

    @classmethod
    def basis(cls, g: Graph, variables: Sequence[str] = ()) -> "GraphVector":
        v = cls(g.n, g.k, g.oriented, variables)
        v.add_term(g, 1)
        return v

    def _coeff(self, c) -> MultiPoly:
        if isinstance(c, MultiPoly):
            if c.variables != self.variables:
                raise ValueError(f"coefficient over {c.variables}, vector over {self.variables}")
            return c
        return MultiPoly.constant(self.variables, c)

    def _accumulate(self, r: int, c) -> None:
        c = self._coeff(c)
        if not c:
            return
        old = self.terms.get(r)
        new = c if old is None else old + c
        if new:
            self.terms[r] = new
        else:
            del self.terms[r]

    def add_term(self, g: Graph, c) -> None:
        """In-place ``self += c * g``; only used while building a vector."""
        if (g.n, g.k, g.oriented) != (self.n, self.k, self.oriented):
            raise ValueError(f"graph {g} does not belong to this vector's graph set")
        self._accumulate(rank(g), c)

    # -- access --------------------------------------------------------------

    def graph(self, r: int) -> Graph:
        return unrank(r, self.n, self.k, self.oriented)

    def items(self) -> Iterator[Tuple[Graph, MultiPoly]]:
        for r in sorted(self.terms):
            yield self.graph(r), self.terms[r]

    def coefficient(self, g: Graph) -> MultiPoly:
        return self.terms.get(rank(g), MultiPoly.zero(self.variables))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def graphs(self) -> list:
        return [g for g, _ in self.items()]

    # -- linear structure ----------------------------------------------------

    def _check(self, other: "GraphVector") -> None:
        if (self.n, self.k, self.oriented) != (other.n, other.k, other.oriented):
            raise ValueError("vectors live in different graph spaces")
        if self.terms and other.terms and self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other: "GraphVector") -> "GraphVector":
        self._check(other)
        variables = self.variables if self.terms else other.variables
        out = GraphVector(self.n, self.k, self.oriented, variables, self.terms)
        for r, c in other.terms.items():
            out._accumulate(r, c)
        return out

    def __neg__(self) -> "GraphVector":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: "GraphVector") -> "GraphVector":
        return self + (-other)

    def scale(self, c) -> "GraphVector":
        """Multiply every coefficient by a rational or a polynomial."""
        if isinstance(c, MultiPoly):
            return self.map_coefficients(lambda p: p * c, c.variables)
        c = Fraction(c)
        return self.map_coefficients(lambda p: p * c)

    def map_coefficients(self, fn: Callable[[MultiPoly], MultiPoly],
                         variables: Sequence[str] | None = None) -> "GraphVector":
        if variables is None:
            mapped = {r: fn(c) for r, c in self.terms.items()}
            variables = next(iter(mapped.values())).variables if mapped else self.variables
        else:
            mapped = {r: fn(c) for r, c in self.terms.items()}
        return GraphVector(self.n, self.k, self.oriented, variables, mapped)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphVector):
            return NotImplemented
        return (self.n, self.k, self.oriented) == (other.n, other.k, other.oriented) \
            and self.terms == other.terms

    __hash__ = None

    def first_difference(self, other: "GraphVector"):
        """``(graph, lhs_coeff, rhs_coeff)`` at the lowest differing rank, or None."""
        self._check(other)
        for r in sorted(set(self.terms) | set(other.terms)):
            a = self.terms.get(r)
            b = other.terms.get(r)
            if a != b:
                zero = MultiPoly.zero(self.variables or other.variables)
                return self.graph(r), a if a is not None else zero, b if b is not None else zero
        return None

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "oriented": self.oriented,
            "variables": list(self.variables),
            "terms": [
                {"graph": str(g), "coefficient": poly_to_json(c)} for g, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GraphVector":
        v = cls(data["n"], data["k"], data["oriented"], data.get("variables", ()))
        for t in data["terms"]:
            g = _typed(parse_graph(t["graph"]), data["oriented"])
            v.add_term(g, poly_from_json(t["coefficient"]))
        return v

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{g}: {c}" for g, c in self.items())

    @classmethod
    def from_text(cls, text: str, n: int, k: int, oriented: bool,
                  variables: Sequence[str]) -> "GraphVector":
        v = cls(n, k, oriented, variables)
        if text.strip() == "0":
            return v
        for line in text.strip().splitlines():
            gs, _, ps = line.partition(": ")
            v.add_term(_typed(parse_graph(gs), oriented), parse_poly(ps, variables))
        return v

    def __repr__(self) -> str:
        kind = "directed" if self.oriented else "undirected"
        return f"<GraphVector {kind} n={self.n} k={self.k} terms={len(self.terms)}>"


def _typed(g: Graph, oriented: bool) -> Graph:
    # edgeless strings parse as directed
    if g.oriented == oriented:
        return g
    if not g.edges:
        return UndirectedGraph(g.n) if not oriented else DirectedGraph(g.n)
    raise ValueError(f"graph {g} has the wrong orientation for this vector")


# ---------------------------------------------------------------------------
# operators


def b_operator(i: int, vec: GraphVector) -> GraphVector:
    if not vec.oriented:
        raise ValueError("b_operator acts on directed graph vectors")
    if not 1 <= i <= vec.k:
        raise IndexError(f"edge index {i} outside 1..{vec.k}")
    out = GraphVector(vec.n, vec.k, True, vec.variables)
    for g, c in vec.items():
        a, b = g.edges[i - 1]
        if a != b:
            out._accumulate(rank(g), c)
            continue
        neg = -c
        for m in range(1, vec.n + 1):
            if m != a:
                out._accumulate(rank(replace_edge(g, i, a, m)), neg)
    return out


def laplace(vec: GraphVector, order: Sequence[int] | None = None) -> GraphVector:
    """B_1 B_2 ... B_k applied to ``vec``; ``order`` lists edge positions in
    application order (default 1..k)."""
    if not vec.oriented:
        raise ValueError("use laplace_undirected for undirected vectors")
    for i in order or range(1, vec.k + 1):
        vec = b_operator(i, vec)
    return vec


def laplace_undirected(vec: GraphVector,
                       lift: Callable[[UndirectedGraph], DirectedGraph] = canonical_lift
                       ) -> GraphVector:
    if vec.oriented:
        raise ValueError("laplace_undirected acts on undirected graph vectors")
    out = GraphVector(vec.n, vec.k, False, vec.variables)
    for g, c in vec.items():
        phi = lift(g)
        if forget(phi) != g:
            raise ValueError(f"{phi} is not a lift of {g}")
        for h, d in laplace(GraphVector.basis(phi)).items():
            out._accumulate(rank(forget(h)), c * d.terms[()])
    return out


def push_forward(vec: GraphVector) -> GraphVector:
    """Apply the forgetful map to a directed vector."""
    out = GraphVector(vec.n, vec.k, False, vec.variables)
    for g, c in vec.items():
        out._accumulate(rank(forget(g)), c)
    return out


# ---------------------------------------------------------------------------
# universal vectors


def _map(fn: Callable, graphs: list, jobs: int) -> list:
    if jobs <= 1 or len(graphs) < 2 * jobs:
        return [fn(g) for g in graphs]
    chunk = max(1, math.ceil(len(graphs) / (4 * jobs)))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, graphs, chunksize=chunk))


def _guarded_graphs(n: int, k: int, oriented: bool, max_graphs, max_steps,
                    per_graph_steps: int, what: str) -> list:
    check_graph_guard(n, k, oriented, max_graphs)
    invariants.check_step_guard(
        count_graphs(n, k, oriented) * per_graph_steps, max_steps, f"{what}(n={n}, k={k})"
    )
    return list(enumerate_graphs(n, k, oriented))


def _unlimited(fn):
    # the batch guard has already been applied
    return partial(fn, max_steps=math.inf)


def _truncated_bernardi(g: DirectedGraph, max_steps=None) -> MultiPoly:
    return truncate_top(invariants.bernardi(g, max_steps), g.k)


def universal_bernardi(n: int, k: int, *, jobs: int = 1, max_graphs=None,
                       max_steps=None) -> GraphVector:
    """sum over Gamma(n, k) of B_G * G."""
    graphs = _guarded_graphs(n, k, True, max_graphs, max_steps,
                             invariants.coloring_steps(n), "universal_bernardi")
    coeffs = _map(_unlimited(invariants.bernardi), graphs, jobs)
    return GraphVector.from_graphs(zip(graphs, coeffs), n, k, True, BERNARDI_VARS)


def universal_truncated_bernardi(n: int, k: int, *, jobs: int = 1, max_graphs=None,
                                 max_steps=None) -> GraphVector:
    """sum over Gamma(n, k) of [B_G]_k * G; only loopless graphs survive."""
    graphs = _guarded_graphs(n, k, True, max_graphs, max_steps,
                             invariants.coloring_steps(n), "universal_truncated_bernardi")
    graphs = [g for g in graphs if not g.has_loop()]
    coeffs = _map(_unlimited(_truncated_bernardi), graphs, jobs)
    return GraphVector.from_graphs(zip(graphs, coeffs), n, k, True, BERNARDI_VARS)


def universal_chi(n: int, k: int, strict: bool = False, **kw) -> GraphVector:
    """B(q, 0, 1) of the universal (strict: truncated) Bernardi vector."""
    base = universal_truncated_bernardi(n, k, **kw) if strict else universal_bernardi(n, k, **kw)
    return base.map_coefficients(
        lambda p: partial_eval(partial_eval(p, "y", 0), "z", 1), ("q",)
    )


def _potts_fn(method: str):
    if method == "chromatic":
        return invariants.potts
    if method == "sokal":
        return invariants.potts_sokal
    raise ValueError(f"unknown Potts method {method!r}")


def _stripped_potts(g: UndirectedGraph, method: str, max_steps=None) -> MultiPoly:
    return _potts_fn(method)(strip_loops(g)[0], max_steps=max_steps)


def _potts_steps(n: int, k: int, method: str) -> int:
    return invariants.coloring_steps(n) if method == "chromatic" else 1 << k


def universal_potts(n: int, k: int, reading: str = "undirected", method: str = "chromatic", *,
                    jobs: int = 1, max_graphs=None, max_steps=None) -> GraphVector:
    """sum of Z_{G with loops removed}(q, v) * G.

    ``reading="undirected"`` sums over Upsilon(n, k).  ``"directed-pushforward"``
    sums over Gamma(n, k) and forgets orientations, so an undirected graph with
    m non-loop edges is counted 2^m times.
    """
    fn = partial(_stripped_potts, method=method, max_steps=math.inf)
    return _universal_potts(n, k, reading, method, fn, False, jobs, max_graphs, max_steps)


def universal_truncated_potts(n: int, k: int, reading: str = "undirected",
                              method: str = "chromatic", *, jobs: int = 1,
                              max_graphs=None, max_steps=None) -> GraphVector:
    """sum over loopless G of Z_G(q, v) * G, in the same two readings."""
    fn = partial(_potts_fn(method), max_steps=math.inf)
    return _universal_potts(n, k, reading, method, fn, True, jobs, max_graphs, max_steps)


def _universal_potts(n, k, reading, method, fn, loopless_only, jobs, max_graphs, max_steps):
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}, got {reading!r}")
    directed = reading == "directed-pushforward"
    graphs = _guarded_graphs(n, k, directed, max_graphs, max_steps,
                             _potts_steps(n, k, method), "universal_potts")
    if loopless_only:
        graphs = [g for g in graphs if not g.has_loop()]
    undirected = [forget(g) for g in graphs] if directed else graphs
    # a graph and its orientations share a coefficient: compute each once
    distinct = sorted(set(undirected), key=rank)
    values = dict(zip(distinct, _map(fn, distinct, jobs)))
    return GraphVector.from_graphs(
        ((u, values[u]) for u in undirected), n, k, False, POTTS_VARS
    )


# ---------------------------------------------------------------------------
# determinant elements and acyclic sums


def det_minor(n: int, k: int, isolated: Iterable[int] | None = None, *,
              max_graphs=None) -> GraphVector:
    """((-1)^k / k!) * sum of (-1)^{components} G over totally cyclic G in
    Gamma(n, k); with ``isolated`` given, only graphs whose isolated vertex
    set is exactly that set."""
    want = None if isolated is None else frozenset(isolated)
    norm = Fraction((-1) ** k, math.factorial(k))
    out = GraphVector(n, k, True, ())
    for g in _guarded_graphs(n, k, True, max_graphs, math.inf, 0, "det"):
        if want is not None and isolated_vertices(g) != want:
            continue
        if is_totally_cyclic(g):
            out.add_term(g, norm * (-1) ** betti0(g))
    return out


def det_element(n: int, k: int, *, max_graphs=None) -> GraphVector:
    return det_minor(n, k, None, max_graphs=max_graphs)


def acyclic_sum(n: int, k: int, sink_set: Iterable[int] | None = None, *,
                max_graphs=None) -> GraphVector:
    """Sum of all acyclic G in Gamma(n, k), optionally with sink set exactly ``sink_set``."""
    want = None if sink_set is None else frozenset(sink_set)
    out = GraphVector(n, k, True, ())
    for g in _guarded_graphs(n, k, True, max_graphs, math.inf, 0, "acyclic_sum"):
        if is_acyclic(g) and (want is None or sinks(g) == want):
            out.add_term(g, 1)
    return out
