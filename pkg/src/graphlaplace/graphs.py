"""Graphs on numbered vertices with numbered edges.

A directed graph in Gamma(n, k) is a sequence of k ordered pairs
``(a_i, b_i)`` with endpoints in ``1..n``; an undirected graph in
Upsilon(n, k) is a sequence of k unordered pairs, stored as ``(min, max)``.
Loops and repeated pairs are allowed and the position of an edge in the
sequence is its number.

Graphs are immutable and hashable.  Each one also has a *rank*: its 0-based
position in the lexicographic enumeration of its graph set, which is what
:class:`graphlaplace.space.GraphVector` uses as a storage key.

Text form::

    n=3;1>2,2>3     directed, edges [1,2] then [2,3]
    n=3;1-2,2-3     undirected
    n=2;            edgeless graph on two vertices
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

Edge = Tuple[int, int]

DEFAULT_MAX_GRAPHS = 10**7


class GuardError(RuntimeError):
    """Raised when a requested enumeration or computation exceeds its budget."""


class GraphParseError(ValueError):
    """Malformed graph string; ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    edges: Tuple[Edge, ...] = ()

    oriented = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge [{a},{b}] has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def k(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return f"n={self.n};" + ",".join(f"{a}>{b}" for a, b in self.edges)

    def reverse(self) -> "DirectedGraph":
        return DirectedGraph(self.n, tuple((b, a) for a, b in self.edges))

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: Tuple[Edge, ...] = ()

    oriented = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        edges = tuple((min(a, b), max(a, b)) for a, b in self.edges)
        for a, b in edges:
            if not (1 <= a and b <= self.n):
                raise ValueError(f"edge {{{a},{b}}} has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def k(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return f"n={self.n};" + ",".join(f"{a}-{b}" for a, b in self.edges)

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)


Graph = Union[DirectedGraph, UndirectedGraph]


def parse_graph(text: str) -> Graph:
    """Parse the canonical text form.  The edge separator decides orientation;
    an edgeless string parses as directed."""
    s = text.strip()
    if not s.startswith("n="):
        raise GraphParseError("expected 'n='", text, 0)
    semi = s.find(";")
    if semi < 0:
        raise GraphParseError("expected ';' after vertex count", text, len(s))
    try:
        n = int(s[2:semi])
    except ValueError:
        raise GraphParseError("vertex count is not an integer", text, 2) from None
    if n < 1:
        raise GraphParseError("vertex count must be positive", text, 2)
    body = s[semi + 1:]
    if not body:
        return DirectedGraph(n)
    edges = []
    seps = set()
    pos = semi + 1
    for item in body.split(","):
        sep = ">" if ">" in item else "-" if "-" in item else None
        if sep is None:
            raise GraphParseError("edge needs '>' or '-'", text, pos)
        seps.add(sep)
        a, _, b = item.partition(sep)
        try:
            a_i, b_i = int(a), int(b)
        except ValueError:
            raise GraphParseError(f"bad edge {item!r}", text, pos) from None
        if not (1 <= a_i <= n and 1 <= b_i <= n):
            raise GraphParseError(f"endpoint outside 1..{n} in {item!r}", text, pos)
        edges.append((a_i, b_i))
        pos += len(item) + 1
    if len(seps) > 1:
        raise GraphParseError("mixed '>' and '-' edges", text, semi + 1)
    if seps == {">"}:
        return DirectedGraph(n, tuple(edges))
    return UndirectedGraph(n, tuple(edges))


# ---------------------------------------------------------------------------
# enumeration, rank and unrank


def _pairs(n: int) -> list:
    return [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def count_graphs(n: int, k: int, oriented: bool = True) -> int:
    base = n * n if oriented else n * (n + 1) // 2
    return base**k


def check_graph_guard(n: int, k: int, oriented: bool = True, max_graphs: int | None = None) -> int:
    limit = DEFAULT_MAX_GRAPHS if max_graphs is None else max_graphs
    total = count_graphs(n, k, oriented)
    if total > limit:
        kind = "directed" if oriented else "undirected"
        raise GuardError(
            f"{kind} graph set with n={n}, k={k} has {total} graphs, "
            f"above the limit of {limit} (raise --max-graphs to allow)"
        )
    return total


def enumerate_directed(n: int, k: int, max_graphs: int | None = None) -> Iterator[DirectedGraph]:
    """All n^(2k) directed graphs in rank order."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    check_graph_guard(n, k, True, max_graphs)
    arcs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    for edges in itertools.product(arcs, repeat=k):
        yield DirectedGraph(n, edges)


def enumerate_undirected(n: int, k: int, max_graphs: int | None = None) -> Iterator[UndirectedGraph]:
    """All (n(n+1)/2)^k undirected graphs in rank order."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    check_graph_guard(n, k, False, max_graphs)
    for edges in itertools.product(_pairs(n), repeat=k):
        yield UndirectedGraph(n, edges)


def enumerate_graphs(n: int, k: int, oriented: bool, max_graphs: int | None = None) -> Iterator[Graph]:
    if oriented:
        return enumerate_directed(n, k, max_graphs)
    return enumerate_undirected(n, k, max_graphs)


def _pair_index(a: int, b: int, n: int) -> int:
    # position of (a, b), a <= b, in the lexicographic list of pairs
    return (a - 1) * n - (a - 1) * (a - 2) // 2 + (b - a)


def rank(g: Graph) -> int:
    r = 0
    if g.oriented:
        for a, b in g.edges:
            r = r * g.n * g.n + (a - 1) * g.n + (b - 1)
    else:
        base = g.n * (g.n + 1) // 2
        for a, b in g.edges:
            r = r * base + _pair_index(a, b, g.n)
    return r


def unrank(index: int, n: int, k: int, oriented: bool = True) -> Graph:
    total = count_graphs(n, k, oriented)
    if not 0 <= index < total:
        raise IndexError(f"rank {index} outside 0..{total - 1} for n={n}, k={k}")
    if oriented:
        base = n * n
        digits = []
        for _ in range(k):
            index, d = divmod(index, base)
            digits.append((d // n + 1, d % n + 1))
        return DirectedGraph(n, tuple(reversed(digits)))
    pairs = _pairs(n)
    base = len(pairs)
    digits = []
    for _ in range(k):
        index, d = divmod(index, base)
        digits.append(pairs[d])
    return UndirectedGraph(n, tuple(reversed(digits)))


# ---------------------------------------------------------------------------
# edge manipulation


def forget(g: DirectedGraph) -> UndirectedGraph:
    return UndirectedGraph(g.n, g.edges)


def lifts(g: UndirectedGraph) -> Iterator[DirectedGraph]:
    """Every directed graph whose undirected version is ``g``."""
    choices = [[(a, b)] if a == b else [(a, b), (b, a)] for a, b in g.edges]
    for edges in itertools.product(*choices):
        yield DirectedGraph(g.n, edges)


def canonical_lift(g: UndirectedGraph) -> DirectedGraph:
    """Orient every edge from its smaller endpoint."""
    return DirectedGraph(g.n, g.edges)


def strip_loops(g: Graph) -> Tuple[Graph, int]:
    """Delete all loops; returns the loopless graph and the number removed."""
    kept = tuple(e for e in g.edges if e[0] != e[1])
    return type(g)(g.n, kept), g.k - len(kept)


def subgraph(g: Graph, mask: int) -> Graph:
    """Keep the edges whose bit is set in ``mask`` (bit i-1 for edge i), in order."""
    return type(g)(g.n, tuple(e for i, e in enumerate(g.edges) if mask >> i & 1))


def subgraphs(g: Graph) -> Iterator[Tuple[int, Graph]]:
    """All 2^k edge subsets as ``(mask, subgraph)``; vertices are always kept."""
    for mask in range(1 << g.k):
        yield mask, subgraph(g, mask)


def _require_loopless(g: Graph) -> None:
    if g.has_loop():
        raise ValueError(f"graph {g} has a loop; loop completion needs a loopless graph")


def loop_completion_directed(g: DirectedGraph, mask: int) -> DirectedGraph:
    """The unique H with strip_loops(H) == subgraph(g, mask): each dropped
    edge [a,b] becomes the loop [a,a] in place."""
    _require_loopless(g)
    return DirectedGraph(
        g.n, tuple(e if mask >> i & 1 else (e[0], e[0]) for i, e in enumerate(g.edges))
    )


def loop_completions_undirected(g: UndirectedGraph, mask: int) -> Iterator[UndirectedGraph]:
    """All 2^(k - |mask|) completions: each dropped edge {a,b} becomes {a,a} or {b,b}."""
    _require_loopless(g)
    choices = [
        [e] if mask >> i & 1 else [(e[0], e[0]), (e[1], e[1])]
        for i, e in enumerate(g.edges)
    ]
    for edges in itertools.product(*choices):
        yield UndirectedGraph(g.n, edges)


def replace_edge(g: Graph, i: int, p: int, q: int) -> Graph:
    """R_{p,q;i}: put the edge (p, q) at position i (1-based)."""
    if not 1 <= i <= g.k:
        raise IndexError(f"edge index {i} outside 1..{g.k}")
    edges = list(g.edges)
    edges[i - 1] = (p, q)
    return type(g)(g.n, tuple(edges))


# ---------------------------------------------------------------------------
# structural predicates


def _scc_labels(n: int, edges: Sequence[Edge]) -> list:
    """Strongly connected component id per vertex (index 0 unused).

    Iterative Tarjan; graphs here are tiny but recursion depth is still
    avoided so large n stays safe.
    """
    adj = [[] for _ in range(n + 1)]
    for a, b in edges:
        adj[a].append(b)
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    comp = [-1] * (n + 1)
    stack = []
    counter = 1
    ncomp = 0
    for root in range(1, n + 1):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            if pos < len(adj[v]):
                work.append((v, pos + 1))
                w = adj[v][pos]
                if not index[w]:
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def is_totally_cyclic(g: DirectedGraph) -> bool:
    """Every edge lies on a directed cycle; loops count, the edgeless graph qualifies."""
    comp = _scc_labels(g.n, g.edges)
    return all(comp[a] == comp[b] for a, b in g.edges)


def is_acyclic(g: DirectedGraph) -> bool:
    if g.has_loop():
        return False
    comp = _scc_labels(g.n, g.edges)
    return len(set(comp[1:])) == g.n


def betti0(g: Graph) -> int:
    """Number of connected components of the underlying undirected graph."""
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.n
    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def isolated_vertices(g: Graph) -> frozenset:
    touched = {v for e in g.edges for v in e}
    return frozenset(v for v in range(1, g.n + 1) if v not in touched)


def sinks(g: DirectedGraph) -> frozenset:
    """Vertices with no outgoing edge (a loop counts as outgoing)."""
    tails = {a for a, _ in g.edges}
    return frozenset(v for v in range(1, g.n + 1) if v not in tails)
