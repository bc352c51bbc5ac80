"""Exhaustive exact checks of the Laplace-operator identities.

Each ``verify_*`` function builds both sides of one identity for a single
parameter set and returns an :class:`IdentityReport`.  The two sides go
through different code: e.g. the truncated side of the Bernardi identity
never touches the Laplace operator, and the Potts identity takes its left
side from colorings and its right side from the subgraph expansion.

Sign conventions
----------------
The value of the strict chromatic polynomial at -1 on an acyclic graph, and
the normalisation of the acyclic side of the determinant identities, are
tested against both ``(-1)^n`` and ``(-1)^k``.  Reports record which
candidates held; :func:`diagnose_sign_convention` intersects them over many
parameter sets.  With n and k of equal parity the two candidates coincide,
so a decision needs at least one instance of each parity.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from . import invariants
from .graphs import (
    DirectedGraph,
    GuardError,
    betti0,
    enumerate_directed,
    enumerate_undirected,
    is_acyclic,
    is_totally_cyclic,
    check_graph_guard,
    subgraphs,
)
from .poly import MultiPoly, eval_at, negate_v, shift_yz, truncate_top
from .space import (
    GraphVector,
    acyclic_sum,
    det_element,
    det_minor,
    laplace,
    laplace_undirected,
    universal_bernardi,
    universal_chi,
    universal_potts,
    universal_truncated_bernardi,
    universal_truncated_potts,
)

SIGN_CONVENTIONS = ("(-1)^n", "(-1)^k")


@dataclass
class IdentityReport:
    identity: str
    params: Dict[str, object]
    status: str  # "equal", "differ" or "skipped"
    graph: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    details: Dict[str, object] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != "differ"

    def sort_key(self):
        p = self.params
        return (
            self.identity,
            p.get("n", 0),
            p.get("k", 0),
            tuple(p.get("I") or ()),
            str(p.get("reading", "")),
        )

    def to_dict(self, timing: bool = False) -> dict:
        d = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.status != "equal":
            d.update(graph=self.graph, lhs=self.lhs, rhs=self.rhs)
        if self.details:
            d["details"] = self.details
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _compare(identity: str, params: dict, lhs: GraphVector, rhs: GraphVector,
             start: float, **details) -> IdentityReport:
    diff = lhs.first_difference(rhs)
    report = IdentityReport(identity, params, "equal" if diff is None else "differ",
                            details=details)
    if diff is not None:
        g, a, b = diff
        report.graph, report.lhs, report.rhs = str(g), str(a), str(b)
    report.elapsed = time.perf_counter() - start
    return report


def _sign(convention: str, n: int, k: int) -> int:
    return (-1) ** (n if convention == "(-1)^n" else k)


# ---------------------------------------------------------------------------
# the two main identities and the chromatic corollary


def verify_theorem1(n: int, k: int, **kw) -> IdentityReport:
    """Laplace of the universal Bernardi vector against the truncated vector at
    (q, y - 1, z - 1)."""
    start = time.perf_counter()
    lhs = laplace(universal_bernardi(n, k, **kw))
    rhs = universal_truncated_bernardi(n, k, **kw).map_coefficients(shift_yz)
    return _compare("theorem1", {"n": n, "k": k}, lhs, rhs, start)


def verify_theorem2(n: int, k: int, reading: str = "undirected", **kw) -> IdentityReport:
    """Undirected Laplace of the universal Potts vector against
    (-1)^k times the truncated vector at -v.

    The left side uses the chromatic route for Z, the right side the
    subgraph expansion.
    """
    start = time.perf_counter()
    lhs = laplace_undirected(universal_potts(n, k, reading, "chromatic", **kw))
    rhs = universal_truncated_potts(n, k, reading, "sokal", **kw)
    rhs = rhs.map_coefficients(negate_v).scale((-1) ** k)
    return _compare("theorem2", {"n": n, "k": k, "reading": reading}, lhs, rhs, start)


def verify_cor_chrom(n: int, k: int, **kw) -> IdentityReport:
    """Laplace of the weak chromatic vector against (-1)^k times the strict one."""
    start = time.perf_counter()
    lhs = laplace(universal_chi(n, k, strict=False, **kw))
    rhs = universal_chi(n, k, strict=True, **kw).scale((-1) ** k)
    return _compare("cor_chrom", {"n": n, "k": k}, lhs, rhs, start)


# ---------------------------------------------------------------------------
# chromatic values at q = -1


def verify_prop_ssc(n: int, k: int, max_graphs=None, max_steps=None, **_) -> IdentityReport:
    """chi_geq(-1) is (-1)^components on totally cyclic graphs, 0 elsewhere."""
    start = time.perf_counter()
    _batch_guard(n, k, max_graphs, max_steps)
    mismatches = []
    checked = 0
    for g in enumerate_directed(n, k, max_graphs):
        value = eval_at(invariants.chi_geq(g, math.inf), q=-1)
        expected = (-1) ** betti0(g) if is_totally_cyclic(g) else 0
        checked += 1
        if value != expected:
            mismatches.append((str(g), value, expected))
    report = IdentityReport("prop_ssc", {"n": n, "k": k},
                            "equal" if not mismatches else "differ",
                            details={"graphs": checked, "mismatches": len(mismatches),
                                     "mismatch_graphs": [m[0] for m in mismatches]})
    if mismatches:
        report.graph, report.lhs, report.rhs = mismatches[0][0], str(mismatches[0][1]), str(mismatches[0][2])
    report.elapsed = time.perf_counter() - start
    return report


def verify_prop_ac(n: int, k: int, max_graphs=None, max_steps=None, **_) -> IdentityReport:
    """chi_gt(-1) vanishes exactly on graphs with a directed cycle; on acyclic
    graphs its value is compared with both (-1)^n and (-1)^k.

    ``details["conventions"]`` lists the candidates that hold on every
    acyclic graph of this instance; status is "equal" when the zero side is
    exact and at least one candidate holds throughout.
    """
    start = time.perf_counter()
    _batch_guard(n, k, max_graphs, max_steps)
    zero_side_failures = []
    holds = {c: True for c in SIGN_CONVENTIONS}
    acyclic_count = 0
    values = set()
    for g in enumerate_directed(n, k, max_graphs):
        value = eval_at(invariants.chi_gt(g, math.inf), q=-1)
        if is_acyclic(g):
            acyclic_count += 1
            values.add(value)
            if value == 0:
                zero_side_failures.append((str(g), value))
            for c in SIGN_CONVENTIONS:
                if value != _sign(c, n, k):
                    holds[c] = False
        elif value != 0:
            zero_side_failures.append((str(g), value))
    conventions = [c for c in SIGN_CONVENTIONS if holds[c]] if acyclic_count else list(SIGN_CONVENTIONS)
    ok = not zero_side_failures and bool(conventions)
    report = IdentityReport(
        "prop_ac", {"n": n, "k": k}, "equal" if ok else "differ",
        details={
            "acyclic_graphs": acyclic_count,
            "acyclic_values": sorted(str(v) for v in values),
            "conventions": conventions,
            "zero_side_failures": len(zero_side_failures),
        },
    )
    if zero_side_failures:
        report.graph, report.lhs = zero_side_failures[0][0], str(zero_side_failures[0][1])
    elif not ok:
        report.lhs = ",".join(report.details["acyclic_values"])
        report.rhs = " or ".join(SIGN_CONVENTIONS)
    report.elapsed = time.perf_counter() - start
    return report


def diagnose_sign_convention(reports: Iterable[IdentityReport]) -> List[str]:
    """Sign candidates that held in every ``prop_ac`` report given."""
    alive = set(SIGN_CONVENTIONS)
    for r in reports:
        if r.identity == "prop_ac":
            alive &= set(r.details.get("conventions", ()))
    return [c for c in SIGN_CONVENTIONS if c in alive]


# ---------------------------------------------------------------------------
# determinant identities


def _det_report(identity: str, params: dict, lhs: GraphVector, acyclic: GraphVector,
                n: int, k: int, convention: Optional[str], start: float) -> IdentityReport:
    rhs = {c: acyclic.scale(Fraction(_sign(c, n, k), math.factorial(k))) for c in SIGN_CONVENTIONS}
    matches = [c for c in SIGN_CONVENTIONS if lhs == rhs[c]]
    chosen = convention if convention is not None else (matches[0] if matches else SIGN_CONVENTIONS[0])
    if chosen not in SIGN_CONVENTIONS:
        raise ValueError(f"unknown sign convention {chosen!r}")
    return _compare(identity, params, lhs, rhs[chosen], start,
                    matching_conventions=matches, convention=chosen)


def verify_cor_sumall(n: int, k: int, convention: Optional[str] = None,
                      max_graphs=None, **_) -> IdentityReport:
    """Laplace of det(n, k) against (+-1/k!) times the sum of acyclic graphs.

    ``convention`` picks the sign the status is judged by; None accepts
    whichever candidate matches.
    """
    start = time.perf_counter()
    lhs = laplace(det_element(n, k, max_graphs=max_graphs))
    acyclic = acyclic_sum(n, k, max_graphs=max_graphs)
    return _det_report("cor_sumall", {"n": n, "k": k}, lhs, acyclic, n, k, convention, start)


def verify_cor_mtt(n: int, k: int, isolated: Iterable[int], convention: Optional[str] = None,
                   max_graphs=None, **_) -> IdentityReport:
    """Laplace of the diagonal minor for vertex set I against the acyclic
    graphs whose sinks are exactly I."""
    start = time.perf_counter()
    subset = sorted(set(isolated))
    lhs = laplace(det_minor(n, k, subset, max_graphs=max_graphs))
    acyclic = acyclic_sum(n, k, subset, max_graphs=max_graphs)
    return _det_report("cor_mtt", {"n": n, "k": k, "I": subset}, lhs, acyclic, n, k,
                       convention, start)


def verify_minor_decomposition(n: int, k: int, max_graphs=None, **_) -> IdentityReport:
    """Sum over I of the I-minors is det(n, k); sum over I of the sink-restricted
    acyclic sums is the full acyclic sum."""
    start = time.perf_counter()
    subsets = list(_vertex_subsets(n))
    total_det = sum((det_minor(n, k, s, max_graphs=max_graphs) for s in subsets),
                    GraphVector(n, k, True))
    total_ac = sum((acyclic_sum(n, k, s, max_graphs=max_graphs) for s in subsets),
                   GraphVector(n, k, True))
    det_ok = total_det == det_element(n, k, max_graphs=max_graphs)
    r = _compare("minor_decomposition", {"n": n, "k": k}, total_ac,
                 acyclic_sum(n, k, max_graphs=max_graphs), start, det_sum_equal=det_ok)
    if not det_ok:
        r.status = "differ"
    return r


def _vertex_subsets(n: int):
    verts = range(1, n + 1)
    for size in range(n + 1):
        for s in itertools.combinations(verts, size):
            yield list(s)


# ---------------------------------------------------------------------------
# Moebius inversion on the subgraph lattice


def _check_lattice(values: Mapping[int, MultiPoly]) -> int:
    size = len(values)
    k = size.bit_length() - 1
    if size == 0 or 1 << k != size or set(values) != set(range(size)):
        raise ValueError(f"values must cover every mask 0..2^k - 1; got {size} entries")
    return k


def subset_sums(values: Mapping[int, MultiPoly]) -> Dict[int, MultiPoly]:
    """h(S) = sum of f(T) over T subset of S."""
    k = _check_lattice(values)
    out = dict(values)
    for bit in range(k):
        step = 1 << bit
        for mask in range(1 << k):
            if mask & step:
                out[mask] = out[mask] + out[mask ^ step]
    return out


def moebius_invert(values: Mapping[int, MultiPoly]) -> Dict[int, MultiPoly]:
    """Recover f from its subset sums h: (-1)^|S| f(S) = sum over T of (-1)^|T| h(T)."""
    k = _check_lattice(values)
    out = {}
    for s in range(1 << k):
        total = None
        t = s
        # walk all submasks of s
        while True:
            term = values[t] if (bin(s).count("1") - bin(t).count("1")) % 2 == 0 else -values[t]
            total = term if total is None else total + term
            if t == 0:
                break
            t = (t - 1) & s
        out[s] = total
    return out


def verify_coupling(n: int, k: int, max_graphs=None, **_) -> IdentityReport:
    """For every loopless G in Gamma(n, k): the sum over spanning subgraphs of
    the shifted top truncation equals B_G, and Moebius-inverting the Bernardi
    polynomials of the subgraphs recovers those shifted truncations."""
    start = time.perf_counter()
    check_graph_guard(n, k, True, max_graphs)
    checked = 0
    for g in enumerate_directed(n, k, max_graphs):
        if g.has_loop():
            continue
        checked += 1
        b = {m: invariants.bernardi(h) for m, h in subgraphs(g)}
        shifted = {m: shift_yz(truncate_top(b[m], bin(m).count("1"))) for m in b}
        direct = sum(shifted.values(), MultiPoly.zero(b[0].variables))
        inverted = moebius_invert(b)
        full = (1 << g.k) - 1
        failure = None
        if direct != b[full]:
            failure = (direct, b[full])
        elif inverted != shifted:
            m = next(m for m in shifted if inverted[m] != shifted[m])
            failure = (inverted[m], shifted[m])
        if failure:
            r = IdentityReport("coupling", {"n": n, "k": k}, "differ", str(g),
                               str(failure[0]), str(failure[1]), {"graphs": checked})
            r.elapsed = time.perf_counter() - start
            return r
    r = IdentityReport("coupling", {"n": n, "k": k}, "equal", details={"graphs": checked})
    r.elapsed = time.perf_counter() - start
    return r


def verify_potts_oracle(n: int, k: int, max_graphs=None, **_) -> IdentityReport:
    """Coloring route and subgraph-expansion route agree on every graph of Upsilon(n, k)."""
    start = time.perf_counter()
    checked = 0
    for g in enumerate_undirected(n, k, max_graphs):
        checked += 1
        a, b = invariants.potts(g), invariants.potts_sokal(g)
        if a != b:
            r = IdentityReport("potts_oracle", {"n": n, "k": k}, "differ", str(g), str(a), str(b),
                               {"graphs": checked})
            r.elapsed = time.perf_counter() - start
            return r
    r = IdentityReport("potts_oracle", {"n": n, "k": k}, "equal", details={"graphs": checked})
    r.elapsed = time.perf_counter() - start
    return r


def _batch_guard(n, k, max_graphs, max_steps):
    total = check_graph_guard(n, k, True, max_graphs)
    invariants.check_step_guard(total * invariants.coloring_steps(n), max_steps,
                                f"n={n}, k={k} batch")


# ---------------------------------------------------------------------------
# driver

IDENTITIES = (
    "theorem1",
    "theorem2",
    "cor_chrom",
    "prop_ssc",
    "prop_ac",
    "cor_sumall",
    "cor_mtt",
    "minor_decomposition",
    "coupling",
    "potts_oracle",
)


def run_identity(identity: str, n: int, k: int, convention: Optional[str] = None,
                 **kw) -> List[IdentityReport]:
    """All instances of one identity at (n, k): both readings of the Potts
    identity, every vertex subset for the minor identity."""
    if identity == "theorem1":
        return [verify_theorem1(n, k, **kw)]
    if identity == "theorem2":
        return [verify_theorem2(n, k, reading, **kw)
                for reading in ("undirected", "directed-pushforward")]
    if identity == "cor_chrom":
        return [verify_cor_chrom(n, k, **kw)]
    if identity == "prop_ssc":
        return [verify_prop_ssc(n, k, **kw)]
    if identity == "prop_ac":
        return [verify_prop_ac(n, k, **kw)]
    if identity == "cor_sumall":
        return [verify_cor_sumall(n, k, convention, **kw)]
    if identity == "cor_mtt":
        return [verify_cor_mtt(n, k, s, convention, **kw) for s in _vertex_subsets(n)]
    if identity == "minor_decomposition":
        return [verify_minor_decomposition(n, k, **kw)]
    if identity == "coupling":
        return [verify_coupling(n, k, **kw)]
    if identity == "potts_oracle":
        return [verify_potts_oracle(n, k, **kw)]
    raise ValueError(f"unknown identity {identity!r}; choose from {IDENTITIES}")


def verify_all(n_max: int, k_max: int, identities: Sequence[str] = IDENTITIES,
               **kw) -> List[IdentityReport]:
    """Every identity for 1 <= n <= n_max, 0 <= k <= k_max.

    Instances over the size or step limits become "skipped" reports.  The
    sign convention is diagnosed from the ``prop_ac`` instances first and
    then used to judge the determinant identities; the directed-pushforward
    reading of the Potts identity is reported but never counted as a failure.
    """
    reports: List[IdentityReport] = []
    pairs = [(n, k) for n in range(1, n_max + 1) for k in range(k_max + 1)]

    def run(identity, n, k, **extra):
        try:
            return run_identity(identity, n, k, **extra, **kw)
        except GuardError as exc:
            return [IdentityReport(identity, {"n": n, "k": k}, "skipped",
                                   details={"reason": str(exc)})]

    ac_reports = []
    if "prop_ac" in identities:
        for n, k in pairs:
            ac_reports += run("prop_ac", n, k)
        reports += ac_reports
    diagnosed = diagnose_sign_convention(ac_reports)
    convention = diagnosed[0] if len(diagnosed) == 1 else None
    for identity in identities:
        if identity == "prop_ac":
            continue
        for n, k in pairs:
            extra = {"convention": convention} if identity in ("cor_sumall", "cor_mtt") else {}
            batch = run(identity, n, k, **extra)
            for r in batch:
                if r.params.get("reading") == "directed-pushforward":
                    r.details["informational"] = True
                    if r.status == "differ":
                        r.status = "differ-informational"
            reports += batch
    reports.sort(key=IdentityReport.sort_key)
    return reports


def summarize(reports: Sequence[IdentityReport]) -> str:
    counts: Dict[str, int] = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines = [", ".join(f"{v} {s}" for s, v in sorted(counts.items()))]
    diagnosed = diagnose_sign_convention(reports)
    if any(r.identity == "prop_ac" for r in reports):
        if len(diagnosed) == 1:
            lines.append(f"sign at q=-1 on acyclic graphs: {diagnosed[0]} (uniform over all tested cases)")
        elif diagnosed:
            lines.append("sign at q=-1 on acyclic graphs: undetermined, " + " and ".join(diagnosed)
                         + " both hold (only equal-parity n, k tested)")
        else:
            lines.append("sign at q=-1 on acyclic graphs: neither candidate holds uniformly")
    for r in reports:
        if r.status == "differ":
            lines.append(f"FAIL {r.identity} {r.params}: at {r.graph}: {r.lhs} != {r.rhs}")
    return "\n".join(lines)
