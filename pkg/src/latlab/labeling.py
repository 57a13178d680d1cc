"""Total and edge labelings, induced vertex weights, and local antimagic checks.

A total labeling assigns labels to vertices and edges; the weight of a
vertex is its own label plus the labels of its incident edges.  An edge
labeling assigns labels to edges only; the induced vertex value is the
incident-edge sum (0 for isolated vertices).  A labeling is locally
antimagic when adjacent vertices never share a weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import BijectionError, ValidationError
from .graph import Graph


@dataclass(frozen=True)
class TotalLabeling:
    vertex_labels: Tuple[int, ...]
    edge_labels: Tuple[int, ...]


@dataclass(frozen=True)
class EdgeLabeling:
    edge_labels: Tuple[int, ...]


@dataclass(frozen=True)
class WeightProfile:
    weights: Tuple[int, ...]
    distinct_count: int
    valid: bool  # all adjacent pairs have distinct weights


@dataclass(frozen=True)
class VerifyReport:
    profile: WeightProfile
    violations: Tuple[int, ...]  # edge ids whose endpoints share a weight
    bijection_ok: bool

    @property
    def valid(self) -> bool:
        return self.bijection_ok and not self.violations


def label_multiset_problems(labels, n):
    """Return (duplicates, gaps) of a label multiset vs {1, ..., n}."""
    seen = {}
    for x in labels:
        seen[x] = seen.get(x, 0) + 1
    duplicates = sorted(x for x, c in seen.items() if c > 1)
    bad = sorted(x for x in seen if not (1 <= x <= n))
    gaps = sorted(x for x in range(1, n + 1) if x not in seen)
    return tuple(duplicates + bad), tuple(gaps)


def _check_bound_total(g: Graph, f: TotalLabeling):
    if len(f.vertex_labels) != g.p or len(f.edge_labels) != g.q:
        raise ValidationError(
            f"labeling shape ({len(f.vertex_labels)},{len(f.edge_labels)}) "
            f"does not match graph (p={g.p}, q={g.q})")


def _check_bound_edge(g: Graph, lab: EdgeLabeling):
    if len(lab.edge_labels) != g.q:
        raise ValidationError(f"edge labeling has {len(lab.edge_labels)} labels for q={g.q}")


def _raw_total_weights(g: Graph, f: TotalLabeling) -> Tuple[int, ...]:
    return tuple(
        f.vertex_labels[v] + sum(f.edge_labels[e] for e in g.incident_edges(v))
        for v in range(g.p))


def _raw_edge_weights(g: Graph, lab: EdgeLabeling) -> Tuple[int, ...]:
    return tuple(sum(lab.edge_labels[e] for e in g.incident_edges(v)) for v in range(g.p))


def _profile(g: Graph, weights: Tuple[int, ...]) -> WeightProfile:
    valid = all(weights[u] != weights[v] for u, v in g.edges)
    return WeightProfile(weights, len(set(weights)), valid)


def total_weights(g: Graph, f: TotalLabeling) -> WeightProfile:
    """Weights of a bijective total labeling; raises BijectionError otherwise."""
    _check_bound_total(g, f)
    n = g.p + g.q
    dups, gaps = label_multiset_problems(f.vertex_labels + f.edge_labels, n)
    if dups or gaps:
        raise BijectionError(f"total labels are not a bijection onto [1,{n}]", dups, gaps)
    weights = _raw_total_weights(g, f)
    # sanity: weight sums are forced by the bijection
    assert sum(weights) == sum(f.vertex_labels) + 2 * sum(f.edge_labels)
    assert sum(f.vertex_labels) + sum(f.edge_labels) == n * (n + 1) // 2
    return _profile(g, weights)


def edge_weights(g: Graph, lab: EdgeLabeling) -> WeightProfile:
    """Induced vertex values of a bijective edge labeling."""
    _check_bound_edge(g, lab)
    dups, gaps = label_multiset_problems(lab.edge_labels, g.q)
    if dups or gaps:
        raise BijectionError(f"edge labels are not a bijection onto [1,{g.q}]", dups, gaps)
    weights = _raw_edge_weights(g, lab)
    assert sum(weights) == g.q * (g.q + 1)
    return _profile(g, weights)


def verify_total(g: Graph, f: TotalLabeling) -> VerifyReport:
    """Full report on a candidate total labeling.  Never raises on bad labels."""
    _check_bound_total(g, f)
    dups, gaps = label_multiset_problems(f.vertex_labels + f.edge_labels, g.p + g.q)
    weights = _raw_total_weights(g, f)
    violations = tuple(e for e, (u, v) in enumerate(g.edges) if weights[u] == weights[v])
    return VerifyReport(_profile(g, weights), violations, not (dups or gaps))


def verify_edge(g: Graph, lab: EdgeLabeling) -> VerifyReport:
    """Full report on a candidate edge labeling.  Never raises on bad labels."""
    _check_bound_edge(g, lab)
    dups, gaps = label_multiset_problems(lab.edge_labels, g.q)
    weights = _raw_edge_weights(g, lab)
    violations = tuple(e for e, (u, v) in enumerate(g.edges) if weights[u] == weights[v])
    return VerifyReport(_profile(g, weights), violations, not (dups or gaps))
