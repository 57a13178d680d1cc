"""Labeling transfers between a graph and its cones.

Three constructions move labelings across the cone operation:
  * cone_to_total: edge labeling of K1∨G  →  total labeling of G
  * total_to_cone: total labeling of G    →  edge labeling of K1∨G
  * double_cone_collapse: edge labeling of G∨O2  →  total labeling of G∨K1
In each one the induced weight of every surviving base vertex is preserved
exactly, which is what makes the chromatic-number bookkeeping sound.
"""

from __future__ import annotations

from typing import Tuple

from .errors import PreconditionError, StructureError
from .graph import Graph, join
from .labeling import (EdgeLabeling, TotalLabeling, edge_weights, total_weights,
                       verify_edge, verify_total)


def _delete_vertices(g: Graph, gone: set) -> Tuple[Graph, dict]:
    """Remove vertices, keeping the order of the rest.  Returns (graph, old->new)."""
    keep = [v for v in range(g.p) if v not in gone]
    remap = {v: i for i, v in enumerate(keep)}
    edges = [(remap[u], remap[v]) for u, v in g.edges if u not in gone and v not in gone]
    return Graph.from_edges(len(keep), edges), remap


def cone_to_total(cone: Graph, g: EdgeLabeling, apex: int) -> Tuple[Graph, TotalLabeling]:
    """Strip the apex: each base vertex inherits its apex-edge label, base
    edges keep theirs.  Base weights equal the original induced values."""
    if not (0 <= apex < cone.p):
        raise StructureError(f"apex index {apex} out of range")
    if cone.degree(apex) != cone.p - 1:
        raise StructureError(f"apex {apex} is not adjacent to every other vertex")
    report = verify_edge(cone, g)
    if not report.valid:
        raise PreconditionError("input is not a valid local antimagic edge labeling")

    base, remap = _delete_vertices(cone, {apex})
    edge_id = {e: i for i, e in enumerate(cone.edges)}
    vertex_labels = [0] * base.p
    for v in range(cone.p):
        if v == apex:
            continue
        e = edge_id[(min(v, apex), max(v, apex))]
        vertex_labels[remap[v]] = g.edge_labels[e]
    edge_labels = [0] * base.q
    base_edge_id = {e: i for i, e in enumerate(base.edges)}
    for i, (u, v) in enumerate(cone.edges):
        if u != apex and v != apex:
            edge_labels[base_edge_id[(remap[u], remap[v])]] = g.edge_labels[i]
    f = TotalLabeling(tuple(vertex_labels), tuple(edge_labels))

    profile = total_weights(base, f)
    old = report.profile.weights
    assert all(profile.weights[remap[v]] == old[v] for v in range(cone.p) if v != apex)
    assert profile.valid
    return base, f


def total_to_cone(g: Graph, f: TotalLabeling) -> Tuple[Graph, EdgeLabeling]:
    """Cone over G: vertex labels become apex-edge labels, edge labels stay.

    Requires the vertex-label sum S to avoid every weight of G, since S
    becomes the apex's induced value and the apex is adjacent to everything.
    """
    report = verify_total(g, f)
    if not report.valid:
        raise PreconditionError("input is not a valid local antimagic total labeling")
    s = sum(f.vertex_labels)
    for j, w in enumerate(report.profile.weights):
        if w == s:
            raise PreconditionError(
                f"vertex-label sum {s} collides with the weight of vertex {j}")

    cone = join(g, Graph(1, ()))
    apex = g.p
    edge_labels = [0] * cone.q
    g_edge_id = {e: i for i, e in enumerate(g.edges)}
    for i, (u, v) in enumerate(cone.edges):
        if v == apex:
            edge_labels[i] = f.vertex_labels[u]
        else:
            edge_labels[i] = f.edge_labels[g_edge_id[(u, v)]]
    lab = EdgeLabeling(tuple(edge_labels))

    profile = edge_weights(cone, lab)
    assert profile.weights[apex] == s
    assert all(profile.weights[v] == report.profile.weights[v] for v in range(g.p))
    assert profile.valid
    return cone, lab


def double_cone_collapse(double_cone: Graph, g: EdgeLabeling,
                         apexes: Tuple[int, int]) -> Tuple[Graph, TotalLabeling]:
    """Collapse G∨O2 to a total labeling of G∨K1.

    The second apex's cone-edge labels become vertex labels of G; the kept
    apex receives the one label not used by g, which is 2p+q+1 for a base
    graph of order p and size q.
    """
    a1, a2 = apexes
    if a1 == a2 or not (0 <= a1 < double_cone.p) or not (0 <= a2 < double_cone.p):
        raise StructureError(f"bad apex pair {apexes}")
    if double_cone.has_edge(a1, a2):
        raise StructureError("the two apexes must be non-adjacent")
    p = double_cone.p - 2
    if double_cone.degree(a1) != p or double_cone.degree(a2) != p:
        raise StructureError("each apex must be adjacent to every base vertex")
    q = double_cone.q - 2 * p
    if p < 2 or q < 1:
        raise PreconditionError(f"base graph must have order >= 2 and size >= 1, got ({p},{q})")
    report = verify_edge(double_cone, g)
    if not report.valid:
        raise PreconditionError("input is not a valid local antimagic edge labeling")

    top = 2 * p + q + 1
    weights = report.profile.weights
    for v in range(double_cone.p):
        if v not in (a1, a2) and weights[v] == top + weights[a1]:
            raise PreconditionError(
                f"kept-apex weight {top + weights[a1]} collides with vertex {v}")

    base, remap = _delete_vertices(double_cone, {a1, a2})
    out_graph = join(base, Graph(1, ()))
    apex_out = base.p
    edge_id = {e: i for i, e in enumerate(double_cone.edges)}

    vertex_labels = [0] * (base.p + 1)
    for v in range(double_cone.p):
        if v in (a1, a2):
            continue
        e2 = edge_id[(min(v, a2), max(v, a2))]
        vertex_labels[remap[v]] = g.edge_labels[e2]
    vertex_labels[apex_out] = top

    out_edge_id = {e: i for i, e in enumerate(out_graph.edges)}
    edge_labels = [0] * out_graph.q
    for i, (u, v) in enumerate(double_cone.edges):
        if a2 in (u, v):
            continue
        if u == a1 or v == a1:
            w = v if u == a1 else u
            edge_labels[out_edge_id[(remap[w], apex_out)]] = g.edge_labels[i]
        else:
            edge_labels[out_edge_id[(remap[u], remap[v])]] = g.edge_labels[i]
    f = TotalLabeling(tuple(vertex_labels), tuple(edge_labels))

    profile = total_weights(out_graph, f)
    assert all(profile.weights[remap[v]] == weights[v]
               for v in range(double_cone.p) if v not in (a1, a2))
    assert profile.weights[apex_out] == top + weights[a1]
    assert profile.valid
    return out_graph, f
