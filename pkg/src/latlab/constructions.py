"""Closed-form labelings for specific families, and the cycle-to-path cut."""

from __future__ import annotations

from typing import Tuple

from .errors import ParameterError, PreconditionError
from .graph import FamilySpec, Graph, generate
from .labeling import TotalLabeling, verify_total

# Interleaved label sequences v1, e1, v2, e2, ..., vn for short odd paths,
# each achieving exactly two distinct weights.
ODD_PATH_SEQUENCES = {
    3: (1, 5, 3, 4, 2),
    5: (1, 9, 7, 3, 2, 5, 8, 6, 4),
    7: (13, 6, 4, 10, 1, 8, 9, 3, 5, 11, 2, 7, 12),
}


def construct_k2_plus_empty(n: int) -> Tuple[Graph, TotalLabeling]:
    """K2 + On with the explicit labeling: endpoints 1 and 2, their edge 3,
    isolated vertex i labeled i+3.  Weights are (4, 5, 4, 5, 6, ...)."""
    if n < 1:
        raise ParameterError(f"k2_plus_empty construction requires n >= 1, got {n}")
    g = generate(FamilySpec("k2_plus_empty", (n,)))
    vertex_labels = (1, 2) + tuple(i + 3 for i in range(1, n + 1))
    f = TotalLabeling(vertex_labels, (3,))
    assert verify_total(g, f).valid
    return g, f


def construct_small_odd_path(n: int) -> Tuple[Graph, TotalLabeling]:
    """Two-weight total labelings of P3, P5, P7 from fixed sequences."""
    if n not in ODD_PATH_SEQUENCES:
        raise ParameterError(
            f"no closed-form odd-path labeling for n={n}; use the solver instead")
    seq = ODD_PATH_SEQUENCES[n]
    g = generate(FamilySpec("path", (n,)))
    f = TotalLabeling(tuple(seq[0::2]), tuple(seq[1::2]))
    assert verify_total(g, f).valid
    return g, f


def path_from_cycle(cycle: Graph, f: TotalLabeling, doomed: int) -> Tuple[Graph, TotalLabeling]:
    """Cut a labeled cycle at an edge labeled 1 and shift all labels down by 1.

    Every vertex weight drops by exactly 3, so validity and the distinct
    weight count carry over to the resulting path.  The path is re-indexed
    starting from the doomed edge's higher endpoint, walking away from it.
    """
    n = cycle.p
    if n < 3 or cycle.q != n or any(cycle.degree(v) != 2 for v in range(n)):
        raise PreconditionError("input graph is not a cycle")
    if not (0 <= doomed < cycle.q):
        raise PreconditionError(f"edge id {doomed} out of range")
    report = verify_total(cycle, f)
    if not report.valid:
        raise PreconditionError("input labeling is not a valid local antimagic total labeling")
    if f.edge_labels[doomed] != 1:
        raise PreconditionError(
            f"doomed edge must be labeled 1, got {f.edge_labels[doomed]}")

    a, b = cycle.edges[doomed]
    walk = [b]
    prev = a
    while len(walk) < n:
        cur = walk[-1]
        nxt = next(u for u in cycle.neighbors(cur) if u != prev)
        prev = cur
        walk.append(nxt)
    assert walk[-1] == a

    edge_id = {e: i for i, e in enumerate(cycle.edges)}
    path = generate(FamilySpec("path", (n,)))
    vertex_labels = tuple(f.vertex_labels[v] - 1 for v in walk)
    edge_labels = []
    for i in range(n - 1):
        u, v = walk[i], walk[i + 1]
        e = edge_id[(min(u, v), max(u, v))]
        edge_labels.append(f.edge_labels[e] - 1)
    out = TotalLabeling(vertex_labels, tuple(edge_labels))

    out_report = verify_total(path, out)
    assert out_report.valid
    old_weights = report.profile.weights
    assert all(out_report.profile.weights[i] == old_weights[walk[i]] - 3 for i in range(n))
    return path, out
