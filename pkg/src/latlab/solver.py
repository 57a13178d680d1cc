"""Exact minimum-distinct-weight computation.

Two independent routes to the same quantity:
  * brute_force_min_distinct enumerates every bijection (numpy-chunked) and
    serves as the oracle for small label universes.
  * solve_min_distinct / find_with_at_most_k run a pruned backtracking
    search over label slots and scale further.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import islice, permutations
from typing import Optional, Tuple, Union

from .errors import ParameterError, TooLargeError
from .graph import FamilySpec, Graph
from .labeling import (EdgeLabeling, TotalLabeling, verify_edge, verify_total)

BRUTE_FORCE_UNIVERSE_LIMIT = 10


class SearchMode(str, Enum):
    TOTAL = "total"
    EDGE = "edge"


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: Optional[int] = None
    max_millis: Optional[int] = None
    deterministic: bool = True

    def __post_init__(self):
        if self.max_nodes is None and self.max_millis is None:
            raise ParameterError("at least one of max_nodes / max_millis must be set")
        for limit in (self.max_nodes, self.max_millis):
            if limit is not None and limit <= 0:
                raise ParameterError("budget limits must be positive")


GENEROUS_BUDGET = SolveBudget(max_nodes=200_000_000, max_millis=600_000)

Labeling = Union[TotalLabeling, EdgeLabeling]


@dataclass(frozen=True)
class SolveResult:
    status: str  # "exact" | "lower_upper" | "infeasible" | "exhausted"
    value: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    certificate: Optional[Labeling] = None
    nodes_explored: int = 0


@dataclass(frozen=True)
class FeasibilityResult:
    status: str  # "found" | "none" | "unknown"
    certificate: Optional[Labeling] = None
    nodes_explored: int = 0


# ---------------------------------------------------------------------------
# Slot model: in total mode slot v (v < p) is vertex v and slot p+e is edge e;
# in edge mode slot e is edge e.  vslots[v] lists the slots feeding v's weight.

def _slot_model(g: Graph, mode: SearchMode):
    if mode is SearchMode.TOTAL:
        n = g.p + g.q
        vslots = [(v,) + tuple(g.p + e for e in g.incident_edges(v)) for v in range(g.p)]
    else:
        n = g.q
        vslots = [tuple(g.incident_edges(v)) for v in range(g.p)]
    touches = [[] for _ in range(n)]
    for v, slots in enumerate(vslots):
        for s in slots:
            touches[s].append(v)
    return n, vslots, [tuple(t) for t in touches]


def _slot_order(g: Graph, mode: SearchMode):
    """Static slot order: complete vertex weights as early as possible.

    Greedy: pick the slot finishing the most vertices; tie-break by how
    close it brings its nearest vertex to completion, then by slot index.
    """
    n, vslots, touches = _slot_model(g, mode)
    need = [len(s) for s in vslots]
    placed = [False] * n
    order = []
    for _ in range(n):
        best_s, best_key = None, None
        for s in range(n):
            if placed[s]:
                continue
            completes = sum(1 for v in touches[s] if need[v] == 1)
            closeness = min((need[v] - 1 for v in touches[s]), default=n + 1)
            key = (-completes, closeness, s)
            if best_key is None or key < best_key:
                best_s, best_key = s, key
        placed[best_s] = True
        order.append(best_s)
        for v in touches[best_s]:
            need[v] -= 1
    return order


def _labeling_from_assignment(g: Graph, mode: SearchMode, assign) -> Labeling:
    if mode is SearchMode.TOTAL:
        return TotalLabeling(tuple(assign[: g.p]), tuple(assign[g.p:]))
    return EdgeLabeling(tuple(assign))


def symmetry_orbit(g: Graph, spec: Optional[FamilySpec], mode: SearchMode):
    """A transitive automorphic slot orbit for families where it is known
    a priori: cycle rotation on edges, complete-graph symmetry."""
    if spec is None:
        return None
    if spec.kind == "cycle":
        if mode is SearchMode.TOTAL:
            return tuple(range(g.p, g.p + g.q))
        return tuple(range(g.q))
    if spec.kind == "complete":
        if mode is SearchMode.TOTAL:
            return tuple(range(g.p)) if g.p >= 2 else None
        return tuple(range(g.q)) if g.q >= 2 else None
    return None


def _has_isolated_edge(g: Graph) -> bool:
    return any(g.degree(u) == 1 and g.degree(v) == 1 for u, v in g.edges)


class _BudgetExceeded(Exception):
    pass


class _Stop(Exception):
    pass


class _Search:
    """Backtracking over label slots with incremental weight bookkeeping."""

    def __init__(self, g: Graph, mode: SearchMode, budget: SolveBudget,
                 family: Optional[FamilySpec] = None, pruning: bool = True):
        self.g = g
        self.mode = mode
        self.n, self.vslots, self.touches = _slot_model(g, mode)
        self.order = _slot_order(g, mode)
        self.assign = [0] * self.n
        self.used = [False] * (self.n + 1)
        self.wpart = [0] * g.p
        self.pending = [len(s) for s in self.vslots]
        self.wcount = {}
        self.nodes = 0
        self.pruning = pruning
        self.allowed = g.p  # max distinct weights tolerated in this search
        self.max_nodes = budget.max_nodes
        self.deadline = (time.monotonic() + budget.max_millis / 1000.0
                         if budget.max_millis is not None else None)
        # vertices with no contributing slots (isolated, edge mode) weigh 0
        for v in range(g.p):
            if self.pending[v] == 0:
                self.wcount[0] = self.wcount.get(0, 0) + 1

        self.orbit_rest = frozenset()
        self.orbit_star = None
        if pruning:
            orbit = symmetry_orbit(g, family, mode)
            if orbit and len(orbit) >= 2:
                pos = {s: i for i, s in enumerate(self.order)}
                star = min(orbit, key=lambda s: pos[s])
                self.orbit_star = star
                self.orbit_rest = frozenset(set(orbit) - {star})

    # -- incremental assignment ------------------------------------------

    def _apply(self, s: int, label: int):
        """Place label on slot s; returns True unless a weight conflict
        between adjacent completed vertices appears (then fully undone)."""
        g = self.g
        done = []
        for v in self.touches[s]:
            self.wpart[v] += label
            self.pending[v] -= 1
            if self.pending[v] == 0:
                done.append(v)
        conflict = False
        registered = 0
        for v in done:
            w = self.wpart[v]
            for u in g.neighbors(v):
                if self.pending[u] == 0 and self.wpart[u] == w and u != v:
                    conflict = True
                    break
            if conflict:
                break
            self.wcount[w] = self.wcount.get(w, 0) + 1
            registered += 1
        if conflict:
            for v in done[:registered]:
                self._forget_weight(self.wpart[v])
            for v in self.touches[s]:
                self.wpart[v] -= label
                self.pending[v] += 1
            return False
        self.assign[s] = label
        self.used[label] = True
        return True

    def _forget_weight(self, w: int):
        c = self.wcount[w]
        if c == 1:
            del self.wcount[w]
        else:
            self.wcount[w] = c - 1

    def _unapply(self, s: int, label: int):
        for v in self.touches[s]:
            if self.pending[v] == 0:
                self._forget_weight(self.wpart[v])
            self.wpart[v] -= label
            self.pending[v] += 1
        self.assign[s] = 0
        self.used[label] = False

    # -- search ----------------------------------------------------------

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.deadline is not None and (self.nodes & 1023) == 0 \
                and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def search(self, depth: int, on_solution):
        if depth == self.n:
            on_solution()
            return
        s = self.order[depth]
        lo = 1
        if s in self.orbit_rest:
            # the orbit representative (earlier in the order) keeps the
            # orbit's smallest label
            lo = self.assign[self.orbit_star] + 1
        for label in range(lo, self.n + 1):
            if self.used[label]:
                continue
            self._tick()
            if self._apply(s, label):
                if not self.pruning or len(self.wcount) <= self.allowed:
                    self.search(depth + 1, on_solution)
                self._unapply(s, label)


def _initial_lower(g: Graph, mode: SearchMode) -> int:
    from .bounds import chi_lat_lower_bound
    try:
        if mode is SearchMode.TOTAL:
            return max(1, chi_lat_lower_bound(g))
        from .coloring import chromatic_number
        return max(1, chromatic_number(g))
    except TooLargeError:
        return max(1, len(g.isolated_vertices()))


def solve_min_distinct(g: Graph, mode: SearchMode, budget: SolveBudget = GENEROUS_BUDGET,
                       family: Optional[FamilySpec] = None,
                       pruning: bool = True) -> SolveResult:
    """Minimum distinct-weight count by branch and bound.

    Returns an exact value with a verified certificate when the search
    closes; budget exhaustion yields bounds (or exhausted), never a wrong
    exact answer.
    """
    mode = SearchMode(mode)
    if g.p == 0:
        return SolveResult("exact", value=0, lower=0, upper=0,
                           certificate=_labeling_from_assignment(g, mode, []))
    if mode is SearchMode.EDGE and _has_isolated_edge(g):
        return SolveResult("infeasible")
    lower = _initial_lower(g, mode)
    srch = _Search(g, mode, budget, family=family, pruning=pruning)
    state = {"best": None, "assign": None}

    def on_solution():
        d = len(srch.wcount)
        if state["best"] is None or d < state["best"]:
            state["best"] = d
            state["assign"] = list(srch.assign)
            srch.allowed = d - 1
            if d <= lower:
                raise _Stop

    closed = True
    try:
        srch.search(0, on_solution)
    except _Stop:
        pass
    except _BudgetExceeded:
        closed = False

    best, nodes = state["best"], srch.nodes
    if best is not None and (closed or best <= lower):
        cert = _labeling_from_assignment(g, mode, state["assign"])
        _assert_certificate(g, mode, cert, best)
        return SolveResult("exact", value=best, lower=best, upper=best,
                           certificate=cert, nodes_explored=nodes)
    if best is not None:
        cert = _labeling_from_assignment(g, mode, state["assign"])
        _assert_certificate(g, mode, cert, best)
        return SolveResult("lower_upper", lower=lower, upper=best,
                           certificate=cert, nodes_explored=nodes)
    if closed:
        return SolveResult("infeasible", nodes_explored=nodes)
    return SolveResult("exhausted", lower=lower, nodes_explored=nodes)


def find_with_at_most_k(g: Graph, k: int, mode: SearchMode,
                        budget: SolveBudget = GENEROUS_BUDGET,
                        family: Optional[FamilySpec] = None,
                        accept=None) -> FeasibilityResult:
    """Find any valid labeling with at most k distinct weights.

    Distinguishes found / definitively-none / unknown (budget ran out).
    An optional `accept(labeling)` predicate restricts which witnesses
    count (e.g. require some edge to carry label 1).
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    mode = SearchMode(mode)
    if g.p == 0:
        return FeasibilityResult("found", _labeling_from_assignment(g, mode, []))
    if mode is SearchMode.EDGE and _has_isolated_edge(g):
        return FeasibilityResult("none")
    srch = _Search(g, mode, budget, family=family)
    srch.allowed = k
    state = {"assign": None}

    def on_solution():
        if accept is not None and not accept(
                _labeling_from_assignment(g, mode, srch.assign)):
            return
        state["assign"] = list(srch.assign)
        raise _Stop

    try:
        srch.search(0, on_solution)
    except _Stop:
        cert = _labeling_from_assignment(g, mode, state["assign"])
        _assert_certificate(g, mode, cert, None)
        return FeasibilityResult("found", cert, srch.nodes)
    except _BudgetExceeded:
        return FeasibilityResult("unknown", nodes_explored=srch.nodes)
    return FeasibilityResult("none", nodes_explored=srch.nodes)


def iter_valid_labelings(g: Graph, mode: SearchMode, limit: int,
                         budget: SolveBudget = GENEROUS_BUDGET):
    """First `limit` valid labelings in deterministic search order."""
    mode = SearchMode(mode)
    srch = _Search(g, mode, budget, pruning=False)
    found = []

    def on_solution():
        found.append(_labeling_from_assignment(g, mode, srch.assign))
        if len(found) >= limit:
            raise _Stop

    try:
        srch.search(0, on_solution)
    except (_Stop, _BudgetExceeded):
        pass
    return found


def _assert_certificate(g: Graph, mode: SearchMode, cert: Labeling, value):
    report = verify_total(g, cert) if mode is SearchMode.TOTAL else verify_edge(g, cert)
    assert report.valid
    if value is not None:
        assert report.profile.distinct_count == value


# ---------------------------------------------------------------------------
# Brute-force oracle

def brute_force_min_distinct(g: Graph, mode: SearchMode) -> SolveResult:
    """Enumerate every bijection of the label universe (numpy-chunked).

    Independent of the backtracking route; used as the oracle on small
    instances.  Refuses universes larger than 10.
    """
    import numpy as np

    mode = SearchMode(mode)
    n, vslots, _ = _slot_model(g, mode)
    if n > BRUTE_FORCE_UNIVERSE_LIMIT:
        raise TooLargeError(
            f"label universe {n} exceeds brute-force limit {BRUTE_FORCE_UNIVERSE_LIMIT}")
    if g.p == 0:
        return SolveResult("exact", value=0, lower=0, upper=0,
                           certificate=_labeling_from_assignment(g, mode, []))

    best = None
    best_perm = None
    count = 0
    chunk_size = 120_000
    perms = permutations(range(1, n + 1))
    while True:
        chunk = list(islice(perms, chunk_size))
        if not chunk:
            break
        count += len(chunk)
        arr = np.array(chunk, dtype=np.int64).reshape(len(chunk), n)
        wcols = np.zeros((len(chunk), g.p), dtype=np.int64)
        for v in range(g.p):
            if vslots[v]:
                wcols[:, v] = arr[:, list(vslots[v])].sum(axis=1)
        valid = np.ones(len(chunk), dtype=bool)
        for u, v in g.edges:
            valid &= wcols[:, u] != wcols[:, v]
        if not valid.any():
            continue
        wv = wcols[valid]
        if g.p > 1:
            sw = np.sort(wv, axis=1)
            distinct = 1 + (np.diff(sw, axis=1) != 0).sum(axis=1)
        else:
            distinct = np.ones(wv.shape[0], dtype=np.int64)
        i = int(distinct.argmin())
        if best is None or int(distinct[i]) < best:
            best = int(distinct[i])
            best_perm = [chunk[j] for j in np.nonzero(valid)[0][i:i + 1]][0]

    if best is None:
        return SolveResult("infeasible", nodes_explored=count)
    cert = _labeling_from_assignment(g, mode, list(best_perm))
    _assert_certificate(g, mode, cert, best)
    return SolveResult("exact", value=best, lower=best, upper=best,
                       certificate=cert, nodes_explored=count)
