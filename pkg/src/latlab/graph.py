"""Immutable simple graphs, named family generators, join/union, and codecs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import ParameterError, ParseError, ValidationError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with canonical edge ordering.

    Edges are stored with endpoints ascending and the list sorted
    lexicographically, so edge ids are stable and certificates are
    reproducible.  Instances are immutable after construction.
    """

    p: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.p < 0:
            raise ValidationError("vertex count must be nonnegative")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.p):
                raise ValidationError(f"edge ({u},{v}) out of canonical form or range for p={self.p}")
            if prev is not None and (u, v) <= prev:
                raise ValidationError(f"edge list not sorted/duplicate at ({u},{v})")
            prev = (u, v)
        adj = [[] for _ in range(self.p)]
        incident = [[] for _ in range(self.p)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append(e)
            incident[v].append(e)
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_incident", tuple(tuple(i) for i in incident))

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from an arbitrary-order edge list, canonicalizing it."""
        canon = []
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i] == canon[i - 1]:
                raise ValidationError(f"duplicate edge {canon[i]}")
        return cls(p, tuple(canon))

    @property
    def q(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def isolated_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in range(self.p) if not self._adj[v])


# ---------------------------------------------------------------------------
# Combinators

def join(g: Graph, h: Graph) -> Graph:
    """Join g ∨ h: both graphs side by side plus all cross edges.

    Vertices of g keep their indices; vertices of h are shifted by g.p.
    """
    edges = list(g.edges)
    edges += [(u + g.p, v + g.p) for u, v in h.edges]
    edges += [(u, v + g.p) for u in range(g.p) for v in range(h.p)]
    return Graph.from_edges(g.p + h.p, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union: same index offsetting as join, no cross edges."""
    edges = list(g.edges) + [(u + g.p, v + g.p) for u, v in h.edges]
    return Graph.from_edges(g.p + h.p, edges)


# ---------------------------------------------------------------------------
# Families

_FAMILY_ARITY = {
    "empty": 1,
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "wheel": 1,
    "fan": 1,
    "k2_plus_empty": 1,
    "join_complete_cycle": 2,
    "cycle_join_empty": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance (cycle, wheel, fan, ...)."""

    kind: str
    params: Tuple[int, ...]

    def __post_init__(self):
        kind = self.kind
        if kind not in _FAMILY_ARITY:
            raise ParameterError(f"unknown family {kind!r}; one of {sorted(_FAMILY_ARITY)}")
        if len(self.params) != _FAMILY_ARITY[kind]:
            raise ParameterError(f"family {kind} takes {_FAMILY_ARITY[kind]} parameter(s)")
        n = self.params[0]
        if kind in ("empty", "complete", "k2_plus_empty") and n < 0:
            raise ParameterError(f"{kind} requires n >= 0, got {n}")
        if kind == "path" and n < 1:
            raise ParameterError(f"path requires n >= 1, got {n}")
        if kind in ("cycle", "wheel") and n < 3:
            raise ParameterError(f"{kind} requires n >= 3, got {n}")
        if kind == "fan" and n < 1:
            raise ParameterError(f"fan requires n >= 1, got {n}")
        if kind == "complete_bipartite" and (self.params[0] < 0 or self.params[1] < 0):
            raise ParameterError("complete_bipartite requires nonnegative part sizes")
        if kind == "join_complete_cycle" and (self.params[0] < 0 or self.params[1] < 3):
            raise ParameterError("join_complete_cycle requires m >= 0 and cycle length n >= 3")
        if kind == "cycle_join_empty" and (self.params[0] < 3 or self.params[1] < 0):
            raise ParameterError("cycle_join_empty requires cycle length p >= 3 and m >= 0")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse a spec string like 'cycle:4' or 'complete-bipartite:2:3'."""
        parts = text.replace("-", "_").split(":")
        kind = parts[0]
        try:
            params = tuple(int(x) for x in parts[1:])
        except ValueError as exc:
            raise ParameterError(f"non-integer family parameter in {text!r}") from exc
        return cls(kind, params)

    def __str__(self) -> str:
        return self.kind + "(" + ",".join(str(x) for x in self.params) + ")"


def generate(spec: FamilySpec) -> Graph:
    """Generate the canonical graph for a family.

    For cone families (wheel, fan, join with K1) the apex is the last
    vertex index, so the base graph keeps indices 0..n-1.
    """
    kind, params = spec.kind, spec.params
    n = params[0]
    if kind == "empty":
        return Graph(n, ())
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        a, b = params
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "wheel":
        return join(generate(FamilySpec("cycle", (n,))), Graph(1, ()))
    if kind == "fan":
        return join(generate(FamilySpec("path", (n,))), Graph(1, ()))
    if kind == "k2_plus_empty":
        return disjoint_union(generate(FamilySpec("complete", (2,))), Graph(n, ()))
    if kind == "join_complete_cycle":
        m, cn = params
        return join(generate(FamilySpec("cycle", (cn,))), generate(FamilySpec("complete", (m,))))
    if kind == "cycle_join_empty":
        cp, m = params
        return join(generate(FamilySpec("cycle", (cp,))), Graph(m, ()))
    raise ParameterError(f"unknown family {kind!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# Edge-list codec

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: optional 'p=<n>' first line, then 'u v' lines."""
    declared_p = None
    edges = []
    max_seen = -1
    offset = 0
    first = True
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped:
            if first and stripped.startswith("p="):
                try:
                    declared_p = int(stripped[2:])
                except ValueError:
                    raise ParseError(f"bad vertex-count line {stripped!r}", offset)
                if declared_p < 0:
                    raise ParseError("declared p must be nonnegative", offset)
            else:
                parts = stripped.split()
                if len(parts) != 2:
                    raise ParseError(f"expected two indices, got {stripped!r}", offset)
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise ParseError(f"non-integer vertex index in {stripped!r}", offset)
                if u < 0 or v < 0:
                    raise ParseError(f"negative vertex index in {stripped!r}", offset)
                edges.append((u, v))
                max_seen = max(max_seen, u, v)
            first = False
        offset += len(line.encode())
    p = declared_p if declared_p is not None else max_seen + 1
    if max_seen >= p:
        raise ValidationError(f"vertex index {max_seen} out of range for declared p={p}")
    return Graph.from_edges(p, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize in canonical order; the p= line appears only when needed."""
    lines = []
    implied = g.edges[-1][1] + 1 if g.edges else 0
    if g.p != implied:
        lines.append(f"p={g.p}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# graph6 codec (standard bit layout: upper triangle in column order,
# 6-bit chunks offset by 63)

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ParameterError(f"graph6 vertex count {n} exceeds supported range")


def graph6_encode(g: Graph) -> str:
    n = g.p
    out = [_g6_encode_n(n)]
    adj = [set(g.neighbors(v)) for v in range(n)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chr(chunk + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        s = s[base:]
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise ParseError(f"invalid graph6 character {ch!r}", base + i)
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise ParseError("unsupported or truncated graph6 size prefix", base)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
        body_base = base + 4
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        body_base = base + 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} chars, expected {need}", body_base)
    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits += [(x >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "graph6":
        return graph6_decode(text)
    raise ParameterError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return format_edge_list(g)
    if fmt == "graph6":
        return graph6_encode(g)
    raise ParameterError(f"unknown graph format {fmt!r}")
