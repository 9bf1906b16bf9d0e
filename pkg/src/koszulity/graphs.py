"""Finite simple graphs: parsing, cliques, the diagonal property, and
elementary-type decompositions.

Vertices are 0..n-1.  Graphs are immutable; edges are stored as a frozenset
of (u, v) pairs with u < v.  The "diagonal property" holds when no four
vertices induce a square (C4) or a path (P4); graphs with the property are
exactly those built from single vertices by disjoint unions and cones, and
elementary_type_decomposition recovers such a construction or reports a
violating 4-set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import InputError, ResourceLimitError

CANONICAL_MAX_VERTICES = 8


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    labels: tuple | None = None

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def build_graph(n: int, edges, labels=None) -> Graph:
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    norm = set()
    for u, v in edges:
        if u == v:
            raise InputError(
                f"loop ({u}, {u}) rejected: graphs here are simple and loop-free"
            )
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
        norm.add((u, v) if u < v else (v, u))
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise InputError("label count must equal vertex count")
    return Graph(n, frozenset(norm), labels)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line n, then one "u v" pair per
    line; '#' starts a comment, blank lines are skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise InputError("empty edge-list input")
    try:
        n = int(rows[0])
    except ValueError:
        raise InputError(f"first line must be the vertex count, got {rows[0]!r}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"expected 'u v' on edge line, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"non-integer vertex on edge line {line!r}")
        edges.append((u, v))
    return build_graph(n, edges)


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 string (n <= 62)."""
    s = line.strip()
    header = ">>graph6<<"
    if s.startswith(header):
        s = s[len(header):]
    if not s:
        raise InputError("empty graph6 input")
    if s[0] == "~":
        raise InputError("long-form graph6 (n >= 63) is not supported")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise InputError(f"invalid graph6 size byte {s[0]!r}")
    m = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (m + 5) // 6:
        raise InputError(
            f"graph6 body for n={n} needs {(m + 5) // 6} bytes, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise InputError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[m:]):
        raise InputError("nonzero padding bits in graph6 encoding")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise InputError("short-form graph6 supports at most 62 vertices")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def induced_subgraph(g: Graph, verts) -> Graph:
    """Subgraph induced on verts, relabeled 0..len(verts)-1 in sorted order."""
    vs = sorted(verts)
    pos = {v: i for i, v in enumerate(vs)}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    ]
    return build_graph(len(vs), edges)


def enumerate_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques as sorted vertex tuples, in lexicographic order."""
    if k < 0:
        raise InputError("clique size must be nonnegative")
    if k == 0:
        return [()]
    if k == 1:
        return [(v,) for v in range(g.n)]
    adj = g.adj
    out = []
    for combo in itertools.combinations(range(g.n), k):
        ok = True
        for a, b in itertools.combinations(combo, 2):
            if b not in adj[a]:
                ok = False
                break
        if ok:
            out.append(combo)
    return out


def clique_number(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        if enumerate_cliques(g, k):
            best = k
        else:
            break
    return best


@dataclass(frozen=True)
class DiagonalViolation:
    """Four vertices inducing a square or a path, labeled so that
    v1-v2, v2-v3, v3-v4 are edges (and v4-v1 as well for kind C4) while
    v1-v3 and v2-v4 are non-edges (and v1-v4 for kind P4)."""

    kind: str  # "C4" or "P4"
    v1: int
    v2: int
    v3: int
    v4: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.v1, self.v2, self.v3, self.v4)))


def _matches_pattern(g: Graph, w: DiagonalViolation) -> bool:
    e = g.has_edge
    req = [(w.v1, w.v2), (w.v2, w.v3), (w.v3, w.v4)]
    forb = [(w.v1, w.v3), (w.v2, w.v4)]
    if w.kind == "C4":
        req.append((w.v4, w.v1))
    else:
        forb.append((w.v1, w.v4))
    return all(e(a, b) for a, b in req) and not any(e(a, b) for a, b in forb)


def _label_quad(g: Graph, quad: tuple[int, ...]) -> DiagonalViolation | None:
    inside = [
        (a, b) for a, b in itertools.combinations(quad, 2) if g.has_edge(a, b)
    ]
    deg = {v: 0 for v in quad}
    for a, b in inside:
        deg[a] += 1
        deg[b] += 1
    if len(inside) == 4 and all(d == 2 for d in deg.values()):
        # Square.  Anchor at the smallest vertex as v4; its non-neighbor in
        # the quad is v2; the two common neighbors become v1 < v3.
        v4 = quad[0]
        v2 = next(v for v in quad if v != v4 and not g.has_edge(v, v4))
        rest = sorted(v for v in quad if v not in (v4, v2))
        w = DiagonalViolation("C4", rest[0], v2, rest[1], v4)
    elif len(inside) == 3 and sorted(deg.values()) == [1, 1, 2, 2]:
        # Path.  v1 is the smaller endpoint, then walk along the path.
        ends = sorted(v for v in quad if deg[v] == 1)
        v1 = ends[0]
        v2 = next(v for v in quad if deg[v] == 2 and g.has_edge(v, v1))
        v3 = next(v for v in quad if deg[v] == 2 and v != v2)
        w = DiagonalViolation("P4", v1, v2, v3, ends[1])
    else:
        return None
    assert _matches_pattern(g, w)
    return w


def diagonal_violation(g: Graph) -> DiagonalViolation | None:
    """First violating 4-set in lexicographic order, or None."""
    for quad in itertools.combinations(range(g.n), 4):
        w = _label_quad(g, quad)
        if w is not None:
            return w
    return None


def has_diagonal_property(g: Graph) -> bool:
    return diagonal_violation(g) is None


@dataclass(frozen=True)
class LeafNode:
    vertex: int


@dataclass(frozen=True)
class UnionNode:
    children: tuple


@dataclass(frozen=True)
class ConeNode:
    apex: int
    base: object


def tree_vertices(node) -> frozenset:
    if isinstance(node, LeafNode):
        return frozenset((node.vertex,))
    if isinstance(node, ConeNode):
        return tree_vertices(node.base) | {node.apex}
    return frozenset().union(*(tree_vertices(c) for c in node.children))


def reconstruct(node, n: int) -> Graph:
    """Rebuild the graph described by a decomposition tree on n vertices."""

    def edges_of(nd) -> tuple[frozenset, set]:
        if isinstance(nd, LeafNode):
            return frozenset((nd.vertex,)), set()
        if isinstance(nd, UnionNode):
            verts: frozenset = frozenset()
            edges: set = set()
            for c in nd.children:
                cv, ce = edges_of(c)
                verts |= cv
                edges |= ce
            return verts, edges
        bv, be = edges_of(nd.base)
        be |= {(min(nd.apex, v), max(nd.apex, v)) for v in bv}
        return bv | {nd.apex}, be

    verts, edges = edges_of(node)
    if verts != frozenset(range(n)):
        raise InputError("decomposition tree does not cover vertices 0..n-1")
    return build_graph(n, edges)


def _components(g: Graph, verts: tuple[int, ...]) -> list[tuple[int, ...]]:
    todo = set(verts)
    comps = []
    while todo:
        start = min(todo)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u in todo and u not in seen:
                    seen.add(u)
                    stack.append(u)
        todo -= seen
        comps.append(tuple(sorted(seen)))
    comps.sort(key=lambda c: c[0])
    return comps


def _decompose(g: Graph, verts: tuple[int, ...]):
    if len(verts) == 1:
        return LeafNode(verts[0])
    comps = _components(g, verts)
    if len(comps) > 1:
        children = []
        for comp in comps:
            child = _decompose(g, comp)
            if child is None:
                return None
            children.append(child)
        return UnionNode(tuple(children))
    vset = set(verts)
    apex = None
    for v in verts:  # verts sorted ascending: the lowest universal vertex wins
        if len(g.adj[v] & vset) == len(verts) - 1:
            apex = v
            break
    if apex is None:
        return None
    rest = tuple(v for v in verts if v != apex)
    base = _decompose(g, rest)
    return None if base is None else ConeNode(apex, base)


def elementary_type_decomposition(g: Graph):
    """Decomposition tree (LeafNode / UnionNode / ConeNode) when the graph
    has the diagonal property, otherwise the DiagonalViolation witnessing
    failure.  Peeling: split disconnected graphs, strip the lowest universal
    vertex of connected ones."""
    if g.n == 0:
        raise InputError("cannot decompose the empty graph")
    tree = _decompose(g, tuple(range(g.n)))
    if tree is not None:
        return tree
    w = diagonal_violation(g)
    if w is None:  # unreachable: peeling fails only without the property
        raise RuntimeError("decomposition failed yet no violating 4-set exists")
    return w


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    edges = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return build_graph(g1.n + g2.n, edges)


def cone(g: Graph) -> Graph:
    """Add a universal apex as the new highest-index vertex."""
    edges = list(g.edges) + [(v, g.n) for v in range(g.n)]
    return build_graph(g.n + 1, edges)


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    pi = np.array([a for a, _ in pairs], dtype=np.int64)
    pj = np.array([b for _, b in pairs], dtype=np.int64)
    m = len(pairs)
    weights = (1 << np.arange(m - 1, -1, -1)).astype(np.int64)
    return perms, pi, pj, weights


def canonical_graph(g: Graph) -> Graph:
    """Isomorphic copy with the lexicographically minimal adjacency bits
    (upper triangle in graph6 column order) over all vertex permutations."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ResourceLimitError(
            f"canonical form refused for n={g.n} > {CANONICAL_MAX_VERTICES} "
            "(factorial permutation search)"
        )
    if g.n <= 1 or not g.edges:
        return build_graph(g.n, [])
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        a[u, v] = a[v, u] = True
    perms, pi, pj, weights = _perm_tables(g.n)
    bits = a[perms[:, pi], perms[:, pj]]
    best = int((bits.astype(np.int64) @ weights).min())
    m = len(pi)
    edges = []
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            if (best >> (m - 1 - k)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(g.n, edges)


def canonical_form(g: Graph) -> str:
    """Canonical key: graph6 string of canonical_graph(g).  Two graphs get
    equal keys exactly when they are isomorphic."""
    return to_graph6(canonical_graph(g))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes on exactly n vertices, as canonical
    representatives sorted by canonical key.

    Built by extending every class on n-1 vertices with one new vertex and
    every possible neighborhood, then deduplicating; every n-vertex graph
    arises this way (delete its last vertex).
    """
    if n < 1:
        raise InputError("class enumeration needs n >= 1")
    if n == 1:
        return (build_graph(1, []),)
    seen: dict[str, Graph] = {}
    for g in nonisomorphic_graphs(n - 1):
        base = list(g.edges)
        for mask in range(2 ** (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if (mask >> v) & 1]
            h = canonical_graph(build_graph(n, base + extra))
            seen.setdefault(to_graph6(h), h)
    return tuple(seen[k] for k in sorted(seen))
