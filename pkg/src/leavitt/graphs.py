"""Finite directed graphs and the combinatorics the algebra rests on.

A graph is a finite list of named vertices plus a finite list of named edges,
each with a source and a range vertex. Names live in one shared namespace (a
vertex and an edge may never collide), so a bare name in an expression or an
output line is always unambiguous. Declaration order is preserved everywhere
and every function iterates in it, which makes all downstream computation
deterministic.

Alongside the data type live the purely combinatorial notions the algebraic
decision procedures consume: reachability trees, bifurcations, line points,
hereditary and saturated vertex sets with their closure, simple cycles and
Condition (L), quotient graphs, and the hedgehog extension of a hereditary
set by its entry paths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphError(Exception):
    """Base class for graph construction and query failures."""


class GraphParseError(GraphError):
    """A graph description could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class UnknownVertexError(GraphError):
    """A vertex name does not occur in the graph."""


class SubsetError(GraphError):
    """A vertex subset lacks a property the operation requires."""


class CycleError(GraphError):
    """A path fails to be the kind of cycle the operation requires."""


class CyclicGraphError(GraphError):
    """An operation defined only for acyclic graphs met a cycle."""


class Edge(NamedTuple):
    name: str
    source: str
    range: str


@dataclass(frozen=True)
class Path:
    """A finite directed path: a source vertex plus a tuple of edge names.

    An empty edge tuple is the trivial path at its source. Build paths
    through Graph.path, Graph.trivial_path, or Graph.concat so that
    consecutive edges are checked to chain.
    """

    source: str
    edges: tuple[str, ...]
    range: str

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges


class Graph:
    """An immutable finite directed graph with named vertices and edges."""

    __slots__ = ("vertices", "edges", "_vindex", "_eindex", "_out", "_in")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge] = ()):
        self.vertices = tuple(vertices)
        self.edges = tuple(Edge(*e) for e in edges)
        if not self.vertices:
            raise GraphError("a graph needs at least one vertex")
        names: set[str] = set()
        for v in self.vertices:
            if not v:
                raise GraphError("empty vertex name")
            if v in names:
                raise GraphError("duplicate name %r" % v)
            names.add(v)
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self._eindex: dict[str, int] = {}
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        inn: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            if not e.name:
                raise GraphError("empty edge name")
            if e.name in names:
                raise GraphError("duplicate name %r" % e.name)
            names.add(e.name)
            if e.source not in self._vindex:
                raise GraphError("edge %r has unknown source %r" % (e.name, e.source))
            if e.range not in self._vindex:
                raise GraphError("edge %r has unknown range %r" % (e.name, e.range))
            self._eindex[e.name] = i
            out[e.source].append(e)
            inn[e.range].append(e)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inn.items()}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and other.vertices == self.vertices
            and other.edges == self.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return "Graph(%d vertices, %d edges)" % (len(self.vertices), len(self.edges))

    # ------------------------------------------------------------------
    # lookups
    # ------------------------------------------------------------------

    def has_vertex(self, name: str) -> bool:
        return name in self._vindex

    def require_vertex(self, name: str) -> str:
        if name not in self._vindex:
            raise UnknownVertexError("unknown vertex %r" % name)
        return name

    def vertex_index(self, name: str) -> int:
        self.require_vertex(name)
        return self._vindex[name]

    def has_edge(self, name: str) -> bool:
        return name in self._eindex

    def edge(self, name: str) -> Edge:
        if name not in self._eindex:
            raise GraphError("unknown edge %r" % name)
        return self.edges[self._eindex[name]]

    def edge_index(self, name: str) -> int:
        self.edge(name)
        return self._eindex[name]

    def out_edges(self, vertex: str) -> tuple[Edge, ...]:
        self.require_vertex(vertex)
        return self._out[vertex]

    def in_edges(self, vertex: str) -> tuple[Edge, ...]:
        self.require_vertex(vertex)
        return self._in[vertex]

    def out_degree(self, vertex: str) -> int:
        return len(self.out_edges(vertex))

    def is_sink(self, vertex: str) -> bool:
        return not self.out_edges(vertex)

    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self._out[v])

    # ------------------------------------------------------------------
    # paths
    # ------------------------------------------------------------------

    def trivial_path(self, vertex: str) -> Path:
        self.require_vertex(vertex)
        return Path(vertex, (), vertex)

    def path(self, source: str, edge_names: Iterable[str]) -> Path:
        """Build a path from its source and edge names, checking the chain."""
        self.require_vertex(source)
        at = source
        names = tuple(edge_names)
        for name in names:
            e = self.edge(name)
            if e.source != at:
                raise GraphError(
                    "edge %r starts at %r, expected %r" % (name, e.source, at)
                )
            at = e.range
        return Path(source, names, at)

    def concat(self, first: Path, second: Path) -> Path:
        if first.range != second.source:
            raise GraphError(
                "paths do not chain: %r ends at %r, next starts at %r"
                % (first.edges, first.range, second.source)
            )
        return Path(first.source, first.edges + second.edges, second.range)

    def extend(self, path: Path, edge: Edge) -> Path:
        """Append one edge; the caller guarantees edge.source == path.range."""
        return Path(path.source, path.edges + (edge.name,), edge.range)

    def path_vertices(self, path: Path) -> tuple[str, ...]:
        """The len(path)+1 vertices the path visits, in order."""
        out = [path.source]
        for name in path.edges:
            out.append(self.edge(name).range)
        return tuple(out)

    def path_sort_key(self, path: Path) -> tuple:
        """Shortlex: length, then source index, then edge indices."""
        return (
            len(path.edges),
            self._vindex[path.source],
            tuple(self._eindex[n] for n in path.edges),
        )

    def sorted_vertices(self, subset: Iterable[str]) -> tuple[str, ...]:
        """The given vertices in declaration order, validated."""
        vs = set(subset)
        for v in vs:
            self.require_vertex(v)
        return tuple(v for v in self.vertices if v in vs)


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_]\w*\Z")
_EDGE_RE = re.compile(
    r"edge\s+([A-Za-z_]\w*)\s*:\s*([A-Za-z_]\w*)\s*->\s*([A-Za-z_]\w*)\Z"
)


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Lines are either ``vertices: name name ...`` (may repeat, lists
    accumulate), ``edge name: source -> range``, blank, or a ``#`` comment.
    Edges may be declared before the vertices line that introduces their
    endpoints; endpoint existence is checked once the whole text is read.
    """
    vertices: list[str] = []
    pending: list[tuple[Edge, int]] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            body = line[len("vertices:"):].strip()
            if not body:
                raise GraphParseError("empty vertex list", lineno)
            for name in body.split():
                if not _NAME_RE.match(name):
                    raise GraphParseError("bad vertex name %r" % name, lineno)
                if name in seen:
                    raise GraphParseError("duplicate name %r" % name, lineno)
                seen.add(name)
                vertices.append(name)
            continue
        m = _EDGE_RE.match(line)
        if m:
            name, source, range_ = m.groups()
            if name in seen:
                raise GraphParseError("duplicate name %r" % name, lineno)
            seen.add(name)
            pending.append((Edge(name, source, range_), lineno))
            continue
        raise GraphParseError("cannot parse %r" % line, lineno)
    if not vertices:
        raise GraphParseError("no vertices declared")
    vset = set(vertices)
    for e, lineno in pending:
        if e.source not in vset:
            raise GraphParseError("unknown source vertex %r" % e.source, lineno)
        if e.range not in vset:
            raise GraphParseError("unknown range vertex %r" % e.range, lineno)
    return Graph(vertices, [e for e, _ in pending])


# ----------------------------------------------------------------------
# reachability, bifurcations, line points
# ----------------------------------------------------------------------

def tree(graph: Graph, vertices: str | Iterable[str]) -> frozenset[str]:
    """All vertices reachable from the given ones, themselves included.

    Accepts a single vertex name or any iterable of names.
    """
    seeds = [vertices] if isinstance(vertices, str) else list(vertices)
    for v in seeds:
        graph.require_vertex(v)
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        at = stack.pop()
        for e in graph.out_edges(at):
            if e.range not in seen:
                seen.add(e.range)
                stack.append(e.range)
    return frozenset(seen)


def is_bifurcation(graph: Graph, vertex: str) -> bool:
    return graph.out_degree(vertex) >= 2


def vertices_on_cycles(graph: Graph) -> frozenset[str]:
    """Vertices lying on at least one closed path."""
    on = set()
    for v in graph.vertices:
        for e in graph.out_edges(v):
            if v in tree(graph, e.range):
                on.add(v)
                break
    return frozenset(on)


def is_acyclic(graph: Graph) -> bool:
    """Whether the graph has no closed path.

    Linear-time three-colour depth-first search; preferred over
    ``vertices_on_cycles`` when only the yes/no answer is needed.
    """
    state = {v: 0 for v in graph.vertices}
    for start in graph.vertices:
        if state[start]:
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        state[start] = 1
        while stack:
            at, i = stack[-1]
            outs = graph.out_edges(at)
            if i < len(outs):
                stack[-1] = (at, i + 1)
                nxt = outs[i].range
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, 0))
            else:
                state[at] = 2
                stack.pop()
    return True


def line_points(graph: Graph) -> tuple[str, ...]:
    """Vertices whose tree contains no bifurcation and meets no cycle.

    Returned in declaration order.
    """
    bad = set(vertices_on_cycles(graph))
    bad.update(v for v in graph.vertices if is_bifurcation(graph, v))
    return tuple(v for v in graph.vertices if not (tree(graph, v) & bad))


# ----------------------------------------------------------------------
# hereditary and saturated sets
# ----------------------------------------------------------------------

def _vertex_set(graph: Graph, subset: Iterable[str]) -> frozenset[str]:
    vs = frozenset(subset)
    for v in vs:
        graph.require_vertex(v)
    return vs


def is_hereditary(graph: Graph, subset: Iterable[str]) -> bool:
    """Closed under ranges: an edge out of the set cannot leave it."""
    h = _vertex_set(graph, subset)
    return all(e.range in h for e in graph.edges if e.source in h)


def is_saturated(graph: Graph, subset: Iterable[str]) -> bool:
    """Contains every non-sink all of whose edge ranges it contains."""
    h = _vertex_set(graph, subset)
    for v in graph.vertices:
        if v in h or graph.is_sink(v):
            continue
        if all(e.range in h for e in graph.out_edges(v)):
            return False
    return True


def hereditary_saturated_closure(graph: Graph, subset: Iterable[str]) -> frozenset[str]:
    """The least hereditary and saturated superset."""
    h = set(_vertex_set(graph, subset))
    changed = True
    while changed:
        changed = False
        for e in graph.edges:
            if e.source in h and e.range not in h:
                h.add(e.range)
                changed = True
        for v in graph.vertices:
            if v in h or graph.is_sink(v):
                continue
            if all(e.range in h for e in graph.out_edges(v)):
                h.add(v)
                changed = True
    return frozenset(h)


# ----------------------------------------------------------------------
# cycles and Condition (L)
# ----------------------------------------------------------------------

def simple_cycles(graph: Graph) -> tuple[Path, ...]:
    """All simple closed paths, one canonical rotation each.

    Each cycle is rooted at its least-declared vertex; parallel edges give
    distinct cycles. Results are sorted shortlex. The search from an anchor
    never descends below the anchor's index, so every cycle is produced
    exactly once.
    """
    results: list[Path] = []

    def walk(anchor: str, anchor_idx: int, at: str, used: list[str], visited: set[str]) -> None:
        for e in graph.out_edges(at):
            if graph.vertex_index(e.range) < anchor_idx:
                continue
            if e.range == anchor:
                results.append(Path(anchor, tuple(used) + (e.name,), anchor))
            elif e.range not in visited:
                visited.add(e.range)
                used.append(e.name)
                walk(anchor, anchor_idx, e.range, used, visited)
                used.pop()
                visited.remove(e.range)

    for anchor_idx, anchor in enumerate(graph.vertices):
        walk(anchor, anchor_idx, anchor, [], {anchor})
    results.sort(key=graph.path_sort_key)
    return tuple(results)


def require_cycle(graph: Graph, path: Path) -> Path:
    """Check that a path is a simple cycle: nontrivial, closed, no revisits."""
    if path.is_trivial:
        raise CycleError("the trivial path is not a cycle")
    verts = graph.path_vertices(path)
    if verts[0] != verts[-1]:
        raise CycleError("path from %r to %r is not closed" % (verts[0], verts[-1]))
    body = verts[:-1]
    if len(set(body)) != len(body):
        raise CycleError("closed path revisits a vertex before closing")
    return path


def cycle_has_exit(graph: Graph, cycle: Path) -> bool:
    """Whether some edge leaves a cycle vertex without being the cycle's
    own continuation. A simple cycle uses exactly one out-edge per vertex,
    so this is an out-degree check."""
    require_cycle(graph, cycle)
    return any(graph.out_degree(v) >= 2 for v in graph.path_vertices(cycle)[:-1])


def condition_L(graph: Graph) -> bool:
    """Every simple cycle has an exit.

    A cycle with no exit lives inside the set of vertices with exactly one
    out-edge, where the walk is deterministic; following those walks and
    looking for a return is linear in the graph.
    """
    step = {
        v: graph.out_edges(v)[0].range
        for v in graph.vertices
        if graph.out_degree(v) == 1
    }
    state = {v: 0 for v in step}  # 0 new, 1 on current trail, 2 finished
    for start in step:
        if state[start]:
            continue
        trail = []
        at = start
        while at in step and state[at] == 0:
            state[at] = 1
            trail.append(at)
            at = step[at]
        if at in step and state[at] == 1:
            return False
        for v in trail:
            state[v] = 2
    return True


# ----------------------------------------------------------------------
# quotient and hedgehog graphs
# ----------------------------------------------------------------------

def quotient_graph(graph: Graph, subset: Iterable[str]) -> Graph:
    """The graph on the vertices outside a hereditary saturated set.

    Surviving edges are those whose range survives; hereditarity guarantees
    their sources survive too. The quotient by the full vertex set would be
    empty and is rejected.
    """
    h = _vertex_set(graph, subset)
    if not is_hereditary(graph, h):
        raise SubsetError("subset is not hereditary")
    if not is_saturated(graph, h):
        raise SubsetError("subset is not saturated")
    vertices = [v for v in graph.vertices if v not in h]
    if not vertices:
        raise SubsetError("quotient by the whole vertex set is empty")
    return Graph(vertices, [e for e in graph.edges if e.range not in h])


@dataclass(frozen=True)
class HedgehogGraph:
    """A hereditary set extended by one spine per path entering it.

    graph holds the assembled result: the restriction of the original graph
    to the set, plus a fresh vertex per entry path (named by its dotted edge
    list) carrying a single edge (same name with an ``@`` prefix) to the
    path's range. complete is False when a cycle outside the set reaches it
    (entry paths are then infinite in number; one such cycle is recorded) or
    when the depth bound cut enumeration short.
    """

    graph: Graph
    ideal_part: tuple[str, ...]
    entry_part: tuple[str, ...]
    complete: bool
    blocking_cycle: Path | None


def entry_paths(graph: Graph, subset: Iterable[str], max_length: int) -> list[Path]:
    """Paths that end inside the set having stayed outside it before.

    A path e1 ... en qualifies when its range lies in the set and every
    earlier vertex (source included) lies outside. Results are sorted
    shortlex; lengths run up to max_length.
    """
    h = _vertex_set(graph, subset)
    layer = [
        Path(e.source, (e.name,), e.range)
        for e in graph.edges
        if e.source not in h and e.range in h
    ]
    found: list[Path] = []
    length = 1
    while layer and length <= max_length:
        layer.sort(key=graph.path_sort_key)
        found.extend(layer)
        layer = [
            Path(e.source, (e.name,) + p.edges, p.range)
            for p in layer
            for e in graph.in_edges(p.source)
            if e.source not in h
        ]
        length += 1
    return found


def hedgehog_graph(
    graph: Graph, subset: Iterable[str], depth_bound: int | None = None
) -> HedgehogGraph:
    """Attach a spine vertex and edge for each path entering a hereditary set.

    With no cycle outside the set reaching it, entry paths cannot revisit a
    vertex, so the default depth bound (vertex count + 1) captures every one
    of them and the result is complete.
    """
    h = _vertex_set(graph, subset)
    if not is_hereditary(graph, h):
        raise SubsetError("subset is not hereditary")
    if depth_bound is None:
        depth_bound = len(graph.vertices) + 1

    reaching = {
        v for v in graph.vertices if v not in h and tree(graph, v) & h
    }
    blocking = None
    for cycle in simple_cycles(graph):
        if all(v in reaching for v in graph.path_vertices(cycle)[:-1]):
            blocking = cycle
            break

    # Every entry path of length l+1 extends one of length l, so the
    # enumeration has no gaps: one probe layer past the bound settles
    # completeness.
    probed = entry_paths(graph, h, depth_bound + 1)
    spines = [p for p in probed if len(p) <= depth_bound]
    complete = blocking is None and len(spines) == len(probed)

    vertices = list(graph.sorted_vertices(h))
    edges = [e for e in graph.edges if e.source in h]
    entry_names = []
    for p in spines:
        name = ".".join(p.edges)
        entry_names.append(name)
        vertices.append(name)
        edges.append(Edge("@" + name, name, p.range))
    if not vertices:
        raise SubsetError("hedgehog of the empty set is empty")
    return HedgehogGraph(
        graph=Graph(vertices, edges),
        ideal_part=graph.sorted_vertices(h),
        entry_part=tuple(entry_names),
        complete=complete,
        blocking_cycle=blocking,
    )


# ----------------------------------------------------------------------
# enumeration and output
# ----------------------------------------------------------------------

def paths_from_by_length(graph: Graph, source: str, max_length: int) -> list[list[Path]]:
    """Layered path enumeration: layer l holds all paths of length l from
    the source, in lexicographic order by edge declaration."""
    graph.require_vertex(source)
    layers = [[graph.trivial_path(source)]]
    for _ in range(max_length):
        layers.append(
            [
                Path(p.source, p.edges + (e.name,), e.range)
                for p in layers[-1]
                for e in graph.out_edges(p.range)
            ]
        )
    return layers


def _dot_id(name: str) -> str:
    if _NAME_RE.match(name):
        return name
    return '"%s"' % name.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(graph: Graph, name: str = "") -> str:
    """Render as DOT, declaration order throughout, stable byte for byte."""
    head = "digraph %s{" % (_dot_id(name) + " " if name else "")
    lines = [head]
    for v in graph.vertices:
        lines.append("  %s;" % _dot_id(v))
    for e in graph.edges:
        lines.append(
            '  %s -> %s [label="%s"];'
            % (_dot_id(e.source), _dot_id(e.range), e.name.replace('"', '\\"'))
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
