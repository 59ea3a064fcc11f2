"""The socle of a Leavitt path algebra, made executable.

The socle is the two-sided ideal generated by the hereditary saturated
closure H of the line points. Everything here reduces questions about that
ideal to graph combinatorics plus exact normal-form arithmetic: membership
goes through the quotient map that kills H, the matricial shape of the socle
is read off from paths into sinks, and for acyclic graphs an explicit
block-matrix representation doubles as a faithfulness oracle for the whole
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import Element, LeavittAlgebra, Monomial
from .graphs import (
    CyclicGraphError,
    Graph,
    HedgehogGraph,
    Path,
    SubsetError,
    hedgehog_graph,
    hereditary_saturated_closure,
    is_acyclic,
    line_points,
    quotient_graph,
    tree,
    vertices_on_cycles,
)


def _checked_vertices(graph: Graph, names: Iterable[str]) -> frozenset[str]:
    out = frozenset(names)
    for v in out:
        graph.require_vertex(v)
    return out


# ----------------------------------------------------------------------
# generators and membership
# ----------------------------------------------------------------------

def socle_generators(graph: Graph) -> frozenset[str]:
    """The hereditary saturated closure H of the line points.

    The socle is the two-sided ideal generated by these vertices.
    """
    return hereditary_saturated_closure(graph, line_points(graph))


def socle_is_nonzero(graph: Graph) -> bool:
    return bool(line_points(graph))


def socle_equals_algebra(graph: Graph) -> bool:
    return len(socle_generators(graph)) == len(graph.vertices)


def quotient_image(
    x: Element,
    subset: Iterable[str],
    target: LeavittAlgebra | None = None,
) -> Element:
    """Push an element through the quotient map killing a vertex set.

    The set must be hereditary and saturated. A monomial survives exactly
    when none of its paths touches the set; survivors are renormalized on
    the quotient side. Passing a target algebra (over the quotient graph,
    same field) lets several images land in one algebra.
    """
    algebra = x.algebra
    h = _checked_vertices(algebra.graph, subset)
    if not h:
        return x
    if target is None:
        target = LeavittAlgebra(quotient_graph(algebra.graph, h), algebra.field)
    pairs = []
    for m, c in x.items():
        visited = set(algebra.graph.path_vertices(m.real))
        visited.update(algebra.graph.path_vertices(m.ghost))
        if visited & h:
            continue
        real = target.graph.path(m.real.source, m.real.edges)
        ghost = target.graph.path(m.ghost.source, m.ghost.edges)
        pairs.append((c, Monomial(real, ghost)))
    return target.element(pairs)


def in_socle(x: Element) -> bool:
    """Whether the element lies in the socle.

    The socle is the kernel of the quotient map by H, so membership is one
    image computation; when H is everything the quotient algebra is zero
    and every element belongs.
    """
    graph = x.algebra.graph
    h = socle_generators(graph)
    if len(h) == len(graph.vertices):
        return True
    return quotient_image(x, h).is_zero


def left_ideal_sum_membership(x: Element, vertices: Iterable[str]) -> bool:
    """Whether x lies in the sum of the left ideals A·u over the given u.

    Right multiplication by the idempotent sum of distinct vertices fixes
    exactly the elements of the sum.
    """
    algebra = x.algebra
    names = _checked_vertices(algebra.graph, vertices)
    if not names:
        raise SubsetError("membership in an empty sum of left ideals")
    u = algebra.zero()
    for v in algebra.graph.sorted_vertices(names):
        u = u + algebra.vertex(v)
    return x * u == x


# ----------------------------------------------------------------------
# matricial structure
# ----------------------------------------------------------------------

def _paths_ending_at(graph: Graph, sink: str, on_cycles: frozenset[str]) -> int | None:
    """Count the paths of any length with the given range, None for infinity.

    Infinitely many exist exactly when a cycle reaches the sink. Otherwise
    the vertices reaching it induce a finite acyclic piece and the counts
    f(v) of paths from v satisfy f(v) = sum of f(r(e)) over edges at v,
    accumulated sink-first.
    """
    reach = frozenset(v for v in graph.vertices if sink in tree(graph, v))
    if reach & on_cycles:
        return None
    f = {v: 0 for v in reach}
    f[sink] = 1
    pending = {
        v: sum(1 for e in graph.out_edges(v) if e.range in reach) for v in reach
    }
    ready = [v for v in reach if pending[v] == 0]
    while ready:
        v = ready.pop()
        for e in graph.in_edges(v):
            u = e.source
            if u not in reach:
                continue
            f[u] += f[v]
            pending[u] -= 1
            if pending[u] == 0:
                ready.append(u)
    return sum(f.values())


@dataclass(frozen=True)
class SocleReport:
    """Everything the structure theorem says about one socle.

    The summands are matrix sizes, one per sink inside H, finite ones
    ascending and None (meaning infinite) last. The hedgehog realizes the
    socle as a Leavitt path algebra in its own right; it is None when H is
    empty, since a graph cannot have an empty vertex set.
    """

    line_points: tuple[str, ...]
    closure_h: tuple[str, ...]
    summands: tuple[int | None, ...]
    hedgehog: HedgehogGraph | None
    socle_is_whole: bool

    def summand_texts(self) -> tuple[str, ...]:
        return tuple("inf" if n is None else str(n) for n in self.summands)


def socle_structure(graph: Graph, depth_bound: int | None = None) -> SocleReport:
    """The matricial decomposition of the socle.

    Each sink w inside H contributes one matrix summand whose size is the
    number of paths ending at w, the trivial one included, infinite when a
    cycle reaches w. The hedgehog graph of H is built with the given depth
    bound (vertex count + 1 when omitted) and is checked to be acyclic,
    which the structure theorem guarantees even for truncations.
    """
    pl = line_points(graph)
    h = hereditary_saturated_closure(graph, pl)
    on = vertices_on_cycles(graph)
    sizes = [_paths_ending_at(graph, w, on) for w in graph.sinks() if w in h]
    summands = tuple(sorted(n for n in sizes if n is not None)) + tuple(
        n for n in sizes if n is None
    )
    hedgehog = None
    if h:
        hedgehog = hedgehog_graph(graph, h, depth_bound)
        if not is_acyclic(hedgehog.graph):
            raise SubsetError("hedgehog of the socle closure has a cycle")
    return SocleReport(
        line_points=pl,
        closure_h=graph.sorted_vertices(h),
        summands=summands,
        hedgehog=hedgehog,
        socle_is_whole=len(h) == len(graph.vertices),
    )


# ----------------------------------------------------------------------
# matrix representation over the sinks of an acyclic graph
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SinkMatrices:
    """One square block per sink, rows and columns indexed by the paths
    ending there in path order."""

    field: object
    sinks: tuple[str, ...]
    sizes: tuple[int, ...]
    blocks: tuple[tuple[tuple[object, ...], ...], ...]

    def _require_same(self, other: "SinkMatrices") -> None:
        if (
            self.field != other.field
            or self.sinks != other.sinks
            or self.sizes != other.sizes
        ):
            raise ValueError("block matrices live over different graphs")

    @property
    def is_zero(self) -> bool:
        return all(not c for block in self.blocks for row in block for c in row)

    def __add__(self, other: "SinkMatrices") -> "SinkMatrices":
        self._require_same(other)
        blocks = tuple(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(ba, bb)
            )
            for ba, bb in zip(self.blocks, other.blocks)
        )
        return SinkMatrices(self.field, self.sinks, self.sizes, blocks)

    def __mul__(self, other: "SinkMatrices") -> "SinkMatrices":
        self._require_same(other)
        zero = self.field.zero()
        out = []
        for n, ba, bb in zip(self.sizes, self.blocks, other.blocks):
            block = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = zero
                    for k in range(n):
                        acc = acc + ba[i][k] * bb[k][j]
                    row.append(acc)
                block.append(tuple(row))
            out.append(tuple(block))
        return SinkMatrices(self.field, self.sinks, self.sizes, tuple(out))


def _sink_bound_paths(graph: Graph) -> list[Path]:
    """Every path whose range is a sink, layer by layer per source."""
    out = []
    for v in graph.vertices:
        layer = [graph.trivial_path(v)]
        while layer:
            nxt = []
            for p in layer:
                if graph.is_sink(p.range):
                    out.append(p)
                for e in graph.out_edges(p.range):
                    nxt.append(graph.extend(p, e))
            layer = nxt
    return out


def matrix_rep(x: Element) -> SinkMatrices:
    """The image of an element under the block-matrix isomorphism.

    Defined for acyclic graphs only. A monomial pq* is expanded along every
    path tau from its range to a sink and contributes its coefficient at
    row p.tau, column q.tau of that sink's block. The map is an algebra
    isomorphism, so it doubles as an independent oracle for the normal-form
    arithmetic.
    """
    algebra = x.algebra
    graph = algebra.graph
    if not is_acyclic(graph):
        raise CyclicGraphError("matrix representation needs an acyclic graph")
    bound = _sink_bound_paths(graph)
    tails: dict[str, list[Path]] = {v: [] for v in graph.vertices}
    for p in bound:
        tails[p.source].append(p)
    sinks = graph.sinks()
    index: dict[str, dict[Path, int]] = {}
    for w in sinks:
        ending = sorted(
            (p for p in bound if p.range == w), key=graph.path_sort_key
        )
        index[w] = {p: i for i, p in enumerate(ending)}
    sizes = tuple(len(index[w]) for w in sinks)
    zero = algebra.field.zero()
    blocks = [
        [[zero for _ in range(n)] for _ in range(n)] for n in sizes
    ]
    at = {w: i for i, w in enumerate(sinks)}
    for m, c in x.items():
        for tau in tails[m.real.range]:
            w = tau.range
            block = blocks[at[w]]
            row = index[w][graph.concat(m.real, tau)]
            col = index[w][graph.concat(m.ghost, tau)]
            block[row][col] = block[row][col] + c
    frozen = tuple(tuple(tuple(row) for row in block) for block in blocks)
    return SinkMatrices(algebra.field, sinks, sizes, frozen)
