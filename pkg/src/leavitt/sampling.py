"""Graph families and seeded random data for tests and self-checks.

Every random choice flows through an explicit random.Random instance, so
any run is reproducible from its seed. Raw term sampling is deliberately
biased toward reducible monomials; otherwise random monomials would almost
always already be in normal form and normalization would go untested.
"""

from __future__ import annotations

import random

from .algebra import Element, LeavittAlgebra, Monomial
from .graphs import Edge, Graph


def line_graph(n: int) -> Graph:
    """The line with vertices v1..vn chained by edges e1..e(n-1)."""
    if n < 1:
        raise ValueError("a line graph needs at least one vertex")
    vertices = ["v%d" % i for i in range(1, n + 1)]
    edges = [Edge("e%d" % i, "v%d" % i, "v%d" % (i + 1)) for i in range(1, n)]
    return Graph(vertices, edges)


def rose(n: int) -> Graph:
    """n loops r1..rn at a single vertex v."""
    if n < 0:
        raise ValueError("petal count cannot be negative")
    return Graph(["v"], [Edge("r%d" % i, "v", "v") for i in range(1, n + 1)])


def rose_with_tail(m: int, n: int) -> Graph:
    """A line of m vertices u1..um whose last vertex carries n loops.

    The associated algebra is the m-by-m matrix algebra over the Leavitt
    algebra of the n-petal rose; its socle is zero once n >= 1.
    """
    if m < 1:
        raise ValueError("the tail needs at least one vertex")
    if n < 0:
        raise ValueError("petal count cannot be negative")
    vertices = ["u%d" % i for i in range(1, m + 1)]
    edges = [Edge("t%d" % i, "u%d" % i, "u%d" % (i + 1)) for i in range(1, m)]
    last = "u%d" % m
    edges.extend(Edge("r%d" % i, last, last) for i in range(1, n + 1))
    return Graph(vertices, edges)


def random_graph(
    rng: random.Random, max_vertices: int = 8, max_edges: int = 12
) -> Graph:
    """A graph with uniformly random size and edge endpoints."""
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(0, max_edges)
    vertices = ["v%d" % i for i in range(1, nv + 1)]
    edges = [
        Edge("e%d" % i, rng.choice(vertices), rng.choice(vertices))
        for i in range(1, ne + 1)
    ]
    return Graph(vertices, edges)


def random_monomial(
    rng: random.Random, algebra: LeavittAlgebra, max_length: int = 3
) -> Monomial:
    """A random monomial pq*: a forward walk p, then a backward walk q
    into its range."""
    graph = algebra.graph
    real = graph.trivial_path(rng.choice(graph.vertices))
    for _ in range(rng.randint(0, max_length)):
        outs = graph.out_edges(real.range)
        if not outs:
            break
        real = graph.extend(real, rng.choice(outs))
    names: list[str] = []
    at = real.range
    for _ in range(rng.randint(0, max_length)):
        inns = graph.in_edges(at)
        if not inns:
            break
        e = rng.choice(inns)
        names.append(e.name)
        at = e.source
    ghost = graph.path(at, reversed(names))
    return Monomial(real, ghost)


def random_raw_terms(
    rng: random.Random,
    algebra: LeavittAlgebra,
    max_terms: int = 4,
    max_length: int = 3,
) -> list[tuple[object, Monomial]]:
    """Raw coefficient-monomial pairs, half the time pushed into the
    reducible shape by extending both parts with the special edge."""
    graph = algebra.graph
    pairs: list[tuple[object, Monomial]] = []
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, algebra, max_length)
        outs = graph.out_edges(m.real.range)
        if outs and rng.random() < 0.5:
            e = outs[0]
            m = Monomial(graph.extend(m.real, e), graph.extend(m.ghost, e))
        coeff = algebra.field.from_int(rng.choice((-3, -2, -1, 1, 2, 3)))
        pairs.append((coeff, m))
    return pairs


def random_element(
    rng: random.Random,
    algebra: LeavittAlgebra,
    max_terms: int = 4,
    max_length: int = 3,
) -> Element:
    return algebra.element(random_raw_terms(rng, algebra, max_terms, max_length))


def random_nonzero_element(
    rng: random.Random,
    algebra: LeavittAlgebra,
    max_terms: int = 4,
    max_length: int = 3,
) -> Element:
    """A nonzero sample; falls back to the first vertex if the raw combos
    keep cancelling, which keeps the draw count bounded."""
    for _ in range(64):
        x = random_element(rng, algebra, max_terms, max_length)
        if not x.is_zero:
            return x
    return algebra.vertex(algebra.graph.vertices[0])
