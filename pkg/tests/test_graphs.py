import random

import pytest

from leavitt import (
    CycleError,
    Edge,
    Graph,
    GraphError,
    GraphParseError,
    SubsetError,
    UnknownVertexError,
    condition_L,
    cycle_has_exit,
    entry_paths,
    hedgehog_graph,
    hereditary_saturated_closure,
    is_acyclic,
    is_bifurcation,
    is_hereditary,
    is_saturated,
    line_points,
    parse_graph,
    paths_from_by_length,
    quotient_graph,
    require_cycle,
    simple_cycles,
    to_dot,
    tree,
    vertices_on_cycles,
)
from leavitt.sampling import random_graph

from conftest import FIXTURE_TEXTS


# ----------------------------------------------------------------------
# parsing and construction
# ----------------------------------------------------------------------

def test_parse_keeps_declaration_order(graphs):
    g = graphs["W"]
    assert g.vertices == ("v", "z", "w")
    assert [e.name for e in g.edges] == ["e", "f"]
    assert g.edge("e") == Edge("e", "z", "v")


def test_parse_accepts_comments_blanks_and_accumulating_vertices():
    g = parse_graph(
        "# a loop with an exit\n"
        "vertices: u\n"
        "\n"
        "edge c: u -> u  # the loop\n"
        "vertices: v\n"
        "edge e: u -> v\n"
    )
    assert g.vertices == ("u", "v")
    assert [e.name for e in g.edges] == ["c", "e"]


def test_parse_allows_edges_before_their_endpoints():
    g = parse_graph("edge e: a -> b\nvertices: a b\n")
    assert g.edge("e").range == "b"


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices:\n", 1),
        ("vertices: a\nnonsense\n", 2),
        ("vertices: a a\n", 1),
        ("vertices: a\nedge a: a -> a\n", 2),
        ("vertices: a\nedge e: a -> b\n", 2),
        ("vertices: a\nedge e: c -> a\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert str(info.value).startswith("line %d:" % line)


def test_parse_requires_vertices():
    with pytest.raises(GraphParseError):
        parse_graph("# empty\n")


def test_graph_constructor_validation():
    with pytest.raises(GraphError):
        Graph([])
    with pytest.raises(GraphError):
        Graph(["a", "a"])
    with pytest.raises(GraphError):
        Graph(["a"], [Edge("a", "a", "a")])
    with pytest.raises(GraphError):
        Graph(["a"], [Edge("e", "a", "b")])
    with pytest.raises(GraphError):
        Graph([""])


def test_graph_equality_and_queries(graphs):
    g = graphs["W"]
    assert g == parse_graph(FIXTURE_TEXTS["W"])
    assert g != graphs["T"]
    assert g.out_degree("z") == 2
    assert g.is_sink("v") and g.is_sink("w") and not g.is_sink("z")
    assert g.sinks() == ("v", "w")
    assert g.in_edges("v") == (Edge("e", "z", "v"),)
    with pytest.raises(UnknownVertexError):
        g.require_vertex("zz")


def test_path_construction_and_validation(graphs):
    g = graphs["L3"]
    p = g.path("v1", ["a", "b"])
    assert (p.source, p.edges, p.range) == ("v1", ("a", "b"), "v3")
    assert len(p) == 2
    assert g.trivial_path("v2").is_trivial
    with pytest.raises(GraphError):
        g.path("v1", ["b"])
    with pytest.raises(GraphError):
        g.path("v1", ["a", "a"])
    q = g.concat(g.path("v1", ["a"]), g.path("v2", ["b"]))
    assert q == p
    with pytest.raises(GraphError):
        g.concat(p, p)


def test_path_vertices_and_sort_key(graphs):
    g = graphs["L3"]
    p = g.path("v1", ["a", "b"])
    assert g.path_vertices(p) == ("v1", "v2", "v3")
    trivial = g.trivial_path("v3")
    assert g.path_sort_key(trivial) < g.path_sort_key(p)


# ----------------------------------------------------------------------
# reachability and line points
# ----------------------------------------------------------------------

def test_tree_single_and_set_valued(graphs):
    W = graphs["W"]
    assert tree(W, "z") == {"v", "z", "w"}
    assert tree(W, "v") == {"v"}
    assert tree(W, ["v", "w"]) == {"v", "w"}
    assert tree(W, []) == frozenset()
    assert tree(graphs["LS"], "u") == {"u", "v"}
    with pytest.raises(UnknownVertexError):
        tree(W, "nope")


def test_bifurcations(graphs):
    assert is_bifurcation(graphs["W"], "z")
    assert not is_bifurcation(graphs["W"], "v")
    assert is_bifurcation(graphs["R2"], "v")
    assert not is_bifurcation(graphs["L3"], "v1")


def test_line_points(graphs):
    assert line_points(graphs["L3"]) == ("v1", "v2", "v3")
    assert line_points(graphs["W"]) == ("v", "w")
    assert line_points(graphs["T"]) == ()
    assert line_points(graphs["R2"]) == ()
    assert line_points(graphs["LS"]) == ("v",)


def test_cycle_detection(graphs):
    assert vertices_on_cycles(graphs["L3"]) == frozenset()
    assert vertices_on_cycles(graphs["T"]) == {"v"}
    assert vertices_on_cycles(graphs["LS"]) == {"u"}
    assert is_acyclic(graphs["L3"]) and is_acyclic(graphs["W"])
    assert not is_acyclic(graphs["T"])
    assert not is_acyclic(graphs["R2"])


def test_is_acyclic_agrees_with_cycle_vertices():
    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng)
        assert is_acyclic(g) == (not vertices_on_cycles(g))


# ----------------------------------------------------------------------
# hereditary and saturated sets
# ----------------------------------------------------------------------

def test_hereditary_and_saturated(graphs):
    W = graphs["W"]
    assert is_hereditary(W, {"v"})
    assert is_saturated(W, {"v"})
    assert not is_hereditary(W, {"z"})
    assert not is_saturated(W, {"v", "w"})
    assert is_hereditary(graphs["LS"], {"v"})
    assert is_saturated(graphs["LS"], {"v"})


def test_closure_examples(graphs):
    assert hereditary_saturated_closure(graphs["W"], {"v"}) == {"v"}
    assert hereditary_saturated_closure(graphs["W"], {"v", "w"}) == {"v", "z", "w"}
    assert hereditary_saturated_closure(graphs["T"], {"v"}) == {"u", "v"}
    assert hereditary_saturated_closure(graphs["LS"], {"v"}) == {"v"}
    assert hereditary_saturated_closure(graphs["LS"], set()) == frozenset()
    with pytest.raises(UnknownVertexError):
        hereditary_saturated_closure(graphs["W"], {"nope"})


def _closure_oracle(g, seed_set):
    """Intersection of every hereditary saturated superset."""
    vs = list(g.vertices)
    best = set(vs)
    for mask in range(1 << len(vs)):
        s = {v for i, v in enumerate(vs) if mask >> i & 1}
        if seed_set <= s and is_hereditary(g, s) and is_saturated(g, s):
            best &= s
    return frozenset(best)


def test_closure_matches_brute_force():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, max_vertices=6, max_edges=8)
        seeds = {v for v in g.vertices if rng.random() < 0.3}
        assert hereditary_saturated_closure(g, seeds) == _closure_oracle(g, seeds)


def test_closure_is_hereditary_and_saturated_and_monotone():
    rng = random.Random(13)
    for _ in range(60):
        g = random_graph(rng, max_vertices=7, max_edges=10)
        seeds = {v for v in g.vertices if rng.random() < 0.4}
        closed = hereditary_saturated_closure(g, seeds)
        assert seeds <= closed
        assert is_hereditary(g, closed)
        assert is_saturated(g, closed)
        assert hereditary_saturated_closure(g, closed) == closed


# ----------------------------------------------------------------------
# cycles
# ----------------------------------------------------------------------

def test_simple_cycles_fixtures(graphs):
    assert simple_cycles(graphs["L3"]) == ()
    assert simple_cycles(graphs["W"]) == ()
    [cT] = simple_cycles(graphs["T"])
    assert (cT.source, cT.edges) == ("v", ("f",))
    cycles = simple_cycles(graphs["R2"])
    assert [(c.source, c.edges) for c in cycles] == [("v", ("g",)), ("v", ("h",))]
    [cLS] = simple_cycles(graphs["LS"])
    assert cLS.edges == ("c",)


def _simple_cycles_oracle(g):
    found = set()
    for v in g.vertices:
        anchor = g.vertex_index(v)
        for layer in paths_from_by_length(g, v, len(g.vertices))[1:]:
            for p in layer:
                if p.range != v:
                    continue
                sources = [g.edge(n).source for n in p.edges]
                if len(set(sources)) != len(sources):
                    continue
                if min(g.vertex_index(s) for s in sources) != anchor:
                    continue
                found.add(p)
    return tuple(sorted(found, key=g.path_sort_key))


def test_simple_cycles_match_brute_force():
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng, max_vertices=5, max_edges=8)
        assert simple_cycles(g) == _simple_cycles_oracle(g)


def test_require_cycle(graphs):
    T = graphs["T"]
    c = require_cycle(T, T.path("v", ["f"]))
    assert c.edges == ("f",)
    with pytest.raises(CycleError):
        require_cycle(graphs["L3"], graphs["L3"].path("v1", ["a"]))
    R2 = graphs["R2"]
    with pytest.raises(CycleError):
        require_cycle(R2, R2.path("v", ["g", "h"]))
    with pytest.raises(CycleError):
        require_cycle(T, T.trivial_path("v"))


def test_cycle_has_exit(graphs):
    T = graphs["T"]
    assert not cycle_has_exit(T, T.path("v", ["f"]))
    LS = graphs["LS"]
    assert cycle_has_exit(LS, LS.path("u", ["c"]))
    R2 = graphs["R2"]
    assert cycle_has_exit(R2, R2.path("v", ["g"]))


def test_condition_L(graphs):
    assert condition_L(graphs["L3"])
    assert condition_L(graphs["W"])
    assert condition_L(graphs["R2"])
    assert condition_L(graphs["LS"])
    assert not condition_L(graphs["T"])


def test_condition_L_matches_cycle_scan():
    rng = random.Random(19)
    for _ in range(60):
        g = random_graph(rng, max_vertices=6, max_edges=9)
        expected = all(cycle_has_exit(g, c) for c in simple_cycles(g))
        assert condition_L(g) == expected


# ----------------------------------------------------------------------
# quotients and hedgehogs
# ----------------------------------------------------------------------

def test_quotient_graph(graphs):
    q = quotient_graph(graphs["LS"], {"v"})
    assert q.vertices == ("u",)
    assert [tuple(e) for e in q.edges] == [("c", "u", "u")]
    q2 = quotient_graph(graphs["W"], {"v"})
    assert q2.vertices == ("z", "w")
    assert [e.name for e in q2.edges] == ["f"]
    with pytest.raises(SubsetError):
        quotient_graph(graphs["W"], {"z"})
    with pytest.raises(SubsetError):
        quotient_graph(graphs["W"], {"v", "w"})
    with pytest.raises(SubsetError):
        quotient_graph(graphs["R2"], {"v"})


def test_entry_paths(graphs):
    LS = graphs["LS"]
    entries = entry_paths(LS, {"v"}, 3)
    assert [(p.source, p.edges) for p in entries] == [
        ("u", ("e",)),
        ("u", ("c", "e")),
        ("u", ("c", "c", "e")),
    ]
    assert entry_paths(graphs["T"], {"v"}, 4) == [
        graphs["T"].path("u", ["e"])
    ]
    assert entry_paths(graphs["W"], {"v", "z", "w"}, 4) == []


def test_hedgehog_whole_set_reproduces_graph(graphs):
    W = graphs["W"]
    hh = hedgehog_graph(W, {"v", "z", "w"})
    assert hh.complete
    assert hh.blocking_cycle is None
    assert hh.entry_part == ()
    assert hh.graph == W


def test_hedgehog_finite_entries(graphs):
    T = graphs["T"]
    hh = hedgehog_graph(T, {"v"})
    assert hh.complete
    assert hh.ideal_part == ("v",)
    assert hh.entry_part == ("e",)
    assert [tuple(e) for e in hh.graph.edges] == [
        ("f", "v", "v"),
        ("@e", "e", "v"),
    ]


def test_hedgehog_truncates_behind_a_blocking_cycle(graphs):
    LS = graphs["LS"]
    hh = hedgehog_graph(LS, {"v"})
    assert not hh.complete
    assert hh.blocking_cycle is not None
    assert hh.blocking_cycle.edges == ("c",)
    assert hh.entry_part == ("e", "c.e", "c.c.e")
    assert is_acyclic(hh.graph)
    deeper = hedgehog_graph(LS, {"v"}, depth_bound=5)
    assert len(deeper.entry_part) == 5


def test_hedgehog_rejects_bad_subsets(graphs):
    with pytest.raises(SubsetError):
        hedgehog_graph(graphs["W"], {"z"})
    with pytest.raises(SubsetError):
        hedgehog_graph(graphs["W"], set())


# ----------------------------------------------------------------------
# enumeration and output
# ----------------------------------------------------------------------

def test_paths_from_by_length(graphs):
    layers = paths_from_by_length(graphs["L3"], "v1", 3)
    assert [[p.edges for p in layer] for layer in layers] == [
        [()],
        [("a",)],
        [("a", "b")],
        [],
    ]
    layers_r2 = paths_from_by_length(graphs["R2"], "v", 2)
    assert [len(layer) for layer in layers_r2] == [1, 2, 4]


def test_to_dot_is_stable(graphs):
    expected = (
        "digraph {\n"
        "  v;\n"
        "  z;\n"
        "  w;\n"
        '  z -> v [label="e"];\n'
        '  z -> w [label="f"];\n'
        "}\n"
    )
    assert to_dot(graphs["W"]) == expected
    assert to_dot(graphs["W"]) == to_dot(graphs["W"])


def test_to_dot_quotes_awkward_names():
    g = Graph(["a", "b.c"], [Edge("x.y", "a", "b.c")])
    text = to_dot(g)
    assert '"b.c";' in text
    assert 'a -> "b.c" [label="x.y"];' in text
