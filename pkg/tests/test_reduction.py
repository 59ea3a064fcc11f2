import random

import pytest

from leavitt import (
    AlgebraError,
    CyclePolynomial,
    GraphError,
    Generator,
    ReductionWitness,
    ScalarVertex,
    ZeroElementError,
    is_simple,
    nondegeneracy_witness,
    outcome_element,
    parse_element,
    realify,
    reduce,
    verify_witness,
    vertex_ideal_minimal,
    witness_from_obj,
    witness_to_obj,
)
from leavitt.sampling import random_nonzero_element


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------

def test_generator_text_and_resolution(graphs, algebras):
    W, AW = graphs["W"], algebras["W"]
    for text, kind in (("v", "vertex"), ("e", "edge"), ("e^*", "ghost")):
        gen = Generator.from_text(W, text)
        assert (gen.kind, gen.text()) == (kind, text)
        assert gen.element(AW) == parse_element(AW, text)
    with pytest.raises(AlgebraError):
        Generator.from_text(W, "nope")
    with pytest.raises(GraphError):
        Generator.from_text(W, "v^*")
    with pytest.raises(AlgebraError):
        Generator("twist", "e")


# ----------------------------------------------------------------------
# realify
# ----------------------------------------------------------------------

def test_realify_example(algebras):
    W = algebras["W"]
    nu, y = realify(W.ghost("e"))
    assert (nu.source, nu.edges) == ("z", ("e",))
    assert y == W.vertex("v")


def test_realify_properties(algebras):
    rng = random.Random(73)
    for algebra in algebras.values():
        for _ in range(40):
            x = random_nonzero_element(rng, algebra)
            nu, y = realify(x)
            assert not y.is_zero
            assert y.is_real
            assert y == x * algebra.path_element(nu)
    with pytest.raises(ZeroElementError):
        realify(algebras["W"].zero())


# ----------------------------------------------------------------------
# reduce on the worked examples
# ----------------------------------------------------------------------

def test_reduce_ghost_edge(algebras):
    W = algebras["W"]
    x = W.ghost("e")
    wit = reduce(x)
    assert wit.left == ()
    assert [g.text() for g in wit.right] == ["e"]
    assert wit.outcome == ScalarVertex(W.field.one(), "v")
    assert verify_witness(x, wit)


def test_reduce_vertex_needs_no_generators(algebras):
    for name, vertex in (("W", "z"), ("L3", "v1")):
        algebra = algebras[name]
        x = algebra.vertex(vertex)
        wit = reduce(x)
        assert wit.left == () and wit.right == ()
        assert wit.outcome == ScalarVertex(algebra.field.one(), vertex)
        assert verify_witness(x, wit)


def test_reduce_escapes_through_the_other_loop(algebras):
    R2 = algebras["R2"]
    x = parse_element(R2, "g + v")
    wit = reduce(x)
    assert [g.text() for g in wit.left] == ["h^*"]
    assert [g.text() for g in wit.right] == ["h"]
    assert wit.outcome == ScalarVertex(R2.field.one(), "v")
    assert verify_witness(x, wit)


def test_reduce_reaches_a_cycle_polynomial(algebras):
    T = algebras["T"]
    x = parse_element(T, "f^* + v")
    wit = reduce(x)
    assert [g.text() for g in wit.right] == ["f"]
    assert isinstance(wit.outcome, CyclePolynomial)
    assert wit.outcome.vertex == "v"
    assert wit.outcome.cycle.edges == ("f",)
    one = T.field.one()
    assert wit.outcome.coeffs == ((0, one), (1, one))
    assert verify_witness(x, wit)
    assert outcome_element(T, wit.outcome) == parse_element(T, "v + f")


def test_reduce_rejects_zero(algebras):
    with pytest.raises(ZeroElementError):
        reduce(algebras["W"].zero())


def test_reduce_random_elements_verify(algebras):
    rng = random.Random(79)
    for name, algebra in algebras.items():
        for _ in range(60):
            x = random_nonzero_element(rng, algebra)
            wit = reduce(x)
            assert verify_witness(x, wit)
            if name in ("L3", "W", "R2"):
                assert isinstance(wit.outcome, ScalarVertex)


# ----------------------------------------------------------------------
# outcomes and verification
# ----------------------------------------------------------------------

def test_outcome_element_validation(algebras, graphs):
    W, T, LS = algebras["W"], algebras["T"], algebras["LS"]
    one = W.field.one()
    zero = W.field.zero()
    with pytest.raises(AlgebraError):
        outcome_element(W, ScalarVertex(zero, "v"))
    with pytest.raises(Exception):
        outcome_element(W, ScalarVertex(one, "nope"))
    with pytest.raises(Exception):
        outcome_element(
            W, CyclePolynomial("z", graphs["W"].path("z", ["e"]), ((1, one),))
        )
    loop = graphs["LS"].path("u", ["c"])
    with pytest.raises(AlgebraError):
        outcome_element(LS, CyclePolynomial("u", loop, ((1, one),)))
    floop = graphs["T"].path("v", ["f"])
    with pytest.raises(AlgebraError):
        outcome_element(T, CyclePolynomial("u", floop, ((1, one),)))
    with pytest.raises(AlgebraError):
        outcome_element(T, CyclePolynomial("v", floop, ()))
    with pytest.raises(AlgebraError):
        outcome_element(T, CyclePolynomial("v", floop, ((1, one), (1, one))))
    with pytest.raises(AlgebraError):
        outcome_element(T, CyclePolynomial("v", floop, ((1, zero),)))
    with pytest.raises(AlgebraError):
        outcome_element(T, object())


def test_outcome_element_ghost_powers(algebras):
    T = algebras["T"]
    one = T.field.one()
    floop = T.graph.path("v", ["f"])
    poly = CyclePolynomial("v", floop, ((-2, one), (0, one)))
    assert outcome_element(T, poly) == parse_element(T, "v + (f f)^*")


def test_verify_rejects_tampered_witnesses(algebras):
    W = algebras["W"]
    x = W.ghost("e")
    wit = reduce(x)
    one = W.field.one()
    two = one + one
    assert not verify_witness(x, ReductionWitness(wit.left, wit.right, ScalarVertex(two, "v")))
    assert not verify_witness(x, ReductionWitness(wit.left, wit.right, ScalarVertex(one, "w")))
    assert not verify_witness(x, ReductionWitness(wit.left, (), wit.outcome))
    assert not verify_witness(
        x,
        ReductionWitness(
            wit.left, wit.right, ScalarVertex(W.field.zero(), "v")
        ),
    )
    assert not verify_witness(x, ReductionWitness((Generator("ghost", "f"),), wit.right, wit.outcome))


# ----------------------------------------------------------------------
# witness serialization
# ----------------------------------------------------------------------

def test_witness_round_trip(algebras):
    rng = random.Random(83)
    for algebra in algebras.values():
        for _ in range(20):
            x = random_nonzero_element(rng, algebra)
            wit = reduce(x)
            obj = witness_to_obj(wit, algebra)
            back = witness_from_obj(algebra, obj)
            assert back == wit
            assert verify_witness(x, back)


def test_witness_from_obj_rejects_garbage(algebras):
    W = algebras["W"]
    with pytest.raises(AlgebraError):
        witness_from_obj(W, {})
    with pytest.raises(AlgebraError):
        witness_from_obj(W, {"outcome": {"kind": "mystery"}})
    with pytest.raises(AlgebraError):
        witness_from_obj(
            W,
            {"left": ["nope"], "outcome": {"kind": "scalar-vertex", "coeff": "1", "vertex": "v"}},
        )
    with pytest.raises(AlgebraError):
        witness_from_obj(
            W,
            {"outcome": {"kind": "scalar-vertex", "coeff": "x", "vertex": "v"}},
        )


# ----------------------------------------------------------------------
# nondegeneracy
# ----------------------------------------------------------------------

def test_nondegeneracy_examples(algebras):
    W = algebras["W"]
    z = W.vertex("z")
    assert nondegeneracy_witness(z) == z
    e = W.edge("e")
    assert nondegeneracy_witness(e) == W.ghost("e")
    assert nondegeneracy_witness(W.ghost("e")) == e


def test_nondegeneracy_random(algebras):
    rng = random.Random(89)
    for algebra in algebras.values():
        for _ in range(40):
            x = random_nonzero_element(rng, algebra)
            a = nondegeneracy_witness(x)
            assert not (x * a * x).is_zero


# ----------------------------------------------------------------------
# graph-level decisions
# ----------------------------------------------------------------------

def test_is_simple(graphs):
    assert is_simple(graphs["R2"])
    assert is_simple(graphs["L3"])
    assert not is_simple(graphs["W"])
    assert not is_simple(graphs["T"])
    assert not is_simple(graphs["LS"])


def test_vertex_ideal_minimal(graphs):
    assert vertex_ideal_minimal(graphs["W"], "v")
    assert vertex_ideal_minimal(graphs["W"], "w")
    assert not vertex_ideal_minimal(graphs["W"], "z")
    assert not vertex_ideal_minimal(graphs["T"], "u")
    assert not vertex_ideal_minimal(graphs["T"], "v")
    assert vertex_ideal_minimal(graphs["LS"], "v")
    assert not vertex_ideal_minimal(graphs["LS"], "u")
    assert all(vertex_ideal_minimal(graphs["L3"], v) for v in graphs["L3"].vertices)
