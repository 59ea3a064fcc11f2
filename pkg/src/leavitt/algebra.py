"""Leavitt path algebras over an exact field, with computable normal forms.

The algebra of a graph is generated by its vertices (pairwise orthogonal
idempotents), its edges, and a ghost edge for each edge, subject to

  (1) s(e) e = e r(e) = e
  (2) r(e) e* = e* s(e) = e*
  (3) e* f = r(e) when f = e, and 0 otherwise
  (4) v = sum of e e* over the edges leaving v, for every non-sink v

Elements are kept in a canonical normal form: a scalar combination of
monomials p q* where p and q are paths with a common range and where p and q
never both end in the distinguished first out-edge of the same vertex.
Relation (4), applied at that distinguished edge, rewrites any offending
monomial into strictly smaller material, so the normal form is reached in
finitely many steps and two elements are equal in the algebra exactly when
their normal forms coincide. Confluence of the rewriting (independence from
the order redexes are picked) is exercised empirically by the test suite.

Coefficients come from leavitt.fields, so everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .fields import QQ, FieldError
from .graphs import Graph, Path


DEFAULT_STEP_LIMIT = 200_000


class AlgebraError(Exception):
    """Base class for algebra construction and computation failures."""


class MixedContextError(AlgebraError):
    """Two elements from different algebras met in one operation."""


class ZeroElementError(AlgebraError):
    """The zero element was passed where a nonzero one is required."""


def special_edges(graph: Graph) -> dict[str, str]:
    """The distinguished out-edge of each non-sink: the first one declared.

    Relation (4) is only ever applied at these edges during normalization,
    which is what makes the rewriting terminate.
    """
    return {
        v: graph.out_edges(v)[0].name
        for v in graph.vertices
        if not graph.is_sink(v)
    }


@dataclass(frozen=True)
class Monomial:
    """A product p q* of a real path and a reversed ghost path.

    The two paths must share their range vertex; that is the only shape a
    nonzero such product can have. A monomial with both parts trivial is a
    vertex.
    """

    real: Path
    ghost: Path

    def __post_init__(self) -> None:
        if self.real.range != self.ghost.range:
            raise AlgebraError(
                "monomial parts must share a range, got %r and %r"
                % (self.real.range, self.ghost.range)
            )

    @property
    def is_vertex(self) -> bool:
        return self.real.is_trivial and self.ghost.is_trivial

    @property
    def degree(self) -> int:
        return len(self.real) - len(self.ghost)

    def text(self) -> str:
        if self.is_vertex:
            return self.real.source
        bits = list(self.real.edges)
        bits.extend(name + "^*" for name in reversed(self.ghost.edges))
        return " ".join(bits)


class LeavittAlgebra:
    """The Leavitt path algebra of a graph over a chosen field."""

    def __init__(self, graph: Graph, field=QQ):
        self.graph = graph
        self.field = field
        self._special = special_edges(graph)

    def __repr__(self) -> str:
        return "LeavittAlgebra(%r, %s)" % (self.graph, self.field.name)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LeavittAlgebra)
            and other.graph == self.graph
            and other.field == self.field
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.field))

    # ------------------------------------------------------------------
    # element builders
    # ------------------------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, ())

    def one(self) -> "Element":
        """The sum of all vertices: the identity of the (unital) algebra."""
        one = self.field.one()
        return Element(
            self,
            tuple(
                (Monomial(t, t), one)
                for v in self.graph.vertices
                for t in (self.graph.trivial_path(v),)
            ),
        )

    def vertex(self, name: str) -> "Element":
        t = self.graph.trivial_path(name)
        return Element(self, ((Monomial(t, t), self.field.one()),))

    def edge(self, name: str) -> "Element":
        e = self.graph.edge(name)
        return self.path_element(self.graph.path(e.source, (name,)))

    def ghost(self, name: str) -> "Element":
        e = self.graph.edge(name)
        return self.path_star_element(self.graph.path(e.source, (name,)))

    def path_element(self, path: Path) -> "Element":
        m = Monomial(path, self.graph.trivial_path(path.range))
        return self.element(((self.field.one(), m),))

    def path_star_element(self, path: Path) -> "Element":
        m = Monomial(self.graph.trivial_path(path.range), path)
        return self.element(((self.field.one(), m),))

    def monomial(self, real: Path, ghost: Path) -> "Element":
        return self.element(((self.field.one(), Monomial(real, ghost)),))

    def element(self, pairs: Iterable[tuple[object, Monomial]]) -> "Element":
        """Build the normal form of a scalar combination of monomials."""
        return self.normal_form(pairs)

    def normal_form(
        self,
        pairs: Iterable[tuple[object, Monomial]],
        strategy: str = "min",
        max_steps: int = DEFAULT_STEP_LIMIT,
    ) -> "Element":
        terms, _ = self._normalize(pairs, strategy, max_steps)
        return Element(self, terms)

    def normal_form_steps(
        self,
        pairs: Iterable[tuple[object, Monomial]],
        strategy: str = "min",
        max_steps: int = DEFAULT_STEP_LIMIT,
    ) -> tuple["Element", int]:
        terms, steps = self._normalize(pairs, strategy, max_steps)
        return Element(self, terms), steps

    # ------------------------------------------------------------------
    # normalization
    # ------------------------------------------------------------------

    def _mono_key(self, m: Monomial) -> tuple:
        return (
            len(m.real) + len(m.ghost),
            len(m.ghost),
            self.graph.path_sort_key(m.real),
            self.graph.path_sort_key(m.ghost),
        )

    def _check_monomial(self, m: Monomial) -> None:
        self.graph.path(m.real.source, m.real.edges)
        self.graph.path(m.ghost.source, m.ghost.edges)

    def _is_reducible(self, m: Monomial) -> bool:
        if not m.real.edges or not m.ghost.edges:
            return False
        last = m.real.edges[-1]
        if last != m.ghost.edges[-1]:
            return False
        return self._special[self.graph.edge(last).source] == last

    def _rewrite(self, m: Monomial) -> list[tuple[int, Monomial]]:
        """Apply relation (4) at the shared trailing special edge.

        p'g (q'g)* becomes p'q'* minus the sum of (p'f)(q'f)* over the other
        edges f leaving the same vertex. The first piece is shorter; the
        others end in non-special edges, so they are not reducible again at
        the tail.
        """
        gname = m.real.edges[-1]
        v = self.graph.edge(gname).source
        preal = Path(m.real.source, m.real.edges[:-1], v)
        pghost = Path(m.ghost.source, m.ghost.edges[:-1], v)
        out = [(1, Monomial(preal, pghost))]
        for e in self.graph.out_edges(v):
            if e.name == gname:
                continue
            out.append(
                (
                    -1,
                    Monomial(
                        Path(preal.source, preal.edges + (e.name,), e.range),
                        Path(pghost.source, pghost.edges + (e.name,), e.range),
                    ),
                )
            )
        return out

    def _normalize(self, pairs, strategy, max_steps):
        if callable(strategy):
            pick = strategy
        elif strategy == "min":
            pick = min
        elif strategy == "max":
            pick = max
        else:
            raise AlgebraError("unknown normalization strategy %r" % strategy)
        terms: dict[Monomial, object] = {}
        reducible: set[Monomial] = set()

        def acc(m: Monomial, c) -> None:
            cur = terms.get(m)
            total = c if cur is None else cur + c
            if total:
                terms[m] = total
                if self._is_reducible(m):
                    reducible.add(m)
            else:
                terms.pop(m, None)
                reducible.discard(m)

        for coeff, m in pairs:
            self._check_monomial(m)
            acc(m, self.field.coerce(coeff))
        steps = 0
        while reducible:
            if steps >= max_steps:
                raise AlgebraError("normalization exceeded %d steps" % max_steps)
            m = pick(reducible, key=self._mono_key)
            reducible.discard(m)
            c = terms.pop(m)
            for sign, piece in self._rewrite(m):
                acc(piece, c if sign > 0 else -c)
            steps += 1
        ordered = tuple(
            sorted(terms.items(), key=lambda kv: self._mono_key(kv[0]))
        )
        return ordered, steps

    # ------------------------------------------------------------------
    # raw monomial product
    # ------------------------------------------------------------------

    def _mono_mul_raw(self, m1: Monomial, m2: Monomial) -> Monomial | None:
        """The product of two monomials before renormalization.

        q1* p2 collapses to a path (when one of q1, p2 is a prefix of the
        other) or to zero; the result is a single monomial or None.
        """
        q, p = m1.ghost, m2.real
        if q.source != p.source:
            return None
        if len(q) <= len(p):
            if p.edges[: len(q)] != q.edges:
                return None
            tail = Path(q.range, p.edges[len(q):], p.range)
            return Monomial(
                Path(m1.real.source, m1.real.edges + tail.edges, tail.range),
                m2.ghost,
            )
        if q.edges[: len(p)] != p.edges:
            return None
        tail = Path(p.range, q.edges[len(p):], q.range)
        return Monomial(
            m1.real,
            Path(m2.ghost.source, m2.ghost.edges + tail.edges, tail.range),
        )

    def mono_mul(self, m1: Monomial, m2: Monomial) -> "Element":
        """The renormalized product of two monomials."""
        self._check_monomial(m1)
        self._check_monomial(m2)
        raw = self._mono_mul_raw(m1, m2)
        if raw is None:
            return self.zero()
        return self.normal_form(((self.field.one(), raw),))

    # ------------------------------------------------------------------
    # corner enumeration
    # ------------------------------------------------------------------

    def iter_corner_monomials(self, vertex: str, max_total_length: int) -> Iterator[Monomial]:
        """Normal-form monomials p q* with both paths leaving the vertex.

        These span the corner v A v through total length l(p) + l(q) <=
        max_total_length. Ordered by total length, then ghost length, then
        path order; the vertex itself comes first. Path layers are grown on
        demand so that an early-exiting consumer never pays for the long
        ones.
        """
        self.graph.require_vertex(vertex)
        layers: list[list[Path]] = [[self.graph.trivial_path(vertex)]]

        def layer(n: int) -> list[Path]:
            while len(layers) <= n:
                grown = [
                    self.graph.extend(p, e)
                    for p in layers[-1]
                    for e in self.graph.out_edges(p.range)
                ]
                grown.sort(key=self.graph.path_sort_key)
                layers.append(grown)
            return layers[n]

        for total in range(max_total_length + 1):
            for ghost_len in range(total + 1):
                real_len = total - ghost_len
                for p in layer(real_len):
                    for q in layer(ghost_len):
                        if q.range != p.range:
                            continue
                        m = Monomial(p, q)
                        if not self._is_reducible(m):
                            yield m

    def corner_basis(self, vertex: str, max_total_length: int) -> tuple[Monomial, ...]:
        return tuple(self.iter_corner_monomials(vertex, max_total_length))

    # ------------------------------------------------------------------
    # defining relations
    # ------------------------------------------------------------------

    def check_relations(self) -> "RelationsReport":
        """Recheck the defining relations inside the normal-form arithmetic."""
        counts: dict[str, int] = {}
        failures: list[str] = []

        def note(label: str, ok: bool, detail: str) -> None:
            counts[label] = counts.get(label, 0) + 1
            if not ok:
                failures.append("%s: %s" % (label, detail))

        g = self.graph
        for v in g.vertices:
            for w in g.vertices:
                expect = self.vertex(v) if v == w else self.zero()
                note(
                    "vertex-idempotents",
                    self.vertex(v) * self.vertex(w) == expect,
                    "%s %s" % (v, w),
                )
        for e in g.edges:
            note(
                "source-range",
                self.vertex(e.source) * self.edge(e.name) == self.edge(e.name)
                and self.edge(e.name) * self.vertex(e.range) == self.edge(e.name),
                e.name,
            )
            note(
                "ghost-source-range",
                self.vertex(e.range) * self.ghost(e.name) == self.ghost(e.name)
                and self.ghost(e.name) * self.vertex(e.source) == self.ghost(e.name),
                e.name,
            )
            for f in g.edges:
                expect = self.vertex(e.range) if f.name == e.name else self.zero()
                note(
                    "ghost-pairing",
                    self.ghost(e.name) * self.edge(f.name) == expect,
                    "%s %s" % (e.name, f.name),
                )
        for v in g.vertices:
            if g.is_sink(v):
                continue
            total = self.zero()
            for e in g.out_edges(v):
                total = total + self.edge(e.name) * self.ghost(e.name)
            note("vertex-expansion", total == self.vertex(v), v)
        return RelationsReport(
            counts=tuple(sorted(counts.items())),
            failures=tuple(failures),
            passed=not failures,
        )


@dataclass(frozen=True)
class RelationsReport:
    counts: tuple[tuple[str, int], ...]
    failures: tuple[str, ...]
    passed: bool

    @property
    def total(self) -> int:
        return sum(n for _, n in self.counts)


class Element:
    """A normal-form element: a sorted tuple of (monomial, coefficient).

    Instances are immutable; all arithmetic returns fresh normal forms.
    Build them through the LeavittAlgebra methods or leavitt.expr.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: LeavittAlgebra, terms: tuple):
        self.algebra = algebra
        self._terms = terms

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def items(self) -> tuple:
        """The (monomial, coefficient) pairs in canonical order."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_real(self) -> bool:
        """No ghost part anywhere: a combination of plain paths."""
        return all(m.ghost.is_trivial for m, _ in self._terms)

    def support(self) -> tuple[Monomial, ...]:
        return tuple(m for m, _ in self._terms)

    def coefficient(self, m: Monomial):
        for mono, c in self._terms:
            if mono == m:
                return c
        return self.algebra.field.zero()

    def degree(self) -> int:
        """The top degree with a nonzero coefficient."""
        if not self._terms:
            raise ZeroElementError("the zero element has no degree")
        return max(m.degree for m, _ in self._terms)

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ZeroElementError("the zero element has no degree")
        degrees = [m.degree for m, _ in self._terms]
        return (min(degrees), max(degrees))

    def homogeneous_component(self, degree: int) -> "Element":
        return Element(
            self.algebra,
            tuple((m, c) for m, c in self._terms if m.degree == degree),
        )

    def local_unit(self) -> "Element":
        """The smallest vertex sum u with u x = x u = x; zero for x = 0."""
        if not self._terms:
            return Element(self.algebra, ())
        needed = {m.real.source for m, _ in self._terms}
        needed.update(m.ghost.source for m, _ in self._terms)
        one = self.algebra.field.one()
        out = []
        for v in self.algebra.graph.sorted_vertices(needed):
            t = self.algebra.graph.trivial_path(v)
            out.append((Monomial(t, t), one))
        return Element(self.algebra, tuple(out))

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _require_same(self, other: "Element") -> None:
        if self.algebra != other.algebra:
            raise MixedContextError(
                "elements live in different algebras (graph or field differ)"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, self._terms))

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        # Sums of normal forms are normal: merging cannot create a redex.
        merged = dict(self._terms)
        for m, c in other._terms:
            total = merged.get(m)
            total = c if total is None else total + c
            if total:
                merged[m] = total
            else:
                merged.pop(m, None)
        ordered = tuple(
            sorted(merged.items(), key=lambda kv: self.algebra._mono_key(kv[0]))
        )
        return Element(self.algebra, ordered)

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple((m, -c) for m, c in self._terms))

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def _scaled(self, scalar) -> "Element":
        c = self.algebra.field.coerce(scalar)
        if not c:
            return Element(self.algebra, ())
        return Element(self.algebra, tuple((m, k * c) for m, k in self._terms))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._require_same(other)
            raw = []
            for m1, c1 in self._terms:
                for m2, c2 in other._terms:
                    prod = self.algebra._mono_mul_raw(m1, m2)
                    if prod is not None:
                        raw.append((c1 * c2, prod))
            return self.algebra.normal_form(raw)
        try:
            return self._scaled(other)
        except FieldError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self._scaled(other)
        except FieldError:
            return NotImplemented

    def involution(self) -> "Element":
        """The anti-automorphism swapping each p q* for q p*."""
        return self.algebra.element(
            (c, Monomial(m.ghost, m.real)) for m, c in self._terms
        )

    # ------------------------------------------------------------------
    # text
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        field = self.algebra.field
        parts: list[str] = []
        for m, c in self._terms:
            rendered = "%s*%s" % (field.render(c), m.text())
            if not parts:
                parts.append(rendered)
            elif rendered.startswith("-"):
                parts.append(" - " + rendered[1:])
            else:
                parts.append(" + " + rendered)
        return "".join(parts)

    def __repr__(self) -> str:
        return "<Element %s>" % self
