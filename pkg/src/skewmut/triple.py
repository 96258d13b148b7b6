"""Three-vertex diagrams as radical-weight triples, and descent to minima.

A connected diagram on three vertices is described by the squared weights of
its (up to) three edges plus orientation data.  Weights are indexed by the
*opposite* vertex: ``weights[v]`` is the squared weight of the edge joining
the other two vertices, with 0 meaning the edge is absent.  Mutation at a
vertex only ever touches the opposite weight, which makes the whole descent
analysis run on plain integer comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .diagram import Diagram
from .radical import EQUAL, GREATER, LESS, RadicalSum, is_perfect_square, isqrt_exact


class WrongSize(ValueError):
    """The diagram does not have exactly three vertices."""


class Disconnected(ValueError):
    """The diagram is not connected."""


@dataclass(frozen=True)
class CanonicalForm:
    """Sorted squared weights plus the cyclic flag.

    Two three-vertex diagrams related by renumbering vertices, reversing all
    edges (cyclic case) or reflecting at sources and sinks (acyclic case)
    share the same canonical form, and the exploration oracle checks on
    bounded classes that this quotient is exactly the uniqueness granularity
    of the minimal representative.
    """

    sorted_squared_weights: Tuple[int, int, int]
    cyclic: bool

    def __str__(self) -> str:
        kind = "cyclic" if self.cyclic else "acyclic"
        return f"{kind} {' '.join(str(w) for w in self.sorted_squared_weights)}"


class RadicalTriple:
    """A connected three-vertex diagram in squared-weight form.

    ``weights[v]`` is the squared weight opposite vertex v.  ``orient[v]``
    records the direction of that edge: +1 for (v+1) -> (v+2) modulo 3, -1
    for the reverse, 0 when absent.  Orientation is needed to tell a
    reflection (mutation at a source or sink, which fixes all weights) from a
    genuine weight-changing mutation; the quotient by reflections is taken
    only in :class:`CanonicalForm`.
    """

    __slots__ = ("weights", "orient")

    def __init__(self, weights, orient):
        w = tuple(int(x) for x in weights)
        o = tuple(int(x) for x in orient)
        if len(w) != 3 or len(o) != 3:
            raise ValueError("a triple needs exactly three weights and orientations")
        if any(x < 0 for x in w):
            raise ValueError("squared weights must be nonnegative")
        if sum(1 for x in w if x == 0) > 1:
            raise Disconnected("more than one absent edge leaves the diagram disconnected")
        if any(x not in (-1, 0, 1) for x in o):
            raise ValueError("orientations must be -1, 0 or +1")
        if any((ow == 0) != (ww == 0) for ow, ww in zip(o, w)):
            raise ValueError("orientation must be 0 exactly on absent edges")
        if not is_perfect_square(w[0] * w[1] * w[2]):
            raise ValueError("the product of the squared weights must be a perfect square")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "orient", o)

    def __setattr__(self, name, value):
        raise AttributeError("RadicalTriple is immutable")

    # -- construction / conversion ---------------------------------------

    @classmethod
    def from_diagram(cls, g: Diagram) -> "RadicalTriple":
        if g.n != 3:
            raise WrongSize(f"expected 3 vertices, got {g.n}")
        if not g.is_connected():
            raise Disconnected("triple requires a connected diagram")
        weights = [0, 0, 0]
        orient = [0, 0, 0]
        for v in range(3):
            u1, u2 = (v + 1) % 3, (v + 2) % 3
            edge = g.between(u1, u2)
            if edge is not None:
                weights[v] = edge[2]
                orient[v] = 1 if edge[0] == u1 else -1
        return cls(weights, orient)

    def to_diagram(self) -> Diagram:
        edges = []
        for v in range(3):
            if self.weights[v]:
                u1, u2 = (v + 1) % 3, (v + 2) % 3
                if self.orient[v] > 0:
                    edges.append((u1, u2, self.weights[v]))
                else:
                    edges.append((u2, u1, self.weights[v]))
        return Diagram(3, edges)

    # -- inspection --------------------------------------------------------

    @property
    def squared_weights(self) -> Tuple[int, int, int]:
        return self.weights

    @property
    def cyclic(self) -> bool:
        return self.orient[0] != 0 and self.orient[0] == self.orient[1] == self.orient[2]

    def incidence(self, v: int) -> Tuple[int, int]:
        """Squared weights of the two edges incident to vertex v."""
        return (self.weights[(v + 1) % 3], self.weights[(v + 2) % 3])

    def is_source_or_sink(self, k: int) -> bool:
        ou, ov = self.orient[(k + 1) % 3], self.orient[(k + 2) % 3]
        # a two-edge oriented path through k needs both edges present with
        # matching orientation labels; anything else reflects
        return not (ou != 0 and ou == ov)

    def s_value(self) -> RadicalSum:
        """Sum of the square roots of the weights, the minimized functional."""
        return RadicalSum(self.weights)

    def canonical_form(self) -> CanonicalForm:
        return CanonicalForm(tuple(sorted(self.weights, reverse=True)), self.cyclic)

    # -- mutation ----------------------------------------------------------

    def mutate(self, k: int) -> "RadicalTriple":
        """Mutation at vertex k, computed on squared weights.

        At a source or sink the incident edges reverse and all weights stay.
        Otherwise only the weight opposite k changes, to
        ``a*b + c -+ 2*sqrt(a*b*c)`` with a, b the incident squared weights
        and c the opposite one; the minus branch applies exactly when the
        triangle is oriented, and the result is an oriented triangle iff the
        branch value c stays below a*b.
        """
        if not 0 <= k < 3:
            raise ValueError(f"vertex {k} out of range")
        u, v = (k + 1) % 3, (k + 2) % 3
        ou, ov, ok = self.orient[u], self.orient[v], self.orient[k]
        if not (ou != 0 and ou == ov):
            new_orient = list(self.orient)
            new_orient[u] = -ou
            new_orient[v] = -ov
            return RadicalTriple(self.weights, new_orient)
        sigma = ou
        ab = self.weights[u] * self.weights[v]
        c = self.weights[k]
        r = isqrt_exact(ab * c)
        new_weights = list(self.weights)
        new_orient = [0, 0, 0]
        new_orient[u] = -sigma
        new_orient[v] = -sigma
        if ok == sigma:
            # oriented triangle
            new_weights[k] = ab + c - 2 * r
            if c < ab:
                new_orient[k] = -sigma
            elif c > ab:
                new_orient[k] = sigma
        else:
            new_weights[k] = ab + c + 2 * r
            new_orient[k] = -sigma
        return RadicalTriple(new_weights, new_orient)

    def compare_adjacent(self, k: int) -> int:
        """Sign of s(mutate(k)) - s(self), from a single integer comparison.

        Only the weight opposite k can change, so the s-comparison reduces to
        comparing that weight before and after; with a and b the incident
        squared weights and c the opposite one, the oriented-triangle value
        drops exactly when a*b < 4*c.
        """
        if not 0 <= k < 3:
            raise ValueError(f"vertex {k} out of range")
        u, v = (k + 1) % 3, (k + 2) % 3
        ou, ov = self.orient[u], self.orient[v]
        if not (ou != 0 and ou == ov):
            return EQUAL
        if self.orient[k] == ou:
            ab = self.weights[u] * self.weights[v]
            c4 = 4 * self.weights[k]
            if ab < c4:
                return LESS
            if ab > c4:
                return GREATER
            return EQUAL
        return GREATER

    def decreasing_vertices(self) -> List[int]:
        return [k for k in range(3) if self.compare_adjacent(k) == LESS]

    def is_local_minimum(self) -> bool:
        """True iff no single mutation strictly lowers the s value."""
        return not self.decreasing_vertices()

    def descend_to_minimum(self) -> Tuple[CanonicalForm, List[int]]:
        """Follow strictly decreasing mutations down to the minimal diagram.

        Each step strictly decreases one nonnegative integer weight, so the
        walk terminates.  When several vertices decrease s (possible only in
        mutation-acyclic classes) the smallest index is taken; any maximal
        decreasing sequence reaches the same canonical form, so the tie-break
        merely pins the witness.  Equal-s moves are never taken: they keep
        every weight and cannot lead anywhere smaller.
        """
        current = self
        witness: List[int] = []
        while True:
            drops = current.decreasing_vertices()
            if not drops:
                return current.canonical_form(), witness
            k = drops[0]
            current = current.mutate(k)
            witness.append(k)

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalTriple):
            return NotImplemented
        return self.weights == other.weights and self.orient == other.orient

    def __hash__(self) -> int:
        return hash((self.weights, self.orient))

    def __repr__(self) -> str:
        return f"RadicalTriple(weights={self.weights}, orient={self.orient})"

    # -- text format -------------------------------------------------------
    #
    # "cyclic a2 b2 c2" / "acyclic a2 b2 c2" with squared weights in decimal.
    # Orientation beyond the cyclic flag is not part of the format; parsing
    # reconstructs a fixed representative (ascending edges when acyclic).

    def to_text(self) -> str:
        kind = "cyclic" if self.cyclic else "acyclic"
        return f"{kind} {self.weights[0]} {self.weights[1]} {self.weights[2]}"


def parse_triple(text: str) -> RadicalTriple:
    parts = text.split()
    if len(parts) != 4 or parts[0] not in ("cyclic", "acyclic"):
        raise ValueError(f"expected 'cyclic|acyclic a2 b2 c2', got {text!r}")
    try:
        weights = [int(x) for x in parts[1:]]
    except ValueError:
        raise ValueError(f"expected integer squared weights, got {text!r}") from None
    if parts[0] == "cyclic":
        if any(w == 0 for w in weights):
            raise ValueError("a cyclic triple needs all three edges present")
        return RadicalTriple(weights, (1, 1, 1))
    orient = [o if w else 0 for o, w in zip((1, -1, 1), weights)]
    return RadicalTriple(weights, orient)
