"""Weighted directed diagrams and their mutation, in pure integer arithmetic.

A diagram is a directed graph without loops or two-cycles whose edges carry
positive integer weights, subject to the square-product rule: the product of
the weights along any cycle of the underlying undirected graph is a perfect
square.  That rule is exactly what keeps mutation closed over the integers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Tuple

from .radical import NotAPerfectSquare, is_perfect_square, isqrt_exact

Edge = Tuple[int, int, int]


class InvalidDiagram(ValueError):
    """The input violates the diagram axioms (or corrupts them mid-mutation)."""


class Diagram:
    """Immutable weighted directed diagram on vertices 0..n-1.

    Vertex identity is positional; isomorphism questions are handled by the
    exploration layer, not here.
    """

    __slots__ = ("n", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 1:
            raise InvalidDiagram(f"vertex count must be a positive integer, got {n!r}")
        table = {}
        for src, dst, w in edges:
            if not (0 <= src < n and 0 <= dst < n):
                raise InvalidDiagram(f"edge ({src},{dst}) out of range for n={n}")
            if src == dst:
                raise InvalidDiagram(f"loop at vertex {src}")
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidDiagram(f"edge ({src},{dst}) needs a positive integer weight, got {w!r}")
            if (src, dst) in table or (dst, src) in table:
                raise InvalidDiagram(f"more than one edge between {src} and {dst}")
            table[(src, dst)] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_edges", table)
        self._check_cycle_products()

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    # -- basic queries ----------------------------------------------------

    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted((i, j, w) for (i, j), w in self._edges.items()))

    def weight(self, src: int, dst: int) -> int:
        """Weight of the directed edge src -> dst, or 0 if absent."""
        return self._edges.get((src, dst), 0)

    def between(self, i: int, j: int) -> Optional[Edge]:
        """The edge joining i and j in whichever direction, or None."""
        w = self._edges.get((i, j))
        if w is not None:
            return (i, j, w)
        w = self._edges.get((j, i))
        if w is not None:
            return (j, i, w)
        return None

    def max_weight(self) -> int:
        return max(self._edges.values(), default=0)

    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted(self._edges.values()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"Diagram({self.n}, {list(self.edges())})"

    # -- validation -------------------------------------------------------

    def _check_cycle_products(self) -> None:
        # Check the square-product rule on a fundamental cycle basis of a
        # spanning forest; squares are closed under the products and exact
        # ratios that generate every other cycle, so the basis suffices.
        parent = {}
        depth = {}
        tree = set()
        for root in range(self.n):
            if root in parent:
                continue
            parent[root] = None
            depth[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in range(self.n):
                    if v == u:
                        continue
                    e = self.between(u, v)
                    if e is None or v in parent:
                        continue
                    parent[v] = (u, e[2])
                    depth[v] = depth[u] + 1
                    tree.add(frozenset((u, v)))
                    queue.append(v)
        for (i, j), w in self._edges.items():
            if frozenset((i, j)) in tree:
                continue
            product = w * self._tree_path_product(i, j, parent, depth)
            if not is_perfect_square(product):
                raise InvalidDiagram(
                    f"cycle through edge ({i},{j}) has non-square weight product {product}"
                )

    def _tree_path_product(self, u: int, v: int, parent, depth) -> int:
        product = 1
        while depth[u] > depth[v]:
            u, w = parent[u]
            product *= w
        while depth[v] > depth[u]:
            v, w = parent[v]
            product *= w
        while u != v:
            u, wu = parent[u]
            v, wv = parent[v]
            product *= wu * wv
        return product

    # -- structure --------------------------------------------------------

    def is_acyclic(self) -> bool:
        """True iff the diagram has no directed cycle (Kahn peeling)."""
        indeg = [0] * self.n
        out = [[] for _ in range(self.n)]
        for (i, j) in self._edges:
            indeg[j] += 1
            out[i].append(j)
        queue = deque(v for v in range(self.n) if indeg[v] == 0)
        seen = 0
        while queue:
            u = queue.popleft()
            seen += 1
            for v in out[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        return seen == self.n

    def sources_and_sinks(self) -> frozenset:
        """Vertices whose incident edges all point away, or all point in.

        Mutation at such a vertex is a reflection: it only reverses the
        incident edges.  Isolated vertices qualify vacuously.
        """
        indeg = [0] * self.n
        outdeg = [0] * self.n
        for (i, j) in self._edges:
            outdeg[i] += 1
            indeg[j] += 1
        return frozenset(v for v in range(self.n) if indeg[v] == 0 or outdeg[v] == 0)

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in range(self.n):
                if v not in seen and self.between(u, v) is not None:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    # -- mutation ---------------------------------------------------------

    def mutate(self, k: int) -> "Diagram":
        """The mutation of the diagram at vertex k.

        Edges incident to k are reversed with their weights intact.  For each
        oriented two-edge path i -> k -> j with weights a and b, the edge
        between i and j is replaced: its new weight is a*b + c -+ 2*sqrt(a*b*c)
        where c is the old weight (0 when absent), with the minus branch taken
        exactly when i, j, k form an oriented cycle; the branch also fixes the
        new orientation.  sqrt(a*b*c) is an integer by the square-product rule.
        """
        if not 0 <= k < self.n:
            raise ValueError(f"vertex {k} out of range for n={self.n}")
        new = {}
        for (i, j), w in self._edges.items():
            if i == k or j == k:
                new[(j, i)] = w
            else:
                new[(i, j)] = w
        for i in range(self.n):
            a = self._edges.get((i, k))
            if not a:
                continue
            for j in range(self.n):
                if j == i:
                    continue
                b = self._edges.get((k, j))
                if not b:
                    continue
                old = self.between(i, j)
                c = old[2] if old else 0
                try:
                    r = isqrt_exact(a * b * c)
                except NotAPerfectSquare as exc:
                    raise InvalidDiagram(
                        f"weights around vertices ({i},{j},{k}) break the square-product rule"
                    ) from exc
                new.pop((i, j), None)
                new.pop((j, i), None)
                if old is not None and old[0] == j:
                    # i -> k -> j closed by j -> i: an oriented triangle
                    w2 = a * b + c - 2 * r
                    if a * b > c:
                        new[(i, j)] = w2
                    elif a * b < c:
                        new[(j, i)] = w2
                    # equal weights cancel the edge entirely
                else:
                    new[(i, j)] = a * b + c + 2 * r
        return Diagram(self.n, [(i, j, w) for (i, j), w in new.items()])


# -- text format ---------------------------------------------------------
#
# First line "n m", then m lines "src dst weight".  Serialization orders
# edges by (src, dst) so the format round-trips byte for byte.


def format_diagram(g: Diagram) -> str:
    lines = [f"{g.n} {len(g.edges())}"]
    lines.extend(f"{i} {j} {w}" for i, j, w in g.edges())
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> Diagram:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidDiagram("empty diagram text")
    header = lines[0].split()
    if len(header) != 2:
        raise InvalidDiagram(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InvalidDiagram(f"expected integers in header, got {lines[0]!r}") from None
    if m < 0 or len(lines) - 1 != m:
        raise InvalidDiagram(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise InvalidDiagram(f"expected 'src dst weight', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1]), int(parts[2])))
        except ValueError:
            raise InvalidDiagram(f"expected integers in edge line, got {line!r}") from None
    return Diagram(n, edges)
