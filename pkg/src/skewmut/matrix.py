"""Skew-symmetrizable integer matrices: validation, mutation, companions."""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .diagram import Diagram


class NotSkewSymmetrizable(ValueError):
    """No positive diagonal D makes D*B skew-symmetric."""


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


class SkewSymmetrizableMatrix:
    """An n x n integer matrix B together with a positive diagonal D
    such that D*B is skew-symmetric.

    Entries are Python integers, so weights may grow without bound under
    repeated mutation.  Instances are immutable.
    """

    __slots__ = ("n", "entries", "symmetrizer")

    def __init__(self, entries: Sequence[Sequence[int]], symmetrizer: Sequence[int]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise NotSkewSymmetrizable("entries must form a nonempty square matrix")
        d = tuple(int(x) for x in symmetrizer)
        if len(d) != n or any(x < 1 for x in d):
            raise ValueError("symmetrizer must be n positive integers")
        for i in range(n):
            if rows[i][i] != 0:
                raise NotSkewSymmetrizable(f"nonzero diagonal entry at ({i},{i})")
            for j in range(n):
                if d[i] * rows[i][j] != -d[j] * rows[j][i]:
                    raise ValueError(
                        f"symmetrizer does not skew-symmetrize entry ({i},{j})"
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "symmetrizer", d)

    def __setattr__(self, name, value):
        raise AttributeError("SkewSymmetrizableMatrix is immutable")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "SkewSymmetrizableMatrix":
        """Validate a raw integer matrix and find its minimal symmetrizer.

        The ratios d_j/d_i are forced along every edge of the underlying
        graph, so they are propagated over a spanning forest and every edge is
        re-checked afterwards.  Each connected component is scaled to the
        smallest positive integers; isolated vertices get 1.  The result is
        therefore unique, which makes validation deterministic and testable.
        """
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise NotSkewSymmetrizable("entries must form a nonempty square matrix")
        for i in range(n):
            if rows[i][i] != 0:
                raise NotSkewSymmetrizable(f"nonzero diagonal entry at ({i},{i})")
            for j in range(i + 1, n):
                if _sgn(rows[i][j]) != -_sgn(rows[j][i]):
                    raise NotSkewSymmetrizable(
                        f"entries ({i},{j}) and ({j},{i}) must have opposite signs"
                    )

        ratio = [None] * n  # d_v as a Fraction, per component
        for root in range(n):
            if ratio[root] is not None:
                continue
            ratio[root] = Fraction(1)
            component = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in range(n):
                    if rows[u][v] == 0 or ratio[v] is not None:
                        continue
                    # d_u * B_uv = -d_v * B_vu fixes the ratio d_v / d_u > 0
                    ratio[v] = ratio[u] * Fraction(abs(rows[u][v]), abs(rows[v][u]))
                    component.append(v)
                    queue.append(v)
            for u in component:
                for v in component:
                    if rows[u][v] == 0:
                        continue
                    if ratio[u] * abs(rows[u][v]) != ratio[v] * abs(rows[v][u]):
                        raise NotSkewSymmetrizable(
                            f"inconsistent weight ratios around entry ({u},{v})"
                        )
            scale = math.lcm(*(r.denominator for r in (ratio[u] for u in component)))
            scaled = [int(ratio[u] * scale) for u in component]
            g = math.gcd(*scaled)
            for u, value in zip(component, scaled):
                ratio[u] = value // g
        return cls(rows, [int(r) for r in ratio])

    # -- operations ---------------------------------------------------------

    def mutate(self, k: int) -> "SkewSymmetrizableMatrix":
        """Matrix mutation at index k; the result keeps the same symmetrizer."""
        if not 0 <= k < self.n:
            raise ValueError(f"index {k} out of range for n={self.n}")
        b = self.entries
        new = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if i == k or j == k:
                    row.append(-b[i][j])
                else:
                    row.append(b[i][j] + _sgn(b[i][k]) * max(b[i][k] * b[k][j], 0))
            new.append(row)
        return SkewSymmetrizableMatrix(new, self.symmetrizer)

    def is_skew_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.n)
            for j in range(self.n)
        )

    def companion(self) -> "CompanionMatrix":
        """The skew-symmetric companion: entry (i,j) is sgn(B_ij)*sqrt(|B_ij*B_ji|).

        This is the conjugate of B by the square root of its symmetrizer; it
        depends only on B and commutes with mutation.
        """
        pairs = tuple(
            tuple(
                (_sgn(self.entries[i][j]), abs(self.entries[i][j] * self.entries[j][i]))
                for j in range(self.n)
            )
            for i in range(self.n)
        )
        return CompanionMatrix(self.n, pairs)

    def diagram(self) -> Diagram:
        """The diagram of B: edge i -> j iff B_ij > 0, weighted |B_ij * B_ji|."""
        edges = []
        for i in range(self.n):
            for j in range(self.n):
                if self.entries[i][j] > 0:
                    edges.append((i, j, abs(self.entries[i][j] * self.entries[j][i])))
        return Diagram(self.n, edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewSymmetrizableMatrix):
            return NotImplemented
        return self.entries == other.entries and self.symmetrizer == other.symmetrizer

    def __hash__(self) -> int:
        return hash((self.entries, self.symmetrizer))

    def __repr__(self) -> str:
        return f"SkewSymmetrizableMatrix({[list(r) for r in self.entries]}, D={list(self.symmetrizer)})"


class CompanionMatrix:
    """Skew-symmetric matrix whose entries are sign * sqrt(square), stored exactly.

    Each entry is a (sign, square) pair with sign in {-1, 0, 1} and square a
    nonnegative integer; sign 0 goes with square 0.  A companion carries the
    same information as a diagram, and mutating it is diagram mutation in
    matrix clothing.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Sequence[Sequence[Tuple[int, int]]]):
        rows = tuple(tuple((int(s), int(q)) for s, q in row) for row in entries)
        if n < 1 or len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError("entries must form a nonempty square matrix")
        for i in range(n):
            if rows[i][i] != (0, 0):
                raise ValueError(f"nonzero diagonal entry at ({i},{i})")
            for j in range(n):
                s, q = rows[i][j]
                if s not in (-1, 0, 1) or q < 0 or (s == 0) != (q == 0):
                    raise ValueError(f"malformed entry {rows[i][j]} at ({i},{j})")
                if rows[j][i] != (-s, q):
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("CompanionMatrix is immutable")

    def to_diagram(self) -> Diagram:
        edges = []
        for i in range(self.n):
            for j in range(self.n):
                s, q = self.entries[i][j]
                if s > 0:
                    edges.append((i, j, q))
        return Diagram(self.n, edges)

    @classmethod
    def from_diagram(cls, g: Diagram) -> "CompanionMatrix":
        rows = [[(0, 0)] * g.n for _ in range(g.n)]
        for i, j, w in g.edges():
            rows[i][j] = (1, w)
            rows[j][i] = (-1, w)
        return cls(g.n, rows)

    def mutate(self, k: int) -> "CompanionMatrix":
        return CompanionMatrix.from_diagram(self.to_diagram().mutate(k))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompanionMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __repr__(self) -> str:
        return f"CompanionMatrix({self.n}, {[list(r) for r in self.entries]})"


# -- text format -----------------------------------------------------------
#
# First line "n", then n lines of n space-separated signed integers.


def format_matrix(b: SkewSymmetrizableMatrix) -> str:
    lines = [str(b.n)]
    lines.extend(" ".join(str(x) for x in row) for row in b.entries)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SkewSymmetrizableMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise NotSkewSymmetrizable("empty matrix text")
    header = lines[0].split()
    if len(header) != 1:
        raise NotSkewSymmetrizable(f"expected a lone size line, got {lines[0]!r}")
    try:
        n = int(header[0])
    except ValueError:
        raise NotSkewSymmetrizable(f"expected an integer size, got {lines[0]!r}") from None
    if n < 1 or len(lines) - 1 != n:
        raise NotSkewSymmetrizable(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise NotSkewSymmetrizable(f"row {line!r} has {len(parts)} entries, expected {n}")
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise NotSkewSymmetrizable(f"non-integer entry in row {line!r}") from None
    return SkewSymmetrizableMatrix.from_entries(rows)
