"""Shared generators and small builders for the test suite."""

from __future__ import annotations

import random
from itertools import product

from skewmut import (
    Diagram,
    NotSkewSymmetrizable,
    RadicalTriple,
    SkewSymmetrizableMatrix,
)


def random_skew_symmetric_entries(rng: random.Random, n: int, max_entry: int = 4):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-max_entry, max_entry)
            rows[i][j] = x
            rows[j][i] = -x
    return rows


def random_skew_symmetrizable(
    rng: random.Random, n: int, max_entry: int = 4, skew_symmetric: bool = False
) -> SkewSymmetrizableMatrix:
    """B_ij = d_j * Y_ij with Y skew-symmetric makes diag(d) * B skew-symmetric."""
    y = random_skew_symmetric_entries(rng, n, max_entry)
    if skew_symmetric:
        return SkewSymmetrizableMatrix.from_entries(y)
    d = [rng.randint(1, 3) for _ in range(n)]
    rows = [[d[j] * y[i][j] for j in range(n)] for i in range(n)]
    return SkewSymmetrizableMatrix.from_entries(rows)


def random_valid_diagram(rng: random.Random, n: int, max_label: int = 5) -> Diagram:
    """Weights l_u * l_v from vertex labels keep every cycle product square."""
    labels = [rng.randint(1, max_label) for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.55:
                w = labels[u] * labels[v]
                if rng.random() < 0.5:
                    edges.append((u, v, w))
                else:
                    edges.append((v, u, w))
    return Diagram(n, edges)


def random_triple(rng: random.Random, max_part: int = 6, allow_path: bool = True) -> RadicalTriple:
    """Squared weights (p*q, q*r, r*p) have the square product (p*q*r)**2."""
    p, q, r = (rng.randint(1, max_part) for _ in range(3))
    weights = [p * q, q * r, r * p]
    if allow_path and rng.random() < 0.3:
        weights[rng.randrange(3)] = 0
    if all(weights) and rng.random() < 0.5:
        sigma = rng.choice((1, -1))
        return RadicalTriple(weights, (sigma, sigma, sigma))
    orient = [rng.choice((1, -1)) if w else 0 for w in weights]
    if orient[0] != 0 and orient[0] == orient[1] == orient[2]:
        orient[rng.randrange(3)] *= -1
    return RadicalTriple(weights, orient)


def oriented_triangle_matrix(x: int, y: int, z: int) -> SkewSymmetrizableMatrix:
    """Skew-symmetric matrix whose diagram is the oriented triangle (x, y, z)."""
    return SkewSymmetrizableMatrix.from_entries(
        [[0, x, -z], [-x, 0, y], [z, -y, 0]]
    )


def path_matrix(x: int, y: int) -> SkewSymmetrizableMatrix:
    """Skew-symmetric matrix whose diagram is the path 0 -> 1 -> 2, radical weights (x, y)."""
    return SkewSymmetrizableMatrix.from_entries(
        [[0, x, 0], [-x, 0, y], [0, -y, 0]]
    )


def divisor_splits(w: int):
    return [(p, w // p) for p in range(1, w + 1) if w % p == 0]


def realize_as_matrix(g: Diagram) -> SkewSymmetrizableMatrix:
    """A skew-symmetrizable matrix with the given 3-vertex diagram.

    Searches entry factorizations |B_ij| * |B_ji| = weight per edge; the
    square-product rule guarantees a consistent choice exists.
    """
    assert g.n == 3
    pairs = [(0, 1), (0, 2), (1, 2)]
    edges = [g.between(i, j) for i, j in pairs]
    options = [divisor_splits(e[2]) if e else [None] for e in edges]
    for combo in product(*options):
        entries = [[0] * 3 for _ in range(3)]
        for e, split in zip(edges, combo):
            if e is None:
                continue
            src, dst, _ = e
            p, q = split
            entries[src][dst] = p
            entries[dst][src] = -q
        try:
            candidate = SkewSymmetrizableMatrix.from_entries(entries)
        except NotSkewSymmetrizable:
            continue
        if candidate.diagram() == g:
            return candidate
    raise AssertionError(f"no matrix realizes {g!r}")


def square_product_triples(limit: int, smallest=1):
    """All 1 <= a <= b <= c <= limit with a*b*c a perfect square."""
    from skewmut import is_perfect_square

    out = []
    for a in range(smallest, limit + 1):
        for b in range(a, limit + 1):
            for c in range(b, limit + 1):
                if is_perfect_square(a * b * c):
                    out.append((a, b, c))
    return out


def cyclic_triple(weights) -> RadicalTriple:
    return RadicalTriple(weights, (1, 1, 1))


def acyclic_triangle_triple(weights) -> RadicalTriple:
    return RadicalTriple(weights, (1, -1, 1))


def path_triple(a: int, b: int) -> RadicalTriple:
    """Through-oriented path: squared weights a, b on the edges, absent third."""
    return RadicalTriple((a, 0, b), (1, 0, 1))
