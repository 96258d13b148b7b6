"""Mutation-acyclicity of 3 x 3 skew-symmetrizable matrices.

The decision goes through an admissible quasi-Cartan companion: a
symmetrizable integer matrix with diagonal 2 matching |B| off the diagonal,
whose edge signs obey the cycle rule (product of the negated off-diagonal
entries over a cycle is negative for oriented cycles, positive otherwise).
Its determinant and the definiteness of its symmetrization sort mutation
classes into finite / affine / indefinite-but-mutation-acyclic, with
everything else mutation-cyclic.  For skew-symmetric matrices the same
decision is available through the Markov constant C(x,y,z).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Tuple

from .matrix import SkewSymmetrizableMatrix


class NotApplicable(ValueError):
    """The Markov-constant criterion only covers cyclic diagrams."""


class MutationClassKind(Enum):
    FINITE = "finite"
    AFFINE = "affine"
    MUTATION_ACYCLIC_INDEFINITE = "indefinite-acyclic"
    MUTATION_CYCLIC = "mutation-cyclic"

    @property
    def mutation_acyclic(self) -> bool:
        return self is not MutationClassKind.MUTATION_CYCLIC


@dataclass(frozen=True)
class QuasiCartanCompanion:
    """Symmetrizable integer matrix with all diagonal entries equal to 2."""

    n: int
    entries: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[int, ...]

    def determinant(self) -> int:
        return _det3(self.entries)


# Triples (x >= y >= z) that stay mutation-acyclic although C(x,y,z) <= 4;
# every other cyclic skew-symmetric triple with C <= 4 is mutation-cyclic.
MUTATION_ACYCLIC_EXCEPTIONS = frozenset(
    [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 0, 0), (2, 1, 1)]
)


def markov_constant(x: int, y: int, z: int) -> int:
    return x * x + y * y + z * z - x * y * z


def is_mutation_acyclic_markov(x: int, y: int, z: int, cyclic: bool = True) -> bool:
    """Markov-constant test for a skew-symmetric matrix with radical weights x, y, z.

    Only defined when the diagram is cyclic; acyclic diagrams are
    mutation-acyclic by definition and must not be routed through here.
    """
    if not cyclic:
        raise NotApplicable("the Markov constant is undefined for acyclic diagrams")
    return markov_constant(x, y, z) > 4 or min(x, y, z) < 2


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


_PAIRS = ((0, 1), (0, 2), (1, 2))


def _triangle_oriented(b: SkewSymmetrizableMatrix):
    """None when some edge is missing, else True iff the triangle is oriented."""
    if any(b.entries[i][j] == 0 for i, j in _PAIRS):
        return None
    return not b.diagram().is_acyclic()


def is_admissible(a: QuasiCartanCompanion, b: SkewSymmetrizableMatrix) -> bool:
    """Check the cycle sign rule of a companion against the diagram of b."""
    for i in range(3):
        if a.entries[i][i] != 2:
            return False
        for j in range(3):
            if i != j and abs(a.entries[i][j]) != abs(b.entries[i][j]):
                return False
    oriented = _triangle_oriented(b)
    if oriented is None:
        return True
    sign_product = 1
    for i, j in _PAIRS:
        sign_product *= -a.entries[i][j]
    return (sign_product < 0) == oriented


def admissible_companion(b: SkewSymmetrizableMatrix) -> QuasiCartanCompanion:
    """A deterministic admissible companion of a size-3 matrix.

    Sign patterns over the present edges are scanned in lexicographic order
    with -1 first, so an acyclic diagram gets the all-negative companion and
    any diagram gets the lexicographically smallest valid sign vector.  A
    valid pattern always exists in size 3, and all of them agree up to
    simultaneous sign flips of rows and columns.
    """
    if b.n != 3:
        raise ValueError("admissible companions are built here for size 3 only")
    present = [(i, j) for i, j in _PAIRS if b.entries[i][j] != 0]
    oriented = _triangle_oriented(b)
    for signs in product((-1, 1), repeat=len(present)):
        if oriented is not None:
            # product over the triangle of -(sign) must be negative iff oriented
            sign_product = 1
            for s in signs:
                sign_product *= -s
            if (sign_product < 0) != oriented:
                continue
        rows = [[2 if i == j else 0 for j in range(3)] for i in range(3)]
        for (i, j), s in zip(present, signs):
            rows[i][j] = s * abs(b.entries[i][j])
            rows[j][i] = s * abs(b.entries[j][i])
        return QuasiCartanCompanion(
            3, tuple(tuple(r) for r in rows), tuple(b.symmetrizer)
        )
    raise AssertionError("no admissible sign pattern found for a size-3 matrix")


def classify(b: SkewSymmetrizableMatrix) -> MutationClassKind:
    """Sort the mutation class of a connected size-3 matrix.

    Works on the symmetrized companion S = D*A with exact integer minors:
    positive definiteness by leading principal minors, semipositivity of
    corank one by a zero determinant with nonnegative 2x2 principal minors,
    at least one positive.  Everything the three mutation-acyclic cases miss
    is mutation-cyclic.
    """
    if b.n != 3:
        raise ValueError("classification is implemented for size 3 only")
    if not b.diagram().is_connected():
        raise ValueError("classification requires a connected diagram")
    a = admissible_companion(b)
    det_a = _det3(a.entries)
    d = b.symmetrizer
    s = [[d[i] * a.entries[i][j] for j in range(3)] for i in range(3)]
    minor01 = s[0][0] * s[1][1] - s[0][1] * s[1][0]
    minor02 = s[0][0] * s[2][2] - s[0][2] * s[2][0]
    minor12 = s[1][1] * s[2][2] - s[1][2] * s[2][1]
    det_s = _det3(s)
    if det_a > 0 and s[0][0] > 0 and minor01 > 0 and det_s > 0:
        return MutationClassKind.FINITE
    if det_a == 0:
        principal = (minor01, minor02, minor12)
        if all(m >= 0 for m in principal) and any(m > 0 for m in principal):
            return MutationClassKind.AFFINE
        return MutationClassKind.MUTATION_CYCLIC
    if det_a < 0:
        return MutationClassKind.MUTATION_ACYCLIC_INDEFINITE
    return MutationClassKind.MUTATION_CYCLIC


def radical_weights(b: SkewSymmetrizableMatrix) -> Tuple[int, int, int]:
    """The three |B_ij| over unordered pairs of a skew-symmetric 3x3 matrix."""
    if b.n != 3 or not b.is_skew_symmetric():
        raise ValueError("radical weights require a skew-symmetric 3x3 matrix")
    return tuple(abs(b.entries[i][j]) for i, j in _PAIRS)


def det_markov_consistency(b: SkewSymmetrizableMatrix) -> bool:
    """det(A) == 2*(4 - C) for a skew-symmetric matrix with a cyclic diagram."""
    x, y, z = radical_weights(b)
    if b.diagram().is_acyclic():
        raise NotApplicable("the Markov constant is undefined for acyclic diagrams")
    det_a = admissible_companion(b).determinant()
    return det_a == 2 * (4 - markov_constant(x, y, z))
