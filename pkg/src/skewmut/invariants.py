"""Per-vertex gcd of incident edge weights: a mutation invariant, any size."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Sequence, Tuple

from .diagram import Diagram
from .radical import NotAPerfectSquare, isqrt_exact


class Flavor(Enum):
    WEIGHT = "weight"
    RADICAL = "radical"


class RadicalFlavorInvalid(ValueError):
    """Radical flavor needs every weight to be a perfect square."""


@dataclass(frozen=True)
class GcdInvariant:
    values: Tuple[int, ...]
    flavor: Flavor

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def gcd_invariant(g: Diagram, flavor: Flavor = Flavor.WEIGHT) -> GcdInvariant:
    """Sorted vector of per-vertex gcds of incident edge weights.

    In radical flavor the gcd runs over the integer square roots of the
    weights instead (meaningful for diagrams of skew-symmetric matrices).
    Isolated vertices contribute 0, the gcd of nothing.
    """
    incident = [[] for _ in range(g.n)]
    for i, j, w in g.edges():
        if flavor is Flavor.RADICAL:
            try:
                w = isqrt_exact(w)
            except NotAPerfectSquare as exc:
                raise RadicalFlavorInvalid(
                    f"edge ({i},{j}) weight {w} is not a perfect square"
                ) from exc
        incident[i].append(w)
        incident[j].append(w)
    values = sorted((reduce(math.gcd, ws, 0) for ws in incident), reverse=True)
    return GcdInvariant(tuple(values), flavor)


def check_invariance(g: Diagram, sequence: Sequence[int], flavor: Flavor = Flavor.WEIGHT) -> bool:
    """True iff the gcd vector survives the given mutation sequence unchanged."""
    before = gcd_invariant(g, flavor)
    current = g
    for k in sequence:
        current = current.mutate(k)
    return gcd_invariant(current, flavor) == before
