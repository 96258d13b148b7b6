"""Exact integer square roots and exact comparison of sums of square roots.

Edge weights grow without bound under repeated mutation, so everything here
runs on Python's arbitrary-precision integers; no value is ever rounded
through a float.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Iterator

LESS, EQUAL, GREATER = -1, 0, 1


class NotAPerfectSquare(ValueError):
    """Raised when an exact integer square root does not exist."""

    def __init__(self, value: int):
        super().__init__(f"{value} is not a perfect square")
        self.value = value


def isqrt_exact(n: int) -> int:
    """Return the integer r with r*r == n, or raise NotAPerfectSquare."""
    if n < 0:
        raise ValueError("isqrt_exact of a negative number")
    r = math.isqrt(n)
    if r * r != n:
        raise NotAPerfectSquare(n)
    return r


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


class RadicalSum:
    """A finite sum of square roots of nonnegative integers, kept exact.

    The value represented is ``sum(sqrt(t) for t in terms)``.  Zero terms are
    dropped on construction.  Comparisons never consult floating point: they
    use interval arithmetic with escalating precision, certifying equality
    through a conjugate-product separation bound, so the trichotomy is exact.
    Intended for small sums (the three weights of a triangle); the certified
    equality bound degrades quickly as the number of terms grows.

    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[int] = ()):
        kept = []
        for t in terms:
            if not isinstance(t, int) or isinstance(t, bool):
                raise TypeError(f"radical term must be an int, got {t!r}")
            if t < 0:
                raise ValueError(f"radical term must be nonnegative, got {t}")
            if t:
                kept.append(t)
        object.__setattr__(self, "terms", tuple(sorted(kept)))

    def __setattr__(self, name, value):
        raise AttributeError("RadicalSum is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        inner = " + ".join(f"sqrt({t})" for t in self.terms)
        return f"RadicalSum({inner or '0'})"

    def scaled(self, factor: int) -> "RadicalSum":
        """The sum multiplied by a nonnegative integer (factor * sqrt(t) = sqrt(factor^2 t))."""
        if factor < 0:
            raise ValueError("scale factor must be nonnegative")
        return RadicalSum(t * factor * factor for t in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return compare_radical_sums(self, other) == EQUAL

    def __lt__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return compare_radical_sums(self, other) == LESS

    def __le__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return compare_radical_sums(self, other) != GREATER

    def __gt__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return compare_radical_sums(self, other) == GREATER

    def __ge__(self, other) -> bool:
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return compare_radical_sums(self, other) != LESS

    # Distinct term multisets can represent equal values (sqrt(8) = 2*sqrt(2)),
    # so there is no cheap hash consistent with __eq__.
    __hash__ = None


def compare_radical_sums(x: RadicalSum, y: RadicalSum) -> int:
    """Exact three-way comparison of two radical sums: -1, 0 or +1."""
    xc = Counter(x.terms)
    yc = Counter(y.terms)
    common = xc & yc
    xt = sorted((xc - common).elements())
    yt = sorted((yc - common).elements())
    if not xt and not yt:
        return EQUAL
    if not xt:
        return LESS
    if not yt:
        return GREATER

    m = len(xt) + len(yt)
    # Flipping the sign of each sqrt independently turns the difference into a
    # root of a monic integer polynomial of degree 2**m whose roots all have
    # magnitude <= bound; a nonzero difference therefore has magnitude at
    # least 1 / bound**(2**m - 1).
    bound = sum(math.isqrt(t) + 1 for t in xt) + sum(math.isqrt(t) + 1 for t in yt)
    sep = bound ** ((1 << m) - 1)

    bits = 128
    while True:
        # floor(sqrt(t) * 2**bits) brackets each term within one unit
        xlo = sum(math.isqrt(t << (2 * bits)) for t in xt)
        ylo = sum(math.isqrt(t << (2 * bits)) for t in yt)
        xhi = xlo + len(xt)
        yhi = ylo + len(yt)
        if xlo > yhi:
            return GREATER
        if xhi < ylo:
            return LESS
        gap = max(xhi - ylo, yhi - xlo)
        if gap * sep < 1 << bits:
            return EQUAL
        bits *= 2
