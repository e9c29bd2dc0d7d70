"""Permutations on the points 1..n and cycle notation.

Composition convention: ``compose(p, q)`` applies ``q`` first, so the
result maps ``i`` to ``p(q(i))``. Every module in the package uses this.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce

__all__ = [
    "Permutation",
    "PermutationParseError",
    "DuplicatePointError",
    "PointOutOfRangeError",
    "MalformedCycleError",
    "identity",
    "parse_permutation",
    "format_permutation",
    "compose",
    "inverse",
    "order_of",
    "power",
]


class PermutationParseError(ValueError):
    """Base class for cycle-notation parse failures."""


class DuplicatePointError(PermutationParseError):
    pass


class PointOutOfRangeError(PermutationParseError):
    pass


class MalformedCycleError(PermutationParseError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..degree}; ``images[i-1]`` is the image of ``i``."""

    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if len(self.images) != self.degree:
            raise ValueError("images length does not match degree")
        if sorted(self.images) != list(range(1, self.degree + 1)):
            raise ValueError(f"not a bijection on 1..{self.degree}: {self.images}")

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return format_permutation(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))


def identity(degree: int) -> Permutation:
    return Permutation(degree, tuple(range(1, degree + 1)))


_TOKEN = re.compile(r"\s*(\(|\)|,|\d+)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse a product of disjoint cycles such as ``"(1,2,3)(4,5)"``.

    Points are 1-based. Points not mentioned are fixed; the empty string is
    the identity. Cycles must be disjoint, so ``"(1,2)(2,3)"`` is rejected
    with :class:`DuplicatePointError` rather than multiplied out.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            raise MalformedCycleError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()

    images = list(range(1, degree + 1))
    seen: set[int] = set()
    i = 0
    while i < len(tokens):
        if tokens[i] != "(":
            raise MalformedCycleError(f"expected '(' in {text!r}")
        i += 1
        cycle = []
        expect_point = True
        while True:
            if i >= len(tokens):
                raise MalformedCycleError(f"unclosed cycle in {text!r}")
            tok = tokens[i]
            i += 1
            if tok == ")":
                if expect_point and cycle:
                    raise MalformedCycleError(f"trailing comma in {text!r}")
                break
            if expect_point:
                if not tok.isdigit():
                    raise MalformedCycleError(f"expected a point, got {tok!r} in {text!r}")
                point = int(tok)
                if not 1 <= point <= degree:
                    raise PointOutOfRangeError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise DuplicatePointError(f"point {point} repeated in {text!r}")
                seen.add(point)
                cycle.append(point)
                expect_point = False
            else:
                if tok != ",":
                    raise MalformedCycleError(f"expected ',' or ')' in {text!r}")
                expect_point = True
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
    return Permutation(degree, tuple(images))


def format_permutation(p: Permutation) -> str:
    """Cycle notation with comma-separated points; identity formats as ``"()"``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(p.degree, tuple(pi[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        inv[img - 1] = i
    return Permutation(p.degree, tuple(inv))


def order_of(p: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result
