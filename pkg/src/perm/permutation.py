"""
Permutation arithmetic on {0, ..., degree-1}

Conventions used throughout the package:
  compose(a, b) applies a first, then b.
  conjugate(a, g) = g^-1 a g, so conjugate(conjugate(a, g), h) == conjugate(a, compose(g, h)).
  commutator(a, b) = a^-1 b^-1 a b.
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core.exceptions import DegreeMismatchError


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., degree-1}; images[i] is where point i maps"""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"images {list(images)} are not a bijection of 0..{len(images) - 1}")

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        # Skips the bijection check for results of arithmetic on valid permutations.
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point"""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self) -> str:
        from .cycles import format_cycles
        return f"Permutation({format_cycles(self)}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation._trusted(tuple(range(degree)))


def _check_degrees(a: Permutation, b: Permutation):
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degree {a.degree} permutation combined with degree {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply a first, then b"""
    _check_degrees(a, b)
    b_images = b.images
    return Permutation._trusted(tuple(b_images[i] for i in a.images))


def inverse(a: Permutation) -> Permutation:
    result = [0] * a.degree
    for point, image in enumerate(a.images):
        result[image] = point
    return Permutation._trusted(tuple(result))


def conjugate(a: Permutation, g: Permutation) -> Permutation:
    """a^g = g^-1 a g"""
    _check_degrees(a, g)
    return compose(compose(inverse(g), a), g)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a^-1 b^-1 a b"""
    _check_degrees(a, b)
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def power(a: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(a), -k)
    result = identity(a.degree)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def element_order(a: Permutation) -> int:
    """Least k >= 1 with a^k = identity (lcm of cycle lengths)"""
    return math.lcm(1, *(len(cycle) for cycle in a.cycles()))


def from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    """Build a permutation from disjoint cycles (validated by the constructor)"""
    images = list(range(degree))
    for cycle in cycles:
        for position, point in enumerate(cycle):
            images[point] = cycle[(position + 1) % len(cycle)]
    return Permutation(tuple(images))
