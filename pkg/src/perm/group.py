"""
Finite permutation groups by exhaustive closure

Elements are kept in canonical order (lexicographic on image sequences), so the
identity is always the first element and every "find a witness" scan is
deterministic.
"""

import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..core.config import config
from ..core.exceptions import DegreeMismatchError, ElementNotInGroupError, TooLargeError
from .permutation import Permutation, compose, element_order, identity

logger = logging.getLogger(__name__)


def _dimino(
    unit: Permutation, seeds: Iterable[Permutation], cap: Optional[int] = None
) -> Tuple[List[Permutation], List[Permutation]]:
    """Close seeds under composition, adding one generator at a time.

    Returns the elements and the seeds that actually enlarged the group.
    Each new generator adds whole right cosets of the previous subgroup.
    """
    elements = [unit]
    members = {unit}
    used: List[Permutation] = []

    for gen in seeds:
        if gen in members:
            continue
        used.append(gen)
        previous = list(elements)
        reps = [unit, gen]
        elements.extend(compose(h, gen) for h in previous)
        members.update(elements[-len(previous):])

        position = 1
        while position < len(reps):
            rep = reps[position]
            for step in used:
                candidate = compose(rep, step)
                if candidate not in members:
                    reps.append(candidate)
                    coset = [compose(h, candidate) for h in previous]
                    elements.extend(coset)
                    members.update(coset)
                    if cap is not None and len(elements) > cap:
                        raise TooLargeError(f"closure exceeds the element cap of {cap}")
            position += 1

        if cap is not None and len(elements) > cap:
            raise TooLargeError(f"closure exceeds the element cap of {cap}")

    return elements, used


class FiniteGroup:
    """A fully enumerated permutation group; immutable after construction"""

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Iterable[Permutation], name: str = ""):
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.elements: Tuple[Permutation, ...] = tuple(sorted(elements))
        self.name = name
        self._index: Dict[Permutation, int] = {e: i for i, e in enumerate(self.elements)}
        self.order_cache: Dict[Permutation, int] = {e: element_order(e) for e in self.elements}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index_of(self, element: Permutation) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise ElementNotInGroupError(f"{element!r} is not an element of {self.label}")

    def element_order(self, element: Permutation) -> int:
        return self.order_cache[element]

    @property
    def label(self) -> str:
        return self.name or f"group of order {self.order} on {self.degree} points"

    def whole(self) -> "Subgroup":
        return Subgroup(self, self.elements, generators=self.generators)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [self.identity], generators=())

    def is_abelian(self) -> bool:
        return all(
            compose(a, b) == compose(b, a)
            for i, a in enumerate(self.generators)
            for b in self.generators[i + 1:]
        )

    def __contains__(self, element: Permutation) -> bool:
        return element in self._index

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.order, self.elements[-1]))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label})"


class Subgroup:
    """A canonically ordered, composition-closed subset of a parent group"""

    def __init__(self, parent: FiniteGroup, members: Iterable[Permutation],
                 generators: Optional[Sequence[Permutation]] = None):
        self.parent = parent
        self.member_set: FrozenSet[Permutation] = frozenset(members)
        self.members: Tuple[Permutation, ...] = tuple(sorted(self.member_set))
        self._generators = tuple(generators) if generators is not None else None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def generators(self) -> Tuple[Permutation, ...]:
        """Greedy generating set: members in canonical order that enlarge the closure"""
        if self._generators is None:
            _, used = _dimino(self.parent.identity, self.members)
            self._generators = tuple(used)
        return self._generators

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def to_images(self) -> List[List[int]]:
        return [list(member.images) for member in self.members]

    def __contains__(self, element: Permutation) -> bool:
        return element in self.member_set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.members == other.members and (
            self.parent is other.parent or self.parent == other.parent
        )

    def __hash__(self) -> int:
        return hash(self.members)

    def __lt__(self, other: "Subgroup") -> bool:
        return (self.order, self.members) < (other.order, other.members)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.label})"


def generate(degree: int, gens: Sequence[Permutation], cap: Optional[int] = None,
             name: str = "") -> FiniteGroup:
    """Enumerate the group generated by gens"""
    if not gens:
        raise ValueError("generate needs at least one generator")
    for gen in gens:
        if gen.degree != degree:
            raise DegreeMismatchError(f"generator of degree {gen.degree} in a degree {degree} group")

    cap = config.ELEMENT_CAP if cap is None else cap
    elements, _ = _dimino(identity(degree), gens, cap=cap)
    group = FiniteGroup(degree, gens, elements, name=name)
    logger.debug(f"Generated {group.label}")
    return group


def subgroup_closure(G: FiniteGroup, seed: Iterable[Permutation]) -> Subgroup:
    """Smallest subgroup of G containing seed; empty seed gives the trivial subgroup"""
    seed = list(seed)
    for element in seed:
        if element not in G:
            raise ElementNotInGroupError(f"{element!r} is not an element of {G.label}")
    elements, used = _dimino(G.identity, seed)
    return Subgroup(G, elements, generators=used)
