"""
Structural subgroup operations: centralizers, normalizers, conjugacy, Sylow subgroups
"""

import logging
from typing import FrozenSet, List, Optional, Tuple

from ..core.exceptions import ParentMismatchError
from .group import FiniteGroup, Subgroup, generate, subgroup_closure
from .numbers import is_p_power, p_part, require_prime
from .permutation import Permutation, compose, conjugate, power

logger = logging.getLogger(__name__)


def require_parent(G: FiniteGroup, *subgroups: Subgroup):
    for S in subgroups:
        if S.parent is not G and S.parent != G:
            raise ParentMismatchError(f"{S!r} is not a subgroup of {G.label}")


def _commutes(a: Permutation, b: Permutation) -> bool:
    return compose(a, b) == compose(b, a)


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    """{g in G : s^g = s for all s in S}"""
    require_parent(G, S)
    gens = S.generators
    return Subgroup(G, (g for g in G.elements if all(_commutes(s, g) for s in gens)))


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    """{g in G : S^g = S}"""
    require_parent(G, S)
    gens = S.generators
    members = S.member_set
    return Subgroup(G, (g for g in G.elements if all(conjugate(s, g) in members for s in gens)))


def center(G: FiniteGroup) -> Subgroup:
    return centralizer(G, G.whole())


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    require_parent(G, S)
    return all(conjugate(s, g) in S.member_set for s in S.generators for g in G.generators)


def intersection(X: Subgroup, Y: Subgroup) -> Subgroup:
    require_parent(X.parent, Y)
    return Subgroup(X.parent, X.member_set & Y.member_set)


def conjugate_subgroup(A: Subgroup, g: Permutation) -> Subgroup:
    """A^g = {a^g : a in A}"""
    if g not in A.parent:
        raise ParentMismatchError(f"conjugating element {g!r} is not in {A.parent.label}")
    return Subgroup(
        A.parent,
        (conjugate(a, g) for a in A.members),
        generators=[conjugate(s, g) for s in A.generators],
    )


def conjugates_into(A: Subgroup, g: Permutation, H: Subgroup) -> bool:
    """Whether A^g <= H, tested on generators"""
    return all(conjugate(s, g) in H.member_set for s in A.generators)


def conjugating_element(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Optional[Permutation]:
    """First g in canonical order with A^g = B, or None"""
    require_parent(G, A, B)
    if A.order != B.order:
        return None
    for g in G.elements:
        if conjugates_into(A, g, B):
            return g
    return None


def set_product(X: Subgroup, Y: Subgroup) -> FrozenSet[Permutation]:
    """{x y : x in X, y in Y}; a subgroup only when XY = YX"""
    require_parent(X.parent, Y)
    return frozenset(compose(x, y) for x in X.members for y in Y.members)


def conjugacy_classes(G: FiniteGroup) -> List[Tuple[Permutation, ...]]:
    """Conjugacy classes ordered by their least member"""
    seen = set()
    classes = []
    for element in G.elements:
        if element in seen:
            continue
        orbit = frozenset(conjugate(element, g) for g in G.elements)
        seen.update(orbit)
        classes.append(tuple(sorted(orbit)))
    return classes


def subgroup_as_group(S: Subgroup) -> FiniteGroup:
    gens = S.generators or (S.parent.identity,)
    return generate(S.parent.degree, gens, name=f"subgroup of order {S.order}")


def is_p_element(G: FiniteGroup, element: Permutation, p: int) -> bool:
    return is_p_power(G.element_order(element), p)


def is_p_prime_element(G: FiniteGroup, element: Permutation, p: int) -> bool:
    return G.element_order(element) % p != 0


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """Sylow p-subgroup grown inside successive normalizers"""
    require_prime(p)
    target = p_part(G.order, p)
    if target == 1:
        return G.trivial()

    seed = next(e for e in G.elements if G.element_order(e) == p)
    P = subgroup_closure(G, [seed])
    while P.order < target:
        N = normalizer(G, P)
        extension = next(
            (
                x for x in N.members
                if x not in P and is_p_element(G, x, p) and power(x, p) in P
            ),
            None,
        )
        if extension is None:
            raise RuntimeError(f"no p-element extends a {p}-subgroup of order {P.order}")
        P = subgroup_closure(G, list(P.generators) + [extension])
        logger.debug(f"Sylow {p}-subgroup of {G.label} grown to order {P.order}")

    return P
