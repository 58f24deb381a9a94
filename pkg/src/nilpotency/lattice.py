"""
Subgroup lattice of a p-group, walked bottom-up
"""

import logging
from typing import Dict, FrozenSet, List, Optional

from ..core.config import config
from ..core.exceptions import TooLargeError
from ..perm.group import FiniteGroup, Subgroup, subgroup_closure
from ..perm.permutation import Permutation, conjugate, power

logger = logging.getLogger(__name__)


def require_sylow_cap(P: Subgroup, cap: Optional[int] = None):
    cap = config.SYLOW_CAP if cap is None else cap
    if P.order > cap:
        raise TooLargeError(f"p-subgroup of order {P.order} exceeds the lattice cap of {cap}")


def p_subgroup_lattice(G: FiniteGroup, P: Subgroup, p: int,
                       cap: Optional[int] = None) -> List[Subgroup]:
    """All subgroups of the p-group P (trivial one included), canonical order.

    Every subgroup of a p-group sits at the top of a chain whose steps are
    normal of index p, so extending by one normalizing element x with x^p
    inside the current subgroup reaches all of them.
    """
    require_sylow_cap(P, cap)

    found: Dict[FrozenSet[Permutation], Subgroup] = {}
    trivial = G.trivial()
    found[trivial.member_set] = trivial
    frontier = [trivial]

    while frontier:
        next_frontier = []
        for S in frontier:
            for x in P.members:
                if x in S.member_set or power(x, p) not in S.member_set:
                    continue
                if not all(conjugate(s, x) in S.member_set for s in S.generators):
                    continue
                T = subgroup_closure(G, list(S.generators) + [x])
                if T.member_set not in found:
                    found[T.member_set] = T
                    next_frontier.append(T)
        frontier = next_frontier

    logger.debug(f"Lattice of a {p}-group of order {P.order} has {len(found)} subgroups")
    return sorted(found.values())
