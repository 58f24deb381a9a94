"""
Upper central series and the omega-type subgroup generated by small p-elements
"""

from dataclasses import dataclass
from typing import List, Optional

from ..perm.group import FiniteGroup, Subgroup, subgroup_closure
from ..perm.numbers import p_bar, require_prime
from ..perm.permutation import commutator
from ..perm.subgroups import require_parent


@dataclass
class CentralSeries:
    """Z_0 = 1 <= Z_1 <= ... of a group (or of a subgroup of it)"""
    terms: List[Subgroup]
    top: Subgroup

    @property
    def hypercenter(self) -> Subgroup:
        return self.terms[-1]

    @property
    def is_nilpotent(self) -> bool:
        return self.hypercenter == self.top

    @property
    def nilpotency_class(self) -> Optional[int]:
        if not self.is_nilpotent:
            return None
        return len(self.terms) - 1

    def least_index_containing(self, S: Subgroup) -> Optional[int]:
        """Least n with S <= Z_n, or None when S is not hypercentral"""
        for n, term in enumerate(self.terms):
            if S.is_subgroup_of(term):
                return n
        return None

    def term(self, n: int) -> Subgroup:
        """Z_n, constant once the series has stabilized"""
        return self.terms[min(n, len(self.terms) - 1)]

    def orders(self) -> List[int]:
        return [term.order for term in self.terms]


def upper_central_series(G: FiniteGroup, within: Optional[Subgroup] = None) -> CentralSeries:
    """Upper central series of `within` (default G) by direct commutator membership.

    Stops when a term repeats or the whole group is reached; terms are
    subgroups of G.
    """
    top = G.whole() if within is None else within
    require_parent(G, top)
    gens = top.generators

    terms = [G.trivial()]
    while terms[-1] != top:
        previous = terms[-1].member_set
        next_term = Subgroup(
            G,
            (x for x in top.members if all(commutator(x, g) in previous for g in gens)),
        )
        terms.append(next_term)
        if next_term == terms[-2]:
            break

    return CentralSeries(terms=terms, top=top)


def omega_bar(G: FiniteGroup, p: int) -> Subgroup:
    """<x in G : x^p = 1> for odd p, <x in G : x^4 = 1> for p = 2"""
    require_prime(p)
    exponent = p_bar(p)
    return subgroup_closure(G, (x for x in G.elements if exponent % G.element_order(x) == 0))
