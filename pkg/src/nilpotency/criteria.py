"""
p-nilpotency: generated p'-subgroup test, brute-force complement oracle,
Frobenius criterion and the Hall-Petrescu consequence
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.config import config
from ..core.exceptions import HypothesisNotMetError, TooLargeError
from ..perm.group import FiniteGroup, Subgroup, subgroup_closure
from ..perm.numbers import is_p_power, p_part, require_prime
from ..perm.permutation import Permutation, compose, power
from ..perm.subgroups import (
    conjugacy_classes,
    intersection,
    is_normal,
    is_p_prime_element,
    normalizer,
    sylow_subgroup,
)
from .lattice import p_subgroup_lattice
from .series import omega_bar, upper_central_series

logger = logging.getLogger(__name__)


@dataclass
class NilpotencyVerdict:
    """Whether G has a normal p-complement, with the evidence"""
    p: int
    p_nilpotent: bool
    complement: Optional[Subgroup] = None
    frobenius_witness: Optional[Tuple[Subgroup, Permutation]] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"p": self.p, "p_nilpotent": self.p_nilpotent}
        if self.complement is not None:
            result["complement_order"] = self.complement.order
        if self.frobenius_witness is not None:
            B, g = self.frobenius_witness
            result["frobenius_witness"] = {"subgroup": B.to_images(), "g": list(g.images)}
        return result


def p_prime_elements(G: FiniteGroup, p: int) -> List[Permutation]:
    return [x for x in G.elements if is_p_prime_element(G, x, p)]


def is_p_nilpotent(G: FiniteGroup, p: int) -> NilpotencyVerdict:
    """G is p-nilpotent iff <p'-elements> is a p'-group, i.e. has order |G|_p'"""
    require_prime(p)
    K = subgroup_closure(G, p_prime_elements(G, p))
    complement_order = G.order // p_part(G.order, p)
    if K.order == complement_order:
        return NilpotencyVerdict(p=p, p_nilpotent=True, complement=K)
    return NilpotencyVerdict(p=p, p_nilpotent=False)


def is_valid_complement(G: FiniteGroup, N: Subgroup, p: int) -> bool:
    """Normal, of order |G|_p', meeting a Sylow p-subgroup trivially"""
    if N.order != G.order // p_part(G.order, p) or not is_normal(G, N):
        return False
    return intersection(N, sylow_subgroup(G, p)).is_trivial


def normal_complement_oracle(G: FiniteGroup, p: int,
                             max_order: Optional[int] = None) -> Optional[Subgroup]:
    """Search unions of conjugacy classes for a normal p-complement.

    Only classes of p'-elements can take part, since a complement has order
    prime to p.
    """
    require_prime(p)
    max_order = config.ORACLE_MAX_ORDER if max_order is None else max_order
    if G.order > max_order:
        raise TooLargeError(f"oracle is limited to order {max_order}, got {G.order}")

    target = G.order // p_part(G.order, p)
    classes = conjugacy_classes(G)
    unit_class, rest = classes[0], classes[1:]
    candidates = [c for c in rest if is_p_prime_element(G, c[0], p)]
    P = sylow_subgroup(G, p)

    def search(start: int, chosen: List[Sequence[Permutation]], size: int) -> Optional[Subgroup]:
        if size == target:
            members = [x for c in chosen for x in c]
            closure = subgroup_closure(G, members)
            if closure.order == target and intersection(closure, P).is_trivial:
                return closure
            return None
        for index in range(start, len(candidates)):
            c = candidates[index]
            if size + len(c) > target:
                continue
            found = search(index + 1, chosen + [c], size + len(c))
            if found is not None:
                return found
        return None

    return search(0, [unit_class], len(unit_class))


def frobenius_criterion(G: FiniteGroup, p: int, sylow_cap: Optional[int] = None) -> NilpotencyVerdict:
    """Every p'-element normalizing a subgroup B of P centralizes B"""
    require_prime(p)
    P = sylow_subgroup(G, p)
    for B in p_subgroup_lattice(G, P, p, cap=sylow_cap):
        if B.is_trivial:
            continue
        for g in normalizer(G, B).members:
            if not is_p_prime_element(G, g, p):
                continue
            if any(compose(b, g) != compose(g, b) for b in B.generators):
                return NilpotencyVerdict(p=p, p_nilpotent=False, frobenius_witness=(B, g))
    return NilpotencyVerdict(p=p, p_nilpotent=True)


@dataclass
class HallPetrescuData:
    """K = omega_bar(G, p) with the exponents used by the power-centralizing step"""
    K: Subgroup
    e: int
    n: int
    powers: Subgroup

    @property
    def power_exponent(self) -> int:
        return self.e + self.n


def hall_petrescu_data(G: FiniteGroup, p: int) -> HallPetrescuData:
    """Exponent p^e of K, least n with K <= Z_n(G), and <g^(p^(e+n))>"""
    K = omega_bar(G, p)
    series = upper_central_series(G)
    n = series.least_index_containing(K)
    if n is None:
        raise HypothesisNotMetError(
            f"omega subgroup of order {K.order} is not hypercentral in {G.label}"
        )
    if not is_p_power(K.order, p):
        raise HypothesisNotMetError(f"omega subgroup of order {K.order} is not a {p}-group")

    exponent = max(G.element_order(x) for x in K.members)
    e = 0
    while p ** e < exponent:
        e += 1

    step = p ** (e + n)
    powers = subgroup_closure(G, {power(g, step) for g in G.elements})
    return HallPetrescuData(K=K, e=e, n=n, powers=powers)


def hall_petrescu_consequence(G: FiniteGroup, p: int) -> bool:
    """<g^(p^(e+n)) : g in G> centralizes K when K = omega_bar(G, p) is hypercentral"""
    require_prime(p)
    data = hall_petrescu_data(G, p)
    return all(
        compose(k, x) == compose(x, k)
        for k in data.K.generators
        for x in data.powers.generators
    )
