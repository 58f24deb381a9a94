"""
Commutator identities behind the C_p fusion criterion, checked exhaustively
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict

from ..core.exceptions import HypothesisNotMetError
from ..fusion.classes import FusionClass
from ..fusion.control import controls_fusion
from ..perm.group import FiniteGroup, Subgroup, subgroup_closure
from ..perm.numbers import p_bar, require_prime
from ..perm.permutation import Permutation, commutator, compose, conjugate
from ..perm.subgroups import (
    centralizer,
    is_p_prime_element,
    normalizer,
    set_product,
    sylow_subgroup,
)
from .lattice import p_subgroup_lattice
from .series import omega_bar, upper_central_series

logger = logging.getLogger(__name__)


def commutator_subgroup_with(G: FiniteGroup, K: Subgroup, g: Permutation) -> Subgroup:
    """[K, g] = <[k, g] : k in K>"""
    return subgroup_closure(G, (commutator(k, g) for k in K.members))


def generated_commutator_conjugates(G: FiniteGroup, K: Subgroup, g: Permutation, p: int) -> Subgroup:
    """<[a, g]^b : a, b in K, a^p_bar = 1>"""
    exponent = p_bar(p)
    small = [a for a in K.members if exponent % G.element_order(a) == 0]
    return subgroup_closure(
        G, {conjugate(commutator(a, g), b) for a in small for b in K.members}
    )


def _omega_of(G: FiniteGroup, B: Subgroup, p: int) -> Subgroup:
    exponent = p_bar(p)
    return subgroup_closure(G, (a for a in B.members if exponent % G.element_order(a) == 0))


def _commutes_with_all(g: Permutation, elements) -> bool:
    return all(compose(a, g) == compose(g, a) for a in elements)


@dataclass
class SubclaimReport:
    """Counts from the exhaustive subclaim sweep over (B, g) pairs"""
    p: int
    controls_cp_fusion: bool
    pairs_checked: int = 0
    identity_failures: int = 0
    containment_failures: int = 0
    double_commutator_failures: int = 0
    equality_observed: int = 0
    equality_not_observed: int = 0

    @property
    def holds(self) -> bool:
        if self.identity_failures:
            return False
        if not self.controls_cp_fusion:
            return True
        return self.containment_failures == 0 and self.double_commutator_failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "controls_cp_fusion": self.controls_cp_fusion,
            "pairs_checked": self.pairs_checked,
            "identity_failures": self.identity_failures,
            "containment_failures": self.containment_failures,
            "double_commutator_failures": self.double_commutator_failures,
            "equality_observed": self.equality_observed,
            "equality_not_observed": self.equality_not_observed,
        }


def check_subclaims(G: FiniteGroup, p: int, sylow_cap=None) -> SubclaimReport:
    """Sweep every B <= P and p'-element g of N_G(B).

    Always checks [K_B, g] = <[a, g]^b>. When P controls C_p fusion it also
    checks [K_B, g] <= Z_(l-1)(P) and [a, g, g] = 1. Equality with
    Z_(l-1)(P) is only counted.
    """
    require_prime(p)
    P = sylow_subgroup(G, p)
    controls = controls_fusion(G, P, FusionClass.cp(p), full_witness=False, sylow_cap=sylow_cap).holds
    series = upper_central_series(G, within=P)
    report = SubclaimReport(p=p, controls_cp_fusion=controls)

    for B in p_subgroup_lattice(G, P, p, cap=sylow_cap):
        if B.is_trivial:
            continue
        level = series.least_index_containing(B)
        lower = series.term(level - 1)
        K = _omega_of(G, B, p)
        for g in normalizer(G, B).members:
            if not is_p_prime_element(G, g, p):
                continue
            report.pairs_checked += 1
            bracket = commutator_subgroup_with(G, K, g)
            if bracket != generated_commutator_conjugates(G, K, g, p):
                report.identity_failures += 1
            if bracket == lower:
                report.equality_observed += 1
            else:
                report.equality_not_observed += 1
            if not controls:
                continue
            if not bracket.is_subgroup_of(lower):
                report.containment_failures += 1
            if any(commutator(commutator(a, g), g) != G.identity for a in K.members):
                report.double_commutator_failures += 1

    logger.debug(f"Subclaim sweep for p={p} on {G.label}: {report.to_dict()}")
    return report


def centralizes_omega_implies_centralizes(G: FiniteGroup, p: int, sylow_cap=None) -> bool:
    """A p'-element of N_G(B) centralizing every a in B with a^p_bar = 1 centralizes B"""
    require_prime(p)
    P = sylow_subgroup(G, p)
    for B in p_subgroup_lattice(G, P, p, cap=sylow_cap):
        K = _omega_of(G, B, p)
        for g in normalizer(G, B).members:
            if not is_p_prime_element(G, g, p):
                continue
            if _commutes_with_all(g, K.generators) and not _commutes_with_all(g, B.generators):
                return False
    return True


def sylow_product_with_centralizer(G: FiniteGroup, p: int) -> bool:
    """G = P.C_G(K) for K = omega_bar(G, p), under the hypercentral hypothesis"""
    require_prime(p)
    K = omega_bar(G, p)
    if upper_central_series(G).least_index_containing(K) is None:
        raise HypothesisNotMetError(f"omega subgroup of order {K.order} is not hypercentral")
    P = sylow_subgroup(G, p)
    return set_product(P, centralizer(G, K)) == frozenset(G.elements)
