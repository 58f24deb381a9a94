"""
Control of fusion: conditions (a) and (b') with explicit witnesses
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.config import config
from ..nilpotency.lattice import p_subgroup_lattice, require_sylow_cap
from ..perm.group import FiniteGroup, Subgroup
from ..perm.numbers import p_part, require_prime
from ..perm.permutation import Permutation
from ..perm.subgroups import (
    centralizer,
    conjugate_subgroup,
    conjugates_into,
    require_parent,
    set_product,
    subgroup_as_group,
    sylow_subgroup,
)
from .classes import FusionClass, enumerate_class

logger = logging.getLogger(__name__)


@dataclass
class FusionReport:
    """Outcome of a fusion-control check"""
    condition_a: bool
    condition_b: bool
    witness_a: Optional[Subgroup] = None
    witness_b: Optional[Tuple[Subgroup, Permutation]] = None
    checked_count: int = 0
    violations: List[Tuple[Subgroup, Permutation]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.condition_a and self.condition_b

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "condition_a": self.condition_a,
            "condition_b": self.condition_b,
            "checked_count": self.checked_count,
        }
        if self.witness_a is not None:
            result["witness_a"] = self.witness_a.to_images()
        if self.witness_b is not None:
            subgroup, g = self.witness_b
            result["witness_b"] = {"subgroup": subgroup.to_images(), "g": list(g.images)}
        return result


def _first_unconjugable(G: FiniteGroup, H: Subgroup,
                        subgroups: Sequence[Subgroup]) -> Optional[Subgroup]:
    """Condition (a): first subgroup with no conjugate inside H"""
    for A in subgroups:
        if A.is_subgroup_of(H):
            continue
        if not any(conjugates_into(A, g, H) for g in G.elements):
            return A
    return None


def _scan_condition_b(G: FiniteGroup, H: Subgroup, subgroups: Sequence[Subgroup],
                      full_witness: bool) -> Tuple[List[Tuple[Subgroup, Permutation]], int]:
    """Condition (b'): every g with A, A^g <= H lies in C_G(A).H"""
    violations: List[Tuple[Subgroup, Permutation]] = []
    checked = 0
    for A in subgroups:
        if not A.is_subgroup_of(H):
            continue
        allowed = set_product(centralizer(G, A), H)
        for g in G.elements:
            checked += 1
            if g in allowed or not conjugates_into(A, g, H):
                continue
            violations.append((A, g))
            if not full_witness:
                return violations, checked
    return violations, checked


def _report(witness_a: Optional[Subgroup], violations: List[Tuple[Subgroup, Permutation]],
            checked: int) -> FusionReport:
    return FusionReport(
        condition_a=witness_a is None,
        condition_b=not violations,
        witness_a=witness_a,
        witness_b=violations[0] if violations else None,
        checked_count=checked,
        violations=violations,
    )


def controls_fusion(G: FiniteGroup, H: Subgroup, fusion_class: FusionClass,
                    full_witness: Optional[bool] = None,
                    sylow_cap: Optional[int] = None) -> FusionReport:
    """Whether H controls fusion of the class's subgroups in G"""
    require_parent(G, H)
    full_witness = config.FULL_WITNESS if full_witness is None else full_witness

    subgroups = enumerate_class(G, fusion_class, sylow_cap=sylow_cap)
    witness_a = _first_unconjugable(G, H, subgroups)
    violations, checked = _scan_condition_b(G, H, subgroups, full_witness)

    logger.debug(
        f"{fusion_class} control by a subgroup of order {H.order} in {G.label}: "
        f"a={witness_a is None} b={not violations} after {checked} pairs"
    )
    return _report(witness_a, violations, checked)


def controls_p_fusion(G: FiniteGroup, H: Subgroup, p: int,
                      full_witness: Optional[bool] = None,
                      sylow_cap: Optional[int] = None) -> FusionReport:
    """H contains a Sylow p-subgroup and controls conjugation among its p-subgroups"""
    require_parent(G, H)
    require_prime(p)
    full_witness = config.FULL_WITNESS if full_witness is None else full_witness

    witness_a = None
    if H.order % p_part(G.order, p) != 0:
        witness_a = sylow_subgroup(G, p)

    # Sylow subgroup of H, computed inside H and re-read as a subgroup of G
    H_group = subgroup_as_group(H)
    P_H = Subgroup(G, sylow_subgroup(H_group, p).members)
    require_sylow_cap(P_H, sylow_cap)

    lattice = [S for S in p_subgroup_lattice(G, P_H, p, cap=sylow_cap) if not S.is_trivial]
    unique = {}
    for S in lattice:
        for h in H.members:
            T = conjugate_subgroup(S, h)
            unique.setdefault(T.member_set, T)
    subgroups = sorted(unique.values())

    violations, checked = _scan_condition_b(G, H, subgroups, full_witness)
    return _report(witness_a, violations, checked)


def revalidate_witness(G: FiniteGroup, H: Subgroup, report: FusionReport) -> bool:
    """Re-run the exhaustive test behind each witness in the report"""
    if report.witness_a is not None:
        A = report.witness_a
        if any(conjugates_into(A, g, H) for g in G.elements):
            return False
    for A, g in ([report.witness_b] if report.witness_b else []) + report.violations:
        if not A.is_subgroup_of(H) or not conjugate_subgroup(A, g).is_subgroup_of(H):
            return False
        if g in set_product(centralizer(G, A), H):
            return False
    return True
