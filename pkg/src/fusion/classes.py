"""
Subgroup classes quantified over by fusion control
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..core.exceptions import ParseError
from ..nilpotency.lattice import p_subgroup_lattice
from ..perm.group import FiniteGroup, Subgroup, subgroup_closure
from ..perm.numbers import require_prime
from ..perm.permutation import Permutation, compose
from ..perm.subgroups import conjugate_subgroup, sylow_subgroup


class ClassKind(Enum):
    """Which subgroups a fusion predicate quantifies over"""
    CYCLIC_P = "cyclicp"
    CYCLIC_4 = "cyclic4"
    CP = "cp"
    ELEM_ABELIAN = "elemab"
    P_SUBGROUPS = "psub"


@dataclass(frozen=True)
class FusionClass:
    """A class tag together with its prime"""
    kind: ClassKind
    p: int

    @classmethod
    def cyclic_p(cls, p: int) -> "FusionClass":
        return cls(ClassKind.CYCLIC_P, require_prime(p))

    @classmethod
    def cyclic_4(cls) -> "FusionClass":
        return cls(ClassKind.CYCLIC_4, 2)

    @classmethod
    def cp(cls, p: int) -> "FusionClass":
        return cls(ClassKind.CP, require_prime(p))

    @classmethod
    def elementary_abelian(cls, p: int) -> "FusionClass":
        return cls(ClassKind.ELEM_ABELIAN, require_prime(p))

    @classmethod
    def p_subgroups(cls, p: int) -> "FusionClass":
        return cls(ClassKind.P_SUBGROUPS, require_prime(p))

    def components(self) -> Tuple["FusionClass", ...]:
        """C_p splits into cyclic order p, plus cyclic order 4 when p = 2"""
        if self.kind is ClassKind.CP:
            if self.p == 2:
                return (FusionClass.cyclic_p(2), FusionClass.cyclic_4())
            return (FusionClass.cyclic_p(self.p),)
        return (self,)

    def __str__(self) -> str:
        if self.kind is ClassKind.CYCLIC_4:
            return "Cyclic4"
        names = {
            ClassKind.CYCLIC_P: "CyclicP",
            ClassKind.CP: "Cp",
            ClassKind.ELEM_ABELIAN: "ElemAbelian",
            ClassKind.P_SUBGROUPS: "PSubgroups",
        }
        return f"{names[self.kind]}({self.p})"


def parse_fusion_class(text: str, p: int) -> FusionClass:
    try:
        kind = ClassKind(text.strip().lower())
    except ValueError:
        choices = "|".join(kind.value for kind in ClassKind)
        raise ParseError(f"unknown class {text!r} (expected {choices})", field="class")
    if kind is ClassKind.CYCLIC_4:
        return FusionClass.cyclic_4()
    return FusionClass(kind, require_prime(p))


def _dedup(subgroups: Iterable[Subgroup]) -> List[Subgroup]:
    unique: Dict[FrozenSet[Permutation], Subgroup] = {}
    for S in subgroups:
        unique.setdefault(S.member_set, S)
    return sorted(unique.values())


def _cyclic_of_order(G: FiniteGroup, n: int) -> List[Subgroup]:
    return _dedup(
        subgroup_closure(G, [x]) for x in G.elements if G.element_order(x) == n
    )


def _elementary_abelian(G: FiniteGroup, p: int) -> List[Subgroup]:
    """Nontrivial elementary abelian p-subgroups, grown from commuting order-p elements"""
    involved = [x for x in G.elements if G.element_order(x) == p]
    found: Dict[FrozenSet[Permutation], Subgroup] = {}
    frontier = []
    for x in involved:
        E = subgroup_closure(G, [x])
        if E.member_set not in found:
            found[E.member_set] = E
            frontier.append(E)

    while frontier:
        next_frontier = []
        for E in frontier:
            for y in involved:
                if y in E.member_set:
                    continue
                if any(compose(y, s) != compose(s, y) for s in E.generators):
                    continue
                F = subgroup_closure(G, list(E.generators) + [y])
                if F.member_set not in found:
                    found[F.member_set] = F
                    next_frontier.append(F)
        frontier = next_frontier

    return sorted(found.values())


def _all_p_subgroups(G: FiniteGroup, p: int, sylow_cap: Optional[int]) -> List[Subgroup]:
    P = sylow_subgroup(G, p)
    lattice = [S for S in p_subgroup_lattice(G, P, p, cap=sylow_cap) if not S.is_trivial]
    return _dedup(conjugate_subgroup(S, g) for S in lattice for g in G.elements)


def enumerate_class(G: FiniteGroup, fusion_class: FusionClass,
                    sylow_cap: Optional[int] = None) -> List[Subgroup]:
    """All subgroups of G in the class, deduplicated, canonical order"""
    kind = fusion_class.kind
    if kind is ClassKind.CYCLIC_P:
        return _cyclic_of_order(G, fusion_class.p)
    if kind is ClassKind.CYCLIC_4:
        return _cyclic_of_order(G, 4)
    if kind is ClassKind.CP:
        return _dedup(
            S for part in fusion_class.components() for S in enumerate_class(G, part)
        )
    if kind is ClassKind.ELEM_ABELIAN:
        return _elementary_abelian(G, fusion_class.p)
    return _all_p_subgroups(G, fusion_class.p, sylow_cap)
