"""
Group specifications: what to build, with its predicted order
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Callable, Optional, Sequence, Tuple

if TYPE_CHECKING:
    from ..perm.group import FiniteGroup
    from ..perm.permutation import Permutation

# (normal factor, acting factor) -> [(acting generator, images over the normal
# factor's canonical element order)]
ActionMap = Callable[["FiniteGroup", "FiniteGroup"], Sequence[Tuple["Permutation", Sequence[int]]]]


class Constructor(Enum):
    """Ways of building a catalog group"""
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    QUATERNION8 = "quaternion8"
    QUATERNION8_C3 = "quaternion8_c3"
    ELEMENTARY_ABELIAN = "elementary_abelian"
    DIRECT_PRODUCT = "direct_product"
    SEMIDIRECT = "semidirect"


@dataclass(frozen=True)
class GroupSpec:
    """A named recipe for a permutation group"""
    name: str
    constructor: Constructor
    params: Tuple[int, ...] = ()
    factors: Tuple["GroupSpec", ...] = ()
    action_map: Optional[ActionMap] = None

    @classmethod
    def cyclic(cls, n: int, name: str = "") -> "GroupSpec":
        return cls(name or f"C{n}", Constructor.CYCLIC, (n,))

    @classmethod
    def dihedral(cls, n: int, name: str = "") -> "GroupSpec":
        """Dihedral group of order 2n"""
        return cls(name or f"D{n}", Constructor.DIHEDRAL, (n,))

    @classmethod
    def symmetric(cls, n: int, name: str = "") -> "GroupSpec":
        return cls(name or f"S{n}", Constructor.SYMMETRIC, (n,))

    @classmethod
    def alternating(cls, n: int, name: str = "") -> "GroupSpec":
        return cls(name or f"A{n}", Constructor.ALTERNATING, (n,))

    @classmethod
    def quaternion8(cls, name: str = "Q8") -> "GroupSpec":
        return cls(name, Constructor.QUATERNION8)

    @classmethod
    def quaternion8_c3(cls, name: str = "Q8:C3") -> "GroupSpec":
        """Q8 extended by the order-3 automorphism cycling i, j, k (degree 8)"""
        return cls(name, Constructor.QUATERNION8_C3)

    @classmethod
    def elementary_abelian(cls, p: int, k: int, name: str = "") -> "GroupSpec":
        return cls(name or f"C{p}^{k}", Constructor.ELEMENTARY_ABELIAN, (p, k))

    @classmethod
    def direct_product(cls, left: "GroupSpec", right: "GroupSpec", name: str = "") -> "GroupSpec":
        return cls(name or f"{left.name}x{right.name}", Constructor.DIRECT_PRODUCT,
                   factors=(left, right))

    @classmethod
    def semidirect(cls, normal: "GroupSpec", acting: "GroupSpec", action_map: ActionMap,
                   name: str = "") -> "GroupSpec":
        return cls(name or f"{normal.name}:{acting.name}", Constructor.SEMIDIRECT,
                   factors=(normal, acting), action_map=action_map)

    def predicted_order(self) -> int:
        kind = self.constructor
        if kind is Constructor.CYCLIC:
            return self.params[0]
        if kind is Constructor.DIHEDRAL:
            return 2 * self.params[0]
        if kind is Constructor.SYMMETRIC:
            return math.factorial(self.params[0])
        if kind is Constructor.ALTERNATING:
            n = self.params[0]
            return math.factorial(n) // 2 if n > 1 else 1
        if kind is Constructor.QUATERNION8:
            return 8
        if kind is Constructor.QUATERNION8_C3:
            return 24
        if kind is Constructor.ELEMENTARY_ABELIAN:
            p, k = self.params
            return p ** k
        return math.prod(factor.predicted_order() for factor in self.factors)

    def describe(self) -> str:
        if self.factors:
            inner = ", ".join(factor.describe() for factor in self.factors)
            return f"{self.constructor.value}({inner})"
        if self.params:
            return f"{self.constructor.value}({', '.join(str(v) for v in self.params)})"
        return self.constructor.value
