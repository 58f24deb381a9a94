"""
The standard catalog of named small groups
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from ..core.config import config
from ..core.exceptions import ConfigurationError
from ..perm.group import FiniteGroup
from ..perm.permutation import Permutation, inverse, power
from .builders import automorphism_from_generator_images, build, quaternion_right_multiplication
from .specs import GroupSpec

logger = logging.getLogger(__name__)


def quaternion_cycle_action(N: FiniteGroup, H: FiniteGroup) -> List[Tuple[Permutation, List[int]]]:
    """H's generator acts on Q8 by i -> j -> k (N generated by right multiplication by i, j)"""
    images = [quaternion_right_multiplication("j"), quaternion_right_multiplication("k")]
    return [(H.generators[0], automorphism_from_generator_images(N, images))]


def power_action(k: int):
    """H's first generator raises the cyclic normal factor's generator to the k-th power"""
    def action(N: FiniteGroup, H: FiniteGroup) -> List[Tuple[Permutation, List[int]]]:
        images = [power(N.generators[0], k)]
        return [(H.generators[0], automorphism_from_generator_images(N, images))]
    return action


def inversion_action(N: FiniteGroup, H: FiniteGroup) -> List[Tuple[Permutation, List[int]]]:
    images = [inverse(gen) for gen in N.generators]
    return [(H.generators[0], automorphism_from_generator_images(N, images))]


def _catalog_specs() -> List[GroupSpec]:
    specs = [GroupSpec.cyclic(n) for n in range(1, 25)]
    specs += [GroupSpec.dihedral(n) for n in range(3, 13)]
    specs += [
        GroupSpec.symmetric(3),
        GroupSpec.symmetric(4),
        GroupSpec.symmetric(5),
        GroupSpec.alternating(4),
        GroupSpec.alternating(5),
        GroupSpec.quaternion8(),
        GroupSpec.quaternion8_c3(),
        GroupSpec.semidirect(GroupSpec.quaternion8(), GroupSpec.cyclic(3), quaternion_cycle_action,
                             name="Q8:C3/regular"),
        GroupSpec.elementary_abelian(2, 2),
        GroupSpec.elementary_abelian(2, 3),
        GroupSpec.elementary_abelian(2, 4),
        GroupSpec.elementary_abelian(3, 2),
        GroupSpec.elementary_abelian(3, 3),
        GroupSpec.elementary_abelian(5, 2),
        GroupSpec.direct_product(GroupSpec.cyclic(4), GroupSpec.symmetric(3)),
        GroupSpec.direct_product(GroupSpec.dihedral(4), GroupSpec.cyclic(3)),
        GroupSpec.direct_product(GroupSpec.alternating(4), GroupSpec.cyclic(2)),
        GroupSpec.direct_product(GroupSpec.symmetric(3), GroupSpec.symmetric(3)),
        GroupSpec.direct_product(GroupSpec.cyclic(2), GroupSpec.quaternion8()),
        GroupSpec.semidirect(GroupSpec.cyclic(3), GroupSpec.cyclic(4), inversion_action),
        GroupSpec.semidirect(GroupSpec.cyclic(7), GroupSpec.cyclic(3), power_action(2)),
        GroupSpec.semidirect(GroupSpec.cyclic(5), GroupSpec.cyclic(4), power_action(2)),
    ]
    return specs


CATALOG_SPECS: Tuple[GroupSpec, ...] = tuple(_catalog_specs())


def catalog_specs(max_order: Optional[int] = None) -> List[GroupSpec]:
    limit = config.CATALOG_MAX_ORDER if max_order is None else max_order
    if limit > config.CATALOG_MAX_ORDER:
        raise ConfigurationError(
            f"max_order {limit} exceeds the catalog limit of {config.CATALOG_MAX_ORDER}"
        )
    return [spec for spec in CATALOG_SPECS if spec.predicted_order() <= limit]


def standard_catalog(max_order: Optional[int] = None) -> List[Tuple[str, FiniteGroup]]:
    """Deterministic list of (name, group) with order <= max_order"""
    return [(spec.name, build(spec)) for spec in catalog_specs(max_order)]


def catalog_names(max_order: Optional[int] = None) -> List[str]:
    return [spec.name for spec in catalog_specs(max_order)]


def find_spec(name: str) -> Optional[GroupSpec]:
    return next((spec for spec in CATALOG_SPECS if spec.name == name), None)


def build_named(name: str) -> FiniteGroup:
    spec = find_spec(name)
    if spec is None:
        raise KeyError(f"no catalog group named {name!r}")
    return build(spec)


def catalog_listing(max_order: Optional[int] = None) -> List[Dict[str, Any]]:
    """JSON-ready [{name, order, degree}]"""
    return [{"name": name, "order": G.order, "degree": G.degree} for name, G in standard_catalog(max_order)]
