"""
Permutation arithmetic and exhaustively enumerated permutation groups
"""

from .cycles import format_cycles, parse_cycles
from .group import FiniteGroup, Subgroup, generate, subgroup_closure
from .numbers import is_prime, p_bar, p_part, prime_divisors
from .permutation import (
    Permutation,
    commutator,
    compose,
    conjugate,
    element_order,
    from_cycles,
    identity,
    inverse,
    power,
)
from .subgroups import (
    center,
    centralizer,
    conjugacy_classes,
    conjugate_subgroup,
    conjugating_element,
    intersection,
    is_normal,
    normalizer,
    set_product,
    subgroup_as_group,
    sylow_subgroup,
)
