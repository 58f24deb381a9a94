"""
p-nilpotency criteria and central series

The subclaim checks live in `src.nilpotency.subclaims`; they depend on the
fusion package and are imported from there directly.
"""

from .criteria import (
    HallPetrescuData,
    NilpotencyVerdict,
    frobenius_criterion,
    hall_petrescu_consequence,
    hall_petrescu_data,
    is_p_nilpotent,
    is_valid_complement,
    normal_complement_oracle,
)
from .lattice import p_subgroup_lattice
from .series import CentralSeries, omega_bar, upper_central_series
