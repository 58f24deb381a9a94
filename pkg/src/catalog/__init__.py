"""
Named group constructors, the standard catalog and group-file I/O
"""

from .builders import (
    QUATERNION_LABELS,
    automorphism_from_generator_images,
    build,
    quaternion_cycle_ijk,
    quaternion_right_multiplication,
)
from .io import load_group, save_group
from .specs import Constructor, GroupSpec
from .standard import (
    build_named,
    catalog_listing,
    catalog_names,
    find_spec,
    quaternion_cycle_action,
    standard_catalog,
)
