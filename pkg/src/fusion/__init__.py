"""
Fusion control predicates over subgroup classes
"""

from .classes import ClassKind, FusionClass, enumerate_class, parse_fusion_class
from .control import FusionReport, controls_fusion, controls_p_fusion, revalidate_witness
