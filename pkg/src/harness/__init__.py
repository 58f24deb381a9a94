"""
Claim verification suites and the command-line interface
"""

from .claims import (
    CellContext,
    verify_complement_agreement,
    verify_corollary_1,
    verify_corollary_pcentral,
    verify_corollary_priddy,
    verify_elementary_abelian_control,
    verify_example_quaternion,
    verify_frobenius_agreement,
    verify_proposition_priddy,
    verify_subclaims,
    verify_theorem_b,
)
from .results import Claim, SuiteReport, VerificationResult, Verdict
from .suite import analyze_group, run_suite
