"""
Verification result records and suite aggregation
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class Claim(Enum):
    """Checkable statements, in report order"""
    THEOREM_B = "theorem_b"
    COROLLARY_1 = "corollary_1"
    PROPOSITION_PRIDDY = "proposition_priddy"
    COROLLARY_PRIDDY = "corollary_priddy"
    COROLLARY_PCENTRAL = "corollary_pcentral"
    FROBENIUS_AGREEMENT = "frobenius_agreement"
    COMPLEMENT_AGREEMENT = "complement_agreement"
    ELEMENTARY_ABELIAN_CONTROL = "elementary_abelian_control"
    SUBCLAIMS = "subclaims"
    EXAMPLE_QUATERNION = "example_quaternion"


# Claims whose hypothesis can fail; the rest are biconditionals or unconditional
IMPLICATION_CLAIMS = (
    Claim.COROLLARY_1,
    Claim.PROPOSITION_PRIDDY,
    Claim.COROLLARY_PRIDDY,
    Claim.COROLLARY_PCENTRAL,
    Claim.ELEMENTARY_ABELIAN_CONTROL,
)

CLAIM_ORDER = {claim: position for position, claim in enumerate(Claim)}


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    SKIPPED = "skipped"


def implication_verdict(hypothesis: bool, conclusion: bool) -> Verdict:
    if not hypothesis:
        return Verdict.VACUOUS
    return Verdict.PASS if conclusion else Verdict.FAIL


def biconditional_verdict(left: bool, right: bool) -> Verdict:
    return Verdict.PASS if left == right else Verdict.FAIL


@dataclass
class VerificationResult:
    """One (claim, group, prime) cell"""
    claim_id: Claim
    group_name: str
    prime: int
    hypothesis_held: bool
    conclusion_held: bool
    verdict: Verdict
    witness: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def sort_key(self, group_position: int) -> tuple:
        return (group_position, self.prime, CLAIM_ORDER[self.claim_id])

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "claim": self.claim_id.value,
            "group": self.group_name,
            "prime": self.prime,
            "hypothesis": self.hypothesis_held,
            "conclusion": self.conclusion_held,
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            result["witness"] = self.witness
        if self.details:
            result["details"] = self.details
        return result


@dataclass
class SuiteReport:
    """All cells of a run, in canonical (group, prime, claim) order"""
    cells: List[VerificationResult] = field(default_factory=list)

    def totals(self) -> Dict[str, int]:
        counts = {verdict.value: 0 for verdict in Verdict}
        for cell in self.cells:
            counts[cell.verdict.value] += 1
        return counts

    def claim_totals(self) -> Dict[str, Dict[str, int]]:
        table: Dict[str, Dict[str, int]] = {}
        for cell in self.cells:
            row = table.setdefault(cell.claim_id.value, {verdict.value: 0 for verdict in Verdict})
            row[cell.verdict.value] += 1
        return table

    @property
    def failures(self) -> List[VerificationResult]:
        return [cell for cell in self.cells if cell.verdict is Verdict.FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def cells_for(self, claim: Claim) -> List[VerificationResult]:
        return [cell for cell in self.cells if cell.claim_id is claim]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cells": [cell.to_dict() for cell in self.cells],
            "totals": self.totals(),
            "claims": self.claim_totals(),
            "failures": [cell.to_dict() for cell in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
