"""
Claim verifiers: each binds one statement about p-nilpotency and fusion to
exhaustive checks on a concrete group
"""

import logging
from functools import cached_property
from typing import Callable, Dict, Optional

from ..catalog.builders import build, quaternion_right_multiplication
from ..catalog.specs import GroupSpec
from ..fusion.classes import FusionClass, enumerate_class
from ..fusion.control import FusionReport, controls_fusion, revalidate_witness
from ..nilpotency.criteria import (
    NilpotencyVerdict,
    frobenius_criterion,
    hall_petrescu_consequence,
    hall_petrescu_data,
    is_p_nilpotent,
    is_valid_complement,
    normal_complement_oracle,
)
from ..nilpotency.series import omega_bar, upper_central_series
from ..nilpotency.subclaims import (
    centralizes_omega_implies_centralizes,
    check_subclaims,
    sylow_product_with_centralizer,
)
from ..perm.group import FiniteGroup, Subgroup, subgroup_closure
from ..perm.numbers import p_bar
from ..perm.subgroups import centralizer, intersection, normalizer, set_product, sylow_subgroup
from .results import (
    Claim,
    VerificationResult,
    Verdict,
    biconditional_verdict,
    implication_verdict,
)

logger = logging.getLogger(__name__)


class CellContext:
    """Shared, lazily computed facts about one (G, p) pair"""

    def __init__(self, G: FiniteGroup, p: int, group_name: Optional[str] = None):
        self.G = G
        self.p = p
        self.group_name = group_name or G.label

    @cached_property
    def sylow(self) -> Subgroup:
        return sylow_subgroup(self.G, self.p)

    @cached_property
    def sylow_normalizer(self) -> Subgroup:
        return normalizer(self.G, self.sylow)

    @cached_property
    def sylow_centralizer(self) -> Subgroup:
        return centralizer(self.G, self.sylow)

    @cached_property
    def normalizer_splits(self) -> bool:
        """N_G(P) = C_G(P).P as sets"""
        return set_product(self.sylow_centralizer, self.sylow) == self.sylow_normalizer.member_set

    @cached_property
    def nilpotency(self) -> NilpotencyVerdict:
        return is_p_nilpotent(self.G, self.p)

    @cached_property
    def sylow_fusion(self) -> FusionReport:
        return controls_fusion(self.G, self.sylow, FusionClass.cp(self.p))

    @cached_property
    def normalizer_fusion(self) -> FusionReport:
        return controls_fusion(self.G, self.sylow_normalizer, FusionClass.cp(self.p))

    @cached_property
    def small_elements_central(self) -> bool:
        """Every x in P with x^p_bar = 1 lies in Z(P)"""
        center_of_p = intersection(self.sylow_centralizer, self.sylow)
        exponent = p_bar(self.p)
        return all(
            x in center_of_p
            for x in self.sylow.members
            if exponent % self.G.element_order(x) == 0
        )

    def result(self, claim: Claim, hypothesis: bool, conclusion: bool, verdict: Verdict,
               witness=None, details=None) -> VerificationResult:
        return VerificationResult(
            claim_id=claim,
            group_name=self.group_name,
            prime=self.p,
            hypothesis_held=hypothesis,
            conclusion_held=conclusion,
            verdict=verdict,
            witness=witness,
            details=details or {},
        )


def _context(G: FiniteGroup, p: int, context: Optional[CellContext],
             group_name: Optional[str]) -> CellContext:
    return context if context is not None else CellContext(G, p, group_name)


def verify_theorem_b(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                     group_name: Optional[str] = None) -> VerificationResult:
    """G is p-nilpotent iff a Sylow p-subgroup controls fusion of C_p-groups"""
    ctx = _context(G, p, context, group_name)
    nilpotent = ctx.nilpotency.p_nilpotent
    controls = ctx.sylow_fusion.holds
    verdict = biconditional_verdict(nilpotent, controls)
    witness = None
    if verdict is Verdict.FAIL:
        witness = {"nilpotency": ctx.nilpotency.to_dict(), "fusion": ctx.sylow_fusion.to_dict()}
    return ctx.result(Claim.THEOREM_B, nilpotent, controls, verdict, witness=witness)


def verify_corollary_1(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                       group_name: Optional[str] = None) -> VerificationResult:
    """N_G(P) controls C_p fusion and N_G(P) = C_G(P).P imply p-nilpotence"""
    ctx = _context(G, p, context, group_name)
    hypothesis = ctx.normalizer_splits and ctx.normalizer_fusion.holds
    conclusion = ctx.nilpotency.p_nilpotent
    verdict = implication_verdict(hypothesis, conclusion)
    witness = ctx.nilpotency.to_dict() if verdict is Verdict.FAIL else None
    details = {"normalizer_splits": ctx.normalizer_splits}
    return ctx.result(Claim.COROLLARY_1, hypothesis, conclusion, verdict, witness, details)


def verify_proposition_priddy(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                              group_name: Optional[str] = None) -> VerificationResult:
    """Central small elements of P make N_G(P) control C_p fusion"""
    ctx = _context(G, p, context, group_name)
    hypothesis = ctx.small_elements_central
    conclusion = ctx.normalizer_fusion.holds
    verdict = implication_verdict(hypothesis, conclusion)
    witness = ctx.normalizer_fusion.to_dict() if verdict is Verdict.FAIL else None
    return ctx.result(Claim.PROPOSITION_PRIDDY, hypothesis, conclusion, verdict, witness)


def verify_corollary_priddy(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                            group_name: Optional[str] = None) -> VerificationResult:
    """Central small elements of P and N_G(P) = P.C_G(P) imply p-nilpotence"""
    ctx = _context(G, p, context, group_name)
    hypothesis = ctx.small_elements_central and ctx.normalizer_splits
    conclusion = ctx.nilpotency.p_nilpotent
    verdict = implication_verdict(hypothesis, conclusion)
    witness = ctx.nilpotency.to_dict() if verdict is Verdict.FAIL else None
    return ctx.result(Claim.COROLLARY_PRIDDY, hypothesis, conclusion, verdict, witness)


def verify_corollary_pcentral(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                              group_name: Optional[str] = None) -> VerificationResult:
    """omega_bar(G, p) hypercentral implies p-nilpotence; also checks the power-centralizing step"""
    ctx = _context(G, p, context, group_name)
    K = omega_bar(G, p)
    level = upper_central_series(G).least_index_containing(K)
    hypothesis = level is not None
    conclusion = ctx.nilpotency.p_nilpotent
    details: Dict[str, object] = {"omega_order": K.order}

    verdict = implication_verdict(hypothesis, conclusion)
    if hypothesis:
        data = hall_petrescu_data(G, p)
        powers_centralize = hall_petrescu_consequence(G, p)
        sylow_product = sylow_product_with_centralizer(G, p)
        details.update({
            "e": data.e,
            "n": data.n,
            "hall_petrescu": powers_centralize,
            "sylow_times_centralizer": sylow_product,
        })
        if not (powers_centralize and sylow_product):
            verdict = Verdict.FAIL

    witness = ctx.nilpotency.to_dict() if verdict is Verdict.FAIL else None
    return ctx.result(Claim.COROLLARY_PCENTRAL, hypothesis, conclusion, verdict, witness, details)


def verify_frobenius_agreement(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                               group_name: Optional[str] = None) -> VerificationResult:
    """Frobenius criterion verdict equals the generated p'-subgroup verdict"""
    ctx = _context(G, p, context, group_name)
    frobenius = frobenius_criterion(G, p)
    nilpotent = ctx.nilpotency.p_nilpotent
    verdict = biconditional_verdict(nilpotent, frobenius.p_nilpotent)
    witness = frobenius.to_dict() if verdict is Verdict.FAIL else None
    return ctx.result(Claim.FROBENIUS_AGREEMENT, nilpotent, frobenius.p_nilpotent, verdict, witness)


def verify_complement_agreement(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                                group_name: Optional[str] = None) -> VerificationResult:
    """Brute-force complement search agrees, and a found complement re-validates"""
    ctx = _context(G, p, context, group_name)
    found = normal_complement_oracle(G, p)
    nilpotent = ctx.nilpotency.p_nilpotent
    verdict = biconditional_verdict(nilpotent, found is not None)
    complement_valid = True
    if ctx.nilpotency.complement is not None:
        complement_valid = is_valid_complement(G, ctx.nilpotency.complement, p)
        if not complement_valid:
            verdict = Verdict.FAIL
    details = {"complement_valid": complement_valid}
    if found is not None:
        details["oracle_order"] = found.order
    witness = ctx.nilpotency.to_dict() if verdict is Verdict.FAIL else None
    return ctx.result(Claim.COMPLEMENT_AGREEMENT, nilpotent, found is not None, verdict, witness, details)


def verify_elementary_abelian_control(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                                      group_name: Optional[str] = None) -> VerificationResult:
    """Control of C_p fusion by P implies control of elementary abelian fusion"""
    ctx = _context(G, p, context, group_name)
    hypothesis = ctx.sylow_fusion.holds
    report = controls_fusion(G, ctx.sylow, FusionClass.elementary_abelian(p))
    verdict = implication_verdict(hypothesis, report.holds)
    witness = report.to_dict() if verdict is Verdict.FAIL else None
    return ctx.result(Claim.ELEMENTARY_ABELIAN_CONTROL, hypothesis, report.holds, verdict, witness)


def verify_subclaims(G: FiniteGroup, p: int, context: Optional[CellContext] = None,
                     group_name: Optional[str] = None) -> VerificationResult:
    """Commutator identities used by the fusion criterion's proof"""
    ctx = _context(G, p, context, group_name)
    report = check_subclaims(G, p)
    lemma = centralizes_omega_implies_centralizes(G, p)
    conclusion = report.holds and lemma
    details = dict(report.to_dict(), omega_centralizing_lemma=lemma)
    verdict = Verdict.PASS if conclusion else Verdict.FAIL
    return ctx.result(Claim.SUBCLAIMS, True, conclusion, verdict, details=details)


def quaternion_example_group() -> FiniteGroup:
    return build(GroupSpec.quaternion8_c3())


def quaternion_subgroup(G: FiniteGroup) -> Subgroup:
    return subgroup_closure(
        G, [quaternion_right_multiplication("i"), quaternion_right_multiplication("j")]
    )


def verify_example_quaternion() -> VerificationResult:
    """Q8 controls fusion of order-2 subgroups of Q8:C3, which is still not 2-nilpotent"""
    G = quaternion_example_group()
    Q = quaternion_subgroup(G)

    order_two = controls_fusion(G, Q, FusionClass.cyclic_p(2))
    nilpotency = is_p_nilpotent(G, 2)
    cp_report = controls_fusion(G, Q, FusionClass.cp(2))
    witness_subgroup = cp_report.witness_b[0] if cp_report.witness_b else None
    involution_subgroups = enumerate_class(G, FusionClass.cyclic_p(2))

    checks = {
        "order_24": G.order == 24,
        "unique_involution_subgroup": len(involution_subgroups) == 1,
        "controls_order_2_fusion": order_two.holds,
        "not_2_nilpotent": not nilpotency.p_nilpotent,
        "cp_condition_b_fails": not cp_report.condition_b,
        "witness_is_cyclic_of_order_4": (
            witness_subgroup is not None
            and witness_subgroup.order == 4
            and any(G.element_order(x) == 4 for x in witness_subgroup.members)
        ),
        "witness_revalidates": revalidate_witness(G, Q, cp_report),
    }
    conclusion = all(checks.values())
    return VerificationResult(
        claim_id=Claim.EXAMPLE_QUATERNION,
        group_name=G.name,
        prime=2,
        hypothesis_held=True,
        conclusion_held=conclusion,
        verdict=Verdict.PASS if conclusion else Verdict.FAIL,
        witness=cp_report.to_dict(),
        details=checks,
    )


CELL_VERIFIERS: Dict[Claim, Callable[..., VerificationResult]] = {
    Claim.THEOREM_B: verify_theorem_b,
    Claim.COROLLARY_1: verify_corollary_1,
    Claim.PROPOSITION_PRIDDY: verify_proposition_priddy,
    Claim.COROLLARY_PRIDDY: verify_corollary_priddy,
    Claim.COROLLARY_PCENTRAL: verify_corollary_pcentral,
    Claim.FROBENIUS_AGREEMENT: verify_frobenius_agreement,
    Claim.COMPLEMENT_AGREEMENT: verify_complement_agreement,
    Claim.ELEMENTARY_ABELIAN_CONTROL: verify_elementary_abelian_control,
    Claim.SUBCLAIMS: verify_subclaims,
}
