"""
Suite runner: every claim over the standard catalog and the primes dividing each order
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..catalog.io import group_from_dict, group_to_dict
from ..catalog.standard import standard_catalog
from ..core.config import config
from ..core.exceptions import HypothesisNotMetError, TooLargeError
from ..fusion.classes import FusionClass
from ..fusion.control import controls_fusion
from ..nilpotency.criteria import frobenius_criterion, is_p_nilpotent
from ..nilpotency.series import upper_central_series
from ..perm.group import FiniteGroup
from ..perm.numbers import prime_divisors, require_prime
from ..perm.subgroups import sylow_subgroup
from .claims import CELL_VERIFIERS, CellContext, verify_example_quaternion
from .results import Claim, SuiteReport, VerificationResult, Verdict

logger = logging.getLogger(__name__)

CELL_CLAIMS: Tuple[Claim, ...] = tuple(claim for claim in Claim if claim in CELL_VERIFIERS)


def _skipped(claim: Claim, group_name: str, p: int, error: Exception) -> VerificationResult:
    logger.warning(f"Skipping {claim.value} on {group_name} at p={p}: {error}")
    return VerificationResult(
        claim_id=claim,
        group_name=group_name,
        prime=p,
        hypothesis_held=False,
        conclusion_held=False,
        verdict=Verdict.SKIPPED,
        details={"error": str(error), "error_type": type(error).__name__},
    )


def run_cell(G: FiniteGroup, group_name: str, p: int, claim: Claim,
             context: Optional[CellContext] = None) -> VerificationResult:
    """One verifier on one (G, p); cap and hypothesis errors become a skipped cell"""
    context = context or CellContext(G, p, group_name)
    try:
        return CELL_VERIFIERS[claim](G, p, context=context)
    except (TooLargeError, HypothesisNotMetError) as e:
        return _skipped(claim, group_name, p, e)


def primes_for(G: FiniteGroup, primes: Optional[Iterable[int]] = None) -> List[int]:
    dividing = prime_divisors(G.order)
    if primes is None:
        return list(dividing)
    wanted = set(primes)
    return [p for p in dividing if p in wanted]


def run_group(G: FiniteGroup, group_name: str, primes: Optional[Iterable[int]],
              claims: Sequence[Claim]) -> List[VerificationResult]:
    cells = []
    for p in primes_for(G, primes):
        context = CellContext(G, p, group_name)
        for claim in claims:
            cells.append(run_cell(G, group_name, p, claim, context=context))
    logger.info(f"Checked {group_name} (order {G.order}): {len(cells)} cells")
    return cells


def _run_group_document(document: Dict[str, Any], name: str, primes: Optional[List[int]],
                         claims: Sequence[Claim]) -> List[VerificationResult]:
    """Worker entry point; the group is rebuilt from its degree and generators"""
    return run_group(group_from_dict(document), name, primes, claims)


def _selected_claims(claims: Optional[Iterable[Claim]]) -> Tuple[List[Claim], bool]:
    if claims is None:
        return list(CELL_CLAIMS), True
    chosen = set(claims)
    cell_claims = [claim for claim in CELL_CLAIMS if claim in chosen]
    return cell_claims, Claim.EXAMPLE_QUATERNION in chosen


def run_suite(max_order: Optional[int] = None,
              primes: Optional[Set[int]] = None,
              claims: Optional[Iterable[Claim]] = None,
              workers: Optional[int] = None,
              groups: Optional[Sequence[Tuple[str, FiniteGroup]]] = None) -> SuiteReport:
    """Run the claims over the catalog and merge cells in (group, prime, claim) order"""
    workers = config.WORKERS if workers is None else workers
    cell_claims, with_example = _selected_claims(claims)
    prime_list = sorted(primes) if primes is not None else None

    if groups is None:
        groups = standard_catalog(max_order)
    logger.info(f"Running {len(cell_claims)} claims over {len(groups)} groups")

    per_group: List[List[VerificationResult]]
    if workers > 1 and cell_claims:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_group_document, group_to_dict(G), name, prime_list, cell_claims)
                for name, G in groups
            ]
            per_group = [future.result() for future in futures]
    else:
        per_group = [run_group(G, name, prime_list, cell_claims) for name, G in groups]

    ordered = []
    for position, cells in enumerate(per_group):
        ordered.extend(sorted(cells, key=lambda cell: cell.sort_key(position)))
    if with_example:
        ordered.append(verify_example_quaternion())

    report = SuiteReport(cells=ordered)
    totals = report.totals()
    logger.info(f"Suite finished: {totals}")
    if report.failures:
        logger.warning(f"{len(report.failures)} failing cells")
    return report


def analyze_group(G: FiniteGroup, p: int, fusion_class: FusionClass,
                  full_witness: Optional[bool] = None) -> Dict[str, Any]:
    """Single-group report: p-nilpotency, fusion control by a Sylow p-subgroup, central series"""
    require_prime(p)
    P = sylow_subgroup(G, p)
    nilpotency = is_p_nilpotent(G, p)
    fusion = controls_fusion(G, P, fusion_class, full_witness=full_witness)
    frobenius = frobenius_criterion(G, p)
    series = upper_central_series(G)
    logger.info(f"Analyzed {G.label} at p={p}: p-nilpotent={nilpotency.p_nilpotent}")
    return {
        "group": G.label,
        "order": G.order,
        "degree": G.degree,
        "prime": p,
        "sylow_order": P.order,
        "class": str(fusion_class),
        "p_nilpotent": nilpotency.p_nilpotent,
        "nilpotency": nilpotency.to_dict(),
        "fusion": fusion.to_dict(),
        "controls_fusion": fusion.holds,
        "frobenius": frobenius.to_dict(),
        "upper_central_series": series.orders(),
    }
