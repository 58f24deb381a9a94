"""
Central series, p-nilpotency criteria and the commutator subclaims
"""

import pytest

from src.catalog import build_named, catalog_names
from src.core.exceptions import HypothesisNotMetError, NotPrimeError, TooLargeError
from src.nilpotency import (
    frobenius_criterion,
    hall_petrescu_consequence,
    hall_petrescu_data,
    is_p_nilpotent,
    is_valid_complement,
    normal_complement_oracle,
    omega_bar,
    upper_central_series,
)
from src.nilpotency.subclaims import (
    centralizes_omega_implies_centralizes,
    check_subclaims,
    commutator_subgroup_with,
    generated_commutator_conjugates,
    sylow_product_with_centralizer,
)
from src.perm import (
    center,
    conjugate,
    from_cycles,
    generate,
    identity,
    is_normal,
    parse_cycles,
    prime_divisors,
    sylow_subgroup,
)

SMALL_CASES = [
    ("S3", 2, True),
    ("S3", 3, False),
    ("A4", 2, False),
    ("A4", 3, True),
    ("S4", 2, False),
    ("S4", 3, False),
    ("Q8:C3", 2, False),
    ("Q8:C3", 3, True),
    ("D6", 2, True),
    ("D6", 3, False),
    ("C12", 2, True),
    ("A5", 5, False),
    ("C7:C3", 3, True),
    ("C7:C3", 7, False),
    ("C1", 2, True),
]


def symmetric_group(degree):
    if degree == 1:
        return generate(1, [identity(1)])
    return generate(degree, [from_cycles(degree, [[0, 1]]), from_cycles(degree, [list(range(degree))])])


def ambient_automorphisms(G):
    """Elements of the symmetric group on G's points that normalize G"""
    return [
        x for x in symmetric_group(G.degree).elements
        if all(conjugate(g, x) in G for g in G.generators)
    ]


SMALL_DEGREE = [name for name in catalog_names(60) if build_named(name).degree <= 6]


class TestUpperCentralSeries:

    @pytest.mark.parametrize("name,orders", [
        ("Q8", [1, 2, 8]),
        ("D4", [1, 2, 8]),
        ("S3", [1, 1]),
        ("C6", [1, 6]),
        ("C1", [1]),
        ("Q8:C3", [1, 2]),
    ])
    def test_orders(self, name, orders):
        assert upper_central_series(build_named(name)).orders() == orders

    def test_quaternion_series(self, q8):
        series = upper_central_series(q8)
        assert series.is_nilpotent
        assert series.nilpotency_class == 2
        assert series.terms[1] == center(q8)
        assert series.hypercenter == q8.whole()

    def test_non_nilpotent(self, s3):
        series = upper_central_series(s3)
        assert not series.is_nilpotent
        assert series.nilpotency_class is None
        assert series.least_index_containing(sylow_subgroup(s3, 2)) is None
        assert series.least_index_containing(s3.trivial()) == 0

    def test_term_is_clamped(self, q8):
        series = upper_central_series(q8)
        assert series.least_index_containing(center(q8)) == 1
        assert series.term(7) == q8.whole()

    @pytest.mark.parametrize("name", catalog_names(60))
    def test_terms_are_normal(self, name):
        G = build_named(name)
        series = upper_central_series(G)
        for lower, upper in zip(series.terms, series.terms[1:]):
            assert lower.is_subgroup_of(upper)
        assert all(is_normal(G, term) for term in series.terms)

    @pytest.mark.parametrize("name", SMALL_DEGREE)
    def test_terms_are_invariant_under_ambient_automorphisms(self, name):
        G = build_named(name)
        terms = upper_central_series(G).terms
        for x in ambient_automorphisms(G):
            for term in terms:
                assert {conjugate(t, x) for t in term.members} == term.member_set

    def test_series_of_a_subgroup(self, s4):
        P = sylow_subgroup(s4, 2)
        series = upper_central_series(s4, within=P)
        assert series.orders() == [1, 2, 8]
        assert all(term.parent is s4 for term in series.terms)


class TestOmegaBar:

    @pytest.mark.parametrize("name,p,order", [
        ("S3", 2, 6),
        ("S3", 3, 3),
        ("Q8", 2, 8),
        ("C12", 2, 4),
        ("C12", 3, 3),
        ("Q8:C3", 2, 8),
    ])
    def test_orders(self, name, p, order):
        assert omega_bar(build_named(name), p).order == order

    @pytest.mark.parametrize("name", catalog_names(60))
    def test_normal_across_catalog(self, name):
        G = build_named(name)
        for p in prime_divisors(G.order):
            assert is_normal(G, omega_bar(G, p)), p

    def test_requires_prime(self, s3):
        with pytest.raises(NotPrimeError):
            omega_bar(s3, 1)


class TestPNilpotency:

    @pytest.mark.parametrize("name,p,expected", SMALL_CASES)
    def test_verdicts(self, name, p, expected):
        assert is_p_nilpotent(build_named(name), p).p_nilpotent is expected

    @pytest.mark.parametrize("name,p,expected", SMALL_CASES)
    def test_complement_oracle_agrees(self, name, p, expected):
        G = build_named(name)
        found = normal_complement_oracle(G, p)
        assert (found is not None) is expected
        if found is not None:
            assert is_valid_complement(G, found, p)

    @pytest.mark.parametrize("name,p,expected", SMALL_CASES)
    def test_frobenius_agrees(self, name, p, expected):
        assert frobenius_criterion(build_named(name), p).p_nilpotent is expected

    @pytest.mark.parametrize("name", catalog_names(60))
    def test_complements_have_no_p_torsion(self, name):
        G = build_named(name)
        for p in prime_divisors(G.order):
            verdict = is_p_nilpotent(G, p)
            if verdict.complement is None:
                continue
            assert all(G.element_order(x) % p != 0 for x in verdict.complement.members)
            assert is_valid_complement(G, verdict.complement, p)

    def test_complement_is_valid(self, a4):
        verdict = is_p_nilpotent(a4, 3)
        assert verdict.complement.order == 4
        assert is_valid_complement(a4, verdict.complement, 3)
        assert verdict.to_dict() == {"p": 3, "p_nilpotent": True, "complement_order": 4}

    def test_invalid_complements(self, s3):
        assert not is_valid_complement(s3, sylow_subgroup(s3, 2), 3)
        assert not is_valid_complement(s3, s3.whole(), 2)

    def test_oracle_cap(self, s4):
        with pytest.raises(TooLargeError):
            normal_complement_oracle(s4, 2, max_order=12)

    def test_frobenius_witness(self, s3):
        verdict = frobenius_criterion(s3, 3)
        B, g = verdict.frobenius_witness
        assert B == sylow_subgroup(s3, 3)
        assert s3.element_order(g) == 2
        assert set(verdict.to_dict()["frobenius_witness"]) == {"subgroup", "g"}


class TestHallPetrescu:

    def test_quaternion(self, q8):
        data = hall_petrescu_data(q8, 2)
        assert data.K == q8.whole()
        assert (data.e, data.n) == (2, 2)
        assert data.power_exponent == 4
        assert data.powers.is_trivial
        assert hall_petrescu_consequence(q8, 2)

    def test_cyclic(self, c12):
        data = hall_petrescu_data(c12, 2)
        assert data.K.order == 4
        assert (data.e, data.n) == (2, 1)
        assert data.powers.order == 3
        assert hall_petrescu_consequence(c12, 2)

    @pytest.mark.parametrize("name", ["S3", "Q8:C3"])
    def test_hypothesis_not_met(self, name):
        with pytest.raises(HypothesisNotMetError):
            hall_petrescu_data(build_named(name), 2)


class TestSubclaims:

    def test_commutator_subgroups(self, s3):
        A3 = sylow_subgroup(s3, 3)
        t = parse_cycles("(0 1)", 3)
        assert commutator_subgroup_with(s3, A3, t) == A3
        assert generated_commutator_conjugates(s3, A3, t, 3) == A3

    def test_commutator_with_central_element(self, c6):
        K = c6.whole()
        assert commutator_subgroup_with(c6, K, c6.generators[0]).is_trivial

    @pytest.mark.parametrize("name,p", [("S3", 2), ("S3", 3), ("A4", 2), ("S4", 2), ("Q8:C3", 2), ("D6", 2)])
    def test_subclaims_hold(self, name, p):
        report = check_subclaims(build_named(name), p)
        assert report.holds
        assert report.identity_failures == 0
        assert report.pairs_checked > 0

    def test_containment_checked_only_under_control(self, a4, s3):
        assert not check_subclaims(a4, 2).controls_cp_fusion
        report = check_subclaims(s3, 2)
        assert report.controls_cp_fusion
        assert report.containment_failures == 0
        assert report.double_commutator_failures == 0

    @pytest.mark.parametrize("name,p", [("S4", 2), ("A4", 2), ("Q8:C3", 2), ("C7:C3", 7), ("S3", 3)])
    def test_omega_lemma(self, name, p):
        assert centralizes_omega_implies_centralizes(build_named(name), p)

    def test_sylow_product_with_centralizer(self, q8, c12, s3):
        assert sylow_product_with_centralizer(q8, 2)
        assert sylow_product_with_centralizer(c12, 2)
        with pytest.raises(HypothesisNotMetError):
            sylow_product_with_centralizer(s3, 2)
