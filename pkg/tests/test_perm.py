"""
Permutation arithmetic, group closure and structural subgroup operations
"""

import pytest

from src.catalog import build_named, catalog_names
from src.core.exceptions import (
    DegreeMismatchError,
    ElementNotInGroupError,
    NotPrimeError,
    ParentMismatchError,
    ParseError,
    TooLargeError,
)
from src.perm import (
    Permutation,
    center,
    centralizer,
    commutator,
    compose,
    conjugacy_classes,
    conjugate,
    conjugate_subgroup,
    conjugating_element,
    element_order,
    format_cycles,
    from_cycles,
    generate,
    identity,
    intersection,
    inverse,
    is_normal,
    is_prime,
    normalizer,
    p_bar,
    p_part,
    parse_cycles,
    power,
    prime_divisors,
    set_product,
    subgroup_as_group,
    subgroup_closure,
    sylow_subgroup,
)
from src.perm.numbers import require_prime

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def cyc(text, degree=3):
    return parse_cycles(text, degree)


class TestPermutation:

    def test_compose_applies_left_first(self):
        assert compose(cyc("(0 1)"), cyc("(1 2)")) == cyc("(0 2 1)")

    def test_conjugate(self):
        assert conjugate(cyc("(0 1)"), cyc("(1 2)")) == cyc("(0 2)")

    def test_commutator(self):
        assert commutator(cyc("(0 1 2)"), cyc("(0 1)")) == cyc("(0 1 2)")

    def test_conjugation_is_a_right_action(self):
        a, g, h = cyc("(0 1)"), cyc("(0 1 2)"), cyc("(1 2)")
        assert conjugate(conjugate(a, g), h) == conjugate(a, compose(g, h))

    def test_inverse_and_power(self):
        a = cyc("(0 1 2 3 4)", 5)
        assert compose(a, inverse(a)) == identity(5)
        assert power(a, -1) == inverse(a)
        assert power(a, 5) == identity(5)
        assert power(a, 0) == identity(5)

    def test_element_order(self):
        assert element_order(cyc("(0 1)(2 3 4)", 5)) == 6
        assert element_order(identity(4)) == 1

    def test_identity_sorts_first(self):
        assert identity(3) < cyc("(1 2)") < cyc("(0 1)")

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            compose(identity(3), identity(4))
        with pytest.raises(DegreeMismatchError):
            conjugate(identity(3), identity(4))

    def test_mul_operator(self):
        assert cyc("(0 1)") * cyc("(1 2)") == compose(cyc("(0 1)"), cyc("(1 2)"))


    @pytest.mark.parametrize("name", ["S4", "Q8:C3", "C3:C4"])
    def test_compose_is_associative(self, name):
        elements = build_named(name).elements
        for a in elements:
            for b in elements:
                ab = compose(a, b)
                for c in elements:
                    assert compose(ab, c) == compose(a, compose(b, c))


class TestCycleNotation:

    def test_round_trip(self):
        perm = parse_cycles("(0 1)(2 3 4)", 5)
        assert perm.images == (1, 0, 3, 4, 2)
        assert format_cycles(perm) == "(0 1)(2 3 4)"

    @pytest.mark.parametrize("text", ["", "()", "  ( ) "])
    def test_identity_forms(self, text):
        assert parse_cycles(text, 4) == identity(4)
        assert format_cycles(parse_cycles(text, 4)) == "()"

    def test_commas_and_singletons(self):
        assert parse_cycles("(0,2)(1)", 3) == from_cycles(3, [[0, 2]])

    @pytest.mark.parametrize("text", ["(0 1)(1 2)", "(0 5)", "(0 1) x", "(0 a)", "(0 1"])
    def test_malformed(self, text):
        with pytest.raises(ParseError) as excinfo:
            parse_cycles(text, 5)
        assert excinfo.value.field == "cycles"


class TestGroupClosure:

    def test_symmetric_group_orders(self, s3, s4):
        assert s3.order == 6
        assert s4.order == 24
        assert s3.identity == identity(3)

    def test_elements_are_canonically_ordered(self, s4):
        assert list(s4.elements) == sorted(s4.elements)
        assert s4.elements[0].is_identity

    def test_generate_requires_generators(self):
        with pytest.raises(ValueError):
            generate(3, [])

    def test_generate_checks_degree(self):
        with pytest.raises(DegreeMismatchError):
            generate(3, [identity(4)])

    def test_generate_respects_cap(self):
        with pytest.raises(TooLargeError):
            generate(3, [cyc("(0 1)"), cyc("(0 1 2)")], cap=5)

    def test_subgroup_closure(self, s4):
        V = subgroup_closure(s4, [parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)])
        assert V.order == 4
        assert subgroup_closure(s4, []).is_trivial

    def test_subgroup_closure_rejects_foreign_element(self, a4):
        with pytest.raises(ElementNotInGroupError):
            subgroup_closure(a4, [parse_cycles("(0 1)", 4)])

    def test_greedy_generators_regenerate_subgroup(self, s4):
        P = sylow_subgroup(s4, 2)
        assert subgroup_closure(s4, P.generators) == P
        assert len(P.generators) <= 3

    def test_subgroup_as_group(self, s4):
        P = sylow_subgroup(s4, 2)
        standalone = subgroup_as_group(P)
        assert standalone.order == 8
        assert set(standalone.elements) == P.member_set

    @pytest.mark.parametrize("name", catalog_names(60))
    def test_closure_is_idempotent_and_monotone(self, name):
        G = build_named(name)
        first = subgroup_closure(G, G.generators[:1])
        assert subgroup_closure(G, first.members) == first
        assert subgroup_closure(G, first.generators) == first
        assert subgroup_closure(G, G.generators) == G.whole()
        for x in G.elements:
            cyclic = subgroup_closure(G, [x])
            assert cyclic.is_subgroup_of(subgroup_closure(G, [x, G.generators[0]]))
            assert cyclic.is_subgroup_of(first) == (x in first)

    def test_is_abelian(self, c6, s3):
        assert c6.is_abelian()
        assert not s3.is_abelian()


class TestSubgroupOperations:

    def test_centralizer_matches_brute_force(self, s4):
        P = sylow_subgroup(s4, 3)
        expected = {g for g in s4.elements if all(compose(g, x) == compose(x, g) for x in P.members)}
        assert centralizer(s4, P).member_set == expected

    def test_normalizer_matches_brute_force(self, s4):
        P = sylow_subgroup(s4, 2)
        expected = {g for g in s4.elements if conjugate_subgroup(P, g) == P}
        assert normalizer(s4, P).member_set == expected

    def test_centers(self, q8, s3, c6):
        assert center(q8).order == 2
        assert center(s3).is_trivial
        assert center(c6).order == 6

    def test_normality(self, a4, s4):
        assert is_normal(a4, sylow_subgroup(a4, 2))
        assert not is_normal(s4, sylow_subgroup(s4, 2))
        assert not is_normal(a4, sylow_subgroup(a4, 3))

    def test_intersection(self, s3):
        assert intersection(sylow_subgroup(s3, 2), sylow_subgroup(s3, 3)).is_trivial

    @pytest.mark.parametrize("name", catalog_names(60))
    def test_centralizer_order_divides_normalizer_order(self, name):
        G = build_named(name)
        subgroups = {subgroup_closure(G, [x]) for x in G.elements}
        subgroups.update(sylow_subgroup(G, p) for p in prime_divisors(G.order))
        for S in sorted(subgroups):
            C, N = centralizer(G, S), normalizer(G, S)
            assert C.is_subgroup_of(N)
            assert N.order % C.order == 0
            assert G.order % N.order == 0

    def test_parent_mismatch(self, s3, a4):
        with pytest.raises(ParentMismatchError):
            intersection(s3.whole(), a4.whole())
        with pytest.raises(ParentMismatchError):
            centralizer(s3, a4.whole())

    def test_set_product(self, s3):
        assert set_product(sylow_subgroup(s3, 3), sylow_subgroup(s3, 2)) == frozenset(s3.elements)

    def test_conjugacy_classes(self, s3, s4):
        classes = conjugacy_classes(s3)
        assert classes[0] == (s3.identity,)
        assert sorted(len(c) for c in classes) == [1, 2, 3]
        assert sorted(len(c) for c in conjugacy_classes(s4)) == [1, 3, 6, 6, 8]

    def test_conjugating_element(self, a4):
        threes = sorted({subgroup_closure(a4, [x]) for x in a4.elements if a4.element_order(x) == 3})
        assert len(threes) == 4
        A, B = threes[0], threes[1]
        g = conjugating_element(a4, A, B)
        assert g is not None
        assert conjugate_subgroup(A, g) == B
        assert conjugating_element(a4, A, sylow_subgroup(a4, 2)) is None


class TestSylow:

    @pytest.mark.parametrize("name,p,order", [
        ("S4", 2, 8),
        ("S4", 3, 3),
        ("A4", 2, 4),
        ("A5", 2, 4),
        ("A5", 5, 5),
        ("S5", 2, 8),
        ("D6", 2, 4),
        ("C12", 2, 4),
    ])
    def test_sylow_order(self, name, p, order):
        G = build_named(name)
        P = sylow_subgroup(G, p)
        assert P.order == order
        assert all(p_part(G.element_order(x), p) == G.element_order(x) for x in P.members)

    @pytest.mark.parametrize("name", catalog_names(200))
    def test_sylow_order_is_p_part_across_catalog(self, name):
        G = build_named(name)
        for p in SMALL_PRIMES:
            assert sylow_subgroup(G, p).order == p_part(G.order, p), p

    def test_sylow_of_non_divisor_is_trivial(self, s4):
        assert sylow_subgroup(s4, 5).is_trivial

    def test_sylow_requires_prime(self, s4):
        with pytest.raises(NotPrimeError):
            sylow_subgroup(s4, 4)


class TestNumbers:

    def test_p_part(self):
        assert p_part(24, 2) == 8
        assert p_part(24, 3) == 3
        assert p_part(24, 5) == 1

    def test_prime_divisors(self):
        assert prime_divisors(24) == [2, 3]
        assert prime_divisors(1) == []

    def test_primality(self):
        assert is_prime(7)
        assert not is_prime(1)
        with pytest.raises(NotPrimeError):
            require_prime(9)

    def test_p_bar(self):
        assert p_bar(2) == 4
        assert p_bar(3) == 3
