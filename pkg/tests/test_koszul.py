"""Koszul terms, E1 pages, restricted cohomology, Hilbert values."""

import pytest

from g2cy import (KoszulInput, RepSum, dual, e1_page, euler_char, hilbert_value,
                  irrep, koszul_terms, restricted_cohomology,
                  structure_sheaf_cohomology, trivial)
from g2cy.errors import NotGloballyGenerated, NotMaximalParabolic, TrivialSummand

from conftest import p_dominant_box


def bundle(P, *summands):
    terms = {}
    for w in summands:
        terms[w] = terms.get(w, 0) + 1
    return RepSum(P, terms)


class TestKoszulTerms:
    def test_main_threefold_terms(self, P1):
        inp = KoszulInput(P1, irrep(P1, (1, 1)), trivial(P1))
        terms = koszul_terms(inp)
        assert terms == [trivial(P1), irrep(P1, (-2, 1)), irrep(P1, (-3, 0))]

    def test_zeroth_term_is_w(self, P2):
        w = irrep(P2, (0, 2)) + irrep(P2, (1, 0))
        inp = KoszulInput(P2, irrep(P2, (1, 1)), w)
        assert koszul_terms(inp)[0] == w

    def test_line_bundle_duals_add(self, P1):
        inp = KoszulInput(P1, bundle(P1, (1, 0), (2, 0)), trivial(P1))
        terms = koszul_terms(inp)
        assert terms == [trivial(P1),
                         irrep(P1, (-1, 0)) + irrep(P1, (-2, 0)),
                         irrep(P1, (-3, 0))]

    def test_rejects_trivial_summand(self, P1):
        with pytest.raises(TrivialSummand):
            KoszulInput(P1, irrep(P1, (1, 1)) + trivial(P1), trivial(P1))

    def test_rejects_non_generated_summand(self, P1):
        with pytest.raises(NotGloballyGenerated):
            KoszulInput(P1, irrep(P1, (-1, 3)), trivial(P1))


class TestE1Page:
    def test_main_threefolds_have_two_corner_entries(self, P1, P2):
        for P in (P1, P2):
            inp = KoszulInput(P, irrep(P, (1, 1)), trivial(P))
            page = e1_page(inp)
            assert page.entries() == {(0, 0): 1, (inp.E.rank, P.dim): 1}

    def test_dominant_w_concentrates_in_column_zero_row_zero(self, P2):
        inp = KoszulInput(P2, irrep(P2, (1, 1)), irrep(P2, (0, 2)))
        page = e1_page(inp)
        col0 = {q: page.dim(0, q) for q in page.columns[0].degrees()}
        assert list(col0) == [0]

    def test_euler_matches_term_sums(self, parabolics):
        # two summation orders of the same alternating sum must agree
        cases = 0
        for P in parabolics:
            if P.label == "B":
                e = bundle(P, (0, 1), (0, 1), (2, 0))
            else:
                e = irrep(P, (1, 1))
            for w_weight in p_dominant_box(P, 2):
                inp = KoszulInput(P, e, irrep(P, w_weight))
                page = e1_page(inp)
                direct = sum((-1) ** k * euler_char(P, term)
                             for k, term in enumerate(koszul_terms(inp)))
                assert page.euler == direct
                rc = restricted_cohomology(inp)
                assert rc.euler == direct
                cases += 1
        assert cases >= 3 * 15


class TestRestrictedCohomology:
    def test_main_threefold_structure_sheaf(self, P1):
        rc = structure_sheaf_cohomology(P1, irrep(P1, (1, 1)))
        assert [rc.h(n).value for n in range(4)] == [1, 0, 0, 1]
        assert rc.determined
        assert rc.euler == 0

    def test_k3_structure_sheaf(self, P1):
        rc = structure_sheaf_cohomology(P1, bundle(P1, (1, 0), (1, 0), (1, 0)))
        assert [rc.h(n).value for n in range(3)] == [1, 0, 1]
        assert rc.euler == 2

    def test_forced_cancellation_on_conormal(self, P1):
        # W = E* on the main threefold: the page has entries of dimensions
        # 1 (total degree 4) and 64 (total degree 3); degree 4 must vanish on
        # a threefold, which forces one rank out of the 64
        e = irrep(P1, (1, 1))
        inp = KoszulInput(P1, e, dual(P1, e))
        page = e1_page(inp)
        assert page.entries() == {(1, 5): 1, (2, 5): 64}
        rc = restricted_cohomology(inp)
        assert rc.h(3).value == 63
        assert rc.h(4).value == 0

    def test_vanishing_toggle_only_adds_information(self, P1, P2):
        for P in (P1, P2):
            e = irrep(P, (1, 1))
            for w in (trivial(P), dual(P, e), dual(P, P.tangent)):
                inp = KoszulInput(P, e, w)
                strict = restricted_cohomology(inp, enforce_vanishing=True)
                loose = restricted_cohomology(inp, enforce_vanishing=False)
                for n, r in loose.by_degree.items():
                    if r.determined:
                        assert strict.h(n) == r
                    else:
                        got = strict.h(n)
                        assert r.lower <= got.lower and got.upper <= r.upper

    def test_audit_mode_leaves_forced_degree_open(self, P1):
        e = irrep(P1, (1, 1))
        rc = restricted_cohomology(KoszulInput(P1, e, dual(P1, e)),
                                   enforce_vanishing=False)
        assert not rc.h(4).determined


class TestHilbertValue:
    def test_twist_zero_vanishes_on_threefolds(self, P1, P2):
        for P, rows in ((P1, [((1, 1),), ((1, 0), (2, 0))]),
                        (P2, [((1, 1),), ((0, 1), (0, 4)), ((0, 2), (0, 3))])):
            for summands in rows:
                assert hilbert_value(P, bundle(P, *summands), 0) == 0

    def test_main_threefold_values(self, P1, P2):
        # chi(O_X(i)) = 42/6 i^3 + 84/12 i on the first threefold
        e1 = irrep(P1, (1, 1))
        for i in range(-4, 5):
            assert hilbert_value(P1, e1, i) == 7 * i ** 3 + 7 * i
        assert hilbert_value(P2, irrep(P2, (1, 1)), 1) == 7

    def test_odd_symmetry(self, P1, P2):
        for P in (P1, P2):
            e = irrep(P, (1, 1))
            for i in range(1, 5):
                assert hilbert_value(P, e, -i) == -hilbert_value(P, e, i)

    def test_polynomial_degree_via_finite_differences(self, P1):
        # chi is a polynomial of degree dim X, so differences of order
        # dim X + 1 vanish
        e = irrep(P1, (1, 1))
        values = {i: hilbert_value(P1, e, i) for i in range(-1, 9)}
        for i in range(0, 4):
            diff4 = sum((-1) ** j * [1, 4, 6, 4, 1][j] * values[i + 4 - j]
                        for j in range(5))
            assert diff4 == 0

    def test_rejects_borel(self, B):
        with pytest.raises(NotMaximalParabolic):
            hilbert_value(B, bundle(B, (0, 1), (0, 1), (2, 0)), 1)
