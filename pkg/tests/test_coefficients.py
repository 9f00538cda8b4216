"""The coefficient routes, their identities, and cross-certification."""

import itertools
import math
from fractions import Fraction

import pytest

from figurate.coefficients import (
    DEFAULT_SIZE_GUARD,
    ENUMERATIVE_ROUTES,
    ROUTES,
    CoeffTriangle,
    RouteReport,
    build_triangle,
    c_alternating,
    c_closed,
    c_decompose,
    c_enum_j,
    c_enum_k,
    c_eulerian2,
    c_recurrence,
    certify,
    coefficient,
    decompose_groups,
    summand_count,
    w_sum,
)
from figurate.combinatorics import factorial, surjection_count

# Frozen reference: c(p, ell) for p = 1..9.
TRIANGLE_9 = (
    (1,),
    (2, 1),
    (6, 6, 1),
    (24, 36, 14, 1),
    (120, 240, 150, 30, 1),
    (720, 1800, 1560, 540, 62, 1),
    (5040, 15120, 16800, 8400, 1806, 126, 1),
    (40320, 141120, 191520, 126000, 40824, 5796, 254, 1),
    (362880, 1451520, 2328480, 1905120, 834120, 186480, 18150, 510, 1),
)


class TestClosedRoute:
    def test_values(self):
        assert c_closed(5, 2) == 150
        assert c_closed(1, 0) == 1
        assert c_closed(9, 5) == 186480

    def test_reference_triangle(self):
        assert build_triangle(9, "closed").rows == TRIANGLE_9

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            c_closed(5, 5)
        with pytest.raises(ValueError):
            c_closed(0, 0)


class TestEnumerationRoutes:
    def test_k_route_values(self):
        assert c_enum_k(5, 1) == 240
        assert c_enum_k(5, 4) == 1
        assert c_enum_k(5, 3) == 30

    def test_j_route_values(self):
        assert c_enum_j(4, 2) == 2**4 - 2 == 14
        assert c_enum_j(5, 0) == 120
        assert c_enum_j(6, 3) == 540

    def test_two_part_closed_forms(self):
        for p in range(2, 11):
            assert c_enum_j(p, p - 2) == 2**p - 2
        for p in range(3, 11):
            assert c_enum_k(p, p - 3) == 3**p - 3 * 2**p + 3


class TestRecurrenceRoute:
    def test_worked_step(self):
        assert c_recurrence(8, 2) == 191520
        assert c_recurrence(8, 3) == 126000
        assert c_recurrence(9, 3) == 6 * (126000 + 191520) == 1905120

    def test_boundaries(self):
        for p in range(1, 12):
            assert c_recurrence(p, 0) == factorial(p)
            assert c_recurrence(p, p - 1) == 1

    def test_value(self):
        assert c_recurrence(7, 4) == 1806


class TestDecomposeRoute:
    def test_worked_example_grouping(self):
        groups = decompose_groups(9, 4)
        assert groups == [(1, 4, 504), (2, 6, 8064), (3, 4, 26460), (4, 1, 30240)]
        assert sum(w * inner for _, w, inner in groups) == 186480
        assert c_decompose(9, 4) == 186480

    def test_boundaries(self):
        for p in range(1, 10):
            assert c_decompose(p, p) == factorial(p)
            assert c_decompose(p, 1) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            c_decompose(5, 6)
        with pytest.raises(ValueError):
            c_decompose(5, 0)


class TestEulerianRoute:
    def test_values(self):
        for p in range(1, 12):
            assert c_eulerian2(p, 0) == factorial(p)
        assert c_eulerian2(5, 2) == 150
        assert c_eulerian2(8, 4) == 40824


class TestAlternatingRoute:
    def test_power_forms(self):
        assert c_alternating(6, 2) == 2**6 - 2 == 62
        assert c_alternating(7, 3) == 3**7 - 3 * 2**7 + 3 == 1806
        assert c_alternating(9, 4) == 4**9 - 4 * 3**9 + 6 * 2**9 - 4 == 186480

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            c_alternating(5, 6)


class TestWSum:
    def test_small_value_against_brute(self):
        # compositions of 4 into 2 positive parts containing a 1
        brute = 0
        for comp in itertools.product(range(1, 5), repeat=2):
            if sum(comp) == 4 and 1 in comp:
                brute += math.factorial(4) // math.prod(math.factorial(c) for c in comp)
        assert brute == 8
        assert w_sum(4, 2) == 8

    def test_single_part_has_no_ones(self):
        for p in range(2, 10):
            assert w_sum(p, 1) == 0

    def test_decomposition_identity(self):
        # min-part-1 composition sum = min-part-2 sum + W(p, j); the oracle
        # enumerates compositions by cut positions, not by the library path
        def cut_compositions(total, parts, min_part):
            for cuts in itertools.combinations(range(1, total), parts - 1):
                comp = tuple(b - a for a, b in zip((0,) + cuts, cuts + (total,)))
                if all(x >= min_part for x in comp):
                    yield comp

        for p in range(2, 11):
            fact_p = math.factorial(p)
            for j in range(1, p):
                total = {}
                for min_part in (1, 2):
                    total[min_part] = sum(
                        fact_p // math.prod(math.factorial(c) for c in comp)
                        for comp in cut_compositions(p, j, min_part)
                    )
                assert total[1] == total[2] + w_sum(p, j)
                assert total[1] == c_decompose(p, j)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            w_sum(5, 5)


class TestSummandCount:
    def test_values(self):
        assert summand_count(9, 4) == 56
        for p in range(2, 12):
            assert summand_count(p, 1) == 1
        assert summand_count(6, 3) == 10

    def test_matches_streamed_composition_count(self):
        from figurate.enumeration import enumerate_compositions

        for p in range(2, 13):
            for j in range(1, p):
                streamed = sum(
                    math.comb(j, t)
                    * sum(1 for _ in enumerate_compositions(p + t - j, t, 2))
                    for t in range(1, j + 1)
                )
                assert summand_count(p, j) == streamed == math.comb(p - 1, j - 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            summand_count(5, 5)


class TestRouteAgreement:
    def test_all_routes_p_up_to_10(self):
        for p in range(1, 11):
            for ell in range(p):
                values = {route: coefficient(p, ell, route) for route in ROUTES}
                assert len(set(values.values())) == 1, (p, ell, values)

    def test_nonenumerative_routes_p_up_to_25(self):
        fast = [r for r in ROUTES if r not in ENUMERATIVE_ROUTES]
        for p in range(1, 26):
            for ell in range(p):
                values = {coefficient(p, ell, route) for route in fast}
                assert len(values) == 1, (p, ell)

    def test_unknown_route_rejected(self):
        with pytest.raises(ValueError):
            coefficient(3, 1, "magic")


class TestRowProperties:
    def test_boundaries_and_alternating_sum(self):
        triangle = build_triangle(25)
        for p in range(1, 26):
            row = triangle.row(p)
            assert row[0] == factorial(p)
            assert row[-1] == 1
            assert sum((-1) ** ell * c for ell, c in enumerate(row)) == 1
            assert all(c > 0 for c in row)

    def test_closed_sub_formulas(self):
        for p in range(2, 26):
            assert Fraction(c_closed(p, 1)) == Fraction(p - 1, 2) * factorial(p)
        for p in range(3, 26):
            expect = Fraction(1, 8) * factorial(p) * (p - 2) * (Fraction(3 * p - 5, 3))
            assert Fraction(c_closed(p, 2)) == expect

    def test_surjection_identity(self):
        for p in range(1, 26):
            for j in range(1, p + 1):
                assert c_closed(p, p - j) == surjection_count(p, j)


class TestTriangle:
    def test_single_row(self):
        assert build_triangle(1).rows == ((1,),)

    def test_routes_build_identical_triangles(self):
        triangles = [build_triangle(8, route).rows for route in ROUTES]
        assert all(t == triangles[0] for t in triangles)

    def test_row_accessor(self):
        t = build_triangle(5, "enum_k")
        assert t.row(5) == (120, 240, 150, 30, 1)
        assert isinstance(t, CoeffTriangle)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            build_triangle(0)
        with pytest.raises(ValueError):
            build_triangle(3, "magic")


class TestCertify:
    def test_full_agreement(self):
        report = certify(5, 2)
        assert set(report.values) == set(ROUTES)
        assert set(report.values.values()) == {150}
        assert report.agree
        assert report.skipped == ()
        assert report.value == 150

    def test_worked_value(self):
        report = certify(9, 5)
        assert report.agree
        assert report.value == 186480

    def test_cross_route_oracle_at_12_6(self):
        report = certify(12, 6)
        assert report.agree

    def test_size_guard_skips_enumerative_routes(self):
        report = certify(16, 3, size_guard=DEFAULT_SIZE_GUARD)
        assert set(report.skipped) == ENUMERATIVE_ROUTES
        assert set(report.values) == set(ROUTES) - ENUMERATIVE_ROUTES
        assert report.agree

    def test_guard_override_runs_everything(self):
        report = certify(15, 14, size_guard=15)
        assert report.skipped == ()
        assert report.agree

    def test_report_type(self):
        assert isinstance(certify(3, 1), RouteReport)
