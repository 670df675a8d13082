from fractions import Fraction
from math import gcd

import pytest

from lensknot.errors import InvalidInputError, InvariantViolationError
from lensknot.lens import LensSpace, two_tau_from_d
from lensknot.simpleknot import (
    SimpleKnot,
    alexander_gradings,
    build_diagram,
    connected_sum_knot_data,
    generator_label,
    solve_relative_periodic_domain,
    tau_table,
    verify_two_tau_identity,
    _normalize_gradings,
)


def K(p, q, k):
    return SimpleKnot(LensSpace(p, q), k)


class TestSimpleKnot:
    def test_order(self):
        assert K(4, 1, 2).order == 2
        assert K(7, 3, 0).order == 1
        assert K(12, 5, 8).order == 3
        assert K(5, 2, 1).order == 5

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            K(4, 1, 4)
        with pytest.raises(InvalidInputError):
            K(4, 1, -1)


class TestDiagram:
    def test_reference_knot(self):
        d = build_diagram(K(4, 1, 2))
        assert len(d.generators) == 4
        assert len(d.region_corners) == 4
        assert d.z_region == 2  # z sits two regions after w
        assert d.w_region == 0

    def test_unknot_basepoints_share_region(self):
        d = build_diagram(K(7, 3, 0))
        assert d.w_region == d.z_region == 0

    def test_gluing_single_orbit(self):
        d = build_diagram(K(5, 2, 1))
        orbit = [0]
        while True:
            nxt = d.beta_gluing[orbit[-1]]
            if nxt == 0:
                break
            orbit.append(nxt)
        assert len(orbit) == 5

    def test_euler_count(self):
        for knot in (K(4, 1, 2), K(9, 2, 3), K(1, 0, 0)):
            d = build_diagram(knot)
            p = d.p
            assert len(d.generators) == p
            assert d.num_arcs == 2 * p
            assert len(d.region_corners) == p
            assert p - d.num_arcs + len(d.region_corners) == 0

    def test_region_corners(self):
        d = build_diagram(K(5, 2, 1))
        for i in range(5):
            assert d.region_corners[i] == (i, (i + 1) % 5, (i + 2) % 5, (i + 3) % 5)
            assert d.euler_measure(i) == 0

    def test_generator_quadrants(self):
        d = build_diagram(K(5, 2, 1))
        assert d.generator_quadrants(0) == (0, 4, 3, 2)


class TestRelPeriodicDomain:
    def test_unknot_zero_chain(self):
        dom = solve_relative_periodic_domain(build_diagram(K(7, 3, 0)))
        assert set(dom.coefficients) == {0}
        assert len(set(dom.vertex_averages)) == 1
        assert dom.alpha_multiplicity == dom.beta_multiplicity == 0
        assert dom.n_w == 0

    def test_longitude_multiplicity_is_order(self):
        for knot in (K(4, 1, 2), K(5, 1, 1), K(12, 5, 8), K(9, 2, 0)):
            dom = solve_relative_periodic_domain(build_diagram(knot))
            assert dom.longitude_multiplicity == knot.order
            assert dom.n_w == 0

    def test_K511_coefficients_bounded(self):
        dom = solve_relative_periodic_domain(build_diagram(K(5, 1, 1)))
        assert max(abs(c) for c in dom.coefficients) <= 5

    def test_jump_equations_hold(self):
        # independent re-check of the defining equations of the solution
        for knot in (K(4, 1, 2), K(7, 2, 3), K(9, 4, 6)):
            d = build_diagram(knot)
            dom = solve_relative_periodic_domain(d)
            p, q = d.p, d.q
            c = dom.coefficients
            ell = dom.longitude_multiplicity
            for j in range(p):
                assert (c[j] - c[(j - 1) % p]
                        == -dom.beta_multiplicity + ell * dom.alpha_crossings[(j - 1) % p])
                assert (c[j] - c[(j - q) % p]
                        == dom.alpha_multiplicity - ell * dom.beta_crossings[(j - q) % p])


class TestAlexanderGradings:
    def test_reference_per_generator(self):
        data = alexander_gradings(K(4, 1, 2))
        assert [data.A[j] for j in range(4)] == [
            0, Fraction(1, 2), 0, Fraction(-1, 2)]
        assert data.a_max == Fraction(1, 2)
        assert data.chi_F == 0
        assert data.order == 2

    def test_unknot_all_zero(self):
        data = alexander_gradings(K(6, 1, 0))
        assert all(a == 0 for a in data.A.values())
        assert data.a_max == 0
        assert data.chi_F == 1  # disk
        assert data.order == 1

    def test_K511_multiset_versus_independent_oracle(self):
        # the d-difference side comes from the recursion, the grading side
        # from the diagram pipeline; they share no code
        data = alexander_gradings(K(5, 1, 1))
        oracle = sorted(x / 2 for x in two_tau_from_d(LensSpace(5, 1), 1))
        assert sorted(data.A.values()) == oracle

    def test_frac_part_bounds(self):
        data = alexander_gradings(K(9, 2, 6))
        for i, f in data.a_frac.items():
            assert Fraction(-1, 2) <= f < Fraction(1, 2)
            assert (data.tau[i] - f).denominator == 1

    def test_antisymmetry_guard_fires(self):
        with pytest.raises(InvariantViolationError):
            _normalize_gradings(
                [Fraction(0), Fraction(1), Fraction(0), Fraction(0)], "synthetic")


class TestTauTable:
    def test_reference_per_label(self):
        tau = tau_table(K(4, 1, 2))
        assert [tau[i] for i in range(4)] == [
            Fraction(1, 2), 0, Fraction(-1, 2), 0]

    def test_unknot(self):
        assert all(t == 0 for t in tau_table(K(5, 2, 0)).values())

    def test_K511_multiset(self):
        tau = tau_table(K(5, 1, 1))
        expect = [Fraction(2, 5), Fraction(-2, 5), Fraction(-1, 5), 0, Fraction(1, 5)]
        assert sorted(tau.values()) == sorted(expect)

    def test_label_assignment(self):
        assert generator_label(4, 0) == 3
        assert generator_label(4, 1) == 0


class TestTwoTauIdentity:
    def test_reference_knot(self):
        report = verify_two_tau_identity(K(4, 1, 2))
        assert report.passed
        assert report.doubled_gradings == report.d_differences
        assert sorted(report.doubled_gradings) == sorted(
            [0, Fraction(1), 0, Fraction(-1)])
        assert len(report.witness) == 4

    def test_unknot(self):
        report = verify_two_tau_identity(K(8, 3, 0))
        assert report.passed
        assert set(report.doubled_gradings) == {0}

    def test_small_sweep(self):
        for p in range(1, 13):
            qs = [0] if p == 1 else [q for q in range(1, p) if gcd(p, q) == 1]
            for q in qs:
                for k in range(p):
                    assert verify_two_tau_identity(K(p, q, k)).passed

    def test_per_label_chart(self):
        for p, q in [(7, 2), (9, 4), (11, 3), (12, 7)]:
            space = LensSpace(p, q)
            for k in range(p):
                tau = tau_table(SimpleKnot(space, k))
                rhs = two_tau_from_d(space, k)
                for i in range(p):
                    assert 2 * tau[i] == rhs[i], (p, q, k, i)

    def test_shift_before_conjugation_form(self):
        report = verify_two_tau_identity(K(7, 2, 3), shift_before_conjugation=True)
        assert report.passed
        assert report.identity_form == "d(s)-d(J(s+PD))"


class TestGradingInvariants:
    def test_mirror_negation(self):
        for p, q in [(7, 1), (9, 2), (10, 3)]:
            space = LensSpace(p, q)
            for k in range(p):
                a = sorted(alexander_gradings(SimpleKnot(space, k)).A.values())
                b = sorted(-x for x in alexander_gradings(
                    SimpleKnot(space, (p - k) % p)).A.values())
                assert a == b

    def test_integrality_and_mean(self):
        for knot in (K(9, 2, 3), K(11, 4, 5), K(12, 5, 9)):
            data = alexander_gradings(knot)
            assert sum(data.A.values()) == 0
            assert all((2 * data.order * a).denominator == 1 for a in data.A.values())

    def test_chi_ceiling(self):
        for p, q in [(6, 1), (7, 3), (8, 5)]:
            space = LensSpace(p, q)
            for k in range(p):
                data = alexander_gradings(SimpleKnot(space, k))
                assert data.chi_F <= 1
                if data.chi_F == 1:
                    # rational unknots: the Seifert surface is a disk
                    assert data.a_max == Fraction(data.order - 1, 2 * data.order)

    def test_tau_dominance(self):
        for knot in (K(8, 3, 2), K(9, 2, 6), K(10, 7, 5)):
            data = alexander_gradings(knot)
            for t in data.tau.values():
                assert 2 * t - 1 <= 2 * data.a_max - 1


class TestConnectedSum:
    def test_unknot_is_unit(self):
        base = alexander_gradings(K(4, 1, 2))
        unknot = alexander_gradings(K(1, 0, 0))
        summed = connected_sum_knot_data(base, unknot)
        assert summed.order == base.order
        assert summed.a_max == base.a_max
        assert summed.chi_F == base.chi_F
        assert sorted(summed.A.values()) == sorted(base.A.values())
        for s, t in base.tau.items():
            assert summed.tau[(s, 0)] == t

    def test_reference_square(self):
        base = alexander_gradings(K(4, 1, 2))
        summed = connected_sum_knot_data(base, base)
        assert summed.a_max == 1
        assert summed.order == 2
        # pairwise sums of the grading values
        expect = sorted(a1 + a2 for a1 in base.A.values() for a2 in base.A.values())
        assert sorted(summed.A.values()) == expect

    def test_tau_additivity(self):
        d1 = alexander_gradings(K(4, 1, 2))
        d2 = alexander_gradings(K(3, 1, 1))
        summed = connected_sum_knot_data(d1, d2)
        assert summed.order == 6
        for s1, t1 in d1.tau.items():
            for s2, t2 in d2.tau.items():
                assert summed.tau[(s1, s2)] == t1 + t2

    def test_sum_identity_against_product_tables(self):
        # the doubled-tau identity persists under connected sums when the
        # correction terms, conjugation and dual shift act componentwise
        from lensknot.lens import conjugate, correction_terms, pd_shift

        k1, k2 = K(4, 1, 2), K(2, 1, 1)
        summed = connected_sum_knot_data(
            alexander_gradings(k1), alexander_gradings(k2))
        s1, s2 = k1.space, k2.space
        t1, t2 = correction_terms(s1), correction_terms(s2)
        for i1 in s1.labels():
            for i2 in s2.labels():
                j1 = pd_shift(s1, conjugate(s1, i1), k1.k)
                j2 = pd_shift(s2, conjugate(s2, i2), k2.k)
                rhs = (t1[i1] + t2[i2]) - (t1[j1] + t2[j2])
                assert 2 * summed.tau[(i1, i2)] == rhs

    def test_json_only_for_single_knots(self):
        data = alexander_gradings(K(4, 1, 2))
        summed = connected_sum_knot_data(data, data)
        with pytest.raises(InvalidInputError):
            summed.to_json_dict()

    def test_json_form(self):
        assert alexander_gradings(K(4, 1, 2)).to_json_dict() == {
            "p": 4,
            "q": 1,
            "k": 2,
            "order": 2,
            "A": ["0/1", "1/2", "0/1", "-1/2"],
            "tau": ["1/2", "0/1", "-1/2", "0/1"],
            "a_max": "1/2",
            "chi_F": "0/1",
        }
