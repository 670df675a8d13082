from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lensknot.errors import InvalidInputError
from lensknot.lens import (
    CorrectionTable,
    LensSpace,
    conjugate,
    connected_sum_d,
    correction_terms,
    pd_shift,
    two_tau_from_d,
)


def coprime_spaces(p_max):
    for p in range(1, p_max + 1):
        if p == 1:
            yield LensSpace(1, 0)
        else:
            for q in range(1, p):
                if gcd(p, q) == 1:
                    yield LensSpace(p, q)


space_strategy = st.builds(
    lambda pair: LensSpace(*pair),
    st.sampled_from([(s.p, s.q) for s in coprime_spaces(25)]),
)


class TestLensSpace:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            LensSpace(4, 2)
        with pytest.raises(InvalidInputError):
            LensSpace(0, 0)
        with pytest.raises(InvalidInputError):
            LensSpace(6, 3)

    def test_sphere(self):
        assert LensSpace(1, 0).p == 1
        assert LensSpace(1, 5).q == 0  # q is normalized mod p

    def test_q_normalization(self):
        assert LensSpace(4, 5).q == 1
        assert LensSpace(4, -1).q == 3


class TestCorrectionTerms:
    def test_L41_per_index(self):
        # closed form ((2i-4)^2 - 4) / 16 evaluated by hand
        t = correction_terms(LensSpace(4, 1))
        assert t.d == (Fraction(3, 4), 0, Fraction(-1, 4), 0)

    def test_L41_multiset(self):
        t = correction_terms(LensSpace(4, 1))
        assert sorted(t.d) == sorted([Fraction(3, 4), 0, Fraction(-1, 4), 0])

    def test_sphere(self):
        assert correction_terms(LensSpace(1, 0)).d == (0,)

    def test_L21(self):
        # closed form ((2i-2)^2 - 2) / 8
        assert correction_terms(LensSpace(2, 1)).d == (Fraction(1, 4), Fraction(-1, 4))

    def test_closed_form_q1(self):
        for p in range(2, 80):
            t = correction_terms(LensSpace(p, 1))
            for i in range(p):
                assert t[i] == Fraction((2 * i - p) ** 2 - p, 4 * p)

    def test_conjugation_symmetry(self):
        for space in coprime_spaces(40):
            t = correction_terms(space)
            for i in space.labels():
                assert t[i] == t[conjugate(space, i)]

    def test_json_form(self):
        t = correction_terms(LensSpace(4, 1))
        assert t.to_json_dict() == {
            "p": 4,
            "q": 1,
            "d": ["3/4", "0/1", "-1/4", "0/1"],
        }


class TestConjugatePdShift:
    def test_conjugate_examples(self):
        assert conjugate(LensSpace(4, 1), 1) == 3
        assert conjugate(LensSpace(4, 1), 0) == 0
        assert conjugate(LensSpace(2, 1), 1) == 1

    def test_pd_shift_examples(self):
        assert pd_shift(LensSpace(4, 1), 3, 2) == 1
        assert pd_shift(LensSpace(7, 2), 4, 0) == 4
        assert pd_shift(LensSpace(5, 1), 4, 1) == 0

    def test_label_validation(self):
        with pytest.raises(InvalidInputError):
            conjugate(LensSpace(4, 1), 4)
        with pytest.raises(InvalidInputError):
            pd_shift(LensSpace(4, 1), -1, 0)

    @given(space_strategy, st.data())
    def test_conjugate_involution(self, space, data):
        i = data.draw(st.integers(0, space.p - 1))
        assert conjugate(space, conjugate(space, i)) == i

    @given(space_strategy, st.data())
    def test_pd_shift_inverse(self, space, data):
        i = data.draw(st.integers(0, space.p - 1))
        k = data.draw(st.integers(-50, 50))
        assert pd_shift(space, pd_shift(space, i, k), -k) == i


class TestTwoTauFromD:
    def test_L41_k2(self):
        vals = two_tau_from_d(LensSpace(4, 1), 2)
        assert sorted(vals) == sorted([0, Fraction(1), 0, Fraction(-1)])

    def test_zero_shift_vanishes(self):
        for space in (LensSpace(4, 1), LensSpace(7, 2), LensSpace(9, 4)):
            assert all(x == 0 for x in two_tau_from_d(space, 0))

    def test_L51_k1(self):
        # recursion closed form d(5,1,i) = ((2i-5)^2 - 5)/20 plus J and shift,
        # evaluated by hand
        vals = two_tau_from_d(LensSpace(5, 1), 1)
        expect = [Fraction(4, 5), Fraction(-4, 5), Fraction(-2, 5), 0, Fraction(2, 5)]
        assert sorted(vals) == sorted(expect)

    def test_multiset_antisymmetric(self):
        for space in coprime_spaces(20):
            for k in range(space.p):
                vals = two_tau_from_d(space, k)
                assert sorted(vals) == sorted(-x for x in vals)

    def test_shift_before_conjugation_same_multiset(self):
        for space in coprime_spaces(15):
            for k in range(space.p):
                std = two_tau_from_d(space, k)
                alt = two_tau_from_d(space, k, shift_before_conjugation=True)
                assert sorted(std) == sorted(alt)

    def test_shift_before_conjugation_differs_per_label(self):
        std = two_tau_from_d(LensSpace(5, 1), 1)
        alt = two_tau_from_d(LensSpace(5, 1), 1, shift_before_conjugation=True)
        assert std != alt  # attribution moves even though the multiset does not


class TestConnectedSumD:
    def test_rp3_pair(self):
        t = correction_terms(LensSpace(2, 1))
        summed = connected_sum_d([t, t])
        assert summed[(0, 0)] == Fraction(1, 2)

    def test_sphere_is_unit(self):
        t = correction_terms(LensSpace(4, 1))
        s3 = correction_terms(LensSpace(1, 0))
        summed = connected_sum_d([t, s3])
        assert {a: v for (a, _), v in summed.items()} == dict(enumerate(t.d))

    def test_L41_L21(self):
        summed = connected_sum_d(
            [correction_terms(LensSpace(4, 1)), correction_terms(LensSpace(2, 1))])
        assert summed[(2, 1)] == Fraction(-1, 2)

    def test_needs_two(self):
        with pytest.raises(InvalidInputError):
            connected_sum_d([correction_terms(LensSpace(2, 1))])


def test_table_invariant_guard():
    from lensknot.errors import InvariantViolationError

    space = LensSpace(4, 1)
    with pytest.raises(InvariantViolationError):
        CorrectionTable(space, (Fraction(1), 0, 0, 0))
