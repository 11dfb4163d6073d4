from fractions import Fraction

import pytest

from idta import (Interval, PositionSet, TimedLasso, ValidationError, closed,
                  interval, lasso, mark_position)
from idta.testkit import GenConfig, random_lasso, rng_for
from idta.words import align_periodic


SIGMA1 = lasso([("a", 0), ("b", 1)], [("a", 2), ("b", 3)], 2)


class TestInterval:
    def test_contains_unbounded(self):
        assert interval(2, None).contains(Fraction(2))
        assert interval(2, None).contains(Fraction(100))
        assert not interval(2, None).contains(Fraction(3, 2))

    def test_open_left_endpoint(self):
        assert not interval(0, 1, False, False).contains(Fraction(0))

    def test_interior_point(self):
        assert closed(1, 2).contains(Fraction(3, 2))

    def test_singular(self):
        assert closed(1, 1).is_singular
        assert not closed(1, 2).is_singular
        with pytest.raises(ValidationError):
            interval(1, 1, True, False)

    def test_bad_bounds(self):
        with pytest.raises(ValidationError):
            closed(2, 1)
        with pytest.raises(ValidationError):
            closed(-1, 1)
        with pytest.raises(ValidationError):
            Interval(Fraction(0), None, True, True)

    def test_str_round_shapes(self):
        assert str(interval(1, 2, True, False)) == "[1,2)"
        assert str(interval(0, None)) == "[0,inf)"


class TestTimedLasso:
    def test_position_times(self):
        assert SIGMA1.time(0) == 0
        assert SIGMA1.time(4) == 4  # unroll one repetition: 2 + 1*2
        assert SIGMA1.time(7) == 7  # 3 + 2*2
        assert SIGMA1.action(4) == "a"
        assert SIGMA1.action(7) == "b"

    def test_monotone_violation_reported(self):
        with pytest.raises(ValidationError, match="weakly increase"):
            lasso([("a", 1), ("a", 0)], [("a", 2)], 1)

    def test_zero_shift_rejected(self):
        with pytest.raises(ValidationError, match="progressiveness"):
            lasso([], [("a", 0)], 0)

    def test_wrap_violation(self):
        with pytest.raises(ValidationError, match="wrap"):
            lasso([], [("a", 0), ("a", 5)], 2)

    def test_unrolled_preserves_positions(self):
        big = SIGMA1.unrolled(7)
        assert big.stem_len >= 7
        for i in range(16):
            assert big.at(i) == SIGMA1.at(i)

    def test_progressive_witness(self):
        t = Fraction(1000)
        i = SIGMA1.first_at_or_after(t + 1)
        assert SIGMA1.time(i) > t

    def test_monotone_everywhere_sampled(self):
        cfg = GenConfig(seed=5)
        for idx in range(40):
            w = random_lasso(cfg, rng_for(cfg, idx))
            for i in range(25):
                assert w.time(i) <= w.time(i + 1)


class TestFloating:
    def test_mark_must_be_single(self):
        fl = mark_position(SIGMA1, 3)
        assert fl.mark == 3
        word = fl.word
        assert word.action(3) == ("b", 1)
        assert word.action(2) == ("a", 0)
        assert all(word.action(i)[1] == 0 for i in range(8) if i != 3)
        assert fl.base_word.at(5) == SIGMA1.at(5)

    def test_mark_deep_in_period(self):
        fl = mark_position(SIGMA1, 9)
        assert fl.word.stem_len >= 10
        assert fl.word.action(9) == ("b", 1)
        assert fl.base_word.time(9) == SIGMA1.time(9)


class TestPositionSet:
    def test_membership_periodicity(self):
        odd = PositionSet(1, 2, frozenset(), frozenset({0}))
        assert [i for i in range(8) if odd.member(i)] == [1, 3, 5, 7]
        for i in range(1, 30):
            assert odd.member(i) == odd.member(i + 2)

    def test_from_prefix_requires_agreement(self):
        vals = [True, False, True, False, True]
        ps = PositionSet.from_prefix(vals, 1, 2)
        assert ps.member(0) and not ps.member(1) and ps.member(2)
        from idta import StabilizationError
        with pytest.raises(StabilizationError):
            PositionSet.from_prefix([True, True, False, False, True], 1, 2)

    def test_align(self):
        other = PositionSet(5, 3, frozenset({0, 2}), frozenset({1}))
        start, period = align_periodic(SIGMA1, [other])
        assert start >= 5 and period % 2 == 0 and period % 3 == 0
