from fractions import Fraction

import pytest

from idta import (PositionSet, closed, eval_operator_guard, eval_recursive_operator,
                  fut_dist, interval, lasso, last_dist, next_dist, past_dist,
                  rec_fut, rec_past)
from idta.operators import OpKind, Operator, stable_grid
from idta.testkit import (GenConfig, brute_force_guard, random_lasso,
                          random_plain_operator, random_position_set, rng_for)
from idta.words import ValidationError

SIGMA1 = lasso([("a", 0), ("b", 1)], [("a", 2), ("b", 3)], 2)
ODD = PositionSet(1, 2, frozenset(), frozenset({0}))


class TestPlainOperators:
    def test_last_distance_one(self):
        assert eval_operator_guard(last_dist("a"), closed(1, 1), SIGMA1, 1)

    def test_last_empty_past(self):
        assert not eval_operator_guard(last_dist("a"), interval(0, None), SIGMA1, 0)

    def test_future_reflexive(self):
        assert eval_operator_guard(fut_dist("a"), closed(0, 0), SIGMA1, 0)

    def test_future_distance_one(self):
        assert eval_operator_guard(fut_dist("a"), closed(1, 1), SIGMA1, 1)

    def test_next_skips_interposed(self):
        # at position 0 the next a is at time 2, not any later one
        assert eval_operator_guard(next_dist("a"), closed(2, 2), SIGMA1, 0)
        assert not eval_operator_guard(next_dist("a"), closed(4, 4), SIGMA1, 0)

    def test_past_reflexive(self):
        assert eval_operator_guard(past_dist("b"), closed(0, 0), SIGMA1, 1)

    def test_unbounded_future_uses_period(self):
        # no 'c' anywhere: unbounded future must still terminate and say no
        assert not eval_operator_guard(fut_dist("c"), interval(0, None), SIGMA1, 0)
        assert eval_operator_guard(fut_dist("b"), interval(10, None), SIGMA1, 0)

    def test_recursive_requires_pos_set(self):
        with pytest.raises(ValidationError):
            eval_operator_guard(rec_fut(ODD), closed(0, 1), SIGMA1, 0)


class TestRecursiveOperators:
    def test_future_witness(self):
        assert eval_recursive_operator(rec_fut(ODD), ODD, closed(1, 1), SIGMA1, 0)

    def test_past_empty(self):
        assert not eval_recursive_operator(rec_past(ODD), ODD, interval(0, None), SIGMA1, 0)

    def test_unbounded_uses_periodic_part(self):
        assert eval_recursive_operator(rec_fut(ODD), ODD, interval(10, None), SIGMA1, 0)

    def test_finite_set_unbounded_interval(self):
        fin = PositionSet(3, 1, frozenset({1}), frozenset())
        assert eval_recursive_operator(rec_fut(fin), fin, interval(0, None), SIGMA1, 0)
        assert not eval_recursive_operator(rec_fut(fin), fin, interval(2, None), SIGMA1, 0)

    def test_rec_future_on_action_positions_equals_fut(self):
        cfg = GenConfig(seed=11)
        for idx in range(60):
            rng = rng_for(cfg, idx)
            word = random_lasso(cfg, rng)
            labelled_a = PositionSet(
                word.stem_len, word.period_len,
                frozenset(i for i in range(word.stem_len) if word.action(i) == "a"),
                frozenset(r for r in range(word.period_len)
                          if word.period[r][0] == "a"))
            ival = rng.choice(cfg.interval_pool)
            for i in range(6):
                got = eval_recursive_operator(rec_fut(labelled_a), labelled_a, ival, word, i)
                want = eval_operator_guard(fut_dist("a"), ival, word, i)
                assert got == want, (word, ival, i)


class TestOracleAgreement:
    def test_plain_operators_match_brute_force(self):
        cfg = GenConfig(seed=3)
        for idx in range(150):
            rng = rng_for(cfg, idx)
            word = random_lasso(cfg, rng)
            op = random_plain_operator(cfg, rng)
            ival = rng.choice(cfg.interval_pool)
            i = rng.randrange(0, 9)
            assert eval_operator_guard(op, ival, word, i) == \
                brute_force_guard(op, ival, word, i), (word, op, ival, i)

    def test_recursive_operators_match_brute_force(self):
        cfg = GenConfig(seed=4)
        for idx in range(150):
            rng = rng_for(cfg, idx)
            word = random_lasso(cfg, rng)
            pos = random_position_set(cfg, rng, word)
            kind = rng.choice([OpKind.REC_FUT, OpKind.REC_PAST])
            op = Operator(kind, None, pos)
            ival = rng.choice(cfg.interval_pool)
            i = rng.randrange(0, 9)
            assert eval_recursive_operator(op, pos, ival, word, i) == \
                brute_force_guard(op, ival, word, i, pos), (word, pos, ival, i)


def test_stable_grid_clearance():
    start, period, blocks = stable_grid(SIGMA1, [closed(1, 2), interval(2, None)], (), 3)
    assert start == 2 and period == 2
    assert blocks >= 3
    # endpoints up to 2 with shift 2 clear within one block; the floor is 3
    start, _, blocks = stable_grid(SIGMA1, [closed(0, 20)], (), 3)
    assert blocks >= 12
