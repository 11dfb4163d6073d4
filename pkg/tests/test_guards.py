import itertools

import pytest

from idta import (GAnd, GAtom, GNot, GOr, TRUE, closed, dnf, guard_sat, interval,
                  lasso, last_dist)
from idta.errors import CapExceededError
from idta.guards import clause_to_guard, g_and_all, g_or_all, interval_vocabulary, operator_set
from idta.testkit import GenConfig, random_atom_pool, random_guard, random_lasso, rng_for

SIGMA1 = lasso([("a", 0), ("b", 1)], [("a", 2), ("b", 3)], 2)

I1 = closed(1, 1)
I2 = closed(1, 2)
ATOM1 = GAtom(I1, last_dist("a"))
ATOM2 = GAtom(I2, last_dist("a"))


class TestGuardSat:
    def test_true(self):
        assert guard_sat(TRUE, SIGMA1, 0)

    def test_conjunction_with_negation(self):
        g = GAnd(GAtom(I1, last_dist("a")), GNot(GAtom(interval(0, 1, False, False), last_dist("a"))))
        assert guard_sat(g, SIGMA1, 1)

    def test_not_true(self):
        assert not guard_sat(GNot(TRUE), SIGMA1, 5)


class TestDnf:
    def test_true_is_empty_conjunction(self):
        assert dnf(TRUE) == [frozenset()]

    def test_atom(self):
        assert dnf(ATOM1) == [frozenset({(True, ATOM1)})]

    def test_distribution_example(self):
        g = GAnd(GNot(ATOM1), GOr(ATOM2, TRUE))
        assert dnf(g) == [frozenset({(False, ATOM1), (True, ATOM2)}),
                          frozenset({(False, ATOM1)})]

    def test_contradictory_clause_dropped(self):
        g = GAnd(ATOM1, GNot(ATOM1))
        assert dnf(g) == []

    def test_cap(self):
        atoms = [GAtom(closed(n, n), last_dist("a")) for n in range(8)]
        g = atoms[0]
        for a in atoms[1:]:
            g = GAnd(GOr(g, GNot(g)), GOr(a, GNot(a)))
        with pytest.raises(CapExceededError):
            dnf(g, cap=16)

    def test_equivalence_truth_table_oracle(self):
        cfg = GenConfig(seed=7)
        for idx in range(80):
            rng = rng_for(cfg, idx)
            atoms = random_atom_pool(cfg, rng)
            g = random_guard(cfg, rng, atoms, depth=3)
            clauses = dnf(g)
            distinct = sorted({a for a in atoms}, key=str)
            for bits in itertools.product([False, True], repeat=len(distinct)):
                val = dict(zip(distinct, bits))
                direct = _eval_with(g, val)
                via_dnf = any(all(val[a] == sign for sign, a in cl) for cl in clauses)
                assert direct == via_dnf, (g, val)

    def test_dnf_agrees_with_guard_sat(self):
        cfg = GenConfig(seed=8)
        for idx in range(40):
            rng = rng_for(cfg, idx)
            word = random_lasso(cfg, rng)
            atoms = random_atom_pool(cfg, rng)
            g = random_guard(cfg, rng, atoms, depth=3)
            rebuilt = g_or_all([clause_to_guard(c) for c in dnf(g)])
            for i in range(6):
                assert guard_sat(g, word, i) == guard_sat(rebuilt, word, i)


def _eval_with(g, val):
    from idta.guards import GTrue
    if isinstance(g, GTrue):
        return True
    if isinstance(g, GAtom):
        return val[g]
    if isinstance(g, GNot):
        return not _eval_with(g.sub, val)
    if isinstance(g, GAnd):
        return _eval_with(g.left, val) and _eval_with(g.right, val)
    return _eval_with(g.left, val) or _eval_with(g.right, val)


class TestVocabulary:
    def test_intervals_and_operators(self):
        g = GAnd(ATOM1, GOr(ATOM2, GNOT := GNot(ATOM1)))
        assert interval_vocabulary(g) == (I1, I2)
        assert operator_set(g) == (last_dist("a"),)

    def test_formatting_round_shape(self):
        g = GOr(GAnd(GNot(ATOM1), ATOM2), TRUE)
        assert str(g) == "!([1,1] in last_a) & [1,2] in last_a | true"
