"""Symbolic and proper symbolic alphabets, canonical symbolic words, and
membership of timed words in symbolic lassos.

A symbolic letter pairs an action with a guard.  A proper letter instead
records, per operator, the exact subset of a fixed interval vocabulary the
operator satisfies; a timed word then matches exactly one proper letter per
position, which is what makes proper alphabets deterministic with respect to
timed words.
"""

from dataclasses import dataclass
from itertools import combinations
from math import lcm

from .buchi import LetterLasso
from .config import DEFAULT_LIMITS, Limits
from .errors import AlphabetMismatchError, CapExceededError, StabilizationError
from .guards import Guard, guard_sat, interval_vocabulary, operator_set
from .keys import canon_key
from .operators import EMPTY_ENV, Env, Operator, eval_atom, stable_grid
from .words import Interval, TimedLasso


@dataclass(frozen=True)
class SymbolicLetter:
    action: object
    guard: Guard

    def matches(self, word: TimedLasso, i: int, env: Env = EMPTY_ENV,
                op_word: TimedLasso = None) -> bool:
        return (word.action(i) == self.action
                and guard_sat(self.guard, op_word or word, i, env))

    def sort_key(self):
        return (canon_key(self.action), canon_key(self.guard))

    def __str__(self):
        return f"({self.action}, {self.guard})"


@dataclass(frozen=True)
class ProperLetter:
    """(action, h) where h maps each operator to the exact satisfied subset
    of the alphabet's interval vocabulary."""

    action: object
    h: tuple  # sorted tuple of (Operator, frozenset of Interval)
    ivoc: frozenset

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(sorted(self.h, key=lambda kv: kv[0].sort_key())))
        object.__setattr__(self, "ivoc", frozenset(self.ivoc))

    def h_map(self):
        return dict(self.h)

    @property
    def operators(self):
        return tuple(op for op, _ in self.h)

    def matches(self, word: TimedLasso, i: int, env: Env = EMPTY_ENV,
                op_word: TimedLasso = None) -> bool:
        if word.action(i) != self.action:
            return False
        gword = op_word or word
        for op, sat in self.h:
            for ival in self.ivoc:
                if (ival in sat) != eval_atom(op, ival, gword, i, env):
                    return False
        return True

    def sort_key(self):
        return (canon_key(self.action),
                tuple((op.sort_key(), tuple(sorted(sat, key=Interval.sort_key)))
                      for op, sat in self.h))

    def __str__(self):
        parts = ", ".join(
            f"{op.token()}->{{{','.join(str(v) for v in sorted(sat, key=Interval.sort_key))}}}"
            for op, sat in self.h)
        return f"({self.action}, {{{parts}}})"


@dataclass(frozen=True)
class ProperAlphabet:
    """Sigma x (Op -> 2^Ivoc) as an explicit, deterministically ordered set."""

    sigma: tuple
    ops: tuple
    ivoc: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(sorted(set(self.sigma), key=canon_key)))
        object.__setattr__(self, "ops", tuple(sorted(set(self.ops), key=Operator.sort_key)))
        object.__setattr__(self, "ivoc", tuple(sorted(set(self.ivoc), key=Interval.sort_key)))

    @property
    def ivoc_set(self):
        return frozenset(self.ivoc)

    def letter_count(self) -> int:
        return len(self.sigma) * (2 ** (len(self.ops) * len(self.ivoc)))

    def letters(self, cap: int = 1_000_000):
        """All proper letters in canonical order."""
        if self.letter_count() > cap:
            raise CapExceededError("proper alphabet letters", cap, self.letter_count())
        subsets = []
        for r in range(len(self.ivoc) + 1):
            subsets.extend(frozenset(c) for c in combinations(self.ivoc, r))
        out = []
        for action in self.sigma:
            for assignment in _assignments(self.ops, subsets):
                out.append(ProperLetter(action, assignment, self.ivoc_set))
        return sorted(out, key=ProperLetter.sort_key)

    def letter(self, action, h_map) -> ProperLetter:
        h = tuple((op, frozenset(h_map.get(op, frozenset()))) for op in self.ops)
        return ProperLetter(action, h, self.ivoc_set)

    def canonical_letter(self, word: TimedLasso, i: int, env: Env = EMPTY_ENV,
                         op_word: TimedLasso = None) -> ProperLetter:
        """The unique letter matching the word at position i."""
        action = word.action(i)
        if action not in self.sigma:
            raise AlphabetMismatchError(
                f"no proper letter matches action {action!r} at position {i}")
        gword = op_word or word
        h = tuple((op, frozenset(v for v in self.ivoc if eval_atom(op, v, gword, i, env)))
                  for op in self.ops)
        return ProperLetter(action, h, self.ivoc_set)


def _assignments(ops, subsets):
    if not ops:
        yield ()
        return
    for rest in _assignments(ops[1:], subsets):
        for s in subsets:
            yield ((ops[0], s),) + rest


def _resolved_pos_sets(ops, word, env):
    return [env.resolve(op.param, word) for op in ops if op.kind.is_recursive]


def canonical_word(alpha: ProperAlphabet, word: TimedLasso, env: Env = EMPTY_ENV,
                   limits: Limits = DEFAULT_LIMITS, op_word: TimedLasso = None) -> LetterLasso:
    """The unique symbolic lasso over a proper alphabet containing the word.

    Letters are computed position by position over the stem plus enough period
    blocks for the pattern to clear every bounded time window; the last two
    blocks must agree letterwise or a StabilizationError is raised.
    """
    pos_sets = _resolved_pos_sets(alpha.ops, op_word or word, env)
    start, period, blocks = stable_grid(word, alpha.ivoc, pos_sets, limits.stabilize_k)
    horizon = start + blocks * period
    letters = [alpha.canonical_letter(word, i, env, op_word) for i in range(horizon)]
    last = letters[horizon - period:]
    prev = letters[horizon - 2 * period:horizon - period]
    if last != prev:
        raise StabilizationError("canonical symbolic word", blocks)
    cut = start + (blocks - 2) * period
    return LetterLasso(tuple(letters[:cut]), tuple(letters[cut:cut + period]))


def _letters_vocabulary(lasso: LetterLasso):
    intervals, ops = [], []
    seen_i, seen_o = set(), set()
    for letter in lasso.stem + lasso.period:
        if isinstance(letter, ProperLetter):
            livoc = sorted(letter.ivoc, key=Interval.sort_key)
            lops = letter.operators
        else:
            livoc = interval_vocabulary(letter.guard)
            lops = operator_set(letter.guard)
        for v in livoc:
            if v not in seen_i:
                seen_i.add(v)
                intervals.append(v)
        for op in lops:
            if op not in seen_o:
                seen_o.add(op)
                ops.append(op)
    return intervals, ops


def symbolic_tw_membership(lasso: LetterLasso, word: TimedLasso, proper: bool = None,
                           env: Env = EMPTY_ENV, limits: Limits = DEFAULT_LIMITS,
                           op_word: TimedLasso = None) -> bool:
    """Is the timed word a member of tw(lasso)?

    Plain symbolic letters require the action to match and the guard to hold
    at every position; proper letters require the exact satisfied-interval
    sets.  Checks run over the stem plus stabilized period blocks of the
    combined (lasso, word) structure.
    """
    if proper is None:
        proper = isinstance(lasso.letter(0), ProperLetter)
    intervals, ops = _letters_vocabulary(lasso)
    pos_sets = _resolved_pos_sets(ops, op_word or word, env)
    start, period, blocks = stable_grid(word, intervals, pos_sets, limits.stabilize_k)
    period = lcm(period, lasso.period_len)
    start = max(start, lasso.stem_len)
    horizon = start + blocks * period
    for i in range(horizon):
        letter = lasso.letter(i)
        if proper and not isinstance(letter, ProperLetter):
            raise AlphabetMismatchError("proper membership asked on a non-proper letter")
        if not letter.matches(word, i, env, op_word):
            return False
    return True
