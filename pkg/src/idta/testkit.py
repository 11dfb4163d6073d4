"""Brute-force oracles and seeded random generators backing the test suites.

The oracle here transcribes the operator set definitions literally (explicit
witness-and-side-condition scans over an index window) and is kept
structurally independent of the evaluation code in `operators`.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .automata import Idta
from .buchi import BuchiAutomaton
from .guards import GAtom, GAnd, GNot, GOr, TRUE, Guard
from .alphabets import SymbolicLetter
from .operators import OpKind, Operator, last_dist, next_dist, fut_dist, past_dist
from .words import Interval, PositionSet, TimedLasso, interval


DEFAULT_POOL = (
    interval(0, 1, True, False),    # [0,1)
    interval(1, 1, True, True),     # [1,1]
    interval(1, 2, True, True),     # [1,2]
    interval(0, 1, False, False),   # (0,1)
    interval(2, None),              # [2,inf)
)


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    actions: tuple = ("a", "b")
    max_states: int = 3
    max_formula_depth: int = 3
    interval_pool: tuple = DEFAULT_POOL
    stem_max: int = 4
    period_max: int = 4
    max_atoms: int = 2
    strict_mono: bool = False

    def __post_init__(self):
        assert self.max_states > 0 and self.period_max > 0
        assert self.interval_pool


def rng_for(cfg: GenConfig, index: int) -> random.Random:
    # mix explicitly; never hash strings (hash randomization breaks determinism)
    return random.Random(cfg.seed * 1_000_003 + index)


# -- brute-force oracle -------------------------------------------------------


def _window_end(word: TimedLasso, i: int, ival: Interval) -> int:
    """Last index of the scan window: bounded intervals scan out to hi plus one
    period; right-open intervals scan one period beyond lo."""
    bound = ival.hi if ival.hi is not None else ival.lo
    j = i
    while word.time(j) <= word.time(i) + bound:
        j += 1
    return max(j, i + 1, word.stem_len) + word.period_len


def brute_force_guard(op: Operator, ival: Interval, word: TimedLasso, i: int,
                      pos_set: PositionSet = None) -> bool:
    """Literal transcription of the operator set definitions."""
    t = word.time
    a = word.action
    if op.kind is OpKind.LAST_DIST:
        return any(
            a(j) == op.action
            and ival.contains(t(i) - t(j))
            and all(a(k) != op.action for k in range(j + 1, i))
            for j in range(0, i))
    if op.kind is OpKind.NEXT_DIST:
        end = _window_end(word, i, ival)
        return any(
            a(j) == op.action
            and ival.contains(t(j) - t(i))
            and all(a(k) != op.action for k in range(i + 1, j))
            for j in range(i + 1, end + 1))
    if op.kind is OpKind.FUT_DIST:
        end = _window_end(word, i, ival)
        found = any(
            a(j) == op.action and ival.contains(t(j) - t(i))
            for j in range(i, end + 1))
        if found:
            return True
        if ival.hi is None:
            # any occurrence inside the period recurs at unbounded distances
            return any(x == op.action for x, _ in word.period)
        return False
    if op.kind is OpKind.PAST_DIST:
        return any(
            a(j) == op.action and ival.contains(t(i) - t(j))
            for j in range(0, i + 1))
    if op.kind is OpKind.REC_FUT:
        end = _window_end(word, i, ival)
        if any(pos_set.member(j) and ival.contains(t(j) - t(i))
               for j in range(i, end + 1)):
            return True
        return ival.hi is None and pos_set.has_periodic_members
    if op.kind is OpKind.REC_PAST:
        return any(
            pos_set.member(j) and ival.contains(t(i) - t(j))
            for j in range(0, i + 1))
    raise ValueError(f"unknown operator kind {op.kind}")


# -- random instances ---------------------------------------------------------


def random_lasso(cfg: GenConfig, rng: random.Random) -> TimedLasso:
    stem_len = rng.randrange(0, cfg.stem_max + 1)
    period_len = rng.randrange(1, cfg.period_max + 1)
    increments = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    if not cfg.strict_mono:
        increments = [Fraction(0)] + increments
    t = Fraction(rng.choice([0, 0, 1]))
    entries = []
    for _ in range(stem_len + period_len):
        entries.append((rng.choice(cfg.actions), t))
        t += rng.choice(increments)
    stem, period = entries[:stem_len], entries[stem_len:]
    span = period[-1][1] - period[0][1]
    shift = span + rng.choice([Fraction(1), Fraction(3, 2), Fraction(2)])
    return TimedLasso(tuple(stem), tuple(period), shift)


def random_plain_operator(cfg: GenConfig, rng: random.Random,
                          kinds=(OpKind.LAST_DIST, OpKind.NEXT_DIST,
                                 OpKind.FUT_DIST, OpKind.PAST_DIST)) -> Operator:
    return Operator(rng.choice(list(kinds)), rng.choice(cfg.actions))


def random_atom_pool(cfg: GenConfig, rng: random.Random, kinds=None) -> list:
    kinds = kinds or (OpKind.LAST_DIST, OpKind.NEXT_DIST)
    pool = []
    for _ in range(cfg.max_atoms):
        op = random_plain_operator(cfg, rng, kinds)
        pool.append(GAtom(rng.choice(cfg.interval_pool), op))
    return pool


def random_guard(cfg: GenConfig, rng: random.Random, atoms, depth=2) -> Guard:
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.15:
            return TRUE
        return rng.choice(atoms)
    kind = rng.choice(["and", "or", "not"])
    if kind == "not":
        return GNot(random_guard(cfg, rng, atoms, depth - 1))
    left = random_guard(cfg, rng, atoms, depth - 1)
    right = random_guard(cfg, rng, atoms, depth - 1)
    return GAnd(left, right) if kind == "and" else GOr(left, right)


def random_idta(cfg: GenConfig, rng: random.Random, kinds=None) -> Idta:
    """A random guard-labeled automaton with a bounded atom vocabulary."""
    n = rng.randrange(1, cfg.max_states + 1)
    atoms = random_atom_pool(cfg, rng, kinds)
    letters = []
    seen = set()
    for _ in range(2 * n + 2):
        letter = SymbolicLetter(rng.choice(cfg.actions),
                                random_guard(cfg, rng, atoms, depth=2))
        if letter not in seen:
            seen.add(letter)
            letters.append(letter)
    alphabet = tuple(sorted(letters, key=SymbolicLetter.sort_key))
    index = {letter: i for i, letter in enumerate(alphabet)}
    moves = []
    for q in range(n):
        entry = {}
        for _ in range(rng.randrange(1, 4)):
            li = index[rng.choice(alphabet)]
            dst = rng.randrange(n)
            entry[li] = tuple(sorted(set(entry.get(li, ())) | {dst}))
        moves.append(entry)
    accepting = {q for q in range(n) if rng.random() < 0.6}
    if not accepting:
        accepting = {rng.randrange(n)}
    buchi = BuchiAutomaton(n, 0, alphabet, moves, accepting)
    return Idta(buchi, cfg.actions)


def random_position_set(cfg: GenConfig, rng: random.Random, word: TimedLasso) -> PositionSet:
    stem_len = word.stem_len + rng.randrange(0, 2) * word.period_len
    period = word.period_len
    return PositionSet(
        stem_len, period,
        frozenset(i for i in range(stem_len) if rng.random() < 0.5),
        frozenset(r for r in range(period) if rng.random() < 0.5))


def random_instance(kind: str, cfg: GenConfig, index: int = 0):
    """Deterministic (seed, index)-addressed instance of the given kind."""
    rng = rng_for(cfg, index)
    if kind == "lasso":
        return random_lasso(cfg, rng)
    if kind == "idta":
        return random_idta(cfg, rng)
    if kind == "guard":
        return random_guard(cfg, rng, random_atom_pool(cfg, rng))
    raise ValueError(f"unknown instance kind {kind!r}")
