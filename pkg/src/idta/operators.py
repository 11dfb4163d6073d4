"""The catalogue of input-determined operators and atomic guard evaluation.

An operator looks at a timed word and a position and determines the set of
intervals it satisfies there; the guard `I in op` holds when I is one of them.
The catalogue is closed: four distance operators parameterized by an action
(time since the last / to the next occurrence, some future / past occurrence)
and two recursive ones whose witnesses are drawn from a position set supplied
at evaluation time.
"""

import enum
from dataclasses import dataclass
from math import ceil

from .errors import UnresolvedBindingError, ValidationError
from .keys import canon_key
from .words import Interval, PositionSet, TimedLasso, align_periodic


class OpKind(enum.Enum):
    LAST_DIST = "last"   # time since the unique most recent occurrence of the action
    NEXT_DIST = "next"   # time to the unique next occurrence
    FUT_DIST = "fut"     # some future occurrence at a matching distance (reflexive)
    PAST_DIST = "past"   # some past occurrence at a matching distance (reflexive)
    REC_FUT = "F"        # some position-set member at or after the current position
    REC_PAST = "P"       # some position-set member at or before it

    @property
    def is_recursive(self):
        return self in (OpKind.REC_FUT, OpKind.REC_PAST)


@dataclass(frozen=True)
class Operator:
    """An operator binding: a kind plus its action or recursion parameter.

    Recursive kinds carry no action; their parameter is either an explicit
    PositionSet, the name of a registry entry, or a formula / floating
    automaton object resolved by the evaluation environment.
    """

    kind: OpKind
    action: object = None
    param: object = None

    def __post_init__(self):
        if self.kind.is_recursive:
            if self.action is not None:
                raise ValidationError(f"{self.kind.value} carries no action")
            if self.param is None:
                raise ValidationError(f"{self.kind.value} needs a parameter")
        else:
            if self.action is None:
                raise ValidationError(f"{self.kind.value} needs an action")
            if self.param is not None:
                raise ValidationError(f"{self.kind.value} takes no parameter")

    def token(self) -> str:
        if self.kind.is_recursive:
            name = self.param if isinstance(self.param, str) else "<inline>"
            return f"{self.kind.value}{{{name}}}"
        return f"{self.kind.value}_{self.action}"

    def sort_key(self):
        return (self.kind.value, canon_key(self.action), canon_key(self.param))

    def __str__(self):
        return self.token()


def last_dist(action) -> Operator:
    return Operator(OpKind.LAST_DIST, action)


def next_dist(action) -> Operator:
    return Operator(OpKind.NEXT_DIST, action)


def fut_dist(action) -> Operator:
    return Operator(OpKind.FUT_DIST, action)


def past_dist(action) -> Operator:
    return Operator(OpKind.PAST_DIST, action)


def rec_fut(param) -> Operator:
    return Operator(OpKind.REC_FUT, None, param)


def rec_past(param) -> Operator:
    return Operator(OpKind.REC_PAST, None, param)


class Env:
    """Resolves recursive operator parameters to PositionSets for a word.

    The base implementation handles explicit PositionSets and a dict of
    named sets; richer environments (registries of floating automata and
    formulas) live in the recursive module.
    """

    def __init__(self, named=None):
        self.named = dict(named or {})

    def resolve(self, param, word: TimedLasso) -> PositionSet:
        if isinstance(param, PositionSet):
            return param
        if isinstance(param, str):
            try:
                return self.named[param]
            except KeyError:
                raise UnresolvedBindingError(f"no binding named {param!r}") from None
        raise UnresolvedBindingError(f"cannot resolve parameter {param!r}")


EMPTY_ENV = Env()


def eval_operator_guard(op: Operator, ival: Interval, word: TimedLasso, i: int) -> bool:
    """Does the guard `ival in op` hold in word at position i? Non-recursive only."""
    if op.kind.is_recursive:
        raise ValidationError("recursive operator needs a position set; use eval_recursive_operator")
    t_i = word.time(i)
    if op.kind is OpKind.LAST_DIST:
        for j in range(i - 1, -1, -1):
            if word.action(j) == op.action:
                return ival.contains(t_i - word.time(j))
        return False
    if op.kind is OpKind.NEXT_DIST:
        limit = max(i + 1, word.stem_len) + word.period_len
        for j in range(i + 1, limit + 1):
            if word.action(j) == op.action:
                return ival.contains(word.time(j) - t_i)
        return False
    if op.kind is OpKind.FUT_DIST:
        if ival.hi is not None:
            j = i
            while word.time(j) <= t_i + ival.hi:
                if word.action(j) == op.action and ival.contains(word.time(j) - t_i):
                    return True
                j += 1
            return False
        limit = max(i, word.first_at_or_after(t_i + ival.lo), word.stem_len) + word.period_len
        for j in range(i, limit + 1):
            if word.action(j) == op.action and ival.contains(word.time(j) - t_i):
                return True
        return op.action in {a for a, _ in word.period}
    if op.kind is OpKind.PAST_DIST:
        for j in range(i, -1, -1):
            d = t_i - word.time(j)
            if ival.hi is not None and d > ival.hi:
                return False
            if word.action(j) == op.action and ival.contains(d):
                return True
        return False
    raise ValidationError(f"unknown operator kind {op.kind}")


def eval_recursive_operator(op: Operator, pos_set: PositionSet, ival: Interval,
                            word: TimedLasso, i: int) -> bool:
    """The recursive forms: witnesses range over the supplied position set."""
    if not op.kind.is_recursive:
        raise ValidationError("non-recursive operator takes no position set")
    t_i = word.time(i)
    if op.kind is OpKind.REC_FUT:
        if ival.hi is not None:
            j = i
            while word.time(j) <= t_i + ival.hi:
                if pos_set.member(j) and ival.contains(word.time(j) - t_i):
                    return True
                j += 1
            return False
        if pos_set.has_periodic_members:
            # members recur forever, so witnesses exist at unbounded distances
            return True
        top = pos_set.max_finite_member()
        if top is None:
            return False
        return any(pos_set.member(j) and ival.contains(word.time(j) - t_i)
                   for j in range(i, top + 1))
    # REC_PAST
    for j in range(i, -1, -1):
        d = t_i - word.time(j)
        if ival.hi is not None and d > ival.hi:
            return False
        if pos_set.member(j) and ival.contains(d):
            return True
    return False


def eval_atom(op: Operator, ival: Interval, word: TimedLasso, i: int,
              env: Env = EMPTY_ENV) -> bool:
    """Unified atom evaluation; recursive parameters resolved through env."""
    if op.kind.is_recursive:
        return eval_recursive_operator(op, env.resolve(op.param, word), ival, word, i)
    return eval_operator_guard(op, ival, word, i)


def max_relevant_endpoint(intervals):
    """The largest finite bound mentioned; drives stabilization horizons."""
    best = 0
    for ival in intervals:
        end = ival.hi if ival.hi is not None else ival.lo
        if end > best:
            best = end
    return best


def stable_grid(word: TimedLasso, intervals, pos_sets=(), min_blocks: int = 3):
    """Grid (start, period, blocks) on which built-in atom values repeat.

    Atom values at positions start + b*period .. are periodic once b is large
    enough that every bounded time window has cleared the stem; blocks is the
    number of period blocks to compute so the final two can be compared.
    """
    start, period = align_periodic(word, pos_sets)
    shift_per_block = word.shift * (period // word.period_len)
    clearance = ceil(max_relevant_endpoint(intervals) / shift_per_block)
    return start, period, max(min_blocks, clearance + 2)
