"""Exact-rational time values, intervals, and ultimately periodic timed words.

Timestamps are `fractions.Fraction` throughout; guard satisfaction at interval
endpoints must be bit-exact, so no floats appear anywhere in the semantics.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm

from .errors import StabilizationError, ValidationError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, strings like '7/10' or '1.5', and Fractions. No floats."""
    if isinstance(value, float):
        raise ValidationError(f"refusing float time value {value!r}; use Fraction or a string")
    return Fraction(value)


@dataclass(frozen=True)
class Interval:
    """A rational-bounded interval; hi=None stands for an open +infinity end."""

    lo: Fraction
    hi: Fraction | None
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo < 0:
            raise ValidationError(f"interval lower bound must be >= 0, got {self.lo}")
        if self.hi is None:
            if self.hi_closed:
                raise ValidationError("an infinite right end must be open")
        elif self.lo > self.hi:
            raise ValidationError(f"empty interval: lo {self.lo} > hi {self.hi}")
        elif self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValidationError(f"degenerate interval [{self.lo},{self.hi}] needs both ends closed")

    def contains(self, q: Fraction) -> bool:
        if q < self.lo or (q == self.lo and not self.lo_closed):
            return False
        if self.hi is None:
            return True
        if q > self.hi or (q == self.hi and not self.hi_closed):
            return False
        return True

    @property
    def is_singular(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    @property
    def is_unbounded(self) -> bool:
        return self.hi is None

    def sort_key(self):
        return (self.lo, self.hi is None, self.hi if self.hi is not None else Fraction(0),
                not self.lo_closed, not self.hi_closed)

    def __str__(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{left}{self.lo},{hi}{right}"


def interval(lo, hi, lo_closed=True, hi_closed=True) -> Interval:
    """Shorthand constructor; `hi=None` or the string 'inf' means +infinity."""
    if hi in (None, "inf"):
        return Interval(as_rational(lo), None, lo_closed, False)
    return Interval(as_rational(lo), as_rational(hi), lo_closed, hi_closed)


def closed(lo, hi) -> Interval:
    return interval(lo, hi, True, True)


@dataclass(frozen=True)
class TimedLasso:
    """An ultimately periodic timed word: finite stem, repeating period.

    The k-th repetition of the period adds k * shift to its stated times, so
    position i >= len(stem) has time period[(i - S) % p].time + ((i - S) // p) * shift.
    shift > 0 makes the word progressive (times grow without bound).
    """

    stem: tuple
    period: tuple
    shift: Fraction

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple((a, as_rational(t)) for a, t in self.stem))
        object.__setattr__(self, "period", tuple((a, as_rational(t)) for a, t in self.period))
        object.__setattr__(self, "shift", as_rational(self.shift))
        problem = self.check()
        if problem is not None:
            raise ValidationError(problem)

    def check(self) -> str | None:
        """Return a description of the first invariant violation, or None."""
        if not self.period:
            return "period must be non-empty"
        if self.shift <= 0:
            return f"period shift must be positive (progressiveness), got {self.shift}"
        seq = list(self.stem) + list(self.period)
        if seq[0][1] < 0:
            return f"times must be non-negative, got {seq[0][1]} at position 0"
        for i in range(len(seq) - 1):
            if seq[i][1] > seq[i + 1][1]:
                return (f"times must weakly increase: position {i} has {seq[i][1]}, "
                        f"position {i + 1} has {seq[i + 1][1]}")
        if self.period[-1][1] > self.period[0][1] + self.shift:
            return (f"period wrap violates monotonicity: last period time {self.period[-1][1]} "
                    f"> first period time + shift = {self.period[0][1] + self.shift}")
        return None

    @property
    def stem_len(self) -> int:
        return len(self.stem)

    @property
    def period_len(self) -> int:
        return len(self.period)

    def action(self, i: int):
        if i < len(self.stem):
            return self.stem[i][0]
        k, r = divmod(i - len(self.stem), len(self.period))
        return self.period[r][0]

    def time(self, i: int) -> Fraction:
        if i < len(self.stem):
            return self.stem[i][1]
        k, r = divmod(i - len(self.stem), len(self.period))
        return self.period[r][1] + k * self.shift

    def at(self, i: int):
        return (self.action(i), self.time(i))

    def actions(self) -> frozenset:
        return frozenset(a for a, _ in self.stem) | frozenset(a for a, _ in self.period)

    def unrolled(self, min_stem: int) -> "TimedLasso":
        """Equivalent word whose stem covers at least positions [0, min_stem)."""
        if min_stem <= len(self.stem):
            return self
        reps = -(-(min_stem - len(self.stem)) // len(self.period))
        stem = list(self.stem)
        for k in range(reps):
            stem.extend((a, t + k * self.shift) for a, t in self.period)
        period = tuple((a, t + reps * self.shift) for a, t in self.period)
        return TimedLasso(tuple(stem), period, self.shift)

    def map_actions(self, f) -> "TimedLasso":
        return TimedLasso(tuple((f(a), t) for a, t in self.stem),
                          tuple((f(a), t) for a, t in self.period), self.shift)

    def first_at_or_after(self, t: Fraction) -> int:
        """Least position i with time(i) >= t (exists by progressiveness)."""
        i = 0
        while self.time(i) < t:
            i += 1
        return i

    def __str__(self):
        fmt = lambda part: " ".join(f"{a}@{t}" for a, t in part)
        return f"stem: {fmt(self.stem)} | period: {fmt(self.period)} | shift: {self.shift}"


def lasso(stem, period, shift) -> TimedLasso:
    """Build a TimedLasso from (action, time) pairs with mixed time formats."""
    return TimedLasso(tuple(stem), tuple(period), shift)


@dataclass(frozen=True)
class FloatingLasso:
    """A timed word over Sigma x {0,1} carrying a single 1, at a stem position.

    Words whose mark would fall inside the period are re-encoded by unrolling
    repetitions into the stem first; a single 1 cannot recur periodically.
    """

    word: TimedLasso
    mark: int

    def __post_init__(self):
        if not (0 <= self.mark < self.word.stem_len):
            raise ValidationError(f"mark {self.mark} must lie in the stem "
                                  f"(stem length {self.word.stem_len})")
        for i in range(self.word.stem_len):
            a = self.word.action(i)
            if not (isinstance(a, tuple) and len(a) == 2 and a[1] in (0, 1)):
                raise ValidationError(f"floating word actions must be (action, bit) pairs, got {a!r}")
            if (a[1] == 1) != (i == self.mark):
                raise ValidationError(f"bit at position {i} inconsistent with mark {self.mark}")
        for a, _ in self.word.period:
            if a[1] != 0:
                raise ValidationError("the period of a floating word must carry bit 0 throughout")

    @property
    def base_word(self) -> TimedLasso:
        return self.word.map_actions(lambda a: a[0])


def mark_position(word: TimedLasso, i: int) -> FloatingLasso:
    """Encode the pair (word, i) as a timed word over Sigma x {0,1}."""
    if i < 0:
        raise ValidationError(f"mark position must be a natural number, got {i}")
    unrolled = word.unrolled(i + 1)
    marked = TimedLasso(
        tuple((((a, 1) if j == i else (a, 0)), t) for j, (a, t) in enumerate(unrolled.stem)),
        tuple(((a, 0), t) for a, t in unrolled.period),
        unrolled.shift,
    )
    return FloatingLasso(marked, i)


@dataclass(frozen=True)
class PositionSet:
    """An eventually periodic set of word positions.

    Membership of i >= stem_len depends only on (i - stem_len) mod period.
    """

    stem_len: int
    period: int
    stem_members: frozenset
    period_members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "stem_members", frozenset(self.stem_members))
        object.__setattr__(self, "period_members", frozenset(self.period_members))
        if self.period < 1:
            raise ValidationError("period must be >= 1")
        if self.stem_len < 0:
            raise ValidationError("stem_len must be >= 0")
        bad = [i for i in self.stem_members if not (0 <= i < self.stem_len)]
        if bad:
            raise ValidationError(f"stem members out of range: {sorted(bad)}")
        bad = [r for r in self.period_members if not (0 <= r < self.period)]
        if bad:
            raise ValidationError(f"period offsets out of range: {sorted(bad)}")

    def member(self, i: int) -> bool:
        if i < self.stem_len:
            return i in self.stem_members
        return (i - self.stem_len) % self.period in self.period_members

    @property
    def has_periodic_members(self) -> bool:
        return bool(self.period_members)

    def members_up_to(self, n: int):
        """Sorted members below n."""
        return [i for i in range(n) if self.member(i)]

    def is_empty(self) -> bool:
        return not self.stem_members and not self.period_members

    def max_finite_member(self) -> int | None:
        """Largest member when the set is finite, else None."""
        if self.period_members:
            return None
        return max(self.stem_members) if self.stem_members else None

    def canonical_key(self):
        return (self.stem_len, self.period,
                tuple(sorted(self.stem_members)), tuple(sorted(self.period_members)))

    @classmethod
    def from_prefix(cls, values, stem_len: int, period: int, what: str = "position set"):
        """Package a truth prefix of length >= stem_len + 2*period.

        The last two period blocks must agree, otherwise the pattern has not
        stabilized and the packaging would be unsound.
        """
        need = stem_len + 2 * period
        if len(values) < need:
            raise ValidationError(f"need {need} values, got {len(values)}")
        block1 = list(values[stem_len:stem_len + period])
        block2 = list(values[stem_len + period:stem_len + 2 * period])
        if block1 != block2:
            raise StabilizationError(what, 2)
        return cls(stem_len, period,
                   frozenset(i for i in range(stem_len) if values[i]),
                   frozenset(r for r in range(period) if block1[r]))

    @classmethod
    def everything(cls):
        return cls(0, 1, frozenset(), frozenset({0}))

    @classmethod
    def nothing(cls):
        return cls(0, 1, frozenset(), frozenset())


def align_periodic(word: TimedLasso, sets=()):
    """Common (start, period) grid for a word and several PositionSets.

    Every component is periodic on positions >= start with the returned
    period (a common multiple of all the individual periods).
    """
    p = word.period_len
    start = word.stem_len
    for s in sets:
        p = lcm(p, s.period)
        start = max(start, s.stem_len)
    return start, p
