"""Guard ASTs over interval-operator atoms, satisfaction, and DNF."""

from dataclasses import dataclass

from .config import DEFAULT_LIMITS
from .errors import CapExceededError
from .keys import canon_sorted
from .operators import EMPTY_ENV, Env, Operator, eval_atom
from .words import Interval, TimedLasso


class Guard:
    pass


@dataclass(frozen=True)
class GTrue(Guard):
    def __str__(self):
        return "true"


@dataclass(frozen=True)
class GAtom(Guard):
    ival: Interval
    op: Operator

    def __str__(self):
        return f"{self.ival} in {self.op.token()}"


@dataclass(frozen=True)
class GNot(Guard):
    sub: Guard

    def __str__(self):
        return "!" + _fmt(self.sub, 3)


@dataclass(frozen=True)
class GAnd(Guard):
    left: Guard
    right: Guard

    def __str__(self):
        return f"{_fmt(self.left, 2)} & {_fmt(self.right, 2)}"


@dataclass(frozen=True)
class GOr(Guard):
    left: Guard
    right: Guard

    def __str__(self):
        return f"{_fmt(self.left, 1)} | {_fmt(self.right, 1)}"


_PREC = {GOr: 1, GAnd: 2, GNot: 3, GAtom: 4, GTrue: 4}


def _fmt(g, need):
    text = str(g)
    return text if _PREC[type(g)] >= need else f"({text})"


TRUE = GTrue()
FALSE = GNot(TRUE)


def g_and_all(guards):
    guards = [g for g in guards if not isinstance(g, GTrue)]
    if not guards:
        return TRUE
    out = guards[0]
    for g in guards[1:]:
        out = GAnd(out, g)
    return out


def g_or_all(guards):
    if not guards:
        return FALSE
    out = guards[0]
    for g in guards[1:]:
        out = GOr(out, g)
    return out


def guard_sat(g: Guard, word: TimedLasso, i: int, env: Env = EMPTY_ENV) -> bool:
    """Satisfaction of a guard at a word position (boolean evaluation of atoms)."""
    if isinstance(g, GTrue):
        return True
    if isinstance(g, GAtom):
        return eval_atom(g.op, g.ival, word, i, env)
    if isinstance(g, GNot):
        return not guard_sat(g.sub, word, i, env)
    if isinstance(g, GAnd):
        return guard_sat(g.left, word, i, env) and guard_sat(g.right, word, i, env)
    if isinstance(g, GOr):
        return guard_sat(g.left, word, i, env) or guard_sat(g.right, word, i, env)
    raise TypeError(f"not a guard: {g!r}")


def interval_vocabulary(g: Guard):
    """The finite set of intervals mentioned, in canonical order."""
    out = []
    seen = set()

    def walk(node):
        if isinstance(node, GAtom):
            if node.ival not in seen:
                seen.add(node.ival)
                out.append(node.ival)
        elif isinstance(node, GNot):
            walk(node.sub)
        elif isinstance(node, (GAnd, GOr)):
            walk(node.left)
            walk(node.right)

    walk(g)
    return tuple(sorted(out, key=Interval.sort_key))


def operator_set(g: Guard):
    """The operator bindings mentioned, in canonical order."""
    out = []
    seen = set()

    def walk(node):
        if isinstance(node, GAtom):
            if node.op not in seen:
                seen.add(node.op)
                out.append(node.op)
        elif isinstance(node, GNot):
            walk(node.sub)
        elif isinstance(node, (GAnd, GOr)):
            walk(node.left)
            walk(node.right)

    walk(g)
    return tuple(sorted(out, key=Operator.sort_key))


def dnf(g: Guard, cap: int = DEFAULT_LIMITS.dnf_cap):
    """Disjunctive normal form: a list of clauses, each a frozenset of signed
    atoms (sign True for positive).  An empty clause is the true conjunct;
    an empty list is false.  Clauses with complementary literals are dropped,
    duplicate clauses keep their first position; no further minimization.
    """
    clauses = _dnf(g, False, cap)
    out, seen = [], set()
    for c in clauses:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def _dnf(g, negated, cap):
    if isinstance(g, GTrue):
        return [] if negated else [frozenset()]
    if isinstance(g, GAtom):
        return [frozenset({(not negated, g)})]
    if isinstance(g, GNot):
        return _dnf(g.sub, not negated, cap)
    if isinstance(g, (GAnd, GOr)):
        distribute = isinstance(g, GAnd) != negated
        left = _dnf(g.left, negated, cap)
        right = _dnf(g.right, negated, cap)
        if not distribute:
            return left + right
        out = []
        for cl in left:
            for cr in right:
                merged = cl | cr
                if any((not sign, atom) in merged for sign, atom in merged if sign):
                    continue
                out.append(merged)
                if len(out) > cap:
                    raise CapExceededError("DNF clause", cap)
        return out
    raise TypeError(f"not a guard: {g!r}")


def clause_to_guard(clause) -> Guard:
    """Rebuild a conjunctive guard from a signed-atom clause (canonical order)."""
    literals = canon_sorted(clause)
    return g_and_all([atom if sign else GNot(atom) for sign, atom in literals])
