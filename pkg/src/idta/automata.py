"""Timed automata with input-determined guards: Buchi automata over symbolic
letters, timed membership, and the conversions between guard-labeled and
proper alphabets."""

from itertools import combinations

from .buchi import BuchiAutomaton, complement, intersection, union
from .config import DEFAULT_LIMITS, Limits
from .errors import StabilizationError, ValidationError
from .alphabets import ProperAlphabet, ProperLetter, SymbolicLetter
from .guards import (GNot, TRUE, clause_to_guard, dnf, g_and_all, GAtom,
                     interval_vocabulary, operator_set)
from .keys import canon_key
from .operators import EMPTY_ENV, Env, Operator, stable_grid
from .words import Interval, TimedLasso


class Idta:
    """An input-determined timed automaton: a Buchi automaton whose letters
    are (action, guard) pairs, or (action, h) pairs over a proper alphabet.

    `sigma` is the declared action alphabet; it may exceed the actions that
    appear on transitions (it fixes the universe the timed complement is
    taken against).
    """

    def __init__(self, buchi: BuchiAutomaton, sigma=None):
        self.buchi = buchi
        kinds = {type(letter) for letter in buchi.alphabet}
        if not kinds <= {SymbolicLetter, ProperLetter}:
            raise ValidationError(f"unsupported letter kinds: {kinds}")
        self.proper = kinds == {ProperLetter}
        letter_actions = {letter.action for letter in buchi.alphabet}
        self.sigma = tuple(sorted(set(sigma) | letter_actions, key=canon_key)
                           if sigma is not None else sorted(letter_actions, key=canon_key))

    @property
    def ops(self):
        seen, out = set(), []
        for letter in self.buchi.alphabet:
            ops = letter.operators if isinstance(letter, ProperLetter) \
                else operator_set(letter.guard)
            for op in ops:
                if op not in seen:
                    seen.add(op)
                    out.append(op)
        return tuple(sorted(out, key=Operator.sort_key))

    @property
    def ivoc(self):
        seen, out = set(), []
        for letter in self.buchi.alphabet:
            ivals = sorted(letter.ivoc, key=Interval.sort_key) \
                if isinstance(letter, ProperLetter) else interval_vocabulary(letter.guard)
            for v in ivals:
                if v not in seen:
                    seen.add(v)
                    out.append(v)
        return tuple(sorted(out, key=Interval.sort_key))

    def __repr__(self):
        kind = "proper " if self.proper else ""
        return f"<{kind}Idta {self.buchi!r} sigma={self.sigma}>"


def timed_membership(aut: Idta, word: TimedLasso, env: Env = EMPTY_ENV,
                     limits: Limits = DEFAULT_LIMITS, op_word: TimedLasso = None) -> bool:
    """Does the automaton accept the timed word?

    The letter enabled at a position depends on the position (guards read the
    word), so the Buchi run is searched in an unrolled graph over (state,
    position-class) nodes, where position classes are the stem positions plus
    period offsets after the guard profile stabilizes.
    """
    buchi = aut.buchi
    letters = buchi.alphabet
    gword = op_word or word
    pos_sets = [env.resolve(op.param, gword) for op in aut.ops if op.kind.is_recursive]
    start, period, blocks = stable_grid(word, aut.ivoc, pos_sets, limits.stabilize_k)
    horizon = start + blocks * period
    profiles = []
    for i in range(horizon):
        profiles.append(tuple(letter.matches(word, i, env, op_word) for letter in letters))
    if profiles[horizon - period:] != profiles[horizon - 2 * period:horizon - period]:
        raise StabilizationError("guard satisfaction profile", blocks)
    length = start + (blocks - 1) * period  # positions [0, length), wrap to length-period

    def next_pos(pos):
        return pos + 1 if pos + 1 < length else length - period

    startnode = (buchi.init, 0)
    seen = {startnode}
    frontier = [startnode]
    while frontier:
        nxt = []
        for q, pos in frontier:
            prof = profiles[pos]
            for li, ds in buchi.moves[q].items():
                if prof[li]:
                    for d in ds:
                        child = (d, next_pos(pos))
                        if child not in seen:
                            seen.add(child)
                            nxt.append(child)
        frontier = nxt
    node_id = {node: i for i, node in enumerate(sorted(seen))}
    adj = [[] for _ in node_id]
    for (q, pos), i in node_id.items():
        prof = profiles[pos]
        for li, ds in buchi.moves[q].items():
            if prof[li]:
                for d in ds:
                    adj[i].append(node_id[(d, next_pos(pos))])
    from .buchi import _tarjan
    _, comps = _tarjan(adj)
    rev = {i: node for node, i in node_id.items()}
    for comp in comps:
        nontrivial = len(comp) > 1 or comp[0] in adj[comp[0]]
        if nontrivial and any(rev[i][0] in buchi.accepting for i in comp):
            return True
    return False


def _consistent_maps(alpha: ProperAlphabet, clause):
    """All h consistent with a signed-atom clause: positive atoms force the
    interval in, negative atoms force it out, the rest is free."""
    required = {op: set() for op in alpha.ops}
    forbidden = {op: set() for op in alpha.ops}
    for sign, atom in sorted(clause, key=canon_key):
        if atom.op not in required:
            raise ValidationError(f"operator {atom.op} missing from the proper alphabet")
        (required if sign else forbidden)[atom.op].add(atom.ival)
    for op in alpha.ops:
        if required[op] & forbidden[op]:
            return  # contradictory clause: no consistent letter
    ivoc = list(alpha.ivoc)

    def per_op(ops):
        if not ops:
            yield {}
            return
        op = ops[0]
        free = [v for v in ivoc if v not in required[op] and v not in forbidden[op]]
        for rest in per_op(ops[1:]):
            for r in range(len(free) + 1):
                for extra in combinations(free, r):
                    h = dict(rest)
                    h[op] = frozenset(required[op]) | frozenset(extra)
                    yield h

    yield from per_op(list(alpha.ops))


def to_proper(aut: Idta, sigma=None, ops=None, ivoc=None,
              limits: Limits = DEFAULT_LIMITS) -> Idta:
    """Equivalent automaton over the proper alphabet Sigma x (Op -> 2^Ivoc).

    Each guard is split into DNF clauses and each clause into the proper
    letters consistent with it.  The timed language is preserved; the state
    set is unchanged.
    """
    if aut.proper:
        return aut
    alpha = ProperAlphabet(
        tuple(set(aut.sigma) | set(sigma or ())),
        tuple(set(aut.ops) | set(ops or ())),
        tuple(set(aut.ivoc) | set(ivoc or ())),
    )
    letters = alpha.letters()
    index = {letter: i for i, letter in enumerate(letters)}
    buchi = aut.buchi
    moves = []
    for q in range(buchi.n_states):
        entry = {}
        for li, ds in buchi.moves[q].items():
            sym = buchi.alphabet[li]
            for clause in dnf(sym.guard, limits.dnf_cap):
                for h in _consistent_maps(alpha, clause):
                    ni = index[alpha.letter(sym.action, h)]
                    entry[ni] = tuple(sorted(set(entry.get(ni, ())) | set(ds)))
        moves.append(entry)
    out = BuchiAutomaton(buchi.n_states, buchi.init, letters, moves, buchi.accepting)
    return Idta(out, alpha.sigma)


def proper_guard(letter: ProperLetter):
    """The conjunction guard equivalent to a proper letter."""
    ivoc = sorted(letter.ivoc, key=Interval.sort_key)
    parts = []
    for op, sat in letter.h:
        for v in ivoc:
            atom = GAtom(v, op)
            parts.append(atom if v in sat else GNot(atom))
    return g_and_all(parts)


def from_proper(aut: Idta) -> Idta:
    """Replace each proper letter (a, h) by the guard that pins h exactly."""
    if not aut.proper:
        return aut
    mapping = {letter: SymbolicLetter(letter.action, proper_guard(letter))
               for letter in aut.buchi.alphabet}
    new_alphabet = tuple(sorted(set(mapping.values()), key=SymbolicLetter.sort_key))
    out = aut.buchi.map_alphabet(lambda l: mapping[l], new_alphabet)
    return Idta(out, aut.sigma)


def idta_union(a: Idta, b: Idta, limits: Limits = DEFAULT_LIMITS) -> Idta:
    """Timed-language union: symbolic union over the merged alphabet."""
    return Idta(union(a.buchi, b.buchi, limits), tuple(set(a.sigma) | set(b.sigma)))


def idta_intersection(a: Idta, b: Idta, limits: Limits = DEFAULT_LIMITS) -> Idta:
    """Timed-language intersection.

    Goes through a common proper alphabet first: a timed word has a unique
    symbolic image there, so intersecting the symbolic languages intersects
    the timed ones.
    """
    sigma = tuple(set(a.sigma) | set(b.sigma))
    ops = tuple(set(a.ops) | set(b.ops))
    ivoc = tuple(set(a.ivoc) | set(b.ivoc))
    pa = to_proper(a, sigma, ops, ivoc, limits)
    pb = to_proper(b, sigma, ops, ivoc, limits)
    return Idta(intersection(pa.buchi, pb.buchi, limits), sigma)


def idta_complement(a: Idta, limits: Limits = DEFAULT_LIMITS) -> Idta:
    """Timed-language complement: properize, then complement symbolically."""
    pa = to_proper(a, limits=limits)
    return Idta(complement(pa.buchi, limits), pa.sigma)
