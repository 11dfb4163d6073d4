"""Buchi automata over finite alphabets: acceptance on lasso words, boolean
closure, projection, emptiness, and complementation.

Complementation dispatches on automaton structure: weak deterministic automata
are complemented by flipping state acceptance, deterministic ones by the
two-copy jump construction, semi-deterministic ones by breakpoint subset
constructions over the deterministic part, and everything else by the general
rank-based construction (level rankings bounded by 2|Q|, reachable states
generated on the fly).
"""

import itertools
from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits
from .errors import AlphabetMismatchError, CapExceededError, ValidationError
from .keys import canon_key, canon_sorted


@dataclass(frozen=True)
class LetterLasso:
    """An ultimately periodic word of letters (no times)."""

    stem: tuple
    period: tuple

    def __post_init__(self):
        if not self.period:
            raise ValidationError("lasso period must be non-empty")

    def letter(self, i: int):
        if i < len(self.stem):
            return self.stem[i]
        return self.period[(i - len(self.stem)) % len(self.period)]

    @property
    def stem_len(self):
        return len(self.stem)

    @property
    def period_len(self):
        return len(self.period)

    def with_letter(self, i: int, letter) -> "LetterLasso":
        """Copy with one position replaced; i must fall before the period wraps."""
        if i < len(self.stem):
            stem = self.stem[:i] + (letter,) + self.stem[i + 1:]
            return LetterLasso(stem, self.period)
        r = (i - len(self.stem)) % len(self.period)
        period = self.period[:r] + (letter,) + self.period[r + 1:]
        return LetterLasso(self.stem, period)


class BuchiAutomaton:
    """(Q, s, ->, F) over an explicit alphabet; states are 0..n-1.

    Instances are immutable by convention.  `moves[q]` maps letter indices to
    sorted destination tuples.  The alphabet order is part of the identity of
    the automaton and is kept deterministic by every construction here.
    """

    def __init__(self, n_states, init, alphabet, moves, accepting):
        if not (0 <= init < n_states):
            raise ValidationError("initial state out of range")
        self.n_states = n_states
        self.init = init
        self.alphabet = tuple(alphabet)
        self.letter_index = {a: i for i, a in enumerate(self.alphabet)}
        if len(self.letter_index) != len(self.alphabet):
            raise ValidationError("duplicate letters in alphabet")
        norm = []
        for q in range(n_states):
            entry = moves[q] if q < len(moves) else {}
            norm.append({li: tuple(sorted(set(ds))) for li, ds in sorted(entry.items())})
        self.moves = tuple(norm)
        self.accepting = frozenset(accepting)
        for q, entry in enumerate(self.moves):
            for li, ds in entry.items():
                if not (0 <= li < len(self.alphabet)):
                    raise ValidationError(f"letter index {li} out of range at state {q}")
                for d in ds:
                    if not (0 <= d < n_states):
                        raise ValidationError(f"destination {d} out of range at state {q}")
        for q in self.accepting:
            if not (0 <= q < n_states):
                raise ValidationError(f"accepting state {q} out of range")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def build(cls, init_label, moves, accepting_labels, alphabet):
        """Canonicalize a labeled transition graph into numbered states.

        moves: dict label -> dict letter -> iterable of labels.  Only states
        reachable from the initial label are kept; numbering is breadth-first
        with letters visited in alphabet order, which makes the numbering
        reproducible whenever the supplied structures are deterministic.
        """
        alphabet = tuple(alphabet)
        index = {a: i for i, a in enumerate(alphabet)}
        number = {init_label: 0}
        order = [init_label]
        frontier = [init_label]
        while frontier:
            nxt = []
            for label in frontier:
                entry = moves.get(label, {})
                for letter in sorted(entry, key=lambda a: index[a]):
                    for dst in entry[letter]:
                        if dst not in number:
                            number[dst] = len(number)
                            order.append(dst)
                            nxt.append(dst)
            frontier = nxt
        out_moves = []
        for label in order:
            entry = moves.get(label, {})
            out_moves.append({index[letter]: tuple(number[d] for d in dsts)
                              for letter, dsts in entry.items()})
        accepting = {number[a] for a in accepting_labels if a in number}
        return cls(len(order), 0, alphabet, out_moves, accepting)

    @classmethod
    def empty(cls, alphabet):
        return cls(1, 0, alphabet, [{}], frozenset())

    @classmethod
    def universal(cls, alphabet):
        n = len(alphabet)
        return cls(1, 0, alphabet, [{i: (0,) for i in range(n)}], frozenset({0}))

    # -- basic queries ---------------------------------------------------------

    def succ(self, q, letter_idx):
        return self.moves[q].get(letter_idx, ())

    def transition_count(self):
        return sum(len(ds) for entry in self.moves for ds in entry.values())

    def transitions(self):
        """Iterate (src, letter, dst) triples in deterministic order."""
        for q, entry in enumerate(self.moves):
            for li in sorted(entry):
                for d in entry[li]:
                    yield q, self.alphabet[li], d

    def is_deterministic(self):
        return all(len(ds) <= 1 for entry in self.moves for ds in entry.values())

    def is_complete(self):
        return all(len(entry) == len(self.alphabet) and all(entry.values())
                   for entry in self.moves)

    def sccs(self):
        """Strongly connected components, iterative Tarjan, deterministic order."""
        n = self.n_states
        index = [None] * n
        low = [0] * n
        on_stack = [False] * n
        stack = []
        comps = []
        counter = itertools.count()
        adj = [sorted({d for ds in entry.values() for d in ds}) for entry in self.moves]
        for root in range(n):
            if index[root] is not None:
                continue
            work = [(root, iter(adj[root]))]
            index[root] = low[root] = next(counter)
            stack.append(root)
            on_stack[root] = True
            while work:
                q, it = work[-1]
                advanced = False
                for d in it:
                    if index[d] is None:
                        index[d] = low[d] = next(counter)
                        stack.append(d)
                        on_stack[d] = True
                        work.append((d, iter(adj[d])))
                        advanced = True
                        break
                    if on_stack[d]:
                        low[q] = min(low[q], index[d])
                if advanced:
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[q])
                if low[q] == index[q]:
                    comp = []
                    while True:
                        s = stack.pop()
                        on_stack[s] = False
                        comp.append(s)
                        if s == q:
                            break
                    comps.append(sorted(comp))
        return comps

    def _has_self_loop(self, q):
        return any(q in ds for ds in self.moves[q].values())

    def nontrivial_scc_of(self):
        """Map state -> scc id for states lying on some cycle, else None."""
        out = [None] * self.n_states
        for cid, comp in enumerate(self.sccs()):
            if len(comp) > 1 or self._has_self_loop(comp[0]):
                for q in comp:
                    out[q] = cid
        return out

    def is_weak(self):
        """Every cycle-carrying SCC is uniformly accepting or rejecting."""
        by_scc = {}
        scc_of = self.nontrivial_scc_of()
        for q in range(self.n_states):
            cid = scc_of[q]
            if cid is None:
                continue
            flag = q in self.accepting
            if cid in by_scc and by_scc[cid] != flag:
                return False
            by_scc[cid] = flag
        return True

    def reachable_states(self):
        seen = {self.init}
        frontier = [self.init]
        while frontier:
            nxt = []
            for q in frontier:
                for ds in self.moves[q].values():
                    for d in ds:
                        if d not in seen:
                            seen.add(d)
                            nxt.append(d)
            frontier = nxt
        return seen

    # -- structural operations -------------------------------------------------

    def trim(self):
        """Remove states that cannot take part in an accepting run."""
        reach = self.reachable_states()
        scc_of = self.nontrivial_scc_of()
        # live cores: cycle-carrying SCCs that contain an accepting state
        by_scc = {}
        for q in range(self.n_states):
            if scc_of[q] is not None:
                by_scc.setdefault(scc_of[q], []).append(q)
        live_cores = set()
        for cid, comp in by_scc.items():
            if any(q in self.accepting for q in comp):
                live_cores.update(comp)
        rev = [[] for _ in range(self.n_states)]
        for q, entry in enumerate(self.moves):
            for ds in entry.values():
                for d in ds:
                    rev[d].append(q)
        co = set(live_cores)
        frontier = list(live_cores)
        while frontier:
            nxt = []
            for q in frontier:
                for p in rev[q]:
                    if p not in co:
                        co.add(p)
                        nxt.append(p)
            frontier = nxt
        keep = sorted(reach & co)
        if self.init not in co:
            return BuchiAutomaton.empty(self.alphabet)
        renum = {q: i for i, q in enumerate(keep)}
        moves = [{li: tuple(renum[d] for d in ds if d in renum)
                  for li, ds in self.moves[q].items()}
                 for q in keep]
        moves = [{li: ds for li, ds in entry.items() if ds} for entry in moves]
        return BuchiAutomaton(len(keep), renum[self.init], self.alphabet, moves,
                              {renum[q] for q in self.accepting if q in renum})

    def completed(self):
        """Add a rejecting sink so every state has a move on every letter."""
        if self.is_complete():
            return self
        sink = self.n_states
        moves = []
        for q in range(self.n_states):
            entry = dict(self.moves[q])
            for li in range(len(self.alphabet)):
                if not entry.get(li):
                    entry[li] = (sink,)
            moves.append(entry)
        moves.append({li: (sink,) for li in range(len(self.alphabet))})
        return BuchiAutomaton(sink + 1, self.init, self.alphabet, moves, self.accepting)

    def merged_equivalent(self, max_work=2_000_000):
        """Quotient by (forward) bisimulation respecting acceptance flags."""
        if self.n_states * max(1, len(self.alphabet)) > max_work:
            return self
        block = [1 if q in self.accepting else 0 for q in range(self.n_states)]
        while True:
            sigs = {}
            new_block = [0] * self.n_states
            for q in range(self.n_states):
                sig = (block[q], tuple((li, tuple(sorted({block[d] for d in ds})))
                                       for li, ds in sorted(self.moves[q].items())))
                if sig not in sigs:
                    sigs[sig] = len(sigs)
                new_block[q] = sigs[sig]
            if new_block == block:
                break
            block = new_block
        n_blocks = len(set(block))
        if n_blocks == self.n_states:
            return self
        # deterministic representative numbering: by first occurrence
        renum = {}
        for q in range(self.n_states):
            renum.setdefault(block[q], len(renum))
        moves = [dict() for _ in range(n_blocks)]
        for q in range(self.n_states):
            b = renum[block[q]]
            for li, ds in self.moves[q].items():
                merged = set(moves[b].get(li, ())) | {renum[block[d]] for d in ds}
                moves[b][li] = tuple(sorted(merged))
        accepting = {renum[block[q]] for q in self.accepting}
        return BuchiAutomaton(n_blocks, renum[block[self.init]], self.alphabet, moves, accepting)

    def simplified(self):
        return self.trim().merged_equivalent()

    def map_alphabet(self, fn, new_alphabet=None):
        """Relabel letters through fn (possibly merging); backbone unchanged."""
        mapped = [fn(a) for a in self.alphabet]
        if new_alphabet is None:
            seen = []
            have = set()
            for m in mapped:
                if m not in have:
                    have.add(m)
                    seen.append(m)
            new_alphabet = tuple(canon_sorted(seen))
        index = {a: i for i, a in enumerate(new_alphabet)}
        moves = []
        for q in range(self.n_states):
            entry = {}
            for li, ds in self.moves[q].items():
                ni = index[mapped[li]]
                entry[ni] = tuple(sorted(set(entry.get(ni, ())) | set(ds)))
            moves.append(entry)
        return BuchiAutomaton(self.n_states, self.init, new_alphabet, moves, self.accepting)

    def expand_alphabet(self, expander, new_alphabet):
        """Replicate each transition across expander(letter) new letters."""
        index = {a: i for i, a in enumerate(new_alphabet)}
        expansion = {li: [index[b] for b in expander(a)]
                     for li, a in enumerate(self.alphabet)}
        moves = []
        for q in range(self.n_states):
            entry = {}
            for li, ds in self.moves[q].items():
                for ni in expansion[li]:
                    entry[ni] = tuple(sorted(set(entry.get(ni, ())) | set(ds)))
            moves.append(entry)
        return BuchiAutomaton(self.n_states, self.init, new_alphabet, moves, self.accepting)

    def __repr__(self):
        return (f"BuchiAutomaton(states={self.n_states}, letters={len(self.alphabet)}, "
                f"transitions={self.transition_count()}, accepting={sorted(self.accepting)})")


# -- acceptance and emptiness ---------------------------------------------------


def accepts_lasso(aut: BuchiAutomaton, word: LetterLasso) -> bool:
    """Does some run over stem . period^omega visit acceptance infinitely often?

    Reachability to an accepting cycle in the product of the automaton with
    the lasso's stem+period position graph.
    """
    try:
        stem = [aut.letter_index[a] for a in word.stem]
        period = [aut.letter_index[a] for a in word.period]
    except KeyError as e:
        raise AlphabetMismatchError(f"letter {e.args[0]!r} not in automaton alphabet") from None
    length = len(stem) + len(period)

    def next_pos(pos):
        return pos + 1 if pos + 1 < length else len(stem)

    def letter_at(pos):
        return stem[pos] if pos < len(stem) else period[pos - len(stem)]

    start = (aut.init, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            q, pos = node
            for d in aut.succ(q, letter_at(pos)):
                child = (d, next_pos(pos))
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    # cycle detection among period-zone nodes via Tarjan on the product
    node_id = {node: i for i, node in enumerate(sorted(seen))}
    adj = [[] for _ in node_id]
    for node in node_id:
        q, pos = node
        for d in aut.succ(q, letter_at(pos)):
            adj[node_id[node]].append(node_id[(d, next_pos(pos))])
    comp_of, comps = _tarjan(adj)
    rev_id = {i: node for node, i in node_id.items()}
    for comp in comps:
        nontrivial = len(comp) > 1 or comp[0] in adj[comp[0]]
        if nontrivial and any(rev_id[i][0] in aut.accepting for i in comp):
            return True
    return False


def _tarjan(adj):
    n = len(adj)
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    comp_of = [None] * n
    counter = itertools.count()
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack[root] = True
        while work:
            q, it = work[-1]
            advanced = False
            for d in it:
                if index[d] is None:
                    index[d] = low[d] = next(counter)
                    stack.append(d)
                    on_stack[d] = True
                    work.append((d, iter(adj[d])))
                    advanced = True
                    break
                if on_stack[d]:
                    low[q] = min(low[q], index[d])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[q])
            if low[q] == index[q]:
                comp = []
                while True:
                    s = stack.pop()
                    on_stack[s] = False
                    comp.append(s)
                    if s == q:
                        break
                comp.sort()
                for s in comp:
                    comp_of[s] = len(comps)
                comps.append(comp)
    return comp_of, comps


def is_empty_symbolic(aut: BuchiAutomaton) -> bool:
    """True iff no reachable cycle passes through an accepting state."""
    return witness_lasso(aut) is None


def witness_lasso(aut: BuchiAutomaton):
    """A lasso accepted by the automaton, or None if the language is empty.

    Stem: BFS shortest path from the initial state to an accepting state that
    lies on a cycle; period: BFS shortest cycle back.  Ties break toward the
    lowest letter index, then the lowest state id.
    """
    reach = aut.reachable_states()
    scc_of = aut.nontrivial_scc_of()
    targets = sorted(q for q in reach if q in aut.accepting and scc_of[q] is not None)
    if not targets:
        return None

    def bfs(src, goals, within=None):
        prev = {src: None}
        frontier = [src]
        while frontier:
            nxt = []
            for q in frontier:
                for li in sorted(aut.moves[q]):
                    for d in aut.moves[q][li]:
                        if within is not None and d not in within:
                            continue
                        if d not in prev:
                            prev[d] = (q, li)
                            if d in goals:
                                return d, prev
                            nxt.append(d)
            frontier = nxt
        return None, prev

    def unwind(end, prev):
        letters = []
        q = end
        while prev[q] is not None:
            p, li = prev[q]
            letters.append(aut.alphabet[li])
            q = p
        return tuple(reversed(letters))

    # choose the target whose BFS distance from init is minimal (BFS finds it)
    goal_set = set(targets)
    if aut.init in goal_set:
        target, stem = aut.init, ()
    else:
        target, prev = bfs(aut.init, goal_set)
        if target is None:
            return None
        stem = unwind(target, prev)
    comp = {q for q in range(aut.n_states) if scc_of[q] == scc_of[target]}
    # shortest cycle target -> target within its SCC
    best = None
    for li in sorted(aut.moves[target]):
        for d in aut.moves[target][li]:
            if d not in comp:
                continue
            if d == target:
                best = (aut.alphabet[li],)
                break
            end, prev = bfs(d, {target}, within=comp)
            if end is not None:
                cand = (aut.alphabet[li],) + unwind(end, prev)
                if best is None or len(cand) < len(best):
                    best = cand
        if best is not None and len(best) == 1:
            break
    if best is None:
        return None
    return LetterLasso(tuple(stem), tuple(best))


# -- boolean operations -----------------------------------------------------------


def merged_alphabet(a, b):
    seen = list(a)
    have = set(a)
    for x in b:
        if x not in have:
            have.add(x)
            seen.append(x)
    return tuple(canon_sorted(seen))


def _on_alphabet(aut, alphabet):
    if tuple(aut.alphabet) == tuple(alphabet):
        return aut
    index = {a: i for i, a in enumerate(alphabet)}
    moves = [{index[aut.alphabet[li]]: ds for li, ds in entry.items()}
             for entry in aut.moves]
    return BuchiAutomaton(aut.n_states, aut.init, alphabet, moves, aut.accepting)


def union(a: BuchiAutomaton, b: BuchiAutomaton, limits: Limits = DEFAULT_LIMITS) -> BuchiAutomaton:
    alphabet = merged_alphabet(a.alphabet, b.alphabet)
    a = _on_alphabet(a, alphabet)
    b = _on_alphabet(b, alphabet)
    if a.is_deterministic() and b.is_deterministic() and a.is_weak() and b.is_weak():
        ac, bc = a.completed(), b.completed()
        return _weak_product(ac, bc, any, limits).simplified()
    # sum with a fresh initial state copying both initial states' moves
    n = 1 + a.n_states + b.n_states
    _check_cap(n, limits)
    off_a, off_b = 1, 1 + a.n_states
    moves = [dict()]
    init_entry = {}
    for li, ds in a.moves[a.init].items():
        init_entry[li] = tuple(d + off_a for d in ds)
    for li, ds in b.moves[b.init].items():
        init_entry[li] = tuple(sorted(set(init_entry.get(li, ())) |
                                      {d + off_b for d in ds}))
    moves[0] = init_entry
    for q in range(a.n_states):
        moves.append({li: tuple(d + off_a for d in ds) for li, ds in a.moves[q].items()})
    for q in range(b.n_states):
        moves.append({li: tuple(d + off_b for d in ds) for li, ds in b.moves[q].items()})
    accepting = {q + off_a for q in a.accepting} | {q + off_b for q in b.accepting}
    return BuchiAutomaton(n, 0, alphabet, moves, accepting).simplified()


def intersection(a: BuchiAutomaton, b: BuchiAutomaton,
                 limits: Limits = DEFAULT_LIMITS) -> BuchiAutomaton:
    alphabet = merged_alphabet(a.alphabet, b.alphabet)
    a = _on_alphabet(a, alphabet)
    b = _on_alphabet(b, alphabet)
    if a.is_weak() and b.is_weak():
        return _weak_product(a, b, all, limits).simplified()
    return _flag_product(a, b, limits).simplified()


def _weak_product(a, b, combine, limits):
    """Reachable product of two weak automata; acceptance combined statewise."""
    start = (a.init, b.init)
    moves = {}
    accepting = set()
    frontier = [start]
    seen = {start}
    while frontier:
        nxt = []
        for node in frontier:
            p, q = node
            if combine((p in a.accepting, q in b.accepting)):
                accepting.add(node)
            entry = {}
            for li in sorted(set(a.moves[p]) & set(b.moves[q])):
                dsts = sorted((x, y) for x in a.moves[p][li] for y in b.moves[q][li])
                entry[a.alphabet[li]] = dsts
                for child in dsts:
                    if child not in seen:
                        seen.add(child)
                        nxt.append(child)
            moves[node] = entry
            _check_cap(len(seen), limits)
        frontier = nxt
    return BuchiAutomaton.build(start, moves, accepting, a.alphabet)


def _flag_product(a, b, limits):
    """Standard two-flag product for general Buchi intersection."""
    start = (a.init, b.init, 0)
    moves = {}
    accepting = set()
    frontier = [start]
    seen = {start}
    while frontier:
        nxt = []
        for node in frontier:
            p, q, f = node
            if f == 1 and q in b.accepting:
                accepting.add(node)
            nf = 1 if (f == 0 and p in a.accepting) else (0 if (f == 1 and q in b.accepting) else f)
            entry = {}
            for li in sorted(set(a.moves[p]) & set(b.moves[q])):
                dsts = sorted((x, y, nf) for x in a.moves[p][li] for y in b.moves[q][li])
                entry[a.alphabet[li]] = dsts
                for child in dsts:
                    if child not in seen:
                        seen.add(child)
                        nxt.append(child)
            moves[node] = entry
            _check_cap(len(seen), limits)
        frontier = nxt
    return BuchiAutomaton.build(start, moves, accepting, a.alphabet)


def _check_cap(n, limits):
    if n > limits.state_cap:
        raise CapExceededError("automaton states", limits.state_cap, n)


def project(aut: BuchiAutomaton, drop, new_alphabet=None) -> BuchiAutomaton:
    """Existential projection: relabel letters through `drop` (merging them)."""
    return aut.map_alphabet(drop, new_alphabet).simplified()


# -- complementation ---------------------------------------------------------------


def complement(aut: BuchiAutomaton, limits: Limits = DEFAULT_LIMITS) -> BuchiAutomaton:
    """An automaton for the complement language over the same alphabet."""
    trimmed = aut.trim().merged_equivalent()
    if is_empty_symbolic(trimmed):
        return BuchiAutomaton.universal(aut.alphabet)
    if trimmed.is_deterministic():
        det = trimmed.completed()
        if det.is_weak():
            return _flip_weak(det).simplified()
        return _complement_deterministic(det, limits).simplified()
    split = _semi_det_split(trimmed)
    if split is not None:
        qn, qd = split
        if _det_part_weak(trimmed, qd):
            return _complement_semidet_weak(trimmed, qn, qd, limits).simplified()
        return _complement_semidet(trimmed, qn, qd, limits).simplified()
    return _complement_rank_based(trimmed, limits).simplified()


def _flip_weak(det: BuchiAutomaton) -> BuchiAutomaton:
    """Complement a complete weak deterministic automaton by flipping SCCs."""
    scc_of = det.nontrivial_scc_of()
    by_scc = {}
    for q in range(det.n_states):
        if scc_of[q] is not None:
            by_scc.setdefault(scc_of[q], []).append(q)
    accepting = set()
    for comp in by_scc.values():
        if not any(q in det.accepting for q in comp):
            accepting.update(comp)
    return BuchiAutomaton(det.n_states, det.init, det.alphabet, det.moves, accepting)


def _complement_deterministic(det: BuchiAutomaton, limits) -> BuchiAutomaton:
    """Complement of a complete deterministic automaton: guess the point after
    which the unique run never visits acceptance again."""
    moves = {}
    accepting = set()
    for q in range(det.n_states):
        wait = ("w", q)
        entry = {}
        for li in range(len(det.alphabet)):
            d = det.moves[q][li][0]
            dsts = [("w", d)]
            if d not in det.accepting:
                dsts.append(("s", d))
            entry[det.alphabet[li]] = dsts
        moves[wait] = entry
        if q not in det.accepting:
            safe = ("s", q)
            entry = {}
            for li in range(len(det.alphabet)):
                d = det.moves[q][li][0]
                if d not in det.accepting:
                    entry[det.alphabet[li]] = [("s", d)]
            moves[safe] = entry
            accepting.add(safe)
    return BuchiAutomaton.build(("w", det.init), moves, accepting, det.alphabet)


def _semi_det_split(aut: BuchiAutomaton):
    """(Qn, Qd) where Qd = states reachable from acceptance, if that part is
    deterministic; None otherwise."""
    fwd = [sorted({d for ds in entry.values() for d in ds}) for entry in aut.moves]
    qd = set(aut.accepting)
    frontier = list(aut.accepting)
    while frontier:
        nxt = []
        for q in frontier:
            for d in fwd[q]:
                if d not in qd:
                    qd.add(d)
                    nxt.append(d)
        frontier = nxt
    for q in qd:
        if any(len(ds) > 1 for ds in aut.moves[q].values()):
            return None
    qn = frozenset(range(aut.n_states)) - qd
    return qn, frozenset(qd)


def _det_part_weak(aut: BuchiAutomaton, qd) -> bool:
    sub = _induced(aut, qd)
    return sub.is_weak()


def _induced(aut, states):
    states = sorted(states)
    renum = {q: i for i, q in enumerate(states)}
    moves = [{li: tuple(renum[d] for d in ds if d in renum)
              for li, ds in aut.moves[q].items()} for q in states]
    moves = [{li: ds for li, ds in entry.items() if ds} for entry in moves]
    init = renum.get(aut.init, 0)
    return BuchiAutomaton(max(1, len(states)), init, aut.alphabet, moves,
                          {renum[q] for q in aut.accepting if q in renum})


def _complement_semidet_weak(aut, qn, qd, limits) -> BuchiAutomaton:
    """Complement when the part reachable from acceptance is deterministic and
    weak: track all runs by subsets, and demand, breakpoint-style, that every
    deterministic thread settles in a rejecting SCC.  The result is itself
    deterministic, which keeps later complementations cheap."""
    scc_of = aut.nontrivial_scc_of()
    reject_core = set()
    by_scc = {}
    for q in sorted(qd):
        if scc_of[q] is not None:
            by_scc.setdefault(scc_of[q], []).append(q)
    for comp in by_scc.values():
        if not any(q in aut.accepting for q in comp):
            reject_core.update(comp)
    f_hat = frozenset(reject_core)

    def step(states, li):
        out = set()
        for q in states:
            out.update(aut.succ(q, li))
        return out

    start = (frozenset({aut.init}) & qn,
             frozenset({aut.init}) & qd,
             (frozenset({aut.init}) & qd) - f_hat)
    moves = {}
    accepting = set()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            n_set, s_set, o_set = node
            if not o_set:
                accepting.add(node)
            entry = {}
            for li in range(len(aut.alphabet)):
                image = step(n_set, li)
                n2 = frozenset(image & qn)
                s2 = frozenset((step(s_set, li) & qd) | (image & qd))
                if not o_set:
                    o2 = frozenset(s2 - f_hat)
                else:
                    o2 = frozenset((step(o_set, li) & s2) - f_hat)
                child = (n2, s2, o2)
                entry[aut.alphabet[li]] = [child]
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
            moves[node] = entry
            _check_cap(len(seen), limits)
        frontier = nxt
    return BuchiAutomaton.build(start, moves, accepting, aut.alphabet)


def _complement_semidet(aut, qn, qd, limits) -> BuchiAutomaton:
    """Complement for a semi-deterministic automaton, general deterministic
    part: each deterministic thread must eventually be declared safe (guessed
    to avoid acceptance forever), with a breakpoint set forcing the guesses."""
    f_set = aut.accepting

    def step(states, li):
        out = set()
        for q in states:
            out.update(aut.succ(q, li))
        return out

    start = (frozenset({aut.init}) & qn,
             frozenset({aut.init}) & qd,
             frozenset(),
             frozenset({aut.init}) & qd)
    moves = {}
    accepting = set()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            n_set, c_set, s_set, b_set = node
            if not b_set:
                accepting.add(node)
            entry = {}
            for li in range(len(aut.alphabet)):
                image = step(n_set, li)
                n2 = frozenset(image & qn)
                s_base = step(s_set, li) & qd
                if s_base & f_set:
                    continue  # a safe thread saw acceptance: guess was wrong
                candidates = frozenset(((step(c_set, li) | image) & qd) - s_base)
                movable = sorted(candidates - f_set)
                children = []
                for r in range(len(movable) + 1):
                    for moved in itertools.combinations(movable, r):
                        s2 = frozenset(s_base | set(moved))
                        c2 = frozenset(candidates - set(moved))
                        if not b_set:
                            b2 = c2
                        else:
                            b2 = frozenset(step(b_set, li) & c2)
                        children.append((n2, c2, s2, b2))
                if children:
                    entry[aut.alphabet[li]] = children
                    for child in children:
                        if child not in seen:
                            seen.add(child)
                            nxt.append(child)
            moves[node] = entry
            _check_cap(len(seen), limits)
        frontier = nxt
    return BuchiAutomaton.build(start, moves, accepting, aut.alphabet)


def _complement_rank_based(aut, limits) -> BuchiAutomaton:
    """General complementation via level rankings bounded by 2|Q| with a
    breakpoint set of even-ranked states; reachable states generated on the
    fly.  Exponential in general; the dispatcher keeps its inputs small."""
    max_rank = 2 * aut.n_states
    init_rank = max_rank if max_rank % 2 == 0 else max_rank - 1

    start = (((aut.init, init_rank),), frozenset())
    moves = {}
    accepting = set()
    seen = {start}
    frontier = [start]
    succ_cache = {}
    while frontier:
        nxt = []
        for node in frontier:
            ranking, o_set = node
            if not o_set:
                accepting.add(node)
            rank_of = dict(ranking)
            entry = {}
            for li in range(len(aut.alphabet)):
                profile = tuple((q, aut.succ(q, li)) for q, _ in ranking)
                key = (ranking, o_set, profile)
                if key in succ_cache:
                    children = succ_cache[key]
                else:
                    bounds = {}
                    for q, r in ranking:
                        for d in aut.succ(q, li):
                            bounds[d] = min(bounds.get(d, r), r)
                    dom = sorted(bounds)
                    choice_lists = []
                    for d in dom:
                        top = bounds[d]
                        if d in aut.accepting:
                            choices = range(0, top + 1, 2)
                        else:
                            choices = range(0, top + 1)
                        choice_lists.append(list(choices))
                    count = 1
                    for c in choice_lists:
                        count *= len(c)
                        if count > 200_000:
                            raise CapExceededError("rank successor enumeration", 200_000)
                    children = []
                    o_image = set()
                    for q in o_set:
                        o_image.update(aut.succ(q, li))
                    for combo in itertools.product(*choice_lists):
                        g2 = tuple(zip(dom, combo))
                        evens = {d for d, r in g2 if r % 2 == 0}
                        if o_set:
                            o2 = frozenset(o_image & evens)
                        else:
                            o2 = frozenset(evens)
                        children.append((g2, o2))
                    succ_cache[key] = children
                if children:
                    entry[aut.alphabet[li]] = children
                    for child in children:
                        if child not in seen:
                            seen.add(child)
                            nxt.append(child)
            moves[node] = entry
            _check_cap(len(seen), limits)
        frontier = nxt
    return BuchiAutomaton.build(start, moves, accepting, aut.alphabet)


def bool_combine(kind: str, a: BuchiAutomaton, b: BuchiAutomaton = None,
                 limits: Limits = DEFAULT_LIMITS) -> BuchiAutomaton:
    """Boolean closure at the symbolic-language level.

    union / intersect take two automata (alphabets merged); complement takes
    one and works over its own alphabet.
    """
    if kind == "union":
        if b is None:
            raise ValidationError("union needs two automata")
        return union(a, b, limits)
    if kind == "intersect":
        if b is None:
            raise ValidationError("intersect needs two automata")
        return intersection(a, b, limits)
    if kind == "complement":
        if b is not None:
            raise ValidationError("complement takes a single automaton")
        return complement(a, limits)
    raise ValidationError(f"unknown boolean operation {kind!r}")
