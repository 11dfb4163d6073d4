"""Timed automata with input-determined guards, over ultimately periodic
timed words: operator evaluation, symbolic and proper alphabets, a Buchi
engine with boolean closure, and the logic/automaton translations."""

from .config import DEFAULT_LIMITS, Limits
from .errors import (AlphabetMismatchError, CapExceededError, CyclicReferenceError,
                     IdtaError, ParseError, StabilizationError, UnresolvedBindingError,
                     ValidationError, VocabularyError)
from .words import (FloatingLasso, Interval, PositionSet, TimedLasso, closed,
                    interval, lasso, mark_position)
from .operators import (Env, OpKind, Operator, eval_atom, eval_operator_guard,
                        eval_recursive_operator, fut_dist, last_dist, next_dist,
                        past_dist, rec_fut, rec_past)
from .guards import (GAnd, GAtom, GNot, GOr, GTrue, Guard, TRUE, dnf, guard_sat,
                     interval_vocabulary, operator_set)
from .alphabets import (LetterLasso, ProperAlphabet, ProperLetter, SymbolicLetter,
                        canonical_word, symbolic_tw_membership)
from .buchi import (BuchiAutomaton, accepts_lasso, bool_combine, complement,
                    intersection, is_empty_symbolic, project, union, witness_lasso)
from .automata import (Idta, from_proper, idta_complement, idta_intersection,
                       idta_union, timed_membership, to_proper)

__version__ = "0.1.0"
