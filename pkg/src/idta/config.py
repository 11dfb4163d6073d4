"""Tunable size caps and stabilization depth, threaded through evaluators."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    """Caps shared by evaluators, translators and the compiler.

    stabilize_k: minimum number of period blocks computed when detecting
        eventually-periodic behaviour.  Evaluators may compute more blocks
        when the interval endpoints demand a deeper horizon, but never fewer,
        and the last two blocks must agree or a StabilizationError is raised.
    state_cap: maximum number of states any constructed automaton may reach.
    dnf_cap: maximum number of clauses produced when normalizing a guard.
    """

    stabilize_k: int = 3
    state_cap: int = 20000
    dnf_cap: int = 4096

    def with_k(self, k):
        return replace(self, stabilize_k=k)


DEFAULT_LIMITS = Limits()
