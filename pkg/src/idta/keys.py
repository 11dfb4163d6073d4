"""Deterministic sort keys for heterogeneous hashable values.

Letters, operators and formula parameters get sorted in many places (alphabet
orders, canonical state numbering, text output).  Python reprs of frozensets
are insertion-order dependent, so everything is routed through canon_key.
"""

import dataclasses
from fractions import Fraction


def canon_key(obj):
    """A totally ordered, deterministic key for the value kinds we sort."""
    if obj is None:
        return ("0none",)
    if isinstance(obj, bool):
        return ("1bool", obj)
    if isinstance(obj, int):
        return ("2num", Fraction(obj), "")
    if isinstance(obj, Fraction):
        return ("2num", obj, "")
    if isinstance(obj, str):
        return ("3str", obj)
    if isinstance(obj, tuple):
        return ("4tuple", tuple(canon_key(x) for x in obj))
    if isinstance(obj, (frozenset, set)):
        return ("5set", tuple(sorted(canon_key(x) for x in obj)))
    if dataclasses.is_dataclass(obj):
        fields = tuple(canon_key(getattr(obj, f.name)) for f in dataclasses.fields(obj))
        return ("6" + type(obj).__name__, fields)
    raise TypeError(f"no canonical key for {type(obj).__name__}: {obj!r}")


def canon_sorted(items):
    return sorted(items, key=canon_key)
