"""Scalar-field coercion for the real-line path.

A computation is exact iff every input scalar is exact, so sequences are
coerced jointly: all-int/Fraction inputs become Fractions (plain Python
``1 / int`` would silently produce a float), and anything touching a float
pulls the whole computation into binary64.
"""

from __future__ import annotations

from fractions import Fraction


def is_exact_scalar(v) -> bool:
    return not isinstance(v, (float, complex))


def coerce_real_field(*seqs):
    """Coerce sequences jointly into one scalar field; returns tuples."""
    flat = [v for s in seqs for v in s]
    if all(is_exact_scalar(v) for v in flat):
        return tuple(tuple(Fraction(v) for v in s) for s in seqs)
    return tuple(tuple(float(v) for v in s) for s in seqs)
