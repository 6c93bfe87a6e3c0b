"""Brute-force oracle over credal polytopes.

A credal polytope is the probability simplex intersected with interval
constraints on events.  Everything here is exact: membership is plain
rational arithmetic, envelopes are exact linear programs.  This module
is the independent verifier the rest of the library is checked against,
so it deliberately knows nothing about p-boxes, random sets, etc.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import _simplex
from .errors import InfeasibleError, SpaceMismatchError, ValidationError
from .space import Event, FiniteSpace


@dataclass(frozen=True)
class ProbabilityVector:
    """A probability distribution on the elements of a finite space."""

    space: FiniteSpace
    p: tuple[Fraction, ...]

    def __init__(self, space: FiniteSpace, p: Iterable):
        p = tuple(Fraction(v) for v in p)
        if len(p) != space.size:
            raise ValidationError(
                f"expected {space.size} probabilities, got {len(p)}"
            )
        if any(v < 0 for v in p):
            raise ValidationError("probabilities must be non-negative")
        if sum(p) != 1:
            raise ValidationError(f"probabilities must sum to 1, got {sum(p)}")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "p", p)

    def prob(self, event: Event) -> Fraction:
        if event.space != self.space:
            raise SpaceMismatchError("event and probability vector spaces differ")
        return sum((self.p[i] for i in event.indices()), Fraction(0))


@dataclass(frozen=True)
class CredalPolytope:
    """Interval constraints on events, intersected with the simplex."""

    space: FiniteSpace
    constraints: tuple[tuple[Event, Fraction, Fraction], ...]

    def __init__(self, space: FiniteSpace, constraints: Iterable):
        checked = []
        for event, lo, hi in constraints:
            if event.space != space:
                raise SpaceMismatchError("constraint event on a different space")
            lo, hi = Fraction(lo), Fraction(hi)
            if not 0 <= lo <= hi <= 1:
                raise ValidationError(
                    f"constraint bounds must satisfy 0 <= lo <= hi <= 1, "
                    f"got [{lo}, {hi}] for {event}"
                )
            checked.append((event, lo, hi))
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "constraints", tuple(checked))


class Envelope(NamedTuple):
    value: Fraction
    witness: ProbabilityVector


class CoherenceReport(NamedTuple):
    coherent: bool
    #: one entry per constraint: (event, side, stated bound, attained envelope)
    slack: tuple[tuple[Event, str, Fraction, Fraction], ...]


def is_member(poly: CredalPolytope, p: ProbabilityVector) -> bool:
    """True iff p satisfies every constraint of the polytope exactly."""
    if p.space != poly.space:
        raise SpaceMismatchError("vector and polytope spaces differ")
    return all(lo <= p.prob(event) <= hi for event, lo, hi in poly.constraints)


def _le_rows(poly: CredalPolytope) -> tuple[list[list[Fraction]], list[Fraction]]:
    """All constraints as <= rows on p, deduplicated and pruned.

    Each (event, lo, hi) yields P(event) <= hi and P(event^c) <= 1 - lo.
    Rows with bound >= 1 are vacuous inside the simplex; a row is also
    dropped when another row covers a superset event with a smaller or
    equal bound.
    """
    n = poly.space.size
    best: dict[int, Fraction] = {}
    for event, lo, hi in poly.constraints:
        for mask, bound in (
            (event.mask, hi),
            (event.complement().mask, 1 - lo),
        ):
            if bound >= 1 or mask == 0:
                continue
            if mask not in best or bound < best[mask]:
                best[mask] = bound
    items = sorted(best.items())
    kept = []
    for mask, bound in items:
        redundant = any(
            other != mask and mask & ~other == 0 and obound <= bound
            for other, obound in items
        )
        if not redundant:
            kept.append((mask, bound))
    rows = [[Fraction(1 if mask >> i & 1 else 0) for i in range(n)] for mask, _ in kept]
    rhs = [bound for _, bound in kept]
    return rows, rhs


def _solve(poly: CredalPolytope, objective: Sequence[Fraction]):
    n = poly.space.size
    a_ub, b_ub = _le_rows(poly)
    a_eq = [[Fraction(1)] * n]
    b_eq = [Fraction(1)]
    try:
        value, x = _simplex.solve_min(objective, a_ub, b_ub, a_eq, b_eq)
    except _simplex.Infeasible:
        raise InfeasibleError("the credal polytope is empty") from None
    return value, ProbabilityVector(poly.space, x)


def lower_envelope(poly: CredalPolytope, a: Event) -> Envelope:
    """Exact minimum of P(a) over the polytope, with an attaining member."""
    if a.space != poly.space:
        raise SpaceMismatchError("event and polytope spaces differ")
    indicator = [Fraction(1 if a.mask >> i & 1 else 0) for i in range(poly.space.size)]
    if a.is_empty or a.is_full:
        _, witness = _solve(poly, [Fraction(0)] * poly.space.size)
        return Envelope(Fraction(1 if a.is_full else 0), witness)
    value, witness = _solve(poly, indicator)
    return Envelope(value, witness)


def upper_envelope(poly: CredalPolytope, a: Event) -> Envelope:
    """Exact maximum of P(a) over the polytope, with an attaining member."""
    if a.space != poly.space:
        raise SpaceMismatchError("event and polytope spaces differ")
    if a.is_empty or a.is_full:
        _, witness = _solve(poly, [Fraction(0)] * poly.space.size)
        return Envelope(Fraction(1 if a.is_full else 0), witness)
    negated = [Fraction(-1 if a.mask >> i & 1 else 0) for i in range(poly.space.size)]
    value, witness = _solve(poly, negated)
    return Envelope(-value, witness)


def is_empty(poly: CredalPolytope) -> bool:
    """True iff no probability vector satisfies all constraints."""
    try:
        _solve(poly, [Fraction(0)] * poly.space.size)
    except InfeasibleError:
        return True
    return False


def is_coherent(poly: CredalPolytope) -> CoherenceReport:
    """Check that every stated bound is attained by the envelopes.

    Raises ``InfeasibleError`` on an empty polytope.  The report names
    each constraint side whose stated bound is not the exact envelope.
    """
    slack = []
    for event, lo, hi in poly.constraints:
        attained_lo = lower_envelope(poly, event).value
        if attained_lo != lo:
            slack.append((event, "lower", lo, attained_lo))
        attained_hi = upper_envelope(poly, event).value
        if attained_hi != hi:
            slack.append((event, "upper", hi, attained_hi))
    return CoherenceReport(not slack, tuple(slack))
