"""Finite random sets: mass assignments, belief/plausibility, contours.

A mass assignment is stored in canonical form: only focal events with
strictly positive mass are kept, so equality of assignments is equality
of their focal maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .credal import CredalPolytope
from .errors import SpaceMismatchError, ValidationError
from .interval import ProbabilityInterval
from .space import Event, FiniteSpace, enumerate_events


@dataclass(frozen=True)
class MassAssignment:
    """Positive rational masses on non-empty focal events, summing to 1."""

    space: FiniteSpace
    #: (event mask, mass) pairs sorted by mask
    focal: tuple[tuple[int, Fraction], ...]

    def __init__(self, space: FiniteSpace, masses: Mapping):
        canonical: dict[int, Fraction] = {}
        for key, val in masses.items():
            if isinstance(key, Event):
                if key.space != space:
                    raise SpaceMismatchError("focal event on a different space")
                mask = key.mask
            else:
                mask = int(key)
                Event(space, mask)  # range check
            val = Fraction(val)
            if val < 0:
                raise ValidationError(f"negative mass {val} on {Event(space, mask)}")
            if val == 0:
                continue
            if mask == 0:
                raise ValidationError("the empty set cannot carry mass")
            canonical[mask] = canonical.get(mask, Fraction(0)) + val
        total = sum(canonical.values())
        if total != 1:
            raise ValidationError(f"masses must sum to 1, got {total}")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "focal", tuple(sorted(canonical.items())))

    def focal_events(self) -> tuple[Event, ...]:
        return tuple(Event(self.space, mask) for mask, _ in self.focal)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.focal)


def bel(ms: MassAssignment, a: Event) -> Fraction:
    """Total mass of focal events contained in a."""
    if a.space != ms.space:
        raise SpaceMismatchError("event and mass assignment spaces differ")
    return sum((m for mask, m in ms.focal if mask & ~a.mask == 0), Fraction(0))


def pl(ms: MassAssignment, a: Event) -> Fraction:
    """Total mass of focal events meeting a; equals 1 - bel(complement)."""
    if a.space != ms.space:
        raise SpaceMismatchError("event and mass assignment spaces differ")
    return sum((m for mask, m in ms.focal if mask & a.mask), Fraction(0))


def contour(ms: MassAssignment) -> tuple[Fraction, ...]:
    """Singleton plausibilities, one per element in label order."""
    return tuple(pl(ms, ms.space.singleton(i)) for i in range(ms.space.size))


def is_nested(ms: MassAssignment) -> bool:
    """True iff the focal events form a chain under inclusion."""
    masks = sorted((mask for mask, _ in ms.focal), key=lambda m: m.bit_count())
    return all(a & ~b == 0 for a, b in zip(masks, masks[1:]))


def simple_support(a: Event, mass_on_a) -> MassAssignment:
    """The two-focal assignment m(a) = mass, m(X) = 1 - mass."""
    mass_on_a = Fraction(mass_on_a)
    if a.is_empty:
        raise ValidationError("a simple support set must be non-empty")
    if not 0 <= mass_on_a <= 1:
        raise ValidationError(f"mass must lie in [0, 1], got {mass_on_a}")
    full = a.space.full
    return MassAssignment(
        a.space, {a.mask: mass_on_a, full.mask: 1 - mass_on_a}
    )


def to_interval(ms: MassAssignment) -> ProbabilityInterval:
    """Tightest probability interval outer-approximating the random set.

    Per element: lower = bel of the singleton, upper = pl of the
    singleton.  The result is always reachable.
    """
    lower = [bel(ms, ms.space.singleton(i)) for i in range(ms.space.size)]
    upper = [pl(ms, ms.space.singleton(i)) for i in range(ms.space.size)]
    return ProbabilityInterval(ms.space, lower, upper)


def to_polytope(ms: MassAssignment) -> CredalPolytope:
    """Constraints bel(A) <= P(A) <= pl(A) for every event A."""
    constraints = [
        (event, bel(ms, event), pl(ms, event))
        for event in enumerate_events(ms.space)
        if not event.is_empty and not event.is_full
    ]
    return CredalPolytope(ms.space, constraints)
