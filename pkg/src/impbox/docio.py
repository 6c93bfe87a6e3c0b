"""JSON document format for every representation the library handles.

Numbers are parsed as exact rationals ("3/10", "0.3" or plain integers)
and always serialized back as rationals, so parse/serialize round trips
are exact and canonical output is byte-stable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .capacity import Capacity, validate_capacity
from .credal import ProbabilityVector
from .errors import ImpboxError
from .interval import ProbabilityInterval
from .pbox import GeneralizedPBox, from_functions, from_nested_sets
from .possibility import PossibilityDistribution
from .randomset import MassAssignment
from .space import Event, FiniteSpace, enumerate_events

KINDS = (
    "capacity",
    "mass",
    "possibility",
    "interval",
    "gen_pbox",
    "nested_bounds",
    "probability",
)


class DocumentError(ImpboxError):
    """A document failed to parse; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class Document:
    kind: str
    space: FiniteSpace
    #: the constructed domain object for this kind
    obj: Any


def _max_elements() -> int:
    try:
        return int(os.environ.get("IMPBOX_MAX_N", "24"))
    except ValueError:
        return 24


def _rational(value, path: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError("expected a rational number, got a boolean", path)
    try:
        q = Fraction(value) if not isinstance(value, float) else Fraction(str(value))
    except (ValueError, ZeroDivisionError, TypeError):
        raise DocumentError(f"cannot parse {value!r} as a rational", path) from None
    if not 0 <= q <= 1:
        raise DocumentError(f"value {q} outside [0, 1]", path)
    return q


def _vector(payload, field: str, space: FiniteSpace) -> list[Fraction]:
    if field not in payload:
        raise DocumentError("missing field", f"$.{field}")
    raw = payload[field]
    if not isinstance(raw, list):
        raise DocumentError("expected a list", f"$.{field}")
    if len(raw) != space.size:
        raise DocumentError(
            f"expected {space.size} entries, got {len(raw)}", f"$.{field}"
        )
    return [_rational(v, f"$.{field}[{i}]") for i, v in enumerate(raw)]


def _event(space: FiniteSpace, key: str, path: str) -> Event:
    labels = [part for part in key.split(",") if part]
    try:
        return space.event(labels)
    except ImpboxError as exc:
        raise DocumentError(str(exc), path) from None


def _event_key(event: Event) -> str:
    return ",".join(event.labels)


def parse(text: str) -> Document:
    """Parse a document, building and validating its domain object."""
    try:
        payload = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise DocumentError("top level must be an object")
    kind = payload.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"kind must be one of {KINDS}, got {kind!r}", "$.kind")
    labels = payload.get("space")
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise DocumentError("space must be a list of labels", "$.space")
    if len(labels) > _max_elements():
        raise DocumentError(
            f"space exceeds the configured maximum of {_max_elements()} elements "
            "(IMPBOX_MAX_N)",
            "$.space",
        )
    try:
        space = FiniteSpace(labels)
    except ImpboxError as exc:
        raise DocumentError(str(exc), "$.space") from None

    try:
        if kind == "probability":
            obj = ProbabilityVector(space, _vector(payload, "p", space))
        elif kind == "possibility":
            obj = PossibilityDistribution(space, _vector(payload, "pi", space))
        elif kind == "interval":
            obj = ProbabilityInterval(
                space, _vector(payload, "l", space), _vector(payload, "u", space)
            )
        elif kind == "gen_pbox":
            obj = from_functions(
                space, _vector(payload, "F_low", space), _vector(payload, "F_upp", space)
            )
        elif kind == "mass":
            focal = payload.get("focal")
            if not isinstance(focal, dict):
                raise DocumentError("focal must be an object", "$.focal")
            masses = {
                _event(space, key, f"$.focal[{key!r}]"): _rational(
                    val, f"$.focal[{key!r}]"
                )
                for key, val in focal.items()
            }
            obj = MassAssignment(space, masses)
        elif kind == "capacity":
            values = payload.get("values")
            if not isinstance(values, dict):
                raise DocumentError("values must be an object", "$.values")
            table = {
                _event(space, key, f"$.values[{key!r}]"): _rational(
                    val, f"$.values[{key!r}]"
                )
                for key, val in values.items()
            }
            obj = validate_capacity(space, table)
        elif kind == "nested_bounds":
            levels = payload.get("levels")
            if not isinstance(levels, list):
                raise DocumentError("levels must be a list", "$.levels")
            parsed = []
            for i, level in enumerate(levels):
                if not isinstance(level, dict) or "event" not in level:
                    raise DocumentError("each level needs an event", f"$.levels[{i}]")
                parsed.append(
                    (
                        _event(space, level["event"], f"$.levels[{i}].event"),
                        _rational(level.get("lo", 0), f"$.levels[{i}].lo"),
                        _rational(level.get("hi", 1), f"$.levels[{i}].hi"),
                    )
                )
            obj = from_nested_sets(space, parsed)
        else:  # pragma: no cover
            raise AssertionError(kind)
    except DocumentError:
        raise
    except ImpboxError as exc:
        raise DocumentError(str(exc)) from None
    return Document(kind=kind, space=space, obj=obj)


def _payload(doc: Document) -> dict:
    space = doc.space
    obj = doc.obj
    if doc.kind == "probability":
        return {"p": [str(v) for v in obj.p]}
    if doc.kind == "possibility":
        return {"pi": [str(v) for v in obj.pi]}
    if doc.kind == "interval":
        return {"l": [str(v) for v in obj.lower], "u": [str(v) for v in obj.upper]}
    if doc.kind == "gen_pbox":
        return {
            "F_low": [str(v) for v in obj.f_lower],
            "F_upp": [str(v) for v in obj.f_upper],
        }
    if doc.kind == "mass":
        return {
            "focal": {
                _event_key(Event(space, mask)): str(m) for mask, m in obj.focal
            }
        }
    if doc.kind == "capacity":
        return {
            "values": {
                _event_key(event): str(obj.values[event.mask])
                for event in enumerate_events(space)
            }
        }
    if doc.kind == "nested_bounds":
        return {
            "levels": [
                {"event": _event_key(event), "lo": str(lo), "hi": str(hi)}
                for event, lo, hi in obj.levels()
            ]
        }
    raise AssertionError(doc.kind)  # pragma: no cover


def serialize(doc: Document) -> str:
    """Canonical text form: fixed key order, rationals as "p/q" strings."""
    body = {"kind": doc.kind, "space": list(doc.space.labels)}
    body.update(_payload(doc))
    return json.dumps(body, indent=2) + "\n"


def document_for(obj: Any) -> Document:
    """Wrap a domain object in a document of the matching kind."""
    kinds = {
        ProbabilityVector: "probability",
        PossibilityDistribution: "possibility",
        ProbabilityInterval: "interval",
        GeneralizedPBox: "gen_pbox",
        MassAssignment: "mass",
        Capacity: "capacity",
    }
    for cls, kind in kinds.items():
        if isinstance(obj, cls):
            return Document(kind=kind, space=obj.space, obj=obj)
    raise DocumentError(f"no document kind for {type(obj).__name__}")
