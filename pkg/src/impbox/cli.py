"""Command line front end: check, convert, query, verify.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 oracle
mismatch (verify only).
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import capacity as cap
from . import convert as conv
from . import credal, docio, interval, pbox, possibility, randomset
from .capacity import Capacity
from .credal import CredalPolytope, ProbabilityVector
from .errors import ImpboxError
from .interval import ProbabilityInterval
from .pbox import GeneralizedPBox
from .possibility import PossibilityDistribution
from .randomset import MassAssignment
from .space import Permutation, enumerate_events


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _load(path: str) -> docio.Document:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        _fail(str(exc))
    try:
        return docio.parse(text)
    except ImpboxError as exc:
        _fail(str(exc))


def _fmt(q: Fraction) -> str:
    return f"{q} = {float(q)!r}"


@click.group()
def main():
    """Exact tools for finite imprecise-probability documents."""


@main.command()
@click.argument("file", type=click.Path())
def check(file):
    """Validate a document and report its classification."""
    doc = _load(file)
    obj = doc.obj
    click.echo(f"kind: {doc.kind}")
    click.echo(f"space: {len(doc.space.labels)} elements")
    click.echo("valid: yes")
    if isinstance(obj, Capacity):
        click.echo(f"2-monotone: {'yes' if cap.is_2_monotone(obj) else 'no'}")
        click.echo(f"infinity-monotone: {'yes' if cap.is_infty_monotone(obj) else 'no'}")
        click.echo(f"additive: {'yes' if cap.is_additive(obj) else 'no'}")
    elif isinstance(obj, MassAssignment):
        click.echo(f"focal events: {len(obj.focal)}")
        click.echo(f"nested: {'yes' if randomset.is_nested(obj) else 'no'}")
    elif isinstance(obj, PossibilityDistribution):
        click.echo(f"distinct levels: {len(obj.levels())}")
    elif isinstance(obj, ProbabilityInterval):
        click.echo(f"non-empty: {'yes' if obj.non_empty else 'no'}")
        click.echo(f"reachable: {'yes' if obj.reachable else 'no'}")
    elif isinstance(obj, GeneralizedPBox):
        click.echo("comonotone: yes")
        click.echo(f"levels: {len(obj.level_masks)}")
        click.echo(f"blocks: {len(obj.block_masks)}")


def _convert(doc: docio.Document, target: str, sigma: str | None):
    obj = doc.obj
    source = "gen_pbox" if isinstance(obj, GeneralizedPBox) else doc.kind
    arrows = {
        ("gen_pbox", "mass"): lambda: pbox.to_random_set(obj),
        ("gen_pbox", "interval"): lambda: conv.pbox_to_interval(obj),
        ("gen_pbox", "gen_pbox"): lambda: obj,
        ("interval", "gen_pbox"): lambda: conv.interval_to_sigma_pbox(
            obj,
            Permutation.from_labels(doc.space, sigma.split(","))
            if sigma
            else Permutation.identity(doc.space.size),
        ),
        ("possibility", "mass"): lambda: possibility.to_random_set(obj),
        ("mass", "interval"): lambda: randomset.to_interval(obj),
    }
    key = (source, target)
    if key not in arrows:
        supported = ", ".join(f"{s}->{t}" for s, t in sorted(arrows) if s != t)
        raise click.UsageError(
            f"unsupported conversion {source}->{target}; supported: {supported}"
        )
    return arrows[key]()


@main.command()
@click.argument("file", type=click.Path())
@click.option("--to", "target", required=True, type=click.Choice(docio.KINDS))
@click.option(
    "--sigma",
    default=None,
    help="comma-separated element order for interval->gen_pbox",
)
def convert(file, target, sigma):
    """Convert a document to another kind; canonical output on stdout."""
    doc = _load(file)
    try:
        result = _convert(doc, target, sigma)
    except ImpboxError as exc:
        _fail(str(exc))
    click.echo(docio.serialize(docio.document_for(result)), nl=False)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--event", "event_spec", required=True, help="comma-separated labels")
@click.option("--bound", required=True, type=click.Choice(["lower", "upper"]))
def query(file, event_spec, bound):
    """Print the exact lower or upper probability of an event."""
    doc = _load(file)
    obj = doc.obj
    try:
        a = doc.space.event(lab for lab in event_spec.split(",") if lab)
        if isinstance(obj, GeneralizedPBox):
            value = pbox.lower_prob(obj, a) if bound == "lower" else pbox.upper_prob(obj, a)
        elif isinstance(obj, MassAssignment):
            value = randomset.bel(obj, a) if bound == "lower" else randomset.pl(obj, a)
        elif isinstance(obj, PossibilityDistribution):
            value = (
                possibility.necessity(obj, a)
                if bound == "lower"
                else possibility.possibility(obj, a)
            )
        elif isinstance(obj, ProbabilityInterval):
            lo, hi = interval.event_bounds(obj, a)
            value = lo if bound == "lower" else hi
        elif isinstance(obj, ProbabilityVector):
            value = obj.prob(a)
        elif isinstance(obj, Capacity):
            value = obj(a) if bound == "lower" else cap.conjugate(obj)(a)
        else:  # pragma: no cover
            raise click.UsageError(f"cannot query a {doc.kind} document")
    except ImpboxError as exc:
        _fail(str(exc))
    click.echo(_fmt(value))


def _bounds_and_polytope(doc: docio.Document):
    obj = doc.obj
    if isinstance(obj, GeneralizedPBox):
        return (
            lambda a: (pbox.lower_prob(obj, a), pbox.upper_prob(obj, a)),
            pbox.to_polytope(obj),
        )
    if isinstance(obj, MassAssignment):
        return (
            lambda a: (randomset.bel(obj, a), randomset.pl(obj, a)),
            randomset.to_polytope(obj),
        )
    if isinstance(obj, PossibilityDistribution):
        return (
            lambda a: (possibility.necessity(obj, a), possibility.possibility(obj, a)),
            possibility.to_polytope(obj),
        )
    if isinstance(obj, ProbabilityInterval):
        return (
            lambda a: interval.event_bounds(obj, a),
            interval.to_polytope(obj),
        )
    if isinstance(obj, ProbabilityVector):
        poly = CredalPolytope(
            doc.space,
            [(doc.space.singleton(i), v, v) for i, v in enumerate(obj.p)],
        )
        return lambda a: (obj.prob(a), obj.prob(a)), poly
    raise click.UsageError(
        f"verify does not support {doc.kind} documents; supported kinds: "
        "gen_pbox, nested_bounds, mass, possibility, interval, probability"
    )


@main.command()
@click.argument("file", type=click.Path())
def verify(file):
    """Cross-check every event bound against the exact polytope oracle."""
    doc = _load(file)
    try:
        formula, poly = _bounds_and_polytope(doc)
        total = 0
        for event in enumerate_events(doc.space):
            lo, hi = formula(event)
            oracle_lo = credal.lower_envelope(poly, event).value
            oracle_hi = credal.upper_envelope(poly, event).value
            if (lo, hi) != (oracle_lo, oracle_hi):
                click.echo(
                    f"mismatch on {event!r}: formula [{lo}, {hi}] vs "
                    f"oracle [{oracle_lo}, {oracle_hi}]",
                    err=True,
                )
                sys.exit(3)
            total += 1
    except ImpboxError as exc:
        _fail(str(exc))
    click.echo(f"{total}/{total} events agree")


if __name__ == "__main__":
    main()
