import pytest

from impbox import (
    Event,
    FiniteSpace,
    Permutation,
    SpaceMismatchError,
    SpaceSizeError,
    ValidationError,
    enumerate_events,
)


def test_labels_must_be_distinct_and_nonempty():
    with pytest.raises(ValidationError):
        FiniteSpace(["a", "a"])
    with pytest.raises(ValidationError):
        FiniteSpace(["a", ""])
    with pytest.raises(ValidationError):
        FiniteSpace([])


def test_size_cap():
    FiniteSpace([f"e{i}" for i in range(24)])
    with pytest.raises(SpaceSizeError):
        FiniteSpace([f"e{i}" for i in range(25)])


def test_event_union():
    sp = FiniteSpace(["x1", "x2"])
    assert sp.event(["x1"]) | sp.event(["x2"]) == sp.full


def test_event_complement_law():
    sp = FiniteSpace(["x1", "x2", "x3"])
    a = sp.event(["x1", "x3"])
    assert (a & a.complement()).is_empty
    assert a | a.complement() == sp.full
    assert a.complement().complement() == a


def test_event_inclusion():
    sp = FiniteSpace([f"x{i}" for i in range(1, 6)])
    assert sp.event(["x1", "x2", "x3"]).issubset(sp.full)
    assert not sp.full.issubset(sp.event(["x1"]))


def test_event_mask_range():
    sp = FiniteSpace(["x1", "x2"])
    with pytest.raises(ValidationError):
        Event(sp, 0b100)


def test_mismatched_spaces():
    a = FiniteSpace(["x1", "x2"]).event(["x1"])
    b = FiniteSpace(["y1", "y2"]).event(["y1"])
    with pytest.raises(SpaceMismatchError):
        a | b


@pytest.mark.parametrize("n,count", [(1, 2), (2, 4), (6, 64)])
def test_enumerate_events_count_and_uniqueness(n, count):
    sp = FiniteSpace([f"x{i}" for i in range(n)])
    events = list(enumerate_events(sp))
    assert len(events) == count
    assert len(set(e.mask for e in events)) == count


def test_permutation_is_bijection():
    Permutation([2, 0, 1])
    with pytest.raises(ValidationError):
        Permutation([0, 0, 1])


def test_permutation_from_labels():
    sp = FiniteSpace(["a", "b", "c"])
    sigma = Permutation.from_labels(sp, ["c", "a", "b"])
    assert sigma.order == (2, 0, 1)
    assert sigma.first() == 2 and sigma.last() == 1
