from fractions import Fraction

import pytest

from impbox import FiniteSpace, MassAssignment, from_functions

SPACE6 = FiniteSpace(["x1", "x2", "x3", "x4", "x5", "x6"])

F_LOW = tuple(Fraction(v) for v in ("0", "0", "1/5", "1/2", "1/2", "1"))
F_UPP = tuple(Fraction(v) for v in ("3/10", "3/10", "7/10", "9/10", "9/10", "1"))

PI_UPP = tuple(Fraction(v) for v in ("3/10", "3/10", "7/10", "9/10", "9/10", "1"))
PI_LOW = tuple(Fraction(v) for v in ("1", "1", "1", "4/5", "4/5", "1/2"))

# nonzero focal masses of the random set equivalent to the expert p-box
EXPERT_MASSES = {
    0b000111: Fraction(1, 5),  # {x1,x2,x3}
    0b011111: Fraction(1, 10),  # {x1..x5}
    0b011100: Fraction(1, 5),  # {x3,x4,x5}
    0b111100: Fraction(1, 5),  # {x3,x4,x5,x6}
    0b111000: Fraction(1, 5),  # {x4,x5,x6}
    0b100000: Fraction(1, 10),  # {x6}
}


@pytest.fixture
def space6():
    return SPACE6


@pytest.fixture
def expert_pbox():
    """The running six-element expert-elicitation p-box."""
    return from_functions(SPACE6, F_LOW, F_UPP)


@pytest.fixture
def expert_mass():
    return MassAssignment(SPACE6, EXPERT_MASSES)
