import pytest

from pointfree.frames import FiniteFrame, chain_frame, powerset_frame


@pytest.fixture
def chain3():
    return chain_frame(3)


@pytest.fixture
def square():
    return powerset_frame(2)


@pytest.fixture
def sierpinski_frame():
    # opens of the Sierpinski space, which is again a 3-chain
    return FiniteFrame.from_pairs(3, [(0, 1), (1, 2)], ["{}", "{x}", "{x,y}"])
