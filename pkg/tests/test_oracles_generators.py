from fractions import Fraction
import random

import pytest

from pointfree.frames import build_frame, chain_frame, powerset_frame
from pointfree.generators import (DEFAULT_GRID, generate_frame, random_c_function,
                                  random_hausdorff, random_partial)
from pointfree.intervalfn import is_hausdorff, nearly_finite_check
from pointfree.oracles import (all_frames, grid_functions, labelled_orders, least_upper_bound,
                               unlabelled_orders)
from pointfree.realfn import C, constant


def test_poset_counts():
    # labelled posets and preorders on k points
    assert [len(labelled_orders(k)) for k in range(5)] == [1, 1, 3, 19, 219]
    assert [len(labelled_orders(k, False)) for k in range(4)] == [1, 1, 4, 29]
    assert [len(unlabelled_orders(k)) for k in range(6)] == [1, 1, 2, 5, 16, 63]


def test_frame_counts():
    sizes = [L.n for L in all_frames(6)]
    assert [sizes.count(k) for k in range(1, 7)] == [1, 1, 1, 2, 3, 5]


def test_grid_function_counts():
    grid = (-1, 0, 1)
    # continuous functions on a Boolean frame are atom-wise grid values
    assert len(grid_functions(powerset_frame(2), grid)) == 9
    assert len(grid_functions(powerset_frame(3), grid)) == 27
    # the 3-chain has only the constants
    assert len(grid_functions(chain_frame(3), grid)) == 3


def test_least_upper_bound(square):
    lub = least_upper_bound([constant(square, 0), constant(square, 1)], (0, 1))
    assert lub == constant(square, 1)


def test_generate_frame_deterministic():
    for seed in range(30):
        L = generate_frame(seed, 8)
        assert L == generate_frame(seed, 8)
        assert L.n <= 8
        assert build_frame(L.leq, L.names) == L
    assert generate_frame(0, 1).n == 1
    with pytest.raises(ValueError):
        generate_frame(0, 0)


def test_generate_frame_reaches_small_shapes():
    shapes = {generate_frame(seed, 4).n for seed in range(60)}
    assert {2, 3, 4} <= shapes


def test_random_functions_have_their_class():
    rng = random.Random(7)
    for _ in range(50):
        L = generate_frame(rng.randrange(1000), 7)
        assert random_c_function(rng, L, DEFAULT_GRID).kind == C
        h = random_hausdorff(rng, L, DEFAULT_GRID)
        assert is_hausdorff(h) and nearly_finite_check(h)
        assert is_hausdorff(random_hausdorff(rng, L, DEFAULT_GRID, nearly_finite=False))
        random_partial(rng, L, DEFAULT_GRID)
