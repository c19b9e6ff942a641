from itertools import product

import pytest

from pointfree.errors import NotAFrameHom, NotALattice, NotAPartialOrder, NotDistributive
from pointfree.frames import (FiniteFrame, FrameHom, booleanize, build_frame, chain_frame,
                              classify, completely_below, downset_frame, heyting,
                              identity_hom, interpolation_chain, is_completely_below,
                              is_cozero, powerset_frame, pseudocomplement, rather_below)
from pointfree.oracles import all_frames, cozero_set
from pointfree.spatial import is_spatial, primes, spectrum


def m3():
    # 0 < a, b, c < 1 with a, b, c pairwise incomparable
    return [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]


def test_chain_and_square_are_frames(chain3, square):
    assert chain3.n == 3 and chain3.bottom == 0 and chain3.top == 2
    assert square.n == 4 and square.is_boolean


def test_m3_is_not_distributive():
    with pytest.raises(NotDistributive):
        FiniteFrame.from_pairs(5, m3())


def test_bad_orders_rejected():
    with pytest.raises(NotAPartialOrder):
        build_frame([[True, True], [True, True]])
    with pytest.raises(NotALattice):
        # two maximal elements, no top
        FiniteFrame.from_pairs(3, [(0, 1), (0, 2)])


def test_heyting_and_pseudocomplement_on_chain(chain3):
    m = chain3.index("m")
    assert heyting(chain3, m, 0) == 0
    assert heyting(chain3, m, m) == chain3.top
    assert pseudocomplement(chain3, m) == 0
    assert pseudocomplement(chain3, 0) == chain3.top


def test_heyting_adjunction_exhaustive():
    for L in all_frames(6):
        for a, b, c in product(L.elements, repeat=3):
            assert L.le(L.meet(a, b), c) == L.le(a, L.arrow(b, c))


def test_rather_below_on_chain(chain3):
    m = chain3.index("m")
    assert rather_below(chain3, 0, m)
    assert not rather_below(chain3, m, m)
    assert rather_below(chain3, m, chain3.top)


def test_completely_below_matches_complemented_interpolant():
    for L in all_frames(6):
        cb = completely_below(L)
        for b, a in product(L.elements, repeat=2):
            between = any(L.is_complemented(c) and L.le(b, c) and L.le(c, a)
                          for c in L.elements)
            assert cb[b][a] == between
            assert is_completely_below(L, b, a) == between
            chain = interpolation_chain(L, b, a)
            assert (chain is not None) == between


def test_classify_examples(chain3, square):
    assert all(classify(powerset_frame(3)).flags.values())
    c = classify(chain3)
    assert c.regular is False and c.extremally_disconnected is True
    assert c.boolean is False
    assert c.witnesses["regular"] == (chain3.index("m"),)


def test_classify_non_extremally_disconnected():
    # opens of three points where two are closed: downsets of the V-shaped poset
    L = downset_frame([[True, False, True], [False, True, True], [False, False, True]])
    c = classify(L)
    assert not c.extremally_disconnected
    assert c.witnesses["extremally_disconnected"]


def test_cozero_examples(chain3):
    m = chain3.index("m")
    assert not is_cozero(chain3, m)
    assert is_cozero(chain3, chain3.top)
    assert is_cozero(chain3, 0)


def test_cozero_against_grid_oracle():
    grid = (-1, 0, 1)
    for L in all_frames(6):
        oracle = cozero_set(L, grid)
        assert {a for a in L.elements if is_cozero(L, a)} == oracle


def test_booleanize_chain(chain3):
    boo = booleanize(chain3)
    assert boo.frame.n == 2 and boo.frame.is_boolean
    assert boo.beta(chain3.index("m")) == boo.frame.top
    assert boo.beta(0) == boo.frame.bottom


def test_booleanize_boolean_is_identity(square):
    boo = booleanize(square)
    assert boo.frame.n == square.n
    assert boo.beta.is_iso


def test_booleanize_two_antichain():
    L = downset_frame([[True, False], [False, True]])
    assert booleanize(L).frame.n == L.n == 4


def test_frame_hom_validation(chain3, square):
    with pytest.raises(NotAFrameHom):
        FrameHom(chain3, chain3, (0, 0, 0))
    ident = identity_hom(square)
    assert ident.is_iso
    assert ident.compose(ident) == ident


def test_spectrum_examples(chain3, square):
    assert spectrum(square).n == 2
    assert sorted(chain3.names[p] for p in primes(chain3)) == ["0", "m"]
    sp = spectrum(chain3)
    assert sp.n == 2 and len(sp.opens) == 3
    assert is_spatial(chain3) and is_spatial(square)


def test_frames_are_spatial_exhaustive():
    assert all(is_spatial(L) for L in all_frames(6))


def test_downset_frame_names():
    L = downset_frame([[True, True], [False, True]], names=["a", "b"])
    assert L.names == ("{}", "{a}", "{a,b}")


def test_chain_frame_generic_names():
    assert chain_frame(4).names == ("0", "1", "2", "3")
