from fractions import Fraction

import pytest

from pointfree.errors import GNotPositive, NotPositive, NotWeakUnit
from pointfree.frames import powerset_frame
from pointfree.realfn import add, constant, indicator, is_scale, join_op, leq, scalar
from pointfree.rieszfd import (BandFD, RieszVec, atom_prime, band_generated,
                               band_membership_oracle, band_scale, bands_frame, bands_booleanization_check,
                               evaluate_at_atoms, is_band, is_weak_unit, m_embed,
                               sandwich_check, scale_conditions)

Q = Fraction
v = RieszVec.of


def test_vector_lattice_ops():
    f, g = v(2, -1), v(1, 3)
    assert f + g == v(3, 2)
    assert f.join(g) == v(2, 3) and f.meet(g) == v(1, -1)
    assert f.abs() == v(2, 1) and f.pos() == v(2, 0)
    assert f.scale(Q("1/2")) == v(1, Q("-1/2"))
    with pytest.raises(ValueError):
        f + v(1, 2, 3)


def test_band_generated():
    assert band_generated(v(0, 0)).support == frozenset()
    assert band_generated(v(2, -1)).support == {0, 1}
    assert band_generated(v(0, 5, 0)).mask == 2


def test_band_membership_oracle():
    assert band_membership_oracle(v(7, 0), v(1, 0))
    assert not band_membership_oracle(v(7, 1), v(1, 0))
    assert band_membership_oracle(v(0, 0), v(0, 0))


def test_is_band():
    probes = [v(a, b) for a in (-1, 0, 2) for b in (-1, 0, 2)]
    assert is_band(2, {0}, probes)
    assert is_band(2, set(), probes)


def test_weak_units():
    assert is_weak_unit(v(1, 1, 1))
    assert not is_weak_unit(v(1, 0))
    assert is_weak_unit(v(1, 2, Q("1/3")))
    with pytest.raises(NotPositive):
        is_weak_unit(v(1, -1))


def test_band_scale_examples():
    s = band_scale(v(2, -1), v(1, 1))
    full, first = 3, 1
    assert s(Q(-2)) == full
    assert s(Q(-1)) == first and s(Q(1)) == first
    assert s(Q(2)) == 0 and s(Q(5)) == 0
    e = v(1, 1, 1)
    s = band_scale(e, e)
    assert s(Q("99/100")) == 7 and s(Q(1)) == 0
    s = band_scale(v(0, 0, 0), e)
    assert s(Q("-1/100")) == 7 and s(Q(0)) == 0
    assert scale_conditions(v(2, -1), v(1, 1))


def test_band_scale_needs_weak_unit():
    with pytest.raises(NotWeakUnit):
        band_scale(v(1, 1), v(1, 0))


def test_embedding_examples():
    e = v(1, 2)
    B = powerset_frame(2)
    assert m_embed(e, e) == constant(B, 1)
    assert m_embed(v(0, 0), e) == constant(B, 0)
    assert m_embed(v(3, 0), v(1, 1)) == scalar(3, indicator(B, 1))
    f, g = v(2, -1), v(-1, Q("1/2"))
    assert m_embed(f + g, e) == add(m_embed(f, e), m_embed(g, e))
    assert m_embed(f.join(g), e) == join_op(m_embed(f, e), m_embed(g, e))


def test_atom_evaluation():
    assert atom_prime(3, 1) == 0b101
    vals = evaluate_at_atoms(m_embed(v(2, -1, 0), v(1, 2, 3)), 3)
    assert vals == [(2, 2), (Q("-1/2"), Q("-1/2")), (0, 0)]


def test_sandwich_examples():
    B = powerset_frame(2)
    e = v(1, 1)
    f, h = sandwich_check(indicator(B, 1), e)
    assert f == v(Q("1/2"), 0) and h == v(1, 0)
    g = m_embed(v(3, 2), e)
    f, h = sandwich_check(g, e)
    assert leq(m_embed(f, e), g) and leq(g, m_embed(h, e))
    with pytest.raises(GNotPositive):
        sandwich_check(constant(B, 0), e)
    with pytest.raises(GNotPositive):
        sandwich_check(constant(B, -1), e)


def test_bands_frame_sizes():
    for n, size in ((1, 2), (2, 4), (3, 8)):
        bands, frame = bands_frame(n)
        assert len(bands) == size and frame.is_boolean
    assert {b.support for b in bands_frame(1)[0]} == {frozenset(), frozenset({0})}


def test_bands_match_booleanization():
    for n in range(1, 5):
        phi = bands_booleanization_check(n)
        assert phi.is_iso
        bands, _ = bands_frame(n)
        # each band goes to the element with the same support
        assert all(phi(i) == b.mask for i, b in enumerate(bands))


def test_bands_booleanization_bounds():
    with pytest.raises(ValueError):
        bands_booleanization_check(0)
