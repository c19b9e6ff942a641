from fractions import Fraction
from itertools import product

import pytest

from pointfree.errors import MeetNotZero, NotAnExtendedScale, NotBoolean, OracleNotIso
from pointfree.frames import FrameHom, chain_frame, identity_hom, powerset_frame
from pointfree.oracles import all_frames, grid_functions, least_upper_bound
from pointfree.realfn import (C, C_EXT, IC_EXT, RealFn, Scale, add, boolean_iso_from_riesz_iso,
                              characteristic, compose_hom, constant, density_join,
                              density_witness, discrete_sup, from_scale, indicator,
                              is_discrete, is_extended_scale, is_nonnegative, is_scale,
                              join_op, leq, meet_op, negate, point_value, positive_part,
                              reconstruct_double_neg, reconstruction_witness, scalar,
                              subtract, upsilon, upsilon_inverse)
from pointfree.steps import ANTITONE, ISOTONE, StepMap

Q = Fraction


def test_constant_zero_up_side():
    L = chain_frame(3)
    z = constant(L, 0)
    assert z.up(Q(-1)) == L.top and z.up(0) == L.bottom and z.up(Q("1/2")) == L.bottom
    assert z.down(0) == L.bottom and z.down(Q("1/100")) == L.top
    assert z.kind == C


def test_scale_constant_r():
    L = powerset_frame(2)
    sigma = Scale(L, (Q("3/2"),), (L.top, L.bottom))
    assert is_scale(sigma)
    assert from_scale(sigma) == constant(L, Q("3/2"))


def test_single_point_scale_value_washes_out(chain3):
    m = chain3.index("m")
    sigma = Scale(chain3, (0,), (chain3.top, chain3.bottom), (m,))
    assert is_extended_scale(sigma)
    assert from_scale(sigma) == constant(chain3, 0)


def test_noncomplemented_segment_rejected(chain3):
    m = chain3.index("m")
    sigma = Scale(chain3, (0, 1), (chain3.top, m, chain3.bottom))
    assert not is_extended_scale(sigma)
    with pytest.raises(NotAnExtendedScale):
        from_scale(sigma)


def test_characteristic_complemented_is_continuous(square):
    assert characteristic(square, 1, 2).kind == C
    assert indicator(square, 1) == characteristic(square, 1, 2)


def test_characteristic_bottom_pair(chain3):
    chi = characteristic(chain3, 0, 0)
    # below 0 it is at least 0, above 1 at most 1: the interval [0, 1] everywhere
    assert chi.up.breakpoints == (0,) and chi.up.values == (chain3.top, 0)
    assert chi.down.breakpoints == (1,) and chi.down.values == (0, chain3.top)
    assert chi.kind == IC_EXT


def test_characteristic_needs_disjoint(square):
    with pytest.raises(MeetNotZero):
        characteristic(square, 1, 3)


def test_order_basics(square):
    assert leq(constant(square, 1), constant(square, 2))
    assert not leq(constant(square, 2), constant(square, 1))
    f = indicator(square, 1)
    assert leq(f, f)


def test_arithmetic_on_boolean_matches_pointwise():
    # on 2^2 a continuous grid function is a pair of atom values
    B = powerset_frame(2)
    fs = grid_functions(B, (-1, 0, 1))
    assert len(fs) == 9

    def values(f):
        return tuple(point_value(f, p) for p in (2, 1))

    for f, g in product(fs, repeat=2):
        fv, gv = values(f), values(g)
        assert values(add(f, g)) == tuple((a[0] + b[0],) * 2 for a, b in zip(fv, gv))
        assert values(join_op(f, g)) == tuple((max(a[0], b[0]),) * 2 for a, b in zip(fv, gv))
        assert values(meet_op(f, g)) == tuple((min(a[0], b[0]),) * 2 for a, b in zip(fv, gv))
        assert values(scalar(Q(-3), f)) == tuple((-3 * a[0],) * 2 for a in fv)
        assert subtract(f, g) == add(f, negate(g))
    assert values(positive_part(fs[0])) == ((0, 0), (0, 0))


def test_point_values_of_characteristic(square):
    f = characteristic(square, 1, 2)
    assert point_value(f, 2) == (1, 1)   # prime {1} misses atom 0
    assert point_value(f, 1) == (0, 0)


def test_discrete_sup_complementary_atoms(square):
    a, b = indicator(square, 1), indicator(square, 2)
    assert is_discrete(square, [1, 2])
    s = discrete_sup([a, b])
    assert s.up(0) == square.join(1, 2) and s == constant(square, 1)
    assert discrete_sup([a]) == a


def test_discrete_sup_is_least_upper_bound_exhaustive():
    grid = (-1, 0, 1)
    for L in all_frames(5):
        pos = [f for f in grid_functions(L, grid) if is_nonnegative(f)]
        for f, g in product(pos, repeat=2):
            if is_discrete(L, [f.up(0), g.up(0)]):
                s = discrete_sup([f, g])
                assert leq(f, s) and leq(g, s)
                assert s == least_upper_bound([f, g], grid)


def test_compose_identity(square):
    f = characteristic(square, 1, 2)
    assert compose_hom(identity_hom(square), f) == f


def test_upsilon_roundtrip_and_reconstruction():
    grid = (-1, 0, 1)
    for L in all_frames(6):
        for f in grid_functions(L, grid):
            assert reconstruct_double_neg(f)
            assert upsilon_inverse(L, upsilon(f)) == f


def test_reconstruction_can_fail_without_r2():
    L = chain_frame(4)
    f = RealFn(L, StepMap((0,), (3, 1), ANTITONE), StepMap((), (0,), ISOTONE))
    assert f.kind == IC_EXT
    assert reconstruction_witness(f) == 0


def test_density_witness_examples():
    L = chain_frame(2)
    h = constant(L, 1)
    assert density_witness(L, h, Q("1/2"), L.top) == constant(L, Q("1/2"))
    assert density_witness(L, h, 0, L.top) == constant(L, 0)
    assert density_join(L, h, 0) == h.up(0)


def test_density_join_reproduces_h_on_boolean():
    B = powerset_frame(2)
    h = add(characteristic(B, 1, 2), constant(B, 1))
    for q in (Q(0), Q("1/2"), Q(1), Q("3/2"), Q(2)):
        assert density_join(B, h, q) == h.up(q)


def _perm_hom(n, perm):
    B = powerset_frame(n)
    return FrameHom(B, B, tuple(sum(1 << perm[i] for i in range(n) if m >> i & 1)
                                for m in B.elements))


def test_boolean_iso_recovered():
    psi = _perm_hom(3, [2, 0, 1])
    B = psi.source
    assert boolean_iso_from_riesz_iso(lambda f: compose_hom(psi, f), B, B) == psi
    square = powerset_frame(2)
    assert boolean_iso_from_riesz_iso(lambda f: f, square, square) == identity_hom(square)
    one = constant(B, 1)
    assert boolean_iso_from_riesz_iso(lambda f: add(compose_hom(psi, f), one), B, B) == psi


def test_boolean_iso_rejects(chain3, square):
    with pytest.raises(NotBoolean):
        boolean_iso_from_riesz_iso(lambda f: f, chain3, chain3)
    with pytest.raises(OracleNotIso):
        boolean_iso_from_riesz_iso(lambda f: constant(square, 0), square, square)
