import pytest

from framings import (
    DualVec,
    INTEGERS,
    QuadraticForm,
    RATIONALS,
    RotVector,
    SignatureMismatch,
    Surface,
    feasible,
    mod_ring,
    morita_d,
    ph_check,
    rot_vector,
    shift_report,
)
from framings.homology import basis_symbols
from framings.sampling import random_form, random_dual, rng_for

Z = INTEGERS
RINGS = [INTEGERS, RATIONALS, mod_ring(2), mod_ring(3), mod_ring(6)]


def test_rot_vector_examples():
    d = morita_d(Surface(1, 0), Z)
    assert rot_vector(d).values == (-1,)
    disk_q = QuadraticForm(Z, Surface(0, 0), {})
    assert rot_vector(disk_q).values == (1,)
    q = QuadraticForm(Z, Surface(1, 2), {"a1": 0, "b1": 0, "d1": 3, "d2": -1})
    assert rot_vector(q).values == (-3, 2, -2)


def test_ph_check_all_signatures_and_rings():
    for ring in RINGS:
        for g in range(4):
            for n in range(4):
                sig = Surface(g, n)
                rng = rng_for(0, "ph", ring, g, n)
                for _ in range(8):
                    q = random_form(sig, ring, rng)
                    rep = ph_check(q)
                    assert rep.ok, (ring, g, n, rep)


def test_ph_values():
    d = morita_d(Surface(2, 0), Z)
    rep = ph_check(d)
    assert rep.total == "-3" and rep.expected == "-3"
    q3 = random_form(Surface(2, 0), mod_ring(3), rng_for(1, "ph3"))
    rep3 = ph_check(q3)
    assert rep3.expected == "0" and rep3.ok  # -3 = 0 in Z/3


def test_feasible_examples():
    sig = Surface(1, 1)
    assert feasible(sig, Z, RotVector(Z, (-1, -1)))
    assert not feasible(sig, Z, RotVector(Z, (0, -1)))
    ring2 = mod_ring(2)
    assert feasible(sig, ring2, RotVector(ring2, (0, 0)))
    with pytest.raises(SignatureMismatch):
        feasible(sig, Z, RotVector(Z, (-1,)))


def test_feasible_agrees_with_ph():
    for ring in RINGS:
        rng = rng_for(2, "feas", ring)
        for g in (0, 1, 2):
            for n in (0, 1, 2):
                sig = Surface(g, n)
                for _ in range(6):
                    q = random_form(sig, ring, rng)
                    rho = rot_vector(q)
                    assert feasible(sig, ring, rho)
                    bad = RotVector(ring, tuple([ring.add(rho.values[0], 1)] + list(rho.values[1:])))
                    assert not feasible(sig, ring, bad)


def test_shift_examples():
    sig = Surface(1, 2)
    d_star_1 = DualVec.basis(Z, sig, basis_symbols(sig).index("D1"))
    q = QuadraticForm(Z, sig, {"a1": 1, "b1": -2, "d1": 0, "d2": 5})
    rep = shift_report(q, d_star_1)
    assert rep.ok and rep.deltas == (-1, 1, 0)
    a_star_1 = DualVec.basis(Z, sig, 0)
    rep = shift_report(q, a_star_1)
    assert rep.ok and rep.deltas == (0, 0, 0) and rep.fixes_rotations
    rep = shift_report(q, DualVec.zero(Z, sig))
    assert rep.ok and rep.fixes_rotations


def test_shift_deltas_independent_of_form():
    sig = Surface(2, 3)
    for ring in (Z, mod_ring(5)):
        rng = rng_for(3, "shift", ring)
        for _ in range(10):
            u = random_dual(sig, ring, rng)
            deltas = {shift_report(random_form(sig, ring, rng), u).deltas for _ in range(4)}
            assert len(deltas) == 1
            assert all(shift_report(random_form(sig, ring, rng), u).ok for _ in range(3))
