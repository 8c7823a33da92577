import pytest

from framings import (
    Expansion,
    INTEGERS,
    NotUnitNormalized,
    ParseError,
    RATIONALS,
    RingMismatch,
    Surface,
    Tensor,
    TruncationMismatch,
    UnsupportedSignature,
    Word,
    boundary_word,
    homology_class,
    is_weakly_3_symplectic,
    make_default_w3s,
    make_random_expansion,
    mod_ring,
    theta3_zeta_closed_form,
)
from framings.sampling import random_word, rng_for

Z = INTEGERS
RINGS = [INTEGERS, RATIONALS, mod_ring(2), mod_ring(5), mod_ring(6)]


def tensor(ring, dim, data, trunc=3):
    return Tensor(ring, dim, trunc, data)


def test_mul_examples():
    one_plus_a = tensor(Z, 2, {(): 1, (0,): 1})
    one_plus_b = tensor(Z, 2, {(): 1, (1,): 1})
    prod = one_plus_a * one_plus_b
    assert prod == tensor(Z, 2, {(): 1, (0,): 1, (1,): 1, (0, 1): 1})
    ab = tensor(Z, 2, {(0, 1): 1})
    assert (ab * ab).is_zero()  # degree 4 truncated at N = 3
    t = tensor(Z, 2, {(): 1, (0, 1): 2, (1, 1, 0): -1})
    assert Tensor.one(Z, 2) * t == t


def test_mismatch_errors():
    with pytest.raises(RingMismatch):
        Tensor.one(Z, 2) * Tensor.one(RATIONALS, 2)
    with pytest.raises(TruncationMismatch):
        Tensor.one(Z, 2, 3) * Tensor.one(Z, 2, 4)


def test_inverse_geometric_series():
    t = tensor(Z, 2, {(): 1, (0,): 1})
    inv = t.inverse()
    assert inv == tensor(Z, 2, {(): 1, (0,): -1, (0, 0): 1, (0, 0, 0): -1})
    assert t * inv == Tensor.one(Z, 2)
    assert Tensor.one(Z, 2).inverse() == Tensor.one(Z, 2)


def test_inverse_degree2_identity():
    # (1 + A1 + theta2)^-1 degree-2 part is A1A1 - theta2
    theta2 = tensor(Z, 2, {(1, 1): 3, (0, 1): -2})
    t = tensor(Z, 2, {(): 1, (0,): 1}) + theta2
    inv = t.inverse()
    expected2 = tensor(Z, 2, {(0, 0): 1}) - theta2
    assert inv.degree_part(2) == expected2.degree_part(2)
    assert t * inv == Tensor.one(Z, 2)  # tensor_mul oracle


def test_inverse_requires_unit():
    with pytest.raises(NotUnitNormalized):
        tensor(Z, 2, {(): 2}).inverse()
    with pytest.raises(NotUnitNormalized):
        tensor(Z, 2, {(0,): 1}).inverse()


def test_inverse_exact_at_higher_truncation():
    rng = rng_for(0, "inv4")
    for _ in range(10):
        data = {(): 1}
        for _ in range(6):
            key = tuple(rng.randrange(3) for _ in range(rng.randint(1, 4)))
            data[key] = rng.randint(-2, 2)
        t = Tensor(Z, 3, 4, data)
        assert t * t.inverse() == Tensor.one(Z, 3, 4)


def test_eval_default_expansion():
    sig = Surface(1, 0)
    theta = make_default_w3s(sig, Z)
    ev = theta.eval(Word.parse(sig, "a1"))
    assert ev.degree_part(0) == Tensor.one(Z, 2)
    assert ev.degree_dict(1) == {(0,): 1}
    assert ev.degree_dict(2) == {(0, 1): 1}
    assert theta.eval(Word.parse(sig, "a1 a1'")) == Tensor.one(Z, 2)


def test_eval_multiplicative_and_degree1():
    sig = Surface(2, 0)
    for ring in (Z, mod_ring(5)):
        rng = rng_for(1, "eval", ring)
        theta = make_random_expansion(sig, ring, rng)
        for _ in range(15):
            u = random_word(sig, rng, 6)
            v = random_word(sig, rng, 6)
            assert theta.eval(u * v) == theta.eval(u) * theta.eval(v)
            assert theta.eval(u).degree_dict(1) == {
                (i,): c for i, c in enumerate(homology_class(u, ring).coords) if c != 0
            }


@pytest.mark.parametrize("ring", RINGS)
@pytest.mark.parametrize("g", [1, 2, 3])
def test_theta_zeta_degree2_and_3(ring, g):
    # oracle: direct evaluation of theta on the boundary word
    sig = Surface(g, 0)
    rng = rng_for(2, "thze", ring, g)
    zeta = boundary_word(sig)
    for _ in range(5):
        theta = make_random_expansion(sig, ring, rng)
        ev = theta.eval(zeta)
        want2 = {}
        for i in range(g):
            want2[(i, g + i)] = ring.from_int(1)
            want2[(g + i, i)] = ring.from_int(-1)
        assert ev.degree_dict(2) == {k: v for k, v in want2.items() if v != 0}
        assert ev.degree_part(3) == theta3_zeta_closed_form(theta)


def test_commutator_degree2_is_class_bracket():
    sig = Surface(2, 0)
    rng = rng_for(3, "comm2")
    theta = make_random_expansion(sig, Z, rng)
    for _ in range(15):
        u = random_word(sig, rng, 5)
        v = random_word(sig, rng, 5)
        cu = homology_class(u, Z).coords
        cv = homology_class(v, Z).coords
        want = {}
        for i, a in enumerate(cu):
            for j, b in enumerate(cv):
                if a * b:
                    want[(i, j)] = want.get((i, j), 0) + a * b
                    want[(j, i)] = want.get((j, i), 0) - a * b
        want = {k: v2 for k, v2 in want.items() if v2 != 0}
        assert theta.eval(u.commutator(v)).degree_dict(2) == want


@pytest.mark.parametrize("ring", RINGS)
@pytest.mark.parametrize("g", [0, 1, 2, 3, 4])
def test_default_w3s(ring, g):
    theta = make_default_w3s(Surface(g, 0), ring)
    assert is_weakly_3_symplectic(theta)
    if g >= 1:
        assert theta.theta2_gen("a1") == {(0, g): ring.from_int(1)}


def test_expansion_requires_connected_boundary():
    with pytest.raises(UnsupportedSignature):
        make_default_w3s(Surface(1, 1), Z)
    with pytest.raises(UnsupportedSignature):
        make_random_expansion(Surface(1, 2), Z, 0)


def test_random_expansion_deterministic():
    sig = Surface(2, 0)
    t1 = make_random_expansion(sig, Z, 12345)
    t2 = make_random_expansion(sig, Z, 12345)
    t3 = make_random_expansion(sig, Z, 54321)
    assert t1 == t2
    assert t1 != t3


def test_non_w3s_detected():
    sig = Surface(1, 0)
    theta = Expansion(Z, sig, {})  # theta2 = 0 on generators
    assert not is_weakly_3_symplectic(theta)
    closed = theta3_zeta_closed_form(theta)
    # [A1, -B1A1] - [B1, -A1B1], frozen by hand
    want = Tensor(Z, 2, 3, {(0, 1, 0): -1, (1, 0, 0): 1, (1, 0, 1): 1, (0, 1, 1): -1})
    assert closed == want


def test_json_roundtrip():
    sig = Surface(2, 0)
    for ring in (mod_ring(5), RATIONALS):
        theta = make_random_expansion(sig, ring, rng_for(4, "json", ring))
        again = Expansion.from_json(theta.to_json())
        assert again == theta
        zeta = boundary_word(sig)
        assert again.eval(zeta) == theta.eval(zeta)


def test_json_rejects_low_degree_terms():
    text = """{"ring": "Z", "g": 1, "N": 3,
               "theta": {"a1": [{"deg": 1, "idx": ["A1"], "coef": "1"}], "b1": []}}"""
    with pytest.raises(ParseError):
        Expansion.from_json(text)


def test_truncation_n2():
    sig = Surface(1, 0)
    theta = make_default_w3s(sig, Z, trunc=2)
    ev = theta.eval(boundary_word(sig))
    assert ev.degree_dict(2) == {(0, 1): 1, (1, 0): -1}
    with pytest.raises(ValueError):
        is_weakly_3_symplectic(theta)
