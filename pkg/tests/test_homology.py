import pytest

from framings import (
    DualVec,
    HVec,
    HomTensor,
    INTEGERS,
    Matrix,
    RATIONALS,
    Surface,
    flat,
    intersection_dual,
    jmath,
    mod_ring,
)
from framings.homology import basis_symbols, dual_symbols, flat_basis
from framings.linalg import det_int
from framings.sampling import rng_for


def basis(ring, sig, symbol):
    return HVec.basis(ring, sig, basis_symbols(sig).index(symbol))


def random_vec(sig, ring, rng):
    return HVec(ring, sig, [rng.randint(-4, 4) for _ in range(sig.rank)])


def test_flat_examples():
    sig = Surface(2, 1)
    Z = INTEGERS
    assert flat(basis(Z, sig, "A1"), basis(Z, sig, "B1")) == 1
    assert flat(basis(Z, sig, "B1"), basis(Z, sig, "A1")) == -1
    assert flat(basis(Z, sig, "A1"), basis(Z, sig, "A2")) == 0
    assert flat(basis(Z, sig, "D1"), basis(Z, sig, "A1")) == 0
    assert flat(basis(Z, sig, "A1"), basis(Z, sig, "D1")) == 0


@pytest.mark.parametrize("ring", [INTEGERS, RATIONALS, mod_ring(2), mod_ring(6)])
def test_flat_skew(ring):
    sig = Surface(3, 2)
    rng = rng_for(0, "skew", ring)
    for _ in range(40):
        x, y = random_vec(sig, ring, rng), random_vec(sig, ring, rng)
        assert flat(x, y) == -flat(y, x)
        xx = flat(x, x)
        assert xx + xx == ring.scalar(0)
        if ring.characteristic != 2:
            assert xx == ring.scalar(0)


def test_gram_determinant_one():
    # the 2g x 2g Gram matrix of flat on the A/B block is unimodular
    for g in (1, 2, 3):
        sig = Surface(g, 0)
        gram = [
            [flat_basis(sig, i, j) for j in range(2 * g)]
            for i in range(2 * g)
        ]
        assert det_int(gram) == 1


def test_jmath_examples():
    sig = Surface(1, 1)
    Z = INTEGERS
    assert str(jmath(basis(Z, sig, "A1"))) == "B1*"
    assert str(jmath(basis(Z, sig, "B1"))) == "-A1*"
    assert jmath(basis(Z, sig, "D1")).is_zero()


def test_jmath_linear_and_injective_on_symplectic_block():
    sig = Surface(2, 0)
    rng = rng_for(1, "jmath")
    for _ in range(30):
        x, y = random_vec(sig, INTEGERS, rng), random_vec(sig, INTEGERS, rng)
        assert jmath(x + y) == jmath(x) + jmath(y)
        assert jmath(x).pair(y) == flat(x, y)
        if jmath(x).is_zero():
            assert x.is_zero()


def test_intersection_dual_convention():
    sig = Surface(1, 0)
    a1 = basis(INTEGERS, sig, "A1")
    b1 = basis(INTEGERS, sig, "B1")
    # (.[A1])(X) = flat(X, A1): value -1 on B1
    assert intersection_dual(a1).pair(b1) == -1
    assert intersection_dual(a1) == -jmath(a1)


def sym_index(sig, name):
    return basis_symbols(sig).index(name)


def hom_tensor(sig, ring, terms):
    data = {}
    for (dual, left, right), coef in terms.items():
        key = (sym_index(sig, dual), sym_index(sig, left), sym_index(sig, right))
        data[key] = ring.add(data.get(key, 0), coef)
    return HomTensor(ring, sig, data)


def test_contract_examples():
    sig = Surface(2, 0)
    Z = INTEGERS
    t = hom_tensor(sig, Z, {("A1", "A1", "B2"): 1})
    assert str(t.contract()) == "B2"
    t = hom_tensor(sig, Z, {("A1", "B1", "B2"): 1})
    assert t.contract().is_zero()
    t = hom_tensor(sig, Z, {("A1", "A1", "B1"): 1, ("A1", "B1", "A1"): 1})
    assert str(t.contract()) == "B1"


def test_contract_switched_examples():
    sig = Surface(2, 0)
    Z = INTEGERS
    assert str(hom_tensor(sig, Z, {("A1", "B2", "A1"): 1}).contract_switched()) == "B2"
    assert hom_tensor(sig, Z, {("A1", "A1", "B2"): 1}).contract_switched().is_zero()
    assert str(hom_tensor(sig, Z, {("A1", "A1", "A1"): 1}).contract_switched()) == "A1"


def test_one_tensor_flat_examples():
    sig = Surface(1, 0)
    Z = INTEGERS
    assert str(hom_tensor(sig, Z, {("B1", "A1", "B1"): 1}).one_tensor_flat()) == "B1*"
    assert hom_tensor(sig, Z, {("B1", "A1", "A1"): 1}).one_tensor_flat().is_zero()
    t = hom_tensor(sig, Z, {("B1", "A1", "B1"): 1, ("B1", "B1", "A1"): 1})
    assert t.one_tensor_flat().is_zero()


def test_dual_pairing_bilinear():
    sig = Surface(2, 1)
    rng = rng_for(2, "pairing")
    ring = mod_ring(7)
    for _ in range(30):
        f = DualVec(ring, sig, [rng.randint(0, 6) for _ in range(sig.rank)])
        x = random_vec(sig, ring, rng)
        y = random_vec(sig, ring, rng)
        assert f.pair(x + y) == f.pair(x) + f.pair(y)


def test_matrix_ops():
    sig = Surface(1, 0)
    Z = INTEGERS
    ident = Matrix.identity(Z, 2)
    t = Matrix(Z, [[1, 0], [1, 1]])  # columns: A1 -> A1, B1 -> A1 + B1
    assert t.rows() == [[1, 1], [0, 1]]
    assert t.mul(ident) == t
    assert t.preserves_flat(sig)
    x = HVec(Z, sig, [0, 1])
    assert t.apply(x).coords == (1, 1)
    f = DualVec(Z, sig, [1, 0])
    assert t.apply_dual(f).coords == (1, 1)
    bad = Matrix(Z, [[2, 0], [0, 1]])
    assert not bad.preserves_flat(sig)


def test_symbols():
    sig = Surface(2, 1)
    assert basis_symbols(sig) == ["A1", "A2", "B1", "B2", "D1"]
    assert dual_symbols(sig) == ["A1*", "A2*", "B1*", "B2*", "D1*"]
