"""Seeded random generators for words, forms, expansions and mapping classes.

All randomness flows through rng_for(seed, *labels) so that verification
reports are reproducible byte for byte; string seeding hashes through
SHA-512 and is independent of PYTHONHASHSEED.
"""

from __future__ import annotations

import random

from .rings import Ring
from .words import Letter, Surface, Word
from .homology import DualVec
from .tensors import Expansion, Tensor, make_default_w3s, make_random_expansion
from .forms import QuadraticForm
from .mcg import MCGElement, compose, conjugate, identity_mcg, invert, twist_a, twist_b, twist_chain


def rng_for(seed, *labels) -> random.Random:
    return random.Random(":".join([str(seed)] + [str(l) for l in labels]))


def random_word(sig: Surface, rng: random.Random, max_len: int = 8) -> Word:
    letters = []
    for _ in range(rng.randint(0, max_len)):
        kinds = ["a", "b"] if sig.g > 0 else []
        if sig.n > 0:
            kinds.append("d")
        if not kinds:
            break
        kind = rng.choice(kinds)
        index = rng.randint(1, sig.g if kind in ("a", "b") else sig.n)
        letters.append(Letter(kind, index, rng.choice([1, -1])))
    return Word(sig, letters)


def random_form(sig: Surface, ring: Ring, rng: random.Random, bound: int = 3) -> QuadraticForm:
    return QuadraticForm(
        ring, sig, {t: ring.from_int(rng.randint(-bound, bound)) for t in sig.gen_tokens()}
    )


def random_dual(sig: Surface, ring: Ring, rng: random.Random, bound: int = 3) -> DualVec:
    return DualVec(ring, sig, [ring.from_int(rng.randint(-bound, bound)) for _ in range(sig.rank)])


def random_nonzero_dual(sig: Surface, ring: Ring, rng: random.Random) -> DualVec:
    while True:
        u = random_dual(sig, ring, rng)
        if not u.is_zero():
            return u


def random_expansion(sig: Surface, ring: Ring, rng: random.Random) -> Expansion:
    return make_random_expansion(sig, ring, rng)


def random_twist_composite(
    sig: Surface,
    ring: Ring,
    rng: random.Random,
    length: int = 4,
    include_chain: bool = False,
    allow_conjugate: bool = True,
) -> MCGElement:
    """Random word in the built-in twists, their inverses and conjugates."""
    makers = [twist_a, twist_b]
    out = identity_mcg(sig, ring)
    for _ in range(rng.randint(1, max(1, length))):
        if include_chain and sig.g >= 2 and rng.random() < 0.25:
            factor = twist_chain(sig, ring, rng.randint(1, sig.g - 1))
        else:
            maker = rng.choice(makers)
            factor = maker(sig, ring, rng.randint(1, sig.g))
        if rng.random() < 0.5:
            factor = invert(factor)
        if allow_conjugate and rng.random() < 0.3:
            maker = rng.choice(makers)
            factor = conjugate(maker(sig, ring, rng.randint(1, sig.g)), factor)
        out = compose(out, factor)
    return out


def _w3s_kernel_perturbation(theta: Expansion, rng: random.Random) -> Expansion:
    """Add generator theta2/theta3 noise that keeps theta3(zeta) = 0.

    Kernel directions: A_iA_i into theta2(b_i), B_iB_i into theta2(a_i),
    the paired cross-handle move (A_jA_j into theta2(b_i)) +
    (A_iA_j + A_jA_i into theta2(b_j)), and arbitrary theta3 data, which
    never enters theta3(zeta).
    """
    r, sig, trunc = theta.ring, theta.sig, theta.trunc
    g, dim = sig.g, sig.rank
    extra = {
        tok: {k: v for k, v in theta.gens[tok].data.items() if len(k) >= 2}
        for tok in sig.gen_tokens()
    }

    def bump(tok, key, c):
        d = extra[tok]
        d[key] = r.add(d.get(key, 0), c)

    for i in range(g):
        c = r.from_int(rng.randint(-2, 2))
        bump(f"b{i + 1}", (i, i), c)
        c = r.from_int(rng.randint(-2, 2))
        bump(f"a{i + 1}", (g + i, g + i), c)
    if g >= 2:
        for _ in range(g):
            i, j = rng.sample(range(g), 2)
            c = r.from_int(rng.randint(-2, 2))
            bump(f"b{i + 1}", (j, j), c)
            bump(f"b{j + 1}", (i, j), c)
            bump(f"b{j + 1}", (j, i), c)
    if trunc >= 3:
        for tok in sig.gen_tokens():
            for _ in range(3):
                key = tuple(rng.randrange(dim) for _ in range(3))
                bump(tok, key, r.from_int(rng.randint(-2, 2)))
    gen_higher = {tok: Tensor(r, dim, trunc, data) for tok, data in extra.items()}
    return Expansion(r, sig, gen_higher, trunc)


def random_w3s_expansion(sig: Surface, ring: Ring, rng: random.Random) -> Expansion:
    """Random weakly-3-symplectic expansion: twist pullbacks of the default
    plus kernel perturbations; the w3s property is preserved exactly."""
    theta = make_default_w3s(sig, ring)
    for _ in range(rng.randint(0, 2)):
        phi = random_twist_composite(sig, ring, rng, length=2, allow_conjugate=False)
        theta = pullback_expansion(theta, phi)
    return _w3s_kernel_perturbation(theta, rng)


def pullback_expansion(theta: Expansion, phi: MCGElement) -> Expansion:
    """The expansion |phi|^-1 o theta o phi; preserves theta3(zeta) = 0."""
    r, sig, trunc = theta.ring, theta.sig, theta.trunc
    minv = phi.hmatrix_inv
    cols_nz = [[(row, val) for row, val in enumerate(col) if val != 0] for col in minv.cols]

    def push(data: dict) -> dict:
        out: dict = {}
        for key, v in data.items():
            # apply M^-1 to each tensor slot
            terms = [((), v)]
            for idx in key:
                new_terms = []
                for (kk, vv) in terms:
                    for row, mval in cols_nz[idx]:
                        new_terms.append((kk + (row,), r.mul(vv, mval)))
                terms = new_terms
            for kk, vv in terms:
                out[kk] = r.add(out.get(kk, 0), vv)
        return {k: v for k, v in out.items() if v != 0}

    gen_higher = {}
    for tok in sig.gen_tokens():
        evaluated = theta.eval(phi.fwd[tok])
        data = {k: v for k, v in evaluated.data.items() if len(k) >= 2}
        gen_higher[tok] = Tensor(r, sig.rank, trunc, push(data))
    return Expansion(r, sig, gen_higher, trunc)
