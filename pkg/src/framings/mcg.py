"""Mapping classes as validated automorphisms of the surface group.

An element is a pair of generator maps (forward and backward) that are
verified to be mutually inverse, to fix the boundary word exactly, and
to act on homology by a matrix preserving the intersection form.  On
top of that sit the two cocycles of interest: the framing cocycle
k(q, phi) = q o phi^-1 - q valued in H*, and the degree-two Johnson-type
cocycle tau(theta, phi) valued in H* (x) H (x) H, together with their
closed forms at the standard twists.
"""

from __future__ import annotations

import json

from .errors import (
    BoundaryNotFixed,
    IndexOutOfRange,
    NotInverse,
    NotSymplectic,
    ParseError,
    RingMismatch,
    SignatureMismatch,
    UnsupportedSignature,
)
from .rings import Ring, ring_from_string
from .words import Surface, Word, boundary_word
from .homology import DualVec, HomTensor, HVec, Matrix, flat_basis, homology_class
from .tensors import Expansion, flat_of_degree2
from .forms import QuadraticForm, from_expansion


class MCGElement:
    """Validated boundary-fixing automorphism with its homology matrices."""

    __slots__ = ("ring", "sig", "fwd", "bwd", "hmatrix", "hmatrix_inv", "label")

    def __init__(self, ring, sig, fwd, bwd, hmatrix, hmatrix_inv, label="phi"):
        self.ring = ring
        self.sig = sig
        self.fwd = fwd
        self.bwd = bwd
        self.hmatrix = hmatrix
        self.hmatrix_inv = hmatrix_inv
        self.label = label

    def apply(self, word: Word, inverse: bool = False) -> Word:
        if word.sig != self.sig:
            raise SignatureMismatch(f"{word.sig} != {self.sig}")
        images = self.bwd if inverse else self.fwd
        out = Word.identity(self.sig)
        for kind, index, sign in word.letters:
            img = images[f"{kind}{index}"]
            out = out * (img if sign > 0 else img.inverse())
        return out

    def __eq__(self, other):
        return (
            isinstance(other, MCGElement)
            and self.ring == other.ring
            and self.sig == other.sig
            and self.fwd == other.fwd
            and self.bwd == other.bwd
        )

    def __hash__(self):
        return hash((self.ring, self.sig, tuple(sorted((k, v.letters) for k, v in self.fwd.items()))))

    def __repr__(self):
        return f"MCGElement({self.label})"

    def to_json(self) -> str:
        payload = {
            "fwd": {t: str(w) for t, w in self.fwd.items()},
            "bwd": {t: str(w) for t, w in self.bwd.items()},
        }
        return json.dumps(payload, sort_keys=True, indent=2)


def _apply_images(sig: Surface, images: dict, word: Word) -> Word:
    out = Word.identity(sig)
    for kind, index, sign in word.letters:
        img = images[f"{kind}{index}"]
        out = out * (img if sign > 0 else img.inverse())
    return out


def mcg_new(sig: Surface, ring: Ring, fwd: dict, bwd: dict, label: str = "phi") -> MCGElement:
    """Validate generator maps and build the element.

    Checks, in order: both maps defined on every generator; bwd o fwd and
    fwd o bwd are the identity on generators; the boundary word is fixed
    exactly; the induced homology matrix preserves the intersection form
    (implied by the previous checks, verified independently).
    """
    tokens = sig.gen_tokens()
    fwd = {t: (w if isinstance(w, Word) else Word.parse(sig, w)) for t, w in fwd.items()}
    bwd = {t: (w if isinstance(w, Word) else Word.parse(sig, w)) for t, w in bwd.items()}
    for t in tokens:
        if t not in fwd or t not in bwd:
            raise ValueError(f"missing generator image for {t!r}")
    for t in tokens:
        gen = Word.parse(sig, t)
        if _apply_images(sig, bwd, fwd[t]) != gen:
            raise NotInverse(f"bwd(fwd({t})) != {t}")
        if _apply_images(sig, fwd, bwd[t]) != gen:
            raise NotInverse(f"fwd(bwd({t})) != {t}")
    zeta = boundary_word(sig)
    if _apply_images(sig, fwd, zeta) != zeta:
        raise BoundaryNotFixed("the boundary word is not fixed")
    m = Matrix.from_columns(ring, [homology_class(fwd[t], ring) for t in tokens])
    m_inv = Matrix.from_columns(ring, [homology_class(bwd[t], ring) for t in tokens])
    if not m.preserves_flat(sig):
        raise NotSymplectic("homology matrix does not preserve the intersection form")
    return MCGElement(ring, sig, fwd, bwd, m, m_inv, label=label)


def identity_mcg(sig: Surface, ring: Ring) -> MCGElement:
    fwd = {t: Word.parse(sig, t) for t in sig.gen_tokens()}
    return mcg_new(sig, ring, fwd, dict(fwd), label="id")


def _check_twist_index(sig: Surface, i: int, span: int = 0):
    if sig.n != 0:
        raise UnsupportedSignature("twists are provided for connected boundary (n = 0)")
    if not 1 <= i <= sig.g - span:
        raise IndexOutOfRange(f"twist index {i} out of range for genus {sig.g}")


def twist_a(sig: Surface, ring: Ring, i: int) -> MCGElement:
    """Right-handed twist along the i-th a-curve: b_i -> b_i a_i."""
    _check_twist_index(sig, i)
    fwd = {t: Word.parse(sig, t) for t in sig.gen_tokens()}
    bwd = dict(fwd)
    fwd[f"b{i}"] = Word.parse(sig, f"b{i} a{i}")
    bwd[f"b{i}"] = Word.parse(sig, f"b{i} a{i}'")
    return mcg_new(sig, ring, fwd, bwd, label=f"twist_a:{i}")


def twist_b(sig: Surface, ring: Ring, i: int) -> MCGElement:
    """Twist along the i-th b-curve: a_i -> a_i b_i (handedness unspecified)."""
    _check_twist_index(sig, i)
    fwd = {t: Word.parse(sig, t) for t in sig.gen_tokens()}
    bwd = dict(fwd)
    fwd[f"a{i}"] = Word.parse(sig, f"a{i} b{i}")
    bwd[f"a{i}"] = Word.parse(sig, f"a{i} b{i}'")
    return mcg_new(sig, ring, fwd, bwd, label=f"twist_b:{i}")


def twist_chain(sig: Surface, ring: Ring, i: int) -> MCGElement:
    """Mapping class mixing handles i and i+1.

    Acts on homology as the transvection B_i -> B_i + (A_i + A_{i+1}),
    B_{i+1} -> B_{i+1} + (A_i + A_{i+1}), fixing the A's; the generator
    images were found by a word search and are fully re-validated here.
    """
    _check_twist_index(sig, i, span=1)
    j = i + 1
    fwd = {t: Word.parse(sig, t) for t in sig.gen_tokens()}
    bwd = dict(fwd)
    fwd[f"b{i}"] = Word.parse(sig, f"a{j} b{j} a{j} b{j}' a{j}' b{i} a{i}")
    fwd[f"b{j}"] = Word.parse(sig, f"b{j} a{j} b{j}' a{j}' b{i} a{i} b{i}' a{j} b{j}")
    bwd[f"b{i}"] = Word.parse(sig, f"b{i} a{i}' b{i}' a{j} b{j} a{j}' b{j}' a{j}' b{i}")
    bwd[f"b{j}"] = Word.parse(sig, f"a{j}' b{i} a{i}' b{i}' a{j} b{j} a{j}'")
    return mcg_new(sig, ring, fwd, bwd, label=f"twist_chain:{i}")


def compose(phi: MCGElement, psi: MCGElement) -> MCGElement:
    """(phi psi)(x) = phi(psi(x)); all invariants re-validated."""
    if phi.sig != psi.sig:
        raise SignatureMismatch(f"{phi.sig} != {psi.sig}")
    if phi.ring != psi.ring:
        raise RingMismatch(f"{phi.ring} != {psi.ring}")
    fwd = {t: phi.apply(psi.fwd[t]) for t in phi.sig.gen_tokens()}
    bwd = {t: psi.apply(phi.bwd[t], inverse=True) for t in phi.sig.gen_tokens()}
    return mcg_new(phi.sig, phi.ring, fwd, bwd, label=f"{phi.label} * {psi.label}")


def invert(phi: MCGElement) -> MCGElement:
    return mcg_new(phi.sig, phi.ring, dict(phi.bwd), dict(phi.fwd), label=f"({phi.label})^-1")


def conjugate(psi: MCGElement, phi: MCGElement) -> MCGElement:
    """psi phi psi^-1."""
    return compose(compose(psi, phi), invert(psi))


def mcg_from_json(sig: Surface, ring: Ring, text: str, label: str = "phi") -> MCGElement:
    try:
        payload = json.loads(text)
        fwd = payload["fwd"]
        bwd = payload["bwd"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad mapping-class JSON: {exc}")
    return mcg_new(sig, ring, fwd, bwd, label=label)


# -- cocycles ---------------------------------------------------------------


def _require_cocycle_setting(sig: Surface):
    if sig.n != 0:
        raise UnsupportedSignature("cocycles are defined for connected boundary (n = 0)")


def k_cocycle(q: QuadraticForm, phi: MCGElement) -> DualVec:
    """k(q, phi) = q o phi^-1 - q, as the dual vector of generator values."""
    _require_cocycle_setting(phi.sig)
    if q.sig != phi.sig:
        raise SignatureMismatch(f"{q.sig} != {phi.sig}")
    if q.ring != phi.ring:
        raise RingMismatch(f"{q.ring} != {phi.ring}")
    r = q.ring
    coords = [
        r.sub(q(phi.bwd[t]).value, q.values[t])
        for t in phi.sig.gen_tokens()
    ]
    return DualVec(r, phi.sig, coords)


def _push_degree2(m: Matrix, d2: dict, ring: Ring) -> dict:
    """M tensor M applied to a degree-2 coefficient dict."""
    out: dict = {}
    cols_nz = [
        [(row, val) for row, val in enumerate(col) if val != 0] for col in m.cols
    ]
    for (i, j), v in d2.items():
        for p, mi in cols_nz[i]:
            vi = ring.mul(v, mi)
            for qq, mj in cols_nz[j]:
                key = (p, qq)
                out[key] = ring.add(out.get(key, 0), ring.mul(vi, mj))
    return {k: v for k, v in out.items() if v != 0}


def tau1(theta: Expansion, phi: MCGElement) -> HomTensor:
    """tau(phi)[x] = theta2(x) - M^(x2) theta2(phi^-1 x) on each generator class."""
    _require_cocycle_setting(phi.sig)
    if theta.sig != phi.sig:
        raise SignatureMismatch(f"{theta.sig} != {phi.sig}")
    if theta.ring != phi.ring:
        raise RingMismatch(f"{theta.ring} != {phi.ring}")
    r, sig = theta.ring, theta.sig
    data = {}
    for k, tok in enumerate(sig.gen_tokens()):
        direct = theta.theta2_gen(tok)
        pulled = _push_degree2(phi.hmatrix, theta.theta2(phi.bwd[tok]), r)
        for key in set(direct) | set(pulled):
            v = r.sub(direct.get(key, 0), pulled.get(key, 0))
            if v != 0:
                data[(k, key[0], key[1])] = v
    return HomTensor(r, sig, data)


def cocycle_action(phi: MCGElement, t: HomTensor) -> HomTensor:
    """The twisted action: f (x) s -> (f o M^-1) (x) M^(x2) s."""
    _require_cocycle_setting(phi.sig)
    if t.sig != phi.sig:
        raise SignatureMismatch(f"{t.sig} != {phi.sig}")
    r = phi.ring
    m, minv = phi.hmatrix, phi.hmatrix_inv
    cols_nz = [[(row, val) for row, val in enumerate(col) if val != 0] for col in m.cols]
    out: dict = {}
    for (k, i, j), v in t.data.items():
        # e_k* o M^-1 has coefficient Minv[k][c] on e_c*
        for c in range(t.sig.rank):
            fk = minv.cols[c][k]
            if fk == 0:
                continue
            vf = r.mul(v, fk)
            for p, mi in cols_nz[i]:
                vfi = r.mul(vf, mi)
                for qq, mj in cols_nz[j]:
                    key = (c, p, qq)
                    out[key] = r.add(out.get(key, 0), r.mul(vfi, mj))
    return HomTensor(r, t.sig, out)


# -- closed forms at the standard a-twists ------------------------------------


def _theta2_b_ainv(theta: Expansion, i: int) -> dict:
    """theta2(b_i a_i^-1) from generator data only."""
    r, g = theta.ring, theta.sig.g
    ia, ib = i - 1, theta.sig.g + i - 1
    out = dict(theta.theta2_gen(f"b{i}"))
    for key, v in theta.theta2_gen(f"a{i}").items():
        out[key] = r.sub(out.get(key, 0), v)
    out[(ia, ia)] = r.add(out.get((ia, ia), 0), 1)
    out[(ib, ia)] = r.sub(out.get((ib, ia), 0), 1)
    return {k: v for k, v in out.items() if v != 0}


def tau1_twist_a_closed_form(theta: Expansion, i: int) -> HomTensor:
    """The four-block closed form of tau at the a_i-twist, from theta2 data."""
    r, sig = theta.ring, theta.sig
    g = sig.g
    ia, ib = i - 1, g + i - 1
    m = twist_a(sig, r, i).hmatrix
    data = {}

    def sub_block(slot: int, d2: dict):
        pushed = _push_degree2(m, d2, r)
        for key in set(d2) | set(pushed):
            v = r.sub(d2.get(key, 0), pushed.get(key, 0))
            if v != 0:
                full = (slot, key[0], key[1])
                data[full] = r.add(data.get(full, 0), v)

    for j in range(1, g + 1):
        if j == i:
            continue
        sub_block(j - 1, theta.theta2_gen(f"a{j}"))
        sub_block(g + j - 1, theta.theta2_gen(f"b{j}"))
    sub_block(ia, theta.theta2_gen(f"a{i}"))
    sub_block(ib, _theta2_b_ainv(theta, i))
    # + B_i* (x) theta2(a_i)  and  + B_i* (x) (B_i - A_i) A_i
    extra = dict(theta.theta2_gen(f"a{i}"))
    extra[(ib, ia)] = r.add(extra.get((ib, ia), 0), 1)
    extra[(ia, ia)] = r.sub(extra.get((ia, ia), 0), 1)
    for (p, qq), v in extra.items():
        if v != 0:
            key = (ib, p, qq)
            data[key] = r.add(data.get(key, 0), v)
    return HomTensor(r, sig, {k: v for k, v in data.items() if v != 0})


def nutau_twist_a_closed_form(theta: Expansion, i: int) -> DualVec:
    """(1 (x) flat) tau at the a_i-twist: (flat(theta2(a_i)) - 1) B_i*."""
    r, sig = theta.ring, theta.sig
    coeff = r.sub(flat_of_degree2(r, sig, theta.theta2_gen(f"a{i}")), 1)
    coords = [0] * sig.rank
    coords[sig.g + i - 1] = coeff
    return DualVec(r, sig, coords)


def contract_tau_twist_a_closed_form(theta: Expansion, i: int) -> HVec:
    """Contraction of tau at the a_i-twist:
    (1 - sum_j [(A_j* (x) B_i*) theta2(a_j) + (B_j* (x) B_i*) theta2(b_j)]) A_i."""
    r, sig = theta.ring, theta.sig
    g = sig.g
    ib = g + i - 1
    coeff = r.from_int(1)
    for j in range(1, g + 1):
        coeff = r.sub(coeff, theta.theta2_gen(f"a{j}").get((j - 1, ib), 0))
        coeff = r.sub(coeff, theta.theta2_gen(f"b{j}").get((g + j - 1, ib), 0))
    coords = [0] * sig.rank
    coords[i - 1] = coeff
    return HVec(r, sig, coords)
