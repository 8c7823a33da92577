"""Truncated tensor algebra on H and expansions of the surface group.

A Tensor is a sparse map from multi-indices (tuples over the basis
0..2g-1, length <= N) to raw ring elements; multiplication discards
everything above the truncation degree.  An Expansion assigns each
generator a group-like-normalized tensor (constant term 1, degree-1
term the generator's homology class) and evaluates words by truncated
products.  Expansions are only defined for surfaces with connected
boundary (n = 0).
"""

from __future__ import annotations

import json
import random

from .errors import (
    NotUnitNormalized,
    ParseError,
    RingMismatch,
    SignatureMismatch,
    TruncationMismatch,
    UnsupportedSignature,
)
from .rings import Ring, ring_from_string
from .words import Letter, Surface, Word, boundary_word
from .homology import basis_symbols, flat_basis, symbol_index

DEFAULT_TRUNCATION = 3


class Tensor:
    """Element of the tensor algebra on K^dim, truncated above degree N."""

    __slots__ = ("ring", "dim", "trunc", "data")

    def __init__(self, ring: Ring, dim: int, trunc: int = DEFAULT_TRUNCATION, data=None):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        self.ring = ring
        self.dim = dim
        self.trunc = trunc
        clean = {}
        for key, val in (data or {}).items():
            key = tuple(key)
            if len(key) > trunc:
                continue
            if any(not 0 <= t < dim for t in key):
                raise ValueError(f"multi-index {key} out of range for dim {dim}")
            v = ring.normalize(val)
            if v != 0:
                clean[key] = v
        self.data = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: Ring, dim: int, trunc: int = DEFAULT_TRUNCATION) -> "Tensor":
        return Tensor(ring, dim, trunc)

    @staticmethod
    def one(ring: Ring, dim: int, trunc: int = DEFAULT_TRUNCATION) -> "Tensor":
        return Tensor(ring, dim, trunc, {(): 1})

    @staticmethod
    def basis(ring: Ring, dim: int, index: int, trunc: int = DEFAULT_TRUNCATION) -> "Tensor":
        return Tensor(ring, dim, trunc, {(index,): 1})

    def _check(self, other: "Tensor"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} != {other.ring}")
        if self.dim != other.dim:
            raise SignatureMismatch(f"tensor dims {self.dim} != {other.dim}")
        if self.trunc != other.trunc:
            raise TruncationMismatch(f"truncation {self.trunc} != {other.trunc}")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        r = self.ring
        data = dict(self.data)
        for key, val in other.data.items():
            data[key] = r.add(data.get(key, 0), val)
        return Tensor(r, self.dim, self.trunc, data)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __neg__(self) -> "Tensor":
        r = self.ring
        return Tensor(r, self.dim, self.trunc, {k: r.neg(v) for k, v in self.data.items()})

    def scale(self, c) -> "Tensor":
        r = self.ring
        c = r.normalize(getattr(c, "value", c))
        return Tensor(r, self.dim, self.trunc, {k: r.mul(c, v) for k, v in self.data.items()})

    # -- multiplicative structure -------------------------------------------

    def __mul__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        r = self.ring
        # bucket by degree so deg(a) + deg(b) > N pairs are never formed
        left: dict[int, list] = {}
        for key, val in self.data.items():
            left.setdefault(len(key), []).append((key, val))
        right: dict[int, list] = {}
        for key, val in other.data.items():
            right.setdefault(len(key), []).append((key, val))
        data: dict[tuple, object] = {}
        for d1, items1 in left.items():
            for d2, items2 in right.items():
                if d1 + d2 > self.trunc:
                    continue
                for k1, v1 in items1:
                    for k2, v2 in items2:
                        key = k1 + k2
                        prev = data.get(key, 0)
                        data[key] = r.add(prev, r.mul(v1, v2))
        return Tensor(r, self.dim, self.trunc, data)

    def inverse(self) -> "Tensor":
        """Truncated Neumann series; requires constant term exactly 1."""
        if self.data.get((), 0) != 1:
            raise NotUnitNormalized("tensor inverse needs constant term 1")
        x = self - Tensor.one(self.ring, self.dim, self.trunc)  # positive degrees
        out = Tensor.one(self.ring, self.dim, self.trunc)
        power = Tensor.one(self.ring, self.dim, self.trunc)
        for k in range(1, self.trunc + 1):
            power = power * x
            if power.is_zero():
                break
            out = out + (power if k % 2 == 0 else -power)
        return out

    # -- inspection ----------------------------------------------------------

    def degree_part(self, m: int) -> "Tensor":
        return Tensor(
            self.ring, self.dim, self.trunc,
            {k: v for k, v in self.data.items() if len(k) == m},
        )

    def degree_dict(self, m: int) -> dict:
        return {k: v for k, v in self.data.items() if len(k) == m}

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        return (
            isinstance(other, Tensor)
            and self.ring == other.ring
            and self.dim == other.dim
            and self.trunc == other.trunc
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ring, self.dim, self.trunc, tuple(sorted(self.data.items()))))

    def __repr__(self):
        return f"Tensor({self})"

    def format(self, sig: Surface) -> str:
        if not self.data:
            return "0"
        syms = basis_symbols(sig)
        terms = []
        for key in sorted(self.data, key=lambda k: (len(k), k)):
            c = self.ring.str_of(self.data[key])
            mono = "x".join(syms[t] for t in key) if key else "1"
            if c == "1" and key:
                terms.append(mono)
            elif c.startswith("-") and c[1:] == "1" and key:
                terms.append(f"-{mono}")
            else:
                terms.append(c if not key else f"{c} {mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self):
        if not self.data:
            return "0"
        terms = []
        for key in sorted(self.data, key=lambda k: (len(k), k)):
            c = self.ring.str_of(self.data[key])
            mono = "x".join(f"e{t}" for t in key) if key else "1"
            terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def flat_of_degree2(ring: Ring, sig: Surface, d2: dict) -> object:
    """Apply the intersection form to a degree-2 coefficient dict (raw value)."""
    acc = 0
    for (i, j), v in d2.items():
        fb = flat_basis(sig, i, j)
        if fb:
            acc = ring.add(acc, ring.mul(fb, v))
    return ring.normalize(acc)


class Expansion:
    """Truncated expansion of pi_1(Sigma_{g,1}) determined by generator tensors.

    Degree 0 and 1 are forced (1 and the generator class); degrees
    2..N are free data.  Words evaluate through tensor products, so
    the result is a homomorphism into the units of the truncated
    algebra by construction.
    """

    __slots__ = ("ring", "sig", "trunc", "gens", "_inv_cache")

    def __init__(self, ring: Ring, sig: Surface, gen_higher: dict, trunc: int = DEFAULT_TRUNCATION):
        if sig.n != 0:
            raise UnsupportedSignature("expansions are defined for connected boundary (n = 0)")
        if trunc < 2:
            raise ValueError("truncation degree must be >= 2 for an expansion")
        self.ring = ring
        self.sig = sig
        self.trunc = trunc
        dim = sig.rank
        gens = {}
        for pos, tok in enumerate(sig.gen_tokens()):
            t = Tensor.one(ring, dim, trunc) + Tensor.basis(ring, dim, pos, trunc)
            extra = gen_higher.get(tok)
            if extra is not None:
                if extra.degree_dict(0) or extra.degree_dict(1):
                    raise ValueError("generator data must live in degrees >= 2")
                t = t + extra
            gens[tok] = t
        self.gens = gens
        self._inv_cache = {}

    def theta_letter(self, letter: Letter) -> Tensor:
        tok = f"{letter.kind}{letter.index}"
        if letter.sign > 0:
            return self.gens[tok]
        inv = self._inv_cache.get(tok)
        if inv is None:
            inv = self.gens[tok].inverse()
            self._inv_cache[tok] = inv
        return inv

    def eval(self, word: Word) -> Tensor:
        if word.sig != self.sig:
            raise SignatureMismatch(f"{word.sig} != {self.sig}")
        out = Tensor.one(self.ring, self.sig.rank, self.trunc)
        for letter in word.letters:
            out = out * self.theta_letter(letter)
        return out

    def theta2(self, word: Word) -> dict:
        return self.eval(word).degree_dict(2)

    def theta2_gen(self, token: str) -> dict:
        return self.gens[token].degree_dict(2)

    def __eq__(self, other):
        return (
            isinstance(other, Expansion)
            and self.ring == other.ring
            and self.sig == other.sig
            and self.trunc == other.trunc
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.sig, self.trunc, tuple(sorted(self.gens.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"Expansion(g={self.sig.g}, ring={self.ring}, N={self.trunc})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> str:
        syms = basis_symbols(self.sig)
        theta = {}
        for tok in self.sig.gen_tokens():
            entries = []
            t = self.gens[tok]
            for key in sorted(t.data, key=lambda k: (len(k), k)):
                if len(key) < 2:
                    continue
                entries.append(
                    {
                        "deg": len(key),
                        "idx": [syms[i] for i in key],
                        "coef": self.ring.str_of(t.data[key]),
                    }
                )
            theta[tok] = entries
        payload = {
            "ring": str(self.ring),
            "g": self.sig.g,
            "N": self.trunc,
            "theta": theta,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    @staticmethod
    def from_json(text: str) -> "Expansion":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad expansion JSON: {exc}")
        try:
            ring = ring_from_string(payload["ring"])
            sig = Surface(int(payload["g"]), 0)
            trunc = int(payload.get("N", DEFAULT_TRUNCATION))
            theta = payload["theta"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad expansion JSON structure: {exc}")
        gen_higher = {}
        for tok, entries in theta.items():
            if tok not in sig.gen_tokens():
                raise ParseError(f"unknown generator {tok!r} in expansion JSON")
            data = {}
            for entry in entries:
                idx = tuple(symbol_index(sig, s) for s in entry["idx"])
                deg = int(entry.get("deg", len(idx)))
                if deg != len(idx):
                    raise ParseError(f"deg {deg} does not match idx length in {entry}")
                if deg < 2:
                    raise ParseError("degree-0/1 parts are implicit and may not be stored")
                data[idx] = ring.parse_el(entry["coef"])
            gen_higher[tok] = Tensor(ring, sig.rank, trunc, data)
        return Expansion(ring, sig, gen_higher, trunc)


def make_default_w3s(sig: Surface, ring: Ring, trunc: int = DEFAULT_TRUNCATION) -> Expansion:
    """theta2(a_i) = A_i B_i, theta2(b_i) = B_i A_i, higher terms zero."""
    if sig.n != 0:
        raise UnsupportedSignature("expansions are defined for n = 0")
    g, dim = sig.g, sig.rank
    gen_higher = {}
    for i in range(g):
        gen_higher[f"a{i + 1}"] = Tensor(ring, dim, trunc, {(i, g + i): 1})
        gen_higher[f"b{i + 1}"] = Tensor(ring, dim, trunc, {(g + i, i): 1})
    return Expansion(ring, sig, gen_higher, trunc)


def make_random_expansion(
    sig: Surface,
    ring: Ring,
    seed,
    trunc: int = DEFAULT_TRUNCATION,
    terms_per_degree: int = 4,
) -> Expansion:
    """Seeded random generator data; coefficients from {-2..2} mapped into K."""
    if sig.n != 0:
        raise UnsupportedSignature("expansions are defined for n = 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(f"expansion:{seed}")
    dim = sig.rank
    gen_higher = {}
    for tok in sig.gen_tokens():
        data = {}
        for deg in range(2, trunc + 1):
            for _ in range(terms_per_degree):
                key = tuple(rng.randrange(dim) for _ in range(deg))
                coef = rng.randint(-2, 2)
                data[key] = ring.add(data.get(key, 0), coef)
        gen_higher[tok] = Tensor(ring, dim, trunc, data)
    return Expansion(ring, sig, gen_higher, trunc)


def _bracket_1_2(ring: Ring, dim: int, trunc: int, index: int, d2: dict) -> Tensor:
    """[e_index, t] for a degree-2 coefficient dict t."""
    data = {}
    for (i, j), v in d2.items():
        left = (index, i, j)
        data[left] = ring.add(data.get(left, 0), v)
        right = (i, j, index)
        data[right] = ring.sub(data.get(right, 0), v)
    return Tensor(ring, dim, trunc, data)


def theta3_zeta_closed_form(exp: Expansion) -> Tensor:
    """Degree-3 part of theta(zeta) computed from generator theta2 values only.

    sum_i [A_i, theta2(b_i) - B_i A_i] - [B_i, theta2(a_i) - A_i B_i].
    """
    ring, sig, trunc = exp.ring, exp.sig, exp.trunc
    g, dim = sig.g, sig.rank
    out = Tensor.zero(ring, dim, trunc)
    for i in range(g):
        t_b = dict(exp.theta2_gen(f"b{i + 1}"))
        t_b[(g + i, i)] = ring.sub(t_b.get((g + i, i), 0), 1)  # minus B_i A_i
        t_a = dict(exp.theta2_gen(f"a{i + 1}"))
        t_a[(i, g + i)] = ring.sub(t_a.get((i, g + i), 0), 1)  # minus A_i B_i
        out = out + _bracket_1_2(ring, dim, trunc, i, t_b)
        out = out - _bracket_1_2(ring, dim, trunc, g + i, t_a)
    return out.degree_part(3)


def is_weakly_3_symplectic(exp: Expansion) -> bool:
    """True iff the degree-3 part of theta(zeta) vanishes (direct evaluation)."""
    if exp.trunc < 3:
        raise ValueError("weak 3-symplecticity needs truncation degree >= 3")
    zeta = boundary_word(exp.sig)
    return exp.eval(zeta).degree_part(3).is_zero()
