"""Quadratic forms on the surface group (framings in coordinates).

A form q is determined by its generator values and extended to every
word by the product rule q(uv) = q(u) + q(v) + flat([u],[v]).  The fold
below implements exactly that and is invariant under free reduction, so
equal words always get equal values regardless of spelling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, RingMismatch, SignatureMismatch, UnsupportedSignature
from .rings import INTEGERS, Ring, Scalar, ring_from_string
from .words import Letter, Surface, Word, boundary_word
from .homology import DualVec, HVec, flat_basis, homology_class
from .tensors import Expansion, flat_of_degree2


class QuadraticForm:
    """q: pi -> K with q(uv) = q(u) + q(v) + u.v, stored by generator values."""

    __slots__ = ("ring", "sig", "values")

    def __init__(self, ring: Ring, sig: Surface, values: dict):
        self.ring = ring
        self.sig = sig
        tokens = sig.gen_tokens()
        missing = [t for t in tokens if t not in values]
        if missing:
            raise ValueError(f"missing generator values: {missing}")
        self.values = {t: ring.normalize(values[t]) for t in tokens}

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticForm)
            and self.ring == other.ring
            and self.sig == other.sig
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.ring, self.sig, tuple(sorted(self.values.items()))))

    def __repr__(self):
        vals = ", ".join(f"{t}={self.ring.str_of(v)}" for t, v in self.values.items())
        return f"QuadraticForm({self.ring}; {vals})"

    def gen_value(self, token: str) -> Scalar:
        return self.ring.scalar(self.values[token])

    # -- evaluation ----------------------------------------------------------

    def _letter_value(self, letter: Letter):
        v = self.values[f"{letter.kind}{letter.index}"]
        return v if letter.sign > 0 else self.ring.neg(v)

    def eval_letters(self, sig_letters) -> Scalar:
        """Left fold over an arbitrary (possibly unreduced) letter sequence."""
        r, g = self.ring, self.sig.g
        acc = 0
        cls = [0] * self.sig.rank
        for letter in sig_letters:
            kind, index, sign = letter
            if kind == "a":
                pos = index - 1
            elif kind == "b":
                pos = g + index - 1
            else:
                pos = 2 * g + index - 1
            # flat(current class, sign * e_pos)
            if pos < g:
                cross = r.neg(cls[g + pos])
            elif pos < 2 * g:
                cross = cls[pos - g]
            else:
                cross = 0
            if sign < 0:
                cross = r.neg(cross)
            acc = r.add(acc, r.add(self._letter_value(letter), cross))
            cls[pos] = r.add(cls[pos], sign)
        return r.scalar(acc)

    def __call__(self, word: Word) -> Scalar:
        if word.sig != self.sig:
            raise SignatureMismatch(f"{word.sig} != {self.sig}")
        return self.eval_letters(word.letters)

    # -- torsor structure ------------------------------------------------------

    def torsor_add(self, u: DualVec) -> "QuadraticForm":
        if u.sig != self.sig:
            raise SignatureMismatch(f"{u.sig} != {self.sig}")
        if u.ring != self.ring:
            raise RingMismatch(f"{u.ring} != {self.ring}")
        r = self.ring
        values = {}
        for pos, tok in enumerate(self.sig.gen_tokens()):
            values[tok] = r.add(self.values[tok], u.coords[pos])
        return QuadraticForm(r, self.sig, values)

    def torsor_diff(self, other: "QuadraticForm") -> DualVec:
        """The unique u with self = other + u."""
        if other.sig != self.sig:
            raise SignatureMismatch(f"{other.sig} != {self.sig}")
        if other.ring != self.ring:
            raise RingMismatch(f"{other.ring} != {self.ring}")
        r = self.ring
        coords = [
            r.sub(self.values[tok], other.values[tok]) for tok in self.sig.gen_tokens()
        ]
        return DualVec(r, self.sig, coords)

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "ring": str(self.ring),
            "g": self.sig.g,
            "n": self.sig.n,
            "values": {t: self.ring.str_of(v) for t, v in self.values.items()},
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    @staticmethod
    def from_json(text: str) -> "QuadraticForm":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad form JSON: {exc}")
        try:
            ring = ring_from_string(payload["ring"])
            sig = Surface(int(payload["g"]), int(payload.get("n", 0)))
            raw = payload["values"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad form JSON structure: {exc}")
        values = {}
        for tok in sig.gen_tokens():
            if tok not in raw:
                raise ParseError(f"form JSON missing generator {tok!r}")
            values[tok] = ring.parse_el(raw[tok])
        return QuadraticForm(ring, sig, values)


def qf_eval(q: QuadraticForm, word: Word) -> Scalar:
    return q(word)


def morita_d(sig: Surface, ring: Ring) -> QuadraticForm:
    """The classical integral form with value 0 on every a_i and b_i."""
    if sig.n != 0:
        raise UnsupportedSignature("morita_d is defined for connected boundary (n = 0)")
    if sig.g < 1:
        raise UnsupportedSignature("morita_d needs genus >= 1")
    return QuadraticForm(ring, sig, {t: 0 for t in sig.gen_tokens()})


def from_expansion(exp: Expansion) -> QuadraticForm:
    """Generator values flat(theta2(gen)); the form induced by the expansion."""
    values = {
        tok: flat_of_degree2(exp.ring, exp.sig, exp.theta2_gen(tok))
        for tok in exp.sig.gen_tokens()
    }
    return QuadraticForm(exp.ring, exp.sig, values)


def rot_of_simple(q: QuadraticForm, word: Word) -> Scalar:
    """q(w) - 1 for a word the caller asserts has an embedded representative."""
    return q(word) - 1


@dataclass(frozen=True)
class LambdaCoord:
    """Split coordinates of the integral lift: homology class plus fiber coefficient."""

    h: HVec
    z: int


def lambda_coords(q: QuadraticForm, word: Word) -> LambdaCoord:
    if q.ring != INTEGERS:
        raise RingMismatch("lambda coordinates need the integer ring")
    return LambdaCoord(h=homology_class(word, INTEGERS), z=q(word).value)
