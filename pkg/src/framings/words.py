"""Words in the free group pi_1 of a compact surface with boundary.

Generators are a1..ag, b1..bg, d1..dn for the surface of genus g with
n+1 boundary circles.  Words are stored freely reduced, so equality is
structural.  The text grammar is whitespace-separated tokens ``a<i>``,
``b<i>``, ``d<j>`` with an optional inverse suffix ``'``; the empty
string is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import IndexOutOfRange, ParseError, SignatureMismatch

_TOKEN_RE = re.compile(r"\A([abd])([0-9]+)(')?\Z")


@dataclass(frozen=True)
class Surface:
    """Signature of the surface: genus g, n extra boundary components."""

    g: int
    n: int = 0

    def __post_init__(self):
        if self.g < 0 or self.n < 0:
            raise ValueError(f"invalid signature (g={self.g}, n={self.n})")

    @property
    def rank(self) -> int:
        return 2 * self.g + self.n

    @property
    def euler_characteristic(self) -> int:
        return 1 - 2 * self.g - self.n

    def gen_tokens(self) -> list[str]:
        """Generator names in the basis order a1..ag, b1..bg, d1..dn."""
        return (
            [f"a{i}" for i in range(1, self.g + 1)]
            + [f"b{i}" for i in range(1, self.g + 1)]
            + [f"d{j}" for j in range(1, self.n + 1)]
        )


class Letter(NamedTuple):
    kind: str  # 'a', 'b' or 'd'
    index: int  # 1-based
    sign: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, -self.sign)

    def token(self) -> str:
        return f"{self.kind}{self.index}" + ("'" if self.sign < 0 else "")


def _check_letter(sig: Surface, letter: Letter):
    if letter.kind in ("a", "b"):
        if not 1 <= letter.index <= sig.g:
            raise IndexOutOfRange(f"{letter.token()} out of range for genus {sig.g}")
    elif letter.kind == "d":
        if not 1 <= letter.index <= sig.n:
            raise IndexOutOfRange(f"{letter.token()} out of range for n={sig.n}")
    else:
        raise IndexOutOfRange(f"unknown generator kind {letter.kind!r}")
    if letter.sign not in (1, -1):
        raise ValueError(f"letter sign must be +-1, got {letter.sign}")


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Freely reduce a letter sequence; idempotent."""
    stack: list[Letter] = []
    for let in letters:
        if stack and stack[-1].kind == let.kind and stack[-1].index == let.index \
                and stack[-1].sign == -let.sign:
            stack.pop()
        else:
            stack.append(let)
    return tuple(stack)


class Word:
    """A freely reduced word in pi_1(Sigma_{g,n+1})."""

    __slots__ = ("sig", "letters")

    def __init__(self, sig: Surface, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for let in letters:
            _check_letter(sig, let)
        self.sig = sig
        self.letters = reduce_letters(letters)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(sig: Surface) -> "Word":
        return Word(sig)

    @staticmethod
    def gen(sig: Surface, kind: str, index: int, sign: int = 1) -> "Word":
        return Word(sig, [Letter(kind, index, sign)])

    @staticmethod
    def parse(sig: Surface, text: str) -> "Word":
        letters = []
        for pos, tok in enumerate(text.split()):
            m = _TOKEN_RE.match(tok)
            if not m:
                raise ParseError(f"bad word token {tok!r}", position=pos)
            letters.append(Letter(m.group(1), int(m.group(2)), -1 if m.group(3) else 1))
        return Word(sig, letters)

    # -- group structure ---------------------------------------------------

    def _check_sig(self, other: "Word"):
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} != {other.sig}")

    def __mul__(self, other: "Word") -> "Word":
        self._check_sig(other)
        return Word(self.sig, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.sig, [let.inverse() for let in reversed(self.letters)])

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        out = Word(self.sig)
        for _ in range(abs(k)):
            out = out * base
        return out

    def commutator(self, other: "Word") -> "Word":
        """u v u^-1 v^-1, traversing u first."""
        self._check_sig(other)
        return self * other * self.inverse() * other.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.sig == other.sig
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.sig, self.letters))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __repr__(self):
        return f"Word({self.sig.g},{self.sig.n}: {str(self)!r})"

    def __str__(self):
        return " ".join(let.token() for let in self.letters)

    def letter_counts(self) -> list[int]:
        """Signed letter counts in the basis order (abelianization over Z)."""
        g = self.sig.g
        counts = [0] * self.sig.rank
        for kind, index, sign in self.letters:
            if kind == "a":
                counts[index - 1] += sign
            elif kind == "b":
                counts[g + index - 1] += sign
            else:
                counts[2 * g + index - 1] += sign
        return counts


def boundary_word(sig: Surface) -> Word:
    """zeta = [a1,b1]...[ag,bg] d1...dn; for n=0 the negative boundary loop."""
    letters = []
    for i in range(1, sig.g + 1):
        letters += [
            Letter("a", i, 1),
            Letter("b", i, 1),
            Letter("a", i, -1),
            Letter("b", i, -1),
        ]
    for j in range(1, sig.n + 1):
        letters.append(Letter("d", j, 1))
    return Word(sig, letters)


def generators(sig: Surface) -> list[Word]:
    """One-letter words for every generator, in basis order."""
    gens = [Word.gen(sig, "a", i) for i in range(1, sig.g + 1)]
    gens += [Word.gen(sig, "b", i) for i in range(1, sig.g + 1)]
    gens += [Word.gen(sig, "d", j) for j in range(1, sig.n + 1)]
    return gens
