"""First homology of the surface: vectors, the intersection form, duality.

H = K^(2g+n) in the ordered basis (A1..Ag, B1..Bg, D1..Dn).  The
intersection form is flat(A_i, B_i) = 1, flat(B_i, A_i) = -1, all other
basis pairs 0; boundary classes D_j lie in the radical.  DualVec holds
coordinates in the dual basis; HomTensor is a sparse element of
H* (x) H (x) H.  Internals store raw ring elements for speed.
"""

from __future__ import annotations

from .errors import RingMismatch, SignatureMismatch
from .rings import Ring, Scalar
from .words import Surface, Word


def basis_symbols(sig: Surface) -> list[str]:
    return (
        [f"A{i}" for i in range(1, sig.g + 1)]
        + [f"B{i}" for i in range(1, sig.g + 1)]
        + [f"D{j}" for j in range(1, sig.n + 1)]
    )


def dual_symbols(sig: Surface) -> list[str]:
    return [s + "*" for s in basis_symbols(sig)]


def symbol_index(sig: Surface, symbol: str) -> int:
    try:
        return basis_symbols(sig).index(symbol)
    except ValueError:
        raise SignatureMismatch(f"unknown basis symbol {symbol!r} for (g={sig.g}, n={sig.n})")


def flat_basis(sig: Surface, i: int, j: int) -> int:
    """flat on basis vectors, as an integer in {-1, 0, 1}."""
    g = sig.g
    if i < g and j == i + g:
        return 1
    if j < g and i == j + g:
        return -1
    return 0


def _check_pair(x, y):
    if x.sig != y.sig:
        raise SignatureMismatch(f"{x.sig} != {y.sig}")
    if x.ring != y.ring:
        raise RingMismatch(f"{x.ring} != {y.ring}")


class _VecBase:
    __slots__ = ("ring", "sig", "coords")

    def __init__(self, ring: Ring, sig: Surface, coords):
        coords = tuple(ring.normalize(c) for c in coords)
        if len(coords) != sig.rank:
            raise ValueError(f"expected {sig.rank} coordinates, got {len(coords)}")
        self.ring = ring
        self.sig = sig
        self.coords = coords

    @classmethod
    def zero(cls, ring: Ring, sig: Surface):
        return cls(ring, sig, [0] * sig.rank)

    @classmethod
    def basis(cls, ring: Ring, sig: Surface, index: int, coeff=1):
        coords = [0] * sig.rank
        coords[index] = coeff
        return cls(ring, sig, coords)

    def __add__(self, other):
        _check_pair(self, other)
        if type(self) is not type(other):
            return NotImplemented
        r = self.ring
        return type(self)(r, self.sig, [r.add(a, b) for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        _check_pair(self, other)
        if type(self) is not type(other):
            return NotImplemented
        r = self.ring
        return type(self)(r, self.sig, [r.sub(a, b) for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        r = self.ring
        return type(self)(r, self.sig, [r.neg(a) for a in self.coords])

    def scale(self, c):
        r = self.ring
        c = r.normalize(c.value if isinstance(c, Scalar) else c)
        return type(self)(r, self.sig, [r.mul(c, a) for a in self.coords])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.ring == other.ring
            and self.sig == other.sig
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((type(self).__name__, self.ring, self.sig, self.coords))

    def _format(self, symbols) -> str:
        parts = []
        for c, sym in zip(self.coords, symbols):
            if c == 0:
                continue
            if c == 1:
                parts.append(("+", sym))
            elif c == -1:
                parts.append(("-", sym))
            else:
                s = self.ring.str_of(c)
                if s.startswith("-"):
                    parts.append(("-", f"{s[1:]} {sym}"))
                else:
                    parts.append(("+", f"{s} {sym}"))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


class HVec(_VecBase):
    """Element of H = H_1(Sigma; K) in the (A, B, D) basis."""

    def __str__(self):
        return self._format(basis_symbols(self.sig))

    def __repr__(self):
        return f"HVec({self})"


class DualVec(_VecBase):
    """Element of H* = Hom(H, K) in the dual basis."""

    def __str__(self):
        return self._format(dual_symbols(self.sig))

    def __repr__(self):
        return f"DualVec({self})"

    def pair(self, x: HVec) -> Scalar:
        """<f, x> in K."""
        _check_pair(self, x)
        r = self.ring
        acc = 0
        for f, v in zip(self.coords, x.coords):
            acc = r.add(acc, r.mul(f, v))
        return r.scalar(acc)


def homology_class(word: Word, ring: Ring) -> HVec:
    """Abelianization of a word, mapped into K coefficients."""
    return HVec(ring, word.sig, word.letter_counts())


def flat(x: HVec, y: HVec) -> Scalar:
    """Algebraic intersection form on H; D_j classes lie in the radical."""
    _check_pair(x, y)
    r, g = x.ring, x.sig.g
    acc = 0
    for i in range(g):
        acc = r.add(acc, r.mul(x.coords[i], y.coords[g + i]))
        acc = r.sub(acc, r.mul(x.coords[g + i], y.coords[i]))
    return r.scalar(acc)


def jmath(x: HVec) -> DualVec:
    """Poincare duality H -> H*: X maps to (Y -> flat(X, Y))."""
    r, g, sig = x.ring, x.sig.g, x.sig
    coords = [0] * sig.rank
    for i in range(g):
        coords[i] = r.neg(x.coords[g + i])  # value on A_i is flat(X, A_i)
        coords[g + i] = x.coords[i]  # value on B_i is flat(X, B_i)
    return DualVec(r, sig, coords)


def intersection_dual(x: HVec) -> DualVec:
    """The paper's (.[C]) functional: Y -> flat(Y, x) = -jmath(x)."""
    return -jmath(x)


class Matrix:
    """Square matrix over K acting on H; stored as a tuple of columns."""

    __slots__ = ("ring", "cols")

    def __init__(self, ring: Ring, cols):
        self.ring = ring
        self.cols = tuple(tuple(ring.normalize(v) for v in col) for col in cols)
        dim = len(self.cols)
        if any(len(col) != dim for col in self.cols):
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.cols)

    @staticmethod
    def identity(ring: Ring, dim: int) -> "Matrix":
        return Matrix(ring, [[1 if i == j else 0 for i in range(dim)] for j in range(dim)])

    @staticmethod
    def from_columns(ring: Ring, vecs: list[HVec]) -> "Matrix":
        return Matrix(ring, [v.coords for v in vecs])

    def entry(self, row: int, col: int):
        return self.cols[col][row]

    def apply(self, x: HVec) -> HVec:
        r = self.ring
        out = [0] * self.dim
        for j, xj in enumerate(x.coords):
            if xj == 0:
                continue
            col = self.cols[j]
            for i in range(self.dim):
                if col[i] != 0:
                    out[i] = r.add(out[i], r.mul(col[i], xj))
        return HVec(r, x.sig, out)

    def apply_dual(self, f: DualVec) -> DualVec:
        """f composed with this matrix: (f o M)_j = <f, column_j>."""
        r = self.ring
        out = []
        for col in self.cols:
            acc = 0
            for fi, ci in zip(f.coords, col):
                acc = r.add(acc, r.mul(fi, ci))
            out.append(acc)
        return DualVec(r, f.sig, out)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} != {other.ring}")
        r = self.ring
        cols = []
        for col in other.cols:
            out = [0] * self.dim
            for j, xj in enumerate(col):
                if xj == 0:
                    continue
                mcol = self.cols[j]
                for i in range(self.dim):
                    if mcol[i] != 0:
                        out[i] = r.add(out[i], r.mul(mcol[i], xj))
            cols.append(out)
        return Matrix(r, cols)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ring == other.ring and self.cols == other.cols

    def __hash__(self):
        return hash((self.ring, self.cols))

    def __repr__(self):
        rows = [
            "[" + ", ".join(self.ring.str_of(self.cols[j][i]) for j in range(self.dim)) + "]"
            for i in range(self.dim)
        ]
        return "Matrix(" + "; ".join(rows) + ")"

    def rows(self) -> list[list]:
        return [[self.cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def preserves_flat(self, sig: Surface) -> bool:
        """flat(M e_i, M e_j) == flat(e_i, e_j) on all basis pairs."""
        r = self.ring
        cols = [HVec(r, sig, col) for col in self.cols]
        for i in range(sig.rank):
            for j in range(sig.rank):
                if flat(cols[i], cols[j]).value != r.from_int(flat_basis(sig, i, j)):
                    return False
        return True


class HomTensor:
    """Sparse element of H* (x) H (x) H, keyed by (dual, left, right) indices."""

    __slots__ = ("ring", "sig", "data")

    def __init__(self, ring: Ring, sig: Surface, data=None):
        self.ring = ring
        self.sig = sig
        clean = {}
        for key, val in (data or {}).items():
            v = ring.normalize(val)
            if v != 0:
                k, i, j = key
                if not all(0 <= t < sig.rank for t in (k, i, j)):
                    raise ValueError(f"index {key} out of range")
                clean[(k, i, j)] = v
        self.data = clean

    @staticmethod
    def zero(ring: Ring, sig: Surface) -> "HomTensor":
        return HomTensor(ring, sig)

    def __add__(self, other: "HomTensor") -> "HomTensor":
        _check_pair(self, other)
        r = self.ring
        data = dict(self.data)
        for key, val in other.data.items():
            data[key] = r.add(data.get(key, 0), val)
        return HomTensor(r, self.sig, data)

    def __sub__(self, other: "HomTensor") -> "HomTensor":
        return self + (-other)

    def __neg__(self) -> "HomTensor":
        r = self.ring
        return HomTensor(r, self.sig, {k: r.neg(v) for k, v in self.data.items()})

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        return (
            isinstance(other, HomTensor)
            and self.ring == other.ring
            and self.sig == other.sig
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ring, self.sig, tuple(sorted(self.data.items()))))

    def __repr__(self):
        if not self.data:
            return "HomTensor(0)"
        syms = basis_symbols(self.sig)
        dsyms = dual_symbols(self.sig)
        terms = []
        for (k, i, j) in sorted(self.data):
            c = self.ring.str_of(self.data[(k, i, j)])
            terms.append(f"{c}*{dsyms[k]}({syms[i]}x{syms[j]})")
        return "HomTensor(" + " + ".join(terms) + ")"

    def contract(self) -> HVec:
        """f (x) X1 X2 -> f(X1) X2, extended linearly."""
        r = self.ring
        out = [0] * self.sig.rank
        for (k, i, j), v in self.data.items():
            if k == i:
                out[j] = r.add(out[j], v)
        return HVec(r, self.sig, out)

    def contract_switched(self) -> HVec:
        """f (x) X1 X2 -> f(X2) X1, extended linearly."""
        r = self.ring
        out = [0] * self.sig.rank
        for (k, i, j), v in self.data.items():
            if k == j:
                out[i] = r.add(out[i], v)
        return HVec(r, self.sig, out)

    def one_tensor_flat(self) -> DualVec:
        """f (x) X1 X2 -> flat(X1, X2) f, extended linearly."""
        r = self.ring
        out = [0] * self.sig.rank
        for (k, i, j), v in self.data.items():
            fb = flat_basis(self.sig, i, j)
            if fb:
                out[k] = r.add(out[k], r.mul(fb, v))
        return DualVec(r, self.sig, out)

    def to_jsonable(self) -> list:
        syms = basis_symbols(self.sig)
        dsyms = dual_symbols(self.sig)
        return [
            {
                "dual": dsyms[k],
                "idx": [syms[i], syms[j]],
                "coef": self.ring.str_of(v),
            }
            for (k, i, j), v in sorted(self.data.items())
        ]
