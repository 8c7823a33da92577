"""Rotation data along the boundary circles of the surface.

The j-th rotation number of a form q is q(d_j) - 1 for j >= 1 and
q(w0^-1) + 1 for the 0-th boundary, w0 the boundary word.  With these
offsets the sum over all boundary circles equals the Euler
characteristic identically in q, which is the Poincare-Hopf identity
and the operational pin for the boundary-word convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SignatureMismatch
from .rings import Ring
from .words import Surface, Word, boundary_word
from .homology import DualVec
from .forms import QuadraticForm


@dataclass(frozen=True)
class RotVector:
    """One rotation number per boundary circle, index 0..n."""

    ring: Ring
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.ring.normalize(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def to_jsonable(self) -> list[str]:
        return [self.ring.str_of(v) for v in self.values]

    @staticmethod
    def from_jsonable(ring: Ring, entries) -> "RotVector":
        return RotVector(ring, tuple(ring.parse_el(str(e)) for e in entries))


def rot_vector(q: QuadraticForm) -> RotVector:
    r, sig = q.ring, q.sig
    rho0 = r.add(q(boundary_word(sig).inverse()).value, 1)
    rest = [r.sub(q.values[f"d{j}"], 1) for j in range(1, sig.n + 1)]
    return RotVector(r, tuple([rho0] + rest))


@dataclass(frozen=True)
class PHReport:
    ok: bool
    total: str
    expected: str
    rho: RotVector


def ph_check(q: QuadraticForm) -> PHReport:
    """Sum of boundary rotation numbers against the Euler characteristic."""
    r, sig = q.ring, q.sig
    rho = rot_vector(q)
    total = 0
    for v in rho.values:
        total = r.add(total, v)
    expected = r.from_int(sig.euler_characteristic)
    return PHReport(
        ok=(total == expected),
        total=r.str_of(total),
        expected=r.str_of(expected),
        rho=rho,
    )


def feasible(sig: Surface, ring: Ring, rho: RotVector) -> bool:
    """Whether a framing with the prescribed boundary rotation numbers exists."""
    if len(rho) != sig.n + 1:
        raise SignatureMismatch(f"expected {sig.n + 1} rotation numbers, got {len(rho)}")
    total = 0
    for v in rho.values:
        total = ring.add(total, v)
    return total == ring.from_int(sig.euler_characteristic)


@dataclass(frozen=True)
class ShiftReport:
    ok: bool
    deltas: tuple
    expected: tuple
    fixes_rotations: bool


def shift_report(q: QuadraticForm, u: DualVec) -> ShiftReport:
    """Effect of the torsor shift q -> q + u on the rotation vector.

    Predicted deltas: <u, D_j> for j >= 1 and <u, -(D_1+..+D_n)> for j = 0.
    A shift pairing to zero with every boundary class fixes the vector.
    """
    r, sig = q.ring, q.sig
    before = rot_vector(q)
    after = rot_vector(q.torsor_add(u))
    deltas = tuple(r.sub(a, b) for a, b in zip(after.values, before.values))
    d_coords = u.coords[2 * sig.g:]
    minus_sum = 0
    for c in d_coords:
        minus_sum = r.sub(minus_sum, c)
    expected = tuple([minus_sum] + list(d_coords))
    return ShiftReport(
        ok=(deltas == expected),
        deltas=deltas,
        expected=expected,
        fixes_rotations=all(v == 0 for v in expected),
    )
