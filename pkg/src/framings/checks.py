"""Verifiers for the cocycle identities, with machine-readable reports.

Each verifier computes both sides of one identity from independent
routes and reports the values plus their difference.  Nothing here is
ever assumed: expected-failure probes (the weakly-3-symplectic
hypothesis, the switched contraction) report whether the predicted
defect or counterexample actually shows up.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyCurveList, SignatureMismatch, UnsupportedSignature
from .rings import Ring
from .words import Surface, Word
from .homology import DualVec, HVec, basis_symbols, flat_basis, intersection_dual, jmath
from .tensors import Expansion, theta3_zeta_closed_form
from .forms import QuadraticForm, from_expansion
from . import linalg
from .mcg import (
    MCGElement,
    compose,
    invert,
    k_cocycle,
    tau1,
    twist_a,
    twist_b,
)


@dataclass
class CheckReport:
    """Outcome of one two-sided identity check."""

    identity: str
    ok: bool
    lhs: str
    rhs: str
    defect: str
    notes: dict = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        out = {
            "identity": self.identity,
            "pass": self.ok,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "defect": self.defect,
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def _dual_report(identity: str, lhs: DualVec, rhs: DualVec, notes=None, expect_equal=True) -> CheckReport:
    defect = lhs - rhs
    ok = defect.is_zero() if expect_equal else not defect.is_zero()
    return CheckReport(identity, ok, str(lhs), str(rhs), str(defect), notes or {})


def verify_nutau(theta: Expansion, phi: MCGElement) -> CheckReport:
    """(1 (x) flat) tau(phi) against -k(q_theta, phi); holds for every expansion."""
    lhs = tau1(theta, phi).one_tensor_flat()
    rhs = -k_cocycle(from_expansion(theta), phi)
    return _dual_report("nutau", lhs, rhs, {"phi": phi.label})


def verify_tauc(theta: Expansion, phi: MCGElement) -> CheckReport:
    """(1 (x) flat) tau against duality-of-contraction; needs theta3(zeta) = 0."""
    t = tau1(theta, phi)
    lhs = t.one_tensor_flat()
    rhs = jmath(t.contract())
    return _dual_report("tauc", lhs, rhs, {"phi": phi.label})


def tauc_defect_closed_form(theta: Expansion, i: int) -> DualVec:
    """Predicted defect jc tau - (1 (x) flat) tau at the a_i-twist:
    -((flat (x) B_i*) theta3(zeta)) B_i*, from generator theta2 data."""
    r, sig = theta.ring, theta.sig
    t3 = theta3_zeta_closed_form(theta)
    ib = sig.g + i - 1
    coeff = 0
    for (p, q, s), v in t3.data.items():
        if s != ib:
            continue
        fb = flat_basis(sig, p, q)
        if fb:
            coeff = r.add(coeff, r.mul(fb, v))
    coords = [0] * sig.rank
    coords[ib] = r.neg(coeff)
    return DualVec(r, sig, coords)


def verify_tauc_defect(theta: Expansion, i: int) -> CheckReport:
    """Measured tauc defect at the a_i-twist against the closed form."""
    phi = twist_a(theta.sig, theta.ring, i)
    t = tau1(theta, phi)
    measured = jmath(t.contract()) - t.one_tensor_flat()
    predicted = tauc_defect_closed_form(theta, i)
    return _dual_report("tauc-defect", measured, predicted, {"phi": phi.label})


def verify_dehn_twist_lemma(q: QuadraticForm, i: int) -> CheckReport:
    """k(q, twist_a(i)) against (q(a_i) - 1) (.[A_i])."""
    sig = q.sig
    phi = twist_a(sig, q.ring, i)
    lhs = k_cocycle(q, phi)
    rot = q.ring.sub(q.values[f"a{i}"], 1)
    a_i = HVec.basis(q.ring, sig, i - 1)
    rhs = intersection_dual(a_i).scale(rot)
    return _dual_report("dt", lhs, rhs, {"phi": phi.label, "rot": q.ring.str_of(rot)})


def coboundary_value(u: DualVec, phi: MCGElement) -> DualVec:
    """(delta u)(phi) = u o M_phi^-1 - u."""
    return phi.hmatrix_inv.apply_dual(u) - u


def genus_one_coboundary_check(q: QuadraticForm, phis=None) -> list[CheckReport]:
    """k(q, .) against the explicit coboundary on genus one.

    The potential u has value q(a1) - 1 on A1 and q(b1) + 1 on B1; the
    +1 is pinned by the b-twist convention (a1 -> a1 b1).
    """
    sig, r = q.sig, q.ring
    if sig.g != 1 or sig.n != 0:
        raise UnsupportedSignature("genus-one check needs g = 1, n = 0")
    u = DualVec(r, sig, [r.sub(q.values["a1"], 1), r.add(q.values["b1"], 1)])
    if phis is None:
        phis = [twist_a(sig, r, 1), twist_b(sig, r, 1)]
    reports = []
    for phi in phis:
        lhs = k_cocycle(q, phi)
        rhs = coboundary_value(u, phi)
        reports.append(_dual_report("genus1", lhs, rhs, {"phi": phi.label, "u": str(u)}))
    return reports


def cor_kK_injectivity_check(q: QuadraticForm, u: DualVec) -> CheckReport:
    """Find a built-in twist at which the forms q and q + u have distinct cocycles."""
    sig, r = q.sig, q.ring
    if sig.n != 0 or sig.g < 1:
        raise UnsupportedSignature("injectivity check needs g >= 1, n = 0")
    if u.is_zero():
        raise ValueError("u must be nonzero")
    shifted = q.torsor_add(u)
    for maker in (twist_a, twist_b):
        for i in range(1, sig.g + 1):
            phi = maker(sig, r, i)
            diff = k_cocycle(shifted, phi) - k_cocycle(q, phi)
            if not diff.is_zero():
                return CheckReport(
                    "kk-inj", True, str(u), phi.label, str(diff),
                    {"witness": phi.label},
                )
    return CheckReport("kk-inj", False, str(u), "none", "0", {})


@dataclass
class CertificateReport:
    """Exact feasibility verdict for the coboundary linear system."""

    feasible: bool
    rows: list
    rhs: list
    dependencies: list
    residuals: list
    residual: str | None
    solution: list | None

    @property
    def ok(self) -> bool:
        return not self.feasible

    def to_jsonable(self) -> dict:
        return {
            "identity": "certificate",
            "pass": self.ok,
            "feasible": self.feasible,
            "rows": self.rows,
            "rhs": self.rhs,
            "dependencies": self.dependencies,
            "residuals": self.residuals,
            "residual": self.residual,
            "solution": self.solution,
        }


def nontriviality_certificate(sig: Surface, ring: Ring, q: QuadraticForm, curves) -> CertificateReport:
    """Decide whether rot(C_k) = <u, [C_k]> admits a solution u.

    curves is a list of (MCGElement, generator index) pairs; the curve is
    the image of a_i, so its class is primitive and its rotation number is
    q(word) - 1.  Infeasibility certifies that the cocycle of q is not a
    coboundary on this finite set.
    """
    if sig.g < 2 or sig.n != 0:
        raise UnsupportedSignature("certificates need g >= 2, n = 0")
    if not curves:
        raise EmptyCurveList("at least one curve is required")
    if q.sig != sig:
        raise SignatureMismatch(f"{q.sig} != {sig}")
    rows = []
    rhs = []
    for phi, i in curves:
        if not 1 <= i <= sig.g:
            raise ValueError(f"curve index {i} out of range")
        word = phi.fwd[f"a{i}"]
        cls = phi.hmatrix.cols[i - 1]
        rows.append(list(cls))
        rhs.append(ring.sub(q(word).value, 1))

    syms = basis_symbols(sig)
    if ring.kind == "Q" or ring.kind == "Z":
        int_rows = [[int(x) for x in row] for row in rows]
        int_rhs = [int(b) for b in rhs]
        if ring.kind == "Q":
            feasible, solution = linalg.solve_rational(int_rows, int_rhs)
        else:
            feasible = linalg.solve_integer(int_rows, int_rhs)
            solution = None
        deps = linalg.left_nullspace([[int(x) for x in row] for row in rows])
        residuals = [sum(c * b for c, b in zip(dep, int_rhs)) for dep in deps]
    else:
        m = ring.modulus
        feasible = linalg.solve_mod([[int(x) for x in row] for row in rows],
                                    [int(b) for b in rhs], m)
        solution = None
        # dependencies of the integer rows still witness inconsistency mod m
        deps = linalg.left_nullspace([[int(x) for x in row] for row in rows])
        residuals = []
        for dep in deps:
            val = sum(c * int(b) for c, b in zip(dep, rhs))
            residuals.append(int(val) % m if val.denominator == 1 else val)
    first_bad = next((r for r in residuals if r != 0), None)
    return CertificateReport(
        feasible=feasible,
        rows=[
            {syms[j]: ring.str_of(row[j]) for j in range(sig.rank) if row[j] != 0}
            for row in rows
        ],
        rhs=[ring.str_of(b) for b in rhs],
        dependencies=[[str(c) for c in dep] for dep in deps],
        residuals=[str(r) for r in residuals],
        residual=None if first_bad is None else str(first_bad),
        solution=None if solution is None else [str(x) for x in solution],
    )


def standard_pants_curves(sig: Surface, ring: Ring):
    """The certificate triple realizing the pants obstruction at genus >= 2.

    C3 runs over handles 1 and 2 (class A1 + A2), followed by the two
    handle curves a1 and a2.  Ordered so that the normalized dependency
    is (1, -1, -1) and, for the classical integral form, the residual is
    the pants Euler characteristic -1.
    """
    from .mcg import identity_mcg, twist_chain

    if sig.g < 2 or sig.n != 0:
        raise UnsupportedSignature("pants curves need g >= 2, n = 0")
    tb1 = twist_b(sig, ring, 1)
    ta1 = twist_a(sig, ring, 1)
    mix = compose(compose(compose(tb1, ta1), invert(twist_chain(sig, ring, 1))), invert(tb1))
    ident = identity_mcg(sig, ring)
    return [(mix, 1), (ident, 1), (ident, 2)]


def switching_witness(theta: Expansion, phis) -> CheckReport:
    """Find phi where the switched contraction disagrees with (1 (x) flat) tau."""
    for phi in phis:
        t = tau1(theta, phi)
        lhs = jmath(t.contract_switched())
        rhs = t.one_tensor_flat()
        if lhs != rhs:
            return CheckReport(
                "switch-neg", True, str(lhs), str(rhs), str(lhs - rhs),
                {"witness": phi.label},
            )
    return CheckReport("switch-neg", False, "", "", "0", {"witness": "none"})
