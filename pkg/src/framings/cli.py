"""Command-line front end: verification suites and object evaluation.

``framings verify`` runs seeded identity suites and emits a JSON report
(deterministic bytes for a fixed seed and config); exit status 0 means
every identity behaved as predicted, including the expected-failure
probes.  ``framings eval`` evaluates single objects (words, expansions,
forms, cocycles) for quick inspection.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import ConfigError, FramingsError, ParseError
from .rings import Ring, mod_ring, ring_from_string
from .words import Surface, Word, boundary_word
from .homology import homology_class
from .tensors import Expansion, make_default_w3s, is_weakly_3_symplectic, theta3_zeta_closed_form, Tensor
from .forms import QuadraticForm, from_expansion, morita_d
from .boundary import RotVector, feasible as rot_feasible, ph_check, rot_vector
from .mcg import (
    MCGElement,
    cocycle_action,
    compose,
    identity_mcg,
    invert,
    k_cocycle,
    tau1,
    twist_a,
    twist_b,
    twist_chain,
)
from .checks import (
    genus_one_coboundary_check,
    cor_kK_injectivity_check,
    nontriviality_certificate,
    standard_pants_curves,
    switching_witness,
    tauc_defect_closed_form,
    verify_dehn_twist_lemma,
    verify_nutau,
    verify_tauc,
    verify_tauc_defect,
)
from . import sampling

ALL_IDENTITIES = [
    "thze", "w3s", "nutau", "tauc", "tauc-defect", "dt", "cocycle", "kk-inj",
    "ph", "feasible", "genus1", "certificate", "switch-neg", "mod2-descent",
    "gamma3",
]
_NEEDS_N0 = {
    "thze", "w3s", "nutau", "tauc", "tauc-defect", "dt", "cocycle", "kk-inj",
    "genus1", "certificate", "switch-neg", "gamma3",
}
_NEEDS_G1 = {"nutau", "tauc", "tauc-defect", "dt", "cocycle", "kk-inj", "switch-neg", "gamma3"}


@dataclass
class SuiteConfig:
    ring: Ring
    g: int
    n: int
    seed: int
    cases: int
    identities: list[str]

    def validate(self):
        if self.cases < 1:
            raise ConfigError("cases must be >= 1")
        if self.g < 0 or self.n < 0:
            raise ConfigError("g and n must be >= 0")
        for ident in self.identities:
            if ident not in ALL_IDENTITIES:
                raise ConfigError(f"unknown identity {ident!r}")
            if ident in _NEEDS_N0 and self.n != 0:
                raise ConfigError(f"identity {ident!r} requires n = 0")
            if ident in _NEEDS_G1 and self.g < 1:
                raise ConfigError(f"identity {ident!r} requires g >= 1")
            if ident == "genus1" and self.g != 1:
                raise ConfigError("identity 'genus1' requires g = 1")
            if ident == "certificate" and self.g < 2:
                raise ConfigError("identity 'certificate' requires g >= 2")
            if ident == "switch-neg" and self.g < 2:
                raise ConfigError("identity 'switch-neg' requires g >= 2 (the witness mixes handles)")
            if ident == "mod2-descent" and self.ring != mod_ring(2):
                raise ConfigError("identity 'mod2-descent' requires --ring Z/2")

    def to_jsonable(self):
        return {
            "ring": str(self.ring),
            "g": self.g,
            "n": self.n,
            "seed": self.seed,
            "cases": self.cases,
            "identities": list(self.identities),
        }


def applicable_identities(ring: Ring, g: int, n: int) -> list[str]:
    """Every identity whose preconditions the config satisfies."""
    out = []
    for ident in ALL_IDENTITIES:
        if ident in _NEEDS_N0 and n != 0:
            continue
        if ident in _NEEDS_G1 and g < 1:
            continue
        if ident == "genus1" and g != 1:
            continue
        if ident in ("certificate", "switch-neg") and g < 2:
            continue
        if ident == "mod2-descent" and ring != mod_ring(2):
            continue
        out.append(ident)
    return out


def _case(identity, index, ok, lhs="", rhs="", defect="", **extra):
    out = {"identity": identity, "case": index, "pass": bool(ok),
           "lhs": str(lhs), "rhs": str(rhs), "defect": str(defect)}
    out.update({k: str(v) for k, v in extra.items()})
    return out


def _run_thze(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    zeta = boundary_word(sig)
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "thze", k)
        theta = sampling.random_expansion(sig, cfg.ring, rng)
        ev = theta.eval(zeta)
        deg2 = ev.degree_part(2)
        want2 = Tensor(cfg.ring, sig.rank, theta.trunc,
                       {key: c for i in range(sig.g)
                        for key, c in (((i, sig.g + i), 1), ((sig.g + i, i), -1))})
        deg3 = ev.degree_part(3)
        want3 = theta3_zeta_closed_form(theta)
        ok = (deg2 == want2) and (deg3 == want3)
        results.append(_case("thze", k, ok, deg2.format(sig), want2.format(sig),
                             (deg3 - want3).format(sig)))
    return results


def _run_w3s(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    theta = make_default_w3s(sig, cfg.ring)
    results.append(_case("w3s", 0, is_weakly_3_symplectic(theta), "default", "w3s", ""))
    for k in range(1, cfg.cases):
        rng = sampling.rng_for(cfg.seed, "w3s", k)
        theta = sampling.random_w3s_expansion(sig, cfg.ring, rng)
        results.append(_case("w3s", k, is_weakly_3_symplectic(theta), "random-w3s", "w3s", ""))
    return results


def _run_nutau(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "nutau", k)
        theta = sampling.random_expansion(sig, cfg.ring, rng)
        phi = sampling.random_twist_composite(sig, cfg.ring, rng, length=6)
        rep = verify_nutau(theta, phi)
        results.append(_case("nutau", k, rep.ok, rep.lhs, rep.rhs, rep.defect, phi=phi.label))
    return results


def _run_tauc(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "tauc", k)
        theta = sampling.random_w3s_expansion(sig, cfg.ring, rng)
        phi = sampling.random_twist_composite(sig, cfg.ring, rng, length=6)
        rep = verify_tauc(theta, phi)
        results.append(_case("tauc", k, rep.ok, rep.lhs, rep.rhs, rep.defect, phi=phi.label))
    return results


def _run_tauc_defect(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    theta = Expansion(cfg.ring, sig, {})  # theta2 = 0 on all generators: not w3s
    results = []
    case = 0
    for i in range(1, sig.g + 1):
        rep = verify_tauc_defect(theta, i)
        nonzero = rep.lhs != "0"
        results.append(_case("tauc-defect", case, rep.ok and nonzero,
                             rep.lhs, rep.rhs, rep.defect, i=i))
        case += 1
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "tauc-defect", k)
        theta = sampling.random_expansion(sig, cfg.ring, rng)
        for i in range(1, sig.g + 1):
            rep = verify_tauc_defect(theta, i)
            results.append(_case("tauc-defect", case, rep.ok, rep.lhs, rep.rhs, rep.defect, i=i))
            case += 1
    return results


def _run_dt(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    case = 0
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "dt", k)
        q = sampling.random_form(sig, cfg.ring, rng)
        for i in range(1, sig.g + 1):
            rep = verify_dehn_twist_lemma(q, i)
            results.append(_case("dt", case, rep.ok, rep.lhs, rep.rhs, rep.defect, i=i))
            case += 1
    return results


def _run_cocycle(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "cocycle", k)
        theta = sampling.random_expansion(sig, cfg.ring, rng)
        q = sampling.random_form(sig, cfg.ring, rng)
        phi = sampling.random_twist_composite(sig, cfg.ring, rng, length=3)
        psi = sampling.random_twist_composite(sig, cfg.ring, rng, length=3)
        both = compose(phi, psi)
        tau_lhs = tau1(theta, both)
        tau_rhs = tau1(theta, phi) + cocycle_action(phi, tau1(theta, psi))
        k_lhs = k_cocycle(q, both)
        k_rhs = k_cocycle(q, phi) + phi.hmatrix_inv.apply_dual(k_cocycle(q, psi))
        ok = (tau_lhs == tau_rhs) and (k_lhs == k_rhs)
        results.append(_case("cocycle", k, ok, str(k_lhs), str(k_rhs),
                             str(k_lhs - k_rhs), phi=phi.label, psi=psi.label))
    return results


def _run_kk_inj(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "kk-inj", k)
        q = sampling.random_form(sig, cfg.ring, rng)
        u = sampling.random_nonzero_dual(sig, cfg.ring, rng)
        rep = cor_kK_injectivity_check(q, u)
        results.append(_case("kk-inj", k, rep.ok, rep.lhs, rep.rhs, rep.defect, **rep.notes))
    return results


def _run_ph(cfg: SuiteConfig):
    sig = Surface(cfg.g, cfg.n)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "ph", k)
        q = sampling.random_form(sig, cfg.ring, rng)
        rep = ph_check(q)
        results.append(_case("ph", k, rep.ok, rep.total, rep.expected, ""))
    return results


def _run_feasible(cfg: SuiteConfig):
    sig = Surface(cfg.g, cfg.n)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "feasible", k)
        q = sampling.random_form(sig, cfg.ring, rng)
        rho = rot_vector(q)
        ok = rot_feasible(sig, cfg.ring, rho)
        violate = RotVector(cfg.ring, tuple([cfg.ring.add(rho.values[0], 1)] + list(rho.values[1:])))
        ok_violation = not rot_feasible(sig, cfg.ring, violate)
        results.append(_case("feasible", k, ok and ok_violation,
                             str(rho.to_jsonable()), str(sig.euler_characteristic), ""))
    return results


def _run_genus1(cfg: SuiteConfig):
    sig = Surface(1, 0)
    results = []
    case = 0
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "genus1", k)
        q = sampling.random_form(sig, cfg.ring, rng)
        phis = [twist_a(sig, cfg.ring, 1), twist_b(sig, cfg.ring, 1)]
        phis += [sampling.random_twist_composite(sig, cfg.ring, rng, length=4) for _ in range(3)]
        for rep in genus_one_coboundary_check(q, phis):
            results.append(_case("genus1", case, rep.ok, rep.lhs, rep.rhs, rep.defect,
                                 phi=rep.notes.get("phi", "")))
            case += 1
    return results


def _run_certificate(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    q = morita_d(sig, cfg.ring)
    curves = standard_pants_curves(sig, cfg.ring)
    rep = nontriviality_certificate(sig, cfg.ring, q, curves)
    case = rep.to_jsonable()
    case["case"] = 0
    case["lhs"] = str(rep.residual)
    case["rhs"] = "infeasible"
    case["defect"] = ""
    return [case]


def _run_switch_neg(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    theta = make_default_w3s(sig, cfg.ring)
    rng = sampling.rng_for(cfg.seed, "switch-neg")
    phis = [twist_a(sig, cfg.ring, 1), twist_b(sig, cfg.ring, 1),
            twist_chain(sig, cfg.ring, 1)]
    phis += [sampling.random_twist_composite(sig, cfg.ring, rng, length=4, include_chain=True)
             for _ in range(8)]
    rep = switching_witness(theta, phis)
    return [_case("switch-neg", 0, rep.ok, rep.lhs, rep.rhs, rep.defect, **rep.notes)]


def _run_mod2_descent(cfg: SuiteConfig):
    sig = Surface(cfg.g, cfg.n)
    ring = mod_ring(2)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "mod2", k)
        q = sampling.random_form(sig, ring, rng)
        w = sampling.random_word(sig, rng)
        u = sampling.random_word(sig, rng, 4)
        v = sampling.random_word(sig, rng, 4)
        insert = u.commutator(v) if rng.random() < 0.5 else u * u
        pos = rng.randint(0, len(w.letters))
        decorated = Word(sig, w.letters[:pos] + insert.letters + w.letters[pos:])
        ok = q(w) == q(decorated)
        results.append(_case("mod2-descent", k, ok, str(q(w)), str(q(decorated)), ""))
    return results


def _run_gamma3(cfg: SuiteConfig):
    sig = Surface(cfg.g, 0)
    results = []
    for k in range(cfg.cases):
        rng = sampling.rng_for(cfg.seed, "gamma3", k)
        q = sampling.random_form(sig, cfg.ring, rng)
        u = sampling.random_word(sig, rng, 5)
        v = sampling.random_word(sig, rng, 5)
        w = sampling.random_word(sig, rng, 5)
        val = q(u.commutator(v).commutator(w))
        results.append(_case("gamma3", k, val.value == 0, str(val), "0", ""))
    return results


_RUNNERS = {
    "thze": _run_thze,
    "w3s": _run_w3s,
    "nutau": _run_nutau,
    "tauc": _run_tauc,
    "tauc-defect": _run_tauc_defect,
    "dt": _run_dt,
    "cocycle": _run_cocycle,
    "kk-inj": _run_kk_inj,
    "ph": _run_ph,
    "feasible": _run_feasible,
    "genus1": _run_genus1,
    "certificate": _run_certificate,
    "switch-neg": _run_switch_neg,
    "mod2-descent": _run_mod2_descent,
    "gamma3": _run_gamma3,
}


def run_suite(cfg: SuiteConfig) -> dict:
    cfg.validate()
    results = []
    for ident in cfg.identities:
        results.extend(_RUNNERS[ident](cfg))
    return {"config": cfg.to_jsonable(), "results": results}


def report_passed(report: dict) -> bool:
    return all(case["pass"] for case in report["results"])


# -- phi expressions -----------------------------------------------------------

_PHI_MAKERS = {"twist_a": twist_a, "twist_b": twist_b, "twist_chain": twist_chain}


def parse_phi(sig: Surface, ring: Ring, text: str) -> MCGElement:
    """Composition expression: ``twist_a:1 * twist_b:2^-1 * ...``;
    factors compose left to right (the leftmost acts last)."""
    out = identity_mcg(sig, ring)
    if not text.strip():
        return out
    for pos, token in enumerate(t.strip() for t in text.split("*")):
        power = 1
        body = token
        if "^" in token:
            body, _, exp = token.partition("^")
            try:
                power = int(exp)
            except ValueError:
                raise ParseError(f"bad exponent in {token!r}", position=pos)
        name, _, idx = body.strip().partition(":")
        if name not in _PHI_MAKERS or not idx.isdigit():
            raise ParseError(f"bad mapping-class token {token!r}", position=pos)
        factor = _PHI_MAKERS[name](sig, ring, int(idx))
        if power < 0:
            factor = invert(factor)
            power = -power
        for _ in range(power):
            out = compose(out, factor)
    return out


def _load_form(args, sig: Surface, ring: Ring) -> QuadraticForm:
    spec = args.form
    if spec == "d":
        return morita_d(sig, ring)
    if spec == "default-theta":
        return from_expansion(make_default_w3s(sig, ring))
    with open(spec, "r", encoding="utf-8") as fh:
        return QuadraticForm.from_json(fh.read())


def _load_theta(args, sig: Surface, ring: Ring) -> Expansion:
    spec = args.theta
    if spec in (None, "default"):
        return make_default_w3s(sig, ring)
    with open(spec, "r", encoding="utf-8") as fh:
        return Expansion.from_json(fh.read())


def cmd_verify(args) -> int:
    ring = ring_from_string(args.ring)
    cfg = SuiteConfig(
        ring=ring,
        g=args.g,
        n=args.n,
        seed=args.seed,
        cases=args.cases,
        identities=(
            args.identities.split(",")
            if args.identities
            else applicable_identities(ring, args.g, args.n)
        ),
    )
    report = run_suite(cfg)
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    by_identity: dict[str, list] = {}
    for case in report["results"]:
        by_identity.setdefault(case["identity"], []).append(case["pass"])
    for ident in cfg.identities:
        oks = by_identity.get(ident, [])
        status = "pass" if all(oks) else "FAIL"
        print(f"{status} {ident} ({sum(oks)}/{len(oks)} cases)")
    if not args.json:
        print(text)
    return 0 if report_passed(report) else 1


def cmd_eval(args) -> int:
    ring = ring_from_string(args.ring)
    sig = Surface(args.g, args.n)
    if args.kind == "word":
        word = Word.parse(sig, args.word or "")
        print(json.dumps(str(word)))
        return 0
    if args.kind == "expansion":
        theta = _load_theta(args, Surface(args.g, 0), ring)
        word = Word.parse(theta.sig, args.word or "")
        tensor = theta.eval(word)
        print(json.dumps(tensor.format(theta.sig)))
        return 0
    if args.kind == "qform":
        q = _load_form(args, sig, ring)
        word = Word.parse(q.sig, args.word or "")
        print(json.dumps(str(q(word))))
        return 0
    if args.kind == "tau":
        theta = _load_theta(args, Surface(args.g, 0), ring)
        phi = parse_phi(theta.sig, ring, args.phi or "")
        print(json.dumps(tau1(theta, phi).to_jsonable()))
        return 0
    if args.kind == "k":
        q = _load_form(args, Surface(args.g, 0), ring)
        phi = parse_phi(q.sig, ring, args.phi or "")
        print(json.dumps(str(k_cocycle(q, phi))))
        return 0
    raise ConfigError(f"unknown eval kind {args.kind!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framings",
        description="Exact verification of framing/cocycle identities on surface groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run seeded identity suites")
    p_verify.add_argument("--ring", required=True, help="Z | Q | Z/<m>")
    p_verify.add_argument("--g", type=int, required=True)
    p_verify.add_argument("--n", type=int, default=0)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=20)
    p_verify.add_argument("--identities", default="",
                          help=f"comma list from: {','.join(ALL_IDENTITIES)}")
    p_verify.add_argument("--json", default="", help="write the JSON report here")
    p_verify.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate a single object")
    p_eval.add_argument("kind", choices=["word", "expansion", "qform", "tau", "k"])
    p_eval.add_argument("--ring", default="Z")
    p_eval.add_argument("--g", type=int, default=1)
    p_eval.add_argument("--n", type=int, default=0)
    p_eval.add_argument("--word", default="")
    p_eval.add_argument("--theta", default=None, help="expansion JSON file or 'default'")
    p_eval.add_argument("--form", default="d", help="form JSON file, 'd' or 'default-theta'")
    p_eval.add_argument("--phi", default="", help="e.g. 'twist_a:1 * twist_b:2^-1'")
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FramingsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
