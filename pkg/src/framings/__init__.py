"""Exact algebra of framings on surfaces: quadratic forms on the surface
group, truncated expansions, and the induced mapping-class-group cocycles,
over Z, Q or Z/m, with machine-checkable verification of every identity."""

from .errors import (
    BoundaryNotFixed,
    ConfigError,
    EmptyCurveList,
    FramingsError,
    IndexOutOfRange,
    InvalidModulus,
    NotInverse,
    NotInvertible,
    NotSymplectic,
    NotUnitNormalized,
    ParseError,
    RingMismatch,
    SignatureMismatch,
    TruncationMismatch,
    UnsupportedSignature,
)
from .rings import INTEGERS, RATIONALS, Ring, Scalar, from_integer, mod_ring, ring_from_string
from .words import Letter, Surface, Word, boundary_word, generators
from .homology import (
    DualVec,
    HomTensor,
    HVec,
    Matrix,
    flat,
    homology_class,
    intersection_dual,
    jmath,
)
from .tensors import (
    Expansion,
    Tensor,
    is_weakly_3_symplectic,
    make_default_w3s,
    make_random_expansion,
    theta3_zeta_closed_form,
)
from .forms import LambdaCoord, QuadraticForm, from_expansion, lambda_coords, morita_d, qf_eval, rot_of_simple
from .boundary import PHReport, RotVector, ShiftReport, feasible, ph_check, rot_vector, shift_report
from .mcg import (
    MCGElement,
    cocycle_action,
    compose,
    conjugate,
    identity_mcg,
    invert,
    k_cocycle,
    mcg_from_json,
    mcg_new,
    tau1,
    twist_a,
    twist_b,
    twist_chain,
)
from .checks import (
    CertificateReport,
    CheckReport,
    cor_kK_injectivity_check,
    genus_one_coboundary_check,
    nontriviality_certificate,
    standard_pants_curves,
    switching_witness,
    tauc_defect_closed_form,
    verify_dehn_twist_lemma,
    verify_nutau,
    verify_tauc,
    verify_tauc_defect,
)

__version__ = "0.1.0"
