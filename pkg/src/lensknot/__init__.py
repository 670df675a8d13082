"""Exact calculators for simple knots in lens spaces: correction terms,
rational Alexander and tau gradings, tight contact structures on L(m, 1),
and the upper bounds for rational Thurston-Bennequin plus rotation number.

All arithmetic is exact (stdlib fractions); the correction-term kernel has a
compiled fast path with a pure-Python fallback, selected at import time (see
``lens.kernel_backend``).
"""

from .errors import InvalidInputError, InvariantViolationError
from .exactq import Rat, divide, egcd, format_rat, frac_center, parse_rat, rat
from .lens import (
    CorrectionTable,
    LensSpace,
    conjugate,
    connected_sum_d,
    correction_terms,
    kernel_backend,
    pd_shift,
    two_tau_from_d,
)
from .simpleknot import (
    Diagram,
    KnotFloerData,
    RelPeriodicDomain,
    SimpleKnot,
    VerificationReport,
    alexander_gradings,
    build_diagram,
    connected_sum_knot_data,
    generator_label,
    solve_relative_periodic_domain,
    tau_table,
    verify_two_tau_identity,
)
from .contact import (
    TightContact,
    contact_d,
    contact_summary,
    enumerate_tight,
    hopf_invariant,
    match_structure,
    tau_xi,
)
from .legendrian import (
    BoundReport,
    LegendrianRep,
    bound_report,
    connect_sum,
    parity_check,
    stabilize,
)
from .sweep import SweepReport, enumerate_spaces, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CorrectionTable",
    "Diagram",
    "InvalidInputError",
    "InvariantViolationError",
    "KnotFloerData",
    "LegendrianRep",
    "LensSpace",
    "Rat",
    "RelPeriodicDomain",
    "SimpleKnot",
    "SweepReport",
    "TightContact",
    "VerificationReport",
    "alexander_gradings",
    "bound_report",
    "build_diagram",
    "conjugate",
    "connect_sum",
    "connected_sum_d",
    "connected_sum_knot_data",
    "contact_d",
    "contact_summary",
    "correction_terms",
    "divide",
    "egcd",
    "enumerate_spaces",
    "enumerate_tight",
    "format_rat",
    "frac_center",
    "generator_label",
    "hopf_invariant",
    "kernel_backend",
    "match_structure",
    "parse_rat",
    "parity_check",
    "pd_shift",
    "rat",
    "run_sweep",
    "solve_relative_periodic_domain",
    "stabilize",
    "tau_table",
    "tau_xi",
    "two_tau_from_d",
    "verify_two_tau_identity",
]
