"""Exact computation and identity checking for degenerate Bell, Stirling and Fubini families."""

from .exact import LambdaPoly, binomial, deg_falling, deg_falling_sym, format_rational, parse_rational
from .families import (
    FamilyParams,
    PoleError,
    classical_bell,
    classical_fubini,
    classical_r_bell,
    classical_two_var_bell,
    deg_bell_phi,
    dobinski_partial,
    fully_deg_B,
    fully_deg_bel,
    r_B_norm,
    two_var_B_norm,
    two_var_deg_fubini,
)
from .series import TruncSeries, deg_exp_series, egf_coeff
from .stirling import SYMBOLIC, classical_stirling2, deg_r_stirling2, deg_stirling2
from .verify import SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "FamilyParams",
    "LambdaPoly",
    "PoleError",
    "SYMBOLIC",
    "SuiteConfig",
    "TruncSeries",
    "binomial",
    "classical_bell",
    "classical_fubini",
    "classical_r_bell",
    "classical_stirling2",
    "classical_two_var_bell",
    "deg_bell_phi",
    "deg_exp_series",
    "deg_falling",
    "deg_falling_sym",
    "deg_r_stirling2",
    "deg_stirling2",
    "dobinski_partial",
    "egf_coeff",
    "format_rational",
    "fully_deg_B",
    "fully_deg_bel",
    "parse_rational",
    "r_B_norm",
    "run_suite",
    "two_var_B_norm",
    "two_var_deg_fubini",
]
