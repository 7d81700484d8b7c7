"""Fractional decoding of Reed-Solomon codes over F_{q^l} through a virtual
projection onto a heterogeneous interleaved Reed-Solomon code over F_q."""

from .exceptions import DecodingFailure, RecoveryFailure
from .finite_fields import ExtFieldCtx, FieldCtx, build_extension, build_field
from .irs_decoder import collaborative_decode, error_values, solve_key_equation, syndromes
from .polynomials import Poly, evaluate, exact_div, interpolate, roots_in
from .projection import (
    ProjectedWord,
    ProjectionScheme,
    download_symbols,
    make_scheme,
    project_poly,
    project_word,
    trace_components,
)
from .radii import (
    alpha_radius,
    classical_irs_success,
    failure_bound,
    failure_bound_approx,
    irs_radius,
    projection_radius_construction,
    projection_radius_formula,
    radius_report,
    rate_condition,
)
from .recovery import RecoveredMessage, fractional_decode, reassemble, recover_components
from .rs_codec import CodeSpec, dual_multipliers, encode, make_code

__version__ = "0.1.0"
