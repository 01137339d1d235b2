"""Numerical tests for embedded components of polynomial systems."""

from .colon import colon_dual, ideal_membership, is_member
from .deflation import deflate, fiber_dual_dim
from .dual import GradedDual, LocalDual, NumericalConfig, Point, truncated_dual
from .embedded import (
    EmbeddedVerdict,
    TruncationSpace,
    double_truncation,
    ideal_truncation,
    is_origin_embedded,
    is_point_embedded,
    is_witness_polynomial,
    slice_suspect,
)
from .errors import (
    EmbcompError,
    InconclusiveError,
    NotOnVarietyError,
    ParseError,
    PreconditionError,
    SamplingError,
)
from .interpolation import dual_dims_of_truncated_ideal, interpolate_isolated
from .oracle import ComponentSpec, OracleHandle
from .parse import parse_polynomial, parse_system
from .poly import Polynomial, Ring
from .problem import Problem, load_problem
from .staircase import MonomialIdeal, gcorners, hilbert_values, monomial_stats, staircase_stats

__version__ = "0.1.0"
