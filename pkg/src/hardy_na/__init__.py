"""Norm attainment of dual truncated Toeplitz operators.

Symbolic layer: finite Blaschke product arithmetic deciding the
analytic/coanalytic factorization criteria and emitting extremal
subspace generators.  Numeric layer: finite Fourier-window matrix
models of every operator involved, used to verify the verdicts and
every operator identity at controllable truncation sizes.
"""

from .fourier import (
    ArcSet,
    FourierVector,
    FrequencyBand,
    arc_indicator_coeffs,
    conjugate_Cu,
    convolve,
    flip_V,
    project_minus,
    project_plus,
)
from .blaschke import (
    BlaschkeProduct,
    InnerOuterPair,
    NotDivisible,
    PoleInDisk,
    RationalFunction,
    ZeroFunction,
    divide,
    gcd,
    inner_outer,
    is_inner_rational,
    multiply,
)

__version__ = "0.1.0"

__all__ = [
    "ArcSet",
    "BlaschkeProduct",
    "FourierVector",
    "FrequencyBand",
    "InnerOuterPair",
    "NotDivisible",
    "PoleInDisk",
    "RationalFunction",
    "ZeroFunction",
    "arc_indicator_coeffs",
    "conjugate_Cu",
    "convolve",
    "divide",
    "flip_V",
    "gcd",
    "inner_outer",
    "is_inner_rational",
    "multiply",
    "project_minus",
    "project_plus",
]
