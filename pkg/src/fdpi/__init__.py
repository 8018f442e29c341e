"""First-degree prime ideals of biquadratic fields and their quadratic
subfields: enumeration, combination, decomposition and divisibility of
principal ideals ``<n + m*gamma>``."""

from .combination import (
    DecomposeKind,
    DecomposeOutcome,
    ZeroClassification,
    classify_zero,
    combine,
    decompose,
)
from .divisibility import (
    CombineDivisorOutcome,
    PrincipalIdeal,
    QuadraticPrincipalIdeal,
    Side,
    combine_divisors,
    decompose_divisor,
    divides_biquad,
    divides_quad,
    intersect,
    is_exceptional,
)
from .errors import (
    FdpiError,
    InvalidFieldError,
    InvalidIdealError,
    InvalidParameterError,
    NonInvertibleError,
    NotPrimeError,
    PreconditionError,
)
from .fields import (
    BiquadraticField,
    FdpIdeal,
    QuadraticField,
    eval_map,
    fdpi_biquadratic,
    fdpi_quadratic,
    make_biquadratic,
)
from .modular import inv_mod, is_prime, quartic_roots, sqrt_mod

__version__ = "0.1.0"
