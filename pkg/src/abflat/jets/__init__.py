"""Forward-mode second-order jets and the derivatives built from them."""

from abflat.jets._derivatives import (
    PartialDerivatives,
    as_real_array,
    derivative,
    directional_derivatives,
    gradient,
    hessian,
    jet_eval,
    mixed_partial,
    primal_array,
    singular_locus_guard,
    third_partials,
)
from abflat.jets._functions import cos, exp, log, power, primal, sin, sqrt, unary
from abflat.jets._jet import Jet2, Scalar, new_tag

__all__ = [
    "Jet2",
    "PartialDerivatives",
    "Scalar",
    "as_real_array",
    "cos",
    "derivative",
    "directional_derivatives",
    "exp",
    "gradient",
    "hessian",
    "jet_eval",
    "log",
    "mixed_partial",
    "new_tag",
    "power",
    "primal",
    "primal_array",
    "sin",
    "singular_locus_guard",
    "sqrt",
    "third_partials",
    "unary",
]

# Hide that it was not defined in this top-level package
Jet2.__module__ = __name__
PartialDerivatives.__module__ = __name__
