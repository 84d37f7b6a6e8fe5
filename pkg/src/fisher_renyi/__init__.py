"""Fisher-Renyi complexity of probability densities.

C_FR^(lambda)[rho] = F~_lambda[rho] * N_lambda[rho] / D_lambda, with F~ the
lambda-weighted Fisher information, N the Renyi entropy power and D the
constant that makes the generalized Gaussians B_lambda the minimizers (C = 1).
"""
from .complexity import ComplexityReport, cfr_complexity, cramer_rao, fisher_shannon, normalization_D
from .densities import (
    Density,
    Density1D,
    GeneralizedGaussian,
    RadialDensity,
    SeparableDensity,
    beta_density,
    gaussian,
    make_generalized_gaussian,
    near_continuity_pair,
    rearrange_decreasing_1d,
    replicate_1d,
    scale_translate,
    sine_humps,
)
from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    IntegrabilityError,
    UnsupportedInputError,
    UnsupportedLambdaError,
)
from .functionals import (
    FunctionalValue,
    LambdaParam,
    biparametric_fisher,
    fisher_lambda,
    fisher_standard,
    renyi_entropy,
    renyi_power,
    shannon_entropy,
)
from .hydrogenic import (
    HydrogenicDensity,
    QuantumNumbers,
    cfr_circular_closed,
    cfr_ground_closed,
    cfr_ns_closed,
    cfr_numeric,
    hydrogenic_density,
)
from .quadrature import QuadratureSpec

__version__ = "0.1.0"
