"""Exact bound states of the trigonometric Rosen-Morse potential.

The closed forms (polynomials, spectra, wave functions, normalization and the
factorization ladder) are exact over rational parameters; the `numerics`
module provides independent quadrature and finite-difference oracles used to
verify every one of them.
"""

__version__ = "0.1.0"

from .polycore import Polynomial, Rational, RationalFunction
from .rodrigues import (
    RodriguesResult,
    WeightSpec,
    arccot_weight,
    chebyshev1_weight,
    chebyshev2_weight,
    gegenbauer_weight,
    hermite_weight,
    jacobi_weight,
    laguerre_weight,
    legendre_weight,
    rodrigues_generate,
    sturm_liouville_residual,
    table1_presets,
)
from .trm import (
    TrmLevel,
    TrmParams,
    TrmSolution,
    trm_knorm,
    trm_level,
    trm_polynomial,
    trm_potential,
    trm_solution,
    trm_spectrum,
    trm_wavefunction,
)
from .eckart import (
    EckartLevel,
    EckartParams,
    eckart_normalization,
    eckart_potential,
    eckart_spectrum,
    eckart_wavefunction,
    jacobi_polynomial,
    jacobi_real,
)
from .susy import (
    PartnerPair,
    Superpotential,
    apply_ladder,
    partner_pair,
    superpotential_from_gst,
    superpotential_fd,
)
from .numerics import (
    IntegralEstimate,
    QuadratureSpec,
    SampledFunction,
    TridiagonalOperator,
    eigenvalues_sturm,
    eigenvector_inverse_iteration,
    fdm_eigenvalues,
    fdm_hamiltonian,
    integrate,
    safe_grid,
)
