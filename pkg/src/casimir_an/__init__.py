"""Exact orbit, character and Casimir eigenvalue computations for A_N."""
from .eigenpoly import (ERRATA, NORMALIZATIONS, PRINTED, eval_closed, eval_from_cof, n_min,
                        theta_power, verify_class)
from .errors import (CasimirError, DegenerateReferenceError, DomainError, InvalidWeightError,
                     UndefinedGeneratorError, UnsupportedClassError)
from .lattice import fundamental, lambda_to_mu, mu_to_lambda
from .orbit_char import ch_orbit, cof_extract
from .orbits import enumerate_orbit, orbit_dimension
from .reps import ch_rep, cof_rep, freudenthal, orbital_decomposition, theta, weyl_dim
from .symfun import SymExpr, reduce_to_power, schur_check

__version__ = "0.1.0"
