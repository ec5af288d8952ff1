"""Computing the GSVD of a matrix pair via two symmetric augmented
generalized eigenvalue formulations, with accuracy metrics,
perturbation bounds, and iterative condition-number estimators that
guide which formulation to use.
"""

from .augmented import AugmentedPencil, ExactEigenStructure, Form, build_hat, build_tilde, exact_structure_from_gsvd
from .bounds import (FIRST_ORDER_SLACK, bound_eigvec, bound_recovered,
                     bound_sigma, gamma_pair, rho_factor, scaled_x_lower_bounds,
                     separation_term)
from .condest import (Choice, CondEstimate, Method, choose_formulation,
                      estimate_bidiag, estimate_lanczos_inv, estimate_lsqr)
from .eigensolve import (GenEigenpair, PerturbationSpec, perturb_pencil,
                         select_eigenpairs, solve_pencil)
from .errors import (ArgumentError, BoundViolationError, ContractError,
                     GsvdLabError, MatrixMarketError, NumericalError)
from .harness import ExperimentConfig, run_accuracy, run_bound_check, run_table3
from .metrics import AccuracyReport, aggregate, chordal, sin_angle
from .oracle import GsvdFactors, gsvd_reference, x_matrix_norms
from .problems import (MatrixPair, first_difference_matrix, gen_random_pair,
                       load_matrix_market, normalize, save_matrix_market)
from .recovery import (RecoveredComponent, recover_all, recover_all_from_pencil,
                       recover_from_hat, recover_from_tilde, sigma_to_alphabeta)

__version__ = "1.0.0"

__all__ = [
    "AugmentedPencil", "ExactEigenStructure", "Form", "build_hat", "build_tilde",
    "exact_structure_from_gsvd",
    "FIRST_ORDER_SLACK", "bound_eigvec", "bound_recovered", "bound_sigma",
    "gamma_pair", "rho_factor", "scaled_x_lower_bounds", "separation_term",
    "Choice", "CondEstimate", "Method", "choose_formulation",
    "estimate_bidiag", "estimate_lanczos_inv", "estimate_lsqr",
    "GenEigenpair", "PerturbationSpec", "perturb_pencil", "select_eigenpairs",
    "solve_pencil",
    "ArgumentError", "BoundViolationError", "ContractError", "GsvdLabError",
    "MatrixMarketError", "NumericalError",
    "ExperimentConfig", "run_accuracy", "run_bound_check", "run_table3",
    "AccuracyReport", "aggregate", "chordal", "sin_angle",
    "GsvdFactors", "gsvd_reference", "x_matrix_norms",
    "MatrixPair", "first_difference_matrix", "gen_random_pair",
    "load_matrix_market", "normalize", "save_matrix_market",
    "RecoveredComponent", "recover_all", "recover_all_from_pencil",
    "recover_from_hat", "recover_from_tilde", "sigma_to_alphabeta",
]
