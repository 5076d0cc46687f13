"""Computational McKay correspondence: exact character data, Cartan matrices,
eta-invariants, sphere Dirac spectra and numerical quiver varieties."""
from .core import (CartanBundle, KappaReport, McKayQuiver, adjacency, ade_classify, cartan,
                   classical_cartan, generalized_cartan, kappa_matrix, kappa_report,
                   pairing_matrix, quiver_dot)
from .errors import (ConvergenceError, InvariantViolation, McKayError, SemanticError,
                     SpecSyntaxError)
from .eta import EtaReport, chain_identity, eta, eta_table, orthogonality_sum
from .exact import (CyclotomicNumber, Rational, RationalMatrix, cyc_make, cyc_to_rational,
                    format_cyc, format_rational, mat_det, mat_inverse, parse_cyc,
                    parse_rational, zeta)
from .groups import (GroupData, GroupSpec, VirtualCharacter, build_cyclic, build_group,
                     decompose, exterior_power_char, free_weight_triples, inner_product,
                     is_free, load_table)
from .quiver import (FlowConfig, InvariantBasis, LieValue, QuiverPoint, build_invariant_basis,
                     kempf_ness_flow, moment_map, n_residual, orbit_point, quotient_dim)
from .spectrum import HighestWeight, SpectrumEntry, dirac_spectrum, spectrum_symmetry, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "CartanBundle", "KappaReport", "McKayQuiver", "adjacency", "ade_classify", "cartan",
    "classical_cartan", "generalized_cartan", "kappa_matrix", "kappa_report", "pairing_matrix",
    "quiver_dot",
    "ConvergenceError", "InvariantViolation", "McKayError", "SemanticError", "SpecSyntaxError",
    "EtaReport", "chain_identity", "eta", "eta_table", "orthogonality_sum",
    "CyclotomicNumber", "Rational", "RationalMatrix", "cyc_make", "cyc_to_rational",
    "format_cyc", "format_rational", "mat_det", "mat_inverse", "parse_cyc", "parse_rational",
    "zeta",
    "GroupData", "GroupSpec", "VirtualCharacter", "build_cyclic", "build_group", "decompose",
    "exterior_power_char", "free_weight_triples", "inner_product", "is_free", "load_table",
    "FlowConfig", "InvariantBasis", "LieValue", "QuiverPoint", "build_invariant_basis",
    "kempf_ness_flow", "moment_map", "n_residual", "orbit_point", "quotient_dim",
    "HighestWeight", "SpectrumEntry", "dirac_spectrum", "spectrum_symmetry", "weyl_dim",
]
