"""Dirac-Kepler spectra in a deformed-algebra space with position-dependent mass."""

from ._core import (  # noqa: F401
    Branch,
    ComplexRoots,
    Couplings,
    DeformationParams,
    DeformationRequired,
    MassParameterTooLarge,
    NonPositivePrincipal,
    PhysicalConstants,
    QuantumState,
    SelfConsistentResult,
    SpectrumRecord,
    SupercriticalCoupling,
    bound_state_condition,
    deformed_commutator_residual,
    derive_couplings,
    eckart_level,
    effective_orbital,
    energy_exact,
    energy_nonrelativistic,
    energy_nu_zero,
    energy_qt,
    energy_radical,
    export_wavefunction,
    fd_levels,
    lambda_eigenvalue,
    lambda_matrix_eigenvalues,
    make_state,
    map_r_to_x,
    map_x_to_r,
    principal_quantum_number,
    qt_reconciliation,
    quadratic_residual,
    relativistic_correction,
    self_consistent_energy,
    verify_suite,
)

__version__ = "0.1.0"
