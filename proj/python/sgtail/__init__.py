"""Symmetrized gamma law, tail diagnostics and stable fits (C++ core)."""

from ._core import (
    DataError,
    DomainError,
    NonConvergence,
    bessel_k,
    chebyshev_bound,
    empirical_kurtosis,
    fit_stable_to_cf,
    gauss_bound,
    hill_estimate,
    hill_experiment,
    log_gamma,
    nu_pgf,
    random_sum_ks,
    sg_cdf,
    sg_cf,
    sg_kurtosis,
    sg_pdf,
    sg_sample,
    sg_survival,
    sg_two_sided_exceed,
    stable_cdf,
    sum_cf,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
