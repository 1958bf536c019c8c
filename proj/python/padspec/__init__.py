"""Exact radii of convergence and Berkovich spectra of p-adic differential operators."""

from ._core import delta, omega_exponent, rank_one_radius, run_job

__all__ = ["run_job", "omega_exponent", "delta", "rank_one_radius"]
