"""Multivariate gamma laws of affine type and their Laplace copulas."""

from ._core import (
    ArgumentError,
    ConvergenceError,
    Copula,
    DomainError,
    Error,
    ExistenceError,
    Model,
    ParseError,
    check,
    kendall_tau,
    logpdf,
    spearman_rho,
    validate,
)

__all__ = [
    "ArgumentError",
    "ConvergenceError",
    "Copula",
    "DomainError",
    "Error",
    "ExistenceError",
    "Model",
    "ParseError",
    "check",
    "kendall_tau",
    "logpdf",
    "spearman_rho",
    "validate",
]
