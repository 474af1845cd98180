"""Exact verification of Hom-Lie algebroids, bialgebroids and Hom-Courant algebroids."""

from ._core import (
    AxiomResult,
    Error,
    IncompatibleTarget,
    Poly,
    Report,
    Structure,
    StructureError,
    catalog,
    catalog_names,
    derive,
    derive_targets,
    parse,
    run_cli,
    verify,
)

__all__ = [
    "AxiomResult",
    "Error",
    "IncompatibleTarget",
    "Poly",
    "Report",
    "Structure",
    "StructureError",
    "catalog",
    "catalog_names",
    "derive",
    "derive_targets",
    "parse",
    "run_cli",
    "verify",
]
