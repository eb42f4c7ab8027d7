"""kustab: exact numerical K-theory and tilt stability checks.

The package verifies, entirely in exact arithmetic, the lattice-level side
of stability arguments on low-dimensional Fano varieties: Euler pairings
via Riemann-Roch, right orthogonals of exceptional collections, numerical
Serre actions and point-object classification, tilt charges and heart
membership, induced-stability checklists, and wall-and-chamber analysis
with no-wall certificates.
"""

from .exact import (DomainError, QuadNumber, RatMatrix, kernel_basis,
                    lattice_primitive, quad_compare)
from .semiorth import (ClassReport, Collection, FullnessVerdict,
                       classify_class, fullness_report,
                       is_numerically_exceptional, right_orthogonal,
                       serre_on_residual, sod_project)
from .tilt import (AlphaInterval, BlmsReport, Charge, ExtSlope, HeartVerdict,
                   TiltParams, alpha_range, blms_check, charge_h, charge_tilt,
                   discriminant_h, heart_case, slope_h, slope_tilt,
                   zero_charge_class)
from .variety import (PRESETS, SPINOR_CLASS, ChernVector, VarietyDesc,
                      euler_pairing, exp_twist, get_preset, gram_matrix,
                      in_lattice, line_bundle_class, serre_class,
                      serre_inverse_class, serre_numeric)
from .walls import (BetaZero, NoWallCertificate, WallCircle, beta_zero,
                    nowall_certificate, wall_circle, wall_scan)

__version__ = "0.1.0"

__all__ = [
    "AlphaInterval", "BetaZero", "BlmsReport", "Charge", "ChernVector",
    "ClassReport", "Collection", "DomainError", "ExtSlope",
    "FullnessVerdict", "HeartVerdict", "NoWallCertificate", "PRESETS",
    "QuadNumber", "RatMatrix", "SPINOR_CLASS", "TiltParams", "VarietyDesc",
    "WallCircle", "alpha_range", "beta_zero", "blms_check", "charge_h",
    "charge_tilt", "classify_class", "discriminant_h", "euler_pairing",
    "exp_twist", "fullness_report", "get_preset", "gram_matrix",
    "heart_case", "in_lattice", "is_numerically_exceptional",
    "kernel_basis", "lattice_primitive", "line_bundle_class",
    "nowall_certificate", "quad_compare", "right_orthogonal", "serre_class",
    "serre_inverse_class", "serre_numeric", "serre_on_residual", "slope_h",
    "slope_tilt", "sod_project", "wall_circle", "wall_scan",
    "zero_charge_class",
]
