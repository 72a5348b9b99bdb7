"""Exact computations with conformal Galilei algebras, their enveloping
algebras and weight modules."""

from .algebra import HalfInteger, LieAlgebraSpec, LieElement, bracket, check_jacobi, make_algebra
from .fock import (
    check_realization,
    d_module,
    example1,
    f1_module,
    induce_f1,
    laurent,
    lift_realization,
    whittaker,
)
from .oracle import CharacterTable, simple_character_oracle, verma_character_oracle
from .report import CheckResult, Report
from .representations import (
    HighestWeightData,
    WeightModule,
    character,
    check_theorem2,
    check_theorem3,
    fock_module,
    is_simple_at_truncation,
    oscillator_lift,
    radical_dims,
    tensor,
    verma,
)
from .uea import check_engine, check_phi, check_theta, enveloping, phi_image, theta_image

__all__ = [
    "CharacterTable",
    "CheckResult",
    "HalfInteger",
    "HighestWeightData",
    "LieAlgebraSpec",
    "LieElement",
    "Report",
    "WeightModule",
    "bracket",
    "character",
    "check_engine",
    "check_jacobi",
    "check_phi",
    "check_realization",
    "check_theorem2",
    "check_theorem3",
    "check_theta",
    "d_module",
    "enveloping",
    "example1",
    "f1_module",
    "fock_module",
    "induce_f1",
    "is_simple_at_truncation",
    "laurent",
    "lift_realization",
    "make_algebra",
    "oscillator_lift",
    "phi_image",
    "radical_dims",
    "simple_character_oracle",
    "tensor",
    "theta_image",
    "verma",
    "verma_character_oracle",
    "whittaker",
]
