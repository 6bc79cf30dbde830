"""Worked stratification models: O_q(k^2), O_q(GL_2), O_q(M_2) and the quantum SL_3 prime poset."""
from .models import (
    ExampleModel,
    MaxIdealData,
    TorusData,
    ZData,
    catalog_names,
    example,
    hprime_height,
)
from .sl3 import (
    LISTED_IDENTITIES,
    MinorLabel,
    SymmetryIdentity,
    minor_symmetry,
    symmetry_instance_check,
)

__all__ = [
    "ExampleModel", "LISTED_IDENTITIES", "MaxIdealData", "MinorLabel", "SymmetryIdentity",
    "TorusData", "ZData", "catalog_names", "example", "hprime_height", "minor_symmetry",
    "symmetry_instance_check",
]
