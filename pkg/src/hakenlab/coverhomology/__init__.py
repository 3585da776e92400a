"""Homology of cyclic branched covers of links and its deck-group structure."""

from .alexander import SeifertMatrix, alexander_poly, fox_order
from .cover import (
    GaloisModule,
    RedeiReport,
    StructureReport,
    cover_module,
    cp_cohomology_dims,
    cyclic_cover_homology,
    double_cover_homology,
    redei_check,
    structure_check,
)
from .records import LinkRecord, record_from_json
from .smith import AbelianGroupInv, smith, smith_normal_form

__all__ = [
    "SeifertMatrix",
    "alexander_poly",
    "fox_order",
    "GaloisModule",
    "RedeiReport",
    "StructureReport",
    "cover_module",
    "cp_cohomology_dims",
    "cyclic_cover_homology",
    "double_cover_homology",
    "redei_check",
    "structure_check",
    "LinkRecord",
    "record_from_json",
    "AbelianGroupInv",
    "smith",
    "smith_normal_form",
]
