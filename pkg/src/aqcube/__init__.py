"""Exact Andre-Quillen interval cochain complexes for graded posets and
finite cubical complexes, with the boundary-of-a-cube lifting obstruction."""

from .abgrp import (CochainComplex, FGAbelianGroup, GroupHom, IntMatrix, cohomology,
                    cohomology_at, format_group, smith_decomposition, snf, write_in_image)
from .aq_complex import ComplexError, build_cube_cphi, build_dphi
from .cube_cat import Permutohedron, cube_poset, mapping_space_shape
from .cubical_complex import (Cell, CubicalComplex, boundary_cube, build_limit_complex,
                              cell_system, equalizer_oracle, full_cube, validate_complex)
from .local_system import CoefficientSystem, InvalidSystemError, constant_system, restrict, validate
from .obstruction import (FacetClasses, ObstructionResult, TransportData, assemble_cocycle,
                          decide_vanishing, default_orientation, facets, obstruction_complex,
                          total_class)
from .posets import (FinitePoset, GradedPoset, Interval, NotGradedError, chain_poset, check_graded,
                     product_poset, twisted_arrow_poset)

__version__ = "0.1.0"

__all__ = [
    "Cell", "CochainComplex", "CoefficientSystem", "ComplexError", "CubicalComplex",
    "FGAbelianGroup", "FacetClasses", "FinitePoset", "GradedPoset", "GroupHom", "IntMatrix",
    "Interval", "InvalidSystemError", "NotGradedError", "ObstructionResult", "Permutohedron",
    "TransportData", "assemble_cocycle", "boundary_cube", "build_cube_cphi", "build_dphi",
    "build_limit_complex", "cell_system", "chain_poset", "check_graded", "cohomology",
    "cohomology_at", "constant_system", "cube_poset", "decide_vanishing", "default_orientation",
    "equalizer_oracle", "facets", "format_group", "full_cube", "mapping_space_shape",
    "obstruction_complex", "product_poset", "restrict", "smith_decomposition", "snf",
    "total_class", "twisted_arrow_poset", "validate", "validate_complex", "write_in_image",
]
