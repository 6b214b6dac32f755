"""
Cohomology of a square boundary
===============================

Four vertices and four edges, constant integer coefficients. The limit
complex has one summand per cell and recovers the cohomology of a circle.
"""

from aqcube import boundary_cube, build_limit_complex, cell_system, cohomology
from aqcube.abgrp import FGAbelianGroup

K = boundary_cube(2)
print(K, "cells by dimension:", K.cell_counts())

# put Z on every cell, coefficients sitting in degree 2
C = build_limit_complex(K, cell_system(K), 2)
for k, H in cohomology(C).items():
    print(f"H^{k} =", H)

# the coboundary from vertices to edges is the 4-cycle incidence matrix
print(C.differential(-2).matrix.tolist())

# torsion coefficients pass straight through
C4 = build_limit_complex(K, cell_system(K, FGAbelianGroup.cyclic(4)), 0)
print({k: str(H) for k, H in cohomology(C4).items()})
