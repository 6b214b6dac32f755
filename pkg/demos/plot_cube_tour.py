"""
Mapping spaces of the resolved cube
===================================

Between vertices ``J <= J'`` of ``[1]^n`` the mapping space is a
permutohedron of rank ``|J'| - |J| - 1``.
"""

from math import factorial

from aqcube.cli import main
from aqcube.cube_cat import Permutohedron, mapping_space_shape

for n in range(1, 6):
    P = mapping_space_shape(n, (0,) * n, (1,) * n)
    print(n, P.shape_name(), P.f_vector(), factorial(P.rank + 1))

# the hexagon, vertex by vertex
H = Permutohedron(2)
for u, v in H.edges():
    print(u, "--", v)

# the same numbers from the command line
main(["cube-info", "3"])
