"""
Lifting a 3-cube boundary
=========================

The Toda bracket fixture puts nullhomotopies of ``g∘f`` and ``h∘g`` on two
facets of the 3-cube boundary. Whether the boundary extends to the whole cube
is decided by one class in ``H^1``.
"""

from aqcube.obstruction import (HEXAGON_FACETS, default_orientation, lifting_obstruction,
                                parse_facet_id, toda_fixture, total_class)

signs = default_orientation(3)
for ident in HEXAGON_FACETS:
    print(ident, "%+d" % signs[parse_facet_id(3, ident)])

##############################################################################
# Nothing on either face: the boundary lifts.

fx = toda_fixture()
r = lifting_obstruction(3, fx.system, fx.classes)
print(fx.description, "->", r.verdict)

##############################################################################
# A single generator on the g∘f face is obstructed; the class coordinate
# is the signed sum of the facet classes.

fx = toda_fixture(gf=1)
r = lifting_obstruction(3, fx.system, fx.classes)
print(r.verdict, r.class_coordinates, total_class(fx.classes, fx.transports))

##############################################################################
# Choosing the h∘g nullhomotopy to cancel it makes the bracket contain zero.

hg = -signs[parse_facet_id(3, "x2=0")] * signs[parse_facet_id(3, "x1=1")]
fx = toda_fixture(gf=1, hg=hg)
r = lifting_obstruction(3, fx.system, fx.classes)
print(r.verdict, "certificate:", r.certificate)
