from chaincalc.represent.cubes import cube_chain, cube_family, point_limit_family
from chaincalc.represent.family import ChainFamily
from chaincalc.represent.fractals import (
    cantor_chain,
    cantor_endpoint_boundary,
    cantor_family,
    cantor_intervals,
    sierpinski_chain,
    sierpinski_family,
    sierpinski_triangles,
)
from chaincalc.represent.open_sets import open_set_chain, open_set_family
from chaincalc.represent.polyhedral import Box, Simplex, polyhedral_chain, polyhedral_family
from chaincalc.represent.vectorfields import (
    circle_chain,
    dipole_cell,
    slit_edge_chain,
    vectorfield_chain,
)

__all__ = [
    "Box",
    "ChainFamily",
    "Simplex",
    "cantor_chain",
    "cantor_endpoint_boundary",
    "cantor_family",
    "cantor_intervals",
    "circle_chain",
    "cube_chain",
    "cube_family",
    "dipole_cell",
    "open_set_chain",
    "open_set_family",
    "point_limit_family",
    "polyhedral_chain",
    "polyhedral_family",
    "sierpinski_chain",
    "sierpinski_family",
    "sierpinski_triangles",
    "slit_edge_chain",
    "vectorfield_chain",
]
