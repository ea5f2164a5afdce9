from chaincalc.fields.algebra import (
    add_fields,
    constant_field,
    differentiate,
    lift_field,
    multiply_fields,
    zero_field,
)
from chaincalc.fields.callback import CallbackField, ConstantField
from chaincalc.fields.finite_difference import FiniteDifferenceField, central_partial
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.symbolic import SymbolicField, coordinate_symbols
from chaincalc.fields.vector_field import VectorFieldSpec

__all__ = [
    "CallbackField",
    "ConstantField",
    "FiniteDifferenceField",
    "SmoothMap",
    "SymbolicField",
    "VectorFieldSpec",
    "add_fields",
    "central_partial",
    "constant_field",
    "coordinate_symbols",
    "differentiate",
    "lift_field",
    "multiply_fields",
    "zero_field",
]
