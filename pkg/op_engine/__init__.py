"""
Op engine: primitive graph operations and their compositions.
"""

from .ops import PrimitiveOp, apply_op, edge_delta, is_op_fixed, op_endpoints, parse_op, print_op
from .program import Composition, apply_composition, from_composition_order, parse_program, print_program

__all__ = [
    "PrimitiveOp",
    "apply_op",
    "edge_delta",
    "is_op_fixed",
    "op_endpoints",
    "parse_op",
    "print_op",
    "Composition",
    "apply_composition",
    "from_composition_order",
    "parse_program",
    "print_program",
]
