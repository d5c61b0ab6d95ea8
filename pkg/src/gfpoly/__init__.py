# Finite field and polynomial arithmetic package
from .field import FieldSpec
from .poly import Poly, ZERO_DEGREE
from .parser import parse_poly, format_poly, format_hex, render_poly
from .irreducible import (
    Place,
    is_irreducible,
    count_irreducibles,
    enumerate_monic_irreducibles,
    monic_irreducibles,
    verify_place_count_bound,
)
