# Unit group package
from .numbers import factor_integer
from .lattice import Lattice
from .modulus import Modulus
from .local import LocalUnitGroup
from .structure import UnitElement, UnitGroupStructure, build_unit_group
