"""
Unit group (F_q[x]/m)^* assembled from its CRT factors
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from config import Config
from ..gfpoly import Poly
from ..exceptions import FactorizationError, NotCoprimeError
from .lattice import Lattice
from .local import LocalUnitGroup
from .modulus import Modulus
from .numbers import factor_integer, lcm_all, order_from_factorization


@dataclass(frozen=True)
class UnitElement:
    """A unit modulo m, stored as its canonical residue"""

    residue: Poly
    modulus: Poly

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ValueError(f"Units modulo different moduli: {self.modulus} and {other.modulus}")

    def __mul__(self, other: "UnitElement") -> "UnitElement":
        self._check(other)
        return UnitElement(self.residue.mul_mod(other.residue, self.modulus), self.modulus)

    def inverse(self) -> "UnitElement":
        if self.modulus.degree < 1:
            return self
        return UnitElement(self.residue.inverse_mod(self.modulus), self.modulus)

    def __pow__(self, k: int) -> "UnitElement":
        if self.modulus.degree < 1:
            return self
        return UnitElement(self.residue.pow_mod(k, self.modulus), self.modulus)

    def is_identity(self) -> bool:
        return self.residue == Poly.one(self.residue.field) % self.modulus

    def __str__(self):
        return str(self.residue)


class UnitGroupStructure:
    """
    Structure of (F_q[x]/m)^*

    Units are given coordinates in Z^R / diag(coordinate_orders), factor by
    factor, so discrete logs turn group questions into lattice questions.
    """

    def __init__(self, modulus: Modulus, local_groups: Optional[Sequence[LocalUnitGroup]] = None,
                 seed: Optional[int] = None):
        self.logger = logging.getLogger(__name__)
        self.modulus = modulus
        self.field = modulus.field
        self.seed = Config.SEED if seed is None else seed
        self.modulus_poly = modulus.poly

        if local_groups is None:
            local_groups = [LocalUnitGroup(p, e, self.seed) for p, e in modulus.factors]
        self.local_groups: Tuple[LocalUnitGroup, ...] = tuple(local_groups)

        offsets, orders = [], []
        for local in self.local_groups:
            offsets.append(len(orders))
            orders.extend(local.coordinate_orders)
        self.offsets = tuple(offsets)
        self.coordinate_orders = tuple(orders)
        self.rank = len(orders)
        self.exponent = lcm_all(orders)

        self.total_order = 1
        for local in self.local_groups:
            self.total_order *= local.order
        expected = 1
        q = self.field.q
        for p, e in modulus.factors:
            expected *= (q ** p.degree - 1) * q ** ((e - 1) * p.degree)
        if expected != self.total_order:
            raise ArithmeticError(f"Unit group order {self.total_order} != closed form {expected}")

        self.unfactored_cofactor = None
        try:
            self.order_factorization = factor_integer(self.total_order)
        except FactorizationError as e:
            self.order_factorization = None
            self.unfactored_cofactor = e.cofactor
            self.logger.warning(f"Group order {self.total_order} not fully factored; cofactor {e.cofactor}")

        self._crt = self._crt_coefficients()
        self.logger.debug(
            f"Unit group mod {modulus}: order {self.total_order}, coordinates {self.coordinate_orders}"
        )

    def _crt_coefficients(self) -> List[Poly]:
        m = self.modulus_poly
        coefficients = []
        for local in self.local_groups:
            if len(self.local_groups) == 1:
                coefficients.append(Poly.one(self.field) % m)
                continue
            cofactor = m // local.modulus
            coefficients.append((cofactor * cofactor.inverse_mod(local.modulus)) % m)
        return coefficients

    # ------------------------------------------------------------ elements

    @property
    def identity(self) -> UnitElement:
        return UnitElement(Poly.one(self.field) % self.modulus_poly, self.modulus_poly)

    def reduce(self, poly: Poly) -> UnitElement:
        """Residue class of a polynomial coprime to m"""
        residue = poly % self.modulus_poly
        if self.modulus_poly.degree > 0 and not residue.gcd(self.modulus_poly).is_one():
            raise NotCoprimeError(f"{poly} shares a factor with the modulus {self.modulus}")
        return UnitElement(residue, self.modulus_poly)

    def mul(self, a: UnitElement, b: UnitElement) -> UnitElement:
        return a * b

    def inv(self, a: UnitElement) -> UnitElement:
        return a.inverse()

    def pow(self, a: UnitElement, k: int) -> UnitElement:
        return a ** k

    def split(self, a: UnitElement) -> Tuple[Poly, ...]:
        """CRT components, one residue per local factor"""
        return tuple(a.residue % local.modulus for local in self.local_groups)

    def combine(self, components: Sequence[Poly]) -> UnitElement:
        m = self.modulus_poly
        total = Poly.zero(self.field)
        for component, coefficient in zip(components, self._crt):
            total = total + component * coefficient
        return UnitElement(total % m, m)

    def element_order(self, a: UnitElement) -> int:
        """Least k >= 1 with a^k = 1, from the factored group order"""
        if self.order_factorization is None:
            raise FactorizationError(
                f"Group order {self.total_order} is not fully factored", cofactor=self.unfactored_cofactor
            )
        return order_from_factorization(
            self.total_order, self.order_factorization, lambda k: a ** k, UnitElement.is_identity
        )

    # --------------------------------------------------------- coordinates

    def dlog(self, a: UnitElement) -> Tuple[int, ...]:
        coords = []
        for local, component in zip(self.local_groups, self.split(a)):
            coords.extend(local.dlog(component))
        return tuple(coords)

    def from_coordinates(self, coords: Sequence[int]) -> UnitElement:
        components = []
        for i, local in enumerate(self.local_groups):
            start = self.offsets[i]
            size = len(local.coordinate_orders)
            components.append(local.from_coordinates(coords[start:start + size]))
        return self.combine(components)

    def coordinate_lattice(self) -> Lattice:
        """Relations diag(coordinate_orders)"""
        return Lattice.diagonal(self.coordinate_orders)

    def kth_roots(self, s: UnitElement, k: int) -> FrozenSet[UnitElement]:
        """All u with u^k = s"""
        if k < 1:
            raise ValueError(f"Root index must be positive, got {k}")
        if self.order_factorization is None:
            raise FactorizationError(
                f"Group order {self.total_order} is not fully factored", cofactor=self.unfactored_cofactor
            )
        lattice = self.coordinate_lattice()
        return frozenset(
            self.from_coordinates(x) for x in lattice.solve_multiple(k, self.dlog(s))
        )

    def local_filtration(self, index: int, j: int) -> List[Tuple[int, ...]]:
        """Generators of U_index^(j) embedded in global coordinates"""
        local = self.local_groups[index]
        start = self.offsets[index]
        vectors = []
        for local_vector in local.filtration_generators(j):
            vector = [0] * self.rank
            vector[start:start + len(local_vector)] = local_vector
            vectors.append(tuple(vector))
        return vectors

    def elements(self) -> Iterator[UnitElement]:
        """Every unit once (small groups only)"""
        for coords in product(*(range(o) for o in self.coordinate_orders)):
            yield self.from_coordinates(coords)

    # ---------------------------------------------------------- restriction

    def factor_index(self, place: Poly) -> int:
        for i, local in enumerate(self.local_groups):
            if local.place == place:
                return i
        raise ValueError(f"Place {place} is not in the support of {self.modulus}")

    def restrict(self, place: Poly) -> "UnitGroupStructure":
        """Structure for the modulus with `place` deleted; local factors are reused"""
        index = self.factor_index(place)
        remaining = [g for i, g in enumerate(self.local_groups) if i != index]
        return UnitGroupStructure(self.modulus.without(place), remaining, self.seed)

    def project(self, coords: Sequence[int], place: Poly) -> Tuple[int, ...]:
        """Image of a coordinate vector under the restriction to m without `place`"""
        index = self.factor_index(place)
        start = self.offsets[index]
        size = len(self.local_groups[index].coordinate_orders)
        return tuple(coords[:start]) + tuple(coords[start + size:])


@lru_cache(maxsize=256)
def _build_cached(modulus: Modulus, seed: int) -> UnitGroupStructure:
    return UnitGroupStructure(modulus, seed=seed)


def build_unit_group(modulus: Modulus, seed: Optional[int] = None) -> UnitGroupStructure:
    """Build (and cache) the unit group structure of a modulus"""
    return _build_cached(modulus, Config.SEED if seed is None else seed)
