"""
Ray class group of F_q(x) modulo m
==================================

Model: G = H x Z with H = (F_q[x]/m)^* / F_q^* (divisor class number 1).
A finite place P coprime to m has class (P mod m, deg P); infinity has
class (1, 1).

H is presented as Z^R modulo the relation lattice generated by the unit
group relations diag(e) and the coordinates of a generator of F_q^*.
Elements of H are canonical coordinate tuples modulo that lattice.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from config import Config
from ..gfpoly import Place, Poly, monic_irreducibles
from ..unitgroup import Lattice, Modulus, UnitElement, UnitGroupStructure, build_unit_group
from ..exceptions import GroupTooLargeError, PlaceInModulusError

# Divisor class number of the base field F_q(x)
H_K = 1


@dataclass(frozen=True)
class ArtinClass:
    """Class of a divisor in G = H x Z"""

    h: Tuple[int, ...]
    deg: int


@dataclass(frozen=True)
class SplitPlaceSpec:
    place: Place

    @property
    def deg_s(self) -> int:
        return self.place.degree


class RayClassGroup:
    """Finite presentation of the ray class group modulo m"""

    def __init__(self, modulus: Modulus, units: Optional[UnitGroupStructure] = None):
        self.logger = logging.getLogger(__name__)
        self.modulus = modulus
        self.field = modulus.field
        self.units = units if units is not None else build_unit_group(modulus)
        self._restrictions = {}
        self._place_classes = {}

        constants = self._constant_generator_coordinates()
        self.constant_coordinates = constants
        self.relations = Lattice(
            self.units.rank,
            self.units.exponent,
            self.units.coordinate_lattice().rows + ((constants,) if any(constants) else ()),
        )
        self.order = self.relations.index

        q = self.field.q
        expected = self.units.total_order // (q - 1) if not modulus.is_trivial else 1
        if self.order != expected:
            raise ArithmeticError(f"|H| = {self.order} but the closed form gives {expected}")
        self.logger.debug(f"Ray class group mod {modulus}: |H| = {self.order}")

    def _constant_generator_coordinates(self) -> Tuple[int, ...]:
        if self.modulus.is_trivial or self.field.q == 2:
            return (0,) * self.units.rank
        gamma = Poly.constant(self.field, self.field.primitive_element)
        return self.units.dlog(self.units.reduce(gamma))

    @property
    def rank(self) -> int:
        return self.units.rank

    @property
    def identity(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def check_enumerable(self):
        if self.order > Config.SUBGROUP_ORDER_LIMIT:
            raise GroupTooLargeError(
                f"|H| = {self.order} exceeds the subgroup enumeration bound {Config.SUBGROUP_ORDER_LIMIT}"
            )
        if self.rank > Config.MAX_COORDINATES:
            raise GroupTooLargeError(
                f"H has {self.rank} cyclic coordinates, more than the bound {Config.MAX_COORDINATES}"
            )

    # ------------------------------------------------------------ classes

    def normalize(self, residue: Poly) -> Poly:
        """Representative of residue * F_q^* whose leading coefficient is 1"""
        return (residue.monic()) % self.units.modulus_poly if self.units.modulus_poly.degree > 0 else residue

    def class_of(self, poly: Poly) -> Tuple[int, ...]:
        """Coordinates in H of a polynomial coprime to m"""
        if self.modulus.is_trivial:
            return ()
        return self.relations.reduce(self.units.dlog(self.units.reduce(poly)))

    def class_of_unit(self, unit: UnitElement) -> Tuple[int, ...]:
        return self.relations.reduce(self.units.dlog(unit))

    def element(self, coords: Sequence[int]) -> Poly:
        """Normalized residue representing a coordinate tuple of H"""
        if self.modulus.is_trivial:
            return Poly.one(self.field)
        return self.normalize(self.units.from_coordinates(coords).residue)

    def artin_class(self, place: Place) -> ArtinClass:
        """
        Class of a place in H x Z

        Raises:
            PlaceInModulusError: when the place divides m
        """
        if place.is_infinite:
            return ArtinClass(self.identity, 1)
        if self.modulus.contains_place(place.poly):
            raise PlaceInModulusError(
                f"Place {place} lies in the support of {self.modulus}; restrict the modulus first"
            )
        return ArtinClass(self.class_of(place.poly), place.degree)

    def place_classes(self, degree: int):
        """
        (place polynomial, class in H) for every monic irreducible of a degree,
        in enumeration order; places dividing m carry None
        """
        if degree not in self._place_classes:
            entries = []
            for poly in monic_irreducibles(self.field, degree):
                if self.modulus.contains_place(poly):
                    entries.append((poly, None))
                else:
                    entries.append((poly, self.class_of(poly)))
            self._place_classes[degree] = entries
        return self._place_classes[degree]

    def is_cyclic(self) -> bool:
        return self.relations.is_cyclic_quotient()

    def reduce(self, coords: Sequence[int]) -> Tuple[int, ...]:
        return self.relations.reduce(coords)

    def restrict(self, place: Poly) -> "RayClassGroup":
        """Group for the modulus with `place` deleted (memoized)"""
        if place not in self._restrictions:
            self._restrictions[place] = RayClassGroup(self.modulus.without(place), self.units.restrict(place))
        return self._restrictions[place]


@lru_cache(maxsize=128)
def _ray_class_group_cached(modulus: Modulus, seed: int) -> RayClassGroup:
    return RayClassGroup(modulus, build_unit_group(modulus, seed))


def ray_class_group(modulus: Modulus, seed: Optional[int] = None) -> RayClassGroup:
    """Cached group for a modulus; generators are sampled with `seed` (default Config.SEED)"""
    return _ray_class_group_cached(modulus, Config.SEED if seed is None else seed)


def full_rayclass_degree(modulus: Modulus, split: SplitPlaceSpec) -> int:
    """
    Degree of the ray class field modulo m with S split:
    deg S * h_K * prod (q^n_i - 1) q^((m_i - 1) n_i) / (q - 1)
    """
    place = split.place
    if not place.is_infinite and modulus.contains_place(place.poly):
        raise PlaceInModulusError(f"Split place {place} lies in the support of {modulus}")
    if modulus.is_trivial:
        return split.deg_s * H_K
    q = modulus.field.q
    product = 1
    for p, e in modulus.factors:
        product *= (q ** p.degree - 1) * q ** ((e - 1) * p.degree)
    return split.deg_s * H_K * product // (q - 1)
