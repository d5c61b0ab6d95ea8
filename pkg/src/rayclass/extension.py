"""
Geometric abelian extensions of F_q(x) with conductor dividing m
================================================================

An extension is a pair (B0, u): B0 a subgroup of H (stored as a lattice
containing the relations of H) and u an element of H/B0. It corresponds to
the subgroup of H x Z generated by B0 x {0} and (u, 1), which maps onto Z,
so the constant field stays F_q. The degree is [H : B0].

The Frobenius of a place P coprime to m is h(P) - deg(P)*u in H/B0 and
its order is the inertia degree f(P).
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..gfpoly import Place, Poly
from ..unitgroup import Lattice, Modulus
from ..exceptions import ModulusError, PlaceInModulusError
from .group import RayClassGroup, ray_class_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GeometricExtension:
    group: RayClassGroup
    subgroup: Lattice
    u: Tuple[int, ...]

    @classmethod
    def create(cls, group: RayClassGroup, subgroup: Lattice, u) -> "GeometricExtension":
        if not group.relations.is_sublattice_of(subgroup):
            raise ValueError("B0 lattice must contain the relations of H")
        return cls(group, subgroup, subgroup.reduce(u))

    @property
    def modulus(self) -> Modulus:
        return self.group.modulus

    @property
    def degree(self) -> int:
        return self.subgroup.index

    def b0_generators(self) -> List[Poly]:
        """Normalized residues generating B0 (relations of H omitted)"""
        return [
            self.group.element(row)
            for row in self.subgroup.rows
            if not self.group.relations.contains(row)
        ]

    def u_residue(self) -> Poly:
        return self.group.element(self.u)

    def frobenius(self, h: Tuple[int, ...], deg: int) -> Tuple[int, ...]:
        return self.subgroup.reduce([a - deg * b for a, b in zip(h, self.u)])

    def frobenius_order(self, h: Tuple[int, ...], deg: int) -> int:
        return self.subgroup.order_of([a - deg * b for a, b in zip(h, self.u)])

    def constant_field_degree(self) -> int:
        """Always 1: the subgroup maps onto Z"""
        return 1

    def __hash__(self):
        return hash((self.group.modulus, self.subgroup, self.u))

    def __eq__(self, other):
        if not isinstance(other, GeometricExtension):
            return NotImplemented
        return (self.group.modulus, self.subgroup, self.u) == (other.group.modulus, other.subgroup, other.u)


def restrict_modulus(extension: GeometricExtension, place: Place) -> GeometricExtension:
    """
    Push the extension forward to the modulus with `place` deleted

    B0' is the image of B0 (which contains the kernel of H -> H'), u' the
    image of u.

    Raises:
        PlaceInModulusError: when the place is not in the support of m
    """
    poly = place.poly if isinstance(place, Place) else place
    if poly is None or not extension.modulus.contains_place(poly):
        raise PlaceInModulusError(f"Place {place} is not in the support of {extension.modulus}")
    group = extension.group
    restricted = group.restrict(poly)
    units = group.units
    projected = [units.project(row, poly) for row in extension.subgroup.rows]
    subgroup = Lattice(restricted.rank, restricted.units.exponent, projected + list(restricted.relations.rows))
    u = units.project(extension.u, poly)
    return GeometricExtension(restricted, subgroup, subgroup.reduce(u))


def inertia_degree(extension: GeometricExtension, place: Place) -> int:
    """
    Inertia degree f of a place: every place above it has degree f * deg(place)

    Ramified places are handled in the extension restricted to the modulus
    with that place deleted.
    """
    if place.is_infinite:
        return extension.subgroup.order_of([-x for x in extension.u])
    if extension.modulus.contains_place(place.poly):
        return inertia_degree(restrict_modulus(extension, place), place)
    cls = extension.group.artin_class(place)
    return extension.frobenius_order(cls.h, cls.deg)


def enumerate_extensions(modulus, d: int) -> Iterator[GeometricExtension]:
    """
    Every extension of degree d with conductor dividing m and constant field F_q

    Args:
        modulus: Modulus or RayClassGroup
        d: degree, a divisor of |H|

    Raises:
        ValueError: when d does not divide |H|
        GroupTooLargeError: when H exceeds the enumeration bounds
    """
    group = modulus if isinstance(modulus, RayClassGroup) else ray_class_group(modulus)
    if d < 1 or group.order % d:
        raise ValueError(f"Degree {d} does not divide |H| = {group.order}")
    group.check_enumerable()

    def generate():
        for subgroup in group.relations.superlattices(d):
            for u in subgroup.coset_representatives():
                yield GeometricExtension(group, subgroup, tuple(u))

    return generate()


def compositum_constant_degree(first: GeometricExtension, second: GeometricExtension) -> int:
    """
    Degree of the constant field of the compositum of two extensions sharing
    B0: the order of u1 - u2 in H/B0
    """
    if first.subgroup != second.subgroup or first.modulus != second.modulus:
        raise ModulusError("Extensions must share the modulus and the subgroup B0")
    return first.subgroup.order_of([a - b for a, b in zip(first.u, second.u)])
