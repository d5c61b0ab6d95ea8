"""
Split-place census over the extensions of a cyclic class group
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional

from sympy import factorint

from ..gfpoly import Place, monic_irreducibles
from ..unitgroup import Modulus
from ..exceptions import NotCyclicError
from .group import RayClassGroup, ray_class_group

logger = logging.getLogger(__name__)


@dataclass
class PrimePowerCensus:
    """Divisibility census in the extensions of prime-power degree t = s^a"""

    s: int
    t: int
    l: int
    c: int
    # j -> (extensions with s^j | f, lower bound l*(s^c - s^(j-1)))
    divisible: Dict[int, tuple] = field(default_factory=dict)
    # extensions where t/l does not divide f, and its bound t/s (only when c >= 1)
    not_full: Optional[int] = None
    not_full_bound: Optional[int] = None

    @property
    def holds(self) -> bool:
        ok = all(count >= bound for count, bound in self.divisible.values())
        if self.not_full is not None:
            ok = ok and self.not_full <= self.not_full_bound
        return ok


@dataclass
class PlaceCensus:
    place: str
    split_count: int
    split_bound: int
    prime_powers: List[PrimePowerCensus] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.split_count <= self.split_bound and all(p.holds for p in self.prime_powers)


@dataclass
class CensusRecord:
    modulus: str
    d: int
    place_degree: int
    places: List[PlaceCensus] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(p.holds for p in self.places)

    @property
    def max_split(self) -> int:
        return max((p.split_count for p in self.places), default=0)


def split_count_census(modulus, place_degree: int) -> CensusRecord:
    """
    For every place P of the given degree coprime to m, count the d = |H|
    extensions with B0 trivial in which P splits completely, and compare
    with the bound gcd(d, deg P). For every prime s | d, also census the
    extensions of degree t = s-part of d for the divisibility of f by s^j.

    Raises:
        NotCyclicError: when H is not cyclic
    """
    group = modulus if isinstance(modulus, RayClassGroup) else ray_class_group(modulus)
    if not group.is_cyclic():
        raise NotCyclicError(f"H = (F_q[x]/m)^*/F_q^* is not cyclic for m = {group.modulus}")
    group.check_enumerable()

    d = group.order
    relations = group.relations
    reps = list(relations.coset_representatives())
    record = CensusRecord(str(group.modulus), d, place_degree)

    prime_subgroups = {}
    for s, a in factorint(d).items():
        t = s ** a
        subgroups = list(relations.superlattices(t))
        if len(subgroups) != 1:
            raise NotCyclicError(f"Expected one subgroup of index {t}, found {len(subgroups)}")
        prime_subgroups[s] = (t, subgroups[0])

    for poly in monic_irreducibles(group.field, place_degree):
        if group.modulus.contains_place(poly):
            continue
        h = group.artin_class(Place.finite(poly, check=False)).h
        split = sum(
            1 for u in reps
            if relations.contains([a - place_degree * b for a, b in zip(h, u)])
        )
        place_census = PlaceCensus(str(poly), split, gcd(d, place_degree))

        for s, (t, subgroup) in prime_subgroups.items():
            l = gcd(place_degree, t)
            c = 0
            while l * s ** c < t:
                c += 1
            entry = PrimePowerCensus(s, t, l, c)
            if c >= 1:
                orders = [
                    subgroup.order_of([a - place_degree * b for a, b in zip(h, u)])
                    for u in subgroup.coset_representatives()
                ]
                for j in range(1, c + 1):
                    count = sum(1 for f in orders if f % s ** j == 0)
                    entry.divisible[j] = (count, l * (s ** c - s ** (j - 1)))
                entry.not_full = sum(1 for f in orders if f % (t // l))
                entry.not_full_bound = t // s
            place_census.prime_powers.append(entry)
        record.places.append(place_census)

    logger.debug(f"Census mod {group.modulus}, degree {place_degree}: max split {record.max_split}")
    return record
