"""
Genus computations
==================

The genus of an extension comes from Hurwitz and the conductor-discriminant
formula: 2g - 2 = -2d + sum over characters chi of H/B0 of deg f(chi).

The conductor exponent of chi at P_i is the least j with chi trivial on the
image of U_i^(j). Counting through orthogonality, the characters trivial on
a subgroup W number [H/B0 : image of W] = index of (B0 + W), so

    sum_chi c_i(chi) = sum_{j=0}^{m_i-1} (d - index(B0 + W_ij))

and no character needs to be listed. `character_conductors` lists them
anyway for cross-checks.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from config import Config
from ..unitgroup import Modulus
from ..exceptions import GroupTooLargeError, PlaceInModulusError
from .extension import GeometricExtension
from .group import H_K, SplitPlaceSpec

logger = logging.getLogger(__name__)


def _different_degree(extension: GeometricExtension) -> int:
    group = extension.group
    units = group.units
    d = extension.degree
    total = 0
    for index, (place, mult) in enumerate(group.modulus.factors):
        local_sum = 0
        for j in range(mult):
            image = extension.subgroup.extend(units.local_filtration(index, j))
            local_sum += d - image.index
        total += place.degree * local_sum
    return total


def genus(extension: GeometricExtension) -> int:
    """Genus of a geometric extension (exact)"""
    d = extension.degree
    if d == 1:
        return 0
    twice = -2 * d + _different_degree(extension)
    if twice % 2:
        raise ArithmeticError(f"Odd value 2g-2+2 = {twice + 2} for extension of degree {d}")
    return twice // 2 + 1


def conductor_degree(extension: GeometricExtension) -> int:
    """Degree of the conductor: sum of n_i * c_i over places where the extension ramifies"""
    group = extension.group
    units = group.units
    total = 0
    for index, (place, mult) in enumerate(group.modulus.factors):
        exponent = 0
        for j in range(mult, -1, -1):
            if not extension.subgroup.extend(units.local_filtration(index, j)) == extension.subgroup:
                exponent = j + 1
                break
        total += place.degree * exponent
    return total


@dataclass(frozen=True)
class CharacterConductor:
    z: Tuple[int, ...]
    exponents: Tuple[int, ...]
    degree: int


def _dual_vector(rows, z) -> List[Fraction]:
    """y with B y = z for the upper-triangular basis B"""
    dim = len(rows)
    y = [Fraction(0)] * dim
    for i in range(dim - 1, -1, -1):
        acc = Fraction(z[i])
        for j in range(i + 1, dim):
            acc -= rows[i][j] * y[j]
        y[i] = acc / rows[i][i]
    return y


def _trivial_on(y: Sequence[Fraction], vectors) -> bool:
    return all(sum(a * b for a, b in zip(y, w)).denominator == 1 for w in vectors)


def character_conductors(extension: GeometricExtension) -> List[CharacterConductor]:
    """
    Every character of H/B0 with its conductor exponents

    Characters are y = B^-1 z for 0 <= z_i < B_ii, acting by
    w -> exp(2 pi i y.w).

    Raises:
        GroupTooLargeError: when d exceeds the character limit
    """
    d = extension.degree
    if d > Config.CHARACTER_LIMIT:
        raise GroupTooLargeError(f"{d} characters exceed the limit {Config.CHARACTER_LIMIT}")
    group = extension.group
    units = group.units
    rows = extension.subgroup.rows
    factors = group.modulus.factors
    filtrations = [
        [units.local_filtration(index, j) for j in range(mult + 1)]
        for index, (_, mult) in enumerate(factors)
    ]

    result = []
    for z in product(*(range(p) for p in extension.subgroup.pivots)):
        y = _dual_vector(rows, z)
        exponents = []
        for levels in filtrations:
            exponents.append(next(j for j, gens in enumerate(levels) if _trivial_on(y, gens)))
        degree = sum(p.degree * c for (p, _), c in zip(factors, exponents))
        result.append(CharacterConductor(tuple(z), tuple(exponents), degree))
    return result


def genus_from_characters(extension: GeometricExtension) -> int:
    d = extension.degree
    total = sum(c.degree for c in character_conductors(extension))
    return (-2 * d + total) // 2 + 1


def _check_split(modulus: Modulus, split: SplitPlaceSpec):
    place = split.place
    if not place.is_infinite and modulus.contains_place(place.poly):
        raise PlaceInModulusError(f"Split place {place} lies in the support of {modulus}")


def genus_full_rayclass(modulus: Modulus, split: SplitPlaceSpec) -> int:
    """
    Genus of the ray class field modulo m with S split (g_K = 0, h_K = 1)

        g = 1 + N/2 * (-2 + deg m - sum_i n_i (1 + (delta-1) q^-((m_i-1) n_i)) / (q^n_i - 1))

    with N = prod (q^n_i - 1) q^((m_i-1) n_i) / (q-1), delta = q-1 for a
    single-place modulus and 1 otherwise. The constant field extension
    does not change the genus, so deg S plays no role.
    """
    _check_split(modulus, split)
    if modulus.is_trivial:
        return 0
    q = modulus.field.q
    factors = modulus.factors
    n_total = Fraction(H_K)
    for p, e in factors:
        n_total *= (q ** p.degree - 1) * q ** ((e - 1) * p.degree)
    n_total /= q - 1
    delta = q - 1 if len(factors) == 1 else 1
    correction = sum(
        Fraction(p.degree) * (1 + Fraction(delta - 1, q ** ((e - 1) * p.degree))) / (q ** p.degree - 1)
        for p, e in factors
    )
    value = 1 + n_total / 2 * (-2 + modulus.degree - correction)
    if value.denominator != 1 or value < 0:
        raise ValueError(f"Closed-form genus {value} for {modulus} is not a non-negative integer")
    return int(value)


def genus_full_rayclass_literal(modulus: Modulus, split: SplitPlaceSpec) -> Fraction:
    """
    The printed closed form
        1 + h_K prod(q^n_i - 1) / (2(q-1)) * (-2 + deg m - sum n_i q^((m_i-1) n_i) / (q^n_i - 1))

    It agrees with `genus_full_rayclass` for square-free moduli over F_2
    only; kept for comparison.
    """
    _check_split(modulus, split)
    if modulus.is_trivial:
        return Fraction(0)
    q = modulus.field.q
    factor = Fraction(H_K)
    for p, _ in modulus.factors:
        factor *= q ** p.degree - 1
    factor /= 2 * (q - 1)
    correction = sum(
        Fraction(p.degree * q ** ((e - 1) * p.degree), q ** p.degree - 1) for p, e in modulus.factors
    )
    return 1 + factor * (-2 + modulus.degree - correction)


def compositum_genus_bound(place_degrees: Sequence[int], extension_degrees: Sequence[int]) -> Fraction:
    """Bound (1/2) * sum t_i * prod p_j on the genus of a compositum of ray class subfields"""
    total = 1
    for p in extension_degrees:
        total *= p
    return Fraction(sum(place_degrees) * total, 2)
