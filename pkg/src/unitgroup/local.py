"""
Local unit groups (F_q[x]/P^e)^*
================================

The group splits as a cyclic Teichmueller part of order q^n - 1 (n = deg P)
times the one-unit group U^(1) = {u = 1 mod P} of order q^((e-1)n).

Coordinates of a unit are (Teichmueller exponent, one-unit basis exponents);
the Teichmueller coordinate is dropped when q^n - 1 = 1.

Features:
- Seeded generator search with an exact order check
- Discrete logs: full table up to DLOG_TABLE_LIMIT, else Pohlig-Hellman
  with baby-step/giant-step
- Cyclic basis of the one-unit group found exhaustively (bounded by
  ONE_UNIT_LIMIT) and the filtration U^(j) = {u = 1 mod P^j}
"""

import logging
import random
from math import gcd, isqrt
from typing import Dict, List, Tuple

from sympy.ntheory.modular import crt

from config import Config
from ..gfpoly import Poly
from ..exceptions import GroupTooLargeError
from .numbers import factor_integer, xgcd


class LocalUnitGroup:
    """Unit group of F_q[x]/P^e for one modulus factor"""

    def __init__(self, place: Poly, multiplicity: int, seed: int = None):
        self.logger = logging.getLogger(__name__)
        self.place = place
        self.multiplicity = multiplicity
        self.field = place.field
        self.seed = Config.SEED if seed is None else seed

        q = self.field.q
        self.n = place.degree
        self.modulus = place ** multiplicity
        self.residue_order = q ** self.n - 1
        self.one_unit_order = q ** ((multiplicity - 1) * self.n)
        self.order = self.residue_order * self.one_unit_order

        self._log_table = None
        self.generator = self._find_generator()
        self.teichmuller = self._lift_generator()

        self._span = {}
        self.one_unit_basis: List[Tuple[Poly, int]] = []
        if multiplicity > 1:
            self._build_one_unit_basis()

        self.has_teichmuller = self.residue_order > 1
        orders = [self.residue_order] if self.has_teichmuller else []
        orders += [o for _, o in self.one_unit_basis]
        self.coordinate_orders = tuple(orders)
        self._filtration = {}

    # ------------------------------------------------------- residue field

    def _find_generator(self) -> Poly:
        """Primitive element of F_q[x]/P by seeded sampling"""
        field = self.field
        o = self.residue_order
        if o == 1:
            return Poly.one(field)
        primes = list(factor_integer(o))
        rng = random.Random(f"{self.seed}:{field.q}:{self.place.to_int()}")
        attempts = 0
        while True:
            attempts += 1
            candidate = Poly.from_int(field, rng.randrange(1, field.q ** self.n))
            if all(not candidate.pow_mod(o // r, self.place).is_one() for r in primes):
                self.logger.debug(
                    f"Generator {candidate} mod {self.place} found after {attempts} sample(s)"
                )
                return candidate

    def _lift_generator(self) -> Poly:
        if self.multiplicity == 1:
            return self.generator % self.modulus
        o = self.residue_order
        big_q = self.one_unit_order
        exponent = big_q * pow(big_q % o, -1, o) if o > 1 else big_q
        return self.generator.pow_mod(exponent, self.modulus)

    def residue_log(self, a: Poly) -> int:
        """Exponent k with generator^k = a mod P"""
        o = self.residue_order
        if o == 1:
            return 0
        a = a % self.place
        if a.is_zero():
            raise ValueError(f"Zero residue has no logarithm mod {self.place}")
        if o <= Config.DLOG_TABLE_LIMIT:
            return self._table()[a.to_int()]
        return self._pohlig_hellman(a)

    def _table(self) -> Dict[int, int]:
        if self._log_table is None:
            table = {}
            current = Poly.one(self.field)
            for k in range(self.residue_order):
                table[current.to_int()] = k
                current = current.mul_mod(self.generator, self.place)
            self._log_table = table
            self.logger.debug(f"Built log table of size {len(table)} mod {self.place}")
        return self._log_table

    def _pohlig_hellman(self, a: Poly) -> int:
        o = self.residue_order
        residues, moduli = [], []
        for r, e in factor_integer(o).items():
            pe = r ** e
            g_r = self.generator.pow_mod(o // pe, self.place)
            h_r = a.pow_mod(o // pe, self.place)
            gamma = g_r.pow_mod(pe // r, self.place)
            x = 0
            for i in range(e):
                shifted = h_r.mul_mod(g_r.pow_mod(pe - x, self.place), self.place) if x else h_r
                h_i = shifted.pow_mod(r ** (e - 1 - i), self.place)
                x += self._bsgs(gamma, h_i, r) * r ** i
            residues.append(x)
            moduli.append(pe)
        value, _ = crt(moduli, residues)
        return int(value) % o

    def _bsgs(self, gamma: Poly, target: Poly, order: int) -> int:
        step = isqrt(order - 1) + 1
        baby = {}
        current = Poly.one(self.field)
        for j in range(step):
            baby.setdefault(current.to_int(), j)
            current = current.mul_mod(gamma, self.place)
        giant = gamma.pow_mod(order - step % order, self.place)
        current = target % self.place
        for i in range(step + 1):
            j = baby.get(current.to_int())
            if j is not None:
                return (i * step + j) % order
            current = current.mul_mod(giant, self.place)
        raise ValueError(f"Element {target} is not in the subgroup generated by {gamma}")

    # ---------------------------------------------------------- one units

    def _one_units(self) -> List[Poly]:
        if self.one_unit_order > Config.ONE_UNIT_LIMIT:
            raise GroupTooLargeError(
                f"One-unit group mod ({self.place})^{self.multiplicity} has order "
                f"{self.one_unit_order} > {Config.ONE_UNIT_LIMIT}"
            )
        one = Poly.one(self.field)
        return [one + self.place * Poly.from_int(self.field, k) for k in range(self.one_unit_order)]

    def _power_list(self, base: Poly, count: int) -> List[Poly]:
        powers = [Poly.one(self.field)]
        for _ in range(count - 1):
            powers.append(powers[-1].mul_mod(base, self.modulus))
        return powers

    def _build_one_unit_basis(self):
        """Greedy cyclic decomposition of the p-group U^(1)"""
        p = self.field.p
        mod = self.modulus
        elements = self._one_units()
        one = Poly.one(self.field)
        span = {one.to_int(): ((), one)}

        while len(span) < self.one_unit_order:
            best, best_order, best_image = None, 0, None
            for u in elements:
                if u.to_int() in span:
                    continue
                w, order = u, 1
                while w.to_int() not in span:
                    w = w.pow_mod(p, mod)
                    order *= p
                if order > best_order:
                    best, best_order, best_image = u, order, w
            lifted = self._lift(best, best_order, span[best_image.to_int()][0], span)

            powers = self._power_list(lifted, best_order)
            extended = {}
            for coords, element in span.values():
                for j, power in enumerate(powers):
                    value = element.mul_mod(power, mod)
                    extended[value.to_int()] = (coords + (j,), value)
            span = extended
            self.one_unit_basis.append((lifted, best_order))

        self._span = {key: coords for key, (coords, _) in span.items()}
        self.logger.debug(
            f"One-unit basis mod ({self.place})^{self.multiplicity}: "
            f"orders {[o for _, o in self.one_unit_basis]}"
        )

    def _lift(self, u: Poly, order: int, image_coords, span) -> Poly:
        """Adjust u inside its coset of the span so that u^order = 1"""
        mod = self.modulus
        correction = []
        for c, (_, basis_order) in zip(image_coords, self.one_unit_basis):
            g = gcd(order, basis_order)
            if c % g:
                correction = None
                break
            step = basis_order // g
            if step == 1:
                correction.append(0)
                continue
            _, inv, _ = xgcd((order // g) % step, step)
            correction.append(((c // g) * inv) % step)
        if correction is not None:
            candidate = u.mul_mod(self._combine_basis(correction).inverse_mod(mod), mod)
            if candidate.pow_mod(order, mod).is_one():
                return candidate
        for _, element in span.values():
            candidate = u.mul_mod(element, mod)
            if candidate.pow_mod(order, mod).is_one():
                return candidate
        raise ArithmeticError(f"No element of order {order} in the coset of {u}")

    def _combine_basis(self, coords) -> Poly:
        result = Poly.one(self.field)
        for c, (b, _) in zip(coords, self.one_unit_basis):
            if c:
                result = result.mul_mod(b.pow_mod(c, self.modulus), self.modulus)
        return result

    # -------------------------------------------------------- coordinates

    def dlog(self, a: Poly) -> Tuple[int, ...]:
        """Coordinates of a unit modulo P^e"""
        a = a % self.modulus
        coords = []
        if self.has_teichmuller:
            k = self.residue_log(a)
            coords.append(k)
            if self.multiplicity > 1 and k:
                a = a.mul_mod(self.teichmuller.pow_mod(self.residue_order - k, self.modulus), self.modulus)
        if self.multiplicity > 1:
            coords.extend(self._span[(a % self.modulus).to_int()])
        return tuple(coords)

    def from_coordinates(self, coords) -> Poly:
        mod = self.modulus
        coords = list(coords)
        result = Poly.one(self.field) % mod
        if self.has_teichmuller:
            k = coords.pop(0)
            result = self.teichmuller.pow_mod(k % self.residue_order, mod)
        return result.mul_mod(self._combine_basis(coords), mod) if coords else result

    def filtration_generators(self, j: int) -> List[Tuple[int, ...]]:
        """Coordinate vectors generating U^(j); U^(0) is the whole group"""
        if j in self._filtration:
            return self._filtration[j]
        rank = len(self.coordinate_orders)
        if j <= 0:
            gens = [tuple(1 if i == k else 0 for i in range(rank)) for k in range(rank)]
        elif j >= self.multiplicity:
            gens = []
        else:
            field = self.field
            one = Poly.one(field)
            scalars = [field.p ** i for i in range(field.c)]
            gens = []
            for level in range(j, self.multiplicity):
                step = self.place ** level
                for k in range(self.n):
                    for beta in scalars:
                        unit = one + step * Poly.monomial(field, k, beta)
                        gens.append(self.dlog(unit))
        self._filtration[j] = gens
        return gens

    def filtration_order(self, j: int) -> int:
        if j <= 0:
            return self.order
        if j >= self.multiplicity:
            return 1
        return self.field.q ** ((self.multiplicity - j) * self.n)
