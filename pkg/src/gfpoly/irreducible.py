"""
Places of F_q(x): irreducibility, counting and enumeration
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from sympy import divisors, mobius, primefactors

from .field import FieldSpec
from .poly import Poly, gf2_gcd, gf2_mod, gf2_square
from ..exceptions import NotIrreducibleError

logger = logging.getLogger(__name__)

# x^2+x+1, the only irreducible quadratic over F_2
_GF2_QUADRATIC = 0b111


def _as_field(q) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else FieldSpec.from_order(q)


def _is_irreducible_gf2(f: int) -> bool:
    n = f.bit_length() - 1
    if n == 1:
        return True
    if not f & 1:
        return False
    # even number of terms: x+1 divides f
    if bin(f).count("1") % 2 == 0:
        return False
    if n > 2 and gf2_mod(f, _GF2_QUADRATIC) == 0:
        return False

    maximal = {n // r for r in primefactors(n)}
    h = 0b10
    for k in range(1, n + 1):
        h = gf2_mod(gf2_square(h), f)
        if k in maximal and gf2_gcd(f, h ^ 0b10) != 1:
            return False
    return h == 0b10


def is_irreducible(f: Poly) -> bool:
    """
    Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for
    every prime r dividing n = deg f

    Raises:
        ValueError: for zero or constant input
    """
    if f.degree < 1:
        raise ValueError(f"Irreducibility is undefined for constant polynomial {f}")
    field = f.field
    if field.is_binary:
        return _is_irreducible_gf2(f.bits)

    f = f.monic()
    n = f.degree
    if n == 1:
        return True
    if f.coefficient(0) == 0:
        return False
    if field.q <= 64 and any(f.eval(a) == 0 for a in range(field.q)):
        return False

    x = Poly.x(field)
    maximal = {n // r for r in primefactors(n)}
    h = x
    for k in range(1, n + 1):
        h = h.pow_mod(field.q, f)
        if k in maximal and not (h - x).gcd(f).is_one():
            return False
    return h == x % f


def count_irreducibles(q, t: int) -> int:
    """Number a_t of monic irreducibles of degree t (Moebius inversion)"""
    if t < 1:
        raise ValueError(f"Degree must be positive, got {t}")
    order = _as_field(q).q
    total = sum(mobius(d) * order ** (t // d) for d in divisors(t))
    return int(total) // t


def enumerate_monic_irreducibles(q, t: int, start: int = 0) -> Iterator[Poly]:
    """
    Yield the monic irreducibles of degree t in enumeration order

    The k-th monic polynomial of degree t is x^t plus the polynomial whose
    base-q encoding is k, so the order is numeric on the encoding of the
    coefficients from the constant term up. `start` skips the first
    `start` monic polynomials (not irreducibles), which makes streams
    restartable.
    """
    field = _as_field(q)
    if t < 1:
        raise ValueError(f"Degree must be positive, got {t}")
    order = field.q
    top = order ** t
    if field.is_binary:
        for k in range(start, top):
            bits = top | k
            if _is_irreducible_gf2(bits):
                yield Poly.from_bits(field, bits)
        return
    for k in range(start, top):
        f = Poly.from_int(field, top + k)
        if is_irreducible(f):
            yield f


@lru_cache(maxsize=64)
def monic_irreducibles(field: FieldSpec, t: int) -> Tuple[Poly, ...]:
    """Cached tuple of all monic irreducibles of degree t"""
    places = tuple(enumerate_monic_irreducibles(field, t))
    logger.debug(f"Enumerated {len(places)} monic irreducibles of degree {t} over {field}")
    return places


def verify_place_count_bound(q, n: int) -> bool:
    """Exact check of sum_{d<n} a_d <= q * q^n / n"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    field = _as_field(q)
    total = sum(count_irreducibles(field, d) for d in range(1, n))
    return n * total <= field.q * field.q ** n


@dataclass(frozen=True)
class Place:
    """A place of F_q(x): a monic irreducible polynomial, or infinity when poly is None"""

    field: FieldSpec
    poly: Optional[Poly] = None

    @classmethod
    def infinity(cls, field: FieldSpec) -> "Place":
        return cls(field, None)

    @classmethod
    def finite(cls, poly: Poly, check: bool = True) -> "Place":
        if check:
            if poly.degree < 1 or not poly.is_monic():
                raise NotIrreducibleError(f"Place polynomial {poly} must be monic of degree >= 1")
            if not is_irreducible(poly):
                raise NotIrreducibleError(f"Place polynomial {poly} is not irreducible")
        return cls(poly.field, poly)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        """Witness order: degree, infinity first, then enumeration order"""
        if self.poly is None:
            return (1, -1)
        return (self.poly.degree, self.poly.to_int())

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)
