"""
Number-theoretic checks used by the existence argument

Features:
- Prime factors of (q^m - 1)/(q - 1) and their residues mod 2m
- Weil floor and growth ratios for a claimed genus
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from sympy import isprime

from config import Config
from ..gfpoly import FieldSpec
from ..unitgroup.numbers import ceil_div, factor_integer, integer_sqrt_ceil

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerLemmaReport:
    q: int
    m: int
    value: int
    factors: Dict[int, int]
    # primes dividing q - 1, exempt from the congruence
    exempt: List[int]
    congruence_ok: bool
    count_checked: bool
    count_ok: bool

    @property
    def holds(self) -> bool:
        return self.congruence_ok and self.count_ok

    @property
    def multipliers(self) -> Dict[int, int]:
        """a with s = 2am + 1 for every non-exempt prime s"""
        return {s: (s - 1) // (2 * self.m) for s in self.factors if s not in self.exempt}

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "value": str(self.value),
            "factors": {str(s): e for s, e in sorted(self.factors.items())},
            "exempt": self.exempt,
            "multipliers": {str(s): a for s, a in sorted(self.multipliers.items())},
            "congruence_ok": self.congruence_ok,
            "distinct_primes": len(self.factors),
            "count_checked": self.count_checked,
            "count_ok": self.count_ok,
            "holds": self.holds,
        }


def euler_lemma_check(q: FieldSpec, m: int, c_q: int = None) -> EulerLemmaReport:
    """
    Factor (q^m - 1)/(q - 1) and check its prime factors

    Every prime s not dividing q - 1 must satisfy s = 2am + 1; when m > c_q
    there are at most m distinct primes.

    Raises:
        ValueError: if m is not an odd prime
        FactorizationError: if the value cannot be factored
    """
    if m < 3 or not isprime(m):
        raise ValueError(f"m must be an odd prime, got {m}")
    c_q = Config.C_Q if c_q is None else c_q
    order = q.q
    value = (order ** m - 1) // (order - 1)
    factors = factor_integer(value)
    exempt = sorted(s for s in factors if (order - 1) % s == 0)
    congruence_ok = all(s % (2 * m) == 1 for s in factors if s not in exempt)
    count_checked = m > c_q
    count_ok = len(factors) <= m if count_checked else True

    report = EulerLemmaReport(order, m, value, factors, exempt, congruence_ok, count_checked, count_ok)
    if not report.holds:
        logger.warning(f"Prime factor check fails for q={order}, m={m}: {factors}")
    return report


@dataclass(frozen=True)
class BoundsReport:
    q: int
    n: int
    g: int
    weil_floor: int
    weil_floor_qn: int

    @property
    def weil_ok(self) -> bool:
        return self.g >= self.weil_floor

    @property
    def ratio_qn(self) -> Fraction:
        return Fraction(self.g, self.q ** self.n)

    @property
    def ratio_nqn(self) -> Fraction:
        return Fraction(self.g, self.n * self.q ** self.n)

    @property
    def desk_ok(self) -> bool:
        return self.g <= self.n * self.q ** self.n

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "g": self.g,
            "weil_floor": self.weil_floor,
            "weil_ok": self.weil_ok,
            "weil_floor_qn": self.weil_floor_qn,
            "ratio_qn": f"{float(self.ratio_qn):.6g}",
            "ratio_nqn": f"{float(self.ratio_nqn):.6g}",
            "desk_ok": self.desk_ok,
        }


def weil_floor(q: int, k: int) -> int:
    """Least integer g with 4 g^2 q^k >= (q^k - 1)^2, i.e. no points over F_{q^k}"""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    numerator = (q ** k - 1) ** 2
    if numerator == 0:
        return 0
    return integer_sqrt_ceil(ceil_div(numerator, 4 * q ** k))


def bounds(q: FieldSpec, n: int, g: int) -> BoundsReport:
    """
    Genus bounds for a curve without places of degree < n

    Such a curve has no points over F_{q^(n-1)}, so the Weil floor is taken
    at n - 1; the floor at n is reported alongside.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    return BoundsReport(q.q, n, g, weil_floor(q.q, n - 1), weil_floor(q.q, n))
