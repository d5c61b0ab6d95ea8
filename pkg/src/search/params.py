"""
Parameter selection for the two-prime-degree conductor construction
===================================================================

Pick primes l < m < 2l in (low * log_q n, high * log_q n] and exponents
alpha, beta with

    r < (q^m - 1)^alpha (q^l - 1)^beta / (q - 1) < r q,   r = 4q q^n / n

The Farey walk proposes (alpha, beta) from floating-point logarithms; the
returned tuple always passes the exact cross-multiplied integer check
4q q^n (q-1) < n P < 4q^2 q^n (q-1) with P = (q^m-1)^alpha (q^l-1)^beta.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from sympy import primerange

from ..exceptions import ParameterSelectionError
from .search_config import SearchConfig

logger = logging.getLogger(__name__)


def farey_neighbor(l: int, m: int) -> Tuple[int, int]:
    """
    Predecessor h/k of l/m in the Farey series of order m: k*l - h*m = 1

    Raises:
        ValueError: unless 0 < l < m and gcd(l, m) = 1
    """
    if not 0 < l < m:
        raise ValueError(f"Need 0 < l < m, got l={l}, m={m}")
    if math.gcd(l, m) != 1:
        raise ValueError(f"l={l} and m={m} are not coprime")
    k = pow(l, -1, m)
    h = (k * l - 1) // m
    return h, k


@dataclass(frozen=True)
class ParameterSelection:
    q: int
    n: int
    l: int
    m: int
    alpha: int
    beta: int
    method: str
    steps: int
    step_bound: Optional[Fraction]
    large_exponent: bool
    c2: Fraction = Fraction(1, 2)

    @property
    def product(self) -> int:
        return (self.q ** self.m - 1) ** self.alpha * (self.q ** self.l - 1) ** self.beta

    @property
    def d(self) -> int:
        """(q^m - 1)^alpha (q^l - 1)^beta / (q - 1)"""
        return self.product // (self.q - 1)

    @property
    def genus_bound(self) -> Fraction:
        return Fraction((self.m * self.alpha + self.l * self.beta) * self.d, 2)

    @property
    def genus_bound_limit(self) -> int:
        """2 C' q q^n with C' = q"""
        return 2 * self.q * self.q ** (self.n + 1)

    @property
    def genus_bound_ok(self) -> bool:
        return self.genus_bound < self.genus_bound_limit

    @property
    def count_condition_ok(self) -> bool:
        """(C2/2) d > q q^n / n, so enough extensions survive the split-place count"""
        return self.c2 * self.d * self.n > 2 * self.q * self.q ** self.n

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "l": self.l,
            "m": self.m,
            "alpha": self.alpha,
            "beta": self.beta,
            "d": str(self.d),
            "method": self.method,
            "steps": self.steps,
            "step_bound": str(self.step_bound) if self.step_bound is not None else None,
            "large_exponent": self.large_exponent,
            "genus_bound_ok": self.genus_bound_ok,
            "count_condition_ok": self.count_condition_ok,
        }


def satisfies_inequality(q: int, n: int, m: int, l: int, alpha: int, beta: int) -> bool:
    """Exact check of r < P/(q-1) < rq with r = 4q q^n / n"""
    if alpha < 0 or beta < 0 or alpha + beta == 0:
        return False
    product = (q ** m - 1) ** alpha * (q ** l - 1) ** beta
    base = 4 * q * q ** n * (q - 1)
    return base < n * product < q * base


def prime_window(q: int, n: int, low, high) -> list:
    log_n = math.log(n, q)
    lower, upper = float(low) * log_n, float(high) * log_n
    return [p for p in primerange(math.floor(lower) + 1, math.floor(upper) + 1) if p > lower]


def prime_pairs(primes) -> Iterator[Tuple[int, int]]:
    """(l, m) with l < m < 2l, in increasing (m, l) order"""
    for m in primes:
        for l in primes:
            if l < m < 2 * l:
                yield l, m


def _target(q: int, n: int) -> float:
    # R = log_q(r q) + log_q(q - 1)
    return math.log(4 * q, q) + n - math.log(n, q) + 1 + math.log(q - 1, q)


def _farey_walk(q, n, l, m):
    R = _target(q, n)
    q_m = math.log(q ** m - 1, q)
    q_l = math.log(q ** l - 1, q)
    h, k = farey_neighbor(l, m)
    c = math.floor(R / q_m)
    z = c * q_m
    if z > R - 1:
        return c, 0, 0, None
    v = k * q_l - h * q_m
    if v <= 0 or h == 0:
        return None
    j = math.floor((R - 1 - z) / v) + 1
    bound = Fraction(c, h)
    if j >= bound:
        return None
    return c - j * h, j * k, j, bound


def _determinant_candidates(q, n, l, m):
    """Non-negative solutions of alpha*m + beta*l = N for N next to R"""
    R = _target(q, n)
    h, k = farey_neighbor(l, m)
    base = math.floor(R)
    for N in (base, base + 1, base - 1, base + 2):
        if N <= 0:
            continue
        # alpha = -N h + t l, beta = N k - t m
        t_low = -(-N * h // l)
        t_high = (N * k) // m
        for t in range(t_low, t_high + 1):
            yield -N * h + t * l, N * k - t * m


def select_parameters(cfg: SearchConfig) -> ParameterSelection:
    """
    Choose (l, m, alpha, beta) for target degree n

    Raises:
        ParameterSelectionError: when the window holds no prime pair or no
            pair admits exponents passing the exact check
    """
    q, n = cfg.q.q, cfg.n
    if n < 2:
        raise ParameterSelectionError(f"n must be at least 2 for a prime window, got {n}")
    primes = prime_window(q, n, cfg.window_low, cfg.window_high)
    pairs = list(prime_pairs(primes))
    if not pairs:
        raise ParameterSelectionError(
            f"No primes l < m < 2l in ({cfg.window_low} log_q n, {cfg.window_high} log_q n] for q={q}, n={n}"
        )

    threshold = cfg.c1 * n / Fraction(math.log(n, q)).limit_denominator(10 ** 9)

    def finish(l, m, alpha, beta, method, steps, bound):
        large = alpha > threshold or beta > threshold
        selection = ParameterSelection(q, n, l, m, alpha, beta, method, steps, bound, large, cfg.c2)
        logger.info(
            f"Parameters for q={q}, n={n}: l={l}, m={m}, alpha={alpha}, beta={beta} ({method}, {steps} step(s))"
        )
        return selection

    for l, m in pairs:
        walk = _farey_walk(q, n, l, m)
        if walk is not None:
            alpha, beta, steps, bound = walk
            if satisfies_inequality(q, n, m, l, alpha, beta):
                return finish(l, m, alpha, beta, "farey", steps, bound)
        logger.debug(f"Farey walk did not land for l={l}, m={m}; trying the determinant identity")

    for l, m in pairs:
        for alpha, beta in _determinant_candidates(q, n, l, m):
            if satisfies_inequality(q, n, m, l, alpha, beta):
                return finish(l, m, alpha, beta, "determinant", 0, None)

    raise ParameterSelectionError(f"No exponents satisfy the inequality for q={q}, n={n}")
