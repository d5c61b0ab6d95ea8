"""
Integer helpers: group-order factorization, orders in abstract groups
"""

import logging
from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Dict, Optional

from sympy import factorint, isprime

from config import Config
from ..exceptions import FactorizationError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def _factor_cached(n, trial_bound, fallback):
    factors = factorint(n, limit=trial_bound)
    composite = [f for f in factors if not isprime(f)]
    if not composite:
        return factors

    if not fallback:
        cofactor = 1
        for f in composite:
            cofactor *= f ** factors[f]
        raise FactorizationError(
            f"Could not factor {n} with trial division up to {trial_bound}", cofactor=cofactor
        )

    logger.debug(f"Trial division left composite part(s) {composite} of {n}; using full factorization")
    result = {p: e for p, e in factors.items() if isprime(p)}
    for f in composite:
        for p, e in factorint(f).items():
            result[p] = result.get(p, 0) + e * factors[f]
    leftover = [p for p in result if not isprime(p)]
    if leftover:
        raise FactorizationError(f"Could not factor {n}", cofactor=leftover[0])
    return result


def factor_integer(n: int, trial_bound: Optional[int] = None, fallback: Optional[bool] = None) -> Dict[int, int]:
    """
    Factor a positive integer

    Trial division runs up to `trial_bound`; a remaining composite cofactor
    goes to sympy's full factorization when the fallback is enabled.

    Raises:
        FactorizationError: carrying the unfactored cofactor
    """
    if n < 1:
        raise ValueError(f"Can only factor positive integers, got {n}")
    if n == 1:
        return {}
    trial_bound = Config.FACTOR_TRIAL_BOUND if trial_bound is None else trial_bound
    fallback = Config.FACTOR_FALLBACK if fallback is None else fallback
    return dict(_factor_cached(n, trial_bound, fallback))


def order_from_factorization(order: int, factors: Dict[int, int], power: Callable, is_identity: Callable) -> int:
    """
    Order of an element of a group of known (factored) order

    Args:
        order: multiple of the element order
        factors: factorization of `order`
        power: k -> element^k
        is_identity: predicate on group elements
    """
    k = order
    for p, e in factors.items():
        for _ in range(e):
            if k % p == 0 and is_identity(power(k // p)):
                k //= p
            else:
                break
    return k


def xgcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0"""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        quot, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def integer_sqrt_ceil(n: int) -> int:
    root = isqrt(n)
    return root if root * root == n else root + 1


def lcm_all(values) -> int:
    result = 1
    for v in values:
        result = result * v // gcd(result, v)
    return result
