"""
Finite field F_q arithmetic
===========================

Elements of F_q (q = p^c) are the integers 0..q-1. For c > 1 an integer
encodes the base-p digit vector of a residue modulo the defining polynomial,
whose root is the primitive element `a` of the polynomial grammar.

The defining polynomial for (p, c) is the first monic polynomial of degree c
over F_p (numeric order of its base-p encoding) whose root has order q-1.
Multiplication goes through log/antilog tables; for odd p and c > 1 addition
goes through a Zech table.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import factorint, isprime, primitive_root

from config import Config
from ..exceptions import FieldMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldSpec:
    """The constant field F_q with q = p^c"""

    p: int
    c: int = 1

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"Characteristic must be prime, got {self.p}")
        if self.c < 1:
            raise ValueError(f"Extension degree must be >= 1, got {self.c}")
        if self.p ** self.c > Config.FIELD_CEILING:
            raise ValueError(
                f"Field order {self.p}^{self.c} exceeds the configured ceiling {Config.FIELD_CEILING}"
            )

    @classmethod
    def from_order(cls, q):
        """Field spec for an order q = p^c"""
        return _field_from_order(int(q))

    @property
    def q(self):
        return self.p ** self.c

    @property
    def is_binary(self):
        return self.p == 2 and self.c == 1

    def __str__(self):
        return f"F_{self.q}"

    def check_same(self, other):
        if self != other:
            raise FieldMismatchError(f"Operands over different fields: {self} and {other}")

    # ------------------------------------------------------------------ tables

    @cached_property
    def defining_digits(self):
        """Coefficients (low degree first, monic) of the defining polynomial of a"""
        if self.c == 1:
            return (0, 1)
        return _find_primitive_digits(self.p, self.c)

    @cached_property
    def _tables(self):
        q, p = self.q, self.p
        exp = [0] * (q - 1)
        log = [0] * q
        if self.c == 1:
            g = primitive_root(p) if p > 2 else 1
            value = 1
            for k in range(q - 1):
                exp[k] = value
                log[value] = k
                value = value * g % p
        else:
            low = self.defining_digits[:-1]
            digits = [1] + [0] * (self.c - 1)
            for k in range(q - 1):
                value = _encode(digits, p)
                exp[k] = value
                log[value] = k
                digits = _times_root(digits, low, p)

        zech = None
        if p > 2 and self.c > 1:
            # zech[k] = log(1 + a^k), or -1 when 1 + a^k = 0
            zech = [0] * (q - 1)
            for k in range(q - 1):
                total = _digit_add(exp[k], 1, p, self.c)
                zech[k] = log[total] if total else -1

        logger.debug(f"Built log/antilog tables for {self}")
        return exp, log, zech

    @property
    def primitive_element(self):
        """Generator of the multiplicative group F_q^*"""
        return self._tables[0][1 % (self.q - 1)] if self.q > 2 else 1

    # -------------------------------------------------------------- arithmetic

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.c == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech = self._tables
        n = self.q - 1
        la = log[a]
        z = zech[(log[b] - la) % n]
        if z < 0:
            return 0
        return exp[(la + z) % n]

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        if self.c == 1:
            return self.p - a
        exp, log, _ = self._tables
        n = self.q - 1
        return exp[(log[a] + n // 2) % n]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.c == 1:
            return a * b % self.p
        exp, log, _ = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("Inverse of zero in a finite field")
        if self.c == 1:
            return pow(a, -1, self.p)
        exp, log, _ = self._tables
        return exp[(-log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("Negative power of zero")
            return 1 if k == 0 else 0
        exp, log, _ = self._tables
        return exp[(log[a] * k) % (self.q - 1)]

    def log(self, a):
        """Exponent of a with respect to the primitive element"""
        if a == 0:
            raise ValueError("Logarithm of zero")
        return self._tables[1][a]

    def exp(self, k):
        return self._tables[0][k % (self.q - 1)]

    def from_int(self, n):
        """Image of an integer in the prime subfield"""
        return n % self.p


@lru_cache(maxsize=None)
def _field_from_order(q):
    if q < 2:
        raise ValueError(f"Field order must be at least 2, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"Field order must be a prime power, got {q}")
    (p, c), = factors.items()
    return FieldSpec(p, c)


def _encode(digits, p):
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _decode(value, p, c):
    digits = []
    for _ in range(c):
        value, d = divmod(value, p)
        digits.append(d)
    return digits


def _digit_add(a, b, p, c):
    return _encode([(x + y) % p for x, y in zip(_decode(a, p, c), _decode(b, p, c))], p)


def _times_root(digits, low, p):
    top = digits[-1]
    shifted = [0] + digits[:-1]
    return [(s - top * f) % p for s, f in zip(shifted, low)]


def _find_primitive_digits(p, c):
    q = p ** c
    for k in range(p ** c):
        low = _decode(k, p, c)
        if low[0] == 0:
            continue
        digits = [1] + [0] * (c - 1)
        one = list(digits)
        period = None
        for step in range(1, q):
            digits = _times_root(digits, low, p)
            if digits == one:
                period = step
                break
        if period == q - 1:
            return tuple(low) + (1,)
    raise ValueError(f"No primitive polynomial of degree {c} over F_{p}")
