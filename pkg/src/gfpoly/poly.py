"""
Polynomials over F_q
====================

A single `Poly` type with two backends:
- F_2: coefficients packed into a Python int (bit i = coefficient of x^i)
- other q: tuple of field elements, lowest degree first, no trailing zeros

Features:
- Ring operations, division with remainder, gcd / extended gcd
- Modular exponentiation and inverses
- Base-q integer encoding used for deterministic enumeration order
"""

from typing import Tuple

from .field import FieldSpec
from ..exceptions import FieldMismatchError, ZeroDivisorError, NotCoprimeError

# Degree reported for the zero polynomial
ZERO_DEGREE = -1

# Byte -> bits spread to even positions (squaring over F_2)
_SPREAD = [sum(((i >> k) & 1) << (2 * k) for k in range(8)) for i in range(256)]


# --------------------------------------------------------------------- F_2

def gf2_mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def gf2_square(a: int) -> int:
    result = 0
    shift = 0
    while a:
        result |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return result


def gf2_divmod(a: int, b: int) -> Tuple[int, int]:
    if not b:
        raise ZeroDivisorError("Division by the zero polynomial")
    db = b.bit_length()
    quotient = 0
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return quotient, a
        quotient |= 1 << shift
        a ^= b << shift


def gf2_mod(a: int, b: int) -> int:
    if not b:
        raise ZeroDivisorError("Division by the zero polynomial")
    db = b.bit_length()
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return a
        a ^= b << shift


def gf2_mulmod(a: int, b: int, m: int) -> int:
    return gf2_mod(gf2_mul(a, b), m)


def gf2_powmod(a: int, k: int, m: int) -> int:
    result = gf2_mod(1, m)
    a = gf2_mod(a, m)
    while k:
        if k & 1:
            result = gf2_mod(gf2_mul(result, a), m)
        k >>= 1
        if k:
            a = gf2_mod(gf2_square(a), m)
    return result


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


# ------------------------------------------------------------------ dense

def _trim(coeffs):
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _dense_add(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return _trim(out)


def _dense_neg(field, a):
    return tuple(field.neg(c) for c in a)


def _dense_mul(field, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return _trim(out)


def _dense_divmod(field, a, b):
    if not b:
        raise ZeroDivisorError("Division by the zero polynomial")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv_lead = field.inv(b[-1])
    rem = list(a)
    quot = [0] * (len(a) - db)
    for shift in range(len(a) - 1 - db, -1, -1):
        coef = rem[shift + db]
        if coef == 0:
            continue
        factor = field.mul(coef, inv_lead)
        quot[shift] = factor
        for j, cb in enumerate(b):
            if cb:
                rem[shift + j] = field.sub(rem[shift + j], field.mul(factor, cb))
    return _trim(quot), _trim(rem[:db])


class Poly:
    """
    Polynomial over a finite field, immutable and hashable

    Use the constructors (`from_coeffs`, `from_int`, `x`, `constant`, ...)
    rather than calling the class directly.
    """

    __slots__ = ("field", "_rep")

    def __init__(self, field: FieldSpec, rep):
        self.field = field
        self._rep = rep

    # ------------------------------------------------------------ builders

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs) -> "Poly":
        """Build from coefficients listed lowest degree first"""
        if field.is_binary:
            bits = 0
            for i, c in enumerate(coeffs):
                if c % 2:
                    bits |= 1 << i
            return cls(field, bits)
        q = field.q
        for c in coeffs:
            if not 0 <= c < q:
                raise ValueError(f"Coefficient {c} is not an element of {field}")
        return cls(field, _trim(list(coeffs)))

    @classmethod
    def from_bits(cls, field: FieldSpec, bits: int) -> "Poly":
        if not field.is_binary:
            raise FieldMismatchError(f"Bitmask form only exists over F_2, not {field}")
        return cls(field, bits)

    @classmethod
    def from_int(cls, field: FieldSpec, value: int) -> "Poly":
        """Inverse of `to_int`: digit i of the base-q expansion is the coefficient of x^i"""
        if field.is_binary:
            return cls(field, value)
        q = field.q
        coeffs = []
        while value:
            value, digit = divmod(value, q)
            coeffs.append(digit)
        return cls(field, tuple(coeffs))

    @classmethod
    def zero(cls, field):
        return cls(field, 0 if field.is_binary else ())

    @classmethod
    def one(cls, field):
        return cls.constant(field, 1)

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1)

    @classmethod
    def constant(cls, field, c):
        if field.is_binary:
            return cls(field, c & 1)
        return cls(field, (c,) if c else ())

    @classmethod
    def monomial(cls, field, k, c=1):
        if field.is_binary:
            return cls(field, (c & 1) << k)
        return cls(field, (0,) * k + (c,) if c else ())

    # ---------------------------------------------------------- properties

    @property
    def bits(self) -> int:
        if not self.field.is_binary:
            raise FieldMismatchError(f"Bitmask form only exists over F_2, not {self.field}")
        return self._rep

    @property
    def coeffs(self) -> Tuple[int, ...]:
        if self.field.is_binary:
            bits = self._rep
            return tuple((bits >> i) & 1 for i in range(bits.bit_length()))
        return self._rep

    @property
    def degree(self) -> int:
        if self.field.is_binary:
            return self._rep.bit_length() - 1
        return len(self._rep) - 1

    @property
    def lead(self) -> int:
        if self.is_zero():
            return 0
        return 1 if self.field.is_binary else self._rep[-1]

    def coefficient(self, k: int) -> int:
        if self.field.is_binary:
            return (self._rep >> k) & 1
        return self._rep[k] if k < len(self._rep) else 0

    def is_zero(self) -> bool:
        return not self._rep

    def is_one(self) -> bool:
        return self._rep == 1 if self.field.is_binary else self._rep == (1,)

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> "Poly":
        """Scale by the inverse of the leading coefficient (zero stays zero)"""
        lead = self.lead
        if lead in (0, 1):
            return self
        return self.scale(self.field.inv(lead))

    def scale(self, c: int) -> "Poly":
        if self.field.is_binary:
            return Poly(self.field, self._rep if c & 1 else 0)
        if c == 0:
            return Poly.zero(self.field)
        return Poly(self.field, tuple(self.field.mul(c, a) for a in self._rep))

    def to_int(self) -> int:
        """Base-q encoding; the numeric order of this value is the enumeration order"""
        if self.field.is_binary:
            return self._rep
        q = self.field.q
        value = 0
        for c in reversed(self._rep):
            value = value * q + c
        return value

    # ---------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self.field.check_same(other.field)
            return other
        if isinstance(other, int):
            return Poly.constant(self.field, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.is_binary:
            return Poly(self.field, self._rep ^ other._rep)
        return Poly(self.field, _dense_add(self.field, self._rep, other._rep))

    __radd__ = __add__

    def __neg__(self):
        if self.field.p == 2:
            return self
        return Poly(self.field, _dense_neg(self.field, self._rep))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.is_binary:
            return Poly(self.field, gf2_mul(self._rep, other._rep))
        return Poly(self.field, _dense_mul(self.field, self._rep, other._rep))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.is_binary:
            quot, rem = gf2_divmod(self._rep, other._rep)
            return Poly(self.field, quot), Poly(self.field, rem)
        quot, rem = _dense_divmod(self.field, self._rep, other._rep)
        return Poly(self.field, quot), Poly(self.field, rem)

    def divrem(self, other):
        return divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.is_binary:
            return Poly(self.field, gf2_mod(self._rep, other._rep))
        return divmod(self, other)[1]

    def square(self) -> "Poly":
        if self.field.is_binary:
            return Poly(self.field, gf2_square(self._rep))
        return self * self

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("Negative power of a polynomial")
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.square()
        return result

    def pow_mod(self, k: int, m: "Poly") -> "Poly":
        """self^k mod m; negative k uses the inverse modulo m"""
        m = self._coerce(m)
        if m.is_zero():
            raise ZeroDivisorError("Reduction modulo the zero polynomial")
        if k < 0:
            return self.inverse_mod(m).pow_mod(-k, m)
        if self.field.is_binary:
            return Poly(self.field, gf2_powmod(self._rep, k, m._rep))
        result = Poly.one(self.field) % m
        base = self % m
        while k:
            if k & 1:
                result = (result * base) % m
            k >>= 1
            if k:
                base = (base * base) % m
        return result

    def mul_mod(self, other: "Poly", m: "Poly") -> "Poly":
        if self.field.is_binary:
            return Poly(self.field, gf2_mulmod(self._rep, other._rep, m._rep))
        return (self * other) % m

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; gcd(f, 0) is f made monic"""
        other = self._coerce(other)
        if self.field.is_binary:
            return Poly(self.field, gf2_gcd(self._rep, other._rep))
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly"):
        """
        Extended Euclid

        Returns:
            (g, s, t) with s*self + t*other = g and g monic
        """
        other = self._coerce(other)
        field = self.field
        r0, r1 = self, other
        s0, s1 = Poly.one(field), Poly.zero(field)
        t0, t1 = Poly.zero(field), Poly.one(field)
        while not r1.is_zero():
            quot, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quot * s1
            t0, t1 = t1, t0 - quot * t1
        lead = r0.lead
        if lead not in (0, 1):
            inv = field.inv(lead)
            r0, s0, t0 = r0.scale(inv), s0.scale(inv), t0.scale(inv)
        return r0, s0, t0

    def inverse_mod(self, m: "Poly") -> "Poly":
        g, s, _ = self.xgcd(m)
        if not g.is_one():
            raise NotCoprimeError(f"{self} is not invertible modulo {m}")
        return s % m

    def eval(self, value: int) -> int:
        """Evaluate at a field element (Horner)"""
        field = self.field
        result = 0
        for c in reversed(self.coeffs):
            result = field.add(field.mul(result, value), c)
        return result

    # ------------------------------------------------------- comparison

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self._rep == other._rep

    def __hash__(self):
        return hash((self.field.p, self.field.c, self._rep))

    def __lt__(self, other):
        return (self.degree, self.to_int()) < (other.degree, other.to_int())

    def __bool__(self):
        return not self.is_zero()

    def __getstate__(self):
        return (self.field, self._rep)

    def __setstate__(self, state):
        self.field, self._rep = state

    def __str__(self):
        from .parser import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field}, {self})"
