"""
Effective divisors m = sum m_i P_i supported on finite places
"""

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from ..gfpoly import FieldSpec, Poly, Place, is_irreducible, parse_poly, render_poly
from ..exceptions import ModulusError, NotIrreducibleError, PolynomialParseError

_POWER = re.compile(r"^\((?P<body>.+)\)\^(?P<exp>\d+)$")


@dataclass(frozen=True)
class Modulus:
    """
    Conductor bound m: pairwise distinct monic irreducibles with multiplicities

    An empty factor tuple is the zero divisor (trivial modulus).
    """

    field: FieldSpec
    factors: Tuple[Tuple[Poly, int], ...] = ()

    @classmethod
    def from_factors(cls, field: FieldSpec, factors: Iterable[Tuple[Poly, int]], check: bool = True) -> "Modulus":
        """Build from (place, multiplicity) pairs; repeated places are merged"""
        merged = {}
        order = []
        for poly, mult in factors:
            if mult < 1:
                raise ModulusError(f"Multiplicity of {poly} must be >= 1, got {mult}")
            if poly.field != field:
                raise ModulusError(f"Factor {poly} is not over {field}")
            if check:
                if poly.degree < 1 or not poly.is_monic():
                    raise ModulusError(f"Modulus factor '{poly}' must be monic of degree >= 1")
                if not is_irreducible(poly):
                    raise NotIrreducibleError(f"Modulus factor '{poly}' is not irreducible")
            if poly not in merged:
                order.append(poly)
                merged[poly] = 0
            merged[poly] += mult
        return cls(field, tuple((p, merged[p]) for p in order))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Modulus":
        """
        Parse `(x^3+x+1)^2`, `x^7+x+1, x^3+x+1` or `(x^3+x^2+1,x^3+x+1)`

        Empty text, `0` and `1` denote the trivial modulus.
        """
        compact = "".join(text.split())
        compact = _strip_enclosing(compact)
        if compact in ("", "0", "1"):
            return cls(field)

        factors = []
        for item in _split_top_level(compact):
            if not item:
                raise ModulusError(f"Empty factor in modulus '{text}'")
            match = _POWER.match(item)
            body, mult = (match.group("body"), int(match.group("exp"))) if match else (item, 1)
            try:
                poly = parse_poly(field, body)
            except PolynomialParseError as e:
                raise ModulusError(f"Bad modulus factor '{item}': {e}") from e
            factors.append((poly, mult))
        return cls.from_factors(field, factors)

    # ------------------------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def degree(self) -> int:
        return sum(p.degree * e for p, e in self.factors)

    @property
    def places(self) -> Tuple[Poly, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def poly(self) -> Poly:
        result = Poly.one(self.field)
        for p, e in self.factors:
            result = result * p ** e
        return result

    def multiplicity(self, place) -> int:
        poly = place.poly if isinstance(place, Place) else place
        for p, e in self.factors:
            if p == poly:
                return e
        return 0

    def contains_place(self, place) -> bool:
        return self.multiplicity(place) > 0

    def without(self, place) -> "Modulus":
        """The modulus with `place` removed entirely"""
        poly = place.poly if isinstance(place, Place) else place
        if not self.contains_place(poly):
            raise ModulusError(f"Place {poly} is not in the support of {self}")
        return Modulus(self.field, tuple((p, e) for p, e in self.factors if p != poly))

    def to_text(self, use_hex: bool = False) -> str:
        if not self.factors:
            return "1"
        items = [
            render_poly(p, use_hex) if e == 1 else f"({render_poly(p, use_hex)})^{e}"
            for p, e in self.factors
        ]
        if all(e == 1 for _, e in self.factors):
            return "(" + ",".join(items) + ")"
        return ",".join(items)

    def __str__(self):
        return self.to_text()


def _strip_enclosing(text):
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(text) - 1:
                return text
        text = text[1:-1]
    return text


def _split_top_level(text):
    items, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ModulusError(f"Unbalanced parentheses in modulus '{text}'")
        if ch == "," and depth == 0:
            items.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth:
        raise ModulusError(f"Unbalanced parentheses in modulus '{text}'")
    items.append("".join(current))
    return items
