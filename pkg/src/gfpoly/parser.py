"""
Polynomial text forms

Grammar: a sum of terms `c*x^k`, `x^k`, `x`, `c`, with `+` or `-` between
terms and whitespace ignored. Coefficients are decimal digits over prime
fields and `a^j` (or `a`, `0`, `1`, an integer of the prime subfield) over
extension fields. Over F_2 a hex bitmask such as `0xb` is also accepted.
"""

import re

from .field import FieldSpec
from .poly import Poly
from ..exceptions import PolynomialParseError

_TERM = re.compile(
    r"^(?:(?P<coef>\d+|a(?:\^\d+)?)(?:\*(?=x)|(?=x)|$))?"
    r"(?P<var>x(?:\^(?P<exp>\d+))?)?$"
)
_HEX = re.compile(r"^0x[0-9a-f]+$")


def parse_element(field: FieldSpec, token: str) -> int:
    """Parse a single field element"""
    if token.isdigit():
        value = int(token)
        if value >= field.p:
            raise PolynomialParseError(
                f"Coefficient '{token}' out of range for the prime field of {field}", token=token
            )
        return field.from_int(value)
    if token.startswith("a"):
        if field.c == 1:
            raise PolynomialParseError(
                f"Coefficient '{token}' needs an extension field, got {field}", token=token
            )
        power = int(token[2:]) if token.startswith("a^") else 1
        return field.exp(power)
    raise PolynomialParseError(f"Malformed coefficient '{token}'", token=token)


def format_element(field: FieldSpec, value: int) -> str:
    if field.c == 1 or value in (0, 1):
        return str(value)
    k = field.log(value)
    return "a" if k == 1 else f"a^{k}"


def _strip_parens(text):
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(text) - 1:
                return text
        text = text[1:-1]
    return text


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """
    Parse a polynomial in the ASCII grammar (or hex over F_2)

    Raises:
        PolynomialParseError: naming the offending token
    """
    if not isinstance(text, str):
        raise PolynomialParseError(f"Expected polynomial text, got {type(text).__name__}")
    compact = _strip_parens("".join(text.split()).lower())
    if not compact:
        raise PolynomialParseError("Empty polynomial", token=text)

    if _HEX.match(compact):
        if not field.is_binary:
            raise PolynomialParseError(
                f"Hex form '{compact}' is only accepted over F_2", token=compact
            )
        return Poly.from_bits(field, int(compact, 16))

    terms = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(terms) != compact:
        raise PolynomialParseError(f"Malformed polynomial '{text}'", token=text)

    coeffs = {}
    for raw in terms:
        negative = raw.startswith("-")
        body = raw.lstrip("+-")
        match = _TERM.match(body)
        if not body or not match or not (match.group("coef") or match.group("var")):
            raise PolynomialParseError(f"Malformed term '{raw}' in '{text}'", token=raw)
        coef = parse_element(field, match.group("coef")) if match.group("coef") else 1
        if negative:
            coef = field.neg(coef)
        power = 0
        if match.group("var"):
            power = int(match.group("exp")) if match.group("exp") else 1
        coeffs[power] = field.add(coeffs.get(power, 0), coef)

    dense = [0] * (max(coeffs) + 1)
    for power, coef in coeffs.items():
        dense[power] = coef
    return Poly.from_coeffs(field, dense)


def format_poly(poly: Poly) -> str:
    """Descending powers, unit coefficients omitted, e.g. x^3+x+1"""
    if poly.is_zero():
        return "0"
    field = poly.field
    parts = []
    coeffs = poly.coeffs
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(format_element(field, c))
            continue
        var = "x" if k == 1 else f"x^{k}"
        parts.append(var if c == 1 else f"{format_element(field, c)}*{var}")
    return "+".join(parts)


def format_hex(poly: Poly) -> str:
    return hex(poly.bits)


def render_poly(poly: Poly, use_hex: bool = False) -> str:
    """Printer used by reports: hex bitmask when requested and over F_2"""
    if use_hex and poly.field.is_binary:
        return format_hex(poly)
    return format_poly(poly)
