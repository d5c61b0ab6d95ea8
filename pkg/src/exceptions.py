"""
Exception hierarchy shared by all packages

Library code raises these; the CLI turns them into exit status 2 with a
message naming the offending input.
"""


class PointlessError(Exception):
    """Base class for all library errors"""


class FieldMismatchError(PointlessError, ValueError):
    """Operands live over different fields"""


class PolynomialParseError(PointlessError, ValueError):
    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class ZeroDivisorError(PointlessError, ZeroDivisionError):
    """Division or reduction by the zero polynomial"""


class NotIrreducibleError(PointlessError, ValueError):
    """A modulus factor or place is not irreducible"""


class ModulusError(PointlessError, ValueError):
    """Malformed modulus text or invalid factor data"""


class NotCoprimeError(PointlessError, ValueError):
    """Residue shares a factor with the modulus"""


class FactorizationError(PointlessError):
    def __init__(self, message, cofactor=None):
        super().__init__(message)
        self.cofactor = cofactor


class GroupTooLargeError(PointlessError):
    """Group or quotient exceeds a configured enumeration bound"""


class PlaceInModulusError(PointlessError, ValueError):
    """Place lies in the support of the modulus"""


class NotCyclicError(PointlessError, ValueError):
    """Operation requires a cyclic class group"""


class TableInputError(PointlessError, ValueError):
    """Table row is inconsistent (no extension matches it)"""


class ParameterSelectionError(PointlessError):
    """No prime pair / exponent choice satisfies the requested inequality"""
