"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` so the CLI can turn it
into a JSON payload without inspecting message text.
"""

from __future__ import annotations


class WFusionError(Exception):
    code = "error"

    def to_dict(self) -> dict[str, str]:
        return {"error": self.code, "message": str(self)}


class ParseError(WFusionError):
    code = "parse_error"


class ArithmeticDomainError(WFusionError):
    code = "arithmetic"


class GenericWeight(WFusionError):
    """A numeric value was requested for a weight carrying the generic symbol."""

    code = "generic_weight"


class NotInSector(WFusionError):
    code = "not_in_sector"


class NotProjectiveClass(WFusionError):
    code = "not_projective_class"


class InvalidLabel(WFusionError):
    code = "invalid_label"


class Infinite(WFusionError):
    code = "infinite"


class OutOfRange(WFusionError):
    code = "out_of_range"


class UnknownLiteratureLabel(WFusionError):
    code = "unknown_literature_label"


class NonRationalExponent(WFusionError):
    code = "non_rational_exponent"
