"""
Number Formatting and Parsing
17-significant-digit serialization and the X^e syntax for interval lengths
"""

import math
import re
from decimal import Decimal, InvalidOperation

from utils.errors import ConfigError

FLOAT_FORMAT = "%.17g"

_EXPONENT_FORM = re.compile(r"^\s*X\s*\^\s*([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*$")


def format_float(value):
    """Format a real with 17 significant digits"""
    return FLOAT_FORMAT % value


def parse_int_like(text):
    """
    Parse an integer given as ``10000000``, ``1e7`` or ``10**7``

    Args:
        text (str or int): Raw value

    Returns:
        int: Parsed integer
    """
    if isinstance(text, int):
        return text
    raw = str(text).strip().replace("_", "")
    if "**" in raw:
        base, _, exp = raw.partition("**")
        try:
            return int(base) ** int(exp)
        except ValueError as e:
            raise ConfigError(f"invalid integer: {text!r}") from e
    try:
        value = Decimal(raw)
    except InvalidOperation as e:
        raise ConfigError(f"invalid integer: {text!r}") from e
    if value != value.to_integral_value():
        raise ConfigError(f"not an integer: {text!r}")
    return int(value)


def resolve_interval_length(spec, X):
    """
    Resolve an H specification against X

    ``X^0.55`` resolves to ceil(X**0.55); anything else must be an integer.

    Args:
        spec (str or int): H specification
        X (int): Start of the window

    Returns:
        int: Resolved H
    """
    match = _EXPONENT_FORM.match(str(spec))
    if match:
        exponent = float(match.group(1))
        return int(math.ceil(X ** exponent))
    return parse_int_like(spec)
