"""Context selection strings: ``--field q-u --sigma shift:1`` and friends."""

from fractions import Fraction

from ..errors import UsageError
from ..exactfield import QQ, QU, Frobenius, GaloisField, Identity, Scale, Shift, SkewContext


def parse_field(text):
    """``q``, ``q-u`` or ``gf:p:k:c0,c1,...`` (modulus coefficients low to high)."""
    if text == "q":
        return QQ
    if text == "q-u":
        return QU
    if text.startswith("gf:"):
        parts = text.split(":")
        if len(parts) != 4:
            raise UsageError(f"expected gf:p:k:c0,c1,..., got {text!r}")
        try:
            p, k = int(parts[1]), int(parts[2])
            modulus = [int(c) for c in parts[3].split(",")]
        except ValueError:
            raise UsageError(f"malformed finite field {text!r}") from None
        return GaloisField(p, k, modulus)
    raise UsageError(f"unknown field {text!r}; use q, q-u or gf:p:k:modulus")


def parse_sigma(text):
    """``identity``, ``shift:c``, ``scale:c`` or ``frobenius``."""
    name, _, arg = text.partition(":")
    try:
        if name == "identity":
            return Identity()
        if name == "frobenius":
            return Frobenius()
        if name == "shift":
            return Shift(Fraction(arg or "1"))
        if name == "scale":
            return Scale(Fraction(arg or "-1"))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed automorphism {text!r}") from None
    raise UsageError(f"unknown automorphism {text!r}; use identity, shift:c, scale:c or frobenius")


def make_context(field="q-u", sigma="shift:1"):
    return SkewContext(parse_field(field), parse_sigma(sigma))
