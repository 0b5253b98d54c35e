"""Text and JSON forms of a polynomial.

Text: comma-separated ascending coefficients, each an integer or ``p/q``,
e.g. ``1,-3/2,0,2`` for ``1 - (3/2)x + 2x^3``. JSON: ``{"coeffs": ["1", "-3/2",
"0", "2"]}`` (integers are also accepted as JSON numbers). An empty list is
the zero polynomial.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError
from .poly import Poly, Q

_TOKEN = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def _parse_token(token: str, offset: int):
    m = _TOKEN.match(token)
    if m is None:
        lead = len(token) - len(token.lstrip())
        raise ParseError(f"malformed coefficient {token.strip()!r}", offset + lead)
    num = int(m.group(1))
    if m.group(2) is None:
        return Q(num)
    den = int(m.group(2))
    if den == 0:
        raise ParseError(f"zero denominator in {token.strip()!r}", offset + m.start(2))
    return Q(num, den)


def parse_polynomial(text: str) -> Poly:
    """Parse the comma-separated coefficient form (or its JSON wrapper)."""
    if text.lstrip().startswith("{"):
        return parse_polynomial_json(text)
    if not text.strip():
        return Poly()
    coeffs = []
    offset = 0
    for token in text.split(","):
        coeffs.append(_parse_token(token, offset))
        offset += len(token) + 1
    return Poly(coeffs)


def parse_polynomial_json(text: str) -> Poly:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(payload, dict) or not isinstance(payload.get("coeffs"), list):
        raise ParseError('expected an object with a "coeffs" list')
    coeffs = []
    for i, c in enumerate(payload["coeffs"]):
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise ParseError(f"coefficient #{i} must be a string or integer")
        coeffs.append(_parse_token(str(c), 0) if isinstance(c, str) else Q(c))
    return Poly(coeffs)


def format_polynomial(f: Poly) -> str:
    return ",".join(str(c) for c in f.coeffs)


def polynomial_to_json(f: Poly) -> dict:
    return {"coeffs": [str(c) for c in f.coeffs]}
