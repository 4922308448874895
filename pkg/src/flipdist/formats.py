"""Text and JSON formats for triangulations, plus name resolution.

Text format: ``n=<int>;interior=<a>-<b>,<a>-<b>,...`` with edges sorted
lexicographically. JSON format: ``{"n": N, "interior": [[a, b], ...]}``.
Both parsers reject anything that violates the triangulation invariants.

A triangulation can also be named by a family literal like ``A-:12``
(member sign optional, defaulting to the first member) and a pair by
``A:12``.
"""

from __future__ import annotations

import json
import re

from .errors import InvalidInputError
from .families import FAMILY_TAGS, family_member, family_pair
from .polygon import Triangulation, TriangulationPair

_FAMILY_RE = re.compile(r"^([A-Za-z])([+-]?):(\d+)$")


def format_text(t: Triangulation) -> str:
    inner = ",".join(f"{a}-{b}" for a, b in sorted(t.interior))
    return f"n={t.n};interior={inner}"


def parse_text(s: str) -> Triangulation:
    m = re.fullmatch(r"n=(\d+);interior=(.*)", s.strip())
    if not m:
        raise InvalidInputError(f"malformed triangulation text {s!r}")
    n = int(m.group(1))
    body = m.group(2)
    interior = []
    if body:
        for part in body.split(","):
            em = re.fullmatch(r"(\d+)-(\d+)", part)
            if not em:
                raise InvalidInputError(f"malformed edge {part!r}")
            interior.append((int(em.group(1)), int(em.group(2))))
    return Triangulation(n, interior)


def to_json_obj(t: Triangulation) -> dict:
    return {"n": t.n, "interior": [list(e) for e in sorted(t.interior)]}


def from_json_obj(obj: dict) -> Triangulation:
    try:
        n = int(obj["n"])
        interior = [(int(a), int(b)) for a, b in obj["interior"]]
    except (KeyError, TypeError, ValueError) as err:
        raise InvalidInputError(f"malformed triangulation object: {err}") from None
    return Triangulation(n, interior)


def parse_any(s: str) -> Triangulation:
    """Parse text format, JSON format, or a family member literal."""
    s = s.strip()
    if s.startswith("{"):
        return from_json_obj(json.loads(s))
    m = _FAMILY_RE.match(s)
    if m:
        return family_member(m.group(1).upper(), m.group(2), int(m.group(3)))
    return parse_text(s)


def parse_pair_literal(s: str) -> TriangulationPair:
    m = _FAMILY_RE.match(s.strip())
    if not m or m.group(2):
        raise InvalidInputError(f"expected a bare family literal like A:12, got {s!r}")
    return family_pair(m.group(1).upper(), int(m.group(3)))


def is_family_literal(s: str) -> bool:
    m = _FAMILY_RE.match(s.strip())
    return bool(m) and m.group(1).upper() in FAMILY_TAGS
