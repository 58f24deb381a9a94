"""
Cycle notation: "(0 1 2)(3 4)" with 0-based points
"""

import re
from typing import TYPE_CHECKING

from ..core.exceptions import ParseError

if TYPE_CHECKING:
    from .permutation import Permutation

_CYCLE = re.compile(r"\s*\(([^()]*)\)\s*")


def parse_cycles(text: str, degree: int) -> "Permutation":
    """Parse whitespace-separated cycles; "" and "()" are the identity"""
    from .permutation import from_cycles

    stripped = text.strip()
    cycles = []
    seen = set()
    position = 0
    while position < len(stripped):
        match = _CYCLE.match(stripped, position)
        if not match:
            raise ParseError(f"unexpected text {stripped[position:]!r}", field="cycles")
        tokens = match.group(1).replace(",", " ").split()
        try:
            points = [int(token) for token in tokens]
        except ValueError:
            raise ParseError(f"non-integer point in ({match.group(1)})", field="cycles")
        for point in points:
            if not 0 <= point < degree:
                raise ParseError(f"point {point} outside 0..{degree - 1}", field="cycles")
            if point in seen:
                raise ParseError(f"point {point} appears more than once", field="cycles")
            seen.add(point)
        if len(points) > 1:
            cycles.append(points)
        position = match.end()

    return from_cycles(degree, cycles)


def format_cycles(perm: "Permutation") -> str:
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(point) for point in cycle) + ")" for cycle in cycles)
