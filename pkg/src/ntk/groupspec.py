"""The group-spec grammar used by the CLI.

    Z<n>        cyclic of order n
    D<n>        dihedral of order 2n
    Dic<n>      dicyclic of order 4n
    S<n>        symmetric on n points
    A x B       direct product (whitespace around the x optional)
    table:<path>                      load a multiplication table file
    sd:<Kspec>,<Hspec>,<actionpath>   twisted product; the action file has
                                      |K| lines, each a permutation of
                                      0..|H|-1 (images, space-separated)

Atoms are case-insensitive. Parse failures raise :class:`ParseError` with
the character position of the offending token.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .groups import Group, cyclic, dicyclic, dihedral, direct_product, load_group, semidirect, symmetric

# Orders past this point are outside the intended desk scale.
MAX_SPEC_ORDER = 2048

_ATOM = re.compile(r"^(dic|z|d|s)(\d+)$", re.IGNORECASE)

_BUILDERS = {
    "z": (cyclic, lambda n: n),
    "d": (dihedral, lambda n: 2 * n),
    "dic": (dicyclic, lambda n: 4 * n),
    "s": (symmetric, lambda n: _factorial(n)),
}


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _parse_atom(token: str, position: int) -> tuple[Group, str]:
    match = _ATOM.match(token.strip())
    if not match:
        raise ParseError(f"unrecognized group atom {token.strip()!r}", position)
    kind = match.group(1).lower()
    n = int(match.group(2))
    if n < 1:
        raise ParseError(f"group parameter must be positive in {token.strip()!r}", position)
    builder, order_of = _BUILDERS[kind]
    order = order_of(n)
    if order > MAX_SPEC_ORDER:
        raise ParseError(
            f"{token.strip()!r} has order {order}, beyond the supported {MAX_SPEC_ORDER}",
            position,
        )
    prefix = {"z": "Z", "d": "D", "dic": "Dic", "s": "S"}[kind]
    return builder(n), f"{prefix}{n}"


def _parse_product(text: str, offset: int) -> tuple[Group, str]:
    parts = []
    position = offset
    for chunk in re.split(r"[xX]", text):
        parts.append((chunk, position))
        position += len(chunk) + 1
    groups = [_parse_atom(chunk, pos + len(chunk) - len(chunk.lstrip()))
              for chunk, pos in parts]
    group, label = groups[0]
    for other, other_label in groups[1:]:
        label = f"{label} x {other_label}"
        group = direct_product(group, other, label=label)
        if group.n > MAX_SPEC_ORDER:
            raise ParseError(f"product order {group.n} beyond {MAX_SPEC_ORDER}", offset)
    return group, label


def load_action(path: str | Path) -> list[list[int]]:
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    return [[int(x) for x in ln.split()] for ln in lines]


def parse_group_spec(text: str) -> tuple[Group, str]:
    """Parse a spec string into a validated group and its canonical label."""
    s = text.strip()
    if not s:
        raise ParseError("empty group spec", 0)
    lowered = s.lower()
    if lowered.startswith("table:"):
        path = s[len("table:"):].strip()
        if not path:
            raise ParseError("table: needs a file path", len("table:"))
        group = load_group(path)
        return group, s
    if lowered.startswith("sd:"):
        body = s[len("sd:"):]
        pieces = body.split(",", 2)
        if len(pieces) != 3:
            raise ParseError("sd: needs <Kspec>,<Hspec>,<actionpath>", len("sd:"))
        k_group, k_label = _parse_product(pieces[0], len("sd:"))
        h_group, h_label = _parse_product(pieces[1], len("sd:") + len(pieces[0]) + 1)
        action = load_action(pieces[2].strip())
        label = f"{k_label}:{h_label}"
        return semidirect(k_group, h_group, action, label=label), label
    return _parse_product(s, 0)
