"""Plain-text gain graph files.

Grammar (one record per line, no blank lines):

    # gaingraph v1
    n <vertex count>
    e <u> <v> <gain>       (one line per edge, 1-based vertices, u != v)

A gain token is either ``t:<decimal>`` (angle in turns, so ``t:0.25`` is
the imaginary unit) or ``c:<re>,<im>`` (must lie on the unit circle to
within 1e-9).  The gain labels the oriented edge u -> v; the reverse
orientation is the conjugate.
"""

from __future__ import annotations

from .errors import ParseError
from .gaingraph import GainGraph, InvalidGain, as_unit_gain, make_gain

HEADER = "# gaingraph v1"


def parse_gain_token(token: str, line: int | None = None) -> complex:
    if token.startswith("t:"):
        try:
            turns = float(token[2:])
        except ValueError:
            raise ParseError(f"bad angle {token[2:]!r}", line) from None
        try:
            return make_gain(turns)
        except InvalidGain as exc:
            raise ParseError(str(exc), line) from None
    if token.startswith("c:"):
        parts = token[2:].split(",")
        if len(parts) != 2:
            raise ParseError(f"bad complex gain {token!r}", line)
        try:
            z = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise ParseError(f"bad complex gain {token!r}", line) from None
        try:
            return as_unit_gain(z)
        except InvalidGain:
            raise ParseError(
                f"non-unit gain {token[2:]!r} (modulus {abs(z)!r})", line
            ) from None
    raise ParseError(f"gain token must start with 't:' or 'c:', got {token!r}", line)


def parse(text: str) -> GainGraph:
    """Parse a gain-graph file; raises ParseError with the line number."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise ParseError(f"first line must be {HEADER!r}", 1)
    if len(lines) < 2:
        raise ParseError("missing vertex count line", 2)
    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"expected 'n <count>', got {lines[1]!r}", 2)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad vertex count {parts[1]!r}", 2) from None
    if n < 0:
        raise ParseError(f"vertex count must be >= 0, got {n}", 2)

    gains: dict[tuple[int, int], complex] = {}
    seen: set[frozenset[int]] = set()
    for idx, raw in enumerate(lines[2:], start=3):
        fields = raw.split()
        if not fields:
            raise ParseError("blank line", idx)
        if fields[0] != "e" or len(fields) != 4:
            raise ParseError(f"expected 'e <u> <v> <gain>', got {raw!r}", idx)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"bad vertex labels in {raw!r}", idx) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex outside 1..{n} in {raw!r}", idx)
        if u == v:
            raise ParseError(f"self-loop at {u}", idx)
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {{{u},{v}}}", idx)
        seen.add(key)
        gains[(u, v)] = parse_gain_token(fields[3], idx)
    return GainGraph(n, gains)


def format_gain(z: complex) -> str:
    return f"c:{z.real!r},{z.imag!r}"


def emit(g: GainGraph) -> str:
    """Canonical file form: edges sorted, gains as exact float pairs.

    ``parse(emit(g)) == g``, and emitting again reproduces the same text.
    """
    out = [HEADER, f"n {g.n}"]
    for (u, v), z in g.gain_items():
        out.append(f"e {u} {v} {format_gain(z)}")
    return "\n".join(out) + "\n"
