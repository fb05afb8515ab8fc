"""DIMACS graphs, coloring files and JSON certificates.

All file formats use 1-based vertex and class ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Union

import jsonschema

from fatcolor import __version__
from fatcolor.fat import Partition
from fatcolor.graph import Graph
from fatcolor.rational import RationalLike, format_rational

Text = Union[str, bytes]


class FormatError(ValueError):
    """Malformed input file."""


class DimacsError(FormatError):
    pass


class ColoringError(FormatError):
    pass


class MissingVertexError(ColoringError):
    pass


class DuplicateVertexError(ColoringError):
    pass


class ClassGapError(ColoringError):
    pass


class BadIdError(ColoringError):
    pass


def _as_text(data: Text) -> str:
    return data.decode("utf-8") if isinstance(data, bytes) else data


def parse_dimacs(data: Text) -> Graph:
    """Parse the ``p edge`` DIMACS dialect into a 0-based graph.

    Self-loops, duplicate edges, out-of-range ids and an edge count that
    differs from the header are all rejected.
    """
    n: Optional[int] = None
    m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size in problem line") from None
            if n < 1 or m < 0:
                raise DimacsError(f"line {lineno}: need n >= 1 and m >= 0")
        elif tag == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer vertex id") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex id out of range 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DimacsError(f"line {lineno}: duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise DimacsError("missing 'p edge' problem line")
    if len(edges) != m:
        raise DimacsError(f"header declares {m} edges but {len(edges)} were given")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.vertex_count} {g.size}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_coloring(data: Text, n: int) -> Partition:
    """Parse ``vertex class`` lines (both 1-based), one per vertex."""
    class_of: dict[int, int] = {}
    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ColoringError(f"line {lineno}: expected '<vertex> <class>'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise BadIdError(f"line {lineno}: non-integer id") from None
        if not 1 <= v <= n:
            raise BadIdError(f"line {lineno}: vertex {v} out of range 1..{n}")
        if c < 1:
            raise BadIdError(f"line {lineno}: class ids start at 1, got {c}")
        if v in class_of:
            raise DuplicateVertexError(f"line {lineno}: vertex {v} listed twice")
        class_of[v] = c
    missing = [v for v in range(1, n + 1) if v not in class_of]
    if missing:
        raise MissingVertexError(f"no class given for vertices {missing[:10]}")
    k = max(class_of.values())
    gaps = sorted(set(range(1, k + 1)) - set(class_of.values()))
    if gaps:
        raise ClassGapError(f"class ids must be 1..{k} without gaps; unused: {gaps}")
    return Partition(tuple(class_of[v] for v in range(1, n + 1)), k)


def write_coloring(p: Partition) -> str:
    return "".join(f"{v + 1} {c}\n" for v, c in enumerate(p.class_of))


RATIONAL_PATTERN = r"^-?[0-9]+/[0-9]+$"

STATUSES = (
    "valid", "invalid", "found", "not-found", "pass", "fail", "not-equivalent", "inconclusive",
)

CERTIFICATE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "fatcolor certificate",
    "type": "object",
    "required": ["command", "status", "parameters", "details", "tool_version"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string", "minLength": 1},
        "status": {"enum": list(STATUSES)},
        "parameters": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["k"],
                    "additionalProperties": False,
                    "properties": {
                        "k": {"type": "string", "pattern": r"^[0-9]+$"},
                        "alpha": {"type": ["string", "null"], "pattern": RATIONAL_PATTERN},
                        "beta": {"type": ["string", "null"], "pattern": RATIONAL_PATTERN},
                        "kind": {"enum": ["determined", "unconstrained"]},
                        "alpha_canonical": {"type": "boolean"},
                    },
                },
            ]
        },
        "details": {"type": "object"},
        "tool_version": {"type": "string"},
    },
}

EXIT_CODES = {
    "valid": 0,
    "found": 0,
    "pass": 0,
    "not-equivalent": 0,
    "invalid": 1,
    "not-found": 1,
    "fail": 1,
    "inconclusive": 1,
}


def render_parameters(
    k: int,
    alpha: Optional[RationalLike],
    beta: Optional[RationalLike],
    *,
    kind: Optional[str] = None,
    alpha_canonical: Optional[bool] = None,
) -> dict[str, Any]:
    out: dict[str, Any] = {
        "k": str(k),
        "alpha": None if alpha is None else format_rational(alpha),
        "beta": None if beta is None else format_rational(beta),
    }
    if kind is not None:
        out["kind"] = kind
    if alpha_canonical is not None:
        out["alpha_canonical"] = alpha_canonical
    return out


@dataclass
class Certificate:
    command: str
    status: str
    parameters: Optional[dict[str, Any]] = None
    details: dict[str, Any] = field(default_factory=dict)
    tool_version: str = __version__

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "status": self.status,
            "parameters": self.parameters,
            "details": self.details,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Certificate":
        validate_certificate(data)
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def validate_certificate(data: dict[str, Any]) -> None:
    """Raise :class:`jsonschema.ValidationError` if ``data`` is off-schema."""
    jsonschema.validate(data, CERTIFICATE_SCHEMA)
