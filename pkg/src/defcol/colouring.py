"""Edge colourings and the text certificate format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import GraphFormatError
from .graph import Multigraph

__all__ = ["EdgeColouring", "canonical", "parse_certificate", "serialize_certificate"]


def canonical(colours: Sequence[int]) -> list[int]:
    """Renumber colours 0, 1, ... in order of first use by edge id."""
    table: dict[int, int] = {}
    return [table.setdefault(c, len(table)) for c in colours]


@dataclass(frozen=True)
class EdgeColouring:
    """A colour index per edge id of ``host``.

    Colours are canonicalised on construction, so ``num_colours`` is the
    number of distinct colours and equal colourings compare equal.
    """

    host: Multigraph = field(repr=False)
    colours: tuple[int, ...]

    def __post_init__(self):
        if len(self.colours) != self.host.m:
            raise ValueError(f"{len(self.colours)} colours for {self.host.m} edges")
        object.__setattr__(self, "colours", tuple(canonical(self.colours)))

    @property
    def num_colours(self) -> int:
        return max(self.colours, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colours)]
        for e, c in enumerate(self.colours):
            out[c].append(e)
        return out

    def max_defect(self) -> int:
        """Largest number of same-coloured edges at any vertex."""
        worst = 0
        for v in range(self.host.n):
            seen: dict[int, int] = {}
            for e in self.host.incidence[v]:
                c = self.colours[e]
                seen[c] = seen.get(c, 0) + 1
            worst = max(worst, max(seen.values(), default=0))
        return worst

    def __getitem__(self, e: int) -> int:
        return self.colours[e]


def serialize_certificate(c: EdgeColouring, d: int) -> str:
    lines = [f"s chi {c.num_colours} {d}"]
    lines.extend(f"{e} {col}" for e, col in enumerate(c.colours))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, host: Multigraph) -> tuple[list[int], int, int]:
    """Parse a certificate against ``host``.

    Returns ``(colours, declared K, declared d)``; colours are left as
    written.  Every edge must be assigned exactly once.
    """
    header = None
    colours: list[int | None] = [None] * host.m
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None or len(parts) != 4 or parts[1] != "chi":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                header = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            continue
        if header is None:
            raise GraphFormatError("assignment before header", lineno)
        if len(parts) != 2:
            raise GraphFormatError(f"malformed assignment {line!r}", lineno)
        try:
            e, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed assignment {line!r}", lineno) from None
        if not 0 <= e < host.m:
            raise GraphFormatError(f"edge {e} not in graph", lineno)
        if col < 0:
            raise GraphFormatError(f"negative colour {col}", lineno)
        if colours[e] is not None:
            raise GraphFormatError(f"edge {e} assigned twice", lineno)
        colours[e] = col
    if header is None:
        raise GraphFormatError("missing 's chi' header")
    missing = [e for e, c in enumerate(colours) if c is None]
    if missing:
        raise GraphFormatError(f"edge {missing[0]} has no colour ({len(missing)} missing)")
    return [c for c in colours if c is not None], header[0], header[1]
