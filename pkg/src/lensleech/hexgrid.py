"""Axial-coordinate algebra for pointy-top hexagonal grids.

Convention used throughout: axial (q, r) with implied cube coordinate
s = -q - r.  The +q axis maps to +x in the plane, neighbor 0 sits on +q
and the remaining neighbors follow counter-clockwise.  Every module that
encodes, matches, or renders windows relies on this one ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True, order=True)
class AxialCoord:
    q: int
    r: int

    @property
    def s(self) -> int:
        return -self.q - self.r

    def __add__(self, other: "AxialCoord") -> "AxialCoord":
        return AxialCoord(self.q + other.q, self.r + other.r)

    def __sub__(self, other: "AxialCoord") -> "AxialCoord":
        return AxialCoord(self.q - other.q, self.r - other.r)

    def hex_distance(self, other: "AxialCoord" = None) -> int:
        """Hex (grid-step) distance; to the origin when ``other`` is omitted."""
        d = self if other is None else self - other
        return (abs(d.q) + abs(d.r) + abs(d.q + d.r)) // 2


ORIGIN = AxialCoord(0, 0)

# CCW starting from +q; rotate60(DIRS[i], 1) == DIRS[(i + 1) % 6].
DIRS = (
    AxialCoord(1, 0),
    AxialCoord(0, 1),
    AxialCoord(-1, 1),
    AxialCoord(-1, 0),
    AxialCoord(0, -1),
    AxialCoord(1, -1),
)


def neighbors(c: AxialCoord) -> list[AxialCoord]:
    """The 6 unit-distance neighbors of ``c`` in canonical CCW order."""
    return [c + d for d in DIRS]


def rotate60(c: AxialCoord, k: int = 1) -> AxialCoord:
    """Rotate ``c`` about the origin by k * 60 degrees CCW."""
    x, y, z = c.q, -c.q - c.r, c.r
    for _ in range(k % 6):
        x, y, z = -z, -x, -y
    return AxialCoord(x, z)


@dataclass(frozen=True)
class HexDisc:
    """All coords within ``radius`` grid steps of the origin, in canonical order."""

    radius: int
    coords: tuple[AxialCoord, ...]

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __contains__(self, c: AxialCoord) -> bool:
        return c.hex_distance() <= self.radius


def hex_ring(radius: int) -> list[AxialCoord]:
    """Coords at exactly ``radius`` steps, CCW starting from (radius, 0)."""
    if radius == 0:
        return [ORIGIN]
    out = []
    for side in range(6):
        corner = rotate60(AxialCoord(radius, 0), side)
        step = rotate60(AxialCoord(-1, 1), side)
        c = corner
        for _ in range(radius):
            out.append(c)
            c = c + step
    return out


def hex_disc(radius: int) -> HexDisc:
    """Disc of coords with hex distance <= radius, ring-by-ring then by angle."""
    if radius < 0:
        raise ValueError(f"disc radius must be >= 0, got {radius}")
    coords = []
    for ring in range(radius + 1):
        coords.extend(hex_ring(ring))
    return HexDisc(radius=radius, coords=tuple(coords))


def point_position(c: AxialCoord, pitch: float) -> tuple[float, float]:
    """Planar (x, y) of ``c`` in mm; neighbor spacing equals ``pitch`` exactly."""
    if pitch <= 0:
        raise ValueError(f"pitch must be > 0, got {pitch}")
    return (pitch * (c.q + 0.5 * c.r), pitch * (SQRT3 / 2.0) * c.r)


def point_positions(coords, pitch: float) -> np.ndarray:
    """Vectorized point_position over an iterable of coords, shape (N, 2)."""
    if pitch <= 0:
        raise ValueError(f"pitch must be > 0, got {pitch}")
    qr = np.array([(c.q, c.r) for c in coords], dtype=np.float64).reshape(-1, 2)
    out = np.empty_like(qr)
    out[:, 0] = pitch * (qr[:, 0] + 0.5 * qr[:, 1])
    out[:, 1] = pitch * (SQRT3 / 2.0) * qr[:, 1]
    return out
