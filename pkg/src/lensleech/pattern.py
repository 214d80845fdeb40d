"""Generation, verification, serialization, and identification of
DeBruijn-like hexagonal color patterns, plus the window lookup table the
matcher runs against.

A window is a center cell with its 6 neighbors in canonical CCW order;
its code is the base-k integer ``center, ring[0..5]`` (center most
significant). Rotating the pattern by j * 60 deg CCW cyclically shifts the
ring digits, so all rotation handling happens on codes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ParseError, PatternSearchError
from .hexgrid import AxialCoord, HexDisc, hex_disc, neighbors

MODE_PER_ROTATION = "per-rotation-unique"
MODE_ALL_ROTATIONS = "all-rotations-unique"
MODES = (MODE_PER_ROTATION, MODE_ALL_ROTATIONS)

DEFAULT_PITCH_MM = 2.0  # paper gives dot size (1.0 mm) but no pitch; see README
DRILL_DIAMETER_MM = 1.0


def encode_window(center: int, ring, k: int) -> int:
    code = center
    for digit in ring:
        code = code * k + digit
    return code


def decode_window(code: int, k: int) -> tuple[int, tuple[int, ...]]:
    digits = []
    for _ in range(6):
        code, d = divmod(code, k)
        digits.append(d)
    digits.reverse()
    return code, tuple(digits)


def rotate_window_code(code: int, j: int, k: int) -> int:
    """Code of the same window after rotating the pattern j * 60 deg CCW."""
    center, ring = decode_window(code, k)
    j %= 6
    rotated = tuple(ring[(i - j) % 6] for i in range(6))
    return encode_window(center, rotated, k)


def canonical_window_code(code: int, k: int) -> int:
    return min(rotate_window_code(code, j, k) for j in range(6))


@dataclass(frozen=True, order=True)
class PatternFamilyId:
    """Necklace class of the origin window: the lexicographically minimal
    rotation of its code. 28 classes exist for two colors."""

    code: int
    colors: int


def enumerate_family_codes(k: int) -> list[int]:
    """All distinct canonical window codes for k colors, ascending."""
    return sorted({canonical_window_code(c, k) for c in range(k**7)})


def family_count_by_burnside(k: int) -> int:
    """Independent count of center-window necklace classes: k centers times
    the number of k-ary 6-bead necklaces, (1/6) * sum_{d|6} phi(d) k^(6/d)."""
    phi = {1: 1, 2: 1, 3: 2, 6: 2}
    necklaces = sum(phi[d] * k ** (6 // d) for d in (1, 2, 3, 6)) // 6
    return k * necklaces


@dataclass
class HexPattern:
    """Color assignment over a hex disc; the ground truth matching runs against."""

    radius: int
    colors: int
    pitch_mm: float
    mode: str
    seed: int
    assignment: dict[AxialCoord, int]

    def __post_init__(self):
        if self.colors < 2:
            raise ValueError(f"need at least 2 colors, got {self.colors}")
        if self.pitch_mm <= 0:
            raise ValueError(f"pitch must be > 0, got {self.pitch_mm}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        disc = hex_disc(self.radius)
        if set(self.assignment) != set(disc.coords):
            raise ValueError("assignment does not cover the disc exactly")
        bad = [c for c, col in self.assignment.items() if not 0 <= col < self.colors]
        if bad:
            raise ValueError(f"color index out of range at {bad[0]}")

    @property
    def disc(self) -> HexDisc:
        return hex_disc(self.radius)

    def interior_coords(self) -> tuple[AxialCoord, ...]:
        """Centers whose full 6-neighborhood lies inside the disc."""
        return hex_disc(self.radius - 1).coords if self.radius >= 1 else ()

    def window_code(self, c: AxialCoord) -> int:
        ring = [self.assignment[n] for n in neighbors(c)]
        return encode_window(self.assignment[c], ring, self.colors)


@dataclass(frozen=True)
class UniquenessReport:
    mode: str
    collisions: tuple[tuple[AxialCoord, AxialCoord, int], ...]
    unique_all_rotations: tuple[AxialCoord, ...]
    unique_given_only: tuple[AxialCoord, ...]

    @property
    def is_valid(self) -> bool:
        return not self.collisions


def verify(p: HexPattern, mode: str | None = None) -> UniquenessReport:
    """List every colliding window pair under ``mode`` (default: p.mode).

    A collision (cA, cB, j) means code(cA) == rotate(code(cB), j); only
    j == 0 counts in per-rotation mode. Also partitions the valid windows
    into those unique in all six orientations and those locatable only in
    the given one.
    """
    mode = mode or p.mode
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    interior = p.interior_coords()
    codes = [p.window_code(c) for c in interior]
    order = {c: i for i, c in enumerate(interior)}

    # slot map over all 6 rotations of every window
    slots: dict[int, list[tuple[int, int]]] = {}
    for i, code in enumerate(codes):
        for j in range(6):
            slots.setdefault(rotate_window_code(code, j, p.colors), []).append((i, j))

    all_rot_triples: set[tuple[int, int, int]] = set()
    for group in slots.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                (i1, j1), (i2, j2) = group[a], group[b]
                if i1 > i2:
                    (i1, j1), (i2, j2) = (i2, j2), (i1, j1)
                all_rot_triples.add((i1, i2, (j2 - j1) % 6))

    if mode == MODE_PER_ROTATION:
        triples = sorted(t for t in all_rot_triples if t[2] == 0 and t[0] != t[1])
    else:
        triples = sorted(all_rot_triples)

    cross = {i for i1, i2, _ in all_rot_triples if i1 != i2 for i in (i1, i2)}
    per_rot_bad = {i for i1, i2, j in all_rot_triples if j == 0 and i1 != i2 for i in (i1, i2)}
    unique_all = tuple(c for c in interior if order[c] not in cross)
    given_only = tuple(c for c in interior if order[c] in cross and order[c] not in per_rot_bad)

    return UniquenessReport(
        mode=mode,
        collisions=tuple((interior[i1], interior[i2], j) for i1, i2, j in triples),
        unique_all_rotations=unique_all,
        unique_given_only=given_only,
    )


@dataclass
class LookupTable:
    """window-code -> [(center coord, rotation k)] for all 6 rotations of
    every interior window. At most one entry per rotation variant when the
    pattern is per-rotation unique."""

    pattern: HexPattern
    entries: dict[int, list[tuple[AxialCoord, int]]] = field(repr=False)

    def candidates(self, code: int) -> list[tuple[AxialCoord, int]]:
        return self.entries.get(code, [])


def build_lookup(p: HexPattern) -> LookupTable:
    report = verify(p, MODE_PER_ROTATION)
    if not report.is_valid:
        raise ValueError(
            f"pattern is not per-rotation unique ({len(report.collisions)} collisions)"
        )
    entries: dict[int, list[tuple[AxialCoord, int]]] = {}
    for c in p.interior_coords():
        code = p.window_code(c)
        for j in range(6):
            entries.setdefault(rotate_window_code(code, j, p.colors), []).append((c, j))
    return LookupTable(pattern=p, entries=entries)


def identify(p: HexPattern) -> PatternFamilyId:
    """Necklace class of the origin window; invariant under whole-pattern rotation."""
    return PatternFamilyId(
        code=canonical_window_code(p.window_code(AxialCoord(0, 0)), p.colors),
        colors=p.colors,
    )


def generate(
    radius: int,
    colors: int,
    mode: str = MODE_PER_ROTATION,
    center_class: PatternFamilyId | int | None = None,
    seed: int = 0,
    pitch_mm: float = DEFAULT_PITCH_MM,
    backtrack_budget: int = 100_000,
    max_restarts: int = 100,
) -> HexPattern:
    """Brute-force search for a pattern whose interior windows are unique
    under ``mode``: randomized greedy assignment in disc order with
    chronological backtracking and full restarts after ``backtrack_budget``
    backtracks. Deterministic for a fixed seed.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    if colors < 2:
        raise ValueError(f"need at least 2 colors, got {colors}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    disc = hex_disc(radius)
    index = {c: i for i, c in enumerate(disc.coords)}
    interior = hex_disc(radius - 1).coords
    n_windows = len(interior)
    code_space = colors**7
    if mode == MODE_ALL_ROTATIONS and 6 * n_windows > code_space:
        raise ValueError(
            f"all-rotations uniqueness needs {6 * n_windows} distinct codes but only "
            f"{code_space} exist for {colors} colors; use more colors or a smaller radius"
        )
    if n_windows > code_space:
        raise ValueError(
            f"{n_windows} windows cannot be unique with only {code_space} codes"
        )

    center_code = None
    if center_class is not None:
        code = center_class.code if isinstance(center_class, PatternFamilyId) else int(center_class)
        if isinstance(center_class, PatternFamilyId) and center_class.colors != colors:
            raise ValueError("center_class color count does not match")
        if not 0 <= code < code_space:
            raise ValueError(f"center class code {code} out of range for {colors} colors")
        center_code = canonical_window_code(code, colors)

    windows = [[index[c]] + [index[nb] for nb in neighbors(c)] for c in interior]
    completing: list[list[int]] = [[] for _ in disc.coords]
    for wi, members in enumerate(windows):
        completing[max(members)].append(wi)
    powk = [colors ** (6 - i) for i in range(7)]
    n = len(disc.coords)
    all_rot = mode == MODE_ALL_ROTATIONS

    def window_variants(code: int) -> list[int]:
        return [rotate_window_code(code, j, colors) for j in range(6)] if all_rot else [code]

    rng = random.Random(seed)
    total_backtracks = 0
    for _restart in range(max_restarts):
        orders = [rng.sample(range(colors), colors) for _ in range(n)]
        cell: list[int] = [-1] * n
        tried = [0] * n
        win_codes: list[list[int]] = [[] for _ in windows]
        used: set[int] = set()
        start = 0

        if center_code is not None:
            center, ring = decode_window(center_code, colors)
            for i, col in enumerate((center, *ring)):
                cell[i] = col  # disc order puts ring 1 at indices 1..6 in DIRS order
            code0 = sum(col * powk[i] for i, col in enumerate((center, *ring)))
            variants = window_variants(code0)
            if all_rot and len(set(variants)) != 6:
                raise ValueError("center class is rotationally symmetric; invalid for all-rotations mode")
            used.update(variants)
            win_codes[0] = variants
            start = 7

        backtracks = 0
        i = start
        while start <= i < n:
            if backtracks > backtrack_budget:
                break
            advanced = False
            while tried[i] < colors:
                cell[i] = orders[i][tried[i]]
                tried[i] += 1
                conflict = False
                registered: list[int] = []
                for wi in completing[i]:
                    code = sum(cell[m] * powk[d] for d, m in enumerate(windows[wi]))
                    variants = window_variants(code)
                    if any(v in used for v in variants) or (all_rot and len(set(variants)) != 6):
                        conflict = True
                        break
                    used.update(variants)
                    win_codes[wi] = variants
                    registered.append(wi)
                if conflict:
                    for wi in registered:
                        used.difference_update(win_codes[wi])
                        win_codes[wi] = []
                    continue
                advanced = True
                break
            if advanced:
                i += 1
            else:
                backtracks += 1
                cell[i] = -1
                tried[i] = 0
                i -= 1
                if i >= start:
                    for wi in completing[i]:
                        if win_codes[wi]:
                            used.difference_update(win_codes[wi])
                            win_codes[wi] = []
        total_backtracks += backtracks
        if i == n:
            assignment = {c: cell[index[c]] for c in disc.coords}
            return HexPattern(
                radius=radius, colors=colors, pitch_mm=pitch_mm,
                mode=mode, seed=seed, assignment=assignment,
            )

    raise PatternSearchError(
        f"no {mode} pattern found for radius={radius} colors={colors} "
        f"within {max_restarts} restarts", attempts=total_backtracks,
    )


def serialize(p: HexPattern) -> str:
    """Canonical line-oriented text form: 5 header lines, then one
    ``q r color`` row per coord in disc order."""
    lines = [
        f"radius {p.radius}",
        f"colors {p.colors}",
        f"pitch_mm {p.pitch_mm!r}",
        f"mode {p.mode}",
        f"seed {p.seed}",
    ]
    lines.extend(f"{c.q} {c.r} {p.assignment[c]}" for c in p.disc.coords)
    return "\n".join(lines) + "\n"


_HEADER_KEYS = ("radius", "colors", "pitch_mm", "mode", "seed")


def deserialize(text: str, path: str | None = None) -> HexPattern:
    header: dict[str, str] = {}
    rows: list[tuple[int, AxialCoord, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] in _HEADER_KEYS:
            if parts[0] in header:
                raise ParseError(f"duplicate header key {parts[0]!r}", path, lineno)
            header[parts[0]] = parts[1]
            continue
        if len(parts) != 3:
            raise ParseError(f"expected 'q r color' row, got {line!r}", path, lineno)
        try:
            q, r, color = (int(t) for t in parts)
        except ValueError:
            raise ParseError(f"non-integer field in row {line!r}", path, lineno) from None
        rows.append((lineno, AxialCoord(q, r), color))

    missing = [k for k in _HEADER_KEYS if k not in header]
    if missing:
        raise ParseError(f"missing header keys: {', '.join(missing)}", path)
    try:
        radius = int(header["radius"])
        colors = int(header["colors"])
        pitch = float(header["pitch_mm"])
        seed = int(header["seed"])
    except ValueError as exc:
        raise ParseError(f"bad header value: {exc}", path) from None
    mode = header["mode"]
    if mode not in MODES:
        raise ParseError(f"unknown mode {mode!r}", path)

    assignment: dict[AxialCoord, int] = {}
    for lineno, coord, color in rows:
        if coord in assignment:
            raise ParseError(f"duplicate coord ({coord.q}, {coord.r})", path, lineno)
        if not 0 <= color < colors:
            raise ParseError(f"color {color} out of range [0, {colors})", path, lineno)
        assignment[coord] = color
    try:
        return HexPattern(radius=radius, colors=colors, pitch_mm=pitch,
                          mode=mode, seed=seed, assignment=assignment)
    except ValueError as exc:
        raise ParseError(str(exc), path) from None


def load(path: str) -> HexPattern:
    with open(path, "r", encoding="utf-8") as fh:
        return deserialize(fh.read(), path=path)


def save(p: HexPattern, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(p))


def export_stencil(p: HexPattern, color: int) -> str:
    """SVG drill drawing for one color: a 1.0 mm circle per point of that
    color at its metric position, plus the disc outline. User units are mm."""
    if not 0 <= color < p.colors:
        raise ValueError(f"color {color} out of range [0, {p.colors})")
    from .hexgrid import point_position

    outline_r = p.radius * p.pitch_mm + DRILL_DIAMETER_MM
    half = outline_r + 1.0
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{2 * half}mm" height="{2 * half}mm" '
        f'viewBox="{-half} {-half} {2 * half} {2 * half}">',
        f'  <circle cx="0" cy="0" r="{outline_r}" fill="none" stroke="black" stroke-width="0.2"/>',
    ]
    for c in p.disc.coords:
        if p.assignment[c] == color:
            x, y = point_position(c, p.pitch_mm)
            parts.append(
                f'  <circle cx="{x!r}" cy="{y!r}" r="{DRILL_DIAMETER_MM / 2}" fill="black"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
