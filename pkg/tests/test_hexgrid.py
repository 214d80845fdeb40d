import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lensleech.hexgrid import (
    DIRS,
    AxialCoord,
    hex_disc,
    hex_ring,
    neighbors,
    point_position,
    point_positions,
    rotate60,
)

coords = st.builds(AxialCoord, st.integers(-50, 50), st.integers(-50, 50))


def test_neighbors_of_origin_canonical_order():
    got = neighbors(AxialCoord(0, 0))
    assert got == [
        AxialCoord(1, 0),
        AxialCoord(0, 1),
        AxialCoord(-1, 1),
        AxialCoord(-1, 0),
        AxialCoord(0, -1),
        AxialCoord(1, -1),
    ]


@given(coords)
def test_neighbors_at_distance_one(c):
    for n in neighbors(c):
        assert n.hex_distance(c) == 1


def test_interior_neighbors_stay_in_next_disc():
    outer = set(hex_disc(6).coords)
    for c in hex_disc(5):
        for n in neighbors(c):
            assert n in outer


@pytest.mark.parametrize("radius,count", [(0, 1), (5, 91), (6, 127)])
def test_disc_sizes(radius, count):
    assert len(hex_disc(radius)) == count


@given(st.integers(0, 8))
def test_disc_size_formula_and_uniqueness(radius):
    disc = hex_disc(radius)
    assert len(disc) == 1 + 3 * radius * (radius + 1)
    assert len(set(disc.coords)) == len(disc)
    assert all(c.hex_distance() <= radius for c in disc)


def test_disc_nesting():
    for r in range(8):
        inner = set(hex_disc(r).coords)
        assert inner < set(hex_disc(r + 1).coords)


def test_disc_order_is_ring_by_ring_then_angle():
    disc = hex_disc(3)
    assert disc.coords[0] == AxialCoord(0, 0)
    # ring starts at (r, 0) and walks CCW by planar angle
    ring2 = hex_ring(2)
    angles = [math.atan2(*reversed(point_position(c, 1.0))) % (2 * math.pi) for c in ring2]
    assert angles == sorted(angles)
    assert list(disc.coords[7:19]) == ring2


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        hex_disc(-1)


def test_rotate60_single_step():
    assert rotate60(AxialCoord(1, 0), 1) == AxialCoord(0, 1)


def test_rotate60_three_steps_is_negation():
    assert rotate60(AxialCoord(3, -2), 3) == AxialCoord(-3, 2)


@given(coords, st.integers(-12, 12))
def test_rotate60_full_turn_identity(c, k):
    assert rotate60(c, 6) == c
    assert rotate60(c, k) == rotate60(c, k % 6)


@given(coords)
def test_rotation_commutes_with_neighborhoods(c):
    rotated_neighbors = {rotate60(n, 1) for n in neighbors(c)}
    assert rotated_neighbors == set(neighbors(rotate60(c, 1)))


def test_dirs_rotate_into_each_other():
    for i, d in enumerate(DIRS):
        assert rotate60(d, 1) == DIRS[(i + 1) % 6]


def test_point_position_examples():
    assert point_position(AxialCoord(0, 0), 1.5) == (0.0, 0.0)
    assert point_position(AxialCoord(1, 0), 1.5) == (1.5, 0.0)


def test_neighbor_spacing_equals_pitch():
    pitch = 2.0
    disc = set(hex_disc(6).coords)
    for c in hex_disc(6):
        pc = point_position(c, pitch)
        for n in neighbors(c):
            if n in disc:
                pn = point_position(n, pitch)
                assert math.dist(pc, pn) == pytest.approx(pitch, abs=1e-9)


def test_point_position_injective_on_disc():
    pts = {point_position(c, 0.7) for c in hex_disc(8)}
    assert len(pts) == len(hex_disc(8))


def test_point_positions_matches_scalar():
    disc = hex_disc(4)
    arr = point_positions(disc.coords, 2.0)
    for i, c in enumerate(disc):
        assert tuple(arr[i]) == pytest.approx(point_position(c, 2.0))


def test_nonpositive_pitch_rejected():
    with pytest.raises(ValueError):
        point_position(AxialCoord(0, 0), 0.0)
    with pytest.raises(ValueError):
        point_positions([AxialCoord(0, 0)], -1.0)


@given(coords)
def test_cube_sum_zero(c):
    assert c.q + c.r + c.s == 0


@given(coords)
def test_hex_distance_nonnegative_int(c):
    d = c.hex_distance()
    assert isinstance(d, int) and d >= 0


def test_translation_invariance_of_neighbors():
    c = AxialCoord(2, -1)
    for n in neighbors(c):
        assert n.hex_distance(c) == 1
