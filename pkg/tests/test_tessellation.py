import random
import xml.etree.ElementTree as ET

import pytest

from toriclat.codes import codewords
from toriclat.lattice import TorusLattice
from toriclat.tessellation import (Polyomino, canonical_polyomino,
                                   is_fundamental_region, lee_sphere,
                                   render_ascii, render_svg, tessellate)


def test_polyomino_normalization_and_validation():
    p = Polyomino.from_cells([(2, 3), (3, 3), (2, 4)])
    assert p.cells == ((0, 0), (1, 0), (0, 1))
    with pytest.raises(ValueError):
        Polyomino.from_cells([(0, 0), (2, 0)])  # disconnected
    with pytest.raises(ValueError):
        Polyomino.from_cells([])
    with pytest.raises(ValueError):
        Polyomino(((1, 1), (1, 2)))  # not normalized


def test_canonical_shapes():
    assert canonical_polyomino(TorusLattice(9)).cells == tuple(
        (x, y) for y in range(3) for x in range(3))
    assert canonical_polyomino(TorusLattice(7)).cells == (
        (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2), (1, 2))
    assert canonical_polyomino(TorusLattice(5)).cells == (
        (0, 0), (1, 0), (0, 1), (1, 1), (2, 1))


def test_canonical_area_and_tiling_sweep():
    for q in range(5, 102, 2):
        lat = TorusLattice(q)
        shape = canonical_polyomino(lat)
        assert shape.area == q
        ok, witness = is_fundamental_region(codewords(lat), shape)
        assert ok and witness is None


def test_face_count_arithmetic_by_remainder():
    # r = 0, 1, 2 cases of g = 3q' + r all give exactly q cells
    for q, r in ((9, 0), (7, 1), (11, 2), (15, 0), (13, 1), (17, 2)):
        lat = TorusLattice(q)
        assert lat.g % 3 == r
        assert canonical_polyomino(lat).area == q


def test_lee_sphere():
    sphere = lee_sphere(1)
    assert sphere.area == 5
    assert set(sphere.cells) == {(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)}
    with pytest.raises(ValueError):
        lee_sphere(2)
    ok, _ = is_fundamental_region(codewords(TorusLattice(5)), sphere)
    assert ok


def test_non_fundamental_witness():
    lat = TorusLattice(5)
    code = codewords(lat)
    # every cell is a codeword, so all five share one coset
    ok, witness = is_fundamental_region(
        code, {(0, 0), (1, 2), (2, 4), (3, 1), (4, 3)})
    assert not ok
    a, b = witness
    diff = ((a[0] - b[0]) % 5, (a[1] - b[1]) % 5)
    assert code.contains(diff)


def test_area_mismatch_rejected():
    with pytest.raises(ValueError):
        is_fundamental_region(codewords(TorusLattice(7)), lee_sphere(1))


def _random_connected_shape(rng, area):
    cells = {(0, 0)}
    while len(cells) < area:
        x, y = rng.choice(sorted(cells))
        dx, dy = rng.choice([(1, 0), (-1, 0), (0, 1), (0, -1)])
        cells.add((x + dx, y + dy))
    return Polyomino.from_cells(cells)


@pytest.mark.parametrize("q", [5, 7, 9, 13, 17, 25, 31])
def test_coset_test_agrees_with_direct_cover_on_random_shapes(q):
    # is_fundamental_region runs both checks internally and raises if they
    # disagree; this also compares against an independent cover count.
    rng = random.Random(900 + q)
    lat = TorusLattice(q)
    code = codewords(lat)
    for _ in range(25):
        shape = _random_connected_shape(rng, q)
        ok, witness = is_fundamental_region(code, shape)
        covered = set()
        for kx, ky in code.codewords:
            for px, py in shape.cells:
                covered.add((((kx + px) % q), ((ky + py) % q)))
        assert ok == (len(covered) == q * q)
        if not ok:
            a, b = witness
            assert code.contains(((a[0] - b[0]) % q, (a[1] - b[1]) % q))


@pytest.mark.parametrize("q", [5, 13])
def test_tessellation_partitions_the_grid(q):
    lat = TorusLattice(q)
    code = codewords(lat)
    tiling = tessellate(code, canonical_polyomino(lat))
    assert len(tiling.cell_to_anchor) == q * q
    for k in range(q):
        assert len(tiling.region(k)) == q
    assert set(tiling.region(0)) == set(tiling.shape.cells)


def test_full_rows_and_columns_are_transversals_of_a_perfect_code():
    lat = TorusLattice(5)
    code = codewords(lat)
    row = Polyomino.from_cells([(i, 0) for i in range(5)])
    column = Polyomino.from_cells([(0, i) for i in range(5)])
    assert is_fundamental_region(code, row)[0]
    assert is_fundamental_region(code, column)[0]


def test_tessellate_rejects_non_fundamental_shapes():
    lat = TorusLattice(5)
    # (1,2) - (0,0) is a codeword, so these two cells share a coset
    bad = Polyomino.from_cells([(0, 0), (1, 0), (1, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError):
        tessellate(codewords(lat), bad)


def test_ascii_rendering_counts():
    lat = TorusLattice(5)
    art = render_ascii(tessellate(codewords(lat), canonical_polyomino(lat)))
    rows = art.strip().split("\n")
    assert len(rows) == 5 and all(len(r) == 5 for r in rows)
    flat = "".join(rows)
    symbols = set(flat)
    assert len(symbols) == 5
    assert all(flat.count(s) == 5 for s in symbols)


def test_svg_rendering_structure():
    lat = TorusLattice(9)
    svg = render_svg(tessellate(codewords(lat), canonical_polyomino(lat)))
    root = ET.fromstring(svg)
    rects = [el for el in root.iter() if el.tag.endswith("rect")]
    lines = [el for el in root.iter() if el.tag.endswith("line")]
    assert len(rects) == 81
    assert len(lines) == 2 * 9  # one X (two strokes) per anchor
