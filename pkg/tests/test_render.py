import pytest

from genant.core import AntConfiguration, GridConfig, Heading, RuleWord, run
from genant.render import Palette, auto_viewport, dump_text, render_bitmap


def config(cells, pos=(50, 50), rule="LLLR"):
    r = RuleWord(rule)
    return AntConfiguration(GridConfig(r.m, 0, cells), pos, Heading.UP, r)


def test_single_white_pixel():
    data = render_bitmap(config({}), (0, 0, 0, 0), 1, Palette.default(4))
    assert data == b"P6\n1 1\n255\n\xff\xff\xff"


def test_two_cells():
    data = render_bitmap(config({(1, 0): 1}), (0, 0, 1, 0), 1,
                         Palette([(255, 255, 255), (0, 0, 0), (1, 1, 1), (2, 2, 2)]))
    header = b"P6\n2 1\n255\n"
    assert data.startswith(header)
    assert data[len(header):] == b"\xff\xff\xff\x00\x00\x00"


@pytest.mark.parametrize("scale", [1, 2, 5])
def test_length_formula(scale):
    c = config({(0, 0): 3, (4, 2): 2}, pos=(1, 1))
    data = render_bitmap(c, (-1, -1, 5, 3), scale)
    header = f"P6\n{7 * scale} {5 * scale}\n255\n".encode()
    assert data.startswith(header)
    assert len(data) == len(header) + 3 * 7 * 5 * scale ** 2


def test_rows_top_down_and_ant_marker():
    c = config({(0, 1): 3}, pos=(1, 0))
    data = render_bitmap(c, (0, 0, 1, 1), 1)
    px = data[len(b"P6\n2 2\n255\n"):]
    assert px[0:3] == b"\x00\x00\x00"  # (0,1) top-left, state 3 = black
    assert px[9:12] == b"\xff\x00\x00"  # (1,0) bottom-right, ant


def test_origin_outline():
    c = config({})
    pal = Palette.default(4, outline_origin=True)
    data = render_bitmap(c, (0, 0, 0, 0), 3, pal)
    px = data[len(b"P6\n3 3\n255\n"):]
    assert px[0:3] == b"\x00\x00\xff"
    assert px[12:15] == b"\xff\xff\xff"  # centre keeps the state color


def test_palette_injective():
    with pytest.raises(ValueError):
        Palette([(0, 0, 0), (0, 0, 0)])
    assert len(set(Palette.default(6).colors)) == 6


def test_auto_viewport():
    assert auto_viewport(config({}, pos=(3, 4))) == (1, 2, 5, 6)
    assert auto_viewport(config({(0, 0): 1, (2, 1): 2}, pos=(1, 1))) == (-2, -2, 4, 3)


def test_render_pure():
    c = config({(0, 0): 1}, pos=(0, 1))
    assert render_bitmap(c, None, 2) == render_bitmap(c, None, 2)


def test_highway_snapshot_golden():
    # frozen from the pure-Python reference run: 105 + 4*52 steps from the uniform grid
    final, _, _ = run(AntConfiguration.uniform("LLLR"), 313)
    assert len(final.grid) == 37
    assert final.grid.bounds == (-9, -12, 3, 1)
    vp = auto_viewport(final)
    assert vp == (-11, -14, 5, 3)
    assert len(render_bitmap(final, vp, 1)) == len(b"P6\n17 18\n255\n") + 3 * 17 * 18


def test_dump_text():
    assert dump_text(config({}), (0, 0, 2, 2)) == "000\n000\n000\n"
    assert dump_text(config({(0, 0): 2}), (0, 0, 0, 0)) == "2\n"
    final, _, _ = run(AntConfiguration.uniform("LLLR"), 1)
    assert dump_text(final, (-1, 0, 0, 0)) == "01\nA\n"


def test_dump_text_wide_states():
    c = config({(0, 0): 11}, rule="L" * 12)
    assert dump_text(c, (0, 0, 1, 0)) == "11  0\n"
