import json

import pytest

from gorpoly.io import parse, parse_json, parse_text, read_polytope, to_json_obj, to_text
from gorpoly.polytope import PolytopeError, convex_hull


def test_text_format():
    P = parse_text("# unit square\nd 2 v 4\n0 0\n1 0\n0 1\n1 1\n")
    assert P.dim == 2 and len(P.vertices) == 4


def test_json_roundtrip():
    P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    Q = parse_json(json.dumps(to_json_obj(P)))
    assert Q.vertices == P.vertices


def test_text_roundtrip_and_autodetect(tmp_path):
    P = convex_hull([(-1, -1), (1, -1), (-1, 1), (1, 1)])
    f = tmp_path / "sq.poly"
    f.write_text(to_text(P))
    assert read_polytope(f).vertices == P.vertices
    assert parse(json.dumps(to_json_obj(P))).vertices == P.vertices


@pytest.mark.parametrize("bad", ["d 2 v 1\n0 x\n", "d 2 v 2\n0 0\n", "d 2 v 1\n0.5 1\n"])
def test_bad_input_raises(bad):
    with pytest.raises(PolytopeError):
        parse_text(bad)
