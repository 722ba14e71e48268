import pytest

from lpmpoly import (
    Box,
    Region,
    area_below,
    catalan_edge_formula,
    catalan_region,
    enumerate_paths,
    intersection_vertices,
    make_region,
    parse_path,
    rectangle_region,
    region_boxes,
    region_from_words,
)
from lpmpoly.errors import DominanceViolation, EmptyWord, EndpointMismatch, InvalidCharacter
from lpmpoly.oracle import all_regions
from math import comb


def test_parse_basic():
    p = parse_path("EENN")
    assert (p.m, p.r) == (2, 2)
    assert p.profile == (0, 0, 0, 1, 2)
    assert parse_path("N").m == 0
    assert parse_path("N").r == 1


def test_parse_errors():
    with pytest.raises(InvalidCharacter) as err:
        parse_path("EXN")
    assert err.value.position == 2
    with pytest.raises(EmptyWord):
        parse_path("")


def test_make_region():
    make_region(parse_path("EENN"), parse_path("NNEE"))
    make_region(parse_path("EENN"), parse_path("NENE"))
    with pytest.raises(DominanceViolation) as err:
        make_region(parse_path("NENE"), parse_path("EENN"))
    assert err.value.position == 1
    with pytest.raises(EndpointMismatch):
        make_region(parse_path("EN"), parse_path("NNE"))


@pytest.mark.parametrize(
    "lower,upper,expected",
    [
        ("EENN", "NNEE", 6),
        ("EENN", "NENE", 5),
        ("EN", "EN", 1),
    ],
)
def test_enumerate_counts(lower, upper, expected):
    assert len(enumerate_paths(region_from_words(lower, upper))) == expected


def test_enumerate_words_and_order():
    words = [p.word for p in enumerate_paths(region_from_words("EENN", "NENE"))]
    assert words == ["EENN", "ENEN", "ENNE", "NEEN", "NENE"]
    assert words == sorted(words)


def test_intersection_vertices():
    assert intersection_vertices(region_from_words("EENN", "NNEE")) == [(0, 0), (2, 2)]
    assert intersection_vertices(region_from_words("EENN", "NENE")) == [(0, 0), (2, 2)]
    assert len(intersection_vertices(region_from_words("ENEN", "ENEN"))) == 5


@pytest.mark.parametrize(
    "word,area", [("EENN", 0), ("ENEN", 1), ("NENE", 3), ("NNEE", 4)]
)
def test_area_below(word, area):
    assert area_below(parse_path(word)) == area


def test_area_below_matches_box_scan():
    # independent oracle: count boxes under the path directly
    for region in all_regions(6):
        for path in enumerate_paths(region):
            single = Region(parse_path("E" * path.m + "N" * path.r), path)
            assert area_below(path) == len(region_boxes(single))


def test_region_boxes():
    assert region_boxes(region_from_words("EENN", "NNEE")) == (
        Box(1, 1),
        Box(1, 2),
        Box(2, 1),
        Box(2, 2),
    )
    assert region_boxes(region_from_words("EENN", "NENE")) == (
        Box(1, 1),
        Box(2, 1),
        Box(2, 2),
    )
    assert region_boxes(region_from_words("EN", "EN")) == ()


def test_sandwich_property():
    for region in all_regions(5):
        for path in enumerate_paths(region):
            make_region(region.lower, path)
            make_region(path, region.upper)


def test_rectangle_counts_binomial():
    for n in range(1, 11):
        for r in range(n + 1):
            paths = enumerate_paths(rectangle_region(n - r, r))
            assert len(paths) == comb(n, r)


def test_dyck_area_total_matches_closed_form():
    for n in range(1, 8):
        total = sum(area_below(p) for p in enumerate_paths(catalan_region(n)))
        assert total == catalan_edge_formula(n)


def test_region_boxes_monotone_under_widening():
    for region in all_regions(5):
        for wider in all_regions(5):
            if (region.m, region.r) != (wider.m, wider.r):
                continue
            lo_ok = all(
                a <= b
                for a, b in zip(wider.lower.profile, region.lower.profile)
            )
            hi_ok = all(
                a <= b
                for a, b in zip(region.upper.profile, wider.upper.profile)
            )
            if lo_ok and hi_ok:
                assert set(region_boxes(region)) <= set(region_boxes(wider))


def test_region_json_round_trip():
    region = region_from_words("EENN", "NENE")
    assert Region.from_json_dict(region.to_json_dict()) == region
