from itertools import combinations

import pytest

from lpmpoly import (
    bases,
    catalan_region,
    components,
    delete,
    enumerate_paths,
    is_basis,
    is_independent,
    presentation,
    region_from_words,
)
from lpmpoly.errors import EmptyFace, WrongCardinality
from lpmpoly.matroid import IntervalPresentation
from lpmpoly.oracle import all_regions, brute_components


def test_presentation_examples():
    assert presentation(region_from_words("EENN", "NNEE")).intervals == ((1, 3), (2, 4))
    assert presentation(region_from_words("EENN", "NENE")).intervals == ((1, 3), (3, 4))
    assert presentation(region_from_words("EN", "EN")).intervals == ((2, 2),)


def test_is_basis_examples():
    square = region_from_words("EENN", "NNEE")
    assert is_basis(square, {1, 3})
    assert not is_basis(region_from_words("EENN", "NENE"), {1, 2})
    assert is_basis(region_from_words("EN", "EN"), {2})
    with pytest.raises(WrongCardinality):
        is_basis(square, {1})


def test_is_independent_examples():
    pres = IntervalPresentation(((1, 3), (2, 4)))
    assert is_independent(pres, {2, 3})
    assert not is_independent(IntervalPresentation(((2, 2),)), {1})
    assert is_independent(IntervalPresentation(((1, 3), (3, 4))), {3})
    assert is_independent(pres, set())


def test_bases_examples():
    vecs = ["".join(map(str, b.coords)) for b in bases(region_from_words("EENN", "NENE"))]
    assert vecs == ["0011", "0101", "0110", "1001", "1010"]
    assert len(list(bases(region_from_words("EENN", "NNEE")))) == 6
    assert [b.coords for b in bases(region_from_words("EN", "EN"))] == [(0, 1)]


def test_basis_iff_independent_full_rank():
    for region in all_regions(8):
        pres = presentation(region)
        supports = {b.support for b in bases(region)}
        for subset in combinations(range(1, region.size + 1), region.r):
            expected = is_independent(pres, subset)
            assert (subset in supports) == expected
            if region.r:
                assert is_basis(region, subset) == expected


def test_independent_iff_subset_of_basis():
    for region in all_regions(6):
        pres = presentation(region)
        supports = [set(b.support) for b in bases(region)]
        for size in range(region.size + 1):
            for subset in combinations(range(1, region.size + 1), size):
                expected = any(set(subset) <= b for b in supports)
                assert is_independent(pres, subset) == expected


def test_basis_exchange():
    for region in all_regions(7):
        support_set = {frozenset(b.support) for b in bases(region)}
        supports = list(support_set)
        for b1 in supports:
            for b2 in supports:
                if b1 == b2:
                    continue
                for x in b1 - b2:
                    assert any(
                        (b1 - {x}) | {y} in support_set for y in b2 - b1
                    ), (region, b1, b2, x)


def test_components_examples():
    square = components(region_from_words("EENN", "NNEE"))
    assert square.count == 1 and square.blocks[0].kind == "block"
    cat = components(catalan_region(3))
    assert [(b.start, b.stop, b.kind) for b in cat.blocks] == [
        (1, 1, "loop"),
        (2, 5, "block"),
        (6, 6, "coloop"),
    ]
    pinched = components(region_from_words("ENEN", "NENE"))
    assert pinched.count >= 2  # paths touch at an interior point


def test_components_match_circuit_oracle():
    for region in all_regions(7):
        blocks = {
            frozenset(range(b.start, b.stop + 1))
            for b in components(region).blocks
        }
        assert blocks == set(brute_components(region))


def test_component_flags():
    for region in all_regions(6):
        supports = [set(b.support) for b in bases(region)]
        for block in components(region).blocks:
            if block.kind == "loop":
                assert all(block.start not in s for s in supports)
            elif block.kind == "coloop":
                assert all(block.start in s for s in supports)
            else:
                assert block.stop > block.start


def test_delete_examples():
    child = delete(region_from_words("EENN", "NNEE"), 1, 0)
    assert len(list(bases(child))) == 3
    child = delete(region_from_words("EN", "EN"), 2, 1)
    assert [b.coords for b in bases(child)] == [(0,)]
    with pytest.raises(EmptyFace):
        delete(region_from_words("EN", "EN"), 1, 1)  # element 1 is a loop


def test_delete_is_filter_and_project():
    for region in all_regions(7):
        if region.size == 1:
            continue
        paths = [p.word for p in enumerate_paths(region)]
        for i in range(1, region.size + 1):
            for value, letter in ((0, "E"), (1, "N")):
                expected = {
                    w[: i - 1] + w[i:] for w in paths if w[i - 1] == letter
                }
                if not expected:
                    with pytest.raises(EmptyFace):
                        delete(region, i, value)
                    continue
                child = delete(region, i, value)
                assert {p.word for p in enumerate_paths(child)} == expected
