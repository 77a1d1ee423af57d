"""Triangulated discs: curvature audit, enumeration, isomorphism."""

import pytest

from cox245.discs import (
    CapExceeded,
    InvalidDisc,
    TriDisc,
    canonical_form,
    curvature_profile,
    enumerate_discs,
    is_isomorphic,
    p8_disc,
    p10_disc,
    wheel_disc,
)


def test_single_triangle_profile():
    d = TriDisc((0, 1, 2), ((0, 1, 2),))
    p = curvature_profile(d)
    assert p.interior == {}
    assert p.boundary == {0: 2, 1: 2, 2: 2}
    assert p.total == 6


def test_hexagonal_wheel_profile():
    p = curvature_profile(wheel_disc(6))
    assert p.interior == {6: 0}
    assert set(p.boundary.values()) == {1}


def test_p8_profile():
    p = curvature_profile(p8_disc())
    assert p.interior == {8: -2}
    assert sum(p.boundary.values()) == 8


def test_p10_profile():
    d = p10_disc()
    p = curvature_profile(d)
    assert sorted(p.interior.values()) == [0, 0]
    assert sorted(p.boundary.values()) == [0, 0, 1, 1, 1, 1, 1, 1]
    assert len(d.triangles) == 10


def test_validation_rejects_garbage():
    with pytest.raises(InvalidDisc):
        TriDisc((0, 1, 2), ((0, 1, 2), (0, 1, 2)))  # repeated triangle
    with pytest.raises(InvalidDisc):
        TriDisc((0, 1, 2, 3), ((0, 1, 2),))  # boundary edge uncovered
    with pytest.raises(InvalidDisc):
        # two triangles glued along all three edges: a sphere, not a disc
        TriDisc((0, 1, 2), ((0, 1, 2), (0, 2, 1)))


def test_isomorphism_respects_marked_boundary():
    w = wheel_disc(8)
    rotated = TriDisc(tuple(range(8)), tuple(((i + 3) % 8, (i + 4) % 8, 8) for i in range(8)))
    assert is_isomorphic(w, rotated)
    assert not is_isomorphic(p8_disc(), p10_disc())
    assert not is_isomorphic(TriDisc((0, 1, 2), ((0, 1, 2),)), wheel_disc(3))


def test_enumerate_boundary3():
    out = enumerate_discs(3, 1)
    assert len(out) == 1
    assert is_isomorphic(out[0], TriDisc((0, 1, 2), ((0, 1, 2),)))


def test_enumerate_square():
    out = enumerate_discs(4, 2)
    # two labeled fans, one isomorphism class
    assert len(out) == 1
    out = enumerate_discs(4, 4)
    assert any(len(d.triangles) == 4 for d in out)  # the coned square appears


def test_hexagon_wheel_unique():
    out = enumerate_discs(6, 8, locally_6_large=True, forbid_boundary_chords=True)
    assert len(out) == 1
    assert is_isomorphic(out[0], wheel_disc(6))


def test_octagon_classification():
    out = enumerate_discs(8, 10, locally_6_large=True, min_boundary_angle=2,
                          forbid_boundary_chords=True)
    assert len(out) == 2
    assert is_isomorphic(out[0], p8_disc())
    assert is_isomorphic(out[1], p10_disc())


def test_gauss_bonnet_over_enumeration():
    for boundary, cap in ((3, 5), (4, 6), (5, 7), (6, 8)):
        for d in enumerate_discs(boundary, cap):
            assert curvature_profile(d).total == 6


def test_enumeration_constraint_monotonicity():
    relaxed = {canonical_form(d) for d in enumerate_discs(6, 8)}
    strict = enumerate_discs(6, 8, locally_6_large=True, forbid_boundary_chords=True)
    assert all(canonical_form(d) in relaxed for d in strict)
    mid = enumerate_discs(6, 8, forbid_boundary_chords=True)
    assert {canonical_form(d) for d in strict} <= {canonical_form(d) for d in mid} <= relaxed


def test_enumeration_closed_under_refilter():
    out = enumerate_discs(6, 8, locally_6_large=True, forbid_boundary_chords=True)
    for d in out:
        prof = curvature_profile(d)
        assert all(6 - k >= 0 or True for k in prof.interior.values())
        assert all(d.angle(v) >= 6 for v in d.interior_vertices)
        edges = d.edges()
        b = len(d.boundary)
        for (x, y) in edges:
            if x < b and y < b:
                assert (x - y) % b in (1, b - 1)


def test_enumeration_duplicate_free():
    out = enumerate_discs(6, 8)
    keys = [canonical_form(d) for d in out]
    assert len(keys) == len(set(keys))


def test_caps_enforced():
    with pytest.raises(CapExceeded):
        enumerate_discs(13, 10)
    with pytest.raises(CapExceeded):
        enumerate_discs(6, 20)
    with pytest.raises(ValueError):
        enumerate_discs(2, 4)


def test_serialization_golden_wheel():
    text = wheel_disc(6).to_text()
    assert text == (
        "7 12 6 6\n"
        "0 1 2 3 4 5\n"
        "0 1 6\n"
        "0 5 6\n"
        "1 2 6\n"
        "2 3 6\n"
        "3 4 6\n"
        "4 5 6\n"
    )
    # serialization is canonical: any rotation prints identically
    rotated = TriDisc(tuple(range(6)), tuple(((i + 2) % 6, (i + 3) % 6, 6) for i in range(6)))
    assert rotated.to_text() == text
