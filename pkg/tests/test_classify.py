"""A-equivalence decisions and canonical encodings."""

from __future__ import annotations

import itertools

import pytest

import roundfold as rf
from roundfold import RoundFoldDescriptor


def test_clutching_compared_by_absolute_value():
    sp = rf.sphere_page()
    assert rf.a_equivalent(RoundFoldDescriptor(4, sp, 2), RoundFoldDescriptor(4, sp, -2))
    assert not rf.a_equivalent(RoundFoldDescriptor(4, sp, 1), RoundFoldDescriptor(4, sp, 2))
    assert rf.a_equivalent(RoundFoldDescriptor(4, sp, 0), RoundFoldDescriptor(4, sp, 0))


def test_page_decides_higher_dimensions():
    torus, klein = rf.orientable_closed_page(1), rf.klein_page()
    assert not rf.a_equivalent(RoundFoldDescriptor(5, torus), RoundFoldDescriptor(5, klein))
    relabeled = rf.parse_page(rf.serialize_page(torus))
    assert rf.a_equivalent(RoundFoldDescriptor(5, torus), RoundFoldDescriptor(5, relabeled))


def test_different_dimensions_never_equivalent():
    assert not rf.a_equivalent(
        RoundFoldDescriptor(5, rf.disk_page()), RoundFoldDescriptor(6, rf.disk_page())
    )


def test_invalid_descriptor_rejected():
    with pytest.raises(rf.InvalidDescriptorError):
        rf.a_equivalent(
            RoundFoldDescriptor(5, rf.sphere_page(), 1),
            RoundFoldDescriptor(5, rf.sphere_page(), 1),
        )


def _census_descriptors(n, s_max, k_max=2):
    out = []
    for g in rf.enumerate_pages(s_max):
        ks = range(0, k_max + 1) if (n == 4 and rf.is_sphere_page(g)) else (0,)
        out.extend(RoundFoldDescriptor(n, g, k) for k in ks)
    return out


def test_canonical_form_equality_matches_a_equivalence():
    for n in (4, 5):
        ds = _census_descriptors(n, 3)
        for d0, d1 in itertools.combinations_with_replacement(ds, 2):
            assert (rf.canonical_form(d0) == rf.canonical_form(d1)) == rf.a_equivalent(d0, d1)


def test_canonical_form_examples():
    torus = rf.orientable_closed_page(1)
    relabeled = rf.parse_page(rf.serialize_page(torus))
    assert rf.canonical_form(RoundFoldDescriptor(5, torus)) == rf.canonical_form(
        RoundFoldDescriptor(5, relabeled)
    )
    assert rf.canonical_form(RoundFoldDescriptor(5, torus)) != rf.canonical_form(
        RoundFoldDescriptor(5, rf.klein_page())
    )
    sp = rf.sphere_page()
    assert rf.canonical_form(RoundFoldDescriptor(4, sp, 3)) == rf.canonical_form(
        RoundFoldDescriptor(4, sp, -3)
    )


def test_canonical_form_layout():
    enc = rf.canonical_form(RoundFoldDescriptor(4, rf.sphere_page(), -2))
    assert enc.startswith(b"RF1;n=4;k=2;P1;")


def test_equivalence_implies_equal_invariants():
    ds = _census_descriptors(6, 3)
    for d0, d1 in itertools.combinations(ds, 2):
        if rf.a_equivalent(d0, d1):
            assert rf.equivalent(rf.build_total_space(d0), rf.build_total_space(d1))
            assert rf.fold_counts(d0) == rf.fold_counts(d1)
            assert rf.regular_fiber_counts(d0.page) == rf.regular_fiber_counts(d1.page)
            assert rf.surface_type(d0.page) == rf.surface_type(d1.page)


def test_same_manifold_does_not_imply_equivalence():
    # two inequivalent disk-page Morse functions with the same total space
    ds = _census_descriptors(5, 3)
    witnesses = [
        (d0, d1)
        for d0, d1 in itertools.combinations(ds, 2)
        if not rf.a_equivalent(d0, d1)
        and rf.equivalent(rf.build_total_space(d0), rf.build_total_space(d1))
    ]
    assert witnesses
    disk_surface = rf.orientable_surface(0, 1)
    assert any(
        rf.surface_type(d0.page) == disk_surface == rf.surface_type(d1.page)
        for d0, d1 in witnesses
    )


def test_r_equivalent_standard():
    assert rf.r_equivalent_standard(
        RoundFoldDescriptor(5, rf.directed_page(2)), RoundFoldDescriptor(5, rf.annulus_page())
    )
    assert not rf.r_equivalent_standard(
        RoundFoldDescriptor(5, rf.disk_page()), RoundFoldDescriptor(5, rf.sphere_page())
    )
    assert rf.r_equivalent_standard(
        RoundFoldDescriptor(6, rf.orientable_closed_page(1)),
        RoundFoldDescriptor(6, rf.orientable_closed_page(1)),
    )


def test_r_equivalent_standard_warns_at_n4():
    with pytest.warns(UserWarning):
        assert rf.r_equivalent_standard(
            RoundFoldDescriptor(4, rf.sphere_page(), 1), RoundFoldDescriptor(4, rf.sphere_page(), -1)
        )
