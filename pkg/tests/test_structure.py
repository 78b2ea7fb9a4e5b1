from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

import ppcd.diagram as dg
from ppcd.errors import (
    ChordNotInDiagram,
    GenusTooSmall,
    OffsetOutOfRange,
    ParityViolation,
    RangeViolation,
    Unclassifiable,
)
from ppcd.pairings import is_connected
from ppcd.structure import (
    ChordType,
    ChordTypeCounts,
    StructuralLocus,
    build_structural,
    chord_type_counts,
    class_sizes,
    classify_chord,
    has_structural_shape,
    is_admissible,
    valid_loci,
)


def test_chord_type_counts_fixtures():
    assert chord_type_counts(3, 0) == ChordTypeCounts(0, 1, 0)
    assert chord_type_counts(4, -1) == ChordTypeCounts(1, 2, 0)
    assert chord_type_counts(4, 1) == ChordTypeCounts(0, 1, 1)
    assert chord_type_counts(5, 0) == ChordTypeCounts(1, 2, 1)


def test_chord_type_counts_rejects_out_of_range():
    with pytest.raises(RangeViolation):
        chord_type_counts(5, 3)
    with pytest.raises(RangeViolation):
        chord_type_counts(2, 0)
    # range is checked before parity
    with pytest.raises(RangeViolation):
        chord_type_counts(4, 2)
    with pytest.raises(ParityViolation):
        chord_type_counts(5, 1)
    with pytest.raises(ParityViolation):
        chord_type_counts(4, 0)


@given(st.integers(min_value=3, max_value=80), st.data())
def test_chord_type_counts_solve_the_system(genus, data):
    imbalance = data.draw(
        st.integers(min_value=0, max_value=genus - 3).map(
            lambda j: genus - 3 - 2 * j
        )
    )
    counts = chord_type_counts(genus, imbalance)
    assert counts.system_residuals(genus, imbalance) == (0, 0, 0)
    assert counts.alpha >= 0 and counts.beta >= 0 and counts.gamma >= 0


def test_locus_derived_quantities():
    locus = StructuralLocus(7, 2, 1)
    assert locus.near_size == 4
    assert locus.far_size == 2
    assert locus.imbalance == -2
    assert locus.connected is False
    assert StructuralLocus(7, 0, 0).connected is True


def test_valid_loci_counts():
    assert len(valid_loci(3)) == 4
    assert len(valid_loci(5)) == 12
    assert len(valid_loci(5, connected_only=True)) == 8
    assert len(valid_loci(7)) == 20
    assert len(valid_loci(7, connected_only=True)) == 8
    with pytest.raises(GenusTooSmall):
        valid_loci(2)


def test_build_structural_fixtures():
    d = build_structural(3, 0, 0)
    assert d.matching == ((0, 1), (2, 7), (3, 4), (5, 6))
    assert d.puncture_gap == 0

    d = build_structural(4, 0, 0)
    assert d.matching == ((0, 1), (2, 11), (3, 10), (4, 7), (5, 6), (8, 9))
    assert d.puncture_gap == 0

    d = build_structural(3, 2, 0)
    assert d.matching == ((0, 7), (1, 2), (3, 6), (4, 5))
    assert d.puncture_gap == 4


def test_build_structural_rejects_bad_locus():
    with pytest.raises(GenusTooSmall):
        build_structural(2, 0, 0)
    with pytest.raises(OffsetOutOfRange):
        build_structural(4, 0, 2)
    with pytest.raises(RangeViolation):
        build_structural(4, 4, 0)


def test_structural_diagrams_have_the_shape():
    for genus in range(3, 9):
        for locus in valid_loci(genus):
            d = build_structural(locus.genus, locus.region, locus.offset)
            assert has_structural_shape(d)
            assert is_admissible(d) == locus.connected == is_connected(d)


def test_max_chord_placement():
    # the maximal chord lands at (offset, offset+1) shifted into its region
    for genus in (3, 5, 8):
        n = dg.points_count(genus)
        k = genus - 1
        for locus in valid_loci(genus):
            d = build_structural(locus.genus, locus.region, locus.offset)
            a = (locus.offset + locus.region * k) % n
            b = (a + 1) % n
            mx = dg.normalize_chord(a, b)
            assert dg.chord_length(d, mx) == dg.max_possible_length(genus)


def test_shape_rejects_flat_diagram():
    # four length-1 chords, no maximal chord
    d = dg.validate(3, [(0, 7), (1, 2), (3, 4), (5, 6)], 0)
    assert not has_structural_shape(d)
    assert not is_admissible(d)


def test_shape_rejects_short_diagrams():
    d = dg.validate(3, [(0, 3), (1, 2), (4, 7), (5, 6)], 0)
    assert not has_structural_shape(d)


def test_classify_chord_genus_4():
    d = build_structural(4, 0, 0)
    want = {
        (0, 1): ChordType.PARALLEL_TO_MAX,
        (2, 11): ChordType.PARALLEL_TO_MAX,
        (3, 10): ChordType.PARALLEL_TO_MAX,
        (4, 7): ChordType.PARALLEL_TO_NEAR,
        (5, 6): ChordType.PARALLEL_TO_NEAR,
        (8, 9): ChordType.PARALLEL_TO_FAR,
    }
    for chord, kind in want.items():
        assert classify_chord(d, chord) == kind


def test_classify_chord_errors():
    d = build_structural(4, 0, 0)
    with pytest.raises(ChordNotInDiagram):
        classify_chord(d, (0, 3))
    flat = dg.validate(3, [(0, 7), (1, 2), (3, 4), (5, 6)], 0)
    with pytest.raises(Unclassifiable):
        classify_chord(flat, (1, 2))


def test_class_sizes_match_locus():
    for genus in range(3, 11):
        for locus in valid_loci(genus):
            d = build_structural(locus.genus, locus.region, locus.offset)
            sizes = class_sizes(d)
            assert sizes == {
                ChordType.PARALLEL_TO_MAX: genus - 1,
                ChordType.PARALLEL_TO_NEAR: locus.near_size,
                ChordType.PARALLEL_TO_FAR: locus.far_size,
            }


def test_connected_loci_give_distinct_diagrams():
    for genus in (3, 4, 5, 6):
        keys = {
            dg.canonical_key(build_structural(l.genus, l.region, l.offset))
            for l in valid_loci(genus)
        }
        assert len(keys) == len(valid_loci(genus))
