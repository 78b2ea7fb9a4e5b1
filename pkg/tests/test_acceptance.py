"""Acceptance gate: the eight headline checks, one pass/fail line each.

Every check prints PASS/FAIL with its measured numbers so the suite
output doubles as a verification report.  Budgets are wall-clock upper
bounds; the assertions fail when either the math or the budget breaks.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from itertools import permutations

import sympy

import ppcd.diagram as dg
from ppcd.counting import COUNT_SERIES, REFERENCE_COUNTS, gf_expand, surface_count
from ppcd.dual_tree import build_dual_tree, leaf_count
from ppcd.enumeration import crosscheck_structural, enumerate_wellformed
from ppcd.errors import UnclassifiableFace
from ppcd.pairings import gcd_connected, is_connected
from ppcd.structure import (
    ChordType,
    build_structural,
    chord_type_counts,
    class_sizes,
    has_structural_shape,
    valid_loci,
)
from ppcd.superposition import (
    FaceKind,
    classify_faces,
    has_type_iv_n_ge_2,
    reduce_bigons,
    superimpose,
)
from ppcd.tubing import component_genera


def _report(n: int, ok: bool, detail: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"{verdict} criterion {n}: {detail}")
    assert ok, detail


def test_criterion_1_closed_form_counts():
    start = time.perf_counter()
    got = tuple(surface_count(g) for g in range(2, 22))
    elapsed = time.perf_counter() - start
    ok = got == REFERENCE_COUNTS and elapsed < 1.0
    _report(
        1,
        ok,
        f"closed-form counts for genus 2..21 match the frozen sequence"
        f" ({elapsed:.3f}s < 1s)",
    )


def test_criterion_2_enumeration_matches_structure():
    known_genus_2 = sorted(
        dg.canonical_key(d) for d in enumerate_wellformed(2)
    )
    genus_2_ok = known_genus_2 == [
        b"g2:0-1,2-3:p0",
        b"g2:0-1,2-3:p1",
        b"g2:0-1,2-3:p2",
        b"g2:0-3,1-2:p0",
        b"g2:0-3,1-2:p1",
        b"g2:0-3,1-2:p3",
    ]

    start = time.perf_counter()
    sizes = {}
    all_equal = True
    for genus in range(3, 7):
        report = crosscheck_structural(genus)
        phi4 = 4 * sum(1 for k in range(1, genus - 1) if math.gcd(k, genus - 1) == 1)
        sizes[genus] = report.connected_count
        if not report.structural_set_equal or report.connected_count != phi4:
            all_equal = False
    elapsed = time.perf_counter() - start

    ok = genus_2_ok and all_equal and elapsed < 60.0
    _report(
        2,
        ok,
        f"genus 2 exhaustive scan gives 6 diagrams; brute-force connected sets"
        f" equal the structural family for genus 3..6 with sizes {sizes}"
        f" ({elapsed:.2f}s < 60s)",
    )


def test_criterion_3_connected_diagram_invariants(connected_corpus):
    violations = 0
    checked = 0
    for genus in range(3, 7):
        ceiling = dg.max_possible_length(genus)
        for d in connected_corpus[genus]:
            checked += 1
            lengths = [dg.chord_length(d, c) for c in d.matching]
            ok = lengths.count(ceiling) == 1
            ok = ok and lengths.count(1) == 2
            ok = ok and all(length % 2 == 1 for length in lengths)
            ok = ok and has_structural_shape(d)
            ok = ok and leaf_count(build_dual_tree(d)) == 3
            if not ok:
                violations += 1
    _report(
        3,
        violations == 0 and checked == 36,
        f"all {checked} connected diagrams for genus 3..6 carry one maximal"
        f" chord, two boundary-straddling length-1 chords, three dual-tree"
        f" leaves, and odd lengths only ({violations} violations)",
    )


def test_criterion_4_gcd_connectivity():
    start = time.perf_counter()
    agreement = True
    for genus in range(3, 51):
        for offset in range(genus - 2):
            want = gcd_connected(genus, offset)
            for region in range(4):
                d = build_structural(genus, region, offset)
                if is_connected(d) != want:
                    agreement = False
    totient_ok = True
    for genus in range(3, 201):
        good = sum(1 for p in range(genus - 2) if gcd_connected(genus, p))
        if good != int(sympy.totient(genus - 1)):
            totient_ok = False
    elapsed = time.perf_counter() - start
    ok = agreement and totient_ok and elapsed < 10.0
    _report(
        4,
        ok,
        f"gcd test matches surface connectivity on every locus for genus"
        f" 3..50 and counts phi(g-1) offsets for genus 3..200"
        f" ({elapsed:.2f}s < 10s)",
    )


def test_criterion_5_residuals_and_class_sizes():
    loci_checked = 0
    bad = 0
    for genus in range(3, 21):
        for locus in valid_loci(genus):
            loci_checked += 1
            counts = chord_type_counts(genus, locus.imbalance)
            ok = counts.system_residuals(genus, locus.imbalance) == (0, 0, 0)
            d = build_structural(locus.genus, locus.region, locus.offset)
            ok = ok and class_sizes(d) == {
                ChordType.PARALLEL_TO_MAX: genus - 1,
                ChordType.PARALLEL_TO_NEAR: locus.near_size,
                ChordType.PARALLEL_TO_FAR: locus.far_size,
            }
            if not ok:
                bad += 1
    _report(
        5,
        bad == 0,
        f"system residuals vanish and chord class sizes match on all"
        f" {loci_checked} structural loci through genus 20 ({bad} bad)",
    )


def test_criterion_6_tubing_genus_bookkeeping(corpus):
    checked = 0
    bad = 0
    for genus, diagrams in corpus.items():
        for d in diagrams:
            checked += 1
            if sum(k - 1 for k in component_genera(d)) != genus - 1:
                bad += 1
    # the full population for genus 2..6 is 300 diagrams, so the check
    # is exhaustive rather than sampled
    _report(
        6,
        bad == 0 and checked == 300,
        f"component genus deficits sum to g-1 on all {checked} well-formed"
        f" diagrams for genus 2..6 ({bad} bad)",
    )


def test_criterion_7_generating_function():
    start = time.perf_counter()
    coeffs = gf_expand(COUNT_SERIES, 30)
    num, den = COUNT_SERIES.numerator, COUNT_SERIES.denominator
    oracle = []
    for k in range(30):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, 4) + 1):
            acc -= den[j] * oracle[k - j]
        oracle.append(acc)
    elapsed = time.perf_counter() - start
    series_ok = list(coeffs) == oracle
    genus_2_ok = coeffs[1] == surface_count(2) == 12
    # flagged, not asserted equal: the series leaves the count sequence here
    divergence = f"c_2={coeffs[2]} vs count(3)={surface_count(3)} (flagged)"
    ok = series_ok and genus_2_ok and coeffs[2] != surface_count(3) and elapsed < 1.0
    _report(
        7,
        ok,
        f"30 series terms match the denominator recurrence, c_1 matches the"
        f" genus-2 count, {divergence} ({elapsed:.3f}s < 1s)",
    )


def test_criterion_8_superposition_faces():
    start = time.perf_counter()
    pair_count = 0
    unclassified = 0
    type_i_bad = 0
    missing_iv = 0
    census: Counter = Counter()
    for genus in (3, 4):
        by_region: dict[int, list] = {}
        for locus in valid_loci(genus, connected_only=True):
            by_region.setdefault(locus.region, []).append(
                build_structural(locus.genus, locus.region, locus.offset)
            )
        for r1, r2 in permutations(sorted(by_region), 2):
            for d1 in by_region[r1]:
                for d2 in by_region[r2]:
                    pair_count += 1
                    s = reduce_bigons(superimpose(d1, d2))
                    try:
                        faces = classify_faces(s)
                    except UnclassifiableFace:
                        unclassified += 1
                        continue
                    census.update(f.kind for f in faces)
                    kinds = [f.kind for f in faces]
                    if kinds.count(FaceKind.TYPE_I) != 1:
                        type_i_bad += 1
                    if not has_type_iv_n_ge_2(s):
                        missing_iv += 1
    elapsed = time.perf_counter() - start
    ok = (
        pair_count == 60
        and unclassified == 0
        and type_i_bad == 0
        and missing_iv == 0
        and elapsed < 30.0
    )
    lens_band = f"lens={census[FaceKind.LENS]}, band={census[FaceKind.BAND]}"
    _report(
        8,
        ok,
        f"all {pair_count} reduced superpositions for genus 3 and 4 classify"
        f" with one puncture region each and a nested crossing family"
        f" ({unclassified} unclassified, {lens_band}, {elapsed:.2f}s < 30s)",
    )
