"""Structural diagrams: the parametric family behind every connected diagram.

Each structural diagram is determined by a region (where the maximal
chord sits) and an offset p in [0, g-3] (where inside that region).  It
consists of one maximal stack of g-1 mutually parallel chords and two
short stacks of sizes u = g-2-p and v = p+1 seeded by the two length-1
chords.  The stack imbalance i = v - u controls the family counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import diagram as dg
from .diagram import Chord, Diagram
from .dual_tree import build_dual_tree, leaf_count
from .errors import (
    GenusTooSmall,
    OffsetOutOfRange,
    ParityViolation,
    RangeViolation,
    Unclassifiable,
)
from .pairings import gcd_connected, is_connected


@dataclass(frozen=True)
class ChordTypeCounts:
    """Sizes of the three non-anchor chord families."""

    alpha: int
    beta: int
    gamma: int

    def system_residuals(self, genus: int, imbalance: int) -> tuple[int, int, int]:
        """Residuals of the linear system the counts must satisfy."""
        return (
            self.alpha + self.beta - (genus - 2 - imbalance),
            self.alpha + self.gamma - (genus - 3),
            self.beta + self.gamma - (genus - 2),
        )


def chord_type_counts(genus: int, imbalance: int) -> ChordTypeCounts:
    """Solve the family-count system for a given genus and stack imbalance.

    The imbalance must have the parity of g-3 and lie in [-(g-3), g-3];
    outside that window some family would need a negative size.
    """
    if genus < 3 or abs(imbalance) > genus - 3:
        raise RangeViolation(f"imbalance {imbalance} outside range for genus {genus}")
    if (imbalance - (genus - 3)) % 2 != 0:
        raise ParityViolation(f"imbalance {imbalance} has wrong parity for genus {genus}")
    alpha = (genus - 3 - imbalance) // 2
    beta = (genus - 1 - imbalance) // 2
    gamma = (genus - 3 + imbalance) // 2
    return ChordTypeCounts(alpha, beta, gamma)


@dataclass(frozen=True)
class StructuralLocus:
    """One admissible placement: a region for the maximal chord, an offset."""

    genus: int
    region: int
    offset: int

    @property
    def near_size(self) -> int:
        return self.genus - 2 - self.offset

    @property
    def far_size(self) -> int:
        return self.offset + 1

    @property
    def imbalance(self) -> int:
        return self.far_size - self.near_size

    @property
    def connected(self) -> bool:
        return gcd_connected(self.genus, self.offset)


def valid_loci(genus: int, connected_only: bool = False) -> tuple[StructuralLocus, ...]:
    """All loci at a genus: 4(g-2) in total, 4*phi(g-1) connected."""
    if genus < 3:
        raise GenusTooSmall(f"structural diagrams need genus >= 3, got {genus}")
    out = []
    for region in range(dg.REGIONS):
        for offset in range(genus - 2):
            locus = StructuralLocus(genus, region, offset)
            if connected_only and not locus.connected:
                continue
            out.append(locus)
    return tuple(out)


def build_structural(genus: int, region: int, offset: int) -> Diagram:
    """Construct the structural diagram at a locus.

    Laid out in region 0 and rotated into place: the maximal chord
    (offset, offset+1) with the puncture between its feet, its stack of
    g-2 parallels nested around it, and the two short stacks seeded at
    the far side of the circle.
    """
    if genus < 3:
        raise GenusTooSmall(f"structural diagrams need genus >= 3, got {genus}")
    if not 0 <= offset <= genus - 3:
        raise OffsetOutOfRange(f"offset {offset} outside 0..{genus - 3} for genus {genus}")
    if not 0 <= region < dg.REGIONS:
        raise RangeViolation(f"region {region} outside 0..{dg.REGIONS - 1}")

    n = dg.points_count(genus)
    chords: list[Chord] = [(offset, offset + 1)]
    for t in range(1, genus - 1):
        chords.append(((offset - t) % n, (offset + 1 + t) % n))

    near_anchor = 2 * genus - 3
    far_anchor = 3 * genus - 4
    chords.append((near_anchor, near_anchor + 1))
    chords.append((far_anchor, far_anchor + 1))
    for s in range(1, genus - 2 - offset):
        chords.append((near_anchor - s, near_anchor + 1 + s))
    for s in range(1, offset + 1):
        chords.append((far_anchor - s, far_anchor + 1 + s))

    shift = region * dg.region_size(genus)
    shifted = [((a + shift) % n, (b + shift) % n) for a, b in chords]
    return dg.validate(genus, shifted, (offset + shift) % n)


def _chords_by_length(d: Diagram) -> tuple[list[Chord], list[Chord]]:
    ceiling = dg.max_possible_length(d.genus)
    maxes, ones = [], []
    for c in d.matching:
        length = dg.chord_length(d, c)
        if length == ceiling:
            maxes.append(c)
        elif length == 1:
            ones.append(c)
    return maxes, ones


def has_structural_shape(d: Diagram) -> bool:
    """Shape half of admissibility, connectivity not required.

    One maximal chord, two length-1 chords straddling distinct region
    boundaries away from the maximal chord's region, three leaves in
    the dual tree.
    """
    maxes, ones = _chords_by_length(d)
    if len(maxes) != 1 or len(ones) != 2:
        return False
    g = d.genus
    max_regions = {dg.region_of(g, p) for p in maxes[0]}
    for c in ones:
        regs = {dg.region_of(g, p) for p in c}
        if len(regs) != 2 or regs & max_regions:
            return False
    return leaf_count(build_dual_tree(d)) == 3


def is_admissible(d: Diagram) -> bool:
    """Whether the diagram has structural shape and glues up connected."""
    return has_structural_shape(d) and is_connected(d)


class ChordType(Enum):
    PARALLEL_TO_MAX = "max"
    PARALLEL_TO_NEAR = "near"
    PARALLEL_TO_FAR = "far"


def _anchors(d: Diagram) -> tuple[Chord, Chord, Chord]:
    """The maximal chord plus the near and far length-1 chords.

    Near touches the region one step past the maximal chord's, far the
    region one step before; both straddle boundaries of the opposite
    region, so the labels never collide.
    """
    maxes, ones = _chords_by_length(d)
    mx = maxes[0]
    r = dg.region_of(d.genus, mx[0])
    near = far = None
    for c in ones:
        regs = {dg.region_of(d.genus, p) for p in c}
        if (r + 1) % dg.REGIONS in regs:
            near = c
        if (r + 3) % dg.REGIONS in regs:
            far = c
    if near is None or far is None or near == far:
        raise Unclassifiable(f"cannot anchor length-1 chords of {d.matching}")
    return mx, near, far


def classify_chord(d: Diagram, chord: Chord) -> ChordType:
    """Assign a chord to the unique anchor it is parallel to."""
    if not has_structural_shape(d):
        raise Unclassifiable("diagram lacks structural shape")
    dg._require_chord(d, chord)
    mx, near, far = _anchors(d)
    hits = [
        kind
        for kind, anchor in (
            (ChordType.PARALLEL_TO_MAX, mx),
            (ChordType.PARALLEL_TO_NEAR, near),
            (ChordType.PARALLEL_TO_FAR, far),
        )
        if dg.are_parallel(d, chord, anchor)
    ]
    if len(hits) != 1:
        raise Unclassifiable(f"chord {chord} parallel to {len(hits)} anchors")
    return hits[0]


def class_sizes(d: Diagram) -> dict[ChordType, int]:
    sizes = {kind: 0 for kind in ChordType}
    for c in d.matching:
        sizes[classify_chord(d, c)] += 1
    return sizes
