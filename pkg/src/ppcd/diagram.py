"""Punctured partitioned chord diagrams on the boundary of a disc.

A diagram of genus g lives on a circle carrying N = 4(g-1) marked points,
split into four consecutive regions of g-1 points each.  A perfect
noncrossing matching pairs up the points, and one boundary gap between
cyclically consecutive points holds the puncture.  Each point sits on one
of g-1 spheres; a chord is forbidden when both endpoints lie in a single
region and the puncture does not block sliding it into that region.

Gap k is the boundary arc between point k and point (k+1) mod N.  Faces
are the connected pieces the chords cut the disc into, and each face is
identified by the smallest gap index it touches.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadGapIndex,
    ChordNotInDiagram,
    Crossing,
    GenusTooSmall,
    IntraRegionChord,
    LeafLengthViolation,
    NotPerfect,
    ParityViolation,
    SamePoint,
    SchemaError,
)

Chord = tuple[int, int]

REGIONS = 4


def _check_genus(genus: int) -> None:
    if genus < 2:
        raise GenusTooSmall(f"genus must be at least 2, got {genus}")


def points_count(genus: int) -> int:
    """Number of marked points on the circle, 4(g-1)."""
    _check_genus(genus)
    return 4 * (genus - 1)


def chords_count(genus: int) -> int:
    """Number of chords in a perfect matching, 2(g-1)."""
    _check_genus(genus)
    return 2 * (genus - 1)


def faces_count(genus: int) -> int:
    """Number of faces the chords cut the disc into, 2g-1."""
    _check_genus(genus)
    return 2 * genus - 1


def region_size(genus: int) -> int:
    """Points per region, g-1."""
    _check_genus(genus)
    return genus - 1


def region_of(genus: int, point: int) -> int:
    """Region index 0..3 of a point."""
    return point // region_size(genus)


def slot_of(genus: int, point: int) -> int:
    """Position of a point inside its region, 0..g-2."""
    return point % region_size(genus)


def sphere_index(genus: int, point: int) -> int:
    """Index 1..g-1 of the sphere the point sits on.

    Consecutive regions traverse the sphere chain in opposite directions,
    so odd regions count down where even regions count up.
    """
    s = slot_of(genus, point)
    if region_of(genus, point) % 2 == 0:
        return s + 1
    return region_size(genus) - s


def max_possible_length(genus: int) -> int:
    """Largest length any chord can have, 4g-5."""
    _check_genus(genus)
    return 4 * genus - 5


def distance(genus: int, b1: int, b2: int) -> int:
    """Fewest base points strictly between two points, over both arcs."""
    if b1 == b2:
        raise SamePoint(f"distance from point {b1} to itself is undefined")
    n = points_count(genus)
    one_way = (b2 - b1 - 1) % n
    return min(one_way, n - 2 - one_way)


def normalize_chord(a: int, b: int) -> Chord:
    """Order a chord's endpoints; reject degenerate chords."""
    if a == b:
        raise SamePoint(f"chord joins point {a} to itself")
    return (a, b) if a < b else (b, a)


def window(chord: Chord) -> range:
    """Gaps cut off by a chord (a, b) with a < b: gaps a..b-1."""
    a, b = chord
    return range(a, b)


def gap_in_window(chord: Chord, gap: int) -> bool:
    a, b = chord
    return a <= gap < b


def is_intra_region_isotopic(genus: int, chord: Chord, puncture_gap: int) -> bool:
    """Whether a chord could slide off into a single region's sphere.

    True iff both endpoints share a region and every point on the chord's
    puncture-free side stays inside that region.  With both endpoints in
    one region the short side is always inside it, so the chord is pinned
    exactly when the puncture sits in the short side's gap window.
    """
    a, b = normalize_chord(chord[0], chord[1])
    if region_of(genus, a) != region_of(genus, b):
        return False
    return not gap_in_window((a, b), puncture_gap)


@dataclass(frozen=True)
class Diagram:
    """A validated diagram: genus, sorted matching, canonical puncture gap.

    Build one through validate() or from_json(); the helper functions in
    this module assume the invariants those constructors enforce.
    """

    genus: int
    matching: tuple[Chord, ...]
    puncture_gap: int

    @property
    def points(self) -> int:
        return 4 * (self.genus - 1)


def _sweep(n: int, matching: Sequence[Chord]) -> tuple[list[Chord | None], dict[Chord, Chord | None]]:
    """One pass over the circle: innermost chord per gap, parent per chord.

    The parent of a chord is the innermost chord whose window strictly
    contains its window, or None at top level.  Raises Crossing when the
    matching is not noncrossing.
    """
    opens: dict[int, Chord] = {}
    closes: dict[int, Chord] = {}
    for c in matching:
        opens[c[0]] = c
        closes[c[1]] = c
    innermost: list[Chord | None] = [None] * n
    parent: dict[Chord, Chord | None] = {}
    stack: list[Chord] = []
    for x in range(n):
        if x in closes:
            c = closes[x]
            if not stack or stack[-1] != c:
                raise Crossing(f"chord {c} crosses chord {stack[-1] if stack else None}")
            stack.pop()
        if x in opens:
            c = opens[x]
            parent[c] = stack[-1] if stack else None
            stack.append(c)
        innermost[x] = stack[-1] if stack else None
    return innermost, parent


def _innermost_gaps(d: Diagram) -> list[Chord | None]:
    innermost, _ = _sweep(d.points, d.matching)
    return innermost


def chord_parents(d: Diagram) -> dict[Chord, Chord | None]:
    """Nesting forest of the matching: chord to enclosing chord or None."""
    _, parent = _sweep(d.points, d.matching)
    return parent


def faces(d: Diagram) -> dict[int, tuple[int, ...]]:
    """All faces as {face id: gaps}, face id being the smallest gap."""
    innermost = _innermost_gaps(d)
    by_chord: dict[Chord | None, list[int]] = {}
    for gap, c in enumerate(innermost):
        by_chord.setdefault(c, []).append(gap)
    return {min(gaps): tuple(gaps) for gaps in by_chord.values()}


def face_of_gap(d: Diagram, gap: int) -> int:
    """Face id of the face whose boundary contains the given gap."""
    if not 0 <= gap < d.points:
        raise BadGapIndex(f"gap {gap} outside 0..{d.points - 1}")
    innermost = _innermost_gaps(d)
    target = innermost[gap]
    return min(g for g, c in enumerate(innermost) if c == target)


def puncture_face(d: Diagram) -> int:
    return face_of_gap(d, d.puncture_gap)


def validate(genus: int, matching: Iterable[Sequence[int]], puncture_gap: int) -> Diagram:
    """Check all diagram rules and return the canonical Diagram.

    Rules: the matching is perfect and noncrossing, and every chord with
    both endpoints in one region has the puncture inside its window
    (otherwise the chord could slide off into that region's sphere).
    The stored puncture gap is the id of the face holding the puncture,
    so equal diagrams compare equal.
    """
    _check_genus(genus)
    n = points_count(genus)
    if not 0 <= puncture_gap < n:
        raise BadGapIndex(f"puncture gap {puncture_gap} outside 0..{n - 1}")
    chords = tuple(sorted(normalize_chord(a, b) for a, b in matching))
    endpoints = sorted(p for c in chords for p in c)
    if endpoints != list(range(n)):
        raise NotPerfect(f"matching endpoints {endpoints} do not cover 0..{n - 1} once each")
    innermost, _ = _sweep(n, chords)
    for c in chords:
        if is_intra_region_isotopic(genus, c, puncture_gap):
            raise IntraRegionChord(f"chord {c} can be isotoped into region {region_of(genus, c[0])}")
    target = innermost[puncture_gap]
    canonical_gap = min(g for g, c in enumerate(innermost) if c == target)
    return Diagram(genus, chords, canonical_gap)


def _require_chord(d: Diagram, chord: Sequence[int]) -> Chord:
    c = normalize_chord(chord[0], chord[1])
    if c not in d.matching:
        raise ChordNotInDiagram(f"chord {c} not in diagram")
    return c


def chord_length(d: Diagram, chord: Sequence[int]) -> int:
    """Length of a chord: points strictly on its puncture-free side, plus one.

    The puncture pins the chord away from its own side, so the side
    without the puncture is the one the chord can be pushed across.
    """
    c = _require_chord(d, chord)
    a, b = c
    inside = b - a - 1
    if gap_in_window(c, d.puncture_gap):
        length = (d.points - 2 - inside) + 1
    else:
        length = inside + 1
    if length % 2 == 0:
        raise ParityViolation(f"chord {c} has even length {length}")
    if length > max_possible_length(d.genus):
        raise LeafLengthViolation(f"chord {c} has length {length} > {max_possible_length(d.genus)}")
    return length


def are_parallel(d: Diagram, chord1: Sequence[int], chord2: Sequence[int]) -> bool:
    """Whether two chords of the diagram cobound an untwisted band.

    Operationally: of the four boundary arcs between the sorted endpoints,
    exactly two connect one chord to the other, and the chords are
    parallel exactly when those two arcs enclose equally many points.
    A chord is parallel to itself.
    """
    c1 = _require_chord(d, chord1)
    c2 = _require_chord(d, chord2)
    if c1 == c2:
        return True
    owner = {c1[0]: 1, c1[1]: 1, c2[0]: 2, c2[1]: 2}
    pts = sorted(owner)
    mixed_counts = []
    for i in range(4):
        x, y = pts[i], pts[(i + 1) % 4]
        if owner[x] != owner[y]:
            mixed_counts.append((y - x - 1) % d.points)
    assert len(mixed_counts) == 2
    return mixed_counts[0] == mixed_counts[1]


def canonical_key(d: Diagram) -> bytes:
    """Stable byte key identifying the diagram, usable for sorting and dedup."""
    body = ",".join(f"{a}-{b}" for a, b in d.matching)
    return f"g{d.genus}:{body}:p{d.puncture_gap}".encode("ascii")


def to_dict(d: Diagram) -> dict:
    return {
        "genus": d.genus,
        "matching": [[a, b] for a, b in d.matching],
        "puncture_gap": d.puncture_gap,
    }


def to_json(d: Diagram) -> str:
    return json.dumps(to_dict(d), separators=(",", ": "))


_KEYS = {"genus", "matching", "puncture_gap"}


def _plain_int(x: object) -> bool:
    return type(x) is int


def from_dict(obj: object) -> Diagram:
    """Parse and validate one diagram from decoded JSON; strict about shape."""
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}")
    if set(obj) != _KEYS:
        raise SchemaError(f"expected keys {sorted(_KEYS)}, got {sorted(obj)}")
    if not _plain_int(obj["genus"]) or not _plain_int(obj["puncture_gap"]):
        raise SchemaError("genus and puncture_gap must be integers")
    matching = obj["matching"]
    if not isinstance(matching, list):
        raise SchemaError("matching must be a list of point pairs")
    for pair in matching:
        if not isinstance(pair, list) or len(pair) != 2 or not all(_plain_int(p) for p in pair):
            raise SchemaError(f"bad chord entry {pair!r}: want [a, b] with integer points")
    return validate(obj["genus"], [tuple(p) for p in matching], obj["puncture_gap"])


def from_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except ValueError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_dict(obj)
