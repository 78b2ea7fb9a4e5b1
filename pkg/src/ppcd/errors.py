"""Exception hierarchy for diagram validation and downstream operations.

Every rejection carries a distinct class so callers (and tests) can pin
down exactly which rule fired.
"""

from __future__ import annotations


class PpcdError(Exception):
    """Base class for all package errors."""


class SchemaError(PpcdError):
    """Serialized diagram violates the interchange schema."""


class GenusTooSmall(PpcdError):
    """Genus below 2: no diagram points exist."""


class NotPerfect(PpcdError):
    """Matching does not pair every point exactly once."""


class SamePoint(PpcdError):
    """A chord joins a point to itself."""


class Crossing(PpcdError):
    """Two chords cross inside the disc."""


class IntraRegionChord(PpcdError):
    """A chord inside one region can be isotoped off the sphere."""


class BadGapIndex(PpcdError):
    """Puncture gap index outside 0..N-1."""


class ChordNotInDiagram(PpcdError):
    """Chord argument is not part of the diagram's matching."""


class LeafLengthViolation(PpcdError):
    """Chord length exceeds the 4g-5 ceiling."""


class ParityViolation(PpcdError):
    """Chord length is even, which the point count forbids."""


class RangeViolation(PpcdError):
    """Derived quantity fell outside its admissible interval."""


class OffsetOutOfRange(PpcdError):
    """Structural construction offset outside 0..g-3."""


class IntervalOutOfRange(PpcdError):
    """Requested index interval is empty or out of bounds."""


class Unclassifiable(PpcdError):
    """Chord is parallel to none, or to more than one, anchor chord."""


class NonPositive(PpcdError):
    """Argument must be a positive integer."""


class TooFewTangles(PpcdError):
    """Tangle count too small for any closed essential curve."""


class NotExpandable(PpcdError):
    """Series coefficient index below the first computed term."""


class GenusMismatch(PpcdError):
    """Two diagrams to be superimposed have different genus."""


class NotAdmissible(PpcdError):
    """Diagram fails the admissibility test required for this operation."""


class UnclassifiableFace(PpcdError):
    """A face of the superimposed diagram fits no known shape."""
