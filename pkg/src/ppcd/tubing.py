"""Tubing descriptions: from a diagram to the surface it encodes.

Each chord becomes a tube joining two punctures of the 4-punctured
spheres stacked between the tangles.  A point's sphere is read off its
position inside its region, a point's arc is its region, and tube
nesting depth follows chord length so longer tubes run inside shorter
ones.  Component genera come from the orbit partition of the spheres.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import diagram as dg
from .diagram import Chord, Diagram
from .errors import RangeViolation
from .pairings import sc_components


@dataclass(frozen=True)
class Tube:
    chord: Chord
    from_sphere: int
    from_arc: int
    to_sphere: int
    to_arc: int
    nesting_depth: int


@dataclass(frozen=True)
class TubingDescription:
    """One of the two surfaces a diagram encodes.

    sc_choice picks which of the two incompressible 4-punctured spheres
    the tubes run along; the combinatorics are identical either way.
    """

    genus: int
    sc_choice: int
    spheres: tuple[int, ...]
    tubes: tuple[Tube, ...]


def build_tubing(d: Diagram, sc_choice: int) -> TubingDescription:
    """Tubes for every chord, deepest nesting to the longest chord."""
    if sc_choice not in (0, 1):
        raise RangeViolation(f"sphere choice must be 0 or 1, got {sc_choice}")
    by_depth = sorted(
        d.matching, key=lambda c: (-dg.chord_length(d, c), c[0])
    )
    depth_of = {c: len(by_depth) - i for i, c in enumerate(by_depth)}
    tubes = []
    for a, b in d.matching:
        tubes.append(
            Tube(
                chord=(a, b),
                from_sphere=dg.sphere_index(d.genus, a),
                from_arc=dg.region_of(d.genus, a),
                to_sphere=dg.sphere_index(d.genus, b),
                to_arc=dg.region_of(d.genus, b),
                nesting_depth=depth_of[(a, b)],
            )
        )
    return TubingDescription(
        genus=d.genus,
        sc_choice=sc_choice,
        spheres=tuple(range(1, dg.region_size(d.genus) + 1)),
        tubes=tuple(tubes),
    )


def component_genera(d: Diagram) -> tuple[int, ...]:
    """Genus of each glued component, largest first.

    A class of n spheres tubed in a cycle closes into a surface of
    genus n + 1; the genus deficits over all classes add back up to
    g - 1, the Euler bookkeeping the counts rest on.
    """
    parts = sc_components(d)
    return tuple(sorted((len(cls) + 1 for cls in parts.classes), reverse=True))


def to_dict(t: TubingDescription) -> dict:
    return asdict(t)


def to_json(t: TubingDescription) -> str:
    return json.dumps(to_dict(t), separators=(",", ": "))
