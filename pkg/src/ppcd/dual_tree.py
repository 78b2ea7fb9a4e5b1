"""Face-adjacency tree of a diagram.

Faces of a diagram are the connected gap groups left once every chord is
drawn; two faces are adjacent when a single chord separates them.  The
resulting graph is a tree because the chords are non-crossing.  The tree
is rooted at the face holding the puncture, and its leaves pin down the
extremal chords: every chord on a leaf edge has length 1 or 4g-5.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import diagram as dg
from .diagram import Chord, Diagram
from .errors import LeafLengthViolation


@dataclass(frozen=True)
class DualTree:
    """Rooted tree whose vertices are face ids and edges carry chords."""

    root: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, Chord], ...]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def leaves(self) -> tuple[int, ...]:
        """Vertices of degree 1, the root included like any other vertex."""
        adj = self.adjacency()
        return tuple(v for v in self.vertices if len(adj[v]) == 1)


def tree_from_matching(
    n_points: int, matching: Sequence[Chord], puncture_gap: int
) -> DualTree:
    """Build the face tree from raw matching data.

    Face ids are the smallest gap index inside each face.  Each chord
    joins its own face (the face hugging it from outside) to its
    parent chord's face, or to the face of the outermost gaps when it
    has no parent.
    """
    innermost, parent = dg._sweep(n_points, matching)

    outer_face = min(g for g in range(n_points) if innermost[g] is None)
    face_of_gap: dict[int, int] = {}
    for gap in range(n_points):
        c = innermost[gap]
        face_of_gap[gap] = c[0] if c is not None else outer_face

    vertices = tuple(sorted(set(face_of_gap.values())))
    edges = []
    for c in matching:
        p = parent[c]
        upper = p[0] if p is not None else outer_face
        edges.append((c[0], upper, c))

    root = face_of_gap[puncture_gap]
    return DualTree(root, vertices, tuple(edges))


def build_dual_tree(d: Diagram) -> DualTree:
    return tree_from_matching(d.points, d.matching, d.puncture_gap)


def leaf_count(t: DualTree) -> int:
    return len(t.leaves())


def leaf_chords(d: Diagram) -> tuple[Chord, ...]:
    """Chords sitting on leaf edges of the dual tree.

    Such a chord cuts off a face met by no other chord, which forces its
    length to one of the two extremes; any other length is an invariant
    breach and raises.
    """
    t = build_dual_tree(d)
    leaf_set = set(t.leaves())
    out = []
    for a, b, c in t.edges:
        if a in leaf_set or b in leaf_set:
            out.append(c)
    out = sorted(set(out))
    ceiling = dg.max_possible_length(d.genus)
    for c in out:
        length = dg.chord_length(d, c)
        if length not in (1, ceiling):
            raise LeafLengthViolation(
                f"leaf chord {c} has length {length}, expected 1 or {ceiling}"
            )
    return tuple(out)


def to_dot(t: DualTree) -> str:
    """GraphViz rendering; the root face is drawn with a double circle."""
    lines = ["graph dual_tree {"]
    for v in t.vertices:
        shape = "doublecircle" if v == t.root else "circle"
        lines.append(f'  f{v} [shape={shape} label="{v}"];')
    for a, b, (x, y) in t.edges:
        lines.append(f'  f{a} -- f{b} [label="{x}-{y}"];')
    lines.append("}")
    return "\n".join(lines)
