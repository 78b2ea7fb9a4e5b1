"""Interval pairings, pseudogroup orbits, and surface connectivity.

A pairing identifies one integer interval with another, either preserving
or reversing order.  The orbits of the pseudogroup generated by a family
of pairings partition the ground set; for a diagram built around one
maximal chord stack and two short stacks of sizes u and v, the orbits of
the induced pairings on [1, u+v] count the components of the glued
surface, and that count equals gcd(u, v).

sc_components computes the same partition directly from a diagram by
union-find over the sphere indices its chords join.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram, region_size, sphere_index
from .errors import IntervalOutOfRange, OffsetOutOfRange


@dataclass(frozen=True)
class Pairing:
    """Order-preserving or order-reversing bijection between two intervals."""

    domain: tuple[int, int]
    codomain: tuple[int, int]
    reversing: bool

    def __post_init__(self) -> None:
        a, b = self.domain
        c, d = self.codomain
        if a > b or c > d or (b - a) != (d - c):
            raise IntervalOutOfRange(f"bad pairing intervals {self.domain} -> {self.codomain}")

    def apply(self, x: int) -> int:
        a, b = self.domain
        c, d = self.codomain
        if not a <= x <= b:
            raise IntervalOutOfRange(f"{x} outside pairing domain [{a}, {b}]")
        return d - (x - a) if self.reversing else c + (x - a)

    def inverse(self) -> "Pairing":
        return Pairing(self.codomain, self.domain, self.reversing)

    def pairs(self) -> list[tuple[int, int]]:
        a, b = self.domain
        return [(x, self.apply(x)) for x in range(a, b + 1)]


@dataclass(frozen=True)
class OrbitPartition:
    """Finest partition of [1, n] closed under a pairing family."""

    n: int
    classes: tuple[tuple[int, ...], ...]

    def class_count(self) -> int:
        return len(self.classes)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.root = list(range(n + 1))

    def find(self, x: int) -> int:
        while self.root[x] != x:
            self.root[x] = self.root[self.root[x]]
            x = self.root[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.root[max(ra, rb)] = min(ra, rb)

    def partition(self, n: int) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for i in range(1, n + 1):
            groups.setdefault(self.find(i), []).append(i)
        return tuple(sorted(tuple(g) for g in groups.values()))


def orbits(pairings: Iterable[Pairing], n: int) -> OrbitPartition:
    """Orbit partition of [1, n] under a pairing family and its inverses.

    Each x in a pairing's domain is identified with its image; the
    pseudogroup closure is exactly the union-find closure of those pairs.
    """
    uf = _UnionFind(n)
    for p in pairings:
        for lo, hi in (p.domain, p.codomain):
            if lo < 1 or hi > n:
                raise IntervalOutOfRange(f"interval [{lo}, {hi}] outside [1, {n}]")
        for x, y in p.pairs():
            uf.union(x, y)
    return OrbitPartition(n, uf.partition(n))


def stack_pairings(u: int, v: int) -> list[Pairing]:
    """The three pairing families induced by the two short chord stacks.

    The u-stack and v-stack each fold their span back on itself (order
    reversing); the maximal stack carries the leftover indices across in
    order.  Ground set is [1, u+v].
    """
    if u < 1 or v < 1:
        raise IntervalOutOfRange(f"stack sizes must be positive, got u={u}, v={v}")
    fams = []
    # fold through the v-stack: x + image = 2v + 1
    lo = max(1, v - u + 1)
    fams.append(Pairing((lo, v), (v + 1, 2 * v + 1 - lo), reversing=True))
    # fold through the u-stack: x + image = 2u + 1
    lo = max(1, u - v + 1)
    fams.append(Pairing((lo, u), (u + 1, 2 * u + 1 - lo), reversing=True))
    # carry across the maximal stack; empty when u == v
    if v > u:
        fams.append(Pairing((1, v - u), (2 * u + 1, u + v), reversing=False))
    elif u > v:
        fams.append(Pairing((1, u - v), (2 * v + 1, u + v), reversing=False))
    return fams


def stack_orbits(u: int, v: int) -> OrbitPartition:
    return orbits(stack_pairings(u, v), u + v)


def sc_components(d: Diagram) -> OrbitPartition:
    """Partition of the sphere indices 1..g-1 into chord-connected groups.

    A chord joining points on two different spheres glues those spheres;
    the classes are the connected pieces of the glued-up union, one
    closed surface component per class.
    """
    k = region_size(d.genus)
    uf = _UnionFind(k)
    for a, b in d.matching:
        uf.union(sphere_index(d.genus, a), sphere_index(d.genus, b))
    return OrbitPartition(k, uf.partition(k))


def is_connected(d: Diagram) -> bool:
    """Whether the chords glue all g-1 spheres into one surface."""
    return sc_components(d).class_count() == 1


def gcd_connected(genus: int, offset: int) -> bool:
    """Coprimality test for connectivity of the structural diagram.

    With v = offset+1 and u = g-2-offset the glued surface is connected
    iff gcd(u, v) = 1, equivalently gcd(offset+1, g-1) = 1.
    """
    if genus < 3 or not 0 <= offset <= genus - 3:
        raise OffsetOutOfRange(f"offset {offset} outside 0..{genus - 3} for genus {genus}")
    return math.gcd(offset + 1, genus - 1) == 1
