"""Closed-form surface counts and the rational generating function.

The count of closed essential surfaces of genus g in a Montesinos knot
complement with 4 rational tangles is 12 at genus 2 and 8*phi(g-1)
afterwards: 4*phi(g-1) connected diagrams, times 2 for the choice of
4-punctured sphere to tube.  A rational generating function with
denominator (1-x)^4 is carried alongside; its coefficients agree with
the sequence at c_1 only, and the comparison is reported rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GenusTooSmall, NonPositive, NotExpandable, TooFewTangles

# Genus 2..21 reference values, verbatim.
REFERENCE_COUNTS = (
    12, 8, 16, 16, 32, 16, 48, 32, 48, 32,
    80, 32, 96, 48, 64, 64, 128, 48, 144, 64,
)

REFERENCE_FIRST_GENUS = 2


def euler_totient(n: int) -> int:
    """Count of integers in [1, n] coprime to n, by trial factorization."""
    if n < 1:
        raise NonPositive(f"totient needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def surface_count(genus: int) -> int:
    """Closed essential surfaces of a genus, for a 4-tangle Montesinos knot."""
    if genus < 2:
        raise GenusTooSmall(f"closed essential surfaces start at genus 2, got {genus}")
    if genus == 2:
        return 12
    return 8 * euler_totient(genus - 1)


def sc_curve_count(tangles: int) -> int:
    """Incompressible 4-punctured spheres from projection-plane curves."""
    if tangles <= 3:
        raise TooFewTangles(f"need more than 3 tangles, got {tangles}")
    return tangles * (tangles - 3) // 2


def spheres_for_genus(genus: int) -> int:
    """4-punctured spheres tubed together by a genus-g surface."""
    return genus - 1


def euler_char(spheres: int) -> int:
    """Euler characteristic of a union of 4-punctured spheres."""
    return -2 * spheres


@dataclass(frozen=True)
class KnotSpec:
    """A Montesinos knot given by its tangle slopes q_1..q_k."""

    slopes: tuple[int, ...]

    @property
    def tangles(self) -> int:
        return len(self.slopes)

    def counts_apply(self) -> bool:
        """Whether the 4-tangle surface count formula covers this knot."""
        return self.tangles == 4 and all(q >= 3 for q in self.slopes)


@dataclass(frozen=True)
class RationalGF:
    """Rational generating function, coefficient tuples ascending."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]


# Numerator/denominator of the count series; denominator is (1-x)^4.
COUNT_SERIES = RationalGF((0, 12, -10, 8, -2), (1, -4, 6, -4, 1))


def gf_expand(gf: RationalGF, terms: int) -> tuple[int, ...]:
    """First coefficients of the power series, by long division."""
    num, den = gf.numerator, gf.denominator
    if not den or den[0] == 0:
        raise NotExpandable("denominator has no constant term")
    coeffs: list[Fraction] = []
    for k in range(terms):
        acc = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * coeffs[k - j]
        coeffs.append(acc / den[0])
    out = []
    for c in coeffs:
        out.append(int(c) if c.denominator == 1 else c)
    return tuple(out)


@dataclass(frozen=True)
class CountRow:
    genus: int
    count: int
    reference: int | None
    doubled_enumeration: int | None
    series_coefficient: int
    matches_reference: bool | None
    matches_series: bool


@dataclass(frozen=True)
class CountReport:
    rows: tuple[CountRow, ...]

    def all_references_match(self) -> bool:
        return all(r.matches_reference for r in self.rows if r.matches_reference is not None)


def sequence_report(
    max_genus: int, enumerated: dict[int, int] | None = None
) -> CountReport:
    """Counts for g = 2..max_genus against every cross-check available.

    enumerated maps a genus to its brute-force connected diagram count;
    the doubled value (two sphere choices per diagram) sits next to the
    closed form when present.
    """
    if max_genus < 2:
        raise GenusTooSmall(f"report starts at genus 2, got {max_genus}")
    series = gf_expand(COUNT_SERIES, max_genus)
    rows = []
    for g in range(2, max_genus + 1):
        count = surface_count(g)
        idx = g - REFERENCE_FIRST_GENUS
        reference = REFERENCE_COUNTS[idx] if idx < len(REFERENCE_COUNTS) else None
        doubled = None
        if enumerated is not None and g in enumerated:
            doubled = 2 * enumerated[g]
        rows.append(
            CountRow(
                genus=g,
                count=count,
                reference=reference,
                doubled_enumeration=doubled,
                series_coefficient=series[g - 1],
                matches_reference=None if reference is None else count == reference,
                matches_series=count == series[g - 1],
            )
        )
    return CountReport(tuple(rows))
