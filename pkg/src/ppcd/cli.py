"""Command line interface.

Exit codes: 0 on success, 1 when a verification check finds a mismatch,
2 for usage errors and invalid inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting
from . import diagram as dg
from . import dual_tree as dt
from . import enumeration
from . import structure
from . import superposition as sp
from . import tubing
from .errors import PpcdError

# Full verification above this genus needs an explicit --force.
VERIFY_BUDGET = 7


def _parse_genus_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 2 or hi < lo:
        raise ValueError(f"genus range must sit inside 2.., got {text!r}")
    return lo, hi


def _read_diagram(path: str) -> dg.Diagram:
    if path == "-":
        return dg.from_json(sys.stdin.read())
    with open(path) as handle:
        return dg.from_json(handle.read())


def cmd_count(args: argparse.Namespace) -> int:
    lo, hi = _parse_genus_range(args.genus)
    rows = [(g, counting.surface_count(g)) for g in range(lo, hi + 1)]
    if args.format == "json":
        print(json.dumps([{"g": g, "count": c} for g, c in rows]))
    else:
        print(f"{'genus':>5}  {'count':>6}")
        for g, c in rows:
            print(f"{g:>5}  {c:>6}")
    if args.report_dir:
        from . import plots

        report = counting.sequence_report(hi)
        kept = tuple(r for r in report.rows if lo <= r.genus <= hi)
        csv_path, png_path = plots.write_report(counting.CountReport(kept), args.report_dir)
        print(f"report: {csv_path}", file=sys.stderr)
        print(f"report: {png_path}", file=sys.stderr)
    return 0


GENUS_2_KEYS = tuple(
    dg.canonical_key(dg.validate(2, matching, gap))
    for matching, gaps in (
        (((0, 1), (2, 3)), (0, 1, 2)),
        (((0, 3), (1, 2)), (0, 1, 3)),
    )
    for gap in gaps
)


def _verify_genus_2(failures: list[str]) -> None:
    keys = sorted(dg.canonical_key(d) for d in enumeration.enumerate_wellformed(2))
    if keys == sorted(GENUS_2_KEYS):
        print("ok: genus 2: exhaustive scan gives the 6 known diagrams")
    else:
        failures.append("genus 2 exhaustive scan mismatch")
        for key in keys:
            print(f"FAIL witness: {key.decode()}")


def _verify_genus(genus: int, partitions: int, failures: list[str]) -> int:
    """Run every per-genus check; returns the connected diagram count."""
    connected = enumeration.enumerate_connected(genus, partitions)
    built = {
        dg.canonical_key(structure.build_structural(genus, locus.region, locus.offset))
        for locus in structure.valid_loci(genus, connected_only=True)
    }
    brute = {dg.canonical_key(d) for d in connected}
    witnesses = sorted(brute ^ built)
    if witnesses:
        failures.append(f"genus {genus}: brute force and structural sets differ")
        for key in witnesses:
            print(f"FAIL witness: {key.decode()}")
    else:
        print(
            f"ok: genus {genus}: {len(connected)} connected diagrams match"
            " the structural family"
        )

    expected_count = counting.surface_count(genus)
    if 2 * len(connected) != expected_count:
        failures.append(
            f"genus {genus}: doubled enumeration {2 * len(connected)}"
            f" != closed form {expected_count}"
        )

    bad = 0
    for d in connected:
        ok = structure.is_admissible(d)
        ok = ok and all(dg.chord_length(d, c) % 2 == 1 for c in d.matching)
        ok = ok and dt.leaf_count(dt.build_dual_tree(d)) == 3
        ok = ok and sum(k - 1 for k in tubing.component_genera(d)) == genus - 1
        if not ok:
            bad += 1
            failures.append(f"genus {genus}: invariants fail for {dg.canonical_key(d).decode()}")
    if not bad:
        print(f"ok: genus {genus}: shape, parity, leaf, and tubing invariants hold")

    for locus in structure.valid_loci(genus):
        d = structure.build_structural(genus, locus.region, locus.offset)
        counts = structure.chord_type_counts(genus, locus.imbalance)
        if counts.system_residuals(genus, locus.imbalance) != (0, 0, 0):
            failures.append(f"genus {genus}: nonzero residuals at {locus}")
        sizes = structure.class_sizes(d)
        expected_sizes = {
            structure.ChordType.PARALLEL_TO_MAX: genus - 1,
            structure.ChordType.PARALLEL_TO_NEAR: locus.near_size,
            structure.ChordType.PARALLEL_TO_FAR: locus.far_size,
        }
        if sizes != expected_sizes:
            failures.append(f"genus {genus}: class sizes {sizes} at {locus}")
    print(f"ok: genus {genus}: class sizes and residuals hold on all loci")
    return len(connected)


def _verify_superposition(genus: int, failures: list[str]) -> None:
    loci = structure.valid_loci(genus, connected_only=True)
    diagrams = [
        (locus, structure.build_structural(genus, locus.region, locus.offset))
        for locus in loci
    ]
    pairs = 0
    for l1, d1 in diagrams:
        for l2, d2 in diagrams:
            if l1.region == l2.region:
                continue
            pairs += 1
            s = sp.reduce_bigons(sp.superimpose(d1, d2))
            try:
                kinds = [f.kind for f in sp.classify_faces(s)]
            except PpcdError as exc:
                failures.append(f"genus {genus}: {l1} over {l2}: {exc}")
                continue
            if kinds.count(sp.FaceKind.TYPE_I) != 1:
                failures.append(f"genus {genus}: {l1} over {l2}: puncture region count")
            if kinds.count(sp.FaceKind.LENS) != 2:
                failures.append(f"genus {genus}: {l1} over {l2}: lens count")
    print(f"ok: genus {genus}: {pairs} superpositions classified")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_genus < 2:
        print("error: --max-genus must be at least 2", file=sys.stderr)
        return 2
    if args.max_genus > VERIFY_BUDGET and not args.force:
        print(
            f"error: genus {args.max_genus} exceeds the default budget"
            f" ({VERIFY_BUDGET}); pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    if args.partitions < 1:
        print("error: --partitions must be at least 1", file=sys.stderr)
        return 2

    failures: list[str] = []
    enumerated = {}
    _verify_genus_2(failures)
    enumerated[2] = 6
    for genus in range(3, args.max_genus + 1):
        enumerated[genus] = _verify_genus(genus, args.partitions, failures)
    if args.with_superposition:
        for genus in (3, 4):
            if genus <= args.max_genus:
                _verify_superposition(genus, failures)

    if args.report_dir:
        from . import plots

        report = counting.sequence_report(max(args.max_genus, 2), enumerated)
        csv_path, png_path = plots.write_report(report, args.report_dir)
        print(f"report: {csv_path}", file=sys.stderr)
        print(f"report: {png_path}", file=sys.stderr)

    if failures:
        for line in failures:
            print(f"FAIL: {line}")
        print(f"verify: {len(failures)} check(s) failed")
        return 1
    print("verify: all checks passed")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    d = structure.build_structural(args.genus, args.region, args.offset)
    print(dg.to_json(d))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.partitions < 1:
        print("error: --partitions must be at least 1", file=sys.stderr)
        return 2
    if args.connected_only:
        diagrams = enumeration.enumerate_connected(args.genus, args.partitions)
    else:
        diagrams = sorted(enumeration.enumerate_wellformed(args.genus), key=dg.canonical_key)
    for d in diagrams:
        print(dg.to_json(d))
    return 0


def cmd_dual_tree(args: argparse.Namespace) -> int:
    d = _read_diagram(args.input)
    tree = dt.build_dual_tree(d)
    if args.dot:
        print(dt.to_dot(tree))
    else:
        payload = {
            "root": tree.root,
            "vertices": list(tree.vertices),
            "edges": [[u, v, list(chord)] for u, v, chord in tree.edges],
        }
        print(json.dumps(payload, separators=(",", ": ")))
    return 0


def cmd_tubing(args: argparse.Namespace) -> int:
    d = _read_diagram(args.input)
    print(tubing.to_json(tubing.build_tubing(d, args.sc)))
    return 0


def cmd_superpose(args: argparse.Namespace) -> int:
    d1 = _read_diagram(args.a)
    d2 = _read_diagram(args.b)
    s = sp.reduce_bigons(sp.superimpose(d1, d2))
    if args.svg:
        with open(args.svg, "w") as handle:
            handle.write(sp.to_svg(s))
        print(f"svg: {args.svg}", file=sys.stderr)
    print(sp.face_report_json(s))
    return 0


def cmd_gf(args: argparse.Namespace) -> int:
    if args.terms < 1:
        print("error: --terms must be at least 1", file=sys.stderr)
        return 2
    coeffs = counting.gf_expand(counting.COUNT_SERIES, args.terms)
    print(f"{'k':>3}  {'coefficient':>12}  {'count':>6}  match")
    for k, c in enumerate(coeffs):
        if k == 0:
            count_text, match = "-", "-"
        else:
            count = counting.surface_count(k + 1)
            count_text = str(count)
            match = "yes" if count == c else "no"
        print(f"{k:>3}  {c:>12}  {count_text:>6}  {match}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppcd",
        description="Count and verify closed essential surfaces via chord diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form surface counts over a genus range")
    p.add_argument("--genus", required=True, help="single genus or range like 2..21")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--report-dir", help="also write counts.csv and counts.png here")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("verify", help="run the independent cross-checks")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--with-superposition", action="store_true")
    p.add_argument("--force", action="store_true", help="allow genus beyond the budget")
    p.add_argument("--report-dir", help="also write counts.csv and counts.png here")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("construct", help="build one structural diagram")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--region", type=int, required=True)
    p.add_argument("--offset", type=int, required=True)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("enumerate", help="list diagrams as JSON lines")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--partitions", type=int, default=1)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("dual-tree", help="dual tree of a diagram file")
    p.add_argument("--input", required=True, help="diagram JSON path, - for stdin")
    p.add_argument("--dot", action="store_true", help="emit Graphviz instead of JSON")
    p.set_defaults(handler=cmd_dual_tree)

    p = sub.add_parser("tubing", help="tubing description of a diagram file")
    p.add_argument("--input", required=True, help="diagram JSON path, - for stdin")
    p.add_argument("--sc", type=int, choices=(0, 1), required=True)
    p.set_defaults(handler=cmd_tubing)

    p = sub.add_parser("superpose", help="overlay two diagram files and classify faces")
    p.add_argument("--a", required=True, help="first diagram JSON path")
    p.add_argument("--b", required=True, help="second diagram JSON path")
    p.add_argument("--svg", help="also write a picture to this path")
    p.set_defaults(handler=cmd_superpose)

    p = sub.add_parser("gf", help="generating function coefficients vs the counts")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(handler=cmd_gf)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (PpcdError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
