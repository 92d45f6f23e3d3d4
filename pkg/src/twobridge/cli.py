"""Command line front end.

Subcommands: surfaces, invariants, obstruct, scan.  Human tables by
default; --json and --tsv for machine output.  Exit codes: 0 success,
2 parse/usage errors, 3 internal invariant violation (an emitted
certificate failing its own independent check).
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from .checker import check_payload
from .invariants import (boyer_lines_obstructs, delta2_at_1, invariant_summary,
                         niwu_filter, tau)
from .knots import (TwoBridgeKnot, canonical, enumerate_knots, is_amphicheiral,
                    mirror_knot, parse_knot)
from .obstruction import distinguish
from .slopes import is_meridian, make_slope, parse_slope
from .surfaces import descriptor_to_json, even_expansion, surface_table


def _surfaces_payload(k: TwoBridgeKnot) -> dict:
    spanning, extra = surface_table(k)
    nonor = [d for d in spanning if not d.orientable]
    genus_counts = {}
    for d in nonor:
        genus_counts[d.genus] = genus_counts.get(d.genus, 0) + 1
    return {
        "knot": str(canonical(k)),
        "even_expansion": list(even_expansion(k).entries),
        "spanning": [descriptor_to_json(d) for d in spanning],
        "two_boundary": [descriptor_to_json(d) for d in extra],
        "diagnostics": {
            "spanning_count": len(spanning),
            "nonorientable_spanning_count": len(nonor),
            "nonorientable_genus_counts": {str(g): c for g, c in sorted(genus_counts.items())},
            "nonorientable_slope_classes": len({d.boundary_slope for d in nonor}),
            "spanning_slope_classes": len({d.boundary_slope for d in spanning}),
            "two_boundary_count": len(extra),
        },
    }


def _print_surface_rows(rows, out):
    header = f"{'expansion':>22}  {'slope':>6}  {'chi':>4}  {'orient':>6}  {'bdry':>4}  {'genus':>5}"
    print(header, file=out)
    for d in rows:
        ent = "[" + ",".join(str(a) for a in d["expansion"]) + "]"
        print(f"{ent:>22}  {d['slope']:>6}  {d['chi']:>4}  "
              f"{str(d['orientable']).lower():>6}  {d['boundary_components']:>4}  {d['genus']:>5}",
              file=out)


def cmd_surfaces(args, out):
    k = parse_knot(args.knot)
    payload = _surfaces_payload(k)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    elif args.tsv:
        for d in payload["spanning"] + payload["two_boundary"]:
            ent = ",".join(str(a) for a in d["expansion"])
            print("\t".join([payload["knot"], ent, d["slope"], str(d["chi"]),
                             str(d["orientable"]).lower(), str(d["boundary_components"]),
                             str(d["genus"])]), file=out)
    else:
        diag = payload["diagnostics"]
        print(f"{payload['knot']}  even expansion {payload['even_expansion']}", file=out)
        print(f"spanning surfaces ({diag['spanning_count']}):", file=out)
        _print_surface_rows(payload["spanning"], out)
        if payload["two_boundary"]:
            print(f"two-boundary descriptors, diagnostics only ({diag['two_boundary_count']}):",
                  file=out)
            _print_surface_rows(payload["two_boundary"], out)
        print(f"non-orientable spanning: {diag['nonorientable_spanning_count']} "
              f"({diag['nonorientable_slope_classes']} slope classes); "
              f"genus counts {diag['nonorientable_genus_counts']}", file=out)
    return 0


def cmd_invariants(args, out):
    k = parse_knot(args.knot)
    payload = {"knot": str(canonical(k))}
    payload.update(invariant_summary(canonical(k)))
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    elif args.tsv:
        alex = ";".join(f"{e}:{c}" for e, c in payload["alexander"].items())
        print("\t".join([payload["knot"], alex, str(payload["delta2"]),
                         str(payload["det"]), str(payload["signature"]),
                         str(payload["tau"])]), file=out)
    else:
        from .invariants import alexander
        print(f"{payload['knot']}", file=out)
        print(f"  alexander  {alexander(canonical(k))}", file=out)
        for key in ("delta2", "det", "signature", "tau"):
            print(f"  {key:<9}  {payload[key]}", file=out)
    return 0


def _obstruct_payload(k, r1, r2):
    verdict = distinguish(k, r1, r2)
    payload = {
        "knot": str(canonical(k)),
        "r1": str(r1),
        "r2": str(r2),
        "filters": {
            "niwu": niwu_filter(k, r1, r2).to_json(),
            "boyer_lines_obstructs": boyer_lines_obstructs(k),
            "delta2": delta2_at_1(k),
            "tau": str(tau(k)),
        },
        "verdict": verdict.to_json(),
    }
    sp, ex = surface_table(k)
    payload["surfaces"] = {
        "spanning": [descriptor_to_json(d) for d in sp],
        "two_boundary": [descriptor_to_json(d) for d in ex],
    }
    return payload


def cmd_obstruct(args, out):
    k = parse_knot(args.knot)
    r1, r2 = parse_slope(args.r1), parse_slope(args.r2)
    if r1 == r2:
        raise UsageError(f"slopes must be distinct, got {r1} twice")
    if is_meridian(r1) or is_meridian(r2):
        raise UsageError("meridian surgery (1/0) is trivial and not accepted")
    payload = _obstruct_payload(k, r1, r2)
    problems = check_payload(payload) if args.verify else None
    if problems is not None:
        payload["verification"] = {"checked": True, "problems": problems}
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    else:
        f = payload["filters"]
        niwu = f["niwu"]
        print(f"{payload['knot']}  pair ({r1}, {r2})", file=out)
        print(f"  Ni-Wu: r1=-r2 {niwu['r1_equals_minus_r2']}, "
              f"q^2=-1 mod p {niwu['square_condition']}, tau=0 {niwu['tau_zero']} "
              f"-> pair {'survives' if niwu['survives'] else 'ruled out'}", file=out)
        print(f"  Boyer-Lines: delta2(1) = {f['delta2']} -> "
              f"{'already no cosmetic surgeries' if f['boyer_lines_obstructs'] else 'no obstruction'}",
              file=out)
        v = payload["verdict"]
        print(f"  {v['verdict'].upper()}: {v['reason']}", file=out)
        if v["upper_bound"]:
            ub = v["upper_bound"]
            print(f"  upper bound: base slope {ub['base_surface']['slope']} genus "
                  f"{ub['base_surface']['genus']}, +{ub['attachments']} Moebius -> genus "
                  f"{ub['resulting_genus']} in K({ub['target_slope']})", file=out)
        if v["exclusion"]:
            exc = v["exclusion"]
            print(f"  exclusion: no closed non-orientable surface of genus <= "
                  f"{exc['excluded_genus_max']} in K({exc['target_slope']}) "
                  f"({len(exc['rulings'])} candidates ruled out)", file=out)
        print(json.dumps(payload["verdict"], indent=2, sort_keys=True), file=out)
        if problems is not None:
            print(f"  verification: {'ok' if not problems else problems}", file=out)
    if problems:
        print("internal invariant violation: emitted certificate failed verification",
              file=sys.stderr)
        for p in problems:
            print(f"  {p}", file=sys.stderr)
        return 3
    return 0


def _candidate_pairs(max_num: int):
    """Slope pairs +-p'/q' with even p' <= max_num and q'^2 = -1 (mod p')."""
    pairs = []
    for p in range(2, max_num + 1, 2):
        for q in range(1, p):
            if math.gcd(p, q) == 1 and (q * q + 1) % p == 0:
                pairs.append((make_slope(p, q), make_slope(-p, q)))
    return pairs


def cmd_scan(args, out):
    knots = enumerate_knots(args.max_p)
    pairs = _candidate_pairs(args.max_slope_num)
    records = []
    n_distinguished = 0
    for k in knots:
        inv = invariant_summary(k)
        passes = (tau(k) == 0) and not boyer_lines_obstructs(k)
        record = {
            "knot": str(k),
            "p": k.p,
            "q": k.q,
            "mirror": str(canonical(mirror_knot(k))),
            "amphicheiral": is_amphicheiral(k),
            "invariants": inv,
            "filters_passed": passes,
            "pairs": [],
        }
        if passes:
            for r1, r2 in pairs:
                rep = niwu_filter(k, r1, r2)
                if not rep.survives:
                    continue
                verdict = distinguish(k, r1, r2)
                if verdict.distinguished:
                    n_distinguished += 1
                record["pairs"].append({
                    "r1": str(r1),
                    "r2": str(r2),
                    "niwu": rep.to_json(),
                    "verdict": verdict.to_json(),
                })
            if record["pairs"]:
                sp, ex = surface_table(k)
                record["surfaces"] = {
                    "spanning": [descriptor_to_json(d) for d in sp],
                    "two_boundary": [descriptor_to_json(d) for d in ex],
                }
        records.append(record)

    bad = 0
    if args.verify:
        for rec in records:
            for pair in rec["pairs"]:
                payload = {"surfaces": rec.get("surfaces", {}), "verdict": pair["verdict"]}
                problems = check_payload(payload)
                pair["verification"] = {"checked": True, "problems": problems}
                bad += len(problems)

    payload = {
        "max_p": args.max_p,
        "max_slope_num": args.max_slope_num,
        "knots": len(records),
        "survivors": sum(1 for r in records if r["filters_passed"]),
        "distinguished_pairs": n_distinguished,
        "records": records,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    elif args.tsv:
        for r in records:
            print("\t".join([r["knot"], str(r["invariants"]["det"]),
                             str(r["invariants"]["signature"]),
                             str(r["invariants"]["delta2"]),
                             str(len(r["pairs"])),
                             ";".join(f"{p['r1']}|{p['verdict']['verdict']}"
                                      for p in r["pairs"])]), file=out)
    else:
        for r in records:
            if not r["pairs"]:
                continue
            verdicts = ", ".join(f"({p['r1']}, {p['r2']}) {p['verdict']['verdict']}"
                                 for p in r["pairs"])
            print(f"{r['knot']:<12} sigma={r['invariants']['signature']:+d} "
                  f"delta2={r['invariants']['delta2']}  {verdicts}", file=out)
        print(f"scanned {payload['knots']} knots (p <= {args.max_p}); "
              f"{payload['survivors']} pass the knot-level filters; "
              f"{n_distinguished} distinguished pair(s)", file=out)
    if bad:
        print("internal invariant violation: scan certificates failed verification",
              file=sys.stderr)
        return 3
    return 0


class UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Spanning surfaces, classical invariants and cosmetic-surgery "
                    "obstructions for two-bridge knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p, tsv=True):
        p.add_argument("--json", action="store_true", help="machine-readable JSON output")
        if tsv:
            p.add_argument("--tsv", action="store_true", help="tab-separated output")

    p = sub.add_parser("surfaces", help="enumerate essential spanning surfaces")
    p.add_argument("knot", help="S(p,q), p/q or an alias such as 9_27")
    add_output_flags(p)
    p.set_defaults(func=cmd_surfaces)

    p = sub.add_parser("invariants", help="Alexander polynomial, signature, tau, ...")
    p.add_argument("knot")
    add_output_flags(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("obstruct", help="run the full obstruction pipeline on a slope pair")
    # let negative slopes like -10/3 parse as positionals, not option flags
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    p.add_argument("knot")
    p.add_argument("r1", help="first surgery slope, e.g. 10/3")
    p.add_argument("r2", help="second surgery slope, e.g. -10/3")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="re-check the emitted certificate with the independent checker")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("scan", help="scan all knots up to a Schubert bound")
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--max-slope-num", type=int, default=10,
                   help="largest (even) slope numerator to try (default 10)")
    p.add_argument("--verify", action="store_true")
    add_output_flags(p)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args, sys.stdout)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
